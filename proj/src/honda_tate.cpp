#include "isoclass/honda_tate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace isoclass {

const char* to_string(WeilStatus s) {
    switch (s) {
    case WeilStatus::weil:
        return "weil";
    case WeilStatus::bad_shape:
        return "bad-shape";
    case WeilStatus::functional_equation_violation:
        return "functional-equation-violation";
    case WeilStatus::off_circle_roots:
        return "off-circle-roots";
    }
    return "?";
}

WeilStatus weil_status(const ZPoly& coeffs, u64 q) {
    prime_power_split(q);
    const int deg = zp_degree(coeffs);
    if (deg < 2 || deg % 2 != 0 || coeffs.back() != 1)
        return WeilStatus::bad_shape;
    auto H = trace_polynomial(coeffs, static_cast<unsigned long>(q));
    if (!H)
        return WeilStatus::functional_equation_violation;
    // All roots of H real...
    ZPoly Hsf = squarefree_part(*H);
    if (count_real_roots(Hsf) != zp_degree(Hsf))
        return WeilStatus::off_circle_roots;
    // ...and squared roots at most 4q (a root exactly at 4q is allowed: it is
    // the double point +-sqrt(q) on the circle).
    ZPoly G = root_square_transform(*H);
    ZPoly Gsf = squarefree_part(G);
    if (count_real_roots_above(Gsf, mpq_class(4 * static_cast<unsigned long>(q))) != 0)
        return WeilStatus::off_circle_roots;
    return WeilStatus::weil;
}

bool is_weil_polynomial(const ZPoly& coeffs, u64 q) {
    return weil_status(coeffs, q) == WeilStatus::weil;
}

std::vector<mpq_class> newton_polygon(const ZPoly& coeffs, u64 q) {
    auto [p, m] = prime_power_split(q);
    const int deg = zp_degree(coeffs);
    if (deg < 2 || deg % 2 != 0 || coeffs.back() != 1)
        throw std::invalid_argument("newton_polygon expects a monic polynomial of even degree");
    if (coeffs[0] == 0)
        throw std::invalid_argument("newton_polygon expects a nonzero constant term");

    // Finite valuation points (i, v_p(c_{2g-i})/m).
    std::vector<std::pair<long, mpq_class>> pts;
    mpz_class pz(static_cast<unsigned long>(p));
    for (int i = 0; i <= deg; ++i) {
        const mpz_class& c = coeffs[deg - i];
        if (c == 0)
            continue;
        mpz_class dump;
        unsigned long v = mpz_remove(dump.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
        mpq_class val(v, m);
        val.canonicalize();
        pts.emplace_back(i, val);
    }

    // Lower convex hull, left to right (x strictly increasing already).
    std::vector<std::pair<long, mpq_class>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b only if it lies strictly below segment a-pt
            mpq_class lhs = (b.second - a.second) * (pt.first - a.first);
            mpq_class rhs = (pt.second - a.second) * (b.first - a.first);
            if (lhs < rhs)
                break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }

    std::vector<mpq_class> slopes;
    slopes.reserve(deg);
    for (size_t i = 1; i < hull.size(); ++i) {
        mpq_class s = (hull[i].second - hull[i - 1].second) / (hull[i].first - hull[i - 1].first);
        s.canonicalize();
        for (long r = 0; r < hull[i].first - hull[i - 1].first; ++r)
            slopes.push_back(s);
    }
    return slopes;
}

WeilPolynomialRecord make_weil_record(const ZPoly& coeffs, u64 q) {
    WeilStatus st = weil_status(coeffs, q);
    if (st != WeilStatus::weil)
        throw std::invalid_argument(std::string("not a Weil polynomial: ") + to_string(st));
    WeilPolynomialRecord r;
    r.g = static_cast<unsigned>(zp_degree(coeffs) / 2);
    r.q = q;
    r.coeffs = coeffs;
    r.newton_slopes = newton_polygon(coeffs, q);
    auto [p, m] = prime_power_split(q);
    (void)m;
    r.ordinary = !mpz_divisible_ui_p(coeffs[r.g].get_mpz_t(), static_cast<unsigned long>(p));
    return r;
}

namespace {

std::vector<WeilPolynomialRecord> enumerate_range(unsigned g, u64 q, bool ordinary_only,
                                                  i64 a1_lo, i64 a1_hi) {
    std::vector<WeilPolynomialRecord> out;
    const i64 b2 = 6 * static_cast<i64>(q);
    for (i64 a1 = a1_lo; a1 <= a1_hi; ++a1) {
        if (g == 1) {
            ZPoly f{mpz_class(static_cast<unsigned long>(q)), mpz_class(-a1), 1};
            if (is_weil_polynomial(f, q)) {
                auto rec = make_weil_record(f, q);
                if (!ordinary_only || rec.ordinary)
                    out.push_back(std::move(rec));
            }
            continue;
        }
        for (i64 a2 = -b2; a2 <= b2; ++a2) {
            ZPoly f{mpz_class(static_cast<unsigned long>(q)) * static_cast<unsigned long>(q),
                    mpz_class(a1) * static_cast<long>(q), mpz_class(a2), mpz_class(a1), 1};
            if (!is_weil_polynomial(f, q))
                continue;
            auto rec = make_weil_record(f, q);
            if (!ordinary_only || rec.ordinary)
                out.push_back(std::move(rec));
        }
    }
    return out;
}

} // namespace

std::vector<WeilPolynomialRecord> enumerate_weil_polynomials(unsigned g, u64 q, bool ordinary_only,
                                                             unsigned workers) {
    prime_power_split(q);
    if (g < 1 || g > 2)
        throw std::invalid_argument("census supports g = 1 and g = 2 only");
    const i64 bound = static_cast<i64>(isqrt(4 * g * g * q)); // floor(2g sqrt q)
    if (workers == 0)
        workers = 1;
    u64 span = static_cast<u64>(2 * bound + 1);
    workers = static_cast<unsigned>(std::min<u64>(workers, span));

    std::vector<std::vector<WeilPolynomialRecord>> parts(workers);
    auto run = [&](unsigned w) {
        i64 lo = -bound + static_cast<i64>(span * w / workers);
        i64 hi = -bound + static_cast<i64>(span * (w + 1) / workers) - 1;
        parts[w] = enumerate_range(g, q, ordinary_only, lo, hi);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
        for (auto& t : pool)
            t.join();
    }
    std::vector<WeilPolynomialRecord> out;
    for (auto& p : parts)
        for (auto& r : p)
            out.push_back(std::move(r));
    return out;
}

CensusScaling census_scaling(unsigned g, const std::vector<u64>& q_list, unsigned workers) {
    if (q_list.size() < 3)
        throw std::invalid_argument("census scaling needs at least 3 points");
    CensusScaling cs;
    cs.g = g;
    for (u64 q : q_list) {
        auto all = enumerate_weil_polynomials(g, q, false, workers);
        u64 ord = 0;
        for (const auto& r : all)
            ord += r.ordinary ? 1 : 0;
        cs.points.push_back(CensusPoint{q, all.size(), ord});
    }
    auto fit = [&](bool ordinary) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double n = static_cast<double>(cs.points.size());
        for (const auto& pt : cs.points) {
            double x = std::log(static_cast<double>(pt.q));
            double y = std::log(static_cast<double>(ordinary ? pt.ordinary : pt.total));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    cs.slope_total = fit(false);
    cs.slope_ordinary = fit(true);
    cs.target = g * (g + 1) / 4.0;
    return cs;
}

} // namespace isoclass
