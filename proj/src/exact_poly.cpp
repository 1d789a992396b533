#include "isoclass/exact_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace isoclass {

void zp_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

int zp_degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

bool zp_is_zero(const ZPoly& f) { return f.empty(); }

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    zp_trim(r);
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    zp_trim(r);
    return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

ZPoly zp_neg(ZPoly f) {
    for (auto& c : f)
        c = -c;
    return f;
}

ZPoly zp_derivative(const ZPoly& f) {
    if (f.size() <= 1)
        return {};
    ZPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i)
        r[i - 1] = f[i] * static_cast<long>(i);
    zp_trim(r);
    return r;
}

mpz_class zp_eval(const ZPoly& f, const mpz_class& x) {
    mpz_class v = 0;
    for (size_t i = f.size(); i-- > 0;)
        v = v * x + f[i];
    return v;
}

QPoly to_qpoly(const ZPoly& f) {
    QPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        r[i] = mpq_class(f[i]);
    return r;
}

namespace {

void q_trim(QPoly& f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

mpq_class q_eval(const QPoly& f, const mpq_class& x) {
    mpq_class v = 0;
    for (size_t i = f.size(); i-- > 0;)
        v = v * x + f[i];
    return v;
}

// Remainder of a modulo b over Q.
QPoly q_rem(QPoly a, const QPoly& b) {
    q_trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        mpq_class c = a.back() / b.back();
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (int j = 0; j <= db; ++j)
            a[shift + j] -= c * b[j];
        a.pop_back();
        q_trim(a);
        if (a.empty())
            break;
    }
    return a;
}

QPoly q_gcd(QPoly a, QPoly b) {
    q_trim(a);
    q_trim(b);
    while (!b.empty()) {
        QPoly r = q_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) { // make monic
        mpq_class lead = a.back();
        for (auto& c : a)
            c /= lead;
    }
    return a;
}

int sign_at_pos_infinity(const QPoly& f) { return sgn(f.back()); }

int sign_at_neg_infinity(const QPoly& f) {
    int s = sgn(f.back());
    return (f.size() - 1) % 2 == 0 ? s : -s;
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

int variations_at(const std::vector<QPoly>& chain, const mpq_class& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& f : chain)
        signs.push_back(sgn(q_eval(f, x)));
    return variations(signs);
}

int variations_at_infinity(const std::vector<QPoly>& chain, bool positive) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& f : chain)
        signs.push_back(positive ? sign_at_pos_infinity(f) : sign_at_neg_infinity(f));
    return variations(signs);
}

} // namespace

ZPoly primitive_part(const QPoly& f) {
    if (f.empty())
        return {};
    mpz_class den = 1;
    for (const auto& c : f)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        mpq_class scaled = f[i] * den;
        z[i] = scaled.get_num();
    }
    mpz_class content = 0;
    for (const auto& c : z)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content != 0)
        for (auto& c : z)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    if (!z.empty() && z.back() < 0)
        for (auto& c : z)
            c = -c;
    return z;
}

ZPoly squarefree_part(const ZPoly& f) {
    if (zp_degree(f) <= 0)
        return f;
    QPoly g = q_gcd(to_qpoly(f), to_qpoly(zp_derivative(f)));
    if (g.size() <= 1)
        return primitive_part(to_qpoly(f));
    // Divide f by gcd over Q, exactly.
    QPoly num = to_qpoly(f);
    QPoly quot(num.size() - g.size() + 1, 0);
    while (static_cast<int>(num.size()) >= static_cast<int>(g.size())) {
        mpq_class c = num.back() / g.back();
        int shift = static_cast<int>(num.size()) - static_cast<int>(g.size());
        quot[shift] = c;
        for (size_t j = 0; j < g.size(); ++j)
            num[shift + j] -= c * g[j];
        q_trim(num);
        if (num.empty())
            break;
    }
    return primitive_part(quot);
}

mpz_class resultant(const ZPoly& f, const ZPoly& g) {
    const int m = zp_degree(f), n = zp_degree(g);
    if (m < 0 || n < 0)
        return 0;
    if (m == 0 && n == 0)
        return 1;
    const int N = m + n;
    std::vector<std::vector<mpz_class>> M(N, std::vector<mpz_class>(N, 0));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j)
            M[r][r + j] = f[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j)
            M[n + r][r + j] = g[n - j];

    // Bareiss fraction-free elimination.
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < N; ++i)
                if (M[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                return 0;
            std::swap(M[k], M[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                mpz_class t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[N - 1][N - 1] : mpz_class(-M[N - 1][N - 1]);
}

mpz_class discriminant(const ZPoly& f) {
    const int d = zp_degree(f);
    if (d < 1)
        throw std::invalid_argument("discriminant needs degree >= 1");
    if (d == 1)
        return 1;
    mpz_class res = resultant(f, zp_derivative(f));
    mpz_class disc;
    mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), f.back().get_mpz_t());
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0)
        disc = -disc;
    return disc;
}

std::vector<QPoly> sturm_chain(const QPoly& f) {
    std::vector<QPoly> chain;
    QPoly cur = f;
    q_trim(cur);
    if (cur.empty())
        return chain;
    chain.push_back(cur);
    if (cur.size() == 1)
        return chain;
    QPoly d(cur.size() - 1);
    for (size_t i = 1; i < cur.size(); ++i)
        d[i - 1] = cur[i] * static_cast<long>(i);
    q_trim(d);
    chain.push_back(d);
    while (chain.back().size() > 0) {
        QPoly r = q_rem(chain[chain.size() - 2], chain.back());
        if (r.empty())
            break;
        for (auto& c : r)
            c = -c;
        chain.push_back(std::move(r));
        if (chain.back().size() == 1)
            break;
    }
    return chain;
}

int count_real_roots(const ZPoly& squarefree) {
    if (zp_degree(squarefree) <= 0)
        return 0;
    auto chain = sturm_chain(to_qpoly(squarefree));
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

int count_real_roots_above(const ZPoly& squarefree, const mpq_class& a) {
    if (zp_degree(squarefree) <= 0)
        return 0;
    auto chain = sturm_chain(to_qpoly(squarefree));
    return variations_at(chain, a) - variations_at_infinity(chain, true);
}

std::vector<mpz_class> power_sums(const ZPoly& monic, int count) {
    const int d = zp_degree(monic);
    if (d < 1 || monic.back() != 1)
        throw std::invalid_argument("power_sums requires a monic polynomial of degree >= 1");
    // e_i = (-1)^i c_{d-i}
    std::vector<mpz_class> e(d + 1);
    e[0] = 1;
    for (int i = 1; i <= d; ++i)
        e[i] = (i % 2 == 0) ? monic[d - i] : mpz_class(-monic[d - i]);
    std::vector<mpz_class> p(count + 1);
    p[0] = d;
    for (int k = 1; k <= count; ++k) {
        // p_k = sum_{i=1}^{min(k,d)} (-1)^{i-1} e_i p_{k-i}, with the k = i term
        // contributing (-1)^{k-1} k e_k.
        mpz_class s = 0;
        int top = std::min(k, d);
        for (int i = 1; i <= top; ++i) {
            mpz_class term = (i == k) ? mpz_class(e[i] * k) : mpz_class(e[i] * p[k - i]);
            if (i % 2 == 0)
                s -= term;
            else
                s += term;
        }
        p[k] = s;
    }
    return std::vector<mpz_class>(p.begin() + 1, p.end());
}

ZPoly poly_from_power_sums(const std::vector<mpz_class>& p, int d) {
    if (static_cast<int>(p.size()) < d)
        throw std::invalid_argument("need d power sums");
    std::vector<mpz_class> e(d + 1);
    e[0] = 1;
    for (int k = 1; k <= d; ++k) {
        mpz_class s = 0;
        for (int i = 1; i <= k; ++i) {
            mpz_class term = e[k - i] * p[i - 1];
            if (i % 2 == 0)
                s -= term;
            else
                s += term;
        }
        if (!mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(k)))
            throw std::domain_error("power sums do not define an integer polynomial");
        mpz_divexact_ui(e[k].get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(k));
    }
    ZPoly f(d + 1);
    f[d] = 1;
    for (int i = 1; i <= d; ++i)
        f[d - i] = (i % 2 == 0) ? e[i] : mpz_class(-e[i]);
    return f;
}

ZPoly char_poly_of_power(const ZPoly& monic, unsigned n) {
    const int d = zp_degree(monic);
    if (d < 1 || monic.back() != 1)
        throw std::invalid_argument("char_poly_of_power requires a monic polynomial");
    if (n == 0)
        throw std::invalid_argument("power must be positive");
    auto p = power_sums(monic, static_cast<int>(n) * d);
    std::vector<mpz_class> pn(d);
    for (int j = 1; j <= d; ++j)
        pn[j - 1] = p[static_cast<size_t>(n) * j - 1];
    return poly_from_power_sums(pn, d);
}

std::optional<ZPoly> trace_polynomial(const ZPoly& P, const mpz_class& Q) {
    const int deg = zp_degree(P);
    if (deg < 2 || deg % 2 != 0 || P.back() != 1)
        return std::nullopt;
    const int g = deg / 2;
    ZPoly x2q{Q, 0, 1}; // x^2 + Q
    ZPoly rem = P;
    ZPoly H(g + 1, 0);
    for (int j = 0; j <= g; ++j) {
        mpz_class hj = (zp_degree(rem) == 2 * g - j) ? rem[2 * g - j] : mpz_class(0);
        H[g - j] = hj;
        if (hj != 0) {
            ZPoly term(j + 1, 0);
            term[j] = hj; // h_j x^j
            for (int i = 0; i < g - j; ++i)
                term = zp_mul(term, x2q);
            rem = zp_sub(rem, term);
        }
    }
    if (!zp_is_zero(rem))
        return std::nullopt;
    return H;
}

ZPoly root_square_transform(const ZPoly& H) {
    // Split H(x) = E(x^2) + x O(x^2); then H(x)H(-x) = E(x^2)^2 - x^2 O(x^2)^2,
    // so G(y) = E(y)^2 - y O(y)^2 has the squared roots (up to sign of lc).
    ZPoly E, O;
    for (size_t i = 0; i < H.size(); ++i) {
        if (i % 2 == 0)
            E.push_back(H[i]);
        else
            O.push_back(H[i]);
    }
    zp_trim(E);
    zp_trim(O);
    ZPoly G = zp_sub(zp_mul(E, E), zp_mul(ZPoly{0, 1}, zp_mul(O, O)));
    zp_trim(G);
    return G;
}

ZPoly zp_gcd(const ZPoly& a, const ZPoly& b) {
    return primitive_part(q_gcd(to_qpoly(a), to_qpoly(b)));
}

std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const ZPoly& squarefree) {
    std::vector<std::pair<mpq_class, mpq_class>> out;
    const int deg = zp_degree(squarefree);
    if (deg <= 0)
        return out;
    const QPoly f = to_qpoly(squarefree);
    const auto chain = sturm_chain(f);

    // Cauchy bound: every root has absolute value < 1 + max |c_i| / |lc|.
    mpq_class bound = 0;
    for (int i = 0; i < deg; ++i) {
        mpq_class r = abs(mpq_class(squarefree[i]) / squarefree[deg]);
        if (r > bound)
            bound = r;
    }
    bound += 1;

    // Bisect half-open intervals (lo, hi]; Sturm variation differences count
    // the roots inside, so splitting is exact. A root landing exactly on a
    // midpoint is emitted as a degenerate (r, r) interval.
    struct Seg {
        mpq_class lo, hi;
        int count;
    };
    std::vector<Seg> work;
    {
        int total = variations_at(chain, -bound) - variations_at(chain, bound);
        if (total > 0)
            work.push_back({-bound, bound, total});
    }
    while (!work.empty()) {
        Seg s = std::move(work.back());
        work.pop_back();
        if (s.count == 1) {
            // Shrink until f is nonzero on the open part or the root is hit.
            if (q_eval(f, s.hi) == 0) {
                out.emplace_back(s.hi, s.hi);
                continue;
            }
            out.emplace_back(std::move(s.lo), std::move(s.hi));
            continue;
        }
        mpq_class mid = (s.lo + s.hi) / 2;
        int left = variations_at(chain, s.lo) - variations_at(chain, mid);
        int right = s.count - left;
        if (right > 0)
            work.push_back({mid, s.hi, right});
        if (left > 0)
            work.push_back({s.lo, mid, left});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

} // namespace isoclass
