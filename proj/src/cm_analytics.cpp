#include "isoclass/cm_analytics.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

namespace isoclass {

namespace {

constexpr u128 kHalf = u128(1) << 127;

/// Movable RAII wrapper around a single mpfr value.
class Real {
  public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    Real(Real&& other) noexcept {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_swap(v_, other.v_);
    }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    Real& operator=(Real&&) = delete;
    ~Real() { mpfr_clear(v_); }
    operator mpfr_ptr() { return v_; }
    operator mpfr_srcptr() const { return v_; }
    // for mpfr interfaces that are macros and bypass the conversions
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

  private:
    mpfr_t v_;
};

mpfr_prec_t bits_for_digits(unsigned digits) {
    return 64 + static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623));
}

void poly_eval_mpfr(mpfr_ptr out, const ZPoly& f, mpfr_srcptr x) {
    mpfr_set_ui(out, 0, MPFR_RNDN);
    for (size_t i = f.size(); i-- > 0;) {
        mpfr_mul(out, out, x, MPFR_RNDN);
        mpfr_add_z(out, out, f[i].get_mpz_t(), MPFR_RNDN);
    }
}

int sign_at(const ZPoly& f, const mpq_class& x) {
    mpq_class v = 0;
    for (size_t i = f.size(); i-- > 0;)
        v = v * x + f[i];
    return sgn(v);
}

/// Narrows the single simple root of f inside (lo, hi] down to `prec` bits.
/// A degenerate interval (r, r) marks an exact rational root.
void refine_root(mpfr_ptr out, const ZPoly& f, mpq_class lo, mpq_class hi, mpfr_prec_t prec) {
    if (lo == hi) {
        mpfr_set_q(out, lo.get_mpq_t(), MPFR_RNDN);
        return;
    }
    const int shi = sign_at(f, hi); // nonzero: the isolator emits roots at hi as (r, r)
    int slo = sign_at(f, lo);
    while (slo == 0) {
        // lo sits on a neighboring root; probe just right of it. The root in
        // (lo, hi) is strictly above lo, so this terminates.
        mpq_class probe = lo + (hi - lo) / 1024;
        int sp = sign_at(f, probe);
        if (sp == 0) {
            mpfr_set_q(out, probe.get_mpq_t(), MPFR_RNDN);
            return;
        }
        if (sp == shi)
            hi = probe;
        else {
            lo = probe;
            slo = sp;
        }
    }
    Real a(prec + 32), b(prec + 32), mid(prec + 32), val(prec + 32);
    mpfr_set_q(a, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(b, hi.get_mpq_t(), MPFR_RNDU);
    for (long it = 0; it < static_cast<long>(prec) + 64; ++it) {
        mpfr_add(mid, a, b, MPFR_RNDN);
        mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
        if (mpfr_equal_p(mid, a) || mpfr_equal_p(mid, b))
            break;
        poly_eval_mpfr(val, f, mid);
        const int sm = mpfr_sgn(val.get());
        if (sm == 0) {
            mpfr_set(a.get(), mid.get(), MPFR_RNDN);
            mpfr_set(b.get(), mid.get(), MPFR_RNDN);
            break;
        }
        if (sm == slo)
            mpfr_set(a.get(), mid.get(), MPFR_RNDN);
        else
            mpfr_set(b.get(), mid.get(), MPFR_RNDN);
    }
    mpfr_add(out, a, b, MPFR_RNDN);
    mpfr_div_2ui(out, out, 1, MPFR_RNDN);
}

std::string format_real(mpfr_srcptr x, unsigned digits) {
    std::vector<char> buf(digits + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits) - 1, x);
    return std::string(buf.data());
}

u128 to_u128(const mpz_class& z) {
    mpz_class hi = z >> 64;
    mpz_class lo = z - (hi << 64);
    return (u128(hi.get_ui()) << 64) | u128(lo.get_ui());
}

/// floor(2^128 * x) for x in [0, 1/2]; clamps tiny negative rounding noise.
u128 frac_bits(mpfr_srcptr x, mpfr_prec_t prec) {
    Real t(prec);
    mpfr_mul_2ui(t, x, 128, MPFR_RNDN);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDD);
    if (z < 0)
        z = 0;
    return to_u128(z);
}

double unit_from_bits(u128 v) {
    return std::ldexp(static_cast<double>(static_cast<u64>(v >> 64)), -64) +
           std::ldexp(static_cast<double>(static_cast<u64>(v)), -128);
}

void set_from_u128(mpfr_ptr out, u128 v) {
    mpfr_set_uj(out, static_cast<std::uintmax_t>(static_cast<u64>(v >> 64)), MPFR_RNDN);
    mpfr_mul_2ui(out, out, 64, MPFR_RNDN);
    mpfr_add_ui(out, out, static_cast<unsigned long>(static_cast<u64>(v)), MPFR_RNDN);
    mpfr_div_2ui(out, out, 128, MPFR_RNDN);
}

/// Number of roots of a squarefree polynomial in the half-open interval (lo, hi].
int roots_in_interval(const ZPoly& squarefree, const mpq_class& lo, const mpq_class& hi) {
    return count_real_roots_above(squarefree, lo) - count_real_roots_above(squarefree, hi);
}

} // namespace

WeilRootProfile weil_root_profile(const WeilPolynomialRecord& record, unsigned precision_digits) {
    if (precision_digits < 10 || precision_digits > 4000)
        throw std::invalid_argument("precision_digits out of range [10, 4000]");
    if (weil_status(record.coeffs, record.q) != WeilStatus::weil)
        throw std::invalid_argument("record polynomial is not a Weil polynomial");

    const unsigned g = record.g;
    const mpfr_prec_t prec = bits_for_digits(precision_digits);

    WeilRootProfile prof;
    prof.record = record;
    prof.precision_digits = precision_digits;
    prof.degenerate = false;
    prof.degenerate_reason.clear();

    const ZPoly H = *trace_polynomial(record.coeffs, mpz_class(record.q));
    const ZPoly Hsf = squarefree_part(H);
    if (zp_degree(Hsf) < zp_degree(H)) {
        prof.degenerate = true;
        prof.degenerate_reason = "repeated-root";
    }

    // theta_j is a rational multiple of pi exactly when cos^2 theta_j =
    // beta_j^2 / 4q lies in {0, 1/4, 1/2, 3/4, 1}; test beta_j^2 = m*q for
    // m = 0..4 against the squared-root transform of the trace polynomial.
    {
        const ZPoly G = root_square_transform(Hsf);
        for (unsigned m = 0; m <= 4 && !prof.degenerate; ++m) {
            if (zp_eval(G, mpz_class(record.q) * m) == 0) {
                prof.degenerate = true;
                prof.degenerate_reason = "rational-angle";
            }
        }
    }

    const auto intervals = isolate_real_roots(Hsf);
    if (static_cast<int>(intervals.size()) != zp_degree(Hsf))
        throw std::logic_error("trace polynomial of a Weil polynomial must be real-rooted");

    // Multiplicity layers: roots of gcd(H, H') have multiplicity >= 2 in H,
    // roots of the next gcd have multiplicity >= 3, and so on.
    std::vector<ZPoly> layers;
    {
        ZPoly d = H;
        while (zp_degree(d) >= 1) {
            d = zp_gcd(d, zp_derivative(d));
            if (zp_degree(d) >= 1)
                layers.push_back(d);
            else
                break;
        }
    }

    Real tau(prec);
    mpfr_const_pi(tau, MPFR_RNDN);
    mpfr_mul_2ui(tau, tau, 1, MPFR_RNDN);
    Real two_sqrt_q(prec);
    mpfr_sqrt_ui(two_sqrt_q, record.q, MPFR_RNDN);
    mpfr_mul_2ui(two_sqrt_q, two_sqrt_q, 1, MPFR_RNDN);

    unsigned mult_total = 0;
    // Roots ascend in beta; theta = acos(beta / 2 sqrt q) descends, so walk
    // the intervals in reverse to emit ascending angles.
    for (size_t idx = intervals.size(); idx-- > 0;) {
        const auto& [lo, hi] = intervals[idx];
        unsigned mult = 1;
        for (size_t k = 0; k < layers.size(); ++k) {
            bool vanishes;
            if (lo == hi)
                vanishes = sign_at(layers[k], lo) == 0;
            else
                vanishes = roots_in_interval(squarefree_part(layers[k]), lo, hi) == 1;
            if (vanishes)
                mult = static_cast<unsigned>(k) + 2;
            else
                break;
        }
        mult_total += mult;

        Real beta(prec);
        refine_root(beta, Hsf, lo, hi, prec);

        Real x(prec);
        mpfr_div(x, beta, two_sqrt_q, MPFR_RNDN);
        if (mpfr_cmp_si(x, 1) > 0)
            mpfr_set_si(x, 1, MPFR_RNDN);
        if (mpfr_cmp_si(x, -1) < 0)
            mpfr_set_si(x, -1, MPFR_RNDN);
        Real theta(prec);
        mpfr_acos(theta, x, MPFR_RNDN);

        Real re(prec), im(prec), s(prec);
        mpfr_div_2ui(re, beta, 1, MPFR_RNDN);
        mpfr_sin(s, theta, MPFR_RNDN);
        mpfr_sqrt_ui(im, record.q, MPFR_RNDN);
        mpfr_mul(im, im, s, MPFR_RNDN);

        Real fr(prec);
        mpfr_div(fr, theta, tau, MPFR_RNDN);

        prof.angles.push_back(mpfr_get_d(theta, MPFR_RNDN));
        prof.angle_str.push_back(format_real(theta, precision_digits));
        prof.root_re.push_back(format_real(re, precision_digits));
        prof.root_im.push_back(format_real(im, precision_digits));
        prof.angle_frac.push_back(frac_bits(fr, prec));
        prof.multiplicity.push_back(mult);
    }
    if (mult_total != g)
        throw std::logic_error("root multiplicities do not sum to the genus");
    return prof;
}

double positivity_density(const WeilRootProfile& profile, u64 n_max, unsigned workers) {
    if (n_max < 10000)
        throw std::invalid_argument("positivity density needs n_max >= 10^4");
    if (workers == 0)
        workers = 1;

    std::vector<u128> fr;
    for (size_t i = 0; i < profile.angle_frac.size(); ++i)
        for (unsigned m = 0; m < profile.multiplicity[i]; ++m)
            fr.push_back(profile.angle_frac[i]);
    const size_t g = fr.size();
    if (g == 0)
        throw std::invalid_argument("profile has no angles");

    auto count_range = [&fr, g](u64 lo, u64 hi) -> u64 {
        std::vector<u128> cur(g);
        for (size_t j = 0; j < g; ++j)
            cur[j] = fr[j] * static_cast<u128>(lo);
        std::vector<double> cosv(g);
        std::vector<int> sins(g);
        u64 count = 0;
        for (u64 n = lo; n < hi; ++n) {
            bool ok = true;
            for (size_t j = 0; j < g; ++j) {
                const u128 v = cur[j];
                if (v == 0 || v == kHalf) { // sin(n theta) = 0, exactly
                    ok = false;
                    break;
                }
                sins[j] = v < kHalf ? 1 : -1;
                cosv[j] = std::cos(2.0 * M_PI * unit_from_bits(v));
            }
            if (ok) {
                for (size_t j = 0; j < g && ok; ++j) {
                    double prod = 1.0;
                    for (size_t k = 0; k < g; ++k)
                        if (k != j)
                            prod *= cosv[j] - cosv[k];
                    ok = sins[j] > 0 ? prod > 0.0 : prod < 0.0;
                }
                if (ok)
                    ++count;
            }
            for (size_t j = 0; j < g; ++j)
                cur[j] += fr[j];
        }
        return count;
    };

    const u64 span = n_max;
    if (workers == 1 || span < 4 * workers)
        return static_cast<double>(count_range(1, n_max + 1)) / static_cast<double>(n_max);

    const u64 chunk = (span + workers - 1) / workers;
    std::vector<u64> partial(workers, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const u64 lo = 1 + static_cast<u64>(w) * chunk;
        const u64 hi = std::min<u64>(lo + chunk, n_max + 1);
        if (lo > n_max)
            break;
        pool.emplace_back([&partial, &count_range, w, lo, hi] { partial[w] = count_range(lo, hi); });
    }
    for (auto& t : pool)
        t.join();
    u64 total = 0;
    for (u64 c : partial)
        total += c;
    return static_cast<double>(total) / static_cast<double>(n_max);
}

IndependenceVerdict multiplicative_independence_heuristic(const WeilRootProfile& profile,
                                                          long coefficient_bound,
                                                          double tolerance) {
    if (coefficient_bound < 1)
        throw std::invalid_argument("coefficient bound must be >= 1");
    if (!(tolerance > 0))
        throw std::invalid_argument("tolerance must be positive");
    const size_t d = profile.angle_frac.size();
    const double combos =
        std::pow(2.0 * static_cast<double>(coefficient_bound) + 1.0, static_cast<double>(d) + 1.0);
    if (combos > 1e8)
        throw std::invalid_argument("scan box too large");

    const mpfr_prec_t prec = 256;
    Real tau(prec);
    mpfr_const_pi(tau, MPFR_RNDN);
    mpfr_mul_2ui(tau, tau, 1, MPFR_RNDN);
    std::vector<Real> theta;
    theta.reserve(d);
    for (size_t j = 0; j < d; ++j) {
        Real t(prec);
        set_from_u128(t, profile.angle_frac[j]);
        mpfr_mul(t, t, tau, MPFR_RNDN);
        theta.push_back(std::move(t));
    }

    IndependenceVerdict verdict;
    verdict.independent = true;
    verdict.value = std::numeric_limits<double>::infinity();
    verdict.coefficient_bound = coefficient_bound;
    verdict.tolerance = tolerance;

    std::vector<long> m(d + 1, -coefficient_bound);
    Real val(prec), term(prec);
    for (;;) {
        bool all_zero = true;
        for (long c : m)
            if (c != 0) {
                all_zero = false;
                break;
            }
        if (!all_zero) {
            mpfr_mul_si(val, tau, m[0], MPFR_RNDN);
            for (size_t j = 0; j < d; ++j) {
                mpfr_mul_si(term, theta[j], m[j + 1], MPFR_RNDN);
                mpfr_add(val, val, term, MPFR_RNDN);
            }
            mpfr_abs(val, val, MPFR_RNDN);
            const double av = mpfr_get_d(val, MPFR_RNDN);
            if (av < verdict.value)
                verdict.value = av;
            if (mpfr_cmp_d(val, tolerance) < 0) {
                verdict.independent = false;
                verdict.witness = m;
                verdict.value = av;
                return verdict;
            }
        }
        // odometer increment, lexicographic from the left
        size_t pos = d + 1;
        while (pos-- > 0) {
            if (m[pos] < coefficient_bound) {
                ++m[pos];
                for (size_t r = pos + 1; r <= d; ++r)
                    m[r] = -coefficient_bound;
                break;
            }
            if (pos == 0)
                return verdict;
        }
    }
}

DiscriminantReport discriminant_report(const WeilPolynomialRecord& record, unsigned n) {
    if (n == 0)
        throw std::invalid_argument("n must be >= 1");
    if (!record.ordinary)
        throw std::domain_error("discriminant report requires an ordinary record");

    const unsigned g = record.g;
    DiscriminantReport rep;
    rep.g = g;
    rep.q = record.q;
    rep.n = n;
    mpz_ui_pow_ui(rep.Q.get_mpz_t(), record.q, n);
    rep.power_poly = char_poly_of_power(record.coeffs, n);
    auto Hn = trace_polynomial(rep.power_poly, rep.Q);
    if (!Hn)
        throw std::logic_error("power polynomial lost the coefficient symmetry");
    rep.trace_poly_n = *Hn;
    rep.disc_power = discriminant(rep.power_poly);
    rep.disc_trace = discriminant(rep.trace_poly_n);
    mpz_pow_ui(rep.q_power_factor.get_mpz_t(), rep.Q.get_mpz_t(),
               static_cast<unsigned long>(g) * (g - 1));
    rep.circle_term = zp_eval(root_square_transform(rep.trace_poly_n), 4 * rep.Q);
    rep.exact_identity_holds =
        rep.disc_power == rep.disc_trace * rep.disc_trace * rep.q_power_factor * rep.circle_term;
    rep.degenerate = rep.disc_power == 0;
    rep.unit_circle_bound = std::ldexp(1.0, static_cast<int>(g * (2 * g - 1)));

    rep.observed_ratio_exponent = 0.0;
    rep.unit_circle_factor = 0.0;
    rep.polar_disc_power = 0.0;
    rep.polar_disc_trace = 0.0;
    rep.polar_rel_err_power = 0.0;
    rep.polar_rel_err_trace = 0.0;
    if (rep.degenerate)
        return rep;

    const double log_q = std::log(static_cast<double>(record.q));
    const mpz_class abs_dp = abs(rep.disc_power);
    const mpz_class abs_dt = abs(rep.disc_trace);
    {
        const mpfr_prec_t prec = 256;
        Real t(prec), ldp(prec), ldt(prec);
        mpfr_set_z(t, abs_dp.get_mpz_t(), MPFR_RNDN);
        mpfr_log(ldp, t, MPFR_RNDN);
        mpfr_set_z(t, abs_dt.get_mpz_t(), MPFR_RNDN);
        mpfr_log(ldt, t, MPFR_RNDN);
        const double log_dp = mpfr_get_d(ldp, MPFR_RNDN);
        const double log_dt = mpfr_get_d(ldt, MPFR_RNDN);
        rep.observed_ratio_exponent = (log_dp - 2.0 * log_dt) / log_q;
        rep.unit_circle_factor =
            std::exp(0.5 * log_dp -
                     0.5 * static_cast<double>(n) * static_cast<double>(g * (2 * g - 1)) * log_q);

        // Polar re-derivation from the Frobenius angles: the angle of
        // alpha_j^n is n theta_j mod 2pi, tracked in exact 128-bit fixed point.
        const WeilRootProfile prof = weil_root_profile(record, 60);
        std::vector<u128> phi; // angles/2pi of alpha_j^n, with multiplicity
        for (size_t i = 0; i < prof.angle_frac.size(); ++i)
            for (unsigned m = 0; m < prof.multiplicity[i]; ++m)
                phi.push_back(prof.angle_frac[i] * static_cast<u128>(n));
        const double log_Q = static_cast<double>(n) * log_q;

        // Roots of the power polynomial come in conjugate pairs +-phi_j; the
        // squared gap of unit vectors at angles u, v is 2 - 2 cos(u - v).
        std::vector<u128> psi;
        for (u128 v : phi) {
            psi.push_back(v);
            psi.push_back(static_cast<u128>(0) - v);
        }
        double log_polar_power = 0.0;
        for (size_t s = 0; s < psi.size(); ++s)
            for (size_t t2 = s + 1; t2 < psi.size(); ++t2) {
                const double diff = 2.0 * M_PI * unit_from_bits(psi[s] - psi[t2]);
                log_polar_power += log_Q + std::log(2.0 - 2.0 * std::cos(diff));
            }
        double log_polar_trace = 0.0;
        for (size_t s = 0; s < phi.size(); ++s)
            for (size_t t2 = s + 1; t2 < phi.size(); ++t2) {
                const double cs = std::cos(2.0 * M_PI * unit_from_bits(phi[s]));
                const double ct = std::cos(2.0 * M_PI * unit_from_bits(phi[t2]));
                log_polar_trace += std::log(4.0) + log_Q + 2.0 * std::log(std::fabs(cs - ct));
            }
        rep.polar_disc_power = std::exp(log_polar_power);
        rep.polar_disc_trace = std::exp(log_polar_trace);
        rep.polar_rel_err_power = std::fabs(std::expm1(log_polar_power - log_dp));
        rep.polar_rel_err_trace = std::fabs(std::expm1(log_polar_trace - log_dt));
    }
    return rep;
}

} // namespace isoclass
