#pragma once

#include "isoclass/honda_tate.hpp"

#include <string>
#include <vector>

namespace isoclass {

/// Frobenius angles of a Weil polynomial: one entry per distinct conjugate
/// root pair alpha_j = sqrt(q) e^{i theta_j}, theta_j in [0, pi], sorted
/// ascending; multiplicities sum to g for degree 2g. Angles are computed at
/// the requested decimal precision; `angle_frac` stores theta_j / (2 pi) as a
/// 128-bit binary fraction, which downstream n-multiplication uses to step
/// angles without accumulating rounding error.
struct WeilRootProfile {
    WeilPolynomialRecord record;
    unsigned precision_digits;
    std::vector<double> angles;            ///< theta_j, ascending
    std::vector<std::string> angle_str;    ///< theta_j at full requested precision
    std::vector<std::string> root_re;      ///< Re alpha_j = sqrt(q) cos theta_j
    std::vector<std::string> root_im;      ///< Im alpha_j = sqrt(q) sin theta_j >= 0
    std::vector<u128> angle_frac;          ///< floor(2^128 * theta_j / (2 pi))
    std::vector<unsigned> multiplicity;    ///< root multiplicity in the trace polynomial
    bool degenerate;                       ///< repeated or rational-multiple-of-pi angle
    std::string degenerate_reason;         ///< "", "repeated-root", or "rational-angle"
};

/// Computes the root profile of a record whose polynomial passed the Weil
/// filter. `precision_digits` sets the working precision (decimal digits).
WeilRootProfile weil_root_profile(const WeilPolynomialRecord& record,
                                  unsigned precision_digits = 40);

/// Fraction of n in [1, n_max] where every angle satisfies the sign condition
///   sin(n theta_j) * prod_{k != j} (cos n theta_j - cos n theta_k) > 0.
/// For g = 1 this is just sin(n theta) > 0. Angles advance by exact 128-bit
/// fixed-point addition modulo 1, so there is no drift over large n. Requires
/// n_max >= 10^4; work shards into contiguous n-ranges across `workers`.
double positivity_density(const WeilRootProfile& profile, u64 n_max, unsigned workers = 1);

/// Result of the Z-linear relation scan over (2 pi, theta_1, ..., theta_g).
struct IndependenceVerdict {
    bool independent;           ///< no relation found within the scan box
    std::vector<long> witness;  ///< (m_0, ..., m_d) with |m_0 2pi + sum m_j theta_j| < tol
    double value;               ///< smallest |combination| seen over the scan
    long coefficient_bound;
    double tolerance;
};

/// Scans all integer vectors with |m_i| <= coefficient_bound (not all zero)
/// and reports the first witness, in lexicographic order, of a combination
/// m_0 * 2pi + sum_j m_j theta_j that is smaller than `tolerance` in absolute
/// value. Finding none is evidence (not proof) of multiplicative independence
/// of the roots modulo roots of unity.
IndependenceVerdict multiplicative_independence_heuristic(const WeilRootProfile& profile,
                                                          long coefficient_bound = 20,
                                                          double tolerance = 1e-9);

/// Exact discriminant bookkeeping for the order generated by alpha^n.
///
/// power_poly is the characteristic polynomial of alpha^n (degree 2g, a Weil
/// q^n-polynomial); trace_poly_n its trace polynomial over Q = q^n. The two
/// discriminants satisfy the exact integer identity
///   disc(power_poly) = disc(trace_poly_n)^2 * Q^{g(g-1)} * circle_term,
/// where circle_term = prod_j (beta_j^2 - 4Q) = G(4Q) for the root-squared
/// transform G of trace_poly_n; `exact_identity_holds` records this check.
/// The polar fields re-derive both discriminants from the Frobenius angles
/// and report relative errors, and unit_circle_factor is
/// sqrt|disc(power_poly)| / Q^{g(2g-1)/2}, bounded by 2^{g(2g-1)}.
struct DiscriminantReport {
    unsigned g;
    u64 q;
    unsigned n;
    mpz_class Q;              ///< q^n
    ZPoly power_poly;         ///< char poly of alpha^n
    ZPoly trace_poly_n;       ///< trace polynomial of power_poly w.r.t. Q
    mpz_class disc_power;     ///< disc(power_poly), exact
    mpz_class disc_trace;     ///< disc(trace_poly_n), exact
    mpz_class q_power_factor; ///< Q^{g(g-1)}
    mpz_class circle_term;    ///< G(4Q), exact
    bool exact_identity_holds;
    double observed_ratio_exponent; ///< log_q |disc_power / disc_trace^2|
    double unit_circle_factor;      ///< sqrt|disc_power| / Q^{g(2g-1)/2}
    double unit_circle_bound;       ///< 2^{g(2g-1)}
    double polar_disc_power;        ///< angle-product evaluation of |disc_power|
    double polar_disc_trace;        ///< angle-product evaluation of |disc_trace|
    double polar_rel_err_power;
    double polar_rel_err_trace;
    bool degenerate; ///< disc_power == 0 (repeated root of the power polynomial)
};

/// Requires an ordinary record (throws std::domain_error otherwise) and n >= 1.
DiscriminantReport discriminant_report(const WeilPolynomialRecord& record, unsigned n);

} // namespace isoclass
