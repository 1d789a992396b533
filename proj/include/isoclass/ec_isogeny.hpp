#pragma once

#include "isoclass/class_groups.hpp"
#include "isoclass/finite_field.hpp"
#include "isoclass/intmath.hpp"

#include <gmpxx.h>

#include <map>
#include <vector>

namespace isoclass {

/// Frobenius datum of an elliptic curve over F_q with trace a:
/// a^2 - 4q = f1^2 * D_K with D_K fundamental.
struct FrobeniusData {
    u64 q;
    i64 a;
    i64 D_K;
    u64 f1;
    bool ordinary;
};

/// Summary of the isogeny class of E/F_q viewed over F_{q^n}.
struct IsogenyClassSummary {
    FrobeniusData base;
    unsigned n;
    mpz_class a_n;    ///< trace of alpha^n
    u64 f_n;          ///< conductor of Z[alpha^n]
    u64 size;         ///< N(q^n, E) = sum_{d | f_n} h(O_d)
    std::vector<u64> members; ///< j-invariant indices (filled on request)
};

/// a_n with a_0 = 2, a_1 = a, a_{m+1} = a*a_m - q*a_{m-1}; exact.
mpz_class trace_sequence(i64 a, u64 q, unsigned n);

/// Unique factorization a_n^2 - 4Q = f_n^2 * D_K with D_K fundamental.
/// Throws std::domain_error when a_n^2 >= 4Q.
std::pair<u64, i64> conductor(const mpz_class& a_n, u64 Q);

FrobeniusData make_frobenius(i64 a, u64 q);

/// N(q^n, E) = sum over divisors d of f_n of h(order of conductor d in K).
/// Requires the trace ordinary (gcd(a, p) = 1).
u64 isogeny_class_size(i64 a, u64 q, unsigned n);

IsogenyClassSummary isogeny_class_summary(i64 a, u64 q, unsigned n);

/// Exhaustive census: trace -> number of F_q-isomorphism classes of elliptic
/// curves y^2 = x^3 + Ax + B with that trace. Deduplication is by the
/// (u^4 A, u^6 B) twisting action; point counting is naive. p > 3, q <= 2500.
std::map<i64, u64> enumerate_curves_by_trace(u64 q, unsigned workers = 1);

/// Sorted j-invariant indices of curves over F_q with trace a or -a
/// (quadratic twists share j). Requires ordinary a.
std::vector<u64> isogeny_class_members(u64 q, i64 a);

/// Sorted indices of all supersingular j-invariants in F_{p^2}.
/// For p > 3 each j is tested on a standard model with that j-invariant;
/// p = 2, 3 fall back to exhaustive long-Weierstrass enumeration.
std::vector<u64> supersingular_j_invariants(u64 p);

/// Independent detector used for cross-checks: enumerates every short
/// Weierstrass pair over F_{p^2} and collects j-invariants of curves with
/// #E(F_{p^2}) = p^2 + 1 - t, p | t. Requires p > 3.
std::vector<u64> supersingular_j_invariants_all_models(u64 p);

} // namespace isoclass
