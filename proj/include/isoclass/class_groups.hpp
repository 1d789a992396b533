#pragma once

#include "isoclass/intmath.hpp"

#include <gmpxx.h>

namespace isoclass {

/// Imaginary quadratic order of discriminant f^2 * D_K.
struct OrderDescriptor {
    i64 D_K; ///< fundamental discriminant, negative
    u64 f;   ///< conductor
    i64 disc() const { return static_cast<i64>(f) * static_cast<i64>(f) * D_K; }
};

/// Kronecker symbol (D/m), defined for all integers with the standard
/// conventions at 2, -1 and 0.
int kronecker_symbol(const mpz_class& D, const mpz_class& m);
int kronecker_symbol(i64 D, i64 m);

/// True iff D is a fundamental discriminant: D = 1, or D ≡ 1 mod 4 and
/// squarefree, or D = 4m with m ≡ 2,3 mod 4 and squarefree.
bool is_fundamental_discriminant(i64 D);

/// Number of reduced primitive binary quadratic forms (a,b,c) with
/// b^2 - 4ac = disc, |b| <= a <= c, b >= 0 when |b| = a or a = c, and
/// gcd(a,b,c) = 1. This is h(disc) counted directly, with no formulas.
u64 class_number_forms(i64 disc);

/// Class number of the order of conductor f in the field of fundamental
/// discriminant D_K:
///   h(O_f) = f * h(D_K) / [O_K^x : O_f^x] * prod_{p | f} (1 - (D_K/p)/p).
/// Agrees with class_number_forms(f^2 D_K); h(D_K) values are memoized.
u64 class_number_order(i64 D_K, u64 f);

/// Same Euler product as class_number_order but without the 1/p factors,
/// i.e. f * h(D_K) * prod_{p|f} (1 - (D_K/p)) / unit index. Exposed for
/// side-by-side reporting; disagrees with the forms count whenever the
/// product is nonempty (see class-number --verbose). Not an integer in
/// general, so returned as an exact rational.
mpq_class class_number_order_no_p(i64 D_K, u64 f);

/// Builds and validates an OrderDescriptor.
OrderDescriptor make_order(i64 D_K, u64 f);

} // namespace isoclass
