#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace isoclass {

/// Integer / rational polynomials, coefficient of x^i stored at index i.
/// Normalized form has no trailing zero (the zero polynomial is the empty
/// vector). All routines here are exact; nothing touches floating point.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void zp_trim(ZPoly& f);
int zp_degree(const ZPoly& f); // -1 for the zero polynomial
ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_neg(ZPoly f);
ZPoly zp_derivative(const ZPoly& f);
mpz_class zp_eval(const ZPoly& f, const mpz_class& x);
bool zp_is_zero(const ZPoly& f);

QPoly to_qpoly(const ZPoly& f);
/// Primitive integer polynomial with the same roots (clears denominators,
/// divides by content, fixes the leading sign to be positive).
ZPoly primitive_part(const QPoly& f);

/// Product of the distinct irreducible factors of f (f / gcd(f, f')),
/// primitive with positive leading coefficient.
ZPoly squarefree_part(const ZPoly& f);

/// Resultant of f and g via the Sylvester matrix, evaluated with Bareiss
/// fraction-free elimination. Res of the zero polynomial is 0 by convention.
mpz_class resultant(const ZPoly& f, const ZPoly& g);

/// (-1)^{d(d-1)/2} * Res(f, f') / lc(f); exact integer for integer f.
mpz_class discriminant(const ZPoly& f);

/// Sturm chain of a squarefree rational polynomial.
std::vector<QPoly> sturm_chain(const QPoly& f);

/// Number of distinct real roots of a squarefree polynomial.
int count_real_roots(const ZPoly& squarefree);
/// Number of distinct real roots strictly greater than a.
int count_real_roots_above(const ZPoly& squarefree, const mpq_class& a);

/// Power sums p_1..p_count of the roots of a monic integer polynomial,
/// via Newton's identities.
std::vector<mpz_class> power_sums(const ZPoly& monic, int count);

/// Monic polynomial of degree d whose roots have the given power sums
/// p_1..p_d. Throws std::domain_error if the coefficients are not integers.
ZPoly poly_from_power_sums(const std::vector<mpz_class>& p, int d);

/// Characteristic polynomial of alpha^n over the roots alpha of a monic
/// integer polynomial: monic, same degree, exact.
ZPoly char_poly_of_power(const ZPoly& monic, unsigned n);

/// Decompose P(x) = sum_j h_j x^j (x^2 + Q)^{g-j} for monic P of degree 2g.
/// Returns the monic degree-g polynomial H(y) = sum_j h_j y^{g-j} whose roots
/// are x + Q/x over the roots x of P. Empty result means no such H exists,
/// i.e. P violates the coefficient symmetry c_{2g-i} = Q^{g-i} c_i.
std::optional<ZPoly> trace_polynomial(const ZPoly& P, const mpz_class& Q);

/// Polynomial whose roots are the squares of the roots of H, computed from
/// the even/odd split: G(x^2) = (-1)^{deg H} H(x) H(-x).
ZPoly root_square_transform(const ZPoly& H);

/// Isolating intervals for the real roots of a squarefree polynomial, in
/// ascending root order. Each (lo, hi) holds exactly one root in (lo, hi];
/// a rational root r may be returned as the degenerate interval (r, r).
std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const ZPoly& squarefree);

/// gcd of two integer polynomials, primitive with positive leading
/// coefficient (computed over Q, denominators cleared).
ZPoly zp_gcd(const ZPoly& a, const ZPoly& b);

} // namespace isoclass
