#pragma once

#include "isoclass/exact_poly.hpp"
#include "isoclass/intmath.hpp"

#include <vector>

namespace isoclass {

/// Why a polynomial is or is not a Weil q-polynomial. The two failure modes
/// are reported separately: coefficient-symmetry violations never reach the
/// root-location check.
enum class WeilStatus {
    weil,
    bad_shape,                     ///< not monic of even degree >= 2
    functional_equation_violation, ///< c_{2g-i} != q^{g-i} c_i
    off_circle_roots               ///< some root has |z| != sqrt(q)
};

const char* to_string(WeilStatus s);

/// A Weil q-polynomial of degree 2g together with its Newton polygon.
/// coeffs are stored ascending (coeffs[i] is the coefficient of x^i).
struct WeilPolynomialRecord {
    unsigned g;
    u64 q;
    ZPoly coeffs;
    std::vector<mpq_class> newton_slopes; ///< 2g nondecreasing slopes
    bool ordinary;                        ///< slopes are {0^g, 1^g}
};

/// Exact decision: all roots on |z| = sqrt(q)? The root-location check runs
/// over the trace polynomial H (roots x + q/x) with Sturm sequences; no
/// floating point anywhere.
WeilStatus weil_status(const ZPoly& coeffs, u64 q);
bool is_weil_polynomial(const ZPoly& coeffs, u64 q);

/// Slopes of the lower convex hull of (i, v_p(c_{2g-i})/m) for q = p^m,
/// i = 0..2g; an ordinary polynomial reads as g zeros followed by g ones.
/// Requires monic even degree and nonzero constant term.
std::vector<mpq_class> newton_polygon(const ZPoly& coeffs, u64 q);

WeilPolynomialRecord make_weil_record(const ZPoly& coeffs, u64 q);

/// All Weil q-polynomials of degree 2g, scanning the coefficient box
/// |a_1| <= floor(2g sqrt(q)), |a_2| <= 6q (g = 2) in lexicographic
/// (a_1, a_2) order and keeping what the exact filter accepts. g <= 2.
std::vector<WeilPolynomialRecord> enumerate_weil_polynomials(unsigned g, u64 q,
                                                             bool ordinary_only = false,
                                                             unsigned workers = 1);

struct CensusPoint {
    u64 q;
    u64 total;
    u64 ordinary;
};

struct CensusScaling {
    unsigned g;
    std::vector<CensusPoint> points;
    double slope_total;    ///< least-squares slope of log total vs log q
    double slope_ordinary; ///< least-squares slope of log ordinary vs log q
    double target;         ///< g(g+1)/4
};

/// Runs the census at each q and fits log(count) against log(q).
/// Needs at least 3 points.
CensusScaling census_scaling(unsigned g, const std::vector<u64>& q_list, unsigned workers = 1);

} // namespace isoclass
