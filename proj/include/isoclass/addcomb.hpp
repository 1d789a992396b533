#pragma once

#include "isoclass/finite_field.hpp"
#include "isoclass/intmath.hpp"

#include <gmpxx.h>

#include <array>
#include <optional>
#include <vector>

namespace isoclass {

/// A finite subset of a field, stored as sorted unique element indices.
/// The field is borrowed: the caller keeps it alive for the set's lifetime.
/// For q <= 2^20 a bitset gives O(1) membership tests.
struct GroundSet {
    const Field* field = nullptr;
    std::vector<u64> elems;
    std::vector<bool> mask; ///< empty when q > 2^20
};

/// Sorts, deduplicates, and validates the indices (< q).
GroundSet make_ground_set(const Field& F, std::vector<u64> indices);
/// Uniform random subset of the given size, deterministic in the seed.
GroundSet random_ground_set(const Field& F, u64 size, u64 seed);
bool ground_set_contains(const GroundSet& A, u64 index);

enum class SetOp {
    sum,            ///< {a + b}
    difference,     ///< {a - b}
    product,        ///< {a * b}
    shifted_product ///< {(a + 1)(b + 1)}
};

/// Exact image set, sorted and deduplicated. Throws on mixed fields.
GroundSet set_op(const GroundSet& A, const GroundSet& B, SetOp op);

/// The three group views the Ruzsa measurements run over: (F_q, +),
/// (F_q^x, *), and Z/m. Elements are field indices (resp. residues).
struct AbelianGroup {
    enum class Kind { field_additive, field_multiplicative, cyclic };
    Kind kind;
    const Field* field = nullptr; ///< field kinds
    u64 modulus = 0;              ///< cyclic kind
};

AbelianGroup additive_group(const Field& F);
AbelianGroup multiplicative_group(const Field& F);
AbelianGroup cyclic_group(u64 m);

struct RuzsaVerdict {
    u64 lhs;
    u64 rhs;
    bool holds;
};

/// Corollary form |A s A| |B| <= |A s B|^2 with sign s in {'+', '-'}.
/// In the multiplicative group '-' means division. Empty input throws.
RuzsaVerdict check_ruzsa(const AbelianGroup& G, const std::vector<u64>& A,
                         const std::vector<u64>& B, char sign);
RuzsaVerdict check_ruzsa(const GroundSet& A, const GroundSet& B, char sign,
                         bool multiplicative = false);

/// Triangle form |A s1 C| |B| <= |A s2 B| |B s3 C|; all 8 sign patterns hold.
RuzsaVerdict check_ruzsa_triangle(const AbelianGroup& G, const std::vector<u64>& A,
                                  const std::vector<u64>& B, const std::vector<u64>& C,
                                  const std::array<char, 3>& signs);

struct RuzsaSweepResult {
    u64 trials;
    u64 violations;
};

/// Random-pair sweeps of the corollary form (both signs per trial).
/// Deterministic in the seed; a violation would falsify the inequality.
RuzsaSweepResult ruzsa_sweep_cyclic(u64 trials, u64 max_modulus, u64 seed);
RuzsaSweepResult ruzsa_sweep_multiplicative(u64 trials, u64 max_q, u64 seed);

/// max over c in F^x of |A intersect c.F_1| where F_1 is the subfield of
/// order p^d; throws unless d divides the extension degree.
u64 subfield_concentration(const GroundSet& A, unsigned d);

struct SumProductStats {
    u64 size;
    u64 sum_size;     ///< |A + A|
    u64 prod_size;    ///< |A * A|
    u64 shifted_size; ///< |(A+1)(A+1)|
    double sum_exponent, prod_exponent, shifted_exponent;
    double max_exponent; ///< max of the three, to compare against 12/11
};

/// Growth statistics of a set under sum, product, and shifted product;
/// exponents are log|image| / log|A|. Requires |A| >= 2.
SumProductStats sum_product_stats(const GroundSet& A);

/// Exact image (A+s)(B+s) + (C+s) of the expander xy + z, shift s in {0, 1}.
GroundSet expander_image(const GroundSet& A, const GroundSet& B, const GroundSet& C, int shift);

struct DotProductCheck {
    bool avoids;       ///< no pair (a, b) has a.b = 0
    mpz_class product; ///< |A| * |B|
    mpz_class bound;   ///< q^{n+2}
    bool holds;        ///< avoids implies product <= bound
};

/// Vector sets live in F^n, each vector a length-n tuple of element indices;
/// duplicates are dropped. A zero vector anywhere throws.
DotProductCheck check_dot_product_bound(const std::vector<std::vector<u64>>& A,
                                        const std::vector<std::vector<u64>>& B, const Field& F,
                                        unsigned n);

/// Samples random pairs (A, B) of nonzero vector sets with every dot product
/// a.b nonzero (B is drawn from the vectors non-orthogonal to all of A) and
/// checks |A||B| <= q^{n+2} on each. Requires q^n <= 2^20. Deterministic in
/// the seed; a violation would falsify the bound.
RuzsaSweepResult dot_product_sweep(const Field& F, unsigned n, u64 trials, u64 seed);

using u32 = std::uint32_t;

/// Product R = prod_{c in {0,1}^{2N}} Q_c of the structured factors built
/// from P(x,y,z) = xy + z. Block i (1-based) consumes coordinates
/// 6(i-1)+1 .. 6(i-1)+6; its first triple is shifted by c_{2i-1}, its second
/// by c_{2i}. The product form is never expanded into monomials. Shift
/// vectors are stored as bitmasks with c_{j+1} at bit j.
struct StructuredHypersurface {
    unsigned N;
    unsigned arity; ///< 6N
    std::vector<u32> shift_vectors;
};

/// Throws for N < 1; N is capped at 10 since the factor list has size 2^{2N}.
StructuredHypersurface build_hypersurface(unsigned N);

struct HypersurfaceValue {
    FieldElement value;
    std::optional<std::vector<int>> vanishing_c; ///< first factor that vanished
};

/// Evaluates R at a 6N-tuple with early exit: the first vanishing factor
/// short-circuits the product and is returned as the witness.
HypersurfaceValue evaluate_R(const StructuredHypersurface& H, const std::vector<FieldElement>& x);

enum class SearchMode {
    lexicographic, ///< scan the full product space in (optionally seeded) order
    block_solve    ///< solve a block's last coordinate from the other five
};

struct SearchReport {
    bool found;
    std::vector<u64> witness; ///< element indices, length 6N when found
    std::vector<int> vanishing_c;
    u64 evaluations; ///< R evaluations (lexicographic) or solve attempts (block)
    double fraction_searched;
};

/// Searches prod classes_i for a tuple with R = 0. Deterministic for fixed
/// (seed, workers): workers shard the scan and the merge keeps the
/// lexicographically least witness found. block_solve uses that P(a, b, .) is
/// a bijection in its third argument: it scans the first two coordinates of
/// each block's second triple and solves the third, so a hit needs only
/// membership of the solved value. Budget exhaustion is a report, not an
/// error. Every returned witness is re-verified through evaluate_R.
SearchReport hypersurface_search(const std::vector<GroundSet>& classes,
                                 const StructuredHypersurface& H, u64 budget,
                                 SearchMode mode = SearchMode::block_solve, u64 seed = 0,
                                 unsigned workers = 1);

struct PairProductCount {
    u64 pairs_with_repetition; ///< |A|(|A|+1)/2 unordered pairs, squares included
    u64 distinct_products;
    bool all_distinct; ///< every unordered pair gives a different product
};

/// Products a1*a2 over unordered pairs from A (repetition allowed); reports
/// whether distinct pairs always produce distinct products.
PairProductCount distinct_pair_products(const GroundSet& A);

} // namespace isoclass
