#include "doctest.h"

#include "isoclass/addcomb.hpp"
#include "isoclass/ec_isogeny.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace isoclass;

namespace {

GroundSet gs(const Field& F, std::initializer_list<u64> idx) {
    return make_ground_set(F, std::vector<u64>(idx));
}

std::vector<u64> elems(const GroundSet& s) { return s.elems; }

} // namespace

TEST_CASE("set operations on small prime fields") {
    const Field F5 = Field::make(5, 1);
    const GroundSet A = gs(F5, {1, 2});

    CHECK(elems(set_op(A, A, SetOp::sum)) == std::vector<u64>{2, 3, 4});
    CHECK(elems(set_op(A, A, SetOp::product)) == std::vector<u64>{1, 2, 4});
    CHECK(elems(set_op(A, A, SetOp::difference)) == std::vector<u64>{0, 1, 4});

    const GroundSet Z = gs(F5, {0});
    CHECK(elems(set_op(Z, Z, SetOp::shifted_product)) == std::vector<u64>{1});

    const Field F7 = Field::make(7, 1);
    CHECK_THROWS_AS(set_op(A, gs(F7, {1}), SetOp::sum), std::invalid_argument);
    CHECK_THROWS_AS(make_ground_set(F5, {5}), std::invalid_argument);
}

TEST_CASE("ground set membership uses the bitset and stays sorted") {
    const Field F = Field::make(2, 5); // q = 32
    const GroundSet A = make_ground_set(F, {7, 3, 3, 19});
    CHECK(A.elems == std::vector<u64>{3, 7, 19});
    CHECK(ground_set_contains(A, 7));
    CHECK_FALSE(ground_set_contains(A, 8));
    CHECK(A.mask.size() == 32);

    const GroundSet R = random_ground_set(F, 10, 42);
    CHECK(R.elems.size() == 10);
    CHECK(std::is_sorted(R.elems.begin(), R.elems.end()));
    CHECK(random_ground_set(F, 10, 42).elems == R.elems);
    CHECK_THROWS_AS(random_ground_set(F, 33, 1), std::invalid_argument);
}

TEST_CASE("doubling inequality fixtures") {
    // Z/5 with A = B = {0,1}: |A+A||B| = 3*2 = 6 <= |A+B|^2 = 9.
    const AbelianGroup Z5 = cyclic_group(5);
    const RuzsaVerdict v = check_ruzsa(Z5, {0, 1}, {0, 1}, '+');
    CHECK(v.lhs == 6);
    CHECK(v.rhs == 9);
    CHECK(v.holds);

    // F_7^x with A = B = {1,2,4}: the product set is A itself, 9 <= 9.
    const Field F7 = Field::make(7, 1);
    const RuzsaVerdict m = check_ruzsa(gs(F7, {1, 2, 4}), gs(F7, {1, 2, 4}), '+', true);
    CHECK(m.lhs == 9);
    CHECK(m.rhs == 9);
    CHECK(m.holds);

    CHECK_THROWS_AS(check_ruzsa(Z5, {}, {0}, '+'), std::invalid_argument);
    CHECK_THROWS_AS(check_ruzsa(Z5, {0}, {0}, 'x'), std::invalid_argument);
    const Field F8 = Field::make(2, 3);
    CHECK_THROWS_AS(check_ruzsa(multiplicative_group(F8), {0, 1}, {1}, '+'),
                    std::invalid_argument);
}

TEST_CASE("triangle inequality holds for all eight sign patterns") {
    std::mt19937_64 rng(2024);
    const std::array<char, 2> signs{'+', '-'};
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<u64> pick_m(2, 40);
        const u64 m = pick_m(rng);
        const AbelianGroup G = cyclic_group(m);
        auto rand_set = [&](u64 cap) {
            std::uniform_int_distribution<u64> size(1, cap);
            std::set<u64> s;
            const u64 want = size(rng);
            std::uniform_int_distribution<u64> el(0, cap - 1);
            while (s.size() < want)
                s.insert(el(rng));
            return std::vector<u64>(s.begin(), s.end());
        };
        const auto A = rand_set(m), B = rand_set(m), C = rand_set(m);
        for (char s1 : signs)
            for (char s2 : signs)
                for (char s3 : signs)
                    CHECK(check_ruzsa_triangle(G, A, B, C, {s1, s2, s3}).holds);
    }
}

TEST_CASE("doubling inequality sweeps find no violations") {
    const RuzsaSweepResult cyc = ruzsa_sweep_cyclic(10000, 64, 7);
    CHECK(cyc.trials == 10000);
    CHECK(cyc.violations == 0);

    const RuzsaSweepResult mul = ruzsa_sweep_multiplicative(10000, 64, 7);
    CHECK(mul.trials == 10000);
    CHECK(mul.violations == 0);
}

TEST_CASE("subfield concentration") {
    // The four elements of the quartic field fixed by the squared Frobenius
    // form the quadratic subfield; concentrated on the dilate c = 1.
    const Field F16 = Field::make(2, 4);
    std::vector<u64> sub;
    for (u64 i = 0; i < 16; ++i)
        if (F16.subfield_membership(F16.from_index(i), 2))
            sub.push_back(i);
    REQUIRE(sub.size() == 4);
    CHECK(subfield_concentration(make_ground_set(F16, sub), 2) == 4);

    // Random 12-element sets in the 49-element field: a dilate of the prime
    // field has 7 elements, so the concentration never exceeds 7. Cross-check
    // against a direct intersection count that bypasses membership testing.
    const Field F49 = Field::make(7, 2);
    for (u64 seed : {1, 2, 3}) {
        const GroundSet A = random_ground_set(F49, 12, seed);
        const u64 got = subfield_concentration(A, 1);
        CHECK(got <= 7);

        u64 brute = 0;
        for (u64 ci = 1; ci < 49; ++ci) {
            const FieldElement c = F49.from_index(ci);
            u64 cnt = 0;
            for (i64 s = 0; s < 7; ++s)
                if (ground_set_contains(A, F49.index(F49.mul(c, F49.from_scalar(s)))))
                    ++cnt;
            brute = std::max(brute, cnt);
        }
        CHECK(got == brute);
    }

    CHECK_THROWS_AS(subfield_concentration(random_ground_set(F16, 4, 1), 3),
                    std::invalid_argument);
}

TEST_CASE("sumset and product set growth statistics") {
    const Field F = Field::make(1009, 1);

    // Arithmetic progression {1..20}: the sumset is {2..40}.
    std::vector<u64> ap;
    for (u64 i = 1; i <= 20; ++i)
        ap.push_back(i);
    const SumProductStats s1 = sum_product_stats(make_ground_set(F, ap));
    CHECK(s1.size == 20);
    CHECK(s1.sum_size == 39);
    CHECK(s1.max_exponent >= s1.sum_exponent);

    // Geometric progression 11^1..11^20 (11 generates the full multiplicative
    // group): the product set is 11^2..11^40, again 39 elements.
    std::vector<u64> gp;
    for (u64 i = 1; i <= 20; ++i)
        gp.push_back(powmod(11, i, 1009));
    const SumProductStats s2 = sum_product_stats(make_ground_set(F, gp));
    CHECK(s2.prod_size == 39);

    CHECK_THROWS_AS(sum_product_stats(gs(F, {3})), std::invalid_argument);

    // Random sets of size about sqrt(q) should show strong growth: the
    // largest of the three exponents clears 12/11 minus slack essentially
    // always at this scale.
    int hits = 0;
    const double threshold = 12.0 / 11.0 - 0.1;
    for (u64 seed = 1; seed <= 100; ++seed) {
        const SumProductStats st = sum_product_stats(random_ground_set(F, 31, seed));
        if (st.max_exponent >= threshold)
            ++hits;
    }
    CHECK(hits >= 95);
}

TEST_CASE("expander image of xy + z") {
    const Field F5 = Field::make(5, 1);
    CHECK(elems(expander_image(gs(F5, {0}), gs(F5, {0}), gs(F5, {0}), 0)) ==
          std::vector<u64>{0});
    CHECK(elems(expander_image(gs(F5, {1}), gs(F5, {1}), gs(F5, {1}), 0)) ==
          std::vector<u64>{2});
    // shift 1: (1+1)(1+1) + (1+1) = 6 = 1 mod 5
    CHECK(elems(expander_image(gs(F5, {1}), gs(F5, {1}), gs(F5, {1}), 1)) ==
          std::vector<u64>{1});
    CHECK_THROWS_AS(expander_image(gs(F5, {1}), gs(F5, {1}), gs(F5, {1}), 2),
                    std::invalid_argument);

    // Random sets of size about sqrt(q): the image should be far larger than
    // the q^{23/44} scale the expander bound talks about.
    const Field F = Field::make(1009, 1);
    const GroundSet A = random_ground_set(F, 31, 11);
    const GroundSet B = random_ground_set(F, 31, 12);
    const GroundSet C = random_ground_set(F, 31, 13);
    const double image = static_cast<double>(expander_image(A, B, C, 0).elems.size());
    const double exponent = std::log(image) / std::log(1009.0);
    CHECK(exponent >= 23.0 / 44.0);
}

TEST_CASE("dot product bound for avoiding vector sets") {
    const Field F3 = Field::make(3, 1);
    const DotProductCheck c = check_dot_product_bound({{1}, {2}}, {{1}, {2}}, F3, 1);
    CHECK(c.avoids);
    CHECK(c.product == 4);
    CHECK(c.bound == 27);
    CHECK(c.holds);

    CHECK_THROWS_AS(check_dot_product_bound({{0, 0}}, {{1, 0}}, F3, 2), std::invalid_argument);
    CHECK_THROWS_AS(check_dot_product_bound({{1}}, {{1, 1}}, F3, 1), std::invalid_argument);

    // Exhaustive over the binary field in dimensions 1 and 2: every pair of
    // nonzero vector sets that avoids x.y = 0 satisfies |A||B| <= q^{n+2}.
    const Field F2 = Field::make(2, 1);
    for (unsigned n = 1; n <= 2; ++n) {
        std::vector<std::vector<u64>> vecs;
        const u64 count = n == 1 ? 2 : 4;
        for (u64 idx = 1; idx < count; ++idx) {
            std::vector<u64> v(n);
            u64 t = idx;
            for (unsigned i = 0; i < n; ++i) {
                v[i] = t % 2;
                t /= 2;
            }
            vecs.push_back(v);
        }
        const u64 subsets = u64(1) << vecs.size();
        for (u64 ma = 1; ma < subsets; ++ma) {
            for (u64 mb = 1; mb < subsets; ++mb) {
                std::vector<std::vector<u64>> A, B;
                for (size_t i = 0; i < vecs.size(); ++i) {
                    if (ma >> i & 1)
                        A.push_back(vecs[i]);
                    if (mb >> i & 1)
                        B.push_back(vecs[i]);
                }
                const DotProductCheck chk = check_dot_product_bound(A, B, F2, n);
                CHECK(chk.holds);
            }
        }
    }

    // Sampled avoiding pairs across small fields and dimensions.
    for (u64 q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto [p, k] = prime_power_split(q);
        const Field F = Field::make(p, k);
        for (unsigned n = 1; n <= 3; ++n) {
            const RuzsaSweepResult sw = dot_product_sweep(F, n, 50, q * 10 + n);
            CHECK(sw.violations == 0);
        }
    }
}

TEST_CASE("structured hypersurface construction") {
    const StructuredHypersurface H1 = build_hypersurface(1);
    CHECK(H1.N == 1);
    CHECK(H1.arity == 6);
    CHECK(H1.shift_vectors.size() == 4);

    const StructuredHypersurface H2 = build_hypersurface(2);
    CHECK(H2.arity == 12);
    CHECK(H2.shift_vectors.size() == 16);

    CHECK_THROWS_AS(build_hypersurface(0), std::invalid_argument);
    CHECK_THROWS_AS(build_hypersurface(11), std::invalid_argument);
}

TEST_CASE("evaluating the structured product") {
    const Field F5 = Field::make(5, 1);
    const StructuredHypersurface H = build_hypersurface(1);

    // Zero tuple: the all-zero shift factor is (0*0+0)^2 = 0.
    std::vector<FieldElement> zeros(6, F5.zero());
    const HypersurfaceValue at0 = evaluate_R(H, zeros);
    CHECK(F5.is_zero(at0.value));
    REQUIRE(at0.vanishing_c.has_value());
    CHECK(*at0.vanishing_c == std::vector<int>{0, 0});

    // All-ones tuple: factors are 4, 2, 2, 1 (shift masks 00, 10, 01, 11),
    // so R = 16 = 1 in the field.
    std::vector<FieldElement> ones(6, F5.one());
    const HypersurfaceValue at1 = evaluate_R(H, ones);
    CHECK_FALSE(at1.vanishing_c.has_value());
    CHECK(at1.value == F5.one());

    CHECK_THROWS_AS(evaluate_R(H, std::vector<FieldElement>(5, F5.zero())),
                    std::invalid_argument);
}

TEST_CASE("value vanishes exactly when a factor vanishes") {
    for (u64 q : {5, 7, 11}) {
        const Field F = Field::make(q, 1);
        for (unsigned N : {1u, 2u}) {
            const StructuredHypersurface H = build_hypersurface(N);
            std::mt19937_64 rng(q * 100 + N);
            std::uniform_int_distribution<u64> el(0, q - 1);
            for (int t = 0; t < 1000; ++t) {
                std::vector<FieldElement> x;
                for (unsigned j = 0; j < H.arity; ++j)
                    x.push_back(F.from_index(el(rng)));
                const HypersurfaceValue v = evaluate_R(H, x);
                CHECK(F.is_zero(v.value) == v.vanishing_c.has_value());
                if (!v.vanishing_c) {
                    // naive product over all shift vectors, no early exit
                    FieldElement prod = F.one();
                    for (u32 mask : H.shift_vectors) {
                        FieldElement qc = F.one();
                        for (unsigned i = 0; i < N; ++i) {
                            for (int half = 0; half < 2; ++half) {
                                const int s = (mask >> (2 * i + half)) & 1;
                                const FieldElement fs = F.from_scalar(s);
                                const unsigned base = 6 * i + 3 * half;
                                const FieldElement a = F.add(x[base], fs);
                                const FieldElement b = F.add(x[base + 1], fs);
                                const FieldElement c = F.add(x[base + 2], fs);
                                qc = F.mul(qc, F.add(F.mul(a, b), c));
                            }
                        }
                        prod = F.mul(prod, qc);
                    }
                    CHECK(v.value == prod);
                } else {
                    // the reported shift vector names a factor that is zero
                    const auto& cvec = *v.vanishing_c;
                    REQUIRE(cvec.size() == 2 * N);
                    FieldElement qc = F.one();
                    for (unsigned i = 0; i < N; ++i) {
                        for (int half = 0; half < 2; ++half) {
                            const FieldElement fs = F.from_scalar(cvec[2 * i + half]);
                            const unsigned base = 6 * i + 3 * half;
                            qc = F.mul(qc, F.add(F.mul(F.add(x[base], fs), F.add(x[base + 1], fs)),
                                                 F.add(x[base + 2], fs)));
                        }
                    }
                    CHECK(F.is_zero(qc));
                }
            }
        }
    }
}

TEST_CASE("hypersurface search on singleton classes") {
    const Field F5 = Field::make(5, 1);
    const StructuredHypersurface H = build_hypersurface(1);
    const std::vector<GroundSet> classes(6, gs(F5, {0}));

    for (SearchMode mode : {SearchMode::lexicographic, SearchMode::block_solve}) {
        const SearchReport rep = hypersurface_search(classes, H, 100, mode);
        CHECK(rep.found);
        CHECK(rep.witness == std::vector<u64>(6, 0));
        CHECK(rep.vanishing_c == std::vector<int>{0, 0});
    }

    const SearchReport empty = hypersurface_search(classes, H, 0);
    CHECK_FALSE(empty.found);
    CHECK(empty.evaluations == 0);
    CHECK(empty.fraction_searched == 0.0);

    CHECK_THROWS_AS(hypersurface_search(std::vector<GroundSet>(5, gs(F5, {0})), H, 10),
                    std::invalid_argument);
    std::vector<GroundSet> with_empty(6, gs(F5, {0}));
    with_empty[2] = make_ground_set(F5, {});
    CHECK_THROWS_AS(hypersurface_search(with_empty, H, 10), std::invalid_argument);
}

TEST_CASE("search modes agree on a small two-element instance") {
    // classes {1,2}^6 over F_5: the only vanishing assignments put (2,2,1)
    // in one of the two triples at shift 0, so the least witness is
    // (1,1,1,2,2,1).
    const Field F5 = Field::make(5, 1);
    const StructuredHypersurface H = build_hypersurface(1);
    const std::vector<GroundSet> classes(6, gs(F5, {1, 2}));
    const std::vector<u64> expect{1, 1, 1, 2, 2, 1};

    const SearchReport lex1 = hypersurface_search(classes, H, 100000, SearchMode::lexicographic);
    REQUIRE(lex1.found);
    CHECK(lex1.witness == expect);

    const SearchReport lex3 =
        hypersurface_search(classes, H, 100000, SearchMode::lexicographic, 0, 3);
    REQUIRE(lex3.found);
    CHECK(lex3.witness == expect);

    const SearchReport blk = hypersurface_search(classes, H, 100000, SearchMode::block_solve);
    REQUIRE(blk.found);
    CHECK(blk.witness == expect);
    CHECK(blk.evaluations <= 8);

    // identical (seed, workers) gives identical reports
    const SearchReport a = hypersurface_search(classes, H, 50, SearchMode::lexicographic, 9, 3);
    const SearchReport b = hypersurface_search(classes, H, 50, SearchMode::lexicographic, 9, 3);
    CHECK(a.found == b.found);
    CHECK(a.witness == b.witness);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.fraction_searched == doctest::Approx(b.fraction_searched));
}

TEST_CASE("block solve over isogeny classes of a 101-element field") {
    const Field F = Field::make(101, 1);
    const StructuredHypersurface H = build_hypersurface(1);
    std::vector<GroundSet> classes;
    for (i64 a = 1; a <= 6; ++a)
        classes.push_back(make_ground_set(F, isogeny_class_members(101, a)));
    for (const auto& cl : classes)
        CHECK(!cl.elems.empty());

    const SearchReport rep = hypersurface_search(classes, H, 1000000, SearchMode::block_solve);
    REQUIRE(rep.found);
    // the witness lies on the hypersurface; pin the deterministic result
    std::vector<FieldElement> xs;
    for (u64 idx : rep.witness)
        xs.push_back(F.from_index(idx));
    CHECK(F.is_zero(evaluate_R(H, xs).value));

    const SearchReport again = hypersurface_search(classes, H, 1000000, SearchMode::block_solve);
    CHECK(again.witness == rep.witness);
}

TEST_CASE("pair products over unordered pairs") {
    const Field F7 = Field::make(7, 1);
    const PairProductCount c = distinct_pair_products(gs(F7, {1, 2, 4}));
    CHECK(c.pairs_with_repetition == 6);
    CHECK(c.distinct_products == 3);
    CHECK_FALSE(c.all_distinct);

    // Dilate-intersection sets: for a quadratic extension over its prime
    // field and any c outside the prime field, (A intersect c.F1) + 1 has all
    // pair products distinct, squares included.
    for (u64 q : {9, 25}) {
        const auto [p, k] = prime_power_split(q);
        const Field F = Field::make(p, k);
        for (u64 seed : {1, 2, 3, 4}) {
            const GroundSet A = random_ground_set(F, q / 2, seed);
            for (u64 ci = 1; ci < q; ++ci) {
                const FieldElement c = F.from_index(ci);
                if (F.subfield_membership(c, 1))
                    continue;
                std::vector<u64> shifted;
                for (i64 s = 0; s < static_cast<i64>(p); ++s) {
                    const FieldElement cs = F.mul(c, F.from_scalar(s));
                    if (ground_set_contains(A, F.index(cs)))
                        shifted.push_back(F.index(F.add(cs, F.one())));
                }
                const GroundSet Ap = make_ground_set(F, shifted);
                CHECK_FALSE(ground_set_contains(Ap, 0));
                const PairProductCount pc = distinct_pair_products(Ap);
                const u64 m = Ap.elems.size();
                CHECK(pc.pairs_with_repetition == m * (m + 1) / 2);
                CHECK(pc.all_distinct);
            }
        }
    }
}
