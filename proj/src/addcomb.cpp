#include "isoclass/addcomb.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>
#include <thread>

namespace isoclass {

namespace {

constexpr u64 kMaskCap = u64(1) << 20;

void rebuild_mask(GroundSet& s) {
    if (s.field->q() > kMaskCap) {
        s.mask.clear();
        return;
    }
    s.mask.assign(s.field->q(), false);
    for (u64 e : s.elems)
        s.mask[e] = true;
}

GroundSet from_indices(const Field& F, std::vector<u64> idx) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    GroundSet s;
    s.field = &F;
    s.elems = std::move(idx);
    rebuild_mask(s);
    return s;
}

void require_same_field(const GroundSet& A, const GroundSet& B) {
    if (A.field == nullptr || B.field == nullptr || !A.field->same_as(*B.field))
        throw std::invalid_argument("ground sets live in different fields");
}

u64 group_order(const AbelianGroup& G) {
    switch (G.kind) {
    case AbelianGroup::Kind::field_additive:
        return G.field->q();
    case AbelianGroup::Kind::field_multiplicative:
        return G.field->q() - 1;
    case AbelianGroup::Kind::cyclic:
        return G.modulus;
    }
    return 0;
}

void validate_group_elements(const AbelianGroup& G, const std::vector<u64>& A) {
    if (A.empty())
        throw std::invalid_argument("empty set in a Ruzsa check");
    for (u64 a : A) {
        switch (G.kind) {
        case AbelianGroup::Kind::field_additive:
            if (a >= G.field->q())
                throw std::invalid_argument("element index out of range");
            break;
        case AbelianGroup::Kind::field_multiplicative:
            if (a == 0 || a >= G.field->q())
                throw std::invalid_argument("multiplicative sets must avoid zero");
            break;
        case AbelianGroup::Kind::cyclic:
            if (a >= G.modulus)
                throw std::invalid_argument("residue out of range");
            break;
        }
    }
}

u64 group_combine(const AbelianGroup& G, u64 a, u64 b, bool inverse_b) {
    switch (G.kind) {
    case AbelianGroup::Kind::field_additive: {
        const Field& F = *G.field;
        FieldElement y = F.from_index(b);
        if (inverse_b)
            y = F.neg(y);
        return F.index(F.add(F.from_index(a), y));
    }
    case AbelianGroup::Kind::field_multiplicative: {
        const Field& F = *G.field;
        FieldElement y = F.from_index(b);
        if (inverse_b)
            y = F.inv(y);
        return F.index(F.mul(F.from_index(a), y));
    }
    case AbelianGroup::Kind::cyclic: {
        const u64 m = G.modulus;
        const u64 bb = inverse_b ? (m - b % m) % m : b;
        return (a + bb) % m;
    }
    }
    return 0;
}

u64 image_size(const AbelianGroup& G, const std::vector<u64>& A, const std::vector<u64>& B,
               char sign) {
    if (sign != '+' && sign != '-')
        throw std::invalid_argument("sign must be '+' or '-'");
    std::vector<u64> out;
    out.reserve(A.size() * B.size());
    for (u64 a : A)
        for (u64 b : B)
            out.push_back(group_combine(G, a, b, sign == '-'));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out.size();
}

std::vector<u64> random_subset(u64 universe, u64 size, std::mt19937_64& rng) {
    std::vector<u64> all(universe);
    for (u64 i = 0; i < universe; ++i)
        all[i] = i;
    for (u64 i = 0; i + 1 < universe && i < size; ++i) {
        std::uniform_int_distribution<u64> pick(i, universe - 1);
        std::swap(all[i], all[pick(rng)]);
    }
    all.resize(std::min(size, universe));
    return all;
}

const std::vector<u64>& small_prime_powers() {
    static const std::vector<u64> qs = [] {
        std::vector<u64> v;
        for (u64 q = 2; q <= 64; ++q)
            if (factorize(q).size() == 1)
                v.push_back(q);
        return v;
    }();
    return qs;
}

} // namespace

GroundSet make_ground_set(const Field& F, std::vector<u64> indices) {
    for (u64 i : indices)
        if (i >= F.q())
            throw std::invalid_argument("element index out of range for the field");
    return from_indices(F, std::move(indices));
}

GroundSet random_ground_set(const Field& F, u64 size, u64 seed) {
    if (size > F.q())
        throw std::invalid_argument("requested set larger than the field");
    if (F.q() > kMaskCap)
        throw std::invalid_argument("random subsets limited to q <= 2^20");
    std::mt19937_64 rng(seed);
    return from_indices(F, random_subset(F.q(), size, rng));
}

bool ground_set_contains(const GroundSet& A, u64 index) {
    if (!A.mask.empty())
        return index < A.mask.size() && A.mask[index];
    return std::binary_search(A.elems.begin(), A.elems.end(), index);
}

GroundSet set_op(const GroundSet& A, const GroundSet& B, SetOp op) {
    require_same_field(A, B);
    const Field& F = *A.field;
    const FieldElement one = F.one();
    std::vector<u64> out;
    out.reserve(A.elems.size() * B.elems.size());
    for (u64 ai : A.elems) {
        const FieldElement a = F.from_index(ai);
        for (u64 bi : B.elems) {
            const FieldElement b = F.from_index(bi);
            FieldElement v = F.zero();
            switch (op) {
            case SetOp::sum:
                v = F.add(a, b);
                break;
            case SetOp::difference:
                v = F.sub(a, b);
                break;
            case SetOp::product:
                v = F.mul(a, b);
                break;
            case SetOp::shifted_product:
                v = F.mul(F.add(a, one), F.add(b, one));
                break;
            }
            out.push_back(F.index(v));
        }
    }
    return from_indices(F, std::move(out));
}

AbelianGroup additive_group(const Field& F) {
    return {AbelianGroup::Kind::field_additive, &F, 0};
}

AbelianGroup multiplicative_group(const Field& F) {
    return {AbelianGroup::Kind::field_multiplicative, &F, 0};
}

AbelianGroup cyclic_group(u64 m) {
    if (m < 1)
        throw std::invalid_argument("cyclic group needs modulus >= 1");
    return {AbelianGroup::Kind::cyclic, nullptr, m};
}

RuzsaVerdict check_ruzsa(const AbelianGroup& G, const std::vector<u64>& A,
                         const std::vector<u64>& B, char sign) {
    validate_group_elements(G, A);
    validate_group_elements(G, B);
    const u64 lhs = image_size(G, A, A, sign) * B.size();
    const u64 ab = image_size(G, A, B, sign);
    return {lhs, ab * ab, lhs <= ab * ab};
}

RuzsaVerdict check_ruzsa(const GroundSet& A, const GroundSet& B, char sign, bool multiplicative) {
    require_same_field(A, B);
    const AbelianGroup G =
        multiplicative ? multiplicative_group(*A.field) : additive_group(*A.field);
    return check_ruzsa(G, A.elems, B.elems, sign);
}

RuzsaVerdict check_ruzsa_triangle(const AbelianGroup& G, const std::vector<u64>& A,
                                  const std::vector<u64>& B, const std::vector<u64>& C,
                                  const std::array<char, 3>& signs) {
    validate_group_elements(G, A);
    validate_group_elements(G, B);
    validate_group_elements(G, C);
    const u64 lhs = image_size(G, A, C, signs[0]) * B.size();
    const u64 rhs = image_size(G, A, B, signs[1]) * image_size(G, B, C, signs[2]);
    return {lhs, rhs, lhs <= rhs};
}

RuzsaSweepResult ruzsa_sweep_cyclic(u64 trials, u64 max_modulus, u64 seed) {
    if (max_modulus < 2)
        throw std::invalid_argument("need max modulus >= 2");
    std::mt19937_64 rng(seed);
    u64 violations = 0;
    for (u64 t = 0; t < trials; ++t) {
        std::uniform_int_distribution<u64> pick_m(2, max_modulus);
        const u64 m = pick_m(rng);
        const AbelianGroup G = cyclic_group(m);
        std::uniform_int_distribution<u64> pick_size(1, m);
        auto A = random_subset(m, pick_size(rng), rng);
        auto B = random_subset(m, pick_size(rng), rng);
        if (!check_ruzsa(G, A, B, '+').holds || !check_ruzsa(G, A, B, '-').holds)
            ++violations;
    }
    return {trials, violations};
}

RuzsaSweepResult ruzsa_sweep_multiplicative(u64 trials, u64 max_q, u64 seed) {
    if (max_q < 3)
        throw std::invalid_argument("need max q >= 3");
    std::mt19937_64 rng(seed);
    std::vector<u64> qs;
    for (u64 q : small_prime_powers())
        if (q <= max_q && q >= 3)
            qs.push_back(q);
    std::vector<std::unique_ptr<Field>> cache(qs.size());
    u64 violations = 0;
    for (u64 t = 0; t < trials; ++t) {
        std::uniform_int_distribution<size_t> pick_q(0, qs.size() - 1);
        const size_t qi = pick_q(rng);
        if (!cache[qi]) {
            const auto [p, k] = prime_power_split(qs[qi]);
            cache[qi] = std::make_unique<Field>(Field::make(p, k));
        }
        const Field& F = *cache[qi];
        const AbelianGroup G = multiplicative_group(F);
        std::uniform_int_distribution<u64> pick_size(1, F.q() - 1);
        // nonzero indices: sample from 1..q-1
        auto shift = [](std::vector<u64> v) {
            for (u64& x : v)
                ++x;
            return v;
        };
        auto A = shift(random_subset(F.q() - 1, pick_size(rng), rng));
        auto B = shift(random_subset(F.q() - 1, pick_size(rng), rng));
        if (!check_ruzsa(G, A, B, '+').holds || !check_ruzsa(G, A, B, '-').holds)
            ++violations;
    }
    return {trials, violations};
}

u64 subfield_concentration(const GroundSet& A, unsigned d) {
    const Field& F = *A.field;
    if (d == 0 || F.k() % d != 0)
        throw std::invalid_argument("subfield degree must divide the extension degree");
    std::vector<FieldElement> subfield;
    for (u64 i = 0; i < F.q(); ++i) {
        FieldElement x = F.from_index(i);
        if (F.subfield_membership(x, d))
            subfield.push_back(x);
    }
    u64 best = 0;
    for (u64 ci = 1; ci < F.q(); ++ci) {
        const FieldElement c = F.from_index(ci);
        u64 cnt = 0;
        for (const FieldElement& s : subfield)
            if (ground_set_contains(A, F.index(F.mul(c, s))))
                ++cnt;
        best = std::max(best, cnt);
    }
    return best;
}

SumProductStats sum_product_stats(const GroundSet& A) {
    if (A.elems.size() < 2)
        throw std::invalid_argument("need |A| >= 2 for growth exponents");
    SumProductStats st;
    st.size = A.elems.size();
    st.sum_size = set_op(A, A, SetOp::sum).elems.size();
    st.prod_size = set_op(A, A, SetOp::product).elems.size();
    st.shifted_size = set_op(A, A, SetOp::shifted_product).elems.size();
    const double la = std::log(static_cast<double>(st.size));
    st.sum_exponent = std::log(static_cast<double>(st.sum_size)) / la;
    st.prod_exponent = std::log(static_cast<double>(st.prod_size)) / la;
    st.shifted_exponent = std::log(static_cast<double>(st.shifted_size)) / la;
    st.max_exponent = std::max({st.sum_exponent, st.prod_exponent, st.shifted_exponent});
    return st;
}

GroundSet expander_image(const GroundSet& A, const GroundSet& B, const GroundSet& C, int shift) {
    require_same_field(A, B);
    require_same_field(A, C);
    if (shift != 0 && shift != 1)
        throw std::invalid_argument("shift must be 0 or 1");
    const Field& F = *A.field;
    const FieldElement s = F.from_scalar(shift);
    std::vector<u64> out;
    out.reserve(A.elems.size() * B.elems.size() * C.elems.size());
    for (u64 ai : A.elems) {
        const FieldElement a = F.add(F.from_index(ai), s);
        for (u64 bi : B.elems) {
            const FieldElement ab = F.mul(a, F.add(F.from_index(bi), s));
            for (u64 ci : C.elems)
                out.push_back(F.index(F.add(ab, F.add(F.from_index(ci), s))));
        }
    }
    return from_indices(F, std::move(out));
}

DotProductCheck check_dot_product_bound(const std::vector<std::vector<u64>>& A,
                                        const std::vector<std::vector<u64>>& B, const Field& F,
                                        unsigned n) {
    if (n == 0)
        throw std::invalid_argument("dimension must be >= 1");
    auto canonical = [&](const std::vector<std::vector<u64>>& vs) {
        std::vector<std::vector<u64>> out = vs;
        for (const auto& v : out) {
            if (v.size() != n)
                throw std::invalid_argument("vector has the wrong dimension");
            bool all_zero = true;
            for (u64 e : v) {
                if (e >= F.q())
                    throw std::invalid_argument("vector entry out of range");
                if (e != 0)
                    all_zero = false;
            }
            if (all_zero)
                throw std::invalid_argument("vector sets must not contain the zero vector");
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    const auto VA = canonical(A);
    const auto VB = canonical(B);

    bool avoids = true;
    for (const auto& a : VA) {
        for (const auto& b : VB) {
            FieldElement dot = F.zero();
            for (unsigned i = 0; i < n; ++i)
                dot = F.add(dot, F.mul(F.from_index(a[i]), F.from_index(b[i])));
            if (F.is_zero(dot)) {
                avoids = false;
                break;
            }
        }
        if (!avoids)
            break;
    }
    DotProductCheck res;
    res.avoids = avoids;
    res.product = mpz_class(VA.size()) * mpz_class(VB.size());
    mpz_ui_pow_ui(res.bound.get_mpz_t(), F.q(), n + 2);
    res.holds = !avoids || res.product <= res.bound;
    return res;
}

RuzsaSweepResult dot_product_sweep(const Field& F, unsigned n, u64 trials, u64 seed) {
    if (n == 0)
        throw std::invalid_argument("dimension must be >= 1");
    double space = 1.0;
    for (unsigned i = 0; i < n; ++i)
        space *= static_cast<double>(F.q());
    if (space > static_cast<double>(kMaskCap))
        throw std::invalid_argument("vector space too large to enumerate");
    const u64 count = static_cast<u64>(space);

    std::vector<std::vector<u64>> all;
    all.reserve(count - 1);
    std::vector<u64> cur(n, 0);
    for (u64 idx = 1; idx < count; ++idx) {
        u64 t = idx;
        for (unsigned i = 0; i < n; ++i) {
            cur[i] = t % F.q();
            t /= F.q();
        }
        all.push_back(cur);
    }

    std::vector<FieldElement> el;
    el.reserve(F.q());
    for (u64 i = 0; i < F.q(); ++i)
        el.push_back(F.from_index(i));
    auto dot_nonzero = [&](const std::vector<u64>& a, const std::vector<u64>& b) {
        FieldElement d = F.zero();
        for (unsigned i = 0; i < n; ++i)
            d = F.add(d, F.mul(el[a[i]], el[b[i]]));
        return !F.is_zero(d);
    };

    std::mt19937_64 rng(seed);
    const u64 max_size = std::min<u64>(all.size(), 2 * F.q());
    u64 violations = 0;
    for (u64 t = 0; t < trials; ++t) {
        std::vector<std::vector<u64>> A;
        std::vector<std::vector<u64>> candidates;
        for (int attempt = 0; attempt < 100 && candidates.empty(); ++attempt) {
            std::uniform_int_distribution<u64> pick_size(1, attempt < 50 ? max_size : 1);
            auto idxs = random_subset(all.size(), pick_size(rng), rng);
            A.clear();
            for (u64 i : idxs)
                A.push_back(all[i]);
            candidates.clear();
            for (const auto& v : all) {
                bool ok = true;
                for (const auto& a : A)
                    if (!dot_nonzero(a, v)) {
                        ok = false;
                        break;
                    }
                if (ok)
                    candidates.push_back(v);
            }
        }
        std::uniform_int_distribution<u64> pick_bsize(1, candidates.size());
        auto bidx = random_subset(candidates.size(), pick_bsize(rng), rng);
        std::vector<std::vector<u64>> B;
        for (u64 i : bidx)
            B.push_back(candidates[i]);
        const DotProductCheck chk = check_dot_product_bound(A, B, F, n);
        if (!chk.avoids || !chk.holds)
            ++violations;
    }
    return {trials, violations};
}

StructuredHypersurface build_hypersurface(unsigned N) {
    if (N < 1)
        throw std::invalid_argument("N must be >= 1");
    if (N > 10)
        throw std::invalid_argument("factor list 2^{2N} too large beyond N = 10");
    StructuredHypersurface H;
    H.N = N;
    H.arity = 6 * N;
    H.shift_vectors.resize(u64(1) << (2 * N));
    for (u32 c = 0; c < H.shift_vectors.size(); ++c)
        H.shift_vectors[c] = c;
    return H;
}

HypersurfaceValue evaluate_R(const StructuredHypersurface& H, const std::vector<FieldElement>& x) {
    if (x.size() != H.arity)
        throw std::invalid_argument("coordinate tuple has the wrong arity");
    if (x.empty() || x[0].owner == nullptr)
        throw std::invalid_argument("coordinates must carry a field");
    const Field& F = *x[0].owner;

    // For each of the 2N triples, precompute P(x+s, y+s, z+s) for s in {0,1};
    // every Q_c is a product of one choice per triple.
    const unsigned triples = 2 * H.N;
    std::vector<std::array<FieldElement, 2>> pval;
    pval.reserve(triples);
    const FieldElement one = F.one();
    for (unsigned t = 0; t < triples; ++t) {
        const FieldElement &a = x[3 * t], &b = x[3 * t + 1], &c = x[3 * t + 2];
        const FieldElement p0 = F.add(F.mul(a, b), c);
        const FieldElement a1 = F.add(a, one), b1 = F.add(b, one);
        const FieldElement p1 = F.add(F.mul(a1, b1), F.add(c, one));
        pval.push_back({p0, p1});
    }

    auto decode = [&](u32 mask) {
        std::vector<int> c(triples);
        for (unsigned j = 0; j < triples; ++j)
            c[j] = (mask >> j) & 1u;
        return c;
    };

    HypersurfaceValue out{F.one(), std::nullopt};
    for (u32 mask : H.shift_vectors) {
        FieldElement qc = F.one();
        bool vanished = false;
        for (unsigned t = 0; t < triples && !vanished; ++t) {
            const FieldElement& factor = pval[t][(mask >> t) & 1u];
            if (F.is_zero(factor))
                vanished = true;
            else
                qc = F.mul(qc, factor);
        }
        if (vanished) {
            out.value = F.zero();
            out.vanishing_c = decode(mask);
            return out;
        }
        out.value = F.mul(out.value, qc);
    }
    return out;
}

SearchReport hypersurface_search(const std::vector<GroundSet>& classes,
                                 const StructuredHypersurface& H, u64 budget, SearchMode mode,
                                 u64 seed, unsigned workers) {
    if (classes.size() != H.arity)
        throw std::invalid_argument("need exactly 6N coordinate classes");
    for (const auto& cl : classes)
        if (cl.elems.empty())
            throw std::invalid_argument("empty coordinate class");
    for (size_t j = 1; j < classes.size(); ++j)
        require_same_field(classes[0], classes[j]);
    const Field& F = *classes[0].field;
    if (workers == 0)
        workers = 1;

    // Scan orders: sorted element order, or a seeded shuffle per coordinate.
    std::vector<std::vector<u64>> order(H.arity);
    for (unsigned j = 0; j < H.arity; ++j) {
        order[j] = classes[j].elems;
        if (seed != 0) {
            std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (j + 1));
            std::shuffle(order[j].begin(), order[j].end(), rng);
        }
    }

    SearchReport rep;
    rep.found = false;
    rep.evaluations = 0;
    rep.fraction_searched = 0.0;

    auto verify = [&](const std::vector<u64>& witness) {
        std::vector<FieldElement> xs;
        xs.reserve(witness.size());
        for (u64 idx : witness)
            xs.push_back(F.from_index(idx));
        auto val = evaluate_R(H, xs);
        if (!F.is_zero(val.value) || !val.vanishing_c)
            throw std::logic_error("search produced a tuple that does not lie on R = 0");
        rep.vanishing_c = *val.vanishing_c;
    };

    if (mode == SearchMode::block_solve) {
        // P(a, b, .) is a bijection in the last slot: a block's second factor
        // vanishes iff z = -(a+s)(b+s) - s, so only membership is searched.
        double total = 0.0;
        for (unsigned i = 0; i < H.N; ++i)
            total += 2.0 * static_cast<double>(classes[6 * i + 3].elems.size()) *
                     static_cast<double>(classes[6 * i + 4].elems.size());
        u64 used = 0;
        for (unsigned i = 0; i < H.N && !rep.found; ++i) {
            for (int s = 0; s <= 1 && !rep.found; ++s) {
                const FieldElement fs = F.from_scalar(s);
                for (u64 ai : order[6 * i + 3]) {
                    if (rep.found || used >= budget)
                        break;
                    const FieldElement as = F.add(F.from_index(ai), fs);
                    for (u64 bi : order[6 * i + 4]) {
                        if (used >= budget)
                            break;
                        ++used;
                        const FieldElement bs = F.add(F.from_index(bi), fs);
                        const FieldElement z = F.sub(F.neg(F.mul(as, bs)), fs);
                        const u64 zi = F.index(z);
                        if (ground_set_contains(classes[6 * i + 5], zi)) {
                            std::vector<u64> witness(H.arity);
                            for (unsigned j = 0; j < H.arity; ++j)
                                witness[j] = classes[j].elems.front();
                            witness[6 * i + 3] = ai;
                            witness[6 * i + 4] = bi;
                            witness[6 * i + 5] = zi;
                            rep.found = true;
                            rep.witness = std::move(witness);
                            break;
                        }
                    }
                }
                if (used >= budget)
                    break;
            }
            if (used >= budget)
                break;
        }
        rep.evaluations = used;
        rep.fraction_searched = total > 0 ? std::min(1.0, static_cast<double>(used) / total) : 0.0;
        if (rep.found)
            verify(rep.witness);
        return rep;
    }

    // Lexicographic product scan, sharded over the first coordinate.
    double total = 1.0;
    for (unsigned j = 0; j < H.arity; ++j)
        total *= static_cast<double>(order[j].size());

    const size_t n0 = order[0].size();
    const unsigned W = static_cast<unsigned>(std::min<size_t>(workers, n0));
    struct WorkerFind {
        bool found = false;
        std::vector<u64> witness;
        u64 used = 0;
    };
    std::vector<WorkerFind> finds(W);

    auto scan = [&](unsigned w, size_t lo0, size_t hi0, u64 share) {
        WorkerFind& out = finds[w];
        std::vector<size_t> pos(H.arity, 0);
        pos[0] = lo0;
        std::vector<FieldElement> xs(H.arity, F.zero());
        if (lo0 >= hi0)
            return;
        for (;;) {
            if (out.used >= share)
                return;
            for (unsigned j = 0; j < H.arity; ++j)
                xs[j] = F.from_index(order[j][pos[j]]);
            ++out.used;
            auto val = evaluate_R(H, xs);
            if (F.is_zero(val.value)) {
                out.found = true;
                out.witness.resize(H.arity);
                for (unsigned j = 0; j < H.arity; ++j)
                    out.witness[j] = order[j][pos[j]];
                return;
            }
            // odometer: last coordinate moves fastest
            unsigned j = H.arity;
            while (j-- > 0) {
                const size_t limit = j == 0 ? hi0 : order[j].size();
                if (++pos[j] < limit)
                    break;
                if (j == 0)
                    return; // shard exhausted
                pos[j] = 0;
            }
        }
    };

    const size_t chunk = (n0 + W - 1) / W;
    const u64 share = budget / W;
    const u64 extra = budget % W;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < W; ++w) {
        const size_t lo0 = static_cast<size_t>(w) * chunk;
        const size_t hi0 = std::min(n0, lo0 + chunk);
        const u64 b = share + (w < extra ? 1 : 0);
        pool.emplace_back(scan, w, lo0, hi0, b);
    }
    for (auto& t : pool)
        t.join();

    for (const auto& f : finds) {
        rep.evaluations += f.used;
        if (f.found && (!rep.found || f.witness < rep.witness)) {
            rep.found = true;
            rep.witness = f.witness;
        }
    }
    rep.fraction_searched =
        total > 0 ? std::min(1.0, static_cast<double>(rep.evaluations) / total) : 0.0;
    if (rep.found)
        verify(rep.witness);
    return rep;
}

PairProductCount distinct_pair_products(const GroundSet& A) {
    const Field& F = *A.field;
    std::vector<u64> products;
    const size_t n = A.elems.size();
    products.reserve(n * (n + 1) / 2);
    for (size_t i = 0; i < n; ++i) {
        const FieldElement a = F.from_index(A.elems[i]);
        for (size_t j = i; j < n; ++j)
            products.push_back(F.index(F.mul(a, F.from_index(A.elems[j]))));
    }
    PairProductCount res;
    res.pairs_with_repetition = products.size();
    std::sort(products.begin(), products.end());
    products.erase(std::unique(products.begin(), products.end()), products.end());
    res.distinct_products = products.size();
    res.all_distinct = res.distinct_products == res.pairs_with_repetition;
    return res;
}

} // namespace isoclass
