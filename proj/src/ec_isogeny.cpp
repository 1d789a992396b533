#include "isoclass/ec_isogeny.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace isoclass {

mpz_class trace_sequence(i64 a, u64 q, unsigned n) {
    prime_power_split(q);
    if (mpz_class(static_cast<long>(a)) * a > 4 * mpz_class(static_cast<unsigned long>(q)))
        throw std::invalid_argument("trace violates the Weil bound a^2 <= 4q");
    mpz_class prev = 2, cur = a;
    if (n == 0)
        return prev;
    for (unsigned m = 1; m < n; ++m) {
        mpz_class next = a * cur - static_cast<long>(q) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::pair<u64, i64> conductor(const mpz_class& a_n, u64 Q) {
    mpz_class delta = a_n * a_n - 4 * mpz_class(static_cast<unsigned long>(Q));
    if (delta >= 0)
        throw std::domain_error("a_n^2 >= 4Q: not an ordinary Weil datum for an elliptic curve");
    mpz_class mag = -delta;
    if (mpz_sizeinbase(mag.get_mpz_t(), 2) > 60)
        throw std::overflow_error("discriminant too large to factor here");
    auto [s, d] = squarefree_decompose(mag.get_ui());
    if (d % 4 == 3)
        return {s, -static_cast<i64>(d)};
    // delta = 0 or 1 mod 4 forces s even in this branch
    return {s / 2, -4 * static_cast<i64>(d)};
}

FrobeniusData make_frobenius(i64 a, u64 q) {
    auto [p, k] = prime_power_split(q);
    (void)k;
    auto [f1, D_K] = conductor(mpz_class(static_cast<long>(a)), q);
    bool ordinary = std::gcd(a < 0 ? static_cast<u64>(-a) : static_cast<u64>(a), p) == 1;
    return FrobeniusData{q, a, D_K, f1, ordinary};
}

u64 isogeny_class_size(i64 a, u64 q, unsigned n) {
    auto [p, k] = prime_power_split(q);
    (void)k;
    if (n == 0)
        throw std::invalid_argument("extension degree must be positive");
    if (std::gcd(a < 0 ? static_cast<u64>(-a) : static_cast<u64>(a), p) != 1)
        throw std::domain_error("supersingular trace: size formula requires gcd(a, p) = 1");
    mpz_class a_n = trace_sequence(a, q, n);
    u64 Q = checked_pow(q, n);
    auto [f_n, D_K] = conductor(a_n, Q);
    u64 total = 0;
    for (u64 d : divisors(f_n))
        total += class_number_order(D_K, d);
    return total;
}

IsogenyClassSummary isogeny_class_summary(i64 a, u64 q, unsigned n) {
    IsogenyClassSummary s;
    s.base = make_frobenius(a, q);
    s.n = n;
    s.a_n = trace_sequence(a, q, n);
    u64 Q = checked_pow(q, n);
    auto [f_n, D_K] = conductor(s.a_n, Q);
    (void)D_K;
    s.f_n = f_n;
    s.size = isogeny_class_size(a, q, n);
    return s;
}

namespace {

constexpr u64 kCensusCap = 2500; // naive point counting beyond this is pointless

/// Tables for brute-force work over one field: elements by index, cubes,
/// and the quadratic character chi (0 at 0, else +-1).
struct CurveScanTables {
    Field F;
    std::vector<FieldElement> elems;
    std::vector<FieldElement> cubes;
    std::vector<int> chi;

    explicit CurveScanTables(Field field) : F(std::move(field)) {
        u64 q = F.q();
        elems.reserve(q);
        cubes.reserve(q);
        for (u64 i = 0; i < q; ++i) {
            FieldElement x = F.from_index(i);
            elems.push_back(x);
            cubes.push_back(F.mul(F.mul(x, x), x));
        }
        chi.assign(q, -1);
        chi[0] = 0;
        for (u64 i = 1; i < q; ++i)
            chi[F.index(F.mul(elems[i], elems[i]))] = 1;
    }

    /// Trace of Frobenius of y^2 = x^3 + Ax + B: -sum_x chi(x^3 + Ax + B).
    /// Ax holds A*x for every x, hoisted by the caller.
    i64 trace(const std::vector<FieldElement>& Ax, const FieldElement& B) const {
        i64 s = 0;
        for (u64 i = 0; i < F.q(); ++i)
            s += chi[F.index(F.add(F.add(cubes[i], Ax[i]), B))];
        return -s;
    }

    bool singular(const FieldElement& A, const FieldElement& B) const {
        FieldElement d = F.add(F.mul(F.from_scalar(4), F.mul(F.mul(A, A), A)),
                               F.mul(F.from_scalar(27), F.mul(B, B)));
        return F.is_zero(d);
    }

    FieldElement j_invariant(const FieldElement& A, const FieldElement& B) const {
        FieldElement a3 = F.mul(F.from_scalar(4), F.mul(F.mul(A, A), A));
        FieldElement den = F.add(a3, F.mul(F.from_scalar(27), F.mul(B, B)));
        return F.div(F.mul(F.from_scalar(1728), a3), den);
    }
};

/// Distinct (u^4, u^6) pairs, for canonicalizing (A, B) under isomorphism.
std::vector<std::pair<FieldElement, FieldElement>> twist_pairs(const Field& F) {
    std::set<std::pair<u64, u64>> seen;
    std::vector<std::pair<FieldElement, FieldElement>> out;
    for (u64 i = 1; i < F.q(); ++i) {
        FieldElement u = F.from_index(i);
        FieldElement u2 = F.mul(u, u);
        FieldElement u4 = F.mul(u2, u2);
        FieldElement u6 = F.mul(u4, u2);
        if (seen.emplace(F.index(u4), F.index(u6)).second)
            out.emplace_back(u4, u6);
    }
    return out;
}

bool is_canonical_pair(const CurveScanTables& T,
                       const std::vector<std::pair<FieldElement, FieldElement>>& twists,
                       const FieldElement& A, const FieldElement& B, u64 iA, u64 iB) {
    for (const auto& [u4, u6] : twists) {
        u64 cA = T.F.index(T.F.mul(u4, A));
        u64 cB = T.F.index(T.F.mul(u6, B));
        if (cA < iA || (cA == iA && cB < iB))
            return false;
    }
    return true;
}

void check_oracle_field(u64 q, u64 p) {
    if (p <= 3)
        throw std::invalid_argument("short Weierstrass enumeration requires p > 3");
    if (q > kCensusCap)
        throw std::invalid_argument("exhaustive enumeration capped at q <= 2500");
}

} // namespace

std::map<i64, u64> enumerate_curves_by_trace(u64 q, unsigned workers) {
    auto [p, k] = prime_power_split(q);
    check_oracle_field(q, p);
    CurveScanTables T{Field::make(p, k)};
    auto twists = twist_pairs(T.F);

    if (workers == 0)
        workers = 1;
    workers = static_cast<unsigned>(std::min<u64>(workers, q));

    std::vector<std::map<i64, u64>> partial(workers);
    auto scan = [&](unsigned w) {
        u64 lo = q * w / workers, hi = q * (w + 1) / workers;
        auto& counts = partial[w];
        std::vector<FieldElement> Ax(q);
        for (u64 iA = lo; iA < hi; ++iA) {
            const FieldElement& A = T.elems[iA];
            for (u64 i = 0; i < q; ++i)
                Ax[i] = T.F.mul(A, T.elems[i]);
            for (u64 iB = 0; iB < q; ++iB) {
                const FieldElement& B = T.elems[iB];
                if (T.singular(A, B))
                    continue;
                if (!is_canonical_pair(T, twists, A, B, iA, iB))
                    continue;
                ++counts[T.trace(Ax, B)];
            }
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(scan, w);
        for (auto& t : pool)
            t.join();
    }
    std::map<i64, u64> merged;
    for (const auto& m : partial)
        for (const auto& [trace, n] : m)
            merged[trace] += n;
    return merged;
}

std::vector<u64> isogeny_class_members(u64 q, i64 a) {
    auto [p, k] = prime_power_split(q);
    check_oracle_field(q, p);
    if (std::gcd(a < 0 ? static_cast<u64>(-a) : static_cast<u64>(a), p) != 1)
        throw std::domain_error("supersingular trace: members require gcd(a, p) = 1");
    conductor(mpz_class(static_cast<long>(a)), q); // enforces a^2 < 4q

    CurveScanTables T{Field::make(p, k)};
    std::set<u64> js;
    std::vector<FieldElement> Ax(q);
    for (u64 iA = 0; iA < q; ++iA) {
        const FieldElement& A = T.elems[iA];
        for (u64 i = 0; i < q; ++i)
            Ax[i] = T.F.mul(A, T.elems[i]);
        for (u64 iB = 0; iB < q; ++iB) {
            const FieldElement& B = T.elems[iB];
            if (T.singular(A, B))
                continue;
            i64 t = T.trace(Ax, B);
            if (t == a || t == -a)
                js.insert(T.F.index(T.j_invariant(A, B)));
        }
    }
    return std::vector<u64>(js.begin(), js.end());
}

namespace {

/// Exhaustive long-Weierstrass enumeration over F_{p^2}; needed at p = 2, 3
/// where y^2 = x^3 + Ax + B misses curves.
std::vector<u64> supersingular_small_char(u64 p) {
    Field F = Field::make(p, 2);
    const u64 q = F.q();
    std::vector<FieldElement> elems;
    for (u64 i = 0; i < q; ++i)
        elems.push_back(F.from_index(i));
    auto sc = [&](long n) { return F.from_scalar(n); };

    std::set<u64> seen, ss;
    u64 a[5];
    for (a[0] = 0; a[0] < q; ++a[0])
        for (a[1] = 0; a[1] < q; ++a[1])
            for (a[2] = 0; a[2] < q; ++a[2])
                for (a[3] = 0; a[3] < q; ++a[3])
                    for (a[4] = 0; a[4] < q; ++a[4]) {
                        const FieldElement &a1 = elems[a[0]], &a2 = elems[a[1]],
                                           &a3 = elems[a[2]], &a4 = elems[a[3]],
                                           &a6 = elems[a[4]];
                        FieldElement b2 = F.add(F.mul(a1, a1), F.mul(sc(4), a2));
                        FieldElement b4 = F.add(F.mul(sc(2), a4), F.mul(a1, a3));
                        FieldElement b6 = F.add(F.mul(a3, a3), F.mul(sc(4), a6));
                        FieldElement b8 = F.sub(
                            F.add(F.add(F.mul(F.mul(a1, a1), a6),
                                        F.mul(sc(4), F.mul(a2, a6))),
                                  F.sub(F.mul(a2, F.mul(a3, a3)),
                                        F.mul(a1, F.mul(a3, a4)))),
                            F.mul(a4, a4));
                        FieldElement disc =
                            F.add(F.sub(F.sub(F.neg(F.mul(F.mul(b2, b2), b8)),
                                              F.mul(sc(8), F.mul(F.mul(b4, b4), b4))),
                                        F.mul(sc(27), F.mul(b6, b6))),
                                  F.mul(sc(9), F.mul(b2, F.mul(b4, b6))));
                        if (F.is_zero(disc))
                            continue;
                        FieldElement c4 = F.sub(F.mul(b2, b2), F.mul(sc(24), b4));
                        FieldElement j = F.div(F.mul(F.mul(c4, c4), c4), disc);
                        u64 ij = F.index(j);
                        if (!seen.insert(ij).second)
                            continue;
                        // Count affine points by brute force.
                        u64 N = 1;
                        for (u64 ix = 0; ix < q; ++ix) {
                            const FieldElement& x = elems[ix];
                            FieldElement rhs = F.add(
                                F.add(F.mul(F.mul(x, x), x), F.mul(a2, F.mul(x, x))),
                                F.add(F.mul(a4, x), a6));
                            for (u64 iy = 0; iy < q; ++iy) {
                                const FieldElement& y = elems[iy];
                                FieldElement lhs = F.add(
                                    F.mul(y, y), F.add(F.mul(a1, F.mul(x, y)), F.mul(a3, y)));
                                if (lhs == rhs)
                                    ++N;
                            }
                        }
                        i64 t = static_cast<i64>(q) + 1 - static_cast<i64>(N);
                        if (((t % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p) == 0)
                            ss.insert(ij);
                    }
    return std::vector<u64>(ss.begin(), ss.end());
}

} // namespace

std::vector<u64> supersingular_j_invariants(u64 p) {
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime");
    if (p <= 3)
        return supersingular_small_char(p);

    CurveScanTables T{Field::make(p, 2)};
    const u64 q = T.F.q();
    const FieldElement j1728 = T.F.from_scalar(1728);
    std::vector<u64> ss;
    std::vector<FieldElement> Ax(q);
    for (u64 ij = 0; ij < q; ++ij) {
        FieldElement j = T.elems[ij];
        FieldElement A, B;
        if (T.F.is_zero(j)) {
            A = T.F.zero();
            B = T.F.one();
        } else if (j == j1728) {
            A = T.F.one();
            B = T.F.zero();
        } else {
            FieldElement d = T.F.sub(j1728, j);
            A = T.F.mul(T.F.from_scalar(3), T.F.mul(j, d));
            B = T.F.mul(T.F.from_scalar(2), T.F.mul(j, T.F.mul(d, d)));
        }
        for (u64 i = 0; i < q; ++i)
            Ax[i] = T.F.mul(A, T.elems[i]);
        i64 t = T.trace(Ax, B);
        if (((t % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p) == 0)
            ss.push_back(ij);
    }
    return ss;
}

std::vector<u64> supersingular_j_invariants_all_models(u64 p) {
    if (!is_prime(p) || p <= 3)
        throw std::invalid_argument("all-models detector requires prime p > 3");
    CurveScanTables T{Field::make(p, 2)};
    const u64 q = T.F.q();
    std::set<u64> decided, ss;
    std::vector<FieldElement> Ax(q);
    for (u64 iA = 0; iA < q; ++iA) {
        const FieldElement& A = T.elems[iA];
        bool hoisted = false;
        for (u64 iB = 0; iB < q; ++iB) {
            const FieldElement& B = T.elems[iB];
            if (T.singular(A, B))
                continue;
            u64 ij = T.F.index(T.j_invariant(A, B));
            if (!decided.insert(ij).second)
                continue;
            if (!hoisted) {
                for (u64 i = 0; i < q; ++i)
                    Ax[i] = T.F.mul(A, T.elems[i]);
                hoisted = true;
            }
            i64 t = T.trace(Ax, B);
            if (((t % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p) == 0)
                ss.insert(ij);
        }
    }
    return std::vector<u64>(ss.begin(), ss.end());
}

} // namespace isoclass
