#include "isoclass/class_groups.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace isoclass {

namespace {

// (a/2) as a function of a mod 8: 0 on even, +1 at 1,7, -1 at 3,5.
constexpr int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};

} // namespace

int kronecker_symbol(const mpz_class& D, const mpz_class& m) {
    mpz_class a = D, b = m;
    if (b == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    if (mpz_even_p(a.get_mpz_t()) && mpz_even_p(b.get_mpz_t()))
        return 0;
    int k = 1;
    unsigned long v = 0;
    while (mpz_even_p(b.get_mpz_t())) {
        b /= 2;
        ++v;
    }
    if (v % 2 == 1)
        k = kTab2[mpz_fdiv_ui(a.get_mpz_t(), 8)];
    if (b < 0) {
        b = -b;
        if (a < 0)
            k = -k;
    }
    while (true) {
        if (a == 0)
            return b > 1 ? 0 : k;
        v = 0;
        while (mpz_even_p(a.get_mpz_t())) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1)
            k *= kTab2[mpz_fdiv_ui(b.get_mpz_t(), 8)];
        // Quadratic reciprocity for odd a, b (a may be negative).
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(b.get_mpz_t(), 4) == 3)
            k = -k;
        mpz_class r = a < 0 ? mpz_class(-a) : a;
        a = b % r;
        b = r;
    }
}

int kronecker_symbol(i64 D, i64 m) {
    return kronecker_symbol(mpz_class(static_cast<long>(D)), mpz_class(static_cast<long>(m)));
}

bool is_fundamental_discriminant(i64 D) {
    if (D == 1)
        return true;
    if (D == 0)
        return false;
    i64 r = ((D % 4) + 4) % 4;
    u64 mag;
    if (r == 1) {
        mag = static_cast<u64>(D < 0 ? -D : D);
        auto [s, d] = squarefree_decompose(mag);
        (void)d;
        return s == 1;
    }
    if (r != 0)
        return false;
    i64 m = D / 4;
    i64 rm = ((m % 4) + 4) % 4;
    if (rm != 2 && rm != 3)
        return false;
    mag = static_cast<u64>(m < 0 ? -m : m);
    auto [s, d] = squarefree_decompose(mag);
    (void)d;
    return s == 1;
}

u64 class_number_forms(i64 disc) {
    if (disc >= 0)
        throw std::invalid_argument("discriminant must be negative");
    if (disc < -(i64(1) << 62))
        throw std::overflow_error("discriminant magnitude too large for form enumeration");
    i64 r = ((disc % 4) + 4) % 4;
    if (r != 0 && r != 1)
        throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
    const i64 absD = -disc;
    u64 count = 0;
    for (i64 b = absD & 1; 3 * b * b <= absD; b += 2) {
        i64 num = (b * b + absD) / 4; // = (b^2 - disc)/4 = a*c
        for (i64 a = std::max<i64>(b, 1); a * a <= num; ++a) {
            if (num % a != 0)
                continue;
            i64 c = num / a;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            ++count; // (a, b, c)
            if (b > 0 && b < a && a < c)
                ++count; // (a, -b, c)
        }
    }
    return count;
}

namespace {

u64 fundamental_class_number(i64 D_K) {
    static std::mutex mu;
    static std::map<i64, u64> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(D_K);
        if (it != memo.end())
            return it->second;
    }
    u64 h = class_number_forms(D_K);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(D_K, h);
    return h;
}

u64 unit_index(i64 D_K, u64 f) {
    if (f == 1)
        return 1;
    if (D_K == -3)
        return 3;
    if (D_K == -4)
        return 2;
    return 1;
}

void check_order_args(i64 D_K, u64 f) {
    if (D_K >= 0 || !is_fundamental_discriminant(D_K))
        throw std::invalid_argument("D_K must be a negative fundamental discriminant");
    if (f < 1)
        throw std::invalid_argument("conductor must be positive");
}

} // namespace

u64 class_number_order(i64 D_K, u64 f) {
    check_order_args(D_K, f);
    mpz_class h = fundamental_class_number(D_K);
    // f * prod_{p|f} (1 - (D_K/p)/p)  ==  prod p^{e-1} (p - (D_K/p)), exactly.
    for (auto [p, e] : factorize(f)) {
        mpz_class factor = static_cast<long>(p) - kronecker_symbol(D_K, static_cast<i64>(p));
        for (int i = 1; i < e; ++i)
            factor *= static_cast<unsigned long>(p);
        h *= factor;
    }
    u64 u = unit_index(D_K, f);
    if (h % u != 0)
        throw std::logic_error("conductor formula did not divide by the unit index");
    h /= u;
    return static_cast<u64>(h.get_ui());
}

mpq_class class_number_order_no_p(i64 D_K, u64 f) {
    check_order_args(D_K, f);
    mpq_class h = fundamental_class_number(D_K);
    h *= f;
    for (auto [p, e] : factorize(f)) {
        (void)e;
        h *= 1 - kronecker_symbol(D_K, static_cast<i64>(p));
    }
    h /= unit_index(D_K, f);
    mpq_class r = h;
    r.canonicalize();
    return r;
}

OrderDescriptor make_order(i64 D_K, u64 f) {
    check_order_args(D_K, f);
    return OrderDescriptor{D_K, f};
}

} // namespace isoclass
