#include "isoclass/finite_field.hpp"

#include <sstream>
#include <stdexcept>

namespace isoclass {

namespace {

inline u64 addm(u64 a, u64 b, u64 p) {
    u64 r = a + b; // p < 2^63, so no wrap
    return r >= p ? r - p : r;
}

inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 invmod_prime(u64 a, u64 p) {
    if (a == 0)
        throw std::domain_error("division by zero in F_p");
    return powmod(a, p - 2, p);
}

using Poly = std::vector<u64>; // coefficient of t^i at position i, entries in [0, p)

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

// Remainder of f modulo monic g.
Poly poly_rem_monic(Poly f, const Poly& g, u64 p) {
    const int dg = degree(g);
    for (int i = degree(f); i >= dg; --i) {
        u64 c = f[i];
        if (c == 0)
            continue;
        f[i] = 0;
        for (int j = 0; j < dg; ++j)
            f[i - dg + j] = subm(f[i - dg + j], mulmod(c, g[j], p), p);
    }
    trim(f);
    return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, u64 p) {
    if (a.empty() || b.empty())
        return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = addm(prod[i + j], mulmod(a[i], b[j], p), p);
    }
    return poly_rem_monic(std::move(prod), g, p);
}

// t^e modulo the monic polynomial g.
Poly poly_xpow(u64 e, const Poly& g, u64 p) {
    Poly result{1};
    Poly base{0, 1};
    base = poly_rem_monic(base, g, p);
    while (e > 0) {
        if (e & 1)
            result = poly_mulmod(result, base, g, p);
        base = poly_mulmod(base, base, g, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // Make b monic so poly_rem_monic applies.
        u64 lead = b.back();
        if (lead != 1) {
            u64 il = invmod_prime(lead, p);
            for (u64& c : b)
                c = mulmod(c, il, p);
        }
        Poly r = poly_rem_monic(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's irreducibility test for a monic polynomial of degree k over F_p.
bool poly_is_irreducible(const Poly& f, u64 p) {
    const int k = degree(f);
    if (k <= 0)
        return false;
    if (k == 1)
        return true;
    const Poly x{0, 1};
    for (auto [r, e] : factorize(static_cast<u64>(k))) {
        (void)e;
        u64 pe = checked_pow(p, static_cast<unsigned>(k / static_cast<int>(r)));
        Poly h = poly_xpow(pe, f, p);
        // gcd(x^{p^{k/r}} - x, f) must be trivial
        Poly diff = h;
        if (diff.size() < 2)
            diff.resize(2, 0);
        diff[1] = subm(diff[1], 1, p);
        trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (degree(g) > 0)
            return false;
    }
    u64 pk = checked_pow(p, static_cast<unsigned>(k));
    Poly h = poly_xpow(pk, f, p);
    return h == poly_rem_monic(x, f, p);
}

// Lexicographically least monic irreducible of degree k over F_p, comparing
// the tuple (m_0, ..., m_{k-1}) of non-leading coefficients.
Poly least_irreducible(u64 p, unsigned k) {
    u64 q = checked_pow(p, k);
    for (u64 counter = 0; counter < q; ++counter) {
        Poly f(k + 1, 0);
        f[k] = 1;
        // Decode counter big-endian so m_0 varies slowest.
        u64 c = counter;
        for (unsigned i = 0; i < k; ++i) {
            u64 place = checked_pow(p, k - 1 - i);
            f[i] = c / place;
            c %= place;
        }
        if (poly_is_irreducible(f, p))
            return f;
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

} // namespace

bool FieldElement::operator==(const FieldElement& o) const {
    if (owner && o.owner && !owner->same_as(*o.owner))
        return false;
    return coeffs == o.coeffs;
}

Field::Field(u64 p, unsigned k, std::vector<u64> modulus)
    : p_(p), k_(k), q_(checked_pow(p, k)), modulus_(std::move(modulus)) {}

Field Field::make(u64 p, unsigned k, std::optional<std::vector<u64>> modulus) {
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic must be prime");
    if (k < 1 || k > kMaxExtensionDegree)
        throw std::invalid_argument("extension degree must be between 1 and 8");
    checked_pow(p, k); // rejects q >= 2^63
    std::vector<u64> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != k + 1)
            throw std::invalid_argument("modulus must have degree k");
        for (u64& c : mod)
            c %= p;
        if (mod[k] != 1)
            throw std::invalid_argument("modulus must be monic");
        if (!poly_is_irreducible(mod, p))
            throw std::invalid_argument("modulus is reducible over F_p");
    } else {
        mod = least_irreducible(p, k);
    }
    return Field(p, k, std::move(mod));
}

void Field::check_owner(const FieldElement& x) const {
    if (!x.owner || !same_as(*x.owner))
        throw std::invalid_argument("element does not belong to this field");
}

FieldElement Field::zero() const {
    FieldElement r;
    r.owner = this;
    return r;
}

FieldElement Field::one() const { return from_scalar(1); }

FieldElement Field::from_scalar(i64 n) const {
    FieldElement r;
    r.owner = this;
    i64 m = n % static_cast<i64>(p_);
    if (m < 0)
        m += static_cast<i64>(p_);
    r.coeffs[0] = static_cast<u64>(m);
    return r;
}

FieldElement Field::from_coeffs(const std::vector<u64>& c) const {
    if (c.size() > k_)
        throw std::invalid_argument("coefficient vector longer than extension degree");
    FieldElement r;
    r.owner = this;
    for (size_t i = 0; i < c.size(); ++i)
        r.coeffs[i] = c[i] % p_;
    return r;
}

FieldElement Field::from_index(u64 idx) const {
    if (idx >= q_)
        throw std::invalid_argument("element index out of range");
    FieldElement r;
    r.owner = this;
    for (unsigned i = 0; i < k_; ++i) {
        r.coeffs[i] = idx % p_;
        idx /= p_;
    }
    return r;
}

u64 Field::index(const FieldElement& x) const {
    check_owner(x);
    u64 idx = 0;
    for (unsigned i = k_; i-- > 0;)
        idx = idx * p_ + x.coeffs[i];
    return idx;
}

FieldElement Field::add(const FieldElement& x, const FieldElement& y) const {
    check_owner(x);
    check_owner(y);
    FieldElement r;
    r.owner = this;
    for (unsigned i = 0; i < k_; ++i)
        r.coeffs[i] = addm(x.coeffs[i], y.coeffs[i], p_);
    return r;
}

FieldElement Field::sub(const FieldElement& x, const FieldElement& y) const {
    check_owner(x);
    check_owner(y);
    FieldElement r;
    r.owner = this;
    for (unsigned i = 0; i < k_; ++i)
        r.coeffs[i] = subm(x.coeffs[i], y.coeffs[i], p_);
    return r;
}

FieldElement Field::neg(const FieldElement& x) const {
    check_owner(x);
    FieldElement r;
    r.owner = this;
    for (unsigned i = 0; i < k_; ++i)
        r.coeffs[i] = x.coeffs[i] == 0 ? 0 : p_ - x.coeffs[i];
    return r;
}

FieldElement Field::mul(const FieldElement& x, const FieldElement& y) const {
    check_owner(x);
    check_owner(y);
    FieldElement r;
    r.owner = this;
    if (k_ == 1) {
        r.coeffs[0] = mulmod(x.coeffs[0], y.coeffs[0], p_);
        return r;
    }
    u64 prod[2 * kMaxExtensionDegree - 1] = {0};
    for (unsigned i = 0; i < k_; ++i) {
        if (x.coeffs[i] == 0)
            continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = addm(prod[i + j], mulmod(x.coeffs[i], y.coeffs[j], p_), p_);
    }
    for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
        u64 c = prod[i];
        if (c == 0)
            continue;
        prod[i] = 0;
        for (unsigned j = 0; j < k_; ++j)
            prod[i - k_ + j] = subm(prod[i - k_ + j], mulmod(c, modulus_[j], p_), p_);
    }
    for (unsigned i = 0; i < k_; ++i)
        r.coeffs[i] = prod[i];
    return r;
}

bool Field::is_zero(const FieldElement& x) const {
    check_owner(x);
    for (unsigned i = 0; i < k_; ++i)
        if (x.coeffs[i] != 0)
            return false;
    return true;
}

FieldElement Field::pow(const FieldElement& x, u64 e) const {
    check_owner(x);
    FieldElement result = one();
    FieldElement base = x;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement Field::inv(const FieldElement& x) const {
    check_owner(x);
    if (is_zero(x))
        throw std::domain_error("division by zero in finite field");
    if (k_ == 1) {
        FieldElement r;
        r.owner = this;
        r.coeffs[0] = invmod_prime(x.coeffs[0], p_);
        return r;
    }
    return pow(x, q_ - 2);
}

FieldElement Field::div(const FieldElement& x, const FieldElement& y) const {
    return mul(x, inv(y));
}

FieldElement Field::frobenius(const FieldElement& x) const { return pow(x, p_); }

bool Field::subfield_membership(const FieldElement& x, unsigned d) const {
    check_owner(x);
    if (d == 0 || k_ % d != 0)
        throw std::invalid_argument("subfield degree must divide the extension degree");
    FieldElement y = x;
    for (unsigned i = 0; i < d; ++i)
        y = frobenius(y);
    return y == x;
}

std::string Field::to_string(const FieldElement& x) const {
    check_owner(x);
    std::ostringstream os;
    bool first = true;
    for (unsigned i = k_; i-- > 0;) {
        u64 c = x.coeffs[i];
        if (c == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1)
                os << c << "*";
            os << "t";
            if (i > 1)
                os << "^" << i;
        }
    }
    if (first)
        os << "0";
    return os.str();
}

FieldElement field_arithmetic(const Field& F, const FieldElement& x, const FieldElement& y,
                              const std::string& op, u64 exponent) {
    if (op == "add")
        return F.add(x, y);
    if (op == "sub")
        return F.sub(x, y);
    if (op == "mul")
        return F.mul(x, y);
    if (op == "div")
        return F.div(x, y);
    if (op == "pow")
        return F.pow(x, exponent);
    if (op == "frobenius")
        return F.frobenius(x);
    throw std::invalid_argument("unknown field operation: " + op);
}

} // namespace isoclass
