#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "isoclass/intmath.hpp"

namespace isoclass {

// Dense coefficient cap; all experiments stay at small extension degree.
inline constexpr unsigned kMaxExtensionDegree = 8;

class Field;

/// Element of F_{p^k} in the polynomial basis: coeffs[i] is the coefficient of
/// t^i, reduced mod p. Plain data; arithmetic goes through the owning Field.
struct FieldElement {
    std::array<u64, kMaxExtensionDegree> coeffs{};
    const Field* owner = nullptr;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

/// Descriptor of F_{p^k}: characteristic, degree, and a monic irreducible
/// modulus of degree k over F_p. Immutable after construction; safe to share.
///
/// Elements carry a canonical index in [0, q): index = sum coeffs[i] * p^i.
/// Enumeration order is index order. The default modulus is the
/// lexicographically least monic irreducible, comparing the coefficient tuple
/// (m_0, ..., m_{k-1}) read low-to-high, so runs are reproducible.
class Field {
  public:
    static Field make(u64 p, unsigned k, std::optional<std::vector<u64>> modulus = std::nullopt);

    u64 p() const { return p_; }
    unsigned k() const { return k_; }
    u64 q() const { return q_; }
    /// Modulus coefficients, ascending, length k+1, monic.
    const std::vector<u64>& modulus() const { return modulus_; }

    bool same_as(const Field& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_scalar(i64 n) const;
    FieldElement from_coeffs(const std::vector<u64>& c) const;
    FieldElement from_index(u64 idx) const;
    u64 index(const FieldElement& x) const;

    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement neg(const FieldElement& x) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    FieldElement inv(const FieldElement& x) const;
    FieldElement div(const FieldElement& x, const FieldElement& y) const;
    FieldElement pow(const FieldElement& x, u64 e) const;
    /// x^p, the absolute Frobenius.
    FieldElement frobenius(const FieldElement& x) const;

    bool is_zero(const FieldElement& x) const;

    /// True iff x lies in the subfield of order p^d, decided by x^{p^d} = x.
    /// d must divide k.
    bool subfield_membership(const FieldElement& x, unsigned d) const;

    std::string to_string(const FieldElement& x) const;

  private:
    Field(u64 p, unsigned k, std::vector<u64> modulus);
    void check_owner(const FieldElement& x) const;

    u64 p_;
    unsigned k_;
    u64 q_;
    std::vector<u64> modulus_;
};

/// Named op dispatch used by the CLI; op is one of add, sub, mul, div, pow,
/// frobenius (pow reads an exponent from `exponent`, frobenius ignores y).
FieldElement field_arithmetic(const Field& F, const FieldElement& x, const FieldElement& y,
                              const std::string& op, u64 exponent = 0);

} // namespace isoclass
