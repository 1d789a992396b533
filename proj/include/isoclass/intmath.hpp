#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace isoclass {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 mod);

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(u64 n);

/// Prime factorization, factors in increasing order. Trial division up to a
/// small bound, then Brent's rho for the cofactor.
std::vector<std::pair<u64, int>> factorize(u64 n);

/// All divisors of n, sorted increasing.
std::vector<u64> divisors(u64 n);

/// n = square * squarefree; returns (sqrt of the square part, squarefree part).
std::pair<u64, u64> squarefree_decompose(u64 n);

/// floor(sqrt(n)), exact.
u64 isqrt(u64 n);

/// p^k, throwing std::overflow_error once the result would reach 2^63.
u64 checked_pow(u64 p, unsigned k);

/// Smallest prime factor; requires n to be a prime power and returns (p, k).
std::pair<u64, unsigned> prime_power_split(u64 q);

} // namespace isoclass
