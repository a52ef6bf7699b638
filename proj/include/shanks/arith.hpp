#pragma once

// Word-size modular arithmetic and trial-division factorization shared by
// every module.

#include <cstdint>
#include <optional>
#include <vector>

namespace shanks {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline constexpr u64 kDefaultFactorCeiling = 10'000'000;

/// Ceilings for brute-force loops and trial division. An unset iteration
/// ceiling means "m^3" for a period computation modulo m.
struct Ceilings {
  u64 factor = kDefaultFactorCeiling;
  std::optional<u64> iterations;

  /// Defaults, overridden by SHANKS_CEILING (applies to both) when set.
  static Ceilings from_env();
};

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  if (m <= (u64{1} << 32)) return (a * b) % m;
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 neg_mod(u64 a, u64 m) { return a == 0 ? 0 : m - a; }

/// Reduces a signed value into [0, m).
inline u64 reduce_signed(i64 v, u64 m) {
  if (v >= 0) return static_cast<u64>(v) % m;
  u64 r = static_cast<u64>(-(v + 1)) % m;  // avoids overflow at INT64_MIN
  return m - 1 - r;
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
u64 inv_mod(u64 a, u64 m);

u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);

/// Deterministic for all 64-bit inputs.
bool is_prime(u64 n);

/// Returns p if n == p^e for a prime p and e >= 1.
std::optional<u64> prime_base_of_power(u64 n, unsigned& exponent);

struct PrimePower {
  u64 prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Trial division by every d <= ceiling. A leftover cofactor is accepted when
/// it is prime; otherwise the factorization is undetermined (nullopt).
std::optional<std::vector<PrimePower>> factor_trial(u64 n, u64 ceiling = kDefaultFactorCeiling);

/// As factor_trial, but throws CeilingExceeded instead of returning nullopt.
std::vector<PrimePower> factor_or_throw(u64 n, u64 ceiling = kDefaultFactorCeiling);

std::vector<u64> primes_in_range(u64 lo, u64 hi);

}  // namespace shanks
