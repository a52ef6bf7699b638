#include "shanks/arith.hpp"

#include <cstdlib>
#include <string>

#include "shanks/errors.hpp"

namespace shanks {

Ceilings Ceilings::from_env() {
  Ceilings c;
  if (const char* env = std::getenv("SHANKS_CEILING"); env != nullptr && *env != '\0') {
    try {
      u64 v = std::stoull(env);
      c.factor = v;
      c.iterations = v;
    } catch (const std::exception&) {
      throw DomainError(std::string("SHANKS_CEILING is not an unsigned integer: ") + env);
    }
  }
  return c;
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 m) {
  // extended Euclid on signed 128-bit to stay exact for any 64-bit modulus
  __int128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("element is not invertible modulo " + std::to_string(m));
  __int128 res = old_s % static_cast<__int128>(m);
  if (res < 0) res += m;
  return static_cast<u64>(res);
}

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm_u64(u64 a, u64 b) { return a / gcd_u64(a, b) * b; }

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = static_cast<u64>(static_cast<u128>(x) * x % n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // this base set is exact below 3.3e24
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::optional<u64> prime_base_of_power(u64 n, unsigned& exponent) {
  if (n < 2) return std::nullopt;
  auto f = factor_trial(n);
  if (!f || f->size() != 1) return std::nullopt;
  exponent = f->front().exponent;
  return f->front().prime;
}

std::optional<std::vector<PrimePower>> factor_trial(u64 n, u64 ceiling) {
  std::vector<PrimePower> out;
  if (n < 2) return out;
  auto strip = [&](u64 d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.push_back({d, e});
  };
  strip(2);
  u64 d = 3;
  for (; d <= ceiling && d <= n / d; d += 2) strip(d);
  if (n > 1) {
    if (d > n / d || is_prime(n)) {
      out.push_back({n, 1});
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::vector<PrimePower> factor_or_throw(u64 n, u64 ceiling) {
  auto f = factor_trial(n, ceiling);
  if (!f) {
    throw CeilingExceeded("trial division up to " + std::to_string(ceiling) +
                          " could not factor " + std::to_string(n));
  }
  return *std::move(f);
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 n = lo < 2 ? 2 : lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == UINT64_MAX) break;
  }
  return out;
}

}  // namespace shanks
