#include "shanks/recurrence.hpp"

#include <limits>
#include <string>

#include "shanks/errors.hpp"

namespace shanks {

namespace {

void require_prime(u64 p) {
  if (!is_prime(p)) throw DomainError("expected a prime, got " + std::to_string(p));
  if (p >= (u64{1} << 32)) throw DomainError("prime too large for p^2 arithmetic: " + std::to_string(p));
}

u64 default_ceiling(u64 m) {
  const u128 c = static_cast<u128>(m) * m * m;
  return c > std::numeric_limits<u64>::max() ? std::numeric_limits<u64>::max() : static_cast<u64>(c);
}

}  // namespace

std::string_view method_name(PeriodMethod m) { return m == PeriodMethod::brute ? "brute" : "fast"; }

Mat3 transition_matrix(i64 k, u64 m) {
  Mat3 a{};
  a[0][1] = 1 % m;
  a[1][2] = 1 % m;
  a[2][0] = 1 % m;
  a[2][1] = reduce_signed(k + 3, m);
  a[2][2] = reduce_signed(k, m);
  return a;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b, u64 m) {
  Mat3 r{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      u64 s = 0;
      for (std::size_t t = 0; t < 3; ++t) s = add_mod(s, mul_mod(a[i][t], b[t][j], m), m);
      r[i][j] = s;
    }
  }
  return r;
}

Mat3 mat_pow(const Mat3& a, u64 n, u64 m) {
  Mat3 result{};
  for (std::size_t i = 0; i < 3; ++i) result[i][i] = 1 % m;
  Mat3 b = a;
  while (n > 0) {
    if (n & 1) result = mat_mul(result, b, m);
    n >>= 1;
    if (n > 0) b = mat_mul(b, b, m);
  }
  return result;
}

bool is_identity(const Mat3& a, u64 m) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (a[i][j] != (i == j ? 1 % m : 0)) return false;
    }
  }
  return true;
}

PeriodRecord period_brute(i64 k, u64 m, std::optional<u64> ceiling) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (m < 2) throw DomainError("modulus must be >= 2, got " + std::to_string(m));
  const u64 limit = ceiling.value_or(default_ceiling(m));
  const u64 c1 = reduce_signed(k + 3, m);
  const u64 c0 = reduce_signed(k, m);
  u64 a = 0, b = 0, c = 1;
  for (u64 n = 1; n <= limit; ++n) {
    const u64 next = add_mod(add_mod(mul_mod(c0, c, m), mul_mod(c1, b, m), m), a, m);
    a = b;
    b = c;
    c = next;
    if (a == 0 && b == 0 && c == 1) return {k, m, n, PeriodMethod::brute};
  }
  throw CeilingExceeded("no return to (0,0,1) within " + std::to_string(limit) + " steps for k=" +
                        std::to_string(k) + ", m=" + std::to_string(m));
}

u64 ring_order(const RingElem& e, u64 n, const std::vector<PrimePower>& n_factors) {
  u64 ord = n;
  for (const auto& [r, exp] : n_factors) {
    for (unsigned j = 0; j < exp; ++j) {
      if (ord % r != 0 || !ring_pow(e, ord / r).is_one()) break;
      ord /= r;
    }
  }
  if (!ring_pow(e, ord).is_one()) throw InternalInconsistency("order computation: e^n != 1 for the supplied n");
  return ord;
}

PeriodRecord period_fast(i64 k, u64 p, const Ceilings& ceilings, u64 seed) {
  require_prime(p);
  return period_fast(k, p, classify_shanks_mod_p(k, p, seed), ceilings);
}

PeriodRecord period_fast(i64 k, u64 p, const Classification& cls, const Ceilings& ceilings) {
  require_prime(p);
  if (std::holds_alternative<IrreducibleModP>(cls)) {
    // norm of rho is 1, so its order divides p^2 + p + 1
    const u64 n = p * p + p + 1;
    const u64 ord = ring_order(RingElem::rho(k, p), n, factor_or_throw(n, ceilings.factor));
    return {k, p, ord, PeriodMethod::fast};
  }
  if (const auto* split = std::get_if<SplitsDistinct>(&cls)) {
    const auto factors = factor_or_throw(p - 1, ceilings.factor);
    u64 pi = 1;
    for (u64 root : split->roots) {
      u64 ord = p - 1;
      for (const auto& [r, exp] : factors) {
        for (unsigned j = 0; j < exp; ++j) {
          if (ord % r != 0 || pow_mod(root, ord / r, p) != 1) break;
          ord /= r;
        }
      }
      pi = lcm_u64(pi, ord);
    }
    return {k, p, pi, PeriodMethod::fast};
  }
  return period_brute(k, p, ceilings.iterations);
}

u64 period_prime_square(i64 k, u64 p, u64 pi_p) {
  require_prime(p);
  if (pi_p == 0) throw DomainError("pi_p must be positive");
  const u64 m = p * p;
  const Mat3 a = mat_pow(transition_matrix(k, m), pi_p, m);
  // image of the initial state (0, 0, 1) is the last column
  const bool back = a[0][2] == 0 && a[1][2] == 0 && a[2][2] == 1;
  return back ? pi_p : p * pi_p;
}

ShanksTestResult is_k_shanks(i64 k, u64 p, const Ceilings& ceilings, u64 seed) {
  require_prime(p);
  ShanksTestResult r;
  r.k = k;
  r.p = p;
  r.classification = classify_shanks_mod_p(k, p, seed);
  r.pi_p = period_fast(k, p, r.classification, ceilings).pi;
  r.pi_p2 = period_prime_square(k, p, r.pi_p);
  r.is_shanks = r.pi_p2 == r.pi_p;
  if (std::holds_alternative<IrreducibleModP>(r.classification)) {
    const RingElem rho_p = ring_pow(RingElem::rho(k, p * p), p);
    r.ring_criterion = eval_shanks_at_ring(k, rho_p).is_zero();
    if (*r.ring_criterion != r.is_shanks) {
      throw InternalInconsistency("k=" + std::to_string(k) + ", p=" + std::to_string(p) +
                                  ": S_k(rho^p) == 0 mod p^2 is " + (*r.ring_criterion ? "true" : "false") +
                                  " but pi(p^2) == pi(p) is " + (r.is_shanks ? "true" : "false"));
    }
  }
  return r;
}

}  // namespace shanks
