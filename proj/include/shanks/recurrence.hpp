#pragma once

// The sequence U_0 = U_1 = 0, U_2 = 1, U_n = k U_{n-1} + (k+3) U_{n-2} + U_{n-3},
// its period pi(m) modulo p and p^2, and the k-Shanks prime test.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "shanks/arith.hpp"
#include "shanks/fq.hpp"

namespace shanks {

enum class PeriodMethod { brute, fast };

std::string_view method_name(PeriodMethod m);

struct PeriodRecord {
  i64 k = 0;
  u64 m = 0;
  u64 pi = 0;
  PeriodMethod method = PeriodMethod::brute;

  bool operator==(const PeriodRecord&) const = default;
};

/// Row-major 3x3 matrix over Z/mZ.
using Mat3 = std::array<std::array<u64, 3>, 3>;

/// Matrix A with (U_{n+1}, U_{n+2}, U_{n+3}) = A (U_n, U_{n+1}, U_{n+2}), reduced mod m.
Mat3 transition_matrix(i64 k, u64 m);
Mat3 mat_mul(const Mat3& a, const Mat3& b, u64 m);
Mat3 mat_pow(const Mat3& a, u64 n, u64 m);
bool is_identity(const Mat3& a, u64 m);

/// First n >= 1 at which the state (U_n, U_{n+1}, U_{n+2}) mod m returns to
/// (0, 0, 1). Throws CeilingExceeded after `ceiling` steps (default m^3).
PeriodRecord period_brute(i64 k, u64 m, std::optional<u64> ceiling = std::nullopt);

/// pi(p) from the multiplicative structure of S_k mod p: the order of rho
/// in R_p (irreducible), the lcm of the root orders in F_p^x (split), or
/// brute force (triple root; the record then carries method = brute).
PeriodRecord period_fast(i64 k, u64 p, const Ceilings& ceilings = {}, u64 seed = 0);
PeriodRecord period_fast(i64 k, u64 p, const Classification& cls, const Ceilings& ceilings = {});

/// pi(p^2) given pi(p): returns pi_p when the state advanced pi_p steps
/// modulo p^2 is back at (0, 0, 1), otherwise p * pi_p.
u64 period_prime_square(i64 k, u64 p, u64 pi_p);

/// Multiplicative order of e, given a multiple `n` of it and the
/// factorization of n.
u64 ring_order(const RingElem& e, u64 n, const std::vector<PrimePower>& n_factors);

struct ShanksTestResult {
  i64 k = 0;
  u64 p = 0;
  u64 pi_p = 0;
  u64 pi_p2 = 0;
  bool is_shanks = false;
  /// S_k(rho^p) == 0 in R_{p^2}; present only when S_k is irreducible mod p.
  std::optional<bool> ring_criterion;
  Classification classification = IrreducibleModP{};

  bool operator==(const ShanksTestResult&) const = default;
};

/// Periods mod p and p^2 and the k-Shanks flag. In the irreducible case the
/// ring criterion is computed too; InternalInconsistency if it disagrees.
ShanksTestResult is_k_shanks(i64 k, u64 p, const Ceilings& ceilings = {}, u64 seed = 0);

}  // namespace shanks
