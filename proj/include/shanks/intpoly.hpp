#pragma once

// Exact integer polynomials, the Shanks family S_k(x) = x^3 - k x^2 - (k+3) x - 1,
// discriminants and the admissibility test for the parameter k.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "shanks/arith.hpp"

namespace shanks {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial over Z, coefficients in ascending degree order. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<i64> coeffs);

  static IntPoly monomial(BigInt c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;
  bool is_monic() const;

  BigInt evaluate(const BigInt& x) const;
  IntPoly derivative() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& c, const IntPoly& a);
  IntPoly operator-() const;
  bool operator==(const IntPoly&) const = default;

  /// Divides every coefficient by d; throws ExactDivisionFailed when some
  /// coefficient is not a multiple of d.
  IntPoly exact_div(const BigInt& d) const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// x^3 - k x^2 - (k+3) x - 1. Throws DomainError for k < 1.
IntPoly shanks_poly(i64 k);

/// f(x^p). Throws DomainError for p < 1 or f == 0.
IntPoly power_compose(const IntPoly& f, u64 p);

/// Res(f, g) as the determinant of the Sylvester matrix, computed with
/// fraction-free (Bareiss) elimination.
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// (-1)^{d(d-1)/2} Res(f, f') / lc(f).
BigInt discriminant_exact(const IntPoly& f);

/// Parameter data attached to k. disc_base_root is k^2 + 3k + 9; cap_d is
/// disc_base_root / 9 when 3 | k and disc_base_root otherwise.
struct ShanksParams {
  i64 k = 0;
  u64 disc_base_root = 0;
  u64 cap_d = 0;
  bool hypotheses_ok = false;
  /// Any of "k_lt_1", "k_3_mod_9", "d_not_squarefree", "d_undetermined".
  std::vector<std::string> failure_reasons;

  bool operator==(const ShanksParams&) const = default;
  /// Human-readable rendering of failure_reasons.
  std::string describe_failures() const;
};

/// Largest k accepted anywhere; keeps k^2 + 3k + 9 inside 64 bits.
inline constexpr i64 kMaxK = 3'000'000'000LL;

ShanksParams compute_params(i64 k, u64 factor_ceiling = kDefaultFactorCeiling);

/// sign * p^exp_p * base^exp_base, kept unexpanded.
struct FactoredDisc {
  int sign = 1;
  u64 p = 0;
  u64 exp_p = 0;
  u64 base = 0;
  u64 exp_base = 0;

  BigInt expand() const;
  bool operator==(const FactoredDisc&) const = default;
};

/// Discriminant of S_k(x^p) for an odd prime p:
/// (-1)^{(p-2)(p-1)/2} p^{3p} (k^2+3k+9)^{2p}.
FactoredDisc factored_disc_power(i64 k, u64 p);

std::string to_decimal(const BigInt& v);

}  // namespace shanks
