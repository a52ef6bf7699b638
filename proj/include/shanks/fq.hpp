#pragma once

// Polynomials over Z/mZ, factorization over prime fields, the shape of
// S_k mod p, and arithmetic in R_m = (Z/mZ)[x]/(S_k(x)).

#include <array>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "shanks/arith.hpp"
#include "shanks/intpoly.hpp"

namespace shanks {

/// How residues are lifted back to integers: [0, m) or (-m/2, m/2].
enum class LiftStyle { canonical, symmetric };

/// Dense polynomial over Z/mZ with residues in [0, m), ascending degree.
class ModPoly {
 public:
  explicit ModPoly(u64 modulus);
  ModPoly(u64 modulus, std::vector<u64> coeffs);
  ModPoly(u64 modulus, std::initializer_list<i64> coeffs);

  static ModPoly reduce(const IntPoly& f, u64 modulus);
  static ModPoly constant(u64 modulus, u64 c);
  static ModPoly x(u64 modulus);

  u64 modulus() const noexcept { return m_; }
  const std::vector<u64>& coeffs() const noexcept { return c_; }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  u64 coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  u64 leading() const;
  u64 evaluate(u64 x) const;

  ModPoly monic() const;
  ModPoly derivative() const;
  IntPoly lift(LiftStyle style = LiftStyle::canonical) const;

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  ModPoly scaled(u64 c) const;
  bool operator==(const ModPoly&) const = default;

  std::string to_string(char var = 'x') const;

 private:
  friend std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
  void trim();
  u64 m_;
  std::vector<u64> c_;
};

/// Quotient and remainder; the divisor's leading residue must be a unit.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator/(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);

/// base^exp reduced modulo the polynomial `mod`.
ModPoly pow_mod(const ModPoly& base, u64 exp, const ModPoly& mod);

/// Monic gcd over a prime field; throws DomainError for a composite modulus.
ModPoly poly_gcd(const ModPoly& a, const ModPoly& b);

struct ModFactor {
  ModPoly factor;
  unsigned multiplicity;

  bool operator==(const ModFactor&) const = default;
};

/// Complete factorization of a monic polynomial over F_q into monic
/// irreducibles: squarefree decomposition, distinct-degree, then
/// Cantor-Zassenhaus equal-degree splitting driven by `rng`. Output is sorted
/// by (degree, coefficients), so it does not depend on the random stream.
std::vector<ModFactor> factor_mod_q(const ModPoly& f, std::mt19937_64& rng);
std::vector<ModFactor> factor_mod_q(const ModPoly& f, u64 seed = 0);

/// Squarefree decomposition over F_q: pairs (squarefree part, multiplicity).
std::vector<ModFactor> squarefree_decomposition(const ModPoly& f);

struct IrreducibleModP {
  bool operator==(const IrreducibleModP&) const = default;
};
struct SplitsDistinct {
  std::array<u64, 3> roots;  // ascending
  bool operator==(const SplitsDistinct&) const = default;
};
struct TripleRoot {
  u64 root;
  bool operator==(const TripleRoot&) const = default;
};
using Classification = std::variant<IrreducibleModP, SplitsDistinct, TripleRoot>;

/// "irreducible", "split" or "triple".
std::string_view classification_tag(const Classification& c);

/// Shape of S_k mod p. Throws InternalInconsistency for any other shape.
Classification classify_shanks_mod_p(i64 k, u64 p, u64 seed = 0);

/// Element c0 + c1 rho + c2 rho^2 of R_m, where S_k(rho) = 0.
class RingElem {
 public:
  RingElem(i64 k, u64 modulus, std::array<u64, 3> coeffs);

  static RingElem zero(i64 k, u64 modulus);
  static RingElem one(i64 k, u64 modulus);
  static RingElem rho(i64 k, u64 modulus);
  static RingElem from_signed(i64 k, u64 modulus, std::array<i64, 3> coeffs);

  i64 k() const noexcept { return k_; }
  u64 modulus() const noexcept { return m_; }
  const std::array<u64, 3>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
  bool is_one() const noexcept { return c_[0] == 1 % m_ && c_[1] == 0 && c_[2] == 0; }

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem scaled(u64 c) const;
  bool operator==(const RingElem&) const = default;

  std::string to_string() const;

 private:
  void check_compatible(const RingElem& o) const;
  i64 k_;
  u64 m_;
  u64 k_mod_;
  u64 k3_mod_;
  std::array<u64, 3> c_;
};

RingElem ring_pow(const RingElem& e, u64 n);

/// sigma = rho^2 - (k+1) rho - 2 and tau = -rho^2 + k rho + k + 2.
std::pair<RingElem, RingElem> conjugates(i64 k, u64 modulus);

/// e^3 - k e^2 - (k+3) e - 1.
RingElem eval_shanks_at_ring(i64 k, const RingElem& e);

}  // namespace shanks
