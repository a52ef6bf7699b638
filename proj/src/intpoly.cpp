#include "shanks/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "shanks/errors.hpp"

namespace shanks {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<i64> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (i64 c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(BigInt c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<u64>(i);
  return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const BigInt& c, const IntPoly& a) {
  std::vector<BigInt> r(a.coeffs_);
  for (auto& x : r) x *= c;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> r(coeffs_);
  for (auto& x : r) x = -x;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::exact_div(const BigInt& d) const {
  if (d == 0) throw DomainError("division by zero");
  std::vector<BigInt> r(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    BigInt q, rem;
    boost::multiprecision::divide_qr(coeffs_[i], d, q, rem);
    if (rem != 0) {
      throw ExactDivisionFailed("coefficient of x^" + std::to_string(i) + " is not divisible by " +
                                to_decimal(d));
    }
    r[i] = std::move(q);
  }
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPoly shanks_poly(i64 k) {
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));
  if (k > kMaxK) throw DomainError("k exceeds supported range: " + std::to_string(k));
  return IntPoly{-1, -(k + 3), -k, 1};
}

IntPoly power_compose(const IntPoly& f, u64 p) {
  if (p < 1) throw DomainError("power_compose needs p >= 1");
  if (f.is_zero()) throw DomainError("power_compose of the zero polynomial");
  std::vector<BigInt> r(static_cast<std::size_t>(f.degree()) * p + 1);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) r[i * p] = f.coeffs()[i];
  return IntPoly(std::move(r));
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant with the zero polynomial");
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  if (size == 0) return 1;

  // Sylvester matrix: n shifted rows of f, m shifted rows of g, descending powers.
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) a[r][r + i] = f.coeffs()[m - i];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) a[n + r][r + i] = g.coeffs()[n - i];
  }

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[size - 1][size - 1];
  return sign < 0 ? BigInt(-det) : det;
}

BigInt discriminant_exact(const IntPoly& f) {
  if (f.degree() < 1) throw DomainError("discriminant needs degree >= 1");
  const u64 d = static_cast<u64>(f.degree());
  if (d == 1) return 1;
  BigInt res = resultant(f, f.derivative());
  BigInt q, rem;
  boost::multiprecision::divide_qr(res, f.leading(), q, rem);
  if (rem != 0) throw InternalInconsistency("Res(f, f') not divisible by lc(f)");
  return ((d * (d - 1) / 2) % 2 == 1) ? BigInt(-q) : q;
}

std::string ShanksParams::describe_failures() const {
  std::string out;
  for (const auto& r : failure_reasons) {
    if (!out.empty()) out += "; ";
    if (r == "k_lt_1") {
      out += "k < 1";
    } else if (r == "k_3_mod_9") {
      out += "k ≡ 3 (mod 9)";
    } else if (r == "d_not_squarefree") {
      out += "D = " + std::to_string(cap_d) + " is not squarefree";
    } else if (r == "d_undetermined") {
      out += "squarefreeness of D = " + std::to_string(cap_d) + " undetermined within ceiling";
    } else {
      out += r;
    }
  }
  return out;
}

ShanksParams compute_params(i64 k, u64 factor_ceiling) {
  ShanksParams sp;
  sp.k = k;
  if (k < 1) {
    sp.failure_reasons.emplace_back("k_lt_1");
    return sp;
  }
  if (k > kMaxK) throw DomainError("k exceeds supported range: " + std::to_string(k));
  const u64 uk = static_cast<u64>(k);
  sp.disc_base_root = uk * uk + 3 * uk + 9;
  sp.cap_d = (uk % 3 == 0) ? sp.disc_base_root / 9 : sp.disc_base_root;
  if (k % 9 == 3) sp.failure_reasons.emplace_back("k_3_mod_9");
  auto f = factor_trial(sp.cap_d, factor_ceiling);
  if (!f) {
    sp.failure_reasons.emplace_back("d_undetermined");
  } else if (std::any_of(f->begin(), f->end(), [](const PrimePower& pp) { return pp.exponent > 1; })) {
    sp.failure_reasons.emplace_back("d_not_squarefree");
  }
  sp.hypotheses_ok = sp.failure_reasons.empty();
  return sp;
}

BigInt FactoredDisc::expand() const {
  BigInt v = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(exp_p)) *
             boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp_base));
  return sign < 0 ? BigInt(-v) : v;
}

FactoredDisc factored_disc_power(i64 k, u64 p) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (k > kMaxK) throw DomainError("k exceeds supported range");
  if (p == 2 || !is_prime(p)) throw DomainError("factored_disc_power needs an odd prime p, got " + std::to_string(p));
  const u64 uk = static_cast<u64>(k);
  FactoredDisc d;
  d.sign = (((p - 2) * (p - 1) / 2) % 2 == 0) ? 1 : -1;
  d.p = p;
  d.exp_p = 3 * p;
  d.base = uk * uk + 3 * uk + 9;
  d.exp_base = 2 * p;
  return d;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace shanks
