#include "shanks/fq.hpp"

#include <algorithm>
#include <sstream>

#include "shanks/errors.hpp"

namespace shanks {

namespace {

void require_modulus(u64 m) {
  if (m < 2) throw DomainError("modulus must be >= 2, got " + std::to_string(m));
}

void require_same_modulus(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw DomainError("polynomials over different moduli");
}

void require_prime_modulus(u64 m) {
  if (!is_prime(m)) throw DomainError("operation needs a prime modulus, got " + std::to_string(m));
}

}  // namespace

ModPoly::ModPoly(u64 modulus) : m_(modulus) { require_modulus(modulus); }

ModPoly::ModPoly(u64 modulus, std::vector<u64> coeffs) : m_(modulus), c_(std::move(coeffs)) {
  require_modulus(modulus);
  for (auto& c : c_) c %= m_;
  trim();
}

ModPoly::ModPoly(u64 modulus, std::initializer_list<i64> coeffs) : m_(modulus) {
  require_modulus(modulus);
  c_.reserve(coeffs.size());
  for (i64 c : coeffs) c_.push_back(reduce_signed(c, m_));
  trim();
}

ModPoly ModPoly::reduce(const IntPoly& f, u64 modulus) {
  require_modulus(modulus);
  std::vector<u64> c(f.coeffs().size());
  const BigInt bm(modulus);
  for (std::size_t i = 0; i < c.size(); ++i) {
    BigInt r = f.coeffs()[i] % bm;
    if (r < 0) r += bm;
    c[i] = static_cast<u64>(r);
  }
  return ModPoly(modulus, std::move(c));
}

ModPoly ModPoly::constant(u64 modulus, u64 c) { return ModPoly(modulus, std::vector<u64>{c}); }

ModPoly ModPoly::x(u64 modulus) { return ModPoly(modulus, std::vector<u64>{0, 1}); }

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 ModPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

u64 ModPoly::evaluate(u64 x) const {
  u64 acc = 0;
  x %= m_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add_mod(mul_mod(acc, x, m_), *it, m_);
  return acc;
}

ModPoly ModPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(inv_mod(c_.back(), m_));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(m_);
  std::vector<u64> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mul_mod(c_[i], i % m_, m_);
  return ModPoly(m_, std::move(d));
}

IntPoly ModPoly::lift(LiftStyle style) const {
  std::vector<BigInt> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (style == LiftStyle::symmetric && c_[i] > m_ / 2) {
      out[i] = BigInt(c_[i]) - BigInt(m_);
    } else {
      out[i] = c_[i];
    }
  }
  return IntPoly(std::move(out));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  std::vector<u64> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = add_mod(a.coeff(i), b.coeff(i), a.m_);
  return ModPoly(a.m_, std::move(r));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  std::vector<u64> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = sub_mod(a.coeff(i), b.coeff(i), a.m_);
  return ModPoly(a.m_, std::move(r));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return ModPoly(a.m_);
  const u64 m = a.m_;
  std::vector<u64> r(a.c_.size() + b.c_.size() - 1, 0);
  if (m <= (u64{1} << 31)) {
    // products fit in 62 bits; fold into the accumulator before it can overflow
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      const u64 ai = a.c_[i];
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + ai * b.c_[j]) % m;
    }
  } else {
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        r[i + j] = add_mod(r[i + j], mul_mod(a.c_[i], b.c_[j], m), m);
      }
    }
  }
  return ModPoly(m, std::move(r));
}

ModPoly ModPoly::scaled(u64 c) const {
  std::vector<u64> r(c_);
  for (auto& x : r) x = mul_mod(x, c % m_, m_);
  return ModPoly(m_, std::move(r));
}

std::string ModPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i];
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  os << " (mod " << m_ << ")";
  return os.str();
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const u64 m = a.m_;
  if (a.degree() < b.degree()) return {ModPoly(m), a};
  const u64 lead_inv = inv_mod(b.leading(), m);
  std::vector<u64> rem(a.c_);
  const std::size_t db = b.c_.size() - 1;
  std::vector<u64> quo(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    const u64 coef = mul_mod(rem[i], lead_inv, m);
    quo[i - db] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = sub_mod(rem[i - db + j], mul_mod(coef, b.c_[j], m), m);
    }
  }
  rem.resize(db);
  return {ModPoly(m, std::move(quo)), ModPoly(m, std::move(rem))};
}

ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divmod(a, b).first; }
ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

ModPoly pow_mod(const ModPoly& base, u64 exp, const ModPoly& mod) {
  ModPoly result = ModPoly::constant(mod.modulus(), 1) % mod;
  ModPoly b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % mod;
    exp >>= 1;
    if (exp > 0) b = (b * b) % mod;
  }
  return result;
}

namespace {

// Euclid without the primality check; callers guarantee a field.
ModPoly gcd_field(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// f^(1/q) for f in F_q[x^q]; coefficients are fixed by Frobenius on F_q.
ModPoly qth_root(const ModPoly& f) {
  const u64 q = f.modulus();
  std::vector<u64> r(static_cast<std::size_t>(f.degree()) / q + 1);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.coeff(i * q);
  return ModPoly(q, std::move(r));
}

void squarefree_rec(const ModPoly& f, unsigned scale, std::vector<ModFactor>& out) {
  const u64 q = f.modulus();
  if (f.degree() < 1) return;
  ModPoly g = f.derivative();
  if (g.is_zero()) {
    squarefree_rec(qth_root(f), scale * static_cast<unsigned>(q), out);
    return;
  }
  ModPoly c = gcd_field(f, g);
  ModPoly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    ModPoly y = gcd_field(w, c);
    ModPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    w = std::move(y);
    c = c / w;
    ++i;
  }
  c = c.monic();
  if (!c.is_one()) squarefree_rec(qth_root(c), scale * static_cast<unsigned>(q), out);
}

ModPoly random_poly(u64 q, long degree_below, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, q - 1);
  std::vector<u64> c(static_cast<std::size_t>(degree_below));
  for (auto& x : c) x = dist(rng);
  return ModPoly(q, std::move(c));
}

// f squarefree, monic, every irreducible factor of degree d.
void equal_degree_split(const ModPoly& f, long d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const long n = f.degree();
  if (n == d) {
    out.push_back(f);
    return;
  }
  const u64 q = f.modulus();
  for (;;) {
    ModPoly a = random_poly(q, n, rng);
    if (a.degree() < 1) continue;
    ModPoly b(q);
    if (q == 2) {
      // absolute trace a + a^2 + ... + a^(2^(d-1)) lands in F_2 modulo each factor
      ModPoly cur = a;
      b = a;
      for (long i = 1; i < d; ++i) {
        cur = (cur * cur) % f;
        b = b + cur;
      }
    } else {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
      ModPoly cur = a;
      ModPoly norm = a;
      for (long i = 1; i < d; ++i) {
        cur = pow_mod(cur, q, f);
        norm = (norm * cur) % f;
      }
      b = pow_mod(norm, (q - 1) / 2, f) - ModPoly::constant(q, 1);
    }
    ModPoly g = gcd_field(f, b);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split((f / g).monic(), d, rng, out);
      return;
    }
  }
}

// f squarefree and monic; returns (product of all degree-i factors, i).
std::vector<std::pair<ModPoly, long>> distinct_degree(const ModPoly& f) {
  const u64 q = f.modulus();
  std::vector<std::pair<ModPoly, long>> out;
  ModPoly rest = f;
  const ModPoly x = ModPoly::x(q);
  ModPoly h = x % rest;
  long i = 1;
  while (rest.degree() >= 2 * i) {
    h = pow_mod(h, q, rest);
    ModPoly g = gcd_field(rest, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
    ++i;
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), rest.degree());
  return out;
}

bool factor_less(const ModFactor& a, const ModFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& ca = a.factor.coeffs();
  const auto& cb = b.factor.coeffs();
  if (ca != cb) return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
  return a.multiplicity < b.multiplicity;
}

}  // namespace

ModPoly poly_gcd(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  require_prime_modulus(a.modulus());
  return gcd_field(a, b);
}

std::vector<ModFactor> squarefree_decomposition(const ModPoly& f) {
  require_prime_modulus(f.modulus());
  if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<ModFactor> out;
  squarefree_rec(f.monic(), 1, out);
  return out;
}

std::vector<ModFactor> factor_mod_q(const ModPoly& f, std::mt19937_64& rng) {
  require_prime_modulus(f.modulus());
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  if (f.leading() != 1) throw DomainError("factor_mod_q expects a monic polynomial");
  std::vector<ModFactor> out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<ModPoly> pieces;
      equal_degree_split(block, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), mult});
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::vector<ModFactor> factor_mod_q(const ModPoly& f, u64 seed) {
  std::mt19937_64 rng(seed);
  return factor_mod_q(f, rng);
}

std::string_view classification_tag(const Classification& c) {
  struct Visitor {
    std::string_view operator()(const IrreducibleModP&) const { return "irreducible"; }
    std::string_view operator()(const SplitsDistinct&) const { return "split"; }
    std::string_view operator()(const TripleRoot&) const { return "triple"; }
  };
  return std::visit(Visitor{}, c);
}

Classification classify_shanks_mod_p(i64 k, u64 p, u64 seed) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (!is_prime(p)) throw DomainError("classification needs a prime p, got " + std::to_string(p));
  const u64 km = reduce_signed(k, p);
  const u64 base = add_mod(add_mod(mul_mod(km, km, p), mul_mod(3 % p, km, p), p), 9 % p, p);
  const ModPoly sk = ModPoly::reduce(shanks_poly(k), p);

  if (p > 3 && base == 0) {
    const u64 root = mul_mod(km, inv_mod(3, p), p);
    const u64 alt2 = neg_mod(mul_mod(3, inv_mod(add_mod(km, 3, p), p), p), p);
    const u64 alt3 = neg_mod(mul_mod(add_mod(km, 3, p), inv_mod(km, p), p), p);
    if (alt2 != root || alt3 != root || sk.evaluate(root) != 0) {
      throw InternalInconsistency("closed forms for the triple root of S_" + std::to_string(k) +
                                  " mod " + std::to_string(p) + " disagree");
    }
    return TripleRoot{root};
  }

  const auto factors = factor_mod_q(sk, seed);
  if (factors.size() == 1 && factors[0].factor.degree() == 3 && factors[0].multiplicity == 1) {
    return IrreducibleModP{};
  }
  if (factors.size() == 1 && factors[0].factor.degree() == 1 && factors[0].multiplicity == 3) {
    return TripleRoot{neg_mod(factors[0].factor.coeff(0), p)};
  }
  if (factors.size() == 3 && std::all_of(factors.begin(), factors.end(), [](const ModFactor& f) {
        return f.factor.degree() == 1 && f.multiplicity == 1;
      })) {
    SplitsDistinct s{};
    for (std::size_t i = 0; i < 3; ++i) s.roots[i] = neg_mod(factors[i].factor.coeff(0), p);
    std::sort(s.roots.begin(), s.roots.end());
    return s;
  }
  std::ostringstream os;
  os << "S_" << k << " mod " << p << " factors as";
  for (const auto& f : factors) os << " (" << f.factor.to_string() << ")^" << f.multiplicity;
  os << ", which is neither irreducible nor a product of linear factors";
  throw InternalInconsistency(os.str());
}

RingElem::RingElem(i64 k, u64 modulus, std::array<u64, 3> coeffs)
    : k_(k), m_(modulus), c_(coeffs) {
  require_modulus(modulus);
  k_mod_ = reduce_signed(k, m_);
  k3_mod_ = add_mod(k_mod_, 3 % m_, m_);
  for (auto& c : c_) c %= m_;
}

RingElem RingElem::zero(i64 k, u64 modulus) { return RingElem(k, modulus, {0, 0, 0}); }
RingElem RingElem::one(i64 k, u64 modulus) { return RingElem(k, modulus, {1, 0, 0}); }
RingElem RingElem::rho(i64 k, u64 modulus) { return RingElem(k, modulus, {0, 1, 0}); }

RingElem RingElem::from_signed(i64 k, u64 modulus, std::array<i64, 3> coeffs) {
  require_modulus(modulus);
  return RingElem(k, modulus,
                  {reduce_signed(coeffs[0], modulus), reduce_signed(coeffs[1], modulus),
                   reduce_signed(coeffs[2], modulus)});
}

void RingElem::check_compatible(const RingElem& o) const {
  if (k_ != o.k_ || m_ != o.m_) throw DomainError("ring elements from different rings");
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  a.check_compatible(b);
  RingElem r = a;
  for (std::size_t i = 0; i < 3; ++i) r.c_[i] = add_mod(a.c_[i], b.c_[i], a.m_);
  return r;
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  a.check_compatible(b);
  RingElem r = a;
  for (std::size_t i = 0; i < 3; ++i) r.c_[i] = sub_mod(a.c_[i], b.c_[i], a.m_);
  return r;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  a.check_compatible(b);
  const u64 m = a.m_;
  std::array<u64, 5> t{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) t[i + j] = add_mod(t[i + j], mul_mod(a.c_[i], b.c_[j], m), m);
  }
  // rho^3 = k rho^2 + (k+3) rho + 1, applied to rho^4 then rho^3
  for (std::size_t d = 4; d >= 3; --d) {
    const u64 c = t[d];
    t[d] = 0;
    t[d - 1] = add_mod(t[d - 1], mul_mod(c, a.k_mod_, m), m);
    t[d - 2] = add_mod(t[d - 2], mul_mod(c, a.k3_mod_, m), m);
    t[d - 3] = add_mod(t[d - 3], c, m);
  }
  RingElem r = a;
  r.c_ = {t[0], t[1], t[2]};
  return r;
}

RingElem RingElem::scaled(u64 c) const {
  RingElem r = *this;
  for (auto& x : r.c_) x = mul_mod(x, c % m_, m_);
  return r;
}

std::string RingElem::to_string() const {
  std::ostringstream os;
  os << c_[0] << " + " << c_[1] << "*rho + " << c_[2] << "*rho^2 (mod " << m_ << ")";
  return os.str();
}

RingElem ring_pow(const RingElem& e, u64 n) {
  RingElem result = RingElem::one(e.k(), e.modulus());
  RingElem b = e;
  while (n > 0) {
    if (n & 1) result = result * b;
    n >>= 1;
    if (n > 0) b = b * b;
  }
  return result;
}

std::pair<RingElem, RingElem> conjugates(i64 k, u64 modulus) {
  RingElem sigma = RingElem::from_signed(k, modulus, {-2, -(k + 1), 1});
  RingElem tau = RingElem::from_signed(k, modulus, {k + 2, k, -1});
  return {sigma, tau};
}

RingElem eval_shanks_at_ring(i64 k, const RingElem& e) {
  if (e.k() != k) throw DomainError("element does not live in R_m for this k");
  const u64 m = e.modulus();
  const RingElem e2 = e * e;
  const RingElem e3 = e2 * e;
  return e3 - e2.scaled(reduce_signed(k, m)) - e.scaled(reduce_signed(k + 3, m)) - RingElem::one(k, m);
}

}  // namespace shanks
