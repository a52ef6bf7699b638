#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "shanks/errors.hpp"
#include "shanks/fq.hpp"
#include "shanks/recurrence.hpp"

using namespace shanks;

namespace {

ModPoly product(const std::vector<ModFactor>& fs, u64 q) {
  ModPoly r = ModPoly::constant(q, 1);
  for (const auto& f : fs) {
    for (unsigned i = 0; i < f.multiplicity; ++i) r = r * f.factor;
  }
  return r;
}

// naive irreducibility: no monic divisor of degree <= n/2, by exhaustion (tiny q and n only)
bool irreducible_naive(const ModPoly& f) {
  const u64 q = f.modulus();
  const long n = f.degree();
  for (long d = 1; d <= n / 2; ++d) {
    std::vector<u64> c(static_cast<std::size_t>(d) + 1, 0);
    c[static_cast<std::size_t>(d)] = 1;
    u64 count = 1;
    for (long i = 0; i < d; ++i) count *= q;
    for (u64 idx = 0; idx < count; ++idx) {
      u64 t = idx;
      for (long i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = t % q;
        t /= q;
      }
      if ((f % ModPoly(q, c)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("ModPoly arithmetic") {
  const ModPoly a(7, {1, 2, 3});
  const ModPoly b(7, {6, 0, 1});
  CHECK((a + b) == ModPoly(7, {0, 2, 4}));
  CHECK((a - a).is_zero());
  const auto [q, r] = divmod(a * b + ModPoly(7, {1}), b);
  CHECK(q == a);
  CHECK(r == ModPoly(7, {1}));
  CHECK(ModPoly(5, {-1, 1}).coeffs() == std::vector<u64>{4, 1});
  CHECK(ModPoly(5, {3, 0, 2}).monic() == ModPoly(5, {4, 0, 1}));
  CHECK(ModPoly(5, {1, 1, 1, 1}).derivative() == ModPoly(5, {1, 2, 3}));
  CHECK(ModPoly(5, {3, 4}).lift(LiftStyle::symmetric) == IntPoly{-2, -1});
  CHECK(ModPoly(5, {3, 4}).lift() == IntPoly{3, 4});
  CHECK_THROWS_AS(ModPoly(1), DomainError);
}

TEST_CASE("poly_gcd") {
  const ModPoly f(5, {1, 2, 3, 1});
  CHECK(poly_gcd(f, ModPoly(5)) == f.monic());
  CHECK(poly_gcd(ModPoly(5, {-1, 1}), ModPoly(5, {-2, 1})).is_one());
  CHECK_THROWS_AS(poly_gcd(ModPoly(9, {1, 1}), ModPoly(9, {2, 1})), DomainError);

  // S_1 = (x - 9)^3 mod 13, so gcd with its derivative is (x - 9)^2
  const ModPoly s1 = ModPoly::reduce(shanks_poly(1), 13);
  const ModPoly lin(13, {-9, 1});
  CHECK(s1 == lin * lin * lin);
  CHECK(poly_gcd(s1, s1.derivative()) == lin * lin);
}

TEST_CASE("factor_mod_q on S_1") {
  SUBCASE("mod 2 irreducible") {
    const auto f = factor_mod_q(ModPoly::reduce(shanks_poly(1), 2));
    REQUIRE(f.size() == 1);
    CHECK(f[0].factor == ModPoly(2, {1, 0, 1, 1}));
    CHECK(f[0].multiplicity == 1);
    CHECK(oracle::shanks_roots(1, 2).empty());
  }
  SUBCASE("mod 5 splits") {
    const auto f = factor_mod_q(ModPoly::reduce(shanks_poly(1), 5));
    REQUIRE(f.size() == 3);
    // sorted by coefficient vectors: x + 2, x + 3, x + 4
    CHECK(f[0].factor == ModPoly(5, {-3, 1}));
    CHECK(f[1].factor == ModPoly(5, {-2, 1}));
    CHECK(f[2].factor == ModPoly(5, {-1, 1}));
    CHECK(oracle::shanks_roots(1, 5) == std::vector<u64>{1, 2, 3});
  }
  SUBCASE("mod 13 triple") {
    const auto f = factor_mod_q(ModPoly::reduce(shanks_poly(1), 13));
    REQUIRE(f.size() == 1);
    CHECK(f[0].factor == ModPoly(13, {-9, 1}));
    CHECK(f[0].multiplicity == 3);
    CHECK(shanks_poly(1).evaluate(9) == 611);
  }
}

TEST_CASE("factor_mod_q handles q-th power parts") {
  // (x^2 + 2)^5 (x + 2)^2 over F_5; x^2 + 2 is irreducible there
  const ModPoly a(5, {2, 0, 1});
  const ModPoly b(5, {2, 1});
  ModPoly f = a;
  for (int i = 0; i < 4; ++i) f = f * a;
  f = f * b * b;
  const auto fs = factor_mod_q(f);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == ModFactor{b, 2});
  CHECK(fs[1] == ModFactor{a, 5});

  // S_k(x^p) = S_k(x)^p mod p
  const ModPoly t = ModPoly::reduce(power_compose(shanks_poly(1), 7), 7);
  const auto ft = factor_mod_q(t);
  REQUIRE(ft.size() == 1);
  CHECK(ft[0].multiplicity == 7);
  CHECK(ft[0].factor == ModPoly::reduce(shanks_poly(1), 7));
}

TEST_CASE("factor_mod_q property: product reproduces input and factors are irreducible") {
  std::mt19937_64 gen(12345);
  const std::vector<u64> small_primes = {2, 3, 5, 7, 11, 13};
  for (int trial = 0; trial < 1000; ++trial) {
    const u64 q = small_primes[gen() % small_primes.size()];
    const i64 k = static_cast<i64>(gen() % 200) + 1;
    // alternate between S_k(x^e) and random monic products
    ModPoly f(q);
    if (trial % 2 == 0) {
      f = ModPoly::reduce(power_compose(shanks_poly(k), 1 + gen() % 4), q);
    } else {
      const long deg = 1 + static_cast<long>(gen() % 9);
      std::vector<u64> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = gen() % q;
      c.back() = 1;
      f = ModPoly(q, c);
      if (trial % 4 == 1) f = f * f * ModPoly(q, {static_cast<i64>(gen() % q), 1});
    }
    CAPTURE(f.to_string());
    const auto fs = factor_mod_q(f, gen());
    REQUIRE(product(fs, q) == f);
    for (const auto& x : fs) {
      REQUIRE(x.factor.leading() == 1);
      if (x.factor.degree() <= 6 && q <= 5) REQUIRE(irreducible_naive(x.factor));
    }
  }
}

TEST_CASE("factor_mod_q is independent of the seed") {
  const ModPoly f = ModPoly::reduce(power_compose(shanks_poly(4), 5), 31);
  const auto a = factor_mod_q(f, 1);
  const auto b = factor_mod_q(f, 987654321);
  CHECK(a == b);
}

TEST_CASE("factor_mod_q rejects composite moduli") {
  CHECK_THROWS_AS(factor_mod_q(ModPoly(9, {1, 0, 1})), DomainError);
}

TEST_CASE("classify_shanks_mod_p") {
  CHECK(classify_shanks_mod_p(1, 2) == Classification{IrreducibleModP{}});
  CHECK(classify_shanks_mod_p(1, 5) == Classification{SplitsDistinct{{1, 2, 3}}});
  CHECK(classify_shanks_mod_p(1, 13) == Classification{TripleRoot{9}});
  CHECK(classify_shanks_mod_p(1, 3) == Classification{IrreducibleModP{}});
  // p = 3 with 3 | k: S_k = (x - 1)^3
  CHECK(classify_shanks_mod_p(6, 3) == Classification{TripleRoot{1}});
  CHECK(classification_tag(classify_shanks_mod_p(1, 5)) == "split");
  CHECK_THROWS_AS(classify_shanks_mod_p(1, 15), DomainError);
}

TEST_CASE("classification matches exhaustive root search, never exactly one root") {
  for (u64 p : primes_in_range(2, 200)) {
    for (i64 k = 1; k <= 50; ++k) {
      const Classification c = classify_shanks_mod_p(k, p);
      const auto roots = oracle::shanks_roots(k, p);
      CAPTURE(k);
      CAPTURE(p);
      REQUIRE(roots.size() != 2);
      if (std::holds_alternative<IrreducibleModP>(c)) {
        REQUIRE(roots.empty());
      } else if (const auto* s = std::get_if<SplitsDistinct>(&c)) {
        REQUIRE(roots == std::vector<u64>(s->roots.begin(), s->roots.end()));
      } else {
        const u64 base = static_cast<u64>(k * k + 3 * k + 9);
        REQUIRE(base % p == 0);
        REQUIRE(roots == std::vector<u64>{std::get<TripleRoot>(c).root});
      }
    }
  }
}

TEST_CASE("RingElem arithmetic") {
  const i64 k = 5;
  const u64 m = 49;
  const RingElem rho = RingElem::rho(k, m);
  CHECK(ring_pow(rho, 0).is_one());
  CHECK(ring_pow(rho, 1) == rho);
  CHECK(ring_pow(rho, 3) == RingElem(k, m, {1, 8, 5}));
  CHECK(eval_shanks_at_ring(k, rho).is_zero());
  CHECK_THROWS_AS(rho * RingElem::rho(k, 7), DomainError);
}

TEST_CASE("conjugates are roots with the stated identities") {
  for (i64 k : {1, 2, 33, 95, 409}) {
    for (u64 m : {2ULL, 7ULL, 49ULL, 289ULL, 10201ULL, 1000003ULL}) {
      const auto [sigma, tau] = conjugates(k, m);
      const RingElem rho = RingElem::rho(k, m);
      const RingElem one = RingElem::one(k, m);
      CHECK(eval_shanks_at_ring(k, sigma).is_zero());
      CHECK(eval_shanks_at_ring(k, tau).is_zero());
      CHECK((sigma * (rho + one)) == RingElem::zero(k, m) - one);
      CHECK((tau * rho) == RingElem::zero(k, m) - (rho + one));
      CHECK((rho * sigma * tau).is_one());
    }
  }
}

TEST_CASE("k = 33 is a 17-Shanks prime in R_{17^2}; k = 1, p = 7 is not") {
  CHECK(eval_shanks_at_ring(33, ring_pow(RingElem::rho(33, 289), 17)).is_zero());
  // 7 is not a 1-Shanks prime: brute-force periods are 19 mod 7 and 133 mod 49
  REQUIRE(oracle::sequence_period(1, 7) == 19);
  REQUIRE(oracle::sequence_period(1, 49) == 133);
  CHECK_FALSE(eval_shanks_at_ring(1, ring_pow(RingElem::rho(1, 49), 7)).is_zero());
}

TEST_CASE("Frobenius permutes the roots and the norm of rho is 1") {
  for (u64 p : primes_in_range(2, 120)) {
    for (i64 k = 1; k <= 20; ++k) {
      if (!std::holds_alternative<IrreducibleModP>(classify_shanks_mod_p(k, p))) continue;
      const RingElem rho = RingElem::rho(k, p);
      const auto [sigma, tau] = conjugates(k, p);
      const RingElem r1 = ring_pow(rho, p);
      const RingElem r2 = ring_pow(r1, p);
      CAPTURE(k);
      CAPTURE(p);
      REQUIRE(((r1 == sigma && r2 == tau) || (r1 == tau && r2 == sigma)));
      REQUIRE(ring_pow(rho, p * p + p + 1).is_one());
    }
  }
}
