#include "doctest.h"

#include "oracles.hpp"
#include "shanks/dedekind.hpp"
#include "shanks/errors.hpp"
#include "shanks/recurrence.hpp"

using namespace shanks;

TEST_CASE("dedekind_at on S_k") {
  const DedekindVerdict v3 = dedekind_at(shanks_poly(33), 3);
  CHECK(v3.q == 3);
  CHECK_FALSE(v3.divides_index);
  CHECK(v3.gcd_witness.is_one());
  CHECK_FALSE(dedekind_at(shanks_poly(33), 7).divides_index);
  CHECK_FALSE(dedekind_at(power_compose(shanks_poly(1), 13), 13).divides_index);
  CHECK_THROWS_AS(dedekind_at(shanks_poly(1), 4), DomainError);
  CHECK_THROWS_AS(dedekind_at(IntPoly{1, 0, 2}, 3), DomainError);
}

TEST_CASE("dedekind_at detects a non-maximal order") {
  // x^2 - 5: disc 20, Z[sqrt 5] has index 2 in the maximal order
  CHECK(dedekind_at(IntPoly{-5, 0, 1}, 2).divides_index);
  // x^2 + 1: Z[i] is maximal
  CHECK_FALSE(dedekind_at(IntPoly{1, 0, 1}, 2).divides_index);
  // k = 12 (k = 3 mod 9): 3 divides the index of S_k
  CHECK(dedekind_at(shanks_poly(12), 3).divides_index);
}

TEST_CASE("dedekind_at is invariant under the lift choice") {
  for (i64 k = 1; k <= 40; ++k) {
    for (u64 q : {2u, 3u, 5u, 7u, 13u, 19u}) {
      const IntPoly t = shanks_poly(k);
      REQUIRE(dedekind_at(t, q, LiftStyle::canonical).divides_index ==
              dedekind_at(t, q, LiftStyle::symmetric).divides_index);
      for (u64 p : {3u, 5u}) {
        const IntPoly tp = power_compose(t, p);
        REQUIRE(dedekind_at(tp, q, LiftStyle::canonical) .divides_index ==
                dedekind_at(tp, q, LiftStyle::symmetric).divides_index);
      }
    }
  }
}

TEST_CASE("index_divisible_at_p_via_ring") {
  CHECK(index_divisible_at_p_via_ring(33, 17));
  CHECK(index_divisible_at_p_via_ring(95, 13));
  CHECK_FALSE(index_divisible_at_p_via_ring(1, 7));
  CHECK_THROWS_AS(index_divisible_at_p_via_ring(1, 5), DomainError);
}

TEST_CASE("certify_base") {
  const MonogenicityCertificate c33 = certify_base(33);
  CHECK(c33.monogenic);
  CHECK(c33.critical_primes == std::vector<u64>{3, 7, 19});
  CHECK(c33.verdicts.size() == 3);
  CHECK_FALSE(c33.p.has_value());
  CHECK(c33.route == CertRoute::full_dedekind);
  CHECK(c33.discriminant.expand() == BigInt(1197) * 1197);

  const MonogenicityCertificate c1 = certify_base(1);
  CHECK(c1.monogenic);
  CHECK(c1.critical_primes == std::vector<u64>{13});

  CHECK_THROWS_AS(certify_base(12), HypothesisViolation);
}

TEST_CASE("certify_power") {
  const MonogenicityCertificate a = certify_power(33, 17);
  CHECK_FALSE(a.monogenic);
  CHECK(a.route == CertRoute::both_agree);
  CHECK(a.critical_primes == std::vector<u64>{3, 7, 17, 19});
  CHECK(a.discriminant == factored_disc_power(33, 17));

  const MonogenicityCertificate b = certify_power(1, 13);
  CHECK(b.monogenic);
  CHECK(b.route == CertRoute::full_dedekind);

  // S_1 is irreducible mod 3; periods 13 mod 3 and 39 mod 9, so 3 is not a 1-Shanks prime
  REQUIRE(oracle::sequence_period(1, 3) == 13);
  REQUIRE(oracle::sequence_period(1, 9) == 39);
  const MonogenicityCertificate c = certify_power(1, 3);
  CHECK(c.monogenic);

  CHECK_THROWS_AS(certify_power(12, 5), HypothesisViolation);
  CHECK_THROWS_AS(certify_power(1, 2), DomainError);
  CHECK_THROWS_AS(certify_power(1, 9), DomainError);
}

TEST_CASE("certify_power route policies agree") {
  CertifyOptions ring;
  ring.policy = RoutePolicy::ring;
  CertifyOptions full;
  full.policy = RoutePolicy::full;
  for (auto [k, p] : std::vector<std::pair<i64, u64>>{{33, 17}, {95, 13}, {1, 7}, {1, 3}, {2, 13}}) {
    const auto r = certify_power(k, p, ring);
    const auto f = certify_power(k, p, full);
    CHECK(r.route == CertRoute::ring_criterion);
    CHECK(f.route == CertRoute::full_dedekind);
    CHECK(r.monogenic == f.monogenic);
    CHECK(r.verdicts.size() == 1);
  }
  // ring route needs S_k irreducible mod p
  CHECK_THROWS_AS(certify_power(1, 5, ring), DomainError);
}

TEST_CASE("irreducibility scan") {
  CertifyOptions opts;
  opts.irreducibility_scan = 50;
  const auto base = certify_base(1, opts);
  REQUIRE(base.aux_irreducible_mod.has_value());
  CHECK(*base.aux_irreducible_mod == 2);
}
