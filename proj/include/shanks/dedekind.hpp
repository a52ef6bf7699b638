#pragma once

// Dedekind's index criterion at a prime, and monogenicity certificates for
// S_k(x) and S_k(x^p).
//
// A monic irreducible T is monogenic exactly when no prime q divides the
// index [Z_K : Z[theta]]. Since disc(T) = index^2 * disc(K), only primes q
// with q^2 | disc(T) need to be examined; those are the certificate's
// critical primes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shanks/arith.hpp"
#include "shanks/fq.hpp"
#include "shanks/intpoly.hpp"

namespace shanks {

struct DedekindVerdict {
  u64 q = 0;
  bool divides_index = false;
  /// gcd(F mod q, g mod q, h mod q); equals 1 exactly when q does not divide the index.
  ModPoly gcd_witness{2};

  bool operator==(const DedekindVerdict&) const = default;
};

/// Runs the criterion for monic T at the prime q. Irreducibility of T over Q
/// is the caller's responsibility.
DedekindVerdict dedekind_at(const IntPoly& t, u64 q, LiftStyle lift = LiftStyle::canonical, u64 seed = 0);

/// S_k(rho^p) == 0 in R_{p^2}. Requires S_k irreducible mod p.
bool index_divisible_at_p_via_ring(i64 k, u64 p, u64 seed = 0);

enum class CertRoute { full_dedekind, ring_criterion, both_agree };
std::string_view route_name(CertRoute r);

/// Which routes certify_power runs. `automatic` runs both when S_k is
/// irreducible mod p and the full criterion otherwise.
enum class RoutePolicy { automatic, full, ring, both };

struct CertifyOptions {
  RoutePolicy policy = RoutePolicy::automatic;
  LiftStyle lift = LiftStyle::canonical;
  u64 seed = 0;
  u64 factor_ceiling = kDefaultFactorCeiling;
  /// When nonzero, scan primes below this bound for one modulo which the
  /// polynomial is irreducible (a sanity check on irreducibility over Q).
  u64 irreducibility_scan = 0;
};

struct MonogenicityCertificate {
  i64 k = 0;
  /// Absent for the base polynomial S_k(x).
  std::optional<u64> p;
  std::vector<u64> critical_primes;
  std::vector<DedekindVerdict> verdicts;
  bool monogenic = false;
  CertRoute route = CertRoute::full_dedekind;
  FactoredDisc discriminant;
  /// Prime modulo which the polynomial was found irreducible, if scanned and found.
  std::optional<u64> aux_irreducible_mod;
  std::string assumption;

  bool operator==(const MonogenicityCertificate&) const = default;
};

/// Certificate for S_k(x). Throws HypothesisViolation for inadmissible k.
MonogenicityCertificate certify_base(i64 k, const CertifyOptions& opts = {});

/// Certificate for S_k(x^p), p an odd prime. Throws HypothesisViolation,
/// DomainError (p not an odd prime, or ring policy off the irreducible case)
/// or InternalInconsistency when the two routes disagree.
MonogenicityCertificate certify_power(i64 k, u64 p, const CertifyOptions& opts = {});

}  // namespace shanks
