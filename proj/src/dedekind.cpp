#include "shanks/dedekind.hpp"

#include <algorithm>
#include <set>

#include "shanks/errors.hpp"

namespace shanks {

DedekindVerdict dedekind_at(const IntPoly& t, u64 q, LiftStyle lift, u64 seed) {
  if (!t.is_monic()) throw DomainError("Dedekind's criterion needs a monic polynomial");
  if (!is_prime(q)) throw DomainError("Dedekind's criterion needs a prime, got " + std::to_string(q));

  const ModPoly t_bar = ModPoly::reduce(t, q);
  const auto factors = factor_mod_q(t_bar, seed);

  IntPoly g{1};
  ModPoly g_bar = ModPoly::constant(q, 1);
  ModPoly h_bar = ModPoly::constant(q, 1);
  for (const auto& [factor, mult] : factors) {
    g = g * factor.lift(lift);
    g_bar = g_bar * factor;
    for (unsigned i = 1; i < mult; ++i) h_bar = h_bar * factor;
  }
  const IntPoly h = h_bar.lift(lift);
  const IntPoly f = (g * h - t).exact_div(q);
  const ModPoly f_bar = ModPoly::reduce(f, q);

  DedekindVerdict v;
  v.q = q;
  v.gcd_witness = poly_gcd(poly_gcd(f_bar, g_bar), h_bar);
  v.divides_index = !v.gcd_witness.is_one();
  return v;
}

bool index_divisible_at_p_via_ring(i64 k, u64 p, u64 seed) {
  if (!std::holds_alternative<IrreducibleModP>(classify_shanks_mod_p(k, p, seed))) {
    throw DomainError("ring criterion needs S_k irreducible mod p (k=" + std::to_string(k) +
                      ", p=" + std::to_string(p) + ")");
  }
  const RingElem rho_p = ring_pow(RingElem::rho(k, p * p), p);
  return eval_shanks_at_ring(k, rho_p).is_zero();
}

std::string_view route_name(CertRoute r) {
  switch (r) {
    case CertRoute::full_dedekind:
      return "full_dedekind";
    case CertRoute::ring_criterion:
      return "ring_criterion";
    case CertRoute::both_agree:
      return "both_agree";
  }
  return "unknown";
}

namespace {

const ShanksParams& require_admissible(const ShanksParams& sp) {
  if (!sp.hypotheses_ok) {
    throw HypothesisViolation("k=" + std::to_string(sp.k) + " is inadmissible: " + sp.describe_failures());
  }
  return sp;
}

std::vector<u64> prime_divisors(u64 n, u64 ceiling) {
  std::vector<u64> out;
  for (const auto& pp : factor_or_throw(n, ceiling)) out.push_back(pp.prime);
  return out;
}

std::optional<u64> scan_irreducible(const IntPoly& t, u64 bound, const std::set<u64>& skip, u64 seed) {
  for (u64 l : primes_in_range(2, bound)) {
    if (skip.count(l) != 0) continue;
    const auto f = factor_mod_q(ModPoly::reduce(t, l), seed);
    if (f.size() == 1 && f[0].multiplicity == 1) return l;
  }
  return std::nullopt;
}

constexpr std::string_view kIrreducibleAssumption =
    "polynomial assumed irreducible over Q; only the critical primes can divide the index";

}  // namespace

MonogenicityCertificate certify_base(i64 k, const CertifyOptions& opts) {
  const ShanksParams sp = require_admissible(compute_params(k, opts.factor_ceiling));
  const IntPoly t = shanks_poly(k);

  MonogenicityCertificate cert;
  cert.k = k;
  cert.route = CertRoute::full_dedekind;
  cert.discriminant = FactoredDisc{1, 1, 0, sp.disc_base_root, 2};
  cert.critical_primes = prime_divisors(sp.disc_base_root, opts.factor_ceiling);
  cert.assumption = std::string(kIrreducibleAssumption);
  for (u64 q : cert.critical_primes) cert.verdicts.push_back(dedekind_at(t, q, opts.lift, opts.seed));
  cert.monogenic = std::none_of(cert.verdicts.begin(), cert.verdicts.end(),
                                [](const DedekindVerdict& v) { return v.divides_index; });
  if (opts.irreducibility_scan > 0) {
    std::set<u64> skip(cert.critical_primes.begin(), cert.critical_primes.end());
    cert.aux_irreducible_mod = scan_irreducible(t, opts.irreducibility_scan, skip, opts.seed);
  }
  return cert;
}

MonogenicityCertificate certify_power(i64 k, u64 p, const CertifyOptions& opts) {
  const ShanksParams sp = require_admissible(compute_params(k, opts.factor_ceiling));
  if (p == 2 || !is_prime(p)) throw DomainError("certify_power needs an odd prime p, got " + std::to_string(p));
  if (p >= (u64{1} << 32)) throw DomainError("p too large: " + std::to_string(p));

  const bool irreducible = std::holds_alternative<IrreducibleModP>(classify_shanks_mod_p(k, p, opts.seed));
  bool run_full = true;
  bool run_ring = irreducible;
  switch (opts.policy) {
    case RoutePolicy::automatic:
      break;
    case RoutePolicy::full:
      run_ring = false;
      break;
    case RoutePolicy::ring:
    case RoutePolicy::both:
      if (!irreducible) {
        throw DomainError("ring criterion needs S_k irreducible mod p (k=" + std::to_string(k) +
                          ", p=" + std::to_string(p) + ")");
      }
      run_full = opts.policy == RoutePolicy::both;
      break;
  }

  MonogenicityCertificate cert;
  cert.k = k;
  cert.p = p;
  cert.discriminant = factored_disc_power(k, p);
  cert.assumption = std::string(kIrreducibleAssumption);
  std::set<u64> crit{p};
  for (u64 q : prime_divisors(sp.disc_base_root, opts.factor_ceiling)) crit.insert(q);
  cert.critical_primes.assign(crit.begin(), crit.end());

  const IntPoly t = power_compose(shanks_poly(k), p);
  std::optional<bool> ring_verdict;
  if (run_ring) ring_verdict = index_divisible_at_p_via_ring(k, p, opts.seed);

  if (run_full) {
    for (u64 q : cert.critical_primes) cert.verdicts.push_back(dedekind_at(t, q, opts.lift, opts.seed));
    if (ring_verdict) {
      const auto& at_p = *std::find_if(cert.verdicts.begin(), cert.verdicts.end(),
                                       [p](const DedekindVerdict& v) { return v.q == p; });
      const ModPoly sk_bar = ModPoly::reduce(shanks_poly(k), p);
      const ModPoly expected = *ring_verdict ? sk_bar : ModPoly::constant(p, 1);
      if (at_p.divides_index != *ring_verdict || at_p.gcd_witness != expected) {
        throw InternalInconsistency("k=" + std::to_string(k) + ", p=" + std::to_string(p) +
                                    ": full criterion gives gcd " + at_p.gcd_witness.to_string() +
                                    " but S_k(rho^p) == 0 mod p^2 is " + (*ring_verdict ? "true" : "false"));
      }
      cert.route = CertRoute::both_agree;
    } else {
      cert.route = CertRoute::full_dedekind;
    }
  } else {
    // gcd(F, g, h) is either 1 or S_k mod p in this case
    DedekindVerdict v;
    v.q = p;
    v.divides_index = *ring_verdict;
    v.gcd_witness = *ring_verdict ? ModPoly::reduce(shanks_poly(k), p) : ModPoly::constant(p, 1);
    cert.verdicts.push_back(std::move(v));
    cert.route = CertRoute::ring_criterion;
    cert.assumption += "; primes dividing k^2+3k+9 never divide the index of S_k(x^p)";
  }
  cert.monogenic = std::none_of(cert.verdicts.begin(), cert.verdicts.end(),
                                [](const DedekindVerdict& v) { return v.divides_index; });
  if (opts.irreducibility_scan > 0) {
    cert.aux_irreducible_mod = scan_irreducible(t, opts.irreducibility_scan, crit, opts.seed);
  }
  return cert;
}

}  // namespace shanks
