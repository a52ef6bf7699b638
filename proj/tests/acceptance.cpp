// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "oracles.hpp"
#include "shanks/dedekind.hpp"
#include "shanks/errors.hpp"
#include "shanks/output.hpp"
#include "shanks/recurrence.hpp"
#include "shanks/search.hpp"

using namespace shanks;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double time_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.pass && elapsed > time_limit_s) {
    out.fail("took " + std::to_string(elapsed) + " s, limit " + std::to_string(time_limit_s) + " s");
  }
  if (!out.pass) ++failures;
  std::printf("[%s] AC%d %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", id, name.c_str(), elapsed,
              out.detail.empty() ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
}

std::string where(i64 k, u64 p) { return "k=" + std::to_string(k) + ", p=" + std::to_string(p); }

bool admissible(i64 k) { return compute_params(k).hypotheses_ok; }

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

int main() {
  criterion(1, "five known k-Shanks pairs: pi(p) = pi(p^2) as tabulated, non-monogenic", 10.0, [] {
    Outcome o;
    const Table1Report r = verify_table1();
    if (r.rows.size() != 5) o.fail("expected 5 rows");
    for (const auto& row : r.rows) {
      if (!row.pass) {
        o.fail(where(row.k, row.p) + " failed" + (row.error.empty() ? "" : ": " + row.error));
      }
      if (row.pi_p != row.expected_pi || row.pi_p2 != row.expected_pi) o.fail(where(row.k, row.p) + " period mismatch");
    }
    o.detail = o.pass ? "5/5 rows pass" : o.detail;
    return o;
  });

  criterion(2, "S_k(x) monogenic for every admissible k <= 200", 30.0, [] {
    Outcome o;
    int n = 0;
    for (i64 k = 1; k <= 200; ++k) {
      if (!admissible(k)) continue;
      ++n;
      if (!certify_base(k).monogenic) o.fail("k=" + std::to_string(k) + " reported non-monogenic");
    }
    if (o.pass) o.detail = std::to_string(n) + " admissible k certified";
    return o;
  });

  criterion(3, "S_k(x^p) monogenic (full Dedekind) for admissible k <= 50, odd p <= 50, p | k^2+3k+9", 120.0, [] {
    Outcome o;
    CertifyOptions opts;
    opts.policy = RoutePolicy::full;
    int n = 0;
    for (i64 k = 1; k <= 50; ++k) {
      if (!admissible(k)) continue;
      for (u64 p : primes_in_range(3, 50)) {
        if (static_cast<u64>(k * k + 3 * k + 9) % p != 0) continue;
        ++n;
        const MonogenicityCertificate c = certify_power(k, p, opts);
        if (c.route != CertRoute::full_dedekind) o.fail(where(k, p) + " did not use the full route");
        if (!c.monogenic) o.fail(where(k, p) + " reported non-monogenic");
      }
    }
    if (n == 0) o.fail("no (k, p) pairs in range");
    if (o.pass) o.detail = std::to_string(n) + " pairs certified";
    return o;
  });

  criterion(4, "three-way equivalence on irreducible pairs, admissible k <= 30, odd p <= 60", 120.0, [] {
    Outcome o;
    int n = 0, shanks_hits = 0;
    for (i64 k = 1; k <= 30; ++k) {
      if (!admissible(k)) continue;
      for (u64 p : primes_in_range(3, 60)) {
        if (!std::holds_alternative<IrreducibleModP>(classify_shanks_mod_p(k, p))) continue;
        ++n;
        bool shanks_flag = false;
        try {
          shanks_flag = is_k_shanks(k, p).is_shanks;
        } catch (const InternalInconsistency& e) {
          o.fail(e.what());
          continue;
        }
        const bool ring = index_divisible_at_p_via_ring(k, p);
        const bool dedekind = dedekind_at(power_compose(shanks_poly(k), p), p).divides_index;
        if (shanks_flag != ring || ring != dedekind) {
          o.fail(where(k, p) + ": shanks=" + std::to_string(shanks_flag) + " ring=" + std::to_string(ring) +
                 " dedekind=" + std::to_string(dedekind));
        }
        shanks_hits += shanks_flag;
      }
    }
    if (n == 0) o.fail("no irreducible pairs in range");
    if (o.pass) o.detail = std::to_string(n) + " pairs, 0 disagreements, " + std::to_string(shanks_hits) + " k-Shanks";
    return o;
  });

  criterion(5, "period divisibility, p^2 membership and rho/sigma/tau orders on the same grid", 120.0, [] {
    Outcome o;
    int n = 0;
    for (i64 k = 1; k <= 30; ++k) {
      if (!admissible(k)) continue;
      for (u64 p : primes_in_range(3, 60)) {
        if (!std::holds_alternative<IrreducibleModP>(classify_shanks_mod_p(k, p))) continue;
        ++n;
        const u64 pi_p = period_fast(k, p).pi;
        const u64 pi_p2 = period_brute(k, p * p).pi;
        const u64 norm_exp = p * p + p + 1;
        if (norm_exp % pi_p != 0) o.fail(where(k, p) + ": pi(p) does not divide p^2+p+1");
        if (pi_p2 != pi_p && pi_p2 != p * pi_p) o.fail(where(k, p) + ": pi(p^2) not in {pi(p), p pi(p)}");
        const auto nf = factor_or_throw(norm_exp);
        const auto [sigma, tau] = conjugates(k, p);
        if (ring_order(RingElem::rho(k, p), norm_exp, nf) != pi_p || ring_order(sigma, norm_exp, nf) != pi_p ||
            ring_order(tau, norm_exp, nf) != pi_p) {
          o.fail(where(k, p) + ": orders of rho, sigma, tau differ from pi(p)");
        }
      }
    }
    if (o.pass) o.detail = std::to_string(n) + " pairs, 0 violations";
    return o;
  });

  criterion(6, "S_k mod p is never a single-root factorization (500 random pairs, p <= 500)", 60.0, [] {
    Outcome o;
    std::mt19937_64 gen(20261016);
    const std::vector<u64> primes = primes_in_range(2, 500);
    std::uniform_int_distribution<i64> kdist(1, 1'000'000);
    for (int i = 0; i < 500; ++i) {
      const i64 k = kdist(gen);
      const u64 p = primes[gen() % primes.size()];
      const Classification c = classify_shanks_mod_p(k, p);
      const auto roots = oracle::shanks_roots(k, p);
      const bool consistent = (std::holds_alternative<IrreducibleModP>(c) && roots.empty()) ||
                              (std::holds_alternative<SplitsDistinct>(c) && roots.size() == 3) ||
                              (std::holds_alternative<TripleRoot>(c) && roots.size() == 1);
      if (!consistent) o.fail(where(k, p) + ": classification disagrees with root count");
      if (roots.size() == 2) o.fail(where(k, p) + ": exactly two distinct roots");
    }
    if (o.pass) o.detail = "500 pairs consistent";
    return o;
  });

  criterion(7, "exact discriminants: S_k(x^p) for k <= 5, p in {3, 5}; S_k for k <= 500", 60.0, [] {
    Outcome o;
    for (i64 k = 1; k <= 5; ++k) {
      for (u64 p : {3u, 5u}) {
        if (discriminant_exact(power_compose(shanks_poly(k), p)) != factored_disc_power(k, p).expand()) {
          o.fail(where(k, p) + ": resultant and factored form differ");
        }
      }
    }
    for (i64 k = 1; k <= 500; ++k) {
      const BigInt base = k * k + 3 * k + 9;
      if (discriminant_exact(shanks_poly(k)) != base * base) o.fail("k=" + std::to_string(k) + ": disc(S_k) mismatch");
    }
    return o;
  });

  criterion(8, "brute and fast periods agree for k <= 30, p <= 50, moduli p and p^2", 120.0, [] {
    Outcome o;
    int n = 0;
    for (i64 k = 1; k <= 30; ++k) {
      for (u64 p : primes_in_range(2, 50)) {
        const u64 fast = period_fast(k, p).pi;
        if (fast != period_brute(k, p).pi) o.fail(where(k, p) + ": mod p");
        if (period_prime_square(k, p, fast) != period_brute(k, p * p).pi) o.fail(where(k, p) + ": mod p^2");
        n += 2;
      }
    }
    if (o.pass) o.detail = std::to_string(n) + " comparisons";
    return o;
  });

  criterion(9, "interrupted-and-resumed search is byte-identical to an uninterrupted run", 120.0, [] {
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / ("shanks_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    SearchConfig cfg;
    cfg.k_min = 1;
    cfg.k_max = 40;
    cfg.p_min = 2;
    cfg.p_max = 60;
    cfg.seed = 7;
    const auto render = [](const SearchRecord& r) { return render_line(to_json(r), Format::json); };

    run_search_to_file(cfg, dir / "full.jsonl", "", render, "json");
    cfg.jobs = 4;
    run_search_to_file(cfg, dir / "full_parallel.jsonl", "", render, "json");

    cfg.checkpoint = dir / "search.ckpt";
    for (u64 chunk : {3u, 5u, 1u}) {
      cfg.max_rows = chunk;
      cfg.jobs = static_cast<unsigned>(chunk);
      run_search_to_file(cfg, dir / "resumed.jsonl", "", render, "json");
      // leave a torn record behind as an abrupt stop would
      std::ofstream(dir / "resumed.jsonl", std::ios::binary | std::ios::app) << "{\"k\":";
    }
    cfg.max_rows.reset();
    cfg.jobs = 2;
    const SearchSummary s = run_search_to_file(cfg, dir / "resumed.jsonl", "", render, "json");

    const std::string full = slurp(dir / "full.jsonl");
    if (full.empty()) o.fail("empty search output");
    if (slurp(dir / "full_parallel.jsonl") != full) o.fail("parallel run differs from serial run");
    if (slurp(dir / "resumed.jsonl") != full) o.fail("resumed run differs from uninterrupted run");
    if (!s.finished) o.fail("resumed search did not finish");
    if (o.pass) o.detail = std::to_string(full.size()) + " bytes identical";
    fs::remove_all(dir);
    return o;
  });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
