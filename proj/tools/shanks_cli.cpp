// Command-line front end. Every command prints one record per line in the
// selected format; exit codes are listed in README.md.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shanks/dedekind.hpp"
#include "shanks/errors.hpp"
#include "shanks/intpoly.hpp"
#include "shanks/output.hpp"
#include "shanks/recurrence.hpp"
#include "shanks/search.hpp"

using namespace shanks;

namespace {

enum Exit : int {
  kOk = 0,
  kOther = 1,
  kUsage = 2,
  kCeiling = 3,
  kDisagreement = 4,
  kHypothesis = 5,
  kTheorem = 6,
  kCheckpoint = 7,
};

class MethodDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Printer {
 public:
  explicit Printer(Format f) : format_(f) {}

  void operator()(const Json& record) {
    if (!header_done_) {
      std::cout << header_line(record, format_);
      header_done_ = true;
    }
    std::cout << render_line(record, format_);
  }

 private:
  Format format_;
  bool header_done_ = false;
};

struct Globals {
  std::string format = "json";
  u64 seed = 0;
};

RoutePolicy parse_route(const std::string& s) {
  if (s == "auto") return RoutePolicy::automatic;
  if (s == "full") return RoutePolicy::full;
  if (s == "ring") return RoutePolicy::ring;
  if (s == "both") return RoutePolicy::both;
  throw DomainError("unknown route: " + s);
}

LiftStyle parse_lift(const std::string& s) {
  if (s == "canonical") return LiftStyle::canonical;
  if (s == "symmetric") return LiftStyle::symmetric;
  throw DomainError("unknown lift: " + s);
}

u64 require_prime(u64 p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return p;
}

int cmd_period(const Globals& g, i64 k, u64 m, const std::string& method) {
  if (m < 2) throw DomainError("m must be at least 2");
  const Ceilings ceil = Ceilings::from_env();
  const auto fast = [&] {
    if (is_prime(m)) return period_fast(k, m, ceil, g.seed);
    unsigned exponent = 0;
    const std::optional<u64> base = prime_base_of_power(m, exponent);
    if (!base || exponent != 2) throw DomainError("fast method needs m prime or a prime square");
    const PeriodRecord at_p = period_fast(k, *base, ceil, g.seed);
    return PeriodRecord{k, m, period_prime_square(k, *base, at_p.pi), at_p.method};
  };
  const auto brute = [&] { return period_brute(k, m, ceil.iterations); };

  Printer print(parse_format(g.format));
  if (method == "brute") {
    print(to_json(brute()));
  } else if (method == "fast") {
    print(to_json(fast()));
  } else {
    const PeriodRecord b = brute();
    const PeriodRecord f = fast();
    print(to_json(b));
    print(to_json(f));
    if (b.pi != f.pi) {
      throw MethodDisagreement("brute pi=" + std::to_string(b.pi) + " but fast pi=" + std::to_string(f.pi));
    }
  }
  return kOk;
}

int cmd_test(const Globals& g, i64 k, u64 p) {
  require_prime(p);
  Printer print(parse_format(g.format));
  print(to_json(is_k_shanks(k, p, Ceilings::from_env(), g.seed)));
  return kOk;
}

int cmd_certify(const Globals& g, i64 k, std::optional<u64> p, const std::string& route, const std::string& lift) {
  CertifyOptions opts;
  opts.policy = parse_route(route);
  opts.lift = parse_lift(lift);
  opts.seed = g.seed;
  opts.factor_ceiling = Ceilings::from_env().factor;
  Printer print(parse_format(g.format));
  print(to_json(p ? certify_power(k, require_prime(*p), opts) : certify_base(k, opts)));
  return kOk;
}

int cmd_classify(const Globals& g, i64 k, u64 p) {
  require_prime(p);
  Json j;
  j["k"] = k;
  j["p"] = p;
  j.update(to_json(classify_shanks_mod_p(k, p, g.seed)));
  Printer print(parse_format(g.format));
  print(j);
  return kOk;
}

int cmd_disc(const Globals& g, i64 k, std::optional<u64> p) {
  Json j;
  j["k"] = k;
  if (p) {
    j["p"] = *p;
    const FactoredDisc d = factored_disc_power(k, *p);
    j["factored"] = to_json(d);
    j["value"] = to_decimal(d.expand());
  } else {
    j["p"] = nullptr;
    const u64 base = compute_params(k, Ceilings::from_env().factor).disc_base_root;
    j["factored"] = to_json(FactoredDisc{1, 1, 0, base, 2});
    j["value"] = to_decimal(discriminant_exact(shanks_poly(k)));
  }
  Printer print(parse_format(g.format));
  print(j);
  return kOk;
}

int cmd_params(const Globals& g, i64 k) {
  Printer print(parse_format(g.format));
  print(to_json(compute_params(k, Ceilings::from_env().factor)));
  return kOk;
}

struct SearchFlags {
  i64 k_min = 1;
  i64 k_max = 1;
  u64 p_min = 2;
  u64 p_max = 2;
  unsigned jobs = 1;
  std::string checkpoint;
  std::string out;
  std::optional<u64> max_rows;
};

int cmd_search(const Globals& g, const SearchFlags& f) {
  const Format format = parse_format(g.format);
  SearchConfig cfg;
  cfg.k_min = f.k_min;
  cfg.k_max = f.k_max;
  cfg.p_min = f.p_min;
  cfg.p_max = f.p_max;
  cfg.jobs = f.jobs;
  cfg.max_rows = f.max_rows;
  cfg.seed = g.seed;
  cfg.ceilings = Ceilings::from_env();
  cfg.on_skip = [](i64 k, const std::string& reason) {
    std::cerr << "skip k=" << k << ": " << reason << "\n";
  };
  if (!f.checkpoint.empty()) {
    if (f.out.empty()) throw DomainError("--checkpoint requires --out");
    cfg.checkpoint = std::filesystem::path(f.checkpoint);
  }
  cfg.validate();

  SearchSummary s;
  if (f.out.empty()) {
    Printer print(format);
    s = search_shanks_primes(cfg, [&](const SearchRecord& r) { print(to_json(r)); });
  } else {
    const std::string header = header_line(to_json(SearchRecord{}), format);
    s = run_search_to_file(
        cfg, f.out, header, [&](const SearchRecord& r) { return render_line(to_json(r), format); },
        std::string(format_name(format)));
  }
  std::cerr << "rows=" << s.rows_completed << " records=" << s.records
            << " last_k=" << (s.last_k ? std::to_string(*s.last_k) : "-")
            << " finished=" << (s.finished ? "true" : "false") << "\n";
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& suite, i64 k_max, u64 p_max) {
  VerifyOptions opts;
  opts.seed = g.seed;
  opts.ceilings = Ceilings::from_env();
  Printer print(parse_format(g.format));
  bool ok = true;
  std::size_t n = 0, passed = 0;
  if (suite == "table1") {
    const Table1Report r = verify_table1(opts);
    for (const Table1Row& row : r.rows) {
      Json j;
      j["k"] = row.k;
      j["p"] = row.p;
      j["expected_pi"] = row.expected_pi;
      j["pi_p"] = row.pi_p;
      j["pi_p2"] = row.pi_p2;
      j["admissible"] = row.admissible;
      j["irreducible"] = row.irreducible;
      j["is_shanks"] = row.is_shanks;
      j["non_monogenic"] = row.non_monogenic;
      j["pass"] = row.pass;
      j["error"] = row.error;
      print(j);
      passed += row.pass;
    }
    n = r.rows.size();
    ok = r.all_pass();
  } else {
    const TheoremReport r = verify_theorem_suite(k_max, p_max, opts);
    for (const TheoremCheck& c : r.checks) {
      Json j;
      j["k"] = c.k;
      j["p"] = c.p ? Json(*c.p) : Json(nullptr);
      j["pass"] = c.pass;
      j["detail"] = c.detail;
      print(j);
      passed += c.pass;
    }
    n = r.checks.size();
    ok = r.all_pass();
    std::cerr << "skipped inadmissible k: " << r.skipped_k << "\n";
  }
  std::cerr << suite << ": " << passed << "/" << n << " pass\n";
  return ok ? kOk : kTheorem;
}

int report(int code, const std::exception& e) {
  std::cerr << "error: " << e.what() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shanks polynomial periods, k-Shanks primes and monogenicity certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", g.seed, "Seed for randomized factoring");

  i64 k = 0;
  u64 m = 0, p = 0;
  std::optional<u64> opt_p;
  std::string method = "fast", route = "auto", lift = "canonical", suite;
  i64 k_max = 10;
  u64 p_max = 20;
  SearchFlags sf;

  auto* period = app.add_subcommand("period", "Period of U_n modulo m");
  period->add_option("--k", k)->required();
  period->add_option("--m", m)->required();
  period->add_option("--method", method)->check(CLI::IsMember({"brute", "fast", "both"}));

  auto* test = app.add_subcommand("test", "Whether p is a k-Shanks prime");
  test->add_option("--k", k)->required();
  test->add_option("--p", p)->required();

  auto* certify = app.add_subcommand("certify", "Monogenicity certificate for S_k(x) or S_k(x^p)");
  certify->add_option("--k", k)->required();
  certify->add_option("--p", opt_p);
  certify->add_option("--route", route)->check(CLI::IsMember({"auto", "full", "ring", "both"}));
  certify->add_option("--lift", lift)->check(CLI::IsMember({"canonical", "symmetric"}));

  auto* search = app.add_subcommand("search", "Grid search over k and primes p");
  search->add_option("--k-min", sf.k_min);
  search->add_option("--k-max", sf.k_max)->required();
  search->add_option("--p-min", sf.p_min);
  search->add_option("--p-max", sf.p_max)->required();
  search->add_option("--jobs", sf.jobs);
  search->add_option("--checkpoint", sf.checkpoint);
  search->add_option("--out", sf.out);
  search->add_option("--max-rows", sf.max_rows);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"table1", "theorem"}));
  verify->add_option("--k-max", k_max);
  verify->add_option("--p-max", p_max);

  auto* classify = app.add_subcommand("classify", "Factorization shape of S_k modulo p");
  classify->add_option("--k", k)->required();
  classify->add_option("--p", p)->required();

  auto* disc = app.add_subcommand("disc", "Discriminant of S_k(x) or S_k(x^p)");
  disc->add_option("--k", k)->required();
  disc->add_option("--p", opt_p);

  auto* params = app.add_subcommand("params", "Admissibility parameters of k");
  params->add_option("--k", k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*period) return cmd_period(g, k, m, method);
    if (*test) return cmd_test(g, k, p);
    if (*certify) return cmd_certify(g, k, opt_p, route, lift);
    if (*search) return cmd_search(g, sf);
    if (*verify) return cmd_verify(g, suite, k_max, p_max);
    if (*classify) return cmd_classify(g, k, p);
    if (*disc) return cmd_disc(g, k, opt_p);
    if (*params) return cmd_params(g, k);
  } catch (const DomainError& e) {
    return report(kUsage, e);
  } catch (const CeilingExceeded& e) {
    return report(kCeiling, e);
  } catch (const MethodDisagreement& e) {
    return report(kDisagreement, e);
  } catch (const HypothesisViolation& e) {
    return report(kHypothesis, e);
  } catch (const TheoremViolation& e) {
    return report(kTheorem, e);
  } catch (const CheckpointError& e) {
    return report(kCheckpoint, e);
  } catch (const std::exception& e) {
    return report(kOther, e);
  }
  return kOther;
}
