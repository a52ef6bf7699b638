#include "shanks/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "shanks/errors.hpp"
#include "shanks/intpoly.hpp"

namespace shanks {

namespace {

// Period and order checks shared by the odd and even prime paths.
void check_periods(const ShanksTestResult& t, u64 p, SearchRecord& rec) {
  const std::string where = "k=" + std::to_string(t.k) + ", p=" + std::to_string(p);
  // pi(p^2) is pi(p) or p*pi(p) exactly when A^pi(p) = I mod p and A^(p*pi(p)) = I mod p^2
  const u64 m2 = p * p;
  const Mat3 a = transition_matrix(t.k, m2);
  const bool ok_p = is_identity(mat_pow(transition_matrix(t.k, p), t.pi_p, p), p);
  const bool ok_p2 = is_identity(mat_pow(a, p * t.pi_p, m2), m2);
  const bool ok_flag = (t.pi_p2 == t.pi_p) == is_identity(mat_pow(a, t.pi_p, m2), m2);
  if (!ok_p || !ok_p2 || !ok_flag) throw TheoremViolation(where + ": pi(p^2) not in {pi(p), p*pi(p)}");
  if (t.pi_p < 3) throw TheoremViolation(where + ": period below 3");

  if (std::holds_alternative<IrreducibleModP>(t.classification)) {
    const u64 n = p * p + p + 1;
    if (n % t.pi_p != 0) throw TheoremViolation(where + ": pi(p) does not divide p^2+p+1");
    rec.checks_passed.emplace_back("lemma31_div");
  }
  rec.checks_passed.emplace_back("lemma31_membership");
}

void check_orders(i64 k, u64 p, u64 pi_p, const Ceilings& ceilings, SearchRecord& rec) {
  const u64 n = p * p + p + 1;
  const auto nf = factor_or_throw(n, ceilings.factor);
  const auto [sigma, tau] = conjugates(k, p);
  const u64 o_rho = ring_order(RingElem::rho(k, p), n, nf);
  const u64 o_sigma = ring_order(sigma, n, nf);
  const u64 o_tau = ring_order(tau, n, nf);
  if (o_rho != pi_p || o_sigma != pi_p || o_tau != pi_p) {
    throw TheoremViolation("k=" + std::to_string(k) + ", p=" + std::to_string(p) +
                           ": orders of rho, sigma, tau are " + std::to_string(o_rho) + ", " +
                           std::to_string(o_sigma) + ", " + std::to_string(o_tau) + " but pi(p) = " +
                           std::to_string(pi_p));
  }
  rec.checks_passed.emplace_back("lemma31_orders");
}

ShanksTestResult shanks_test_or_violation(i64 k, u64 p, const VerifyOptions& opts) {
  try {
    return is_k_shanks(k, p, opts.ceilings, opts.seed);
  } catch (const InternalInconsistency& e) {
    throw TheoremViolation(e.what());
  }
}

SearchRecord base_record(const ShanksTestResult& t) {
  SearchRecord rec;
  rec.k = t.k;
  rec.p = t.p;
  rec.classification = t.classification;
  rec.pi_p = t.pi_p;
  rec.pi_p2 = t.pi_p2;
  rec.is_shanks = t.is_shanks;
  return rec;
}

}  // namespace

SearchRecord verify_theorem_pair(i64 k, u64 p, const VerifyOptions& opts) {
  const ShanksParams sp = compute_params(k, opts.ceilings.factor);
  if (!sp.hypotheses_ok) {
    throw HypothesisViolation("k=" + std::to_string(k) + " is inadmissible: " + sp.describe_failures());
  }
  if (p == 2 || !is_prime(p)) throw DomainError("verify_theorem_pair needs an odd prime, got " + std::to_string(p));
  const std::string where = "k=" + std::to_string(k) + ", p=" + std::to_string(p);

  const ShanksTestResult t = shanks_test_or_violation(k, p, opts);
  SearchRecord rec = base_record(t);
  check_periods(t, p, rec);

  CertifyOptions copts;
  copts.seed = opts.seed;
  copts.factor_ceiling = opts.ceilings.factor;

  if (std::holds_alternative<IrreducibleModP>(t.classification)) {
    check_orders(k, p, t.pi_p, opts.ceilings, rec);
    rec.checks_passed.emplace_back("cor26_shape");
    const bool via_ring = index_divisible_at_p_via_ring(k, p, opts.seed);
    const DedekindVerdict full = dedekind_at(power_compose(shanks_poly(k), p), p, copts.lift, opts.seed);
    if (via_ring != t.is_shanks || full.divides_index != t.is_shanks) {
      throw TheoremViolation(where + ": k-Shanks=" + (t.is_shanks ? "true" : "false") +
                             ", ring criterion=" + (via_ring ? "true" : "false") +
                             ", p | index=" + (full.divides_index ? "true" : "false"));
    }
    rec.checks_passed.emplace_back("equiv_332");
    copts.policy = RoutePolicy::both;
    MonogenicityCertificate cert;
    try {
      cert = certify_power(k, p, copts);
    } catch (const InternalInconsistency& e) {
      throw TheoremViolation(e.what());
    }
    rec.power_monogenic = cert.monogenic;
    if (t.is_shanks == cert.monogenic) {
      throw TheoremViolation(where + ": k-Shanks status does not match non-monogenicity of S_k(x^p)");
    }
    rec.checks_passed.emplace_back("thm13_2");
  } else if (std::holds_alternative<SplitsDistinct>(t.classification)) {
    rec.checks_passed.emplace_back("cor26_shape");
  } else {
    rec.checks_passed.emplace_back("cor26_shape");
    copts.policy = RoutePolicy::full;
    const MonogenicityCertificate cert = certify_power(k, p, copts);
    rec.power_monogenic = cert.monogenic;
    if (!cert.monogenic) throw TheoremViolation(where + ": p | k^2+3k+9 but S_k(x^p) is not monogenic");
    rec.checks_passed.emplace_back("thm13_3");
  }
  return rec;
}

SearchRecord record_for_even_prime(i64 k, const VerifyOptions& opts) {
  const ShanksTestResult t = shanks_test_or_violation(k, 2, opts);
  SearchRecord rec = base_record(t);
  check_periods(t, 2, rec);
  rec.checks_passed.emplace_back("cor26_shape");
  return rec;
}

void SearchConfig::validate() const {
  if (k_min < 1 || k_max < k_min) throw DomainError("k range must satisfy 1 <= k_min <= k_max");
  if (k_max > kMaxK) throw DomainError("k_max exceeds supported range");
  if (p_max < p_min || p_max < 2) throw DomainError("p range is empty");
  if (p_max >= (u64{1} << 32)) throw DomainError("p_max too large");
  if (jobs == 0) throw DomainError("jobs must be >= 1");
}

std::string SearchConfig::fingerprint() const {
  std::ostringstream os;
  os << "k=" << k_min << ".." << k_max << ";p=" << p_min << ".." << p_max << ";seed=" << seed
     << ";factor_ceiling=" << ceilings.factor << ";iterations=";
  if (ceilings.iterations) {
    os << *ceilings.iterations;
  } else {
    os << "default";
  }
  return os.str();
}

u64 SearchConfig::hash(const std::string& extra) const {
  u64 h = 0xcbf29ce484222325ULL;
  for (unsigned char c : fingerprint() + "|" + extra) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

SearchSummary search_shanks_primes(const SearchConfig& cfg, const std::function<void(const SearchRecord&)>& emit,
                                   const std::function<void(i64 k)>& row_done, std::optional<i64> start_after) {
  cfg.validate();
  const std::vector<u64> primes = primes_in_range(cfg.p_min, cfg.p_max);
  std::vector<i64> rows;
  for (i64 k = cfg.k_min; k <= cfg.k_max; ++k) {
    if (start_after && k <= *start_after) continue;
    const ShanksParams sp = compute_params(k, cfg.ceilings.factor);
    if (!sp.hypotheses_ok) {
      if (cfg.on_skip) cfg.on_skip(k, sp.describe_failures());
      continue;
    }
    rows.push_back(k);
  }
  std::size_t limit = rows.size();
  if (cfg.max_rows && *cfg.max_rows < limit) limit = static_cast<std::size_t>(*cfg.max_rows);

  VerifyOptions vopts;
  vopts.seed = cfg.seed;
  vopts.ceilings = cfg.ceilings;
  auto compute_row = [&](i64 k) {
    std::vector<SearchRecord> out;
    out.reserve(primes.size());
    for (u64 p : primes) out.push_back(p == 2 ? record_for_even_prime(k, vopts) : verify_theorem_pair(k, p, vopts));
    return out;
  };

  SearchSummary summary;
  auto deliver = [&](i64 k, const std::vector<SearchRecord>& recs) {
    for (const auto& r : recs) emit(r);
    summary.records += recs.size();
    ++summary.rows_completed;
    summary.last_k = k;
    if (row_done) row_done(k);
  };

  if (cfg.jobs <= 1 || limit <= 1) {
    for (std::size_t i = 0; i < limit; ++i) deliver(rows[i], compute_row(rows[i]));
    summary.finished = limit == rows.size();
    return summary;
  }

  // Workers claim rows in index order; the caller's thread emits them in the same order.
  struct Slot {
    bool ready = false;
    std::vector<SearchRecord> records;
    std::exception_ptr error;
  };
  std::vector<Slot> slots(limit);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= limit) return;
      Slot local;
      try {
        local.records = compute_row(rows[i]);
      } catch (...) {
        local.error = std::current_exception();
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        slots[i].records = std::move(local.records);
        slots[i].error = local.error;
        slots[i].ready = true;
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  const unsigned width = std::min<std::size_t>(cfg.jobs, limit);
  pool.reserve(width);
  for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);

  std::exception_ptr failure;
  for (std::size_t i = 0; i < limit && !failure; ++i) {
    std::vector<SearchRecord> recs;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return slots[i].ready; });
      if (slots[i].error) {
        failure = slots[i].error;
        break;
      }
      recs = std::move(slots[i].records);
    }
    try {
      deliver(rows[i], recs);
    } catch (...) {
      failure = std::current_exception();
    }
  }
  stop.store(true);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  summary.finished = limit == rows.size();
  return summary;
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw CheckpointError("cannot write " + tmp.string(), 0);
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(cp.config_hash));
    os << "k=" << cp.last_k << "\n" << "config=" << hash << "\n" << "out_bytes=" << cp.out_bytes << "\n";
    os.flush();
    if (!os) throw CheckpointError("short write to " + tmp.string(), 0);
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint read_checkpoint(const std::filesystem::path& path, u64 expected_hash) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw CheckpointError("cannot open checkpoint " + path.string(), 0);
  std::string content((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());

  Checkpoint cp;
  std::size_t pos = 0;
  auto field = [&](const std::string& key, bool hex) -> u64 {
    const std::size_t start = pos;
    const std::string prefix = key + "=";
    if (content.compare(pos, prefix.size(), prefix) != 0) {
      throw CheckpointError("expected '" + prefix + "' in " + path.string(), start);
    }
    pos += prefix.size();
    const std::size_t nl = content.find('\n', pos);
    if (nl == std::string::npos) throw CheckpointError("unterminated line in " + path.string(), start);
    const std::string value = content.substr(pos, nl - pos);
    std::size_t used = 0;
    u64 v = 0;
    try {
      v = std::stoull(value, &used, hex ? 16 : 10);
    } catch (const std::exception&) {
      used = 0;
    }
    if (value.empty() || used != value.size() || value[0] == '-' || value[0] == '+') {
      throw CheckpointError("malformed value for '" + key + "' in " + path.string(), pos);
    }
    pos = nl + 1;
    return v;
  };
  cp.last_k = static_cast<i64>(field("k", false));
  const std::size_t hash_at = pos;
  cp.config_hash = field("config", true);
  cp.out_bytes = field("out_bytes", false);
  if (pos != content.size()) throw CheckpointError("trailing data in " + path.string(), pos);
  if (cp.config_hash != expected_hash) {
    throw CheckpointError("checkpoint " + path.string() + " was written for a different configuration", hash_at);
  }
  return cp;
}

SearchSummary run_search_to_file(const SearchConfig& cfg, const std::filesystem::path& out,
                                 const std::string& header,
                                 const std::function<std::string(const SearchRecord&)>& render,
                                 const std::string& format_tag) {
  cfg.validate();
  const u64 hash = cfg.hash(format_tag);
  std::optional<i64> start_after;
  std::ofstream os;
  if (cfg.checkpoint && std::filesystem::exists(*cfg.checkpoint)) {
    const Checkpoint cp = read_checkpoint(*cfg.checkpoint, hash);
    std::error_code ec;
    const auto size = std::filesystem::file_size(out, ec);
    if (ec || size < cp.out_bytes) {
      throw CheckpointError("output " + out.string() + " is shorter than the checkpoint records", cp.out_bytes);
    }
    // drop anything written after the last checkpointed row
    std::filesystem::resize_file(out, cp.out_bytes);
    os.open(out, std::ios::binary | std::ios::app);
    start_after = cp.last_k;
  } else {
    os.open(out, std::ios::binary | std::ios::trunc);
    os << header;
  }
  if (!os) throw std::runtime_error("cannot open output " + out.string());

  std::string row;
  auto emit = [&](const SearchRecord& r) { row += render(r); };
  auto row_done = [&](i64 k) {
    os << row;
    row.clear();
    os.flush();
    if (!os) throw std::runtime_error("write to " + out.string() + " failed");
    if (cfg.checkpoint) write_checkpoint(*cfg.checkpoint, {k, hash, static_cast<u64>(os.tellp())});
  };
  SearchSummary s = search_shanks_primes(cfg, emit, row_done, start_after);
  os.flush();
  return s;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = [] {
    std::vector<Table1Row> r(5);
    const std::array<std::array<u64, 3>, 5> data{{{33, 17, 307}, {95, 13, 183}, {409, 61, 3783}, {618, 43, 1893},
                                                   {987, 101, 10303}}};
    for (std::size_t i = 0; i < 5; ++i) {
      r[i].k = static_cast<i64>(data[i][0]);
      r[i].p = data[i][1];
      r[i].expected_pi = data[i][2];
    }
    return r;
  }();
  return rows;
}

bool Table1Report::all_pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.pass; });
}

Table1Report verify_table1(const VerifyOptions& opts) {
  Table1Report report;
  for (Table1Row row : table1_rows()) {
    try {
      row.admissible = compute_params(row.k, opts.ceilings.factor).hypotheses_ok;
      row.irreducible = std::holds_alternative<IrreducibleModP>(classify_shanks_mod_p(row.k, row.p, opts.seed));
      const ShanksTestResult t = is_k_shanks(row.k, row.p, opts.ceilings, opts.seed);
      row.pi_p = t.pi_p;
      row.pi_p2 = t.pi_p2;
      row.is_shanks = t.is_shanks;
      if (row.admissible) {
        CertifyOptions copts;
        copts.seed = opts.seed;
        copts.factor_ceiling = opts.ceilings.factor;
        row.non_monogenic = !certify_power(row.k, row.p, copts).monogenic;
      }
      row.pass = row.admissible && row.irreducible && row.pi_p == row.expected_pi &&
                 row.pi_p2 == row.expected_pi && row.is_shanks && row.non_monogenic;
    } catch (const std::exception& e) {
      row.error = e.what();
      row.pass = false;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool TheoremReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.pass; });
}

TheoremReport verify_theorem_suite(i64 k_max, u64 p_max, const VerifyOptions& opts) {
  TheoremReport report;
  const std::vector<u64> primes = primes_in_range(3, p_max);
  CertifyOptions copts;
  copts.seed = opts.seed;
  copts.factor_ceiling = opts.ceilings.factor;
  for (i64 k = 1; k <= k_max; ++k) {
    if (!compute_params(k, opts.ceilings.factor).hypotheses_ok) {
      ++report.skipped_k;
      continue;
    }
    TheoremCheck base{k, std::nullopt, false, {}};
    try {
      base.pass = certify_base(k, copts).monogenic;
      base.detail = base.pass ? "S_k(x) monogenic" : "S_k(x) reported non-monogenic";
    } catch (const std::exception& e) {
      base.detail = e.what();
    }
    report.checks.push_back(std::move(base));
    for (u64 p : primes) {
      TheoremCheck c{k, p, false, {}};
      try {
        const SearchRecord r = verify_theorem_pair(k, p, opts);
        c.pass = true;
        c.detail = std::string(classification_tag(r.classification));
        for (const auto& tag : r.checks_passed) c.detail += " " + tag;
      } catch (const std::exception& e) {
        c.detail = e.what();
      }
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace shanks
