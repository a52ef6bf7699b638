#pragma once

// Per-pair verification of the k-Shanks / monogenicity equivalences, the
// parallel grid search with its checkpoint file, and the check of the five known k-Shanks pairs.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shanks/arith.hpp"
#include "shanks/dedekind.hpp"
#include "shanks/fq.hpp"
#include "shanks/recurrence.hpp"

namespace shanks {

struct SearchRecord {
  i64 k = 0;
  u64 p = 0;
  Classification classification = IrreducibleModP{};
  u64 pi_p = 0;
  u64 pi_p2 = 0;
  bool is_shanks = false;
  std::optional<bool> power_monogenic;
  /// Subset of lemma31_div, lemma31_membership, lemma31_orders, cor26_shape,
  /// equiv_332, thm13_2, thm13_3 in that order.
  std::vector<std::string> checks_passed;

  bool operator==(const SearchRecord&) const = default;
};

struct VerifyOptions {
  u64 seed = 0;
  Ceilings ceilings;
};

/// Classification, periods, k-Shanks test and whichever certification the
/// theorem covers for this p. Throws HypothesisViolation for inadmissible k,
/// DomainError unless p is an odd prime, TheoremViolation on any failed check.
SearchRecord verify_theorem_pair(i64 k, u64 p, const VerifyOptions& opts = {});

/// Record for p = 2: periods and the k-Shanks flag only.
SearchRecord record_for_even_prime(i64 k, const VerifyOptions& opts = {});

struct SearchConfig {
  i64 k_min = 1;
  i64 k_max = 1;
  u64 p_min = 2;
  u64 p_max = 2;
  unsigned jobs = 1;
  std::optional<std::filesystem::path> checkpoint;
  /// Stop after this many completed k rows (the run can be resumed later).
  std::optional<u64> max_rows;
  u64 seed = 0;
  Ceilings ceilings;
  /// Called for each k skipped as inadmissible.
  std::function<void(i64 k, const std::string& reason)> on_skip;

  /// Throws DomainError for empty ranges or jobs == 0.
  void validate() const;
  /// Canonical description of everything that influences the output.
  std::string fingerprint() const;
  /// FNV-1a 64 of fingerprint() plus `extra` (e.g. the output format).
  u64 hash(const std::string& extra = {}) const;
};

struct SearchSummary {
  u64 rows_completed = 0;
  u64 records = 0;
  std::optional<i64> last_k;
  bool finished = false;
};

/// Emits one record per (admissible k, prime p) in (k, p) order, whatever
/// cfg.jobs is. `row_done` runs after the last record of each k row.
/// Rows with k <= start_after are skipped.
SearchSummary search_shanks_primes(const SearchConfig& cfg, const std::function<void(const SearchRecord&)>& emit,
                                   const std::function<void(i64 k)>& row_done = {},
                                   std::optional<i64> start_after = std::nullopt);

struct Checkpoint {
  i64 last_k = 0;
  u64 config_hash = 0;
  u64 out_bytes = 0;

  bool operator==(const Checkpoint&) const = default;
};

/// Writes to a sibling temporary file, then renames over `path`.
void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp);
/// Throws CheckpointError on malformed content or a hash mismatch.
Checkpoint read_checkpoint(const std::filesystem::path& path, u64 expected_hash);

/// Search streamed to a file. With cfg.checkpoint set, an existing checkpoint
/// is resumed: the output is truncated to the checkpointed length and the
/// search continues after the recorded k.
SearchSummary run_search_to_file(const SearchConfig& cfg, const std::filesystem::path& out,
                                 const std::string& header,
                                 const std::function<std::string(const SearchRecord&)>& render,
                                 const std::string& format_tag);

struct Table1Row {
  i64 k = 0;
  u64 p = 0;
  u64 expected_pi = 0;
  bool admissible = false;
  bool irreducible = false;
  u64 pi_p = 0;
  u64 pi_p2 = 0;
  bool is_shanks = false;
  bool non_monogenic = false;
  bool pass = false;
  std::string error;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  bool all_pass() const;
};

/// The five tabulated (k, p, period) triples.
const std::vector<Table1Row>& table1_rows();

Table1Report verify_table1(const VerifyOptions& opts = {});

struct TheoremCheck {
  i64 k = 0;
  std::optional<u64> p;
  bool pass = false;
  std::string detail;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  u64 skipped_k = 0;
  bool all_pass() const;
};

/// certify_base for each admissible k <= k_max and verify_theorem_pair for
/// each odd prime p <= p_max.
TheoremReport verify_theorem_suite(i64 k_max, u64 p_max, const VerifyOptions& opts = {});

}  // namespace shanks
