#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shanks {

/// Argument outside an operation's domain (k < 1, composite modulus, p = 2 where odd p is required).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force loop or trial-division factorization hit its configured ceiling.
class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// k does not satisfy k >= 1, k != 3 (mod 9), D squarefree.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result contradicts a structural fact the algorithms rely on.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// (g*h - T) was not divisible by q coefficientwise.
class ExactDivisionFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One of the theorem's equivalences failed on an admissible input.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Checkpoint unreadable or written for a different configuration.
class CheckpointError : public std::runtime_error {
 public:
  CheckpointError(const std::string& what, std::uint64_t offset)
      : std::runtime_error(what + " (at byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::uint64_t offset_;
};

}  // namespace shanks
