#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cak {

/// Malformed graph or model text. Carries the 1-based line number of the
/// offending line (0 when the problem is not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An operation was called outside its domain (non-chordal input to a
/// theorem-level routine, empty vertex set, shared endpoints, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural guarantee failed to materialize. Either the input breached a
/// precondition that could not be checked cheaply, or there is a bug.
/// `claim()` names the guarantee, e.g. "claim-6" or "lemma-1".
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(std::string claim, const std::string& what)
      : std::logic_error(claim + ": " + what), claim_(std::move(claim)) {}

  const std::string& claim() const noexcept { return claim_; }

 private:
  std::string claim_;
};

/// Random generation gave up after its rejection budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SearchStatus { found, none, budget_exceeded };

/// Result of an exhaustive search that may run out of budget. `none` means
/// the search space was exhausted; `budget_exceeded` means it was not.
template <class T>
struct Bounded {
  SearchStatus status = SearchStatus::none;
  std::optional<T> value;
  std::uint64_t visited = 0;

  bool found() const { return status == SearchStatus::found; }
  bool exhausted_without_result() const { return status == SearchStatus::none; }
};

/// Search node budget: CAK_BUDGET if set, otherwise `fallback`.
std::uint64_t search_budget(std::uint64_t fallback = 10'000'000);

}  // namespace cak
