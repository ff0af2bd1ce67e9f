#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pmv {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerator outside {0, ..., n} or an index outside a carrier.
class InvalidElement : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad tables, bad JSON shape, wrong signature.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Operation tables that violate one of the algebra axioms.
class AxiomViolation : public InvalidInput {
 public:
  AxiomViolation(std::string axiom, std::string witness)
      : InvalidInput("axiom '" + axiom + "' violated: " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  std::string const& axiom() const noexcept { return axiom_; }
  std::string const& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

/// Exhaustive procedures refuse inputs above a fixed size.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Backtracking searches stop after a fixed number of nodes.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : Error("search budget of " + std::to_string(budget) +
              " nodes exceeded"),
        budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

/// A structured space handed to an operation that requires membership in
/// the dual category.
class NotAMember : public Error {
 public:
  using Error::Error;
};

/// Raised when a result the theory guarantees fails to materialise.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Node counter shared by the backtracking searches.
class SearchBudget {
 public:
  static constexpr std::uint64_t kDefault = 50'000'000;

  explicit SearchBudget(std::uint64_t limit = kDefault) : limit_(limit) {}

  void tick() {
    if (++used_ > limit_) throw BudgetExceeded(limit_);
  }

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace pmv
