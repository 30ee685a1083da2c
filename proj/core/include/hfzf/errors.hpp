#ifndef HFZF_ERRORS_HPP
#define HFZF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hfzf {

// Every failure the library reports deliberately, as opposed to programming
// errors (those assert). The kind drives the CLI exit code.
enum class ErrorKind {
  SyntaxError,      // malformed input text; position in message
  BudgetExceeded,   // context element budget exhausted
  BoundExceeded,    // explicit size guard hit (powerset, vfrom, nat_upto, fin)
  MixedContext,     // values from two different contexts combined
  FrozenContext,    // construction attempted on a frozen context
  NotAPair,
  NotInDomain,
  NotSingleValued,
  NotARelation,
  NotAFunction,
  DomainMismatch,
  NotInjective,
  NotWellFounded,
  NotTransitive,
  NotBounded,       // h(D) not a subset of D
  NonConvergence,   // fixedpoint iteration exceeded its step allowance
  NotZeroOrSucc,
  NotANat,
  NotASum,
  NotAList,
  NotATerm,
  NotATF,
  NotMaterializable,  // as_set() on a recursion interface that has no set form
  VrecGuardViolation, // recursive query at rank >= the current argument's rank
  NotAPropCode,
  MalformedFormula,
  HypNotInContext,
  MalformedMP,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a rank-recursion body queries a value it is not entitled to
// see: the offending query (canonical text), its rank, and the bound.
class VrecGuardError : public Error {
 public:
  VrecGuardError(const std::string& message, std::string query,
                 std::size_t query_rank, std::size_t bound_rank)
      : Error(ErrorKind::VrecGuardViolation, message),
        query_(std::move(query)),
        query_rank_(query_rank),
        bound_rank_(bound_rank) {}

  const std::string& query() const { return query_; }
  std::size_t query_rank() const { return query_rank_; }
  std::size_t bound_rank() const { return bound_rank_; }

 private:
  std::string query_;
  std::size_t query_rank_;
  std::size_t bound_rank_;
};

}  // namespace hfzf

#endif
