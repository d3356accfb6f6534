#ifndef PSC_ERRORS_HPP
#define PSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psc {

enum class ErrorCode {
  SemanticError,    // invariant violation in a program or atom
  NotAModel,        // comparison precondition failed
  OrderDomain,      // projection outside the family, or no value defined for it
  MixedInfinity,    // +inf and -inf in one sum
  ModeMismatch,     // order mode incompatible with the program kind
  CapExceeded,      // search space larger than the configured cap
  WidthExceeded,    // materialization bound exceeded
  StrongNegInGen,   // strong negation in a generating program
  PivotNotInGraph,  // preferred vertex does not occur in the edge list
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* to_string(ErrorCode code);

}  // namespace psc

#endif
