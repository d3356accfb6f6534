#ifndef PSC_HORN_HPP
#define PSC_HORN_HPP

#include <vector>

#include "psc/program.hpp"

namespace psc {

/// A Horn SC rule: an ordinary atom head and a body of SC atoms that
/// are interpreted under their upper closures.
struct HornRule {
  Atom head;
  std::vector<SCAtom> body;
};

class HornProgram {
 public:
  HornProgram() = default;
  explicit HornProgram(std::vector<HornRule> rules) : rules_(std::move(rules)) {}

  const std::vector<HornRule>& rules() const { return rules_; }
  void add(HornRule rule) { rules_.push_back(std::move(rule)); }

 private:
  std::vector<HornRule> rules_;
};

/// One-step provability: the heads of the rules whose bodies are
/// closure-satisfied by `m`.
AtomSet tp_step(const HornProgram& horn, const AtomSet& m);

/// Least fixpoint of tp_step from the empty set. The operator is
/// monotone, so this converges within (distinct heads)+1 iterations.
AtomSet least_model(const HornProgram& horn);

}  // namespace psc

#endif
