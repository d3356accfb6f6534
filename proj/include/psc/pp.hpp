#ifndef PSC_PP_HPP
#define PSC_PP_HPP

#include <vector>

#include "psc/program.hpp"

namespace psc::pp {

/// A preference formula over basic desires. A trajectory is abstracted
/// to the set of desires it satisfies, so comparisons take AtomSets.
///
/// Basic: one desire. Atomic: a ranked chain of desires. And/Or/Not
/// combine formulas; Lex ranks a chain of formulas lexicographically.
class PrefFormula {
 public:
  enum class Node { Basic, Atomic, And, Or, Not, Lex };

  static PrefFormula basic(Atom desire);
  static PrefFormula atomic(std::vector<Atom> desires);  // n >= 1
  static PrefFormula conj(PrefFormula lhs, PrefFormula rhs);
  static PrefFormula disj(PrefFormula lhs, PrefFormula rhs);
  static PrefFormula neg(PrefFormula inner);
  static PrefFormula lex(std::vector<PrefFormula> parts);  // k >= 1

  Node node() const { return node_; }
  const std::vector<Atom>& desires() const { return desires_; }
  const std::vector<PrefFormula>& parts() const { return parts_; }
  const PrefFormula& lhs() const { return parts_[0]; }
  const PrefFormula& rhs() const { return parts_[1]; }
  const PrefFormula& inner() const { return parts_[0]; }

  /// Every desire atom occurring in the formula.
  AtomSet desire_atoms() const;

  friend bool operator==(const PrefFormula& a, const PrefFormula& b);

 private:
  PrefFormula() = default;

  Node node_ = Node::Basic;
  std::vector<Atom> desires_;       // Basic (1 entry) and Atomic
  std::vector<PrefFormula> parts_;  // And/Or (2), Not (1), Lex (k)
};

/// alpha is preferred to beta: the inductive strict relation.
bool preferred(const PrefFormula& psi, const AtomSet& alpha, const AtomSet& beta);

/// alpha is indistinguishable from beta: the inductive companion.
bool indistinguishable(const PrefFormula& psi, const AtomSet& alpha, const AtomSet& beta);

/// Compiles the formula into a pre-ordered atom over its desire atoms:
/// the family is the full powerset and A <= B iff preferred(A,B) or
/// indistinguishable(A,B), taken verbatim (no transitive repair).
/// Error(WidthExceeded) beyond 12 desires.
PreorderAtom compile(const PrefFormula& psi);

}  // namespace psc::pp

#endif
