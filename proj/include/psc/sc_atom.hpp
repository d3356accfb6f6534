#ifndef PSC_SC_ATOM_HPP
#define PSC_SC_ATOM_HPP

#include "psc/atoms.hpp"
#include "psc/family.hpp"

namespace psc {

/// A set constraint atom: a base set X and a family F of subsets of X.
/// A model M satisfies it iff M ∩ X is in F.
class SCAtom {
 public:
  SCAtom(AtomSet base, Family family);

  const AtomSet& base() const { return base_; }
  const Family& family() const { return family_; }

  bool satisfied_by(const AtomSet& m) const {
    return family_.contains(m.intersect(base_));
  }

  /// Satisfaction of the closure ⟨X, F̄⟩ without materializing F̄.
  bool closure_satisfied_by(const AtomSet& m) const {
    return family_.closure_contains(m.intersect(base_));
  }

  /// A positive literal `a` as ⟨{a},{{a}}⟩, a negative one as ⟨{a},{∅}⟩.
  static SCAtom literal(const Atom& a, bool negated);

  /// True if this atom has the exact shape produced by literal().
  bool is_positive_literal() const;
  bool is_negative_literal() const;

  friend bool operator==(const SCAtom& a, const SCAtom& b) = default;

 private:
  AtomSet base_;
  Family family_;
};

}  // namespace psc

#endif
