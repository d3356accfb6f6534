#ifndef PSC_FAMILY_HPP
#define PSC_FAMILY_HPP

#include <cstddef>
#include <vector>

#include "psc/atoms.hpp"

namespace psc {

/// The family F of a set constraint atom: which subsets of the base are
/// acceptable. Either an explicit list of sets or one of the builtin
/// algorithmic kinds (even cardinality, cardinality range, full powerset).
class Family {
 public:
  enum class Kind { Extensional, Even, Card, Any };

  static Family extensional(std::vector<AtomSet> members);
  static Family even();
  static Family card(std::size_t lo, std::size_t hi);  // requires lo <= hi
  static Family any();

  Kind kind() const { return kind_; }
  const std::vector<AtomSet>& members() const { return members_; }
  std::size_t card_lo() const { return lo_; }
  std::size_t card_hi() const { return hi_; }

  /// Membership test; `y` is assumed to be a subset of the owning base.
  bool contains(const AtomSet& y) const;

  /// Membership in the upper closure: true iff some member of F is a
  /// subset of `y`. Builtin kinds use closed-form rules instead of a
  /// subset search.
  bool closure_contains(const AtomSet& y) const;

  friend bool operator==(const Family& a, const Family& b) = default;

 private:
  Family(Kind kind, std::vector<AtomSet> members, std::size_t lo, std::size_t hi)
      : kind_(kind), members_(std::move(members)), lo_(lo), hi_(hi) {}

  Kind kind_;
  std::vector<AtomSet> members_;  // extensional only; sorted, unique
  std::size_t lo_ = 0, hi_ = 0;   // card only
};

}  // namespace psc

#endif
