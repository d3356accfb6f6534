#ifndef PSC_ATOMS_HPP
#define PSC_ATOMS_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace psc {

/// A propositional atom. Names follow the pattern: a lowercase letter,
/// then letters/digits/underscores, with an optional parenthesized
/// nonnegative integer suffix, e.g. `cal` or `d(120)`.
class Atom {
 public:
  explicit Atom(std::string name);

  const std::string& name() const { return name_; }

  static bool valid_name(std::string_view name);

  friend bool operator==(const Atom& a, const Atom& b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    return a.name_ <=> b.name_;
  }

 private:
  std::string name_;
};

/// A finite set of atoms. Iteration is always in the canonical order
/// (lexicographic on names), so everything built on top is deterministic.
class AtomSet {
 public:
  AtomSet() = default;
  AtomSet(std::initializer_list<Atom> atoms);
  explicit AtomSet(std::vector<Atom> atoms);

  /// Convenience: builds the set from name strings.
  static AtomSet of(std::initializer_list<std::string_view> names);

  bool contains(const Atom& a) const;
  bool subset_of(const AtomSet& other) const;
  AtomSet intersect(const AtomSet& other) const;
  AtomSet unite(const AtomSet& other) const;
  AtomSet difference(const AtomSet& other) const;

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }
  const std::vector<Atom>& atoms() const { return atoms_; }

  friend bool operator==(const AtomSet& a, const AtomSet& b) = default;

  /// Canonical set order: by cardinality, then lexicographic on the
  /// sorted name sequences. Used for model lists and family members.
  friend std::strong_ordering operator<=>(const AtomSet& a, const AtomSet& b);

 private:
  std::vector<Atom> atoms_;  // sorted, unique
};

}  // namespace psc

#endif
