#ifndef PSC_PROGRAM_HPP
#define PSC_PROGRAM_HPP

#include <variant>
#include <vector>

#include "psc/measure.hpp"
#include "psc/preorder.hpp"
#include "psc/sc_atom.hpp"

namespace psc {

/// A set constraint atom with a pre-order on its family.
class PreorderAtom {
 public:
  PreorderAtom(SCAtom sc, Preorder order);

  const SCAtom& sc() const { return sc_; }
  const Preorder& order() const { return order_; }

  friend bool operator==(const PreorderAtom& a, const PreorderAtom& b) = default;

 private:
  SCAtom sc_;
  Preorder order_;
};

/// A set constraint atom with a measure on its family.
class MeasureAtom {
 public:
  MeasureAtom(SCAtom sc, Measure measure);

  const SCAtom& sc() const { return sc_; }
  const Measure& measure() const { return measure_; }

  friend bool operator==(const MeasureAtom& a, const MeasureAtom& b) = default;

 private:
  SCAtom sc_;
  Measure measure_;
};

using Head = std::variant<SCAtom, PreorderAtom, MeasureAtom>;

/// Strips the order/measure component; identity on plain SC atoms.
const SCAtom& reduct(const Head& head);

/// A rule: an SC or preference head and a body of SC atoms. Preference
/// atoms never appear in bodies (enforced by the types).
struct Rule {
  Head head;
  std::vector<SCAtom> body;

  friend bool operator==(const Rule& a, const Rule& b) = default;
};

enum class ProgramKind { PlainSC, Preordered, MeasureBased };

/// A finite program. Rules are held in a canonical order with exact
/// duplicates removed (a program is a set of rules). Mixing pre-ordered
/// and measure heads is rejected at construction.
class Program {
 public:
  explicit Program(std::vector<Rule> rules, AtomSet declared_extras = {});

  const std::vector<Rule>& rules() const { return rules_; }
  const AtomSet& universe() const { return universe_; }
  const AtomSet& declared_extras() const { return extras_; }
  ProgramKind kind() const { return kind_; }

  friend bool operator==(const Program& a, const Program& b) {
    return a.rules_ == b.rules_ && a.universe_ == b.universe_;
  }

 private:
  std::vector<Rule> rules_;
  AtomSet universe_;
  AtomSet extras_;
  ProgramKind kind_ = ProgramKind::PlainSC;
};

namespace detail {
/// Deterministic structural key; equal keys iff structurally equal values.
/// Used to canonicalize rule order.
std::string structural_key(const Rule& rule);
}  // namespace detail

}  // namespace psc

#endif
