#ifndef PSC_ASO_HPP
#define PSC_ASO_HPP

#include <map>
#include <optional>
#include <vector>

#include "psc/normal.hpp"
#include "psc/program.hpp"

namespace psc::aso {

/// An atom or a strong-negated atom.
struct Literal {
  Atom atom;
  bool strong_neg = false;

  friend bool operator==(const Literal& a, const Literal& b) = default;
};

/// A Boolean combination: literals, default negation of a literal,
/// conjunction, disjunction. Strong negation appears only inside
/// literals; default negation only directly on literals.
class BoolComb {
 public:
  enum class Node { Lit, DefaultNeg, And, Or };

  static BoolComb lit(Literal l);
  static BoolComb def_neg(Literal l);
  static BoolComb conj(BoolComb lhs, BoolComb rhs);
  static BoolComb disj(BoolComb lhs, BoolComb rhs);

  Node node() const { return node_; }
  const Literal& literal() const { return lit_; }
  const BoolComb& lhs() const { return children_[0]; }
  const BoolComb& rhs() const { return children_[1]; }

  /// Satisfaction by an answer set of a normal program: such a set
  /// contains only atoms, so a strong-negated literal is never in it.
  bool satisfied_by(const AtomSet& s) const;

  /// Every atom occurring in the combination.
  void collect_atoms(std::vector<Atom>& out) const;

  friend bool operator==(const BoolComb& a, const BoolComb& b);

 private:
  BoolComb() = default;

  Node node_ = Node::Lit;
  Literal lit_{Atom("a"), false};
  std::vector<BoolComb> children_;
};

/// C_1 > ... > C_k <- body. Options are ranked best-first.
struct AsoPrefRule {
  std::vector<BoolComb> options;  // k >= 1
  std::vector<Literal> body_pos;
  std::vector<Literal> body_neg;

  bool body_satisfied_by(const AtomSet& s) const;
  AtomSet atoms() const;

  friend bool operator==(const AsoPrefRule& a, const AsoPrefRule& b) = default;
};

/// A generating normal program plus ranked-option preference rules.
struct AsoProgram {
  NormalProgram gen;
  std::vector<AsoPrefRule> pref;

  friend bool operator==(const AsoProgram& a, const AsoProgram& b) = default;
};

/// Satisfaction degree of a preference rule: irrelevant, or the least
/// index (1-based) of a satisfied option.
class Degree {
 public:
  static Degree irrelevant() { return Degree(0); }
  static Degree at(int index);

  bool is_irrelevant() const { return index_ == 0; }
  int index() const { return index_; }

  friend bool operator==(const Degree& a, const Degree& b) = default;

 private:
  explicit Degree(int index) : index_(index) {}
  int index_;
};

Degree satisfaction_degree(const AtomSet& s, const AsoPrefRule& rule);

/// The order on degrees: irrelevant and 1 are mutually >=, irrelevant
/// beats every higher index, and lower indices beat higher ones.
bool degree_geq(const Degree& a, const Degree& b);
bool degree_gt(const Degree& a, const Degree& b);

/// Numeric rank with degree_geq(a,b) iff rank(a) <= rank(b).
int degree_rank(const Degree& d);

enum class VectorOrder { Equal, Greater, GreaterEqualOnly, Less, Incomparable };

/// Componentwise comparison of the two satisfaction vectors.
VectorOrder vector_compare(const AtomSet& s1, const AtomSet& s2,
                           const std::vector<AsoPrefRule>& pref);

/// Answer sets of the generating program (by the reference transform)
/// that no other answer set strictly beats.
std::vector<AtomSet> aso_optimal_models(const AsoProgram& program, std::size_t cap = 16);

/// The translation into a simple pre-ordered program over
/// At ∪ barred(At) ∪ {spoiler}: the generating rules as literal SC
/// rules, one ranked preference fact per preference rule (ordering the
/// barred projections by satisfaction degree), and the consistency
/// rules that force the barred copy to mirror the plain atoms.
struct Translation {
  Program program;
  AtomSet base_atoms;              // At
  std::map<Atom, Atom> barred;     // a -> a's barred copy
  Atom spoiler;                    // the auxiliary inconsistency atom

  /// Bars a subset of At.
  AtomSet bar(const AtomSet& plain) const;

  /// Projection back to At.
  AtomSet project(const AtomSet& m) const;
};

Translation translate(const AsoProgram& program);

}  // namespace psc::aso

#endif
