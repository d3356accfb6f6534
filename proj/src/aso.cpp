#include "psc/aso.hpp"

#include <algorithm>

#include "psc/errors.hpp"
#include "psc/oracle.hpp"

namespace psc::aso {

BoolComb BoolComb::lit(Literal l) {
  BoolComb c;
  c.node_ = Node::Lit;
  c.lit_ = std::move(l);
  return c;
}

BoolComb BoolComb::def_neg(Literal l) {
  BoolComb c;
  c.node_ = Node::DefaultNeg;
  c.lit_ = std::move(l);
  return c;
}

BoolComb BoolComb::conj(BoolComb lhs, BoolComb rhs) {
  BoolComb c;
  c.node_ = Node::And;
  c.children_.push_back(std::move(lhs));
  c.children_.push_back(std::move(rhs));
  return c;
}

BoolComb BoolComb::disj(BoolComb lhs, BoolComb rhs) {
  BoolComb c;
  c.node_ = Node::Or;
  c.children_.push_back(std::move(lhs));
  c.children_.push_back(std::move(rhs));
  return c;
}

namespace {

bool literal_in(const Literal& l, const AtomSet& s) {
  return !l.strong_neg && s.contains(l.atom);
}

}  // namespace

bool BoolComb::satisfied_by(const AtomSet& s) const {
  switch (node_) {
    case Node::Lit:
      return literal_in(lit_, s);
    case Node::DefaultNeg:
      return !literal_in(lit_, s);
    case Node::And:
      return children_[0].satisfied_by(s) && children_[1].satisfied_by(s);
    case Node::Or:
      return children_[0].satisfied_by(s) || children_[1].satisfied_by(s);
  }
  return false;
}

void BoolComb::collect_atoms(std::vector<Atom>& out) const {
  switch (node_) {
    case Node::Lit:
    case Node::DefaultNeg:
      out.push_back(lit_.atom);
      break;
    case Node::And:
    case Node::Or:
      children_[0].collect_atoms(out);
      children_[1].collect_atoms(out);
      break;
  }
}

bool operator==(const BoolComb& a, const BoolComb& b) {
  return a.node_ == b.node_ && a.lit_ == b.lit_ && a.children_ == b.children_;
}

bool AsoPrefRule::body_satisfied_by(const AtomSet& s) const {
  for (const Literal& l : body_pos)
    if (!literal_in(l, s)) return false;
  for (const Literal& l : body_neg)
    if (literal_in(l, s)) return false;
  return true;
}

AtomSet AsoPrefRule::atoms() const {
  std::vector<Atom> out;
  for (const BoolComb& option : options) option.collect_atoms(out);
  for (const Literal& l : body_pos) out.push_back(l.atom);
  for (const Literal& l : body_neg) out.push_back(l.atom);
  return AtomSet(std::move(out));
}

Degree Degree::at(int index) {
  if (index < 1) throw Error(ErrorCode::SemanticError, "degree index must be >= 1");
  return Degree(index);
}

Degree satisfaction_degree(const AtomSet& s, const AsoPrefRule& rule) {
  if (!rule.body_satisfied_by(s)) return Degree::irrelevant();
  for (std::size_t i = 0; i < rule.options.size(); ++i) {
    if (rule.options[i].satisfied_by(s)) return Degree::at(static_cast<int>(i) + 1);
  }
  return Degree::irrelevant();
}

int degree_rank(const Degree& d) { return d.is_irrelevant() ? 1 : d.index(); }

bool degree_geq(const Degree& a, const Degree& b) {
  if (a == b) return true;
  if (a.is_irrelevant()) return true;          // irrelevant >= 1, > 2, 3, ...
  if (b.is_irrelevant()) return a.index() == 1;
  return a.index() <= b.index();               // lower index is better
}

bool degree_gt(const Degree& a, const Degree& b) {
  return degree_geq(a, b) && !degree_geq(b, a);
}

VectorOrder vector_compare(const AtomSet& s1, const AtomSet& s2,
                           const std::vector<AsoPrefRule>& pref) {
  bool identical = true, geq_12 = true, geq_21 = true, strict_12 = false, strict_21 = false;
  for (const AsoPrefRule& rule : pref) {
    const Degree d1 = satisfaction_degree(s1, rule);
    const Degree d2 = satisfaction_degree(s2, rule);
    identical = identical && d1 == d2;
    const bool ab = degree_geq(d1, d2);
    const bool ba = degree_geq(d2, d1);
    geq_12 = geq_12 && ab;
    geq_21 = geq_21 && ba;
    strict_12 = strict_12 || (ab && !ba);
    strict_21 = strict_21 || (ba && !ab);
  }
  if (identical) return VectorOrder::Equal;
  if (geq_12 && strict_12) return VectorOrder::Greater;
  if (geq_21 && strict_21) return VectorOrder::Less;
  if (geq_12) return VectorOrder::GreaterEqualOnly;
  return VectorOrder::Incomparable;
}

std::vector<AtomSet> aso_optimal_models(const AsoProgram& program, std::size_t cap) {
  const std::vector<AtomSet> answers = oracle::gl_stable_models(program.gen, cap);
  std::vector<AtomSet> out;
  for (const AtomSet& s : answers) {
    bool beaten = std::any_of(answers.begin(), answers.end(), [&](const AtomSet& other) {
      return vector_compare(other, s, program.pref) == VectorOrder::Greater;
    });
    if (!beaten) out.push_back(s);
  }
  return out;
}

namespace {

AtomSet collect_base_atoms(const AsoProgram& program) {
  std::vector<Atom> atoms;
  for (const NormalRule& rule : program.gen.rules()) {
    atoms.push_back(rule.head);
    atoms.insert(atoms.end(), rule.body_pos.begin(), rule.body_pos.end());
    atoms.insert(atoms.end(), rule.body_neg.begin(), rule.body_neg.end());
  }
  for (const AsoPrefRule& rule : program.pref) {
    for (const Atom& a : rule.atoms()) atoms.push_back(a);
  }
  return AtomSet(std::move(atoms));
}

// Fresh names: a deterministic prefix that collides with nothing.
std::string pick_bar_prefix(const AtomSet& atoms) {
  std::string prefix = "bar_";
  for (;;) {
    bool clash = std::any_of(atoms.begin(), atoms.end(), [&](const Atom& a) {
      return a.name().rfind(prefix, 0) == 0;
    });
    if (!clash) return prefix;
    prefix.insert(prefix.begin(), 'x');
  }
}

Atom pick_spoiler(const AtomSet& atoms) {
  std::string name = "spoil";
  int suffix = 0;
  while (atoms.contains(Atom(name))) name = "spoil" + std::to_string(suffix++);
  return Atom(name);
}

}  // namespace

AtomSet Translation::bar(const AtomSet& plain) const {
  std::vector<Atom> out;
  for (const Atom& a : plain) out.push_back(barred.at(a));
  return AtomSet(std::move(out));
}

AtomSet Translation::project(const AtomSet& m) const {
  return m.intersect(base_atoms);
}

Translation translate(const AsoProgram& program) {
  const AtomSet at = collect_base_atoms(program);
  const std::string prefix = pick_bar_prefix(at);

  std::map<Atom, Atom> barred;
  for (const Atom& a : at) barred.emplace(a, Atom(prefix + a.name()));
  const Atom spoiler = pick_spoiler(at);

  std::vector<Rule> rules;

  // generating rules, literal by literal
  for (const NormalRule& rule : program.gen.rules()) {
    Rule sc_rule{SCAtom::literal(rule.head, false), {}};
    for (const Atom& a : rule.body_pos) sc_rule.body.push_back(SCAtom::literal(a, false));
    for (const Atom& a : rule.body_neg) sc_rule.body.push_back(SCAtom::literal(a, true));
    rules.push_back(std::move(sc_rule));
  }

  // consistency rules: the barred copy must mirror the plain atoms
  for (const Atom& a : at) {
    const Atom& bar_a = barred.at(a);
    rules.push_back(Rule{SCAtom::literal(bar_a, false), {SCAtom::literal(a, false)}});
    rules.push_back(Rule{SCAtom::literal(spoiler, false),
                         {SCAtom::literal(bar_a, false), SCAtom::literal(a, true),
                          SCAtom::literal(spoiler, true)}});
  }

  // one ranked preference fact per preference rule
  for (const AsoPrefRule& pref_rule : program.pref) {
    const AtomSet width = pref_rule.atoms();
    if (width.size() > 16) {
      throw Error(ErrorCode::WidthExceeded,
                  "preference rule mentions more than 16 atoms");
    }
    std::vector<Atom> barred_base_atoms;
    for (const Atom& a : width) barred_base_atoms.push_back(barred.at(a));
    AtomSet barred_base(std::move(barred_base_atoms));

    // enumerate the plain subsets; weight each barred image by the
    // degree rank, so barred(A) <= barred(B) iff degree(A) >= degree(B)
    std::vector<std::pair<AtomSet, double>> weights;
    const auto& plain = width.atoms();
    const std::size_t n = plain.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Atom> member, image;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) {
          member.push_back(plain[i]);
          image.push_back(barred.at(plain[i]));
        }
      }
      const Degree degree = satisfaction_degree(AtomSet(std::move(member)), pref_rule);
      weights.emplace_back(AtomSet(std::move(image)),
                           static_cast<double>(degree_rank(degree)));
    }
    PreorderAtom head(SCAtom(barred_base, Family::any()),
                      Preorder::rank(std::move(weights), std::nullopt));
    rules.push_back(Rule{std::move(head), {}});
  }

  Translation out{Program(std::move(rules)), at, std::move(barred), spoiler};
  return out;
}

}  // namespace psc::aso
