#ifndef PSC_TESTS_SUPPORT_GENERATORS_HPP
#define PSC_TESTS_SUPPORT_GENERATORS_HPP

// Deterministic random instance generators shared by the unit and
// acceptance suites.

#include <random>
#include <string>
#include <vector>

#include "psc/aso.hpp"
#include "psc/normal.hpp"
#include "psc/pp.hpp"
#include "psc/program.hpp"

namespace psc::testgen {

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool flip(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

inline std::vector<Atom> atom_pool(std::size_t n, const std::string& stem = "a") {
  std::vector<Atom> out;
  for (std::size_t i = 1; i <= n; ++i) out.emplace_back(stem + std::to_string(i));
  return out;
}

inline AtomSet random_subset(Rng& rng, const std::vector<Atom>& pool, double p = 0.5) {
  std::vector<Atom> picked;
  for (const Atom& a : pool)
    if (flip(rng, p)) picked.push_back(a);
  return AtomSet(std::move(picked));
}

// --- normal programs ---------------------------------------------------------

inline NormalProgram random_normal_program(Rng& rng, std::size_t max_atoms = 8,
                                           std::size_t max_rules = 12) {
  const auto pool = atom_pool(pick(rng, 1, max_atoms));
  NormalProgram program;
  const std::size_t rule_count = pick(rng, 0, max_rules);
  for (std::size_t r = 0; r < rule_count; ++r) {
    NormalRule rule{pool[pick(rng, 0, pool.size() - 1)], {}, {}};
    const std::size_t body = pick(rng, 0, 3);
    for (std::size_t i = 0; i < body; ++i) {
      const Atom& a = pool[pick(rng, 0, pool.size() - 1)];
      if (flip(rng)) {
        rule.body_pos.push_back(a);
      } else {
        rule.body_neg.push_back(a);
      }
    }
    program.add(std::move(rule));
  }
  return program;
}

/// Literal-by-literal encoding into a plain SC program.
inline Program encode_normal(const NormalProgram& normal) {
  std::vector<Rule> rules;
  for (const NormalRule& rule : normal.rules()) {
    Rule sc_rule{SCAtom::literal(rule.head, false), {}};
    for (const Atom& a : rule.body_pos) sc_rule.body.push_back(SCAtom::literal(a, false));
    for (const Atom& a : rule.body_neg) sc_rule.body.push_back(SCAtom::literal(a, true));
    rules.push_back(std::move(sc_rule));
  }
  return Program(std::move(rules), normal.atoms());
}

// --- SC programs with arbitrary families -------------------------------------

inline Family random_family(Rng& rng, const AtomSet& base, bool nonempty = false) {
  switch (pick(rng, 0, 3)) {
    case 0: {
      std::vector<AtomSet> members;
      const auto& atoms = base.atoms();
      const std::size_t count = std::size_t{1} << atoms.size();
      for (std::size_t mask = 0; mask < count; ++mask) {
        if (!flip(rng, 0.4)) continue;
        std::vector<Atom> picked;
        for (std::size_t i = 0; i < atoms.size(); ++i)
          if (mask & (std::size_t{1} << i)) picked.push_back(atoms[i]);
        members.emplace_back(std::move(picked));
      }
      if (members.empty() && nonempty) members.emplace_back();
      return Family::extensional(std::move(members));
    }
    case 1:
      return Family::even();
    case 2: {
      const std::size_t lo = pick(rng, 0, base.size());
      return Family::card(lo, pick(rng, lo, base.size()));
    }
    default:
      return Family::any();
  }
}

inline Program random_sc_program(Rng& rng, std::size_t max_atoms = 6,
                                 std::size_t max_rules = 6) {
  const auto pool = atom_pool(pick(rng, 1, max_atoms));
  std::vector<Rule> rules;
  const std::size_t rule_count = pick(rng, 0, max_rules);
  for (std::size_t r = 0; r < rule_count; ++r) {
    AtomSet head_base = random_subset(rng, pool, 0.5);
    if (head_base.empty()) head_base = AtomSet{pool[pick(rng, 0, pool.size() - 1)]};
    Rule rule{SCAtom(head_base, random_family(rng, head_base, true)), {}};
    const std::size_t body = pick(rng, 0, 2);
    for (std::size_t i = 0; i < body; ++i) {
      AtomSet body_base = random_subset(rng, pool, 0.4);
      if (body_base.empty()) body_base = AtomSet{pool[pick(rng, 0, pool.size() - 1)]};
      rule.body.emplace_back(body_base, random_family(rng, body_base));
    }
    rules.push_back(std::move(rule));
  }
  return Program(std::move(rules), AtomSet(std::vector<Atom>(pool)));
}

// --- preference atoms over disjoint bases ------------------------------------

/// Lists every member of a family over `base` (bases here are small).
inline std::vector<AtomSet> family_members(const Family& family, const AtomSet& base) {
  std::vector<AtomSet> out;
  const auto& atoms = base.atoms();
  const std::size_t count = std::size_t{1} << atoms.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Atom> picked;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask & (std::size_t{1} << i)) picked.push_back(atoms[i]);
    AtomSet candidate(std::move(picked));
    if (family.contains(candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

inline Preorder random_preorder(Rng& rng, const std::vector<AtomSet>& members) {
  switch (pick(rng, 0, 2)) {
    case 0: {
      std::vector<AtomSet> stages;
      for (const AtomSet& m : members)
        if (flip(rng, 0.7)) stages.push_back(m);
      if (stages.empty()) stages.push_back(members[pick(rng, 0, members.size() - 1)]);
      std::shuffle(stages.begin(), stages.end(), rng);
      return Preorder::chain(std::move(stages));
    }
    case 1: {
      std::vector<std::pair<AtomSet, AtomSet>> entries;
      const std::size_t count = pick(rng, 0, 2 * members.size());
      for (std::size_t i = 0; i < count; ++i) {
        entries.emplace_back(members[pick(rng, 0, members.size() - 1)],
                             members[pick(rng, 0, members.size() - 1)]);
      }
      return Preorder::pairs(std::move(entries));
    }
    default: {
      std::vector<std::pair<AtomSet, double>> weights;
      for (const AtomSet& m : members) {
        weights.emplace_back(m, static_cast<double>(pick(rng, 0, 5)));
      }
      return Preorder::rank(std::move(weights), 0.0);
    }
  }
}

/// A set of pre-ordered atoms over pairwise disjoint bases, plus two
/// models that satisfy all of them (one family member per atom).
struct PreorderedInstance {
  std::vector<PreorderAtom> atoms;
  std::vector<std::vector<AtomSet>> members;  // per atom
};

inline PreorderedInstance random_preordered_set(Rng& rng, std::size_t max_atoms = 3) {
  PreorderedInstance instance;
  const std::size_t count = pick(rng, 1, max_atoms);
  for (std::size_t i = 0; i < count; ++i) {
    const auto pool = atom_pool(pick(rng, 1, 3), "p" + std::to_string(i) + "x");
    const AtomSet base{std::vector<Atom>(pool)};
    Family family = random_family(rng, base, true);
    auto members = family_members(family, base);
    if (members.empty()) {
      family = Family::any();
      members = family_members(family, base);
    }
    instance.atoms.emplace_back(SCAtom(base, family), random_preorder(rng, members));
    instance.members.push_back(std::move(members));
  }
  return instance;
}

/// One model of every atom in the instance: a random member per atom.
inline AtomSet random_model_of(Rng& rng, const PreorderedInstance& instance) {
  AtomSet model;
  for (const auto& members : instance.members) {
    model = model.unite(members[pick(rng, 0, members.size() - 1)]);
  }
  return model;
}

inline Measure random_measure(Rng& rng, const AtomSet& base,
                              const std::vector<AtomSet>& members) {
  switch (pick(rng, 0, 2)) {
    case 0: {
      std::vector<std::pair<AtomSet, double>> values;
      for (const AtomSet& m : members) {
        values.emplace_back(m, static_cast<double>(pick(rng, 0, 9)));
      }
      return Measure::weights(std::move(values), 0.0);
    }
    case 1: {
      const auto& atoms = base.atoms();
      return Measure::indicator(atoms[pick(rng, 0, atoms.size() - 1)],
                                static_cast<double>(pick(rng, 0, 3)),
                                static_cast<double>(pick(rng, 0, 3)));
    }
    default: {
      std::vector<std::pair<Atom, double>> weights;
      for (const Atom& a : base)
        weights.emplace_back(a, static_cast<double>(pick(rng, 0, 4)));
      return Measure::linear(std::move(weights), static_cast<double>(pick(rng, 0, 2)));
    }
  }
}

struct MeasureInstance {
  std::vector<MeasureAtom> atoms;
  std::vector<std::vector<AtomSet>> members;
};

inline MeasureInstance random_measure_set(Rng& rng, std::size_t max_atoms = 3) {
  MeasureInstance instance;
  const std::size_t count = pick(rng, 1, max_atoms);
  for (std::size_t i = 0; i < count; ++i) {
    const auto pool = atom_pool(pick(rng, 1, 3), "m" + std::to_string(i) + "x");
    const AtomSet base{std::vector<Atom>(pool)};
    Family family = random_family(rng, base, true);
    auto members = family_members(family, base);
    if (members.empty()) {
      family = Family::any();
      members = family_members(family, base);
    }
    instance.atoms.emplace_back(SCAtom(base, family), random_measure(rng, base, members));
    instance.members.push_back(std::move(members));
  }
  return instance;
}

inline AtomSet random_model_of(Rng& rng, const MeasureInstance& instance) {
  AtomSet model;
  for (const auto& members : instance.members) {
    model = model.unite(members[pick(rng, 0, members.size() - 1)]);
  }
  return model;
}

// --- full preference programs (for the all-pairs filter checks) ---------------

/// A small program whose stable models come from literal choice loops,
/// decorated with preference heads guarded by random bodies.
inline Program random_preference_program(Rng& rng, bool measure_kind,
                                         std::size_t choice_atoms = 3,
                                         std::size_t pref_rules = 2) {
  const auto pool = atom_pool(choice_atoms, "c");
  std::vector<Rule> rules;
  // choice loop per atom: c <- not nc, nc <- not c
  std::vector<Atom> shadows;
  for (const Atom& a : pool) {
    const Atom shadow("n" + a.name());
    shadows.push_back(shadow);
    rules.push_back(Rule{SCAtom::literal(a, false), {SCAtom::literal(shadow, true)}});
    rules.push_back(Rule{SCAtom::literal(shadow, false), {SCAtom::literal(a, true)}});
  }
  const std::size_t count = pick(rng, 1, pref_rules);
  for (std::size_t i = 0; i < count; ++i) {
    AtomSet base = random_subset(rng, pool, 0.7);
    if (base.empty()) base = AtomSet{pool[0]};
    const Family family = Family::any();
    const auto members = family_members(family, base);
    Rule rule{SCAtom::literal(pool[0], false), {}};
    if (measure_kind) {
      rule.head = MeasureAtom(SCAtom(base, family), random_measure(rng, base, members));
    } else {
      rule.head = PreorderAtom(SCAtom(base, family), random_preorder(rng, members));
    }
    if (flip(rng, 0.5)) {
      rule.body.push_back(
          SCAtom::literal(pool[pick(rng, 0, pool.size() - 1)], flip(rng)));
    }
    rules.push_back(std::move(rule));
  }
  return Program(std::move(rules));
}

// --- ASO instances ------------------------------------------------------------

inline aso::BoolComb random_comb(Rng& rng, const std::vector<Atom>& pool,
                                 std::size_t depth) {
  if (depth == 0 || flip(rng, 0.4)) {
    aso::Literal literal{pool[pick(rng, 0, pool.size() - 1)], flip(rng, 0.15)};
    if (flip(rng, 0.3)) return aso::BoolComb::def_neg(std::move(literal));
    return aso::BoolComb::lit(std::move(literal));
  }
  auto lhs = random_comb(rng, pool, depth - 1);
  auto rhs = random_comb(rng, pool, depth - 1);
  if (flip(rng)) return aso::BoolComb::conj(std::move(lhs), std::move(rhs));
  return aso::BoolComb::disj(std::move(lhs), std::move(rhs));
}

inline aso::AsoProgram random_aso_program(Rng& rng, std::size_t max_atoms = 6,
                                          std::size_t max_gen_rules = 8,
                                          std::size_t max_pref_rules = 4,
                                          std::size_t max_options = 3,
                                          std::size_t max_width = 4) {
  aso::AsoProgram program;
  const auto pool = atom_pool(pick(rng, 1, max_atoms));
  program.gen = random_normal_program(rng, pool.size(), max_gen_rules);

  const std::size_t pref_count = pick(rng, 0, max_pref_rules);
  for (std::size_t r = 0; r < pref_count; ++r) {
    // restrict each rule to a small window of atoms
    std::vector<Atom> window;
    for (const Atom& a : pool)
      if (window.size() < max_width && flip(rng, 0.7)) window.push_back(a);
    if (window.empty()) window.push_back(pool[0]);

    aso::AsoPrefRule rule;
    const std::size_t options = pick(rng, 1, max_options);
    for (std::size_t i = 0; i < options; ++i) {
      rule.options.push_back(random_comb(rng, window, 2));
    }
    const std::size_t body = pick(rng, 0, 2);
    for (std::size_t i = 0; i < body; ++i) {
      aso::Literal literal{window[pick(rng, 0, window.size() - 1)], flip(rng, 0.1)};
      if (flip(rng)) {
        rule.body_neg.push_back(std::move(literal));
      } else {
        rule.body_pos.push_back(std::move(literal));
      }
    }
    program.pref.push_back(std::move(rule));
  }
  return program;
}

// --- PP formulas ----------------------------------------------------------------

inline pp::PrefFormula random_formula(Rng& rng, const std::vector<Atom>& desires,
                                      std::size_t depth) {
  if (depth == 0 || flip(rng, 0.35)) {
    if (flip(rng, 0.5)) {
      return pp::PrefFormula::basic(desires[pick(rng, 0, desires.size() - 1)]);
    }
    std::vector<Atom> chain;
    const std::size_t n = pick(rng, 1, desires.size());
    for (std::size_t i = 0; i < n; ++i)
      chain.push_back(desires[pick(rng, 0, desires.size() - 1)]);
    return pp::PrefFormula::atomic(std::move(chain));
  }
  switch (pick(rng, 0, 3)) {
    case 0:
      return pp::PrefFormula::conj(random_formula(rng, desires, depth - 1),
                                   random_formula(rng, desires, depth - 1));
    case 1:
      return pp::PrefFormula::disj(random_formula(rng, desires, depth - 1),
                                   random_formula(rng, desires, depth - 1));
    case 2:
      return pp::PrefFormula::neg(random_formula(rng, desires, depth - 1));
    default: {
      std::vector<pp::PrefFormula> parts;
      const std::size_t k = pick(rng, 2, 3);
      for (std::size_t i = 0; i < k; ++i)
        parts.push_back(random_formula(rng, desires, depth - 1));
      return pp::PrefFormula::lex(std::move(parts));
    }
  }
}

inline std::vector<AtomSet> powerset(const AtomSet& set) {
  const auto& atoms = set.atoms();
  std::vector<AtomSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
    std::vector<Atom> picked;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask & (std::size_t{1} << i)) picked.push_back(atoms[i]);
    out.emplace_back(std::move(picked));
  }
  return out;
}

}  // namespace psc::testgen

#endif
