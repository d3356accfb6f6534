#include "psc/oracle.hpp"

#include <algorithm>
#include <queue>

#include "psc/errors.hpp"
#include "psc/measure.hpp"

// Reference implementations, written from the definitions and kept
// independent of the engine: satisfaction is re-derived here, closures
// are computed by subset enumeration rather than closed-form rules, and
// the comparison relations are re-evaluated from the raw order data.

namespace psc::oracle {

namespace {

AtomSet normal_atoms(const NormalProgram& program) {
  std::vector<Atom> atoms;
  for (const NormalRule& rule : program.rules()) {
    atoms.push_back(rule.head);
    atoms.insert(atoms.end(), rule.body_pos.begin(), rule.body_pos.end());
    atoms.insert(atoms.end(), rule.body_neg.begin(), rule.body_neg.end());
  }
  return AtomSet(std::move(atoms));
}

std::vector<AtomSet> all_subsets(const AtomSet& set) {
  const auto& atoms = set.atoms();
  const std::size_t n = atoms.size();
  std::vector<AtomSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Atom> picked;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) picked.push_back(atoms[i]);
    out.emplace_back(std::move(picked));
  }
  return out;
}

// --- normal-program side ---------------------------------------------------

AtomSet definite_least_model(const std::vector<std::pair<Atom, std::vector<Atom>>>& rules) {
  AtomSet current;
  for (;;) {
    std::vector<Atom> derived(current.begin(), current.end());
    for (const auto& [head, body] : rules) {
      bool fires = std::all_of(body.begin(), body.end(),
                               [&](const Atom& a) { return current.contains(a); });
      if (fires) derived.push_back(head);
    }
    AtomSet next(std::move(derived));
    if (next == current) return current;
    current = std::move(next);
  }
}

// --- SC side: satisfaction and closure from first principles ----------------

bool family_member(const Family& family, const AtomSet& y) {
  switch (family.kind()) {
    case Family::Kind::Extensional: {
      const auto& members = family.members();
      return std::find(members.begin(), members.end(), y) != members.end();
    }
    case Family::Kind::Even:
      return y.size() % 2 == 0;
    case Family::Kind::Card:
      return family.card_lo() <= y.size() && y.size() <= family.card_hi();
    case Family::Kind::Any:
      return true;
  }
  return false;
}

bool sc_satisfied(const SCAtom& sc, const AtomSet& m) {
  return family_member(sc.family(), m.intersect(sc.base()));
}

// Y is in the upper closure iff some subset of Y is in the family;
// checked by enumerating the subsets of Y.
bool sc_closure_satisfied(const SCAtom& sc, const AtomSet& m) {
  const AtomSet y = m.intersect(sc.base());
  for (const AtomSet& z : all_subsets(y)) {
    if (family_member(sc.family(), z)) return true;
  }
  return false;
}

bool rule_body_satisfied(const Rule& rule, const AtomSet& m) {
  return std::all_of(rule.body.begin(), rule.body.end(),
                     [&](const SCAtom& b) { return sc_satisfied(b, m); });
}

bool candidate_stable(const Program& program, const AtomSet& m) {
  // a model of the reduct?
  for (const Rule& rule : program.rules()) {
    if (rule_body_satisfied(rule, m) && !sc_satisfied(reduct(rule.head), m)) {
      return false;
    }
  }
  // least model of the transform: iterate derivation from nothing
  std::vector<const Rule*> survivors;
  for (const Rule& rule : program.rules()) {
    if (rule_body_satisfied(rule, m)) survivors.push_back(&rule);
  }
  AtomSet derived;
  for (;;) {
    std::vector<Atom> next(derived.begin(), derived.end());
    for (const Rule* rule : survivors) {
      bool fires = std::all_of(rule->body.begin(), rule->body.end(),
                               [&](const SCAtom& b) { return sc_closure_satisfied(b, derived); });
      if (!fires) continue;
      for (const Atom& a : reduct(rule->head).base().intersect(m)) next.push_back(a);
    }
    AtomSet step(std::move(next));
    if (step == derived) break;
    derived = std::move(step);
  }
  return derived == m;
}

// --- comparison path ---------------------------------------------------------

// The induced relation, re-evaluated from the raw order data (pairs by
// breadth-first reachability; the table kind is itself the relation).
bool order_leq(const Preorder& order, const AtomSet& a, const AtomSet& b) {
  switch (order.kind()) {
    case Preorder::Kind::Chain: {
      if (a == b) return true;
      const auto& stages = order.chain_stages();
      std::ptrdiff_t pa = -1, pb = -1;
      for (std::size_t i = 0; i < stages.size(); ++i) {
        if (stages[i] == a) pa = static_cast<std::ptrdiff_t>(i);
        if (stages[i] == b) pb = static_cast<std::ptrdiff_t>(i);
      }
      return pa >= 0 && pb >= 0 && pa <= pb;
    }
    case Preorder::Kind::Pairs: {
      if (a == b) return true;
      std::vector<AtomSet> frontier{a};
      std::vector<AtomSet> seen{a};
      while (!frontier.empty()) {
        AtomSet current = frontier.back();
        frontier.pop_back();
        if (current == b) return true;
        for (const auto& [from, to] : order.pair_entries()) {
          if (from != current) continue;
          if (std::find(seen.begin(), seen.end(), to) == seen.end()) {
            seen.push_back(to);
            frontier.push_back(to);
          }
        }
      }
      return false;
    }
    case Preorder::Kind::Rank: {
      if (a == b) return true;
      auto weight = [&](const AtomSet& s) {
        for (const auto& [key, w] : order.rank_weights())
          if (key == s) return w;
        if (order.rank_fallback()) return *order.rank_fallback();
        throw Error(ErrorCode::OrderDomain, "rank order has no weight for a set");
      };
      return weight(a) <= weight(b);
    }
    case Preorder::Kind::Table:
      return order.leq(a, b);
  }
  return false;
}

CompareVerdict compare_preordered(const std::vector<PreorderAtom>& t,
                                  const AtomSet& m1, const AtomSet& m2) {
  bool all_12 = true, all_21 = true, some_strict_12 = false, some_strict_21 = false;
  for (const PreorderAtom& atom : t) {
    const AtomSet a = m1.intersect(atom.sc().base());
    const AtomSet b = m2.intersect(atom.sc().base());
    if (!family_member(atom.sc().family(), a) || !family_member(atom.sc().family(), b)) {
      throw Error(ErrorCode::NotAModel, "projection outside the family");
    }
    const bool ab = order_leq(atom.order(), a, b);
    const bool ba = order_leq(atom.order(), b, a);
    if (!ab) all_12 = false;
    if (!ba) all_21 = false;
    if (ab && !ba) some_strict_12 = true;
    if (ba && !ab) some_strict_21 = true;
  }
  if (all_12 && some_strict_12) return CompareVerdict::FirstPreferred;
  if (all_21 && some_strict_21) return CompareVerdict::SecondPreferred;
  if (!t.empty() && all_12 && all_21) return CompareVerdict::Equivalent;
  return CompareVerdict::Indistinguishable;
}

double measure_total(const std::vector<MeasureAtom>& t, const AtomSet& m) {
  double total = 0;
  for (const MeasureAtom& atom : t) {
    const AtomSet projection = m.intersect(atom.sc().base());
    if (!family_member(atom.sc().family(), projection)) {
      throw Error(ErrorCode::NotAModel, "projection outside the family");
    }
    total = extended_sum(total, atom.measure().value(projection));
  }
  return total;
}

template <typename AtomT>
std::vector<AtomT> pref_heads(const Program& program, const AtomSet& m) {
  std::vector<AtomT> out;
  for (const Rule& rule : program.rules()) {
    const auto* head = std::get_if<AtomT>(&rule.head);
    if (!head || !rule_body_satisfied(rule, m)) continue;
    if (std::find(out.begin(), out.end(), *head) == out.end()) out.push_back(*head);
  }
  return out;
}

template <typename AtomT>
std::vector<AtomT> common(const std::vector<AtomT>& a, const std::vector<AtomT>& b) {
  std::vector<AtomT> out;
  for (const AtomT& x : a)
    if (std::find(b.begin(), b.end(), x) != b.end() &&
        std::find(out.begin(), out.end(), x) == out.end())
      out.push_back(x);
  return out;
}

template <typename AtomT>
bool contained(const std::vector<AtomT>& a, const std::vector<AtomT>& b) {
  return std::all_of(a.begin(), a.end(), [&](const AtomT& x) {
    return std::find(b.begin(), b.end(), x) != b.end();
  });
}

// Strict preference of m1 over m2 under the chosen order, evaluated
// directly from the order definitions.
bool strictly_preferred(const Program& program, const AtomSet& m1, const AtomSet& m2,
                        OrderMode mode) {
  switch (mode) {
    case OrderMode::InCommon: {
      const auto p1 = pref_heads<PreorderAtom>(program, m1);
      const auto p2 = pref_heads<PreorderAtom>(program, m2);
      return compare_preordered(common(p1, p2), m1, m2) == CompareVerdict::FirstPreferred;
    }
    case OrderMode::InTotal: {
      const auto p1 = pref_heads<PreorderAtom>(program, m1);
      const auto p2 = pref_heads<PreorderAtom>(program, m2);
      const auto verdict = compare_preordered(common(p1, p2), m1, m2);
      const bool equal = contained(p1, p2) && contained(p2, p1);
      const bool proper_superset = contained(p2, p1) && !equal;
      if (proper_superset) {
        return verdict == CompareVerdict::FirstPreferred ||
               verdict == CompareVerdict::Equivalent;
      }
      return equal && verdict == CompareVerdict::FirstPreferred;
    }
    case OrderMode::WeakInCommon: {
      const auto p1 = pref_heads<MeasureAtom>(program, m1);
      const auto p2 = pref_heads<MeasureAtom>(program, m2);
      const auto shared = common(p1, p2);
      return measure_total(shared, m1) < measure_total(shared, m2);
    }
    case OrderMode::WeakInTotal: {
      const auto p1 = pref_heads<MeasureAtom>(program, m1);
      const auto p2 = pref_heads<MeasureAtom>(program, m2);
      const auto shared = common(p1, p2);
      const double s1 = measure_total(shared, m1);
      const double s2 = measure_total(shared, m2);
      const bool equal = contained(p1, p2) && contained(p2, p1);
      const bool proper_superset = contained(p2, p1) && !equal;
      if (proper_superset) return s1 <= s2;
      return equal && s1 < s2;
    }
    case OrderMode::WeakInSum: {
      const auto p1 = pref_heads<MeasureAtom>(program, m1);
      const auto p2 = pref_heads<MeasureAtom>(program, m2);
      return measure_total(p1, m1) < measure_total(p2, m2);
    }
  }
  return false;
}

}  // namespace

std::vector<AtomSet> gl_stable_models(const NormalProgram& program, std::size_t cap) {
  const AtomSet atoms = normal_atoms(program);
  if (atoms.size() > cap) {
    throw Error(ErrorCode::CapExceeded, "too many atoms for the reference search");
  }
  std::vector<AtomSet> out;
  for (const AtomSet& m : all_subsets(atoms)) {
    std::vector<std::pair<Atom, std::vector<Atom>>> transformed;
    for (const NormalRule& rule : program.rules()) {
      bool blocked = std::any_of(rule.body_neg.begin(), rule.body_neg.end(),
                                 [&](const Atom& a) { return m.contains(a); });
      if (!blocked) transformed.emplace_back(rule.head, rule.body_pos);
    }
    if (definite_least_model(transformed) == m) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AtomSet> stable_models(const Program& program, std::size_t cap) {
  if (program.universe().size() > cap) {
    throw Error(ErrorCode::CapExceeded, "universe too large for the reference search");
  }
  std::vector<AtomSet> out;
  for (const AtomSet& m : all_subsets(program.universe())) {
    if (candidate_stable(program, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AtomSet> preferred_models(const Program& program, OrderMode mode,
                                      std::size_t cap) {
  const std::vector<AtomSet> stable = stable_models(program, cap);
  std::vector<AtomSet> out;
  for (const AtomSet& m : stable) {
    bool beaten = false;
    for (const AtomSet& other : stable) {
      if (strictly_preferred(program, other, m, mode)) {
        beaten = true;
        break;
      }
    }
    if (!beaten) out.push_back(m);
  }
  return out;
}

}  // namespace psc::oracle
