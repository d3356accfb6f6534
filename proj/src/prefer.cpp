#include "psc/prefer.hpp"

#include <algorithm>

#include "psc/errors.hpp"

namespace psc {

const char* to_string(CompareVerdict verdict) {
  switch (verdict) {
    case CompareVerdict::FirstPreferred: return "first-preferred";
    case CompareVerdict::SecondPreferred: return "second-preferred";
    case CompareVerdict::Equivalent: return "equivalent";
    case CompareVerdict::Indistinguishable: return "indistinguishable";
  }
  return "unknown";
}

const char* to_string(OrderMode mode) {
  switch (mode) {
    case OrderMode::InCommon: return "ic";
    case OrderMode::InTotal: return "it";
    case OrderMode::WeakInCommon: return "w-ic";
    case OrderMode::WeakInTotal: return "w-it";
    case OrderMode::WeakInSum: return "w-is";
  }
  return "unknown";
}

CompareVerdict compare_preordered_set(const std::vector<PreorderAtom>& t,
                                      const AtomSet& m1, const AtomSet& m2) {
  bool leq_12 = true, leq_21 = true;
  bool strict_12 = false, strict_21 = false;
  for (const PreorderAtom& atom : t) {
    const AtomSet a = m1.intersect(atom.sc().base());
    const AtomSet b = m2.intersect(atom.sc().base());
    if (!atom.sc().family().contains(a) || !atom.sc().family().contains(b)) {
      throw Error(ErrorCode::NotAModel,
                  "model does not satisfy a compared pre-ordered atom");
    }
    const bool ab = atom.order().leq(a, b);
    const bool ba = atom.order().leq(b, a);
    leq_12 = leq_12 && ab;
    leq_21 = leq_21 && ba;
    strict_12 = strict_12 || (ab && !ba);
    strict_21 = strict_21 || (ba && !ab);
  }
  if (leq_12 && strict_12) return CompareVerdict::FirstPreferred;
  if (leq_21 && strict_21) return CompareVerdict::SecondPreferred;
  if (!t.empty() && leq_12 && leq_21) return CompareVerdict::Equivalent;
  return CompareVerdict::Indistinguishable;
}

double weak_sum(const std::vector<MeasureAtom>& t, const AtomSet& m) {
  double sum = 0;
  for (const MeasureAtom& atom : t) {
    const AtomSet projection = m.intersect(atom.sc().base());
    if (!atom.sc().family().contains(projection)) {
      throw Error(ErrorCode::NotAModel,
                  "model does not satisfy a summed measure atom");
    }
    sum = extended_sum(sum, atom.measure().value(projection));
  }
  return sum;
}

CompareVerdict compare_measure_set(const std::vector<MeasureAtom>& t,
                                   const AtomSet& m1, const AtomSet& m2) {
  const double s1 = weak_sum(t, m1);
  const double s2 = weak_sum(t, m2);
  if (s1 < s2) return CompareVerdict::FirstPreferred;
  if (s2 < s1) return CompareVerdict::SecondPreferred;
  return CompareVerdict::Equivalent;
}

namespace {

bool body_satisfied(const Rule& rule, const AtomSet& m) {
  return std::all_of(rule.body.begin(), rule.body.end(),
                     [&](const SCAtom& b) { return b.satisfied_by(m); });
}

template <typename AtomT>
void push_unique(std::vector<AtomT>& out, const AtomT& atom) {
  if (std::find(out.begin(), out.end(), atom) == out.end()) out.push_back(atom);
}

template <typename AtomT>
std::vector<AtomT> intersection(const std::vector<AtomT>& a, const std::vector<AtomT>& b) {
  std::vector<AtomT> out;
  for (const AtomT& x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) push_unique(out, x);
  return out;
}

template <typename AtomT>
bool subset(const std::vector<AtomT>& a, const std::vector<AtomT>& b) {
  return std::all_of(a.begin(), a.end(), [&](const AtomT& x) {
    return std::find(b.begin(), b.end(), x) != b.end();
  });
}

/// The in-total shape shared by the pre-ordered and weak orders:
/// first wins with a strictly larger pref set and a non-losing common
/// verdict, or with equal pref sets and a strict win on them.
template <typename AtomT, typename Compare>
CompareVerdict in_total(const std::vector<AtomT>& pref1, const std::vector<AtomT>& pref2,
                        Compare&& compare_common) {
  const auto common = intersection(pref1, pref2);
  const CompareVerdict on_common = compare_common(common);
  const bool equal_sets = subset(pref1, pref2) && subset(pref2, pref1);
  if (equal_sets) {
    if (on_common == CompareVerdict::FirstPreferred ||
        on_common == CompareVerdict::SecondPreferred ||
        on_common == CompareVerdict::Equivalent) {
      return on_common;
    }
    return CompareVerdict::Indistinguishable;
  }
  const bool first_larger = subset(pref2, pref1);
  const bool second_larger = subset(pref1, pref2);
  if (first_larger && (on_common == CompareVerdict::FirstPreferred ||
                       on_common == CompareVerdict::Equivalent)) {
    return CompareVerdict::FirstPreferred;
  }
  if (second_larger && (on_common == CompareVerdict::SecondPreferred ||
                        on_common == CompareVerdict::Equivalent)) {
    return CompareVerdict::SecondPreferred;
  }
  return CompareVerdict::Indistinguishable;
}

}  // namespace

std::vector<PreorderAtom> preordered_pref_set(const Program& program, const AtomSet& m) {
  std::vector<PreorderAtom> out;
  for (const Rule& rule : program.rules()) {
    const auto* head = std::get_if<PreorderAtom>(&rule.head);
    if (head && body_satisfied(rule, m)) push_unique(out, *head);
  }
  return out;
}

std::vector<MeasureAtom> measure_pref_set(const Program& program, const AtomSet& m) {
  std::vector<MeasureAtom> out;
  for (const Rule& rule : program.rules()) {
    const auto* head = std::get_if<MeasureAtom>(&rule.head);
    if (head && body_satisfied(rule, m)) push_unique(out, *head);
  }
  return out;
}

CompareVerdict compare_models(const Program& program, const AtomSet& m1,
                              const AtomSet& m2, OrderMode mode) {
  const bool weak_mode = mode == OrderMode::WeakInCommon ||
                         mode == OrderMode::WeakInTotal ||
                         mode == OrderMode::WeakInSum;
  if (program.kind() == ProgramKind::Preordered && weak_mode) {
    throw Error(ErrorCode::ModeMismatch,
                "weak order mode on a pre-ordered program");
  }
  if (program.kind() == ProgramKind::MeasureBased && !weak_mode) {
    throw Error(ErrorCode::ModeMismatch,
                "pre-ordered mode on a measure program");
  }

  if (!weak_mode) {
    const auto pref1 = preordered_pref_set(program, m1);
    const auto pref2 = preordered_pref_set(program, m2);
    if (mode == OrderMode::InCommon) {
      return compare_preordered_set(intersection(pref1, pref2), m1, m2);
    }
    return in_total(pref1, pref2, [&](const std::vector<PreorderAtom>& common) {
      return compare_preordered_set(common, m1, m2);
    });
  }

  const auto pref1 = measure_pref_set(program, m1);
  const auto pref2 = measure_pref_set(program, m2);
  switch (mode) {
    case OrderMode::WeakInCommon:
      return compare_measure_set(intersection(pref1, pref2), m1, m2);
    case OrderMode::WeakInTotal:
      return in_total(pref1, pref2, [&](const std::vector<MeasureAtom>& common) {
        return compare_measure_set(common, m1, m2);
      });
    case OrderMode::WeakInSum: {
      const double s1 = weak_sum(pref1, m1);
      const double s2 = weak_sum(pref2, m2);
      if (s1 < s2) return CompareVerdict::FirstPreferred;
      if (s2 < s1) return CompareVerdict::SecondPreferred;
      return CompareVerdict::Equivalent;
    }
    default:
      throw Error(ErrorCode::Internal, "unhandled order mode");
  }
}

std::vector<AtomSet> preferred_models(const Program& program, OrderMode mode,
                                      std::size_t cap) {
  const std::vector<AtomSet> stable = enumerate_stable(program, cap);
  std::vector<AtomSet> out;
  for (const AtomSet& m : stable) {
    bool beaten = std::any_of(stable.begin(), stable.end(), [&](const AtomSet& other) {
      return compare_models(program, other, m, mode) == CompareVerdict::FirstPreferred;
    });
    if (!beaten) out.push_back(m);
  }
  return out;
}

}  // namespace psc
