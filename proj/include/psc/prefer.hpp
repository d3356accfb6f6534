#ifndef PSC_PREFER_HPP
#define PSC_PREFER_HPP

#include <vector>

#include "psc/engine.hpp"
#include "psc/program.hpp"

namespace psc {

/// Outcome of comparing two models. Equivalent means mutual order
/// (both directions of <= hold everywhere, or equal measure sums);
/// Indistinguishable means neither side is strictly preferred and
/// Equivalent does not apply.
enum class CompareVerdict {
  FirstPreferred,
  SecondPreferred,
  Equivalent,
  Indistinguishable,
};

const char* to_string(CompareVerdict verdict);

/// The five orders on stable models. InCommon/InTotal apply to
/// pre-ordered programs, the weak ones to measure programs.
enum class OrderMode { InCommon, InTotal, WeakInCommon, WeakInTotal, WeakInSum };

const char* to_string(OrderMode mode);

/// Product comparison over a set of pre-ordered atoms: first-preferred
/// iff projections are <= everywhere and strictly somewhere. Both models
/// must satisfy every atom of `t` (Error(NotAModel) otherwise).
CompareVerdict compare_preordered_set(const std::vector<PreorderAtom>& t,
                                      const AtomSet& m1, const AtomSet& m2);

/// Sum of the measure values of m's projections over `t`; infinities
/// propagate, a mixed sum throws Error(MixedInfinity).
double weak_sum(const std::vector<MeasureAtom>& t, const AtomSet& m);

/// Aggregate comparison: first-preferred iff the first sum is smaller;
/// equal sums are Equivalent.
CompareVerdict compare_measure_set(const std::vector<MeasureAtom>& t,
                                   const AtomSet& m1, const AtomSet& m2);

/// The pre-ordered heads of the rules whose bodies `m` satisfies.
/// Duplicates are collapsed; order follows the canonical rule order.
std::vector<PreorderAtom> preordered_pref_set(const Program& program, const AtomSet& m);

/// Likewise for measure heads.
std::vector<MeasureAtom> measure_pref_set(const Program& program, const AtomSet& m);

/// Compares two stable models of `program` under `mode`. Throws
/// Error(ModeMismatch) when the mode does not fit the program kind.
CompareVerdict compare_models(const Program& program, const AtomSet& m1,
                              const AtomSet& m2, OrderMode mode);

/// The stable models that no other stable model strictly beats under
/// `mode`; canonical order.
std::vector<AtomSet> preferred_models(const Program& program, OrderMode mode,
                                      std::size_t cap = kDefaultSupportCap);

}  // namespace psc

#endif
