#ifndef PSC_ENGINE_HPP
#define PSC_ENGINE_HPP

#include <cstddef>
#include <vector>

#include "psc/horn.hpp"
#include "psc/program.hpp"

namespace psc {

/// Default bound on the number of support atoms enumerate_stable will
/// search over (2^22 candidates is around a desk-scale minute).
inline constexpr std::size_t kDefaultSupportCap = 22;

/// The model-relative reduction to a Horn SC program: drop rules whose
/// bodies `m` does not satisfy, then emit `a <- closed body` for every
/// atom `a` in head-base ∩ m of each surviving rule.
HornProgram nss_transform(const Program& program, const AtomSet& m);

/// True iff `m` satisfies every rule of the program's SC reduct.
bool is_model(const Program& program, const AtomSet& m);

/// True iff `m` is a model of the reduct and equals the least model of
/// its transform. Requires m ⊆ universe.
bool is_stable(const Program& program, const AtomSet& m);

/// Union of the head base sets; stable models are always subsets of it.
AtomSet head_support(const Program& program);

/// All stable models, in canonical order (cardinality, then
/// lexicographic). Throws Error(CapExceeded) when the head support has
/// more than `cap` atoms.
std::vector<AtomSet> enumerate_stable(const Program& program,
                                      std::size_t cap = kDefaultSupportCap);

}  // namespace psc

#endif
