#ifndef PSC_ORACLE_HPP
#define PSC_ORACLE_HPP

#include <vector>

#include "psc/normal.hpp"
#include "psc/prefer.hpp"
#include "psc/program.hpp"

namespace psc::oracle {

/// Stable models of a normal program via the classic transform: delete
/// rules whose negative body intersects m, strip the negative bodies,
/// and keep m iff it is the least model of the remainder. Exhaustive
/// over all subsets; Error(CapExceeded) beyond `cap` atoms.
std::vector<AtomSet> gl_stable_models(const NormalProgram& program,
                                      std::size_t cap = 16);

/// Exhaustive stability check over the FULL universe, implemented from
/// the definitions with its own satisfaction and closure code (closure
/// by subset enumeration, no closed-form shortcuts). Shares only the
/// domain types with the engine.
std::vector<AtomSet> stable_models(const Program& program, std::size_t cap = 16);

/// Quadratic all-pairs preferred-model filter on top of stable_models,
/// with an independent comparison path.
std::vector<AtomSet> preferred_models(const Program& program, OrderMode mode,
                                      std::size_t cap = 16);

}  // namespace psc::oracle

#endif
