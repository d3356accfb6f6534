#include "psc/horn.hpp"

#include <algorithm>

#include "psc/errors.hpp"

namespace psc {

AtomSet tp_step(const HornProgram& horn, const AtomSet& m) {
  std::vector<Atom> derived;
  for (const HornRule& rule : horn.rules()) {
    bool fires = std::all_of(rule.body.begin(), rule.body.end(),
                             [&](const SCAtom& b) { return b.closure_satisfied_by(m); });
    if (fires) derived.push_back(rule.head);
  }
  return AtomSet(std::move(derived));
}

AtomSet least_model(const HornProgram& horn) {
  std::vector<Atom> heads;
  for (const HornRule& rule : horn.rules()) heads.push_back(rule.head);
  const std::size_t limit = AtomSet(std::move(heads)).size() + 1;

  AtomSet current;
  for (std::size_t step = 0; step <= limit; ++step) {
    AtomSet next = tp_step(horn, current);
    if (next == current) return current;
    current = std::move(next);
  }
  throw Error(ErrorCode::Internal, "least model iteration exceeded its bound");
}

}  // namespace psc
