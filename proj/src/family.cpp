#include "psc/family.hpp"

#include <algorithm>

#include "psc/errors.hpp"

namespace psc {

Family Family::extensional(std::vector<AtomSet> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Family(Kind::Extensional, std::move(members), 0, 0);
}

Family Family::even() { return Family(Kind::Even, {}, 0, 0); }

Family Family::card(std::size_t lo, std::size_t hi) {
  if (lo > hi) {
    throw Error(ErrorCode::SemanticError, "cardinality range has lo > hi");
  }
  return Family(Kind::Card, {}, lo, hi);
}

Family Family::any() { return Family(Kind::Any, {}, 0, 0); }

bool Family::contains(const AtomSet& y) const {
  switch (kind_) {
    case Kind::Extensional:
      return std::binary_search(members_.begin(), members_.end(), y);
    case Kind::Even:
      return y.size() % 2 == 0;
    case Kind::Card:
      return lo_ <= y.size() && y.size() <= hi_;
    case Kind::Any:
      return true;
  }
  return false;
}

bool Family::closure_contains(const AtomSet& y) const {
  switch (kind_) {
    case Kind::Extensional:
      return std::any_of(members_.begin(), members_.end(),
                         [&](const AtomSet& z) { return z.subset_of(y); });
    case Kind::Even:
      return true;  // the empty set has even cardinality
    case Kind::Card:
      return y.size() >= lo_;
    case Kind::Any:
      return true;
  }
  return false;
}

}  // namespace psc
