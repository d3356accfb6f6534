#include "psc/sc_atom.hpp"

#include "psc/errors.hpp"

namespace psc {

SCAtom::SCAtom(AtomSet base, Family family)
    : base_(std::move(base)), family_(std::move(family)) {
  if (family_.kind() == Family::Kind::Extensional) {
    for (const AtomSet& member : family_.members()) {
      if (!member.subset_of(base_)) {
        throw Error(ErrorCode::SemanticError,
                    "family member is not a subset of the base set");
      }
    }
  }
}

SCAtom SCAtom::literal(const Atom& a, bool negated) {
  AtomSet base{a};
  if (negated) return SCAtom(base, Family::extensional({AtomSet{}}));
  return SCAtom(base, Family::extensional({base}));
}

bool SCAtom::is_positive_literal() const {
  return base_.size() == 1 && family_.kind() == Family::Kind::Extensional &&
         family_.members().size() == 1 && family_.members()[0] == base_;
}

bool SCAtom::is_negative_literal() const {
  return base_.size() == 1 && family_.kind() == Family::Kind::Extensional &&
         family_.members().size() == 1 && family_.members()[0].empty();
}

}  // namespace psc
