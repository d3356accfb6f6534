#include "psc/pp.hpp"

#include "psc/errors.hpp"

namespace psc::pp {

PrefFormula PrefFormula::basic(Atom desire) {
  PrefFormula f;
  f.node_ = Node::Basic;
  f.desires_.push_back(std::move(desire));
  return f;
}

PrefFormula PrefFormula::atomic(std::vector<Atom> desires) {
  if (desires.empty()) {
    throw Error(ErrorCode::SemanticError, "atomic preference needs a desire");
  }
  PrefFormula f;
  f.node_ = Node::Atomic;
  f.desires_ = std::move(desires);
  return f;
}

PrefFormula PrefFormula::conj(PrefFormula lhs, PrefFormula rhs) {
  PrefFormula f;
  f.node_ = Node::And;
  f.parts_.push_back(std::move(lhs));
  f.parts_.push_back(std::move(rhs));
  return f;
}

PrefFormula PrefFormula::disj(PrefFormula lhs, PrefFormula rhs) {
  PrefFormula f;
  f.node_ = Node::Or;
  f.parts_.push_back(std::move(lhs));
  f.parts_.push_back(std::move(rhs));
  return f;
}

PrefFormula PrefFormula::neg(PrefFormula inner) {
  PrefFormula f;
  f.node_ = Node::Not;
  f.parts_.push_back(std::move(inner));
  return f;
}

PrefFormula PrefFormula::lex(std::vector<PrefFormula> parts) {
  if (parts.empty()) {
    throw Error(ErrorCode::SemanticError, "lexicographic preference needs a part");
  }
  PrefFormula f;
  f.node_ = Node::Lex;
  f.parts_ = std::move(parts);
  return f;
}

namespace {

void collect(const PrefFormula& f, std::vector<Atom>& out) {
  out.insert(out.end(), f.desires().begin(), f.desires().end());
  for (const PrefFormula& part : f.parts()) collect(part, out);
}

bool desire_pref(const Atom& d, const AtomSet& alpha, const AtomSet& beta) {
  return alpha.contains(d) && !beta.contains(d);
}

bool desire_indist(const Atom& d, const AtomSet& alpha, const AtomSet& beta) {
  return alpha.contains(d) == beta.contains(d);
}

}  // namespace

AtomSet PrefFormula::desire_atoms() const {
  std::vector<Atom> out;
  collect(*this, out);
  return AtomSet(std::move(out));
}

bool operator==(const PrefFormula& a, const PrefFormula& b) {
  return a.node_ == b.node_ && a.desires_ == b.desires_ && a.parts_ == b.parts_;
}

bool preferred(const PrefFormula& psi, const AtomSet& alpha, const AtomSet& beta) {
  switch (psi.node()) {
    case PrefFormula::Node::Basic:
      return desire_pref(psi.desires()[0], alpha, beta);
    case PrefFormula::Node::Atomic:
      // first desire that separates the trajectories decides, provided
      // everything before it is indistinguishable
      for (const Atom& d : psi.desires()) {
        if (desire_pref(d, alpha, beta)) return true;
        if (!desire_indist(d, alpha, beta)) return false;
      }
      return false;
    case PrefFormula::Node::And:
      return preferred(psi.lhs(), alpha, beta) && preferred(psi.rhs(), alpha, beta);
    case PrefFormula::Node::Or: {
      const bool p1 = preferred(psi.lhs(), alpha, beta);
      const bool p2 = preferred(psi.rhs(), alpha, beta);
      const bool i1 = indistinguishable(psi.lhs(), alpha, beta);
      const bool i2 = indistinguishable(psi.rhs(), alpha, beta);
      return (p1 && i2) || (i1 && p2) || (p1 && p2);
    }
    case PrefFormula::Node::Not:
      return preferred(psi.inner(), beta, alpha);
    case PrefFormula::Node::Lex:
      for (const PrefFormula& part : psi.parts()) {
        if (preferred(part, alpha, beta)) return true;
        if (!indistinguishable(part, alpha, beta)) return false;
      }
      return false;
  }
  return false;
}

bool indistinguishable(const PrefFormula& psi, const AtomSet& alpha, const AtomSet& beta) {
  switch (psi.node()) {
    case PrefFormula::Node::Basic:
      return desire_indist(psi.desires()[0], alpha, beta);
    case PrefFormula::Node::Atomic:
      for (const Atom& d : psi.desires()) {
        if (!desire_indist(d, alpha, beta)) return false;
      }
      return true;
    case PrefFormula::Node::And:
    case PrefFormula::Node::Or:
      return indistinguishable(psi.lhs(), alpha, beta) &&
             indistinguishable(psi.rhs(), alpha, beta);
    case PrefFormula::Node::Not:
      return indistinguishable(psi.inner(), alpha, beta);
    case PrefFormula::Node::Lex:
      for (const PrefFormula& part : psi.parts()) {
        if (!indistinguishable(part, alpha, beta)) return false;
      }
      return true;
  }
  return false;
}

PreorderAtom compile(const PrefFormula& psi) {
  const AtomSet base = psi.desire_atoms();
  if (base.size() > 12) {
    throw Error(ErrorCode::WidthExceeded, "formula mentions more than 12 desires");
  }
  Preorder order = Preorder::table(base, [&](const AtomSet& a, const AtomSet& b) {
    return preferred(psi, a, b) || indistinguishable(psi, a, b);
  });
  return PreorderAtom(SCAtom(base, Family::any()), std::move(order));
}

}  // namespace psc::pp
