#include "psc/engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "psc/errors.hpp"

namespace psc {

HornProgram nss_transform(const Program& program, const AtomSet& m) {
  HornProgram horn;
  for (const Rule& rule : program.rules()) {
    bool body_holds = std::all_of(rule.body.begin(), rule.body.end(),
                                  [&](const SCAtom& b) { return b.satisfied_by(m); });
    if (!body_holds) continue;
    const SCAtom& head = reduct(rule.head);
    for (const Atom& a : head.base().intersect(m)) {
      horn.add(HornRule{a, rule.body});
    }
  }
  return horn;
}

bool is_model(const Program& program, const AtomSet& m) {
  for (const Rule& rule : program.rules()) {
    bool body_holds = std::all_of(rule.body.begin(), rule.body.end(),
                                  [&](const SCAtom& b) { return b.satisfied_by(m); });
    if (body_holds && !reduct(rule.head).satisfied_by(m)) return false;
  }
  return true;
}

bool is_stable(const Program& program, const AtomSet& m) {
  if (!is_model(program, m)) return false;
  return least_model(nss_transform(program, m)) == m;
}

AtomSet head_support(const Program& program) {
  AtomSet support;
  for (const Rule& rule : program.rules()) {
    support = support.unite(reduct(rule.head).base());
  }
  return support;
}

namespace {

// Bitmask program representation used by enumeration. Atom indices
// follow the canonical atom order, so index sequences compare like
// name sequences.
struct MaskAtom {
  std::uint64_t base = 0;
  Family::Kind kind = Family::Kind::Any;
  std::vector<std::uint64_t> members;  // extensional
  std::size_t lo = 0, hi = 0;          // card

  bool satisfied(std::uint64_t m) const {
    const std::uint64_t y = m & base;
    switch (kind) {
      case Family::Kind::Extensional:
        return std::find(members.begin(), members.end(), y) != members.end();
      case Family::Kind::Even:
        return std::popcount(y) % 2 == 0;
      case Family::Kind::Card: {
        const auto n = static_cast<std::size_t>(std::popcount(y));
        return lo <= n && n <= hi;
      }
      case Family::Kind::Any:
        return true;
    }
    return false;
  }

  bool closure_satisfied(std::uint64_t m) const {
    const std::uint64_t y = m & base;
    switch (kind) {
      case Family::Kind::Extensional:
        return std::any_of(members.begin(), members.end(),
                           [&](std::uint64_t z) { return (z & ~y) == 0; });
      case Family::Kind::Even:
        return true;
      case Family::Kind::Card:
        return static_cast<std::size_t>(std::popcount(y)) >= lo;
      case Family::Kind::Any:
        return true;
    }
    return false;
  }
};

struct MaskRule {
  std::vector<MaskAtom> body;
  std::uint64_t head_base = 0;
  MaskAtom head;
};

class MaskProgram {
 public:
  // Indexes the atoms that occur in some base set; atoms outside every
  // base cannot affect satisfaction.
  explicit MaskProgram(const Program& program) {
    AtomSet footprint;
    for (const Rule& rule : program.rules()) {
      footprint = footprint.unite(reduct(rule.head).base());
      for (const SCAtom& b : rule.body) footprint = footprint.unite(b.base());
    }
    atoms_ = footprint.atoms();
    ok_ = atoms_.size() <= 64;
    if (!ok_) return;

    for (const Rule& rule : program.rules()) {
      MaskRule mr;
      mr.head = encode(reduct(rule.head));
      mr.head_base = mr.head.base;
      for (const SCAtom& b : rule.body) mr.body.push_back(encode(b));
      rules_.push_back(std::move(mr));
    }
  }

  bool usable() const { return ok_; }

  std::uint64_t mask_of(const AtomSet& s) const {
    std::uint64_t m = 0;
    for (const Atom& a : s) {
      auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
      if (it != atoms_.end() && *it == a) {
        m |= std::uint64_t{1} << static_cast<std::size_t>(it - atoms_.begin());
      }
      // atoms outside the footprint carry no constraint
    }
    return m;
  }

  AtomSet set_of(std::uint64_t mask) const {
    std::vector<Atom> out;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) out.push_back(atoms_[i]);
    return AtomSet(std::move(out));
  }

  bool stable(std::uint64_t m) const {
    // model of the reduct
    for (const MaskRule& rule : rules_) {
      bool body_holds = std::all_of(rule.body.begin(), rule.body.end(),
                                    [&](const MaskAtom& b) { return b.satisfied(m); });
      if (body_holds && !rule.head.satisfied(m)) return false;
    }
    // least model of the transform, compared against m
    std::uint64_t derived = 0;
    for (;;) {
      std::uint64_t next = derived;
      for (const MaskRule& rule : rules_) {
        bool body_sat = std::all_of(rule.body.begin(), rule.body.end(),
                                    [&](const MaskAtom& b) { return b.satisfied(m); });
        if (!body_sat) continue;
        bool fires = std::all_of(rule.body.begin(), rule.body.end(),
                                 [&](const MaskAtom& b) { return b.closure_satisfied(next); });
        if (fires) next |= rule.head_base & m;
      }
      if (next == derived) break;
      derived = next;
    }
    return derived == m;
  }

 private:
  MaskAtom encode(const SCAtom& sc) const {
    MaskAtom out;
    out.base = mask_of(sc.base());
    out.kind = sc.family().kind();
    out.lo = sc.family().card_lo();
    out.hi = sc.family().card_hi();
    if (out.kind == Family::Kind::Extensional) {
      for (const AtomSet& member : sc.family().members()) {
        out.members.push_back(mask_of(member));
      }
    }
    return out;
  }

  std::vector<Atom> atoms_;  // sorted
  std::vector<MaskRule> rules_;
  bool ok_ = false;
};

}  // namespace

std::vector<AtomSet> enumerate_stable(const Program& program, std::size_t cap) {
  if (cap < 1) throw Error(ErrorCode::SemanticError, "cap must be positive");
  const AtomSet support = head_support(program);
  if (support.size() > cap || support.size() > 63) {
    throw Error(ErrorCode::CapExceeded,
                "head support has " + std::to_string(support.size()) +
                    " atoms, cap is " + std::to_string(std::min<std::size_t>(cap, 63)));
  }

  std::vector<AtomSet> models;
  const MaskProgram compiled(program);
  if (compiled.usable()) {
    const std::uint64_t support_mask = compiled.mask_of(support);
    // enumerate subsets of the support mask, including 0
    std::uint64_t sub = support_mask;
    for (;;) {
      if (compiled.stable(sub)) models.push_back(compiled.set_of(sub));
      if (sub == 0) break;
      sub = (sub - 1) & support_mask;
    }
  } else {
    // footprint too wide for masks; fall back to the definitional path
    const auto& atoms = support.atoms();
    const std::size_t n = atoms.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::vector<Atom> picked;
      for (std::size_t i = 0; i < n; ++i)
        if (bits & (std::uint64_t{1} << i)) picked.push_back(atoms[i]);
      AtomSet candidate(std::move(picked));
      if (is_stable(program, candidate)) models.push_back(std::move(candidate));
    }
  }
  std::sort(models.begin(), models.end());
  return models;
}

}  // namespace psc
