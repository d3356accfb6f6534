#include "psc/program.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "psc/errors.hpp"

namespace psc {

namespace {

bool member_of_family(const AtomSet& set, const SCAtom& sc) {
  return set.subset_of(sc.base()) && sc.family().contains(set);
}

}  // namespace

PreorderAtom::PreorderAtom(SCAtom sc, Preorder order)
    : sc_(std::move(sc)), order_(std::move(order)) {
  if (order_.kind() == Preorder::Kind::Chain ||
      order_.kind() == Preorder::Kind::Pairs) {
    for (const AtomSet& set : order_.mentioned_sets()) {
      if (!member_of_family(set, sc_)) {
        throw Error(ErrorCode::SemanticError,
                    "ordered set is not a member of the atom's family");
      }
    }
  } else if (order_.kind() == Preorder::Kind::Rank) {
    for (const AtomSet& set : order_.mentioned_sets()) {
      if (!set.subset_of(sc_.base())) {
        throw Error(ErrorCode::SemanticError,
                    "ranked set is not a subset of the base");
      }
    }
  }
}

MeasureAtom::MeasureAtom(SCAtom sc, Measure measure)
    : sc_(std::move(sc)), measure_(std::move(measure)) {
  if (measure_.kind() == Measure::Kind::Weights) {
    for (const auto& [set, v] : measure_.weight_entries()) {
      (void)v;
      if (!member_of_family(set, sc_)) {
        throw Error(ErrorCode::SemanticError,
                    "weighted set is not a member of the atom's family");
      }
    }
  } else if (measure_.kind() == Measure::Kind::Indicator) {
    if (!sc_.base().contains(measure_.pivot())) {
      throw Error(ErrorCode::SemanticError,
                  "indicator pivot is not in the base set");
    }
  }
}

const SCAtom& reduct(const Head& head) {
  if (const auto* sc = std::get_if<SCAtom>(&head)) return *sc;
  if (const auto* pre = std::get_if<PreorderAtom>(&head)) return pre->sc();
  return std::get<MeasureAtom>(head).sc();
}

Program::Program(std::vector<Rule> rules, AtomSet declared_extras)
    : extras_(std::move(declared_extras)) {
  bool has_preordered = false;
  bool has_measure = false;
  AtomSet universe = extras_;
  for (const Rule& rule : rules) {
    if (std::holds_alternative<PreorderAtom>(rule.head)) has_preordered = true;
    if (std::holds_alternative<MeasureAtom>(rule.head)) has_measure = true;
    universe = universe.unite(reduct(rule.head).base());
    for (const SCAtom& atom : rule.body) universe = universe.unite(atom.base());
  }
  if (has_preordered && has_measure) {
    throw Error(ErrorCode::SemanticError,
                "program mixes pre-ordered and measure heads");
  }
  kind_ = has_preordered  ? ProgramKind::Preordered
          : has_measure   ? ProgramKind::MeasureBased
                          : ProgramKind::PlainSC;
  universe_ = std::move(universe);

  std::sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) {
    return detail::structural_key(a) < detail::structural_key(b);
  });
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
  rules_ = std::move(rules);
}

namespace detail {
namespace {

void key_double(std::string& out, double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  out.append(buf, end);
}

void key_set(std::string& out, const AtomSet& s) {
  out += '{';
  for (const Atom& a : s) {
    out += a.name();
    out += ',';
  }
  out += '}';
}

void key_family(std::string& out, const Family& f) {
  switch (f.kind()) {
    case Family::Kind::Extensional:
      out += "E[";
      for (const AtomSet& m : f.members()) key_set(out, m);
      out += ']';
      break;
    case Family::Kind::Even:
      out += "V";
      break;
    case Family::Kind::Card:
      out += "C(";
      out += std::to_string(f.card_lo());
      out += ',';
      out += std::to_string(f.card_hi());
      out += ')';
      break;
    case Family::Kind::Any:
      out += "A";
      break;
  }
}

void key_sc(std::string& out, const SCAtom& sc) {
  key_set(out, sc.base());
  key_family(out, sc.family());
}

void key_order(std::string& out, const Preorder& o) {
  switch (o.kind()) {
    case Preorder::Kind::Chain:
      out += "ch[";
      for (const AtomSet& s : o.chain_stages()) key_set(out, s);
      out += ']';
      break;
    case Preorder::Kind::Pairs:
      out += "pr[";
      for (const auto& [a, b] : o.pair_entries()) {
        key_set(out, a);
        out += '<';
        key_set(out, b);
      }
      out += ']';
      break;
    case Preorder::Kind::Rank:
      out += "rk[";
      for (const auto& [s, w] : o.rank_weights()) {
        key_set(out, s);
        out += '=';
        key_double(out, w);
      }
      if (o.rank_fallback()) {
        out += "|d=";
        key_double(out, *o.rank_fallback());
      }
      out += ']';
      break;
    case Preorder::Kind::Table: {
      out += "tb[";
      key_set(out, o.table_base());
      out += '|';
      for (bool bit : o.table_bits()) out += bit ? '1' : '0';
      out += ']';
      break;
    }
  }
}

void key_measure(std::string& out, const Measure& m) {
  switch (m.kind()) {
    case Measure::Kind::Weights:
      out += "wt[";
      for (const auto& [s, w] : m.weight_entries()) {
        key_set(out, s);
        out += '=';
        key_double(out, w);
      }
      if (m.weight_fallback()) {
        out += "|d=";
        key_double(out, *m.weight_fallback());
      }
      out += ']';
      break;
    case Measure::Kind::Indicator:
      out += "in(";
      out += m.pivot().name();
      out += ',';
      key_double(out, m.if_in());
      out += ',';
      key_double(out, m.if_out());
      out += ')';
      break;
    case Measure::Kind::Linear:
      out += "ln[";
      for (const auto& [a, w] : m.linear_weights()) {
        out += a.name();
        out += '=';
        key_double(out, w);
      }
      out += "|o=";
      key_double(out, m.linear_offset());
      out += ']';
      break;
  }
}

}  // namespace

std::string structural_key(const Rule& rule) {
  std::string out;
  if (const auto* sc = std::get_if<SCAtom>(&rule.head)) {
    out += "S:";
    key_sc(out, *sc);
  } else if (const auto* pre = std::get_if<PreorderAtom>(&rule.head)) {
    out += "P:";
    key_sc(out, pre->sc());
    key_order(out, pre->order());
  } else {
    const auto& meas = std::get<MeasureAtom>(rule.head);
    out += "M:";
    key_sc(out, meas.sc());
    key_measure(out, meas.measure());
  }
  out += ":-";
  for (const SCAtom& atom : rule.body) key_sc(out, atom);
  return out;
}

}  // namespace detail

}  // namespace psc
