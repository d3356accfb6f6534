#include <charconv>
#include <cmath>

#include "psc/errors.hpp"
#include "psc/text.hpp"

namespace psc::text {

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

namespace {

std::string set_text(const AtomSet& set) {
  std::string out = "{";
  bool first = true;
  for (const Atom& a : set) {
    if (!first) out += ",";
    out += a.name();
    first = false;
  }
  return out + "}";
}

std::string family_text(const Family& family) {
  switch (family.kind()) {
    case Family::Kind::Extensional: {
      std::string out = "{";
      bool first = true;
      for (const AtomSet& member : family.members()) {
        if (!first) out += ", ";
        out += set_text(member);
        first = false;
      }
      return out + "}";
    }
    case Family::Kind::Even:
      return "even";
    case Family::Kind::Card:
      return "card(" + std::to_string(family.card_lo()) + ".." +
             std::to_string(family.card_hi()) + ")";
    case Family::Kind::Any:
      return "any";
  }
  return "";
}

std::string weightmap_text(const std::vector<std::pair<AtomSet, double>>& entries,
                           std::optional<double> fallback) {
  std::string out;
  bool first = true;
  for (const auto& [set, w] : entries) {
    if (!first) out += ", ";
    out += set_text(set) + " = " + format_real(w);
    first = false;
  }
  if (fallback) {
    if (!first) out += ", ";
    out += "default = " + format_real(*fallback);
  }
  return out;
}

std::string order_text(const Preorder& order) {
  switch (order.kind()) {
    case Preorder::Kind::Chain: {
      std::string out = "chain(";
      bool first = true;
      for (const AtomSet& stage : order.chain_stages()) {
        if (!first) out += " < ";
        out += set_text(stage);
        first = false;
      }
      return out + ")";
    }
    case Preorder::Kind::Pairs: {
      std::string out = "pairs(";
      bool first = true;
      for (const auto& [lo, hi] : order.pair_entries()) {
        if (!first) out += ", ";
        out += set_text(lo) + " <= " + set_text(hi);
        first = false;
      }
      return out + ")";
    }
    case Preorder::Kind::Rank:
      return "rank(" + weightmap_text(order.rank_weights(), order.rank_fallback()) + ")";
    case Preorder::Kind::Table:
      throw Error(ErrorCode::Internal, "relation tables have no text form");
  }
  return "";
}

std::string measure_text(const Measure& measure) {
  switch (measure.kind()) {
    case Measure::Kind::Weights:
      return "weights(" +
             weightmap_text(measure.weight_entries(), measure.weight_fallback()) + ")";
    case Measure::Kind::Indicator:
      return "indicator(" + measure.pivot().name() + ", " +
             format_real(measure.if_in()) + ", " + format_real(measure.if_out()) + ")";
    case Measure::Kind::Linear: {
      std::string out = "linear(";
      bool first = true;
      for (const auto& [atom, w] : measure.linear_weights()) {
        if (!first) out += ", ";
        out += atom.name() + " = " + format_real(w);
        first = false;
      }
      if (measure.linear_offset() != 0 || measure.linear_weights().empty()) {
        if (!first) out += ", ";
        out += "offset = " + format_real(measure.linear_offset());
      }
      return out + ")";
    }
  }
  return "";
}

std::string sc_text(const SCAtom& atom) {
  if (atom.is_positive_literal()) return atom.base().atoms()[0].name();
  if (atom.is_negative_literal()) return "not " + atom.base().atoms()[0].name();
  return "sc(" + set_text(atom.base()) + ", " + family_text(atom.family()) + ")";
}

std::string head_text(const Head& head) {
  if (const auto* sc = std::get_if<SCAtom>(&head)) return sc_text(*sc);
  if (const auto* pre = std::get_if<PreorderAtom>(&head)) {
    return "pref(" + set_text(pre->sc().base()) + ", " + family_text(pre->sc().family()) +
           ", " + order_text(pre->order()) + ")";
  }
  const auto& meas = std::get<MeasureAtom>(head);
  return "meas(" + set_text(meas.sc().base()) + ", " + family_text(meas.sc().family()) +
         ", " + measure_text(meas.measure()) + ")";
}

}  // namespace

std::string serialize(const SCAtom& atom) { return sc_text(atom); }

std::string serialize(const Program& program) {
  std::string out;

  AtomSet occurring;
  for (const Rule& rule : program.rules()) {
    occurring = occurring.unite(reduct(rule.head).base());
    for (const SCAtom& atom : rule.body) occurring = occurring.unite(atom.base());
  }
  const AtomSet extras = program.universe().difference(occurring);
  if (!extras.empty()) {
    out += "#universe ";
    bool first = true;
    for (const Atom& a : extras) {
      if (!first) out += ", ";
      out += a.name();
      first = false;
    }
    out += ".\n";
  }

  for (const Rule& rule : program.rules()) {
    out += head_text(rule.head);
    if (!rule.body.empty()) {
      out += " :- ";
      bool first = true;
      for (const SCAtom& atom : rule.body) {
        if (!first) out += ", ";
        out += sc_text(atom);
        first = false;
      }
    }
    out += ".\n";
  }
  return out;
}

namespace {

std::string aso_literal_text(const aso::Literal& literal) {
  return literal.strong_neg ? "-" + literal.atom.name() : literal.atom.name();
}

// precedence: '|' lowest, then '&', then units
std::string comb_text(const aso::BoolComb& comb, int min_prec) {
  using Node = aso::BoolComb::Node;
  switch (comb.node()) {
    case Node::Lit:
      return aso_literal_text(comb.literal());
    case Node::DefaultNeg:
      return "not " + aso_literal_text(comb.literal());
    case Node::And: {
      std::string out = comb_text(comb.lhs(), 2) + " & " + comb_text(comb.rhs(), 3);
      return min_prec > 2 ? "(" + out + ")" : out;
    }
    case Node::Or: {
      std::string out = comb_text(comb.lhs(), 1) + " | " + comb_text(comb.rhs(), 2);
      return min_prec > 1 ? "(" + out + ")" : out;
    }
  }
  return "";
}

}  // namespace

std::string serialize(const aso::AsoProgram& program) {
  std::string out = "#gen.\n";
  for (const NormalRule& rule : program.gen.rules()) {
    out += rule.head.name();
    if (!rule.body_pos.empty() || !rule.body_neg.empty()) {
      out += " :- ";
      bool first = true;
      for (const Atom& a : rule.body_pos) {
        if (!first) out += ", ";
        out += a.name();
        first = false;
      }
      for (const Atom& a : rule.body_neg) {
        if (!first) out += ", ";
        out += "not " + a.name();
        first = false;
      }
    }
    out += ".\n";
  }
  out += "#pref.\n";
  for (const aso::AsoPrefRule& rule : program.pref) {
    bool first = true;
    for (const aso::BoolComb& option : rule.options) {
      if (!first) out += " > ";
      out += comb_text(option, 1);
      first = false;
    }
    if (!rule.body_pos.empty() || !rule.body_neg.empty()) {
      out += " :- ";
      first = true;
      for (const aso::Literal& l : rule.body_pos) {
        if (!first) out += ", ";
        out += aso_literal_text(l);
        first = false;
      }
      for (const aso::Literal& l : rule.body_neg) {
        if (!first) out += ", ";
        out += "not " + aso_literal_text(l);
        first = false;
      }
    }
    out += ".\n";
  }
  return out;
}

namespace {

// precedence: '<|' lowest, then '|', then '&', then '!'
std::string formula_text(const pp::PrefFormula& formula, int min_prec) {
  using Node = pp::PrefFormula::Node;
  switch (formula.node()) {
    case Node::Basic:
      return formula.desires()[0].name();
    case Node::Atomic: {
      if (formula.desires().size() == 1) return formula.desires()[0].name();
      std::string out;
      bool first = true;
      for (const Atom& d : formula.desires()) {
        if (!first) out += " <| ";
        out += d.name();
        first = false;
      }
      return min_prec > 1 ? "(" + out + ")" : out;
    }
    case Node::And: {
      std::string out = formula_text(formula.lhs(), 3) + " & " + formula_text(formula.rhs(), 4);
      return min_prec > 3 ? "(" + out + ")" : out;
    }
    case Node::Or: {
      std::string out = formula_text(formula.lhs(), 2) + " | " + formula_text(formula.rhs(), 3);
      return min_prec > 2 ? "(" + out + ")" : out;
    }
    case Node::Not:
      return "!" + formula_text(formula.inner(), 4);
    case Node::Lex: {
      if (formula.parts().size() == 1) return formula_text(formula.parts()[0], min_prec);
      std::string out;
      bool first = true;
      for (const pp::PrefFormula& part : formula.parts()) {
        if (!first) out += " <| ";
        out += formula_text(part, 2);
        first = false;
      }
      return min_prec > 1 ? "(" + out + ")" : out;
    }
  }
  return "";
}

}  // namespace

std::string serialize(const pp::PrefFormula& formula) { return formula_text(formula, 1); }

std::string format_diagnostic(const Diagnostic& diagnostic) {
  std::string out = diagnostic.severity == Severity::Error ? "error" : "warning";
  out += " at ";
  out += std::to_string(diagnostic.span.line) + ":" + std::to_string(diagnostic.span.column);
  out += ": " + diagnostic.message;
  return out;
}

}  // namespace psc::text
