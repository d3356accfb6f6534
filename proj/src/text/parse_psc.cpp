#include <array>
#include <limits>

#include "parser_util.hpp"
#include "psc/text.hpp"

namespace psc::text {

namespace {

constexpr std::array kReserved = {
    "sc",    "pref",  "meas",    "card",      "even",   "any",
    "not",   "chain", "pairs",   "rank",      "weights", "indicator",
    "linear", "offset", "default", "inf",
};

bool reserved(const std::string& name) {
  for (const char* word : kReserved)
    if (name == word) return true;
  return false;
}

class PscParser {
 public:
  explicit PscParser(TokenStream ts) : ts_(std::move(ts)) {}

  Program parse() {
    std::vector<Rule> rules;
    std::vector<Atom> extras;
    while (!ts_.at(TokenKind::End)) {
      if (ts_.accept(TokenKind::Hash)) {
        const Token& word = ts_.expect(TokenKind::Ident, "a directive name");
        if (word.text != "universe") {
          ts_.fail("unknown directive '#" + word.text + "'");
        }
        do {
          extras.push_back(parse_atom());
        } while (ts_.accept(TokenKind::Comma));
      } else {
        rules.push_back(parse_rule());
      }
      ts_.expect(TokenKind::Dot, "'.'");
    }
    const SourceSpan whole{1, 1, 0, 0};
    return with_semantics(ts_, whole, [&] {
      return Program(std::move(rules), AtomSet(std::move(extras)));
    });
  }

 private:
  Atom parse_atom() {
    const Token& t = ts_.expect(TokenKind::Ident, "an atom");
    if (reserved(t.text)) {
      ts_.fail_semantic("'" + t.text + "' is a reserved word", t.span);
    }
    return Atom(t.text);
  }

  std::size_t parse_index() {
    const Token& t = ts_.expect(TokenKind::Number, "a nonnegative integer");
    if (t.text.find('.') != std::string::npos ||
        t.text.find('e') != std::string::npos) {
      ts_.fail("expected an integer, got '" + t.text + "'");
    }
    return static_cast<std::size_t>(parse_number(ts_, t));
  }

  double parse_real() {
    const bool negate = ts_.accept(TokenKind::Minus);
    if (ts_.at_ident("inf")) {
      ts_.next();
      const double inf = std::numeric_limits<double>::infinity();
      return negate ? -inf : inf;
    }
    const Token& t = ts_.expect(TokenKind::Number, "a number or inf");
    const double v = parse_number(ts_, t);
    return negate ? -v : v;
  }

  AtomSet parse_base() {
    ts_.expect(TokenKind::LBrace, "'{'");
    std::vector<Atom> atoms;
    if (!ts_.at(TokenKind::RBrace)) {
      do {
        atoms.push_back(parse_atom());
      } while (ts_.accept(TokenKind::Comma));
    }
    ts_.expect(TokenKind::RBrace, "'}'");
    return AtomSet(std::move(atoms));
  }

  Family parse_family() {
    const SourceSpan span = ts_.peek().span;
    if (ts_.at(TokenKind::LBrace)) {
      ts_.next();
      std::vector<AtomSet> members;
      if (!ts_.at(TokenKind::RBrace)) {
        do {
          members.push_back(parse_base());
        } while (ts_.accept(TokenKind::Comma));
      }
      ts_.expect(TokenKind::RBrace, "'}'");
      return Family::extensional(std::move(members));
    }
    if (ts_.at_ident("card")) {
      ts_.next();
      ts_.expect(TokenKind::LParen, "'('");
      const std::size_t lo = parse_index();
      ts_.expect(TokenKind::DotDot, "'..'");
      const std::size_t hi = parse_index();
      ts_.expect(TokenKind::RParen, "')'");
      return with_semantics(ts_, span, [&] { return Family::card(lo, hi); });
    }
    if (ts_.at_ident("even")) {
      ts_.next();
      return Family::even();
    }
    if (ts_.at_ident("any")) {
      ts_.next();
      return Family::any();
    }
    ts_.fail("expected a family ('{...}', card(..), even or any)");
  }

  // weight maps for rank(...) and weights(...): "{..} = real" entries
  // plus at most one "default = real"
  std::pair<std::vector<std::pair<AtomSet, double>>, std::optional<double>>
  parse_weightmap() {
    std::vector<std::pair<AtomSet, double>> entries;
    std::optional<double> fallback;
    if (ts_.at(TokenKind::RParen)) return {entries, fallback};
    do {
      if (ts_.at_ident("default")) {
        const Token& word = ts_.next();
        ts_.expect(TokenKind::Eq, "'='");
        if (fallback) {
          ts_.fail_semantic("duplicate default weight", word.span);
        }
        fallback = parse_real();
      } else {
        AtomSet key = parse_base();
        ts_.expect(TokenKind::Eq, "'='");
        entries.emplace_back(std::move(key), parse_real());
      }
    } while (ts_.accept(TokenKind::Comma));
    return {std::move(entries), fallback};
  }

  Preorder parse_order() {
    const SourceSpan span = ts_.peek().span;
    if (ts_.at_ident("chain")) {
      ts_.next();
      ts_.expect(TokenKind::LParen, "'('");
      std::vector<AtomSet> stages;
      stages.push_back(parse_base());
      while (ts_.accept(TokenKind::Less)) stages.push_back(parse_base());
      ts_.expect(TokenKind::RParen, "')'");
      return with_semantics(ts_, span, [&] { return Preorder::chain(std::move(stages)); });
    }
    if (ts_.at_ident("pairs")) {
      ts_.next();
      ts_.expect(TokenKind::LParen, "'('");
      std::vector<std::pair<AtomSet, AtomSet>> entries;
      if (!ts_.at(TokenKind::RParen)) {
        do {
          AtomSet lo = parse_base();
          ts_.expect(TokenKind::LessEq, "'<='");
          AtomSet hi = parse_base();
          entries.emplace_back(std::move(lo), std::move(hi));
        } while (ts_.accept(TokenKind::Comma));
      }
      ts_.expect(TokenKind::RParen, "')'");
      return Preorder::pairs(std::move(entries));
    }
    if (ts_.at_ident("rank")) {
      ts_.next();
      ts_.expect(TokenKind::LParen, "'('");
      auto [entries, fallback] = parse_weightmap();
      ts_.expect(TokenKind::RParen, "')'");
      return with_semantics(ts_, span, [&] {
        return Preorder::rank(std::move(entries), fallback);
      });
    }
    ts_.fail("expected an order (chain, pairs or rank)");
  }

  Measure parse_measure() {
    const SourceSpan span = ts_.peek().span;
    if (ts_.at_ident("weights")) {
      ts_.next();
      ts_.expect(TokenKind::LParen, "'('");
      auto [entries, fallback] = parse_weightmap();
      ts_.expect(TokenKind::RParen, "')'");
      return with_semantics(ts_, span, [&] {
        return Measure::weights(std::move(entries), fallback);
      });
    }
    if (ts_.at_ident("indicator")) {
      ts_.next();
      ts_.expect(TokenKind::LParen, "'('");
      Atom pivot = parse_atom();
      ts_.expect(TokenKind::Comma, "','");
      const double if_in = parse_real();
      ts_.expect(TokenKind::Comma, "','");
      const double if_out = parse_real();
      ts_.expect(TokenKind::RParen, "')'");
      return with_semantics(ts_, span, [&] {
        return Measure::indicator(std::move(pivot), if_in, if_out);
      });
    }
    if (ts_.at_ident("linear")) {
      ts_.next();
      ts_.expect(TokenKind::LParen, "'('");
      std::vector<std::pair<Atom, double>> weights;
      double offset = 0;
      bool saw_offset = false;
      if (!ts_.at(TokenKind::RParen)) {
        do {
          if (ts_.at_ident("offset")) {
            const Token& word = ts_.next();
            ts_.expect(TokenKind::Eq, "'='");
            if (saw_offset) ts_.fail_semantic("duplicate offset", word.span);
            offset = parse_real();
            saw_offset = true;
          } else {
            Atom key = parse_atom();
            ts_.expect(TokenKind::Eq, "'='");
            weights.emplace_back(std::move(key), parse_real());
          }
        } while (ts_.accept(TokenKind::Comma));
      }
      ts_.expect(TokenKind::RParen, "')'");
      return with_semantics(ts_, span, [&] {
        return Measure::linear(std::move(weights), offset);
      });
    }
    ts_.fail("expected a measure (weights, indicator or linear)");
  }

  SCAtom parse_bodyatom() {
    const SourceSpan span = ts_.peek().span;
    if (ts_.at_ident("not")) {
      ts_.next();
      return SCAtom::literal(parse_atom(), true);
    }
    if (ts_.at_ident("sc")) {
      ts_.next();
      ts_.expect(TokenKind::LParen, "'('");
      AtomSet base = parse_base();
      ts_.expect(TokenKind::Comma, "','");
      Family family = parse_family();
      ts_.expect(TokenKind::RParen, "')'");
      return with_semantics(ts_, span, [&] {
        return SCAtom(std::move(base), std::move(family));
      });
    }
    return SCAtom::literal(parse_atom(), false);
  }

  Head parse_head() {
    const SourceSpan span = ts_.peek().span;
    if (ts_.at_ident("pref")) {
      ts_.next();
      ts_.expect(TokenKind::LParen, "'('");
      AtomSet base = parse_base();
      ts_.expect(TokenKind::Comma, "','");
      Family family = parse_family();
      ts_.expect(TokenKind::Comma, "','");
      Preorder order = parse_order();
      ts_.expect(TokenKind::RParen, "')'");
      return with_semantics(ts_, span, [&]() -> Head {
        return PreorderAtom(SCAtom(std::move(base), std::move(family)), std::move(order));
      });
    }
    if (ts_.at_ident("meas")) {
      ts_.next();
      ts_.expect(TokenKind::LParen, "'('");
      AtomSet base = parse_base();
      ts_.expect(TokenKind::Comma, "','");
      Family family = parse_family();
      ts_.expect(TokenKind::Comma, "','");
      Measure measure = parse_measure();
      ts_.expect(TokenKind::RParen, "')'");
      return with_semantics(ts_, span, [&]() -> Head {
        return MeasureAtom(SCAtom(std::move(base), std::move(family)), std::move(measure));
      });
    }
    return parse_bodyatom();
  }

  Rule parse_rule() {
    Rule rule{parse_head(), {}};
    if (ts_.accept(TokenKind::ColonDash)) {
      while (!ts_.at(TokenKind::Dot)) {
        rule.body.push_back(parse_bodyatom());
        if (!ts_.accept(TokenKind::Comma)) break;
      }
    }
    return rule;
  }

  TokenStream ts_;
};

}  // namespace

ParseResult<Program> parse_program(std::string_view input) {
  ParseResult<Program> result;
  try {
    PscParser parser{TokenStream(tokenize(input))};
    result.value = parser.parse();
  } catch (ParseAbort& abort) {
    result.diagnostics.push_back(std::move(abort.diagnostic));
  }
  return result;
}

}  // namespace psc::text
