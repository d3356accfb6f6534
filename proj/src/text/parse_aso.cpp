#include "parser_util.hpp"
#include "psc/text.hpp"

namespace psc::text {

namespace {

class AsoParser {
 public:
  explicit AsoParser(TokenStream ts) : ts_(std::move(ts)) {}

  aso::AsoProgram parse() {
    aso::AsoProgram program;
    expect_section("gen");
    while (!ts_.at(TokenKind::End) && !ts_.at(TokenKind::Hash)) {
      program.gen.add(parse_gen_rule());
      ts_.expect(TokenKind::Dot, "'.'");
    }
    if (ts_.at(TokenKind::Hash)) {
      expect_section("pref");
      while (!ts_.at(TokenKind::End)) {
        program.pref.push_back(parse_pref_rule());
        ts_.expect(TokenKind::Dot, "'.'");
      }
    }
    return program;
  }

 private:
  void expect_section(const std::string& name) {
    ts_.expect(TokenKind::Hash, "'#" + name + ".'");
    const Token& word = ts_.expect(TokenKind::Ident, "'" + name + "'");
    if (word.text != name) {
      ts_.fail_semantic("expected section '#" + name + ".'", word.span);
    }
    ts_.expect(TokenKind::Dot, "'.'");
  }

  Atom parse_atom() {
    const Token& t = ts_.expect(TokenKind::Ident, "an atom");
    if (t.text == "not") ts_.fail("unexpected 'not'");
    return Atom(t.text);
  }

  NormalRule parse_gen_rule() {
    NormalRule rule{parse_atom(), {}, {}};
    if (ts_.accept(TokenKind::ColonDash)) {
      while (!ts_.at(TokenKind::Dot)) {
        if (ts_.at(TokenKind::Minus)) {
          ts_.fail_semantic("strong negation is not allowed in the #gen section",
                            ts_.peek().span);
        }
        if (ts_.at_ident("not")) {
          ts_.next();
          rule.body_neg.push_back(parse_atom());
        } else {
          rule.body_pos.push_back(parse_atom());
        }
        if (!ts_.accept(TokenKind::Comma)) break;
      }
    }
    return rule;
  }

  aso::Literal parse_literal() {
    if (ts_.accept(TokenKind::Minus)) return {parse_atom(), true};
    return {parse_atom(), false};
  }

  // combination grammar: disjunction over conjunction over units;
  // default negation is allowed only directly on a literal
  aso::BoolComb parse_comb() { return parse_disj(); }

  aso::BoolComb parse_disj() {
    aso::BoolComb lhs = parse_conj();
    while (ts_.accept(TokenKind::Pipe)) {
      lhs = aso::BoolComb::disj(std::move(lhs), parse_conj());
    }
    return lhs;
  }

  aso::BoolComb parse_conj() {
    aso::BoolComb lhs = parse_unit();
    while (ts_.accept(TokenKind::Amp)) {
      lhs = aso::BoolComb::conj(std::move(lhs), parse_unit());
    }
    return lhs;
  }

  aso::BoolComb parse_unit() {
    if (ts_.at_ident("not")) {
      ts_.next();
      if (ts_.at(TokenKind::LParen)) {
        ts_.fail("default negation is allowed only in front of literals");
      }
      return aso::BoolComb::def_neg(parse_literal());
    }
    if (ts_.accept(TokenKind::LParen)) {
      aso::BoolComb inner = parse_comb();
      ts_.expect(TokenKind::RParen, "')'");
      return inner;
    }
    return aso::BoolComb::lit(parse_literal());
  }

  aso::AsoPrefRule parse_pref_rule() {
    aso::AsoPrefRule rule;
    rule.options.push_back(parse_comb());
    while (ts_.accept(TokenKind::Greater)) {
      rule.options.push_back(parse_comb());
    }
    if (ts_.accept(TokenKind::ColonDash)) {
      while (!ts_.at(TokenKind::Dot)) {
        if (ts_.at_ident("not")) {
          ts_.next();
          rule.body_neg.push_back(parse_literal());
        } else {
          rule.body_pos.push_back(parse_literal());
        }
        if (!ts_.accept(TokenKind::Comma)) break;
      }
    }
    return rule;
  }

  TokenStream ts_;
};

}  // namespace

ParseResult<aso::AsoProgram> parse_aso_program(std::string_view input) {
  ParseResult<aso::AsoProgram> result;
  try {
    AsoParser parser{TokenStream(tokenize(input))};
    result.value = parser.parse();
  } catch (ParseAbort& abort) {
    result.diagnostics.push_back(std::move(abort.diagnostic));
  }
  return result;
}

}  // namespace psc::text
