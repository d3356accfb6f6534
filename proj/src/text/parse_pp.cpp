#include "parser_util.hpp"
#include "psc/text.hpp"

namespace psc::text {

namespace {

// formula   := chain
// chain     := disj { "<|" disj }      (all-desire chains are atomic)
// disj      := conj { "|" conj }
// conj      := unit { "&" unit }
// unit      := "!" unit | "(" formula ")" | desire
class PpParser {
 public:
  explicit PpParser(TokenStream ts) : ts_(std::move(ts)) {}

  pp::PrefFormula parse() {
    pp::PrefFormula formula = parse_chain();
    if (!ts_.at(TokenKind::End)) {
      ts_.fail("unexpected '" + TokenStream::describe(ts_.peek()) + "' after the formula");
    }
    return formula;
  }

 private:
  pp::PrefFormula parse_chain() {
    std::vector<pp::PrefFormula> parts;
    parts.push_back(parse_disj());
    while (ts_.accept(TokenKind::LexLess)) parts.push_back(parse_disj());
    if (parts.size() == 1) return std::move(parts[0]);

    const bool all_desires =
        std::all_of(parts.begin(), parts.end(), [](const pp::PrefFormula& f) {
          return f.node() == pp::PrefFormula::Node::Basic;
        });
    if (all_desires) {
      std::vector<Atom> desires;
      for (const pp::PrefFormula& f : parts) desires.push_back(f.desires()[0]);
      return pp::PrefFormula::atomic(std::move(desires));
    }
    return pp::PrefFormula::lex(std::move(parts));
  }

  pp::PrefFormula parse_disj() {
    pp::PrefFormula lhs = parse_conj();
    while (ts_.accept(TokenKind::Pipe)) {
      lhs = pp::PrefFormula::disj(std::move(lhs), parse_conj());
    }
    return lhs;
  }

  pp::PrefFormula parse_conj() {
    pp::PrefFormula lhs = parse_unit();
    while (ts_.accept(TokenKind::Amp)) {
      lhs = pp::PrefFormula::conj(std::move(lhs), parse_unit());
    }
    return lhs;
  }

  pp::PrefFormula parse_unit() {
    if (ts_.accept(TokenKind::Bang)) return pp::PrefFormula::neg(parse_unit());
    if (ts_.accept(TokenKind::LParen)) {
      pp::PrefFormula inner = parse_chain();
      ts_.expect(TokenKind::RParen, "')'");
      return inner;
    }
    const Token& t = ts_.expect(TokenKind::Ident, "a desire name");
    if (t.text == "not") ts_.fail("unexpected 'not'");
    return pp::PrefFormula::basic(Atom(t.text));
  }

  TokenStream ts_;
};

}  // namespace

ParseResult<pp::PrefFormula> parse_formula(std::string_view input) {
  ParseResult<pp::PrefFormula> result;
  try {
    PpParser parser{TokenStream(tokenize(input))};
    result.value = parser.parse();
  } catch (ParseAbort& abort) {
    result.diagnostics.push_back(std::move(abort.diagnostic));
  }
  return result;
}

}  // namespace psc::text
