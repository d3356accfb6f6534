#ifndef PSC_SRC_TEXT_LEXER_HPP
#define PSC_SRC_TEXT_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "psc/text.hpp"

namespace psc::text {

enum class TokenKind {
  Ident,      // atom names and keywords; may carry a (digits) suffix
  Number,     // integer or decimal
  LBrace, RBrace, LParen, RParen,
  Comma, Dot, DotDot, ColonDash,
  Less, LessEq, LexLess,  // '<' '<=' '<|'
  Greater, Eq, Hash, Amp, Pipe, Bang, Minus,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceSpan span;
};

/// Thrown internally by the parsers; converted into a diagnostic at the
/// entry points.
struct ParseAbort {
  Diagnostic diagnostic;
};

/// Tokenizes the whole input. '%' starts a comment running to the end
/// of the line. Throws ParseAbort on a malformed token.
std::vector<Token> tokenize(std::string_view input);

}  // namespace psc::text

#endif
