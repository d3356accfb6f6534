#ifndef PSC_SRC_TEXT_PARSER_UTIL_HPP
#define PSC_SRC_TEXT_PARSER_UTIL_HPP

#include <charconv>
#include <string>
#include <vector>

#include "lexer.hpp"
#include "psc/errors.hpp"

namespace psc::text {

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token& next() {
    const Token& t = peek();
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  bool at(TokenKind kind) const { return peek().kind == kind; }

  bool at_ident(std::string_view text) const {
    return peek().kind == TokenKind::Ident && peek().text == text;
  }

  bool accept(TokenKind kind) {
    if (!at(kind)) return false;
    next();
    return true;
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (!at(kind)) {
      fail("expected " + what + ", got '" + describe(peek()) + "'");
    }
    return next();
  }

  [[noreturn]] void fail(std::string message) const {
    throw ParseAbort{Diagnostic{Severity::Error, DiagnosticKind::Parse,
                                std::move(message), peek().span}};
  }

  [[noreturn]] void fail_semantic(std::string message, const SourceSpan& span) const {
    throw ParseAbort{Diagnostic{Severity::Error, DiagnosticKind::Semantic,
                                std::move(message), span}};
  }

  static std::string describe(const Token& t) {
    return t.kind == TokenKind::End ? "end of input" : t.text;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Runs a core constructor and rethrows psc::Error as a semantic
/// diagnostic anchored at `span`.
template <typename Fn>
auto with_semantics(const TokenStream& ts, const SourceSpan& span, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    ts.fail_semantic(e.what(), span);
  }
}

inline double parse_number(const TokenStream& ts, const Token& token) {
  double value = 0;
  auto [end, ec] = std::from_chars(token.text.data(),
                                   token.text.data() + token.text.size(), value);
  if (ec != std::errc{} || end != token.text.data() + token.text.size()) {
    ts.fail("malformed number '" + token.text + "'");
  }
  return value;
}

}  // namespace psc::text

#endif
