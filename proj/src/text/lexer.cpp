#include "lexer.hpp"

#include <cctype>

namespace psc::text {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view input) : input_(input) {}

  bool done() const { return pos_ >= input_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < input_.size() ? input_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = input_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  SourceSpan here() const { return SourceSpan{line_, column_, pos_, 0}; }

  SourceSpan close(const SourceSpan& start) const {
    SourceSpan span = start;
    span.length = pos_ - start.offset;
    return span;
  }

 private:
  std::string_view input_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

[[noreturn]] void fail(const SourceSpan& span, std::string message) {
  throw ParseAbort{Diagnostic{Severity::Error, DiagnosticKind::Parse,
                              std::move(message), span}};
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  Cursor cur(input);

  auto push = [&](TokenKind kind, const SourceSpan& start, std::string text) {
    tokens.push_back(Token{kind, std::move(text), cur.close(start)});
  };

  while (!cur.done()) {
    const char c = cur.peek();
    if (std::isspace(static_cast<unsigned char>(c))) {
      cur.advance();
      continue;
    }
    if (c == '%') {
      while (!cur.done() && cur.peek() != '\n') cur.advance();
      continue;
    }

    const SourceSpan start = cur.here();

    if (std::islower(static_cast<unsigned char>(c))) {
      std::string text;
      text += cur.advance();
      while (ident_char(cur.peek())) text += cur.advance();
      // fold a "(digits)" suffix into the name when it matches exactly
      if (cur.peek() == '(' && std::isdigit(static_cast<unsigned char>(cur.peek(1)))) {
        std::size_t ahead = 2;
        while (std::isdigit(static_cast<unsigned char>(cur.peek(ahead)))) ++ahead;
        if (cur.peek(ahead) == ')') {
          for (std::size_t i = 0; i <= ahead; ++i) text += cur.advance();
        }
      }
      push(TokenKind::Ident, start, std::move(text));
      continue;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      fail(cur.close(start), "atom names start with a lowercase letter");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      text += cur.advance();
      while (std::isdigit(static_cast<unsigned char>(cur.peek()))) text += cur.advance();
      // a fraction, unless this dot starts a '..' range
      if (cur.peek() == '.' && std::isdigit(static_cast<unsigned char>(cur.peek(1)))) {
        text += cur.advance();
        while (std::isdigit(static_cast<unsigned char>(cur.peek()))) text += cur.advance();
      }
      if (cur.peek() == 'e' || cur.peek() == 'E') {
        std::size_t ahead = 1;
        if (cur.peek(ahead) == '+' || cur.peek(ahead) == '-') ++ahead;
        if (std::isdigit(static_cast<unsigned char>(cur.peek(ahead)))) {
          for (std::size_t i = 0; i < ahead; ++i) text += cur.advance();
          while (std::isdigit(static_cast<unsigned char>(cur.peek()))) text += cur.advance();
        }
      }
      push(TokenKind::Number, start, std::move(text));
      continue;
    }

    cur.advance();
    switch (c) {
      case '{': push(TokenKind::LBrace, start, "{"); break;
      case '}': push(TokenKind::RBrace, start, "}"); break;
      case '(': push(TokenKind::LParen, start, "("); break;
      case ')': push(TokenKind::RParen, start, ")"); break;
      case ',': push(TokenKind::Comma, start, ","); break;
      case '=': push(TokenKind::Eq, start, "="); break;
      case '#': push(TokenKind::Hash, start, "#"); break;
      case '&': push(TokenKind::Amp, start, "&"); break;
      case '|': push(TokenKind::Pipe, start, "|"); break;
      case '!': push(TokenKind::Bang, start, "!"); break;
      case '-': push(TokenKind::Minus, start, "-"); break;
      case '>': push(TokenKind::Greater, start, ">"); break;
      case '.':
        if (cur.peek() == '.') {
          cur.advance();
          push(TokenKind::DotDot, start, "..");
        } else {
          push(TokenKind::Dot, start, ".");
        }
        break;
      case '<':
        if (cur.peek() == '=') {
          cur.advance();
          push(TokenKind::LessEq, start, "<=");
        } else if (cur.peek() == '|') {
          cur.advance();
          push(TokenKind::LexLess, start, "<|");
        } else {
          push(TokenKind::Less, start, "<");
        }
        break;
      case ':':
        if (cur.peek() == '-') {
          cur.advance();
          push(TokenKind::ColonDash, start, ":-");
        } else {
          fail(cur.close(start), "expected ':-'");
        }
        break;
      default:
        fail(cur.close(start), std::string("unexpected character '") + c + "'");
    }
  }

  Token end;
  end.kind = TokenKind::End;
  end.span = cur.close(cur.here());
  if (end.span.offset > 0) {
    end.span.offset -= 1;  // keep the span inside the input
    end.span.length = 1;
  }
  tokens.push_back(std::move(end));
  return tokens;
}

}  // namespace psc::text
