#ifndef PSC_TEXT_HPP
#define PSC_TEXT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psc/aso.hpp"
#include "psc/pp.hpp"
#include "psc/program.hpp"

namespace psc::text {

/// Position of a token or construct in the input; 1-based lines and
/// columns, byte offset plus length.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
  std::size_t length = 0;
};

enum class Severity { Error, Warning };

/// Parse diagnostics are positional syntax problems; semantic ones are
/// invariant violations found while building the parsed objects.
enum class DiagnosticKind { Parse, Semantic };

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagnosticKind kind = DiagnosticKind::Parse;
  std::string message;
  SourceSpan span;
};

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
};

ParseResult<Program> parse_program(std::string_view input);
ParseResult<aso::AsoProgram> parse_aso_program(std::string_view input);
ParseResult<pp::PrefFormula> parse_formula(std::string_view input);

/// Canonical text forms; parsing the output reproduces the value.
std::string serialize(const Program& program);
std::string serialize(const aso::AsoProgram& program);
std::string serialize(const pp::PrefFormula& formula);
std::string serialize(const SCAtom& atom);

/// Shortest round-tripping decimal form; infinities print as inf/-inf.
std::string format_real(double v);

std::string format_diagnostic(const Diagnostic& diagnostic);

}  // namespace psc::text

#endif
