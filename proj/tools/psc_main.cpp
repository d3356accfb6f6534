// Command-line driver: solve PSC programs, run the ASO translation
// side by side with the reference optimizer, evaluate preference
// formulas, and generate vertex-cover instances.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "psc/engine.hpp"
#include "psc/errors.hpp"
#include "psc/oracle.hpp"
#include "psc/prefer.hpp"
#include "psc/text.hpp"

namespace {

using nlohmann::json;
using namespace psc;

constexpr int kExitOk = 0;
constexpr int kExitNoModel = 1;
constexpr int kExitParseError = 2;
constexpr int kExitSemanticError = 3;
constexpr int kExitCapExceeded = 4;

struct ExitWith {
  int code;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    throw ExitWith{kExitSemanticError};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void report_diagnostics(const std::vector<text::Diagnostic>& diagnostics,
                        const std::string& path) {
  for (const auto& d : diagnostics) {
    std::cerr << path << ": " << text::format_diagnostic(d) << "\n";
  }
}

[[noreturn]] void fail_diagnostics(const std::vector<text::Diagnostic>& diagnostics,
                                   const std::string& path) {
  report_diagnostics(diagnostics, path);
  for (const auto& d : diagnostics) {
    if (d.severity == text::Severity::Error && d.kind == text::DiagnosticKind::Semantic) {
      throw ExitWith{kExitSemanticError};
    }
  }
  throw ExitWith{kExitParseError};
}

int exit_code_for(const Error& error) {
  return error.code() == ErrorCode::CapExceeded ? kExitCapExceeded : kExitSemanticError;
}

std::string model_text(const AtomSet& model) {
  std::string out = "{";
  bool first = true;
  for (const Atom& a : model) {
    if (!first) out += ",";
    out += a.name();
    first = false;
  }
  return out + "}";
}

json model_json(const AtomSet& model) {
  json out = json::array();
  for (const Atom& a : model) out.push_back(a.name());
  return out;
}

json models_json(const std::vector<AtomSet>& models) {
  json out = json::array();
  for (const AtomSet& m : models) out.push_back(model_json(m));
  return out;
}

const char* kind_name(ProgramKind kind) {
  switch (kind) {
    case ProgramKind::PlainSC: return "plain";
    case ProgramKind::Preordered: return "preordered";
    case ProgramKind::MeasureBased: return "measure";
  }
  return "unknown";
}

OrderMode parse_mode(const std::string& name) {
  if (name == "ic") return OrderMode::InCommon;
  if (name == "it") return OrderMode::InTotal;
  if (name == "w-ic") return OrderMode::WeakInCommon;
  if (name == "w-it") return OrderMode::WeakInTotal;
  if (name == "w-is") return OrderMode::WeakInSum;
  std::cerr << "error: unknown mode '" << name << "'\n";
  throw ExitWith{kExitSemanticError};
}

OrderMode default_mode(ProgramKind kind) {
  return kind == ProgramKind::MeasureBased ? OrderMode::WeakInSum : OrderMode::InCommon;
}

struct SolveOptions {
  std::string path;
  std::string mode;
  std::size_t cap = kDefaultSupportCap;
  bool enumerate_all = false;
  bool force = false;
  std::string format = "human";
};

int run_solve(const SolveOptions& opt) {
  auto parsed = text::parse_program(read_file(opt.path));
  if (!parsed.ok()) fail_diagnostics(parsed.diagnostics, opt.path);
  report_diagnostics(parsed.diagnostics, opt.path);
  const Program& program = *parsed.value;

  const OrderMode mode = opt.mode.empty() ? default_mode(program.kind())
                                          : parse_mode(opt.mode);
  const std::size_t cap = opt.force ? head_support(program).size() : opt.cap;

  const auto stable = enumerate_stable(program, std::max<std::size_t>(cap, 1));
  if (stable.empty()) {
    if (opt.format == "structured") {
      json out{{"kind", kind_name(program.kind())},
               {"mode", to_string(mode)},
               {"program", text::serialize(program)},
               {"stable_models", json::array()},
               {"preferred_models", json::array()}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "no stable models\n";
    }
    return kExitNoModel;
  }

  const auto preferred = preferred_models(program, mode, std::max<std::size_t>(cap, 1));

  std::vector<double> sums;
  if (program.kind() == ProgramKind::MeasureBased) {
    for (const AtomSet& m : stable) {
      sums.push_back(weak_sum(measure_pref_set(program, m), m));
    }
  }

  std::vector<std::vector<std::string>> verdicts;
  if (opt.enumerate_all) {
    for (const AtomSet& a : stable) {
      std::vector<std::string> row;
      for (const AtomSet& b : stable) {
        row.push_back(to_string(compare_models(program, a, b, mode)));
      }
      verdicts.push_back(std::move(row));
    }
  }

  if (opt.format == "structured") {
    json out{{"kind", kind_name(program.kind())},
             {"mode", to_string(mode)},
             {"program", text::serialize(program)},
             {"stable_models", models_json(stable)},
             {"preferred_models", models_json(preferred)}};
    if (!sums.empty()) {
      json sums_json = json::array();
      for (double s : sums) sums_json.push_back(s);
      out["weak_sums"] = std::move(sums_json);
    }
    if (opt.enumerate_all) out["verdicts"] = verdicts;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "kind: " << kind_name(program.kind()) << "\n";
    std::cout << "mode: " << to_string(mode) << "\n";
    std::cout << "stable models: " << stable.size() << "\n";
    for (std::size_t i = 0; i < stable.size(); ++i) {
      std::cout << "  " << model_text(stable[i]);
      if (!sums.empty()) std::cout << " sum=" << text::format_real(sums[i]);
      std::cout << "\n";
    }
    std::cout << "preferred: " << preferred.size() << "\n";
    for (const AtomSet& m : preferred) std::cout << "  " << model_text(m) << "\n";
    if (opt.enumerate_all) {
      std::cout << "verdicts:\n";
      for (std::size_t i = 0; i < stable.size(); ++i)
        for (std::size_t j = 0; j < stable.size(); ++j)
          if (i != j)
            std::cout << "  " << (i + 1) << " vs " << (j + 1) << ": "
                      << verdicts[i][j] << "\n";
    }
  }
  return kExitOk;
}

struct AsoOptions {
  std::string path;
  std::size_t cap = 16;
  std::string format = "human";
};

int run_aso(const AsoOptions& opt) {
  auto parsed = text::parse_aso_program(read_file(opt.path));
  if (!parsed.ok()) fail_diagnostics(parsed.diagnostics, opt.path);
  const aso::AsoProgram& program = *parsed.value;

  const auto optimal = aso::aso_optimal_models(program, opt.cap);
  const aso::Translation translation = aso::translate(program);
  const auto stable = enumerate_stable(translation.program);
  const auto preferred_ic = preferred_models(translation.program, OrderMode::InCommon);
  const auto preferred_it = preferred_models(translation.program, OrderMode::InTotal);

  std::vector<AtomSet> projected;
  for (const AtomSet& m : preferred_ic) projected.push_back(translation.project(m));
  std::vector<AtomSet> projected_it;
  for (const AtomSet& m : preferred_it) projected_it.push_back(translation.project(m));

  const bool agree = projected == optimal && projected_it == optimal;

  if (opt.format == "structured") {
    json out{{"optimal_models", models_json(optimal)},
             {"translation", text::serialize(translation.program)},
             {"translation_stable_models", models_json(stable)},
             {"preferred_models", models_json(preferred_ic)},
             {"projections", models_json(projected)},
             {"agreement", agree ? "PASS" : "FAIL"}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "optimal models: " << optimal.size() << "\n";
    for (const AtomSet& m : optimal) std::cout << "  " << model_text(m) << "\n";
    std::cout << "translation stable models: " << stable.size() << "\n";
    for (const AtomSet& m : stable) std::cout << "  " << model_text(m) << "\n";
    std::cout << "preferred: " << preferred_ic.size() << "\n";
    for (const AtomSet& m : preferred_ic) std::cout << "  " << model_text(m) << "\n";
    std::cout << "projections: " << projected.size() << "\n";
    for (const AtomSet& m : projected) std::cout << "  " << model_text(m) << "\n";
    std::cout << "aso/psc agreement: " << (agree ? "PASS" : "FAIL") << "\n";
  }
  return stable.empty() ? kExitNoModel : kExitOk;
}

struct PpOptions {
  std::string formula_path;
  std::string pairs_path;
  std::string format = "human";
};

std::vector<std::pair<AtomSet, AtomSet>> parse_pair_file(const std::string& content,
                                                         const std::string& path) {
  // one pair of brace sets per line, e.g. "{d1,d2} {d3}"
  std::vector<std::pair<AtomSet, AtomSet>> pairs;
  std::istringstream lines(content);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto comment = line.find('%');
    if (comment != std::string::npos) line = line.substr(0, comment);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    auto bad = [&]() {
      std::cerr << path << ":" << line_no
                << ": expected two brace sets, e.g. {d1,d2} {d3}\n";
      throw ExitWith{kExitParseError};
    };
    std::vector<AtomSet> sets;
    std::size_t pos = 0;
    while (sets.size() < 2) {
      const auto open = line.find('{', pos);
      if (open == std::string::npos) bad();
      const auto close = line.find('}', open);
      if (close == std::string::npos) bad();
      std::vector<Atom> atoms;
      std::string name;
      for (std::size_t i = open + 1; i <= close; ++i) {
        const char c = line[i];
        if (c == ',' || c == '}') {
          const auto start = name.find_first_not_of(" \t");
          if (start != std::string::npos) {
            const auto stop = name.find_last_not_of(" \t");
            atoms.emplace_back(name.substr(start, stop - start + 1));
          }
          name.clear();
        } else {
          name += c;
        }
      }
      sets.emplace_back(std::move(atoms));
      pos = close + 1;
    }
    pairs.emplace_back(std::move(sets[0]), std::move(sets[1]));
  }
  return pairs;
}

std::vector<AtomSet> powerset(const AtomSet& set) {
  const auto& atoms = set.atoms();
  const std::size_t n = atoms.size();
  std::vector<AtomSet> subsets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Atom> picked;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) picked.push_back(atoms[i]);
    subsets.emplace_back(std::move(picked));
  }
  return subsets;
}

int run_pp(const PpOptions& opt) {
  auto parsed = text::parse_formula(read_file(opt.formula_path));
  if (!parsed.ok()) fail_diagnostics(parsed.diagnostics, opt.formula_path);
  const pp::PrefFormula& formula = *parsed.value;

  const PreorderAtom compiled = pp::compile(formula);
  const AtomSet desires = compiled.sc().base();

  std::vector<std::pair<AtomSet, AtomSet>> pairs;
  if (!opt.pairs_path.empty()) {
    pairs = parse_pair_file(read_file(opt.pairs_path), opt.pairs_path);
  } else {
    for (const AtomSet& a : powerset(desires))
      for (const AtomSet& b : powerset(desires)) pairs.emplace_back(a, b);
  }

  std::size_t strict_agree = 0, mutual_reading_agree = 0, neither_reading_agree = 0;
  json pair_rows = json::array();
  std::ostringstream human_rows;
  const std::vector<PreorderAtom> atom_set{compiled};
  for (const auto& [alpha, beta] : pairs) {
    const bool prec = pp::preferred(formula, alpha, beta);
    const bool prec_rev = pp::preferred(formula, beta, alpha);
    const bool indist = pp::indistinguishable(formula, alpha, beta);
    const CompareVerdict verdict =
        compare_preordered_set(atom_set, alpha.intersect(desires), beta.intersect(desires));

    const bool strict_ok = (verdict == CompareVerdict::FirstPreferred) == prec &&
                           (verdict == CompareVerdict::SecondPreferred) == prec_rev;
    const bool mutual_ok = (verdict == CompareVerdict::Equivalent) == indist;
    const bool neither_ok = (verdict == CompareVerdict::Equivalent ||
                             verdict == CompareVerdict::Indistinguishable) == indist;
    strict_agree += strict_ok;
    mutual_reading_agree += mutual_ok;
    neither_reading_agree += neither_ok;

    if (opt.format == "structured") {
      pair_rows.push_back(json{{"alpha", model_json(alpha)},
                               {"beta", model_json(beta)},
                               {"prec", prec},
                               {"prec_rev", prec_rev},
                               {"indist", indist},
                               {"verdict", to_string(verdict)},
                               {"agree", strict_ok}});
    } else {
      human_rows << "  " << model_text(alpha) << " vs " << model_text(beta)
                 << ": prec=" << (prec ? "yes" : "no")
                 << " prec_rev=" << (prec_rev ? "yes" : "no")
                 << " indist=" << (indist ? "yes" : "no") << " verdict="
                 << to_string(verdict) << " agree=" << (strict_ok ? "yes" : "no")
                 << "\n";
    }
  }

  const PreorderCheck axioms = check_preorder(compiled.order(), powerset(desires));

  if (opt.format == "structured") {
    json out{{"formula", text::serialize(formula)},
             {"desires", model_json(desires)},
             {"pairs", pair_rows},
             {"strict_agreement", json{{"agree", strict_agree}, {"total", pairs.size()}}},
             {"mutual_leq_reading",
              json{{"agree", mutual_reading_agree}, {"total", pairs.size()}}},
             {"neither_strict_reading",
              json{{"agree", neither_reading_agree}, {"total", pairs.size()}}},
             {"preorder", json{{"reflexive", axioms.reflexive},
                               {"transitive", axioms.transitive}}}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "formula: " << text::serialize(formula) << "\n";
    std::cout << "desires: " << model_text(desires) << "\n";
    std::cout << "pairs: " << pairs.size() << "\n";
    std::cout << human_rows.str();
    std::cout << "strict agreement: " << strict_agree << "/" << pairs.size() << "\n";
    std::cout << "equivalence readings: mutual-leq " << mutual_reading_agree << "/"
              << pairs.size() << ", neither-strict " << neither_reading_agree << "/"
              << pairs.size() << "\n";
    std::cout << "preorder: reflexive=" << (axioms.reflexive ? "yes" : "no")
              << " transitive=" << (axioms.transitive ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

struct GenVcOptions {
  std::string edges_path;
  std::size_t cover_bound = 1;
  std::string pivot;
};

int run_gen_vertex_cover(const GenVcOptions& opt) {
  const std::string content = read_file(opt.edges_path);
  std::vector<std::pair<Atom, Atom>> edges;
  std::vector<Atom> vertices;

  std::istringstream lines(content);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto comment = line.find('%');
    if (comment != std::string::npos) line = line.substr(0, comment);
    std::istringstream fields(line);
    std::string u, v;
    if (!(fields >> u)) continue;
    std::string extra;
    if (!(fields >> v) || (fields >> extra)) {
      std::cerr << opt.edges_path << ":" << line_no << ": expected 'u v'\n";
      throw ExitWith{kExitParseError};
    }
    Atom au(u), av(v);
    if (au == av) {
      std::cerr << opt.edges_path << ":" << line_no << ": self-loop\n";
      throw ExitWith{kExitSemanticError};
    }
    edges.emplace_back(au, av);
    vertices.push_back(au);
    vertices.push_back(av);
  }

  const AtomSet vertex_set{std::vector<Atom>(vertices)};
  const Atom pivot(opt.pivot);
  if (!vertex_set.contains(pivot)) {
    throw Error(ErrorCode::PivotNotInGraph,
                "pivot '" + opt.pivot + "' does not occur in the edge list");
  }

  std::vector<Rule> rules;
  for (const auto& [u, v] : edges) {
    Family family = Family::extensional({AtomSet{u}, AtomSet{v}});
    rules.push_back(Rule{SCAtom(AtomSet{u, v}, std::move(family)), {}});
  }
  rules.push_back(Rule{
      MeasureAtom(SCAtom(vertex_set, Family::card(0, opt.cover_bound - 1)),
                  Measure::indicator(pivot, 0, 1)),
      {}});

  std::cout << text::serialize(Program(std::move(rules)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solver for preference set constraint programs"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "enumerate and rank stable models");
  solve->add_option("input", solve_opt.path, "program file")->required();
  solve->add_option("--mode", solve_opt.mode, "order mode: ic|it|w-ic|w-it|w-is");
  solve->add_option("--cap", solve_opt.cap, "support-size cap")->check(CLI::PositiveNumber);
  solve->add_flag("--enumerate-all", solve_opt.enumerate_all, "print the verdict matrix");
  solve->add_flag("--force", solve_opt.force, "ignore the support-size cap");
  solve->add_option("--format", solve_opt.format, "human|structured")
      ->check(CLI::IsMember({"human", "structured"}));

  AsoOptions aso_opt;
  auto* aso_cmd =
      app.add_subcommand("aso", "optimize and cross-check a program with ranked options");
  aso_cmd->add_option("input", aso_opt.path, "program file")->required();
  aso_cmd->add_option("--cap", aso_opt.cap, "atom-count cap")->check(CLI::PositiveNumber);
  aso_cmd->add_option("--format", aso_opt.format, "human|structured")
      ->check(CLI::IsMember({"human", "structured"}));

  PpOptions pp_opt;
  auto* pp_cmd = app.add_subcommand("pp", "evaluate a preference formula pairwise");
  pp_cmd->add_option("formula", pp_opt.formula_path, "formula file")->required();
  pp_cmd->add_option("--pairs", pp_opt.pairs_path, "trajectory pairs file");
  pp_cmd->add_option("--format", pp_opt.format, "human|structured")
      ->check(CLI::IsMember({"human", "structured"}));

  GenVcOptions vc_opt;
  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  auto* vc = gen->add_subcommand("vertex-cover",
                                 "covers of size < K, preferring a pivot vertex");
  vc->add_option("edges", vc_opt.edges_path, "edge list file, one 'u v' per line")
      ->required();
  vc->add_option("k", vc_opt.cover_bound, "cover size bound (exclusive)")
      ->required()
      ->check(CLI::PositiveNumber);
  vc->add_option("pivot", vc_opt.pivot, "preferred vertex")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(solve_opt);
    if (*aso_cmd) return run_aso(aso_opt);
    if (*pp_cmd) return run_pp(pp_opt);
    if (*vc) return run_gen_vertex_cover(vc_opt);
  } catch (const ExitWith& exit_with) {
    return exit_with.code;
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return exit_code_for(error);
  }
  return kExitOk;
}
