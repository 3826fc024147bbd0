#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "quatype/document.hpp"
#include "quatype/error.hpp"
#include "quatype/expression.hpp"
#include "quatype/reference_tables.hpp"
#include "report_format.hpp"

namespace quatype::cli {

namespace {

const std::map<std::string, std::vector<std::string>>& suites() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"axioms", {"axioms"}},
      {"grades", {"grades"}},
      {"tables", {"tables"}},
      {"theorems", {"subalgebras", "lie_algebra_types", "lie_subalgebras", "unitary_subgroups"}},
      {"rank", {"rank"}},
      {"all", check_names()},
  };
  return table;
}

std::vector<std::string> suite_choices() {
  std::vector<std::string> out;
  for (const auto& [name, checks] : suites()) out.push_back(name);
  for (const auto& name : check_names()) {
    if (!suites().count(name)) out.push_back(name);
  }
  return out;
}

std::vector<std::string> checks_for(const std::string& suite) {
  const auto it = suites().find(suite);
  return it != suites().end() ? it->second : std::vector<std::string>{suite};
}

struct VerifyArgs {
  int p = 2, q = 2;
  std::string suite = "all";
  int samples = 200;
  std::uint64_t seed = 0;
  double tol = 1e-12;
  std::string format = "text";
  std::string strategy = "auto";
  int exp_max_terms = 200;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  SuiteRun run;
  run.cfg = CheckConfig::defaults_for(Signature(a.p, a.q));
  run.cfg.samples = a.samples;
  run.cfg.seed = a.seed;
  run.cfg.tol = a.tol;
  run.cfg.exp_max_terms = a.exp_max_terms;
  if (a.strategy == "exhaustive") run.cfg.strategy = Strategy::Exhaustive;
  if (a.strategy == "random") run.cfg.strategy = Strategy::Random;
  run.suite = a.suite;
  run.reports = run_suite(checks_for(a.suite), run.cfg);
  out << (a.format == "json" ? format_json(run) : format_text(run));
  for (const auto& r : run.reports) {
    if (r.status == Status::Fail) return kVerificationFailed;
  }
  return kSuccess;
}

struct TableArgs {
  std::string op = "product";
  std::string format = "markdown";
};

OpKind table_op(const std::string& name) {
  if (name == "comm") return OpKind::Commutator;
  if (name == "anticomm") return OpKind::Anticommutator;
  return OpKind::GeometricProduct;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  const TypeTable table = emit_table(table_op(a.op));
  if (a.format == "json") {
    nlohmann::ordered_json doc;
    doc["op"] = a.op;
    doc["order"] = nlohmann::ordered_json::array();
    for (QType t : kTableOrder) doc["order"].push_back(t.to_string());
    doc["cells"] = nlohmann::ordered_json::array();
    for (const auto& row : table) {
      auto cells = nlohmann::ordered_json::array();
      for (QType cell : row) cells.push_back(cell.to_string());
      doc["cells"].push_back(std::move(cells));
    }
    out << doc.dump() << "\n";
  } else if (a.format == "csv") {
    out << a.op;
    for (QType t : kTableOrder) out << "," << t.to_string();
    out << "\n";
    for (std::size_t i = 0; i < 15; ++i) {
      out << kTableOrder[i].to_string();
      for (QType cell : table[i]) out << "," << cell.to_string();
      out << "\n";
    }
  } else {
    out << "| " << a.op << " |";
    for (QType t : kTableOrder) out << " " << t.to_string() << " |";
    out << "\n|---|";
    for (std::size_t j = 0; j < 15; ++j) out << "---|";
    out << "\n";
    for (std::size_t i = 0; i < 15; ++i) {
      out << "| " << kTableOrder[i].to_string() << " |";
      for (QType cell : table[i]) out << " " << cell.to_string() << " |";
      out << "\n";
    }
  }
  return kSuccess;
}

struct TypeArgs {
  std::optional<int> p, q;
  std::optional<std::string> expr;
  std::optional<std::string> input;
  double tol = 1e-12;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_type(const TypeArgs& a, std::ostream& out) {
  std::optional<Multivector> parsed;
  if (bool(a.expr) == bool(a.input)) throw Error("give exactly one of --expr and --input");
  if (a.input) {
    parsed = parse_document(read_file(*a.input));
    const Signature& sig = parsed->signature();
    if ((a.p && *a.p != sig.p()) || (a.q && *a.q != sig.q())) {
      throw Error("--p/--q disagree with the document signature " + sig.to_string());
    }
  } else {
    if (!a.p || !a.q) throw Error("--expr needs --p and --q");
    parsed = parse_expression(*a.expr, Signature(*a.p, *a.q));
  }
  const Multivector& u = *parsed;
  const double threshold = a.tol * (1.0 + inf_norm(u));
  const QType type = detect_qtype(u, a.tol);
  const SubspacePattern pattern = detect_pattern(u, a.tol);

  out << "signature: " << u.signature().to_string() << "\n";
  out << "value: " << format_expression(u) << "\n";
  out << "type: " << (type.empty() ? "{}" : type.to_string()) << "\n";
  out << "pattern: " << pattern.to_string() << "\n";
  bool even = false, odd = false;
  std::string ranks;
  for (int k = 0; k <= u.signature().n(); ++k) {
    const Multivector part = grade_project(u, k);
    if (inf_norm(part) <= threshold) continue;
    (k % 2 ? odd : even) = true;
    ranks += "  rank " + std::to_string(k) + ": " + format_expression(part) + "\n";
  }
  out << "ranks:\n" << ranks;
  out << "parity: " << (even ? (odd ? "mixed" : "even") : (odd ? "odd" : "zero")) << "\n";
  return kSuccess;
}

struct EvalArgs {
  int p = 0, q = 0;
  std::string op;
  std::string lhs;
  std::optional<std::string> rhs;
  int exp_max_terms = 200;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const Signature sig(a.p, a.q);
  const bool unary = a.op == "conj" || a.op == "exp";
  if (unary && a.rhs) throw Error("--op " + a.op + " takes only --lhs");
  if (!unary && !a.rhs) throw Error("--op " + a.op + " needs --rhs");

  Multivector u = parse_expression(a.lhs, sig);
  Multivector result(sig);
  if (unary) {
    result = a.op == "conj" ? clifford_conjugate(u) : mv_exp(u, 1e-14, a.exp_max_terms);
  } else {
    Multivector v = parse_expression(*a.rhs, sig);
    // A real operand meeting a complex one is read as complex.
    if (u.field() != v.field()) {
      u = u.with_field(Field::Complex);
      v = v.with_field(Field::Complex);
    }
    if (a.op == "gp") result = geometric_product(u, v);
    if (a.op == "comm") result = commutator(u, v);
    if (a.op == "anticomm") result = anticommutator(u, v);
  }
  out << format_expression(result) << "\n" << to_document(result) << "\n";
  return kSuccess;
}

struct DiscrepancyArgs {
  std::string table = "all";
  std::string format = "text";
};

int cmd_discrepancies(const DiscrepancyArgs& a, std::ostream& out) {
  std::vector<TableDiscrepancy> found;
  if (a.table == "all") {
    found = all_table_discrepancies();
  } else {
    for (ReferenceTable t : {ReferenceTable::GenericQuaternion, ReferenceTable::Anticommutator,
                             ReferenceTable::Product}) {
      if (reference_table_name(t) == a.table) found = table_discrepancies(t);
    }
  }
  if (a.format == "json") {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& d : found) {
      doc.push_back({{"table", reference_table_name(d.table)},
                     {"row", kTableOrder[d.row].to_string()},
                     {"column", kTableOrder[d.column].to_string()},
                     {"printed", d.printed},
                     {"printed_type", d.printed_type.to_string()},
                     {"derived_type", d.derived_type.to_string()}});
    }
    out << doc.dump(2) << "\n";
    return kSuccess;
  }
  for (const auto& d : found) {
    out << reference_table_name(d.table) << "  (" << type_label(kTableOrder[d.row], d.table)
        << ", " << type_label(kTableOrder[d.column], d.table) << ")  printed " << d.printed
        << "  rules give " << type_label(d.derived_type, d.table) << "\n";
  }
  out << found.size() << " discrepant cells\n";
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clifford algebra engine with quaternion-type analysis", "quatype"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("--p", va.p, "Positive generators");
  verify->add_option("--q", va.q, "Negative generators");
  verify->add_option("--suite", va.suite, "Checks to run")
      ->check(CLI::IsMember(suite_choices()));
  verify->add_option("--samples", va.samples, "Samples per random check")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", va.seed, "Base seed of the splitmix64 generators");
  verify->add_option("--tol", va.tol, "Tolerance for floating-point comparisons")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--format", va.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--strategy", va.strategy,
                     "auto: exhaustive basis pairs for n <= 6, random samples above")
      ->check(CLI::IsMember({"auto", "exhaustive", "random"}));
  verify->add_option("--exp-max-terms", va.exp_max_terms, "Series terms allowed in exp")
      ->check(CLI::PositiveNumber);

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Print a 15x15 type-composition table");
  table->add_option("--op", ta.op, "Operation")
      ->check(CLI::IsMember({"product", "comm", "anticomm"}));
  table->add_option("--format", ta.format, "Output format")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));

  TypeArgs ya;
  auto* type = app.add_subcommand("type", "Classify a multivector");
  type->add_option("--p", ya.p, "Positive generators");
  type->add_option("--q", ya.q, "Negative generators");
  auto* expr = type->add_option("--expr", ya.expr, "Expression, e.g. \"1 + e1234\"");
  auto* input = type->add_option("--input", ya.input, "Multivector JSON document");
  expr->excludes(input);
  type->add_option("--tol", ya.tol, "Relative threshold for nonzero parts")
      ->check(CLI::NonNegativeNumber);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate an operation");
  eval->add_option("--p", ea.p, "Positive generators")->required();
  eval->add_option("--q", ea.q, "Negative generators")->required();
  eval->add_option("--op", ea.op, "Operation")
      ->required()
      ->check(CLI::IsMember({"gp", "comm", "anticomm", "conj", "exp"}));
  eval->add_option("--lhs", ea.lhs, "Left operand expression")->required();
  eval->add_option("--rhs", ea.rhs, "Right operand expression (binary operations)");
  eval->add_option("--exp-max-terms", ea.exp_max_terms, "Series terms allowed in exp")
      ->check(CLI::PositiveNumber);

  DiscrepancyArgs da;
  auto* disc = app.add_subcommand("discrepancies",
                                  "Cells of the printed tables that contradict the rules");
  disc->add_option("--table", da.table, "Printed table")
      ->check(CLI::IsMember({"all", "generic", "anticommutator", "product"}));
  disc->add_option("--format", da.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*verify) return cmd_verify(va, out);
    if (*table) return cmd_table(ta, out);
    if (*type) return cmd_type(ya, out);
    if (*eval) return cmd_eval(ea, out);
    if (*disc) return cmd_discrepancies(da, out);
  } catch (const ConvergenceFailure& e) {
    err << "error: " << e.what() << "\n";
    return kNonConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace quatype::cli
