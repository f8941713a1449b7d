#include "casimir/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/closedform.hpp"
#include "casimir/error.hpp"
#include "casimir/normalize.hpp"
#include "casimir/uea.hpp"
#include "casimir/verify.hpp"

namespace casimir::cli {

namespace {

using json = nlohmann::json;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::SpecError:
    case ErrorKind::IndexError:
    case ErrorKind::DomainError:
    case ErrorKind::ShapeError:
      return 1;
    default:
      return 2;
  }
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) fail(ErrorKind::ParseError, "cannot read " + path);
  buf << file.rdbuf();
  return buf.str();
}

std::string kind_name(InvariantExpression::Kind k) {
  switch (k) {
    case InvariantExpression::Kind::Rational: return "rational";
    case InvariantExpression::Kind::PowerProduct: return "power-product";
    case InvariantExpression::Kind::Affine: return "affine";
  }
  return "rational";
}

std::vector<std::vector<Rational>> parse_gamma(const std::string& csv) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream rs(csv);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Rational> values;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
      const auto a = cell.find_first_not_of(' ');
      const auto b = cell.find_last_not_of(' ');
      if (a == std::string::npos) fail(ErrorKind::ParseError, "empty gamma entry");
      values.push_back(parse_rational(cell.substr(a, b - a + 1)));
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

std::vector<InvariantExpression> read_expressions(const std::string& text) {
  std::vector<InvariantExpression> out;
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      fail(ErrorKind::ParseError, e.what());
    }
    if (!j.contains("invariants") || !j["invariants"].is_array()) {
      fail(ErrorKind::ParseError, "expected an 'invariants' array");
    }
    for (const auto& item : j["invariants"]) {
      if (!item.contains("expression") || !item["expression"].is_string()) {
        fail(ErrorKind::ParseError, "invariant without an 'expression' string");
      }
      out.push_back(parse_expression(item["expression"].get<std::string>()));
    }
    return out;
  }
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    out.push_back(parse_expression(line.substr(a)));
  }
  return out;
}

struct Options {
  std::string algebra;
  std::string second;
  std::string method = "normalize";
  std::string family;
  std::string gamma;
  std::string b;
  std::string output;
  int n = 0;
  std::uint64_t seed = 0;
  bool explain = false;
  bool as_json = false;
  bool expand = false;
};

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  const LieAlgebra L = parse_algebra_json(read_source(o.algebra, in));
  const auto violations = validate(L);
  if (violations.empty()) {
    out << "ok: dim " << L.dim() << ", Jacobi identity holds\n";
    return 0;
  }
  for (const auto& v : violations) {
    out << "violation: " << L.labels()[v.i] << ", " << L.labels()[v.j] << ", " << L.labels()[v.k] << '\n';
  }
  return 1;
}

int cmd_count(const Options& o, std::istream& in, std::ostream& out) {
  const LieAlgebra L = parse_algebra_json(read_source(o.algebra, in));
  out << generic_invariant_count(L, o.seed) << '\n';
  return 0;
}

int cmd_invariants(const Options& o, std::istream& in, std::ostream& out) {
  const LieAlgebra L = parse_algebra_json(read_source(o.algebra, in));
  std::vector<InvariantExpression> basis;
  std::vector<std::string> notes;
  json extra = json::object();
  if (o.method == "closed-form") {
    basis = closed_form_basis(L);
    const auto& tag = *L.family();
    if (tag.family != "t" && tag.family != "st") {
      const ReducedGamma r = reduce_gamma(tag.spec);
      std::string ks;
      for (int k : r.k_list) ks += (ks.empty() ? "" : ",") + std::to_string(k);
      notes.push_back("s' = " + std::to_string(r.s_prime) + ", pivots k = {" + ks + "}");
      for (std::size_t q = 0; q < r.beta.size(); ++q) {
        std::string row;
        for (const auto& b : r.beta[q]) row += (row.empty() ? "" : ", ") + to_string(b);
        notes.push_back("beta[" + std::to_string(q + 1) + "] = (" + row + ")");
      }
      extra["s_prime"] = r.s_prime;
    }
  } else {
    const NormalizationResult res = normalize_algebra(L);
    for (const auto& f : res.basis) basis.push_back(InvariantExpression::rational(f));
    notes = res.trace;
    notes.push_back("rho = " + std::to_string(res.rho) + ", N = " + std::to_string(res.n_g));
    extra["rho"] = res.rho;
    extra["labels"] = res.basis_labels;
  }
  if (o.as_json) {
    json j = extra;
    j["method"] = o.method;
    j["dim"] = L.dim();
    j["count"] = basis.size();
    json items = json::array();
    for (const auto& e : basis) items.push_back({{"expression", e.to_string()}, {"kind", kind_name(e.kind())}});
    j["invariants"] = items;
    if (o.explain) j["explain"] = notes;
    out << j.dump(2) << '\n';
    return 0;
  }
  if (o.explain) {
    for (const auto& line : notes) out << "# " << line << '\n';
  }
  for (const auto& e : basis) out << e.to_string() << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  if (o.algebra == "-" && o.second == "-") fail(ErrorKind::ParseError, "only one input may be read from stdin");
  const LieAlgebra L = parse_algebra_json(read_source(o.algebra, in));
  const auto exprs = read_expressions(read_source(o.second, in));
  const auto verdicts = verify_expressions(L, exprs);
  bool all = true;
  for (const auto& v : verdicts) all = all && v.invariant;
  if (o.as_json) {
    out << verdicts_to_json(L, verdicts) << '\n';
  } else {
    for (const auto& v : verdicts) out << (v.invariant ? "invariant: " : "not invariant: ") << v.expression << '\n';
  }
  return all ? 0 : 1;
}

int cmd_symmetrize(const Options& o, std::istream& in, std::ostream& out) {
  const LieAlgebra L = parse_algebra_json(read_source(o.algebra, in));
  const SymmetrizedInvariant s = symmetrize_invariant(parse_expression(o.second), L);
  out << s.to_string(L) << '\n';
  if (o.explain && !s.denominator) out << "# casimir: " << (is_casimir(s.numerator, L) ? "yes" : "no") << '\n';
  return 0;
}

int cmd_family(const Options& o, std::ostream& out) {
  LieAlgebra L;
  if (o.family == "t0") {
    L = build_t0(o.n);
  } else if (o.family == "t") {
    L = build_t(o.n);
  } else if (o.family == "st") {
    L = build_st(o.n);
  } else if (o.family == "g48") {
    if (o.b.empty()) fail(ErrorKind::SpecError, "g48 needs --b");
    L = build_g48(parse_rational(o.b));
  } else if (o.family == "t_gamma") {
    TriangularSpec spec{o.n, 0, o.gamma.empty() ? std::vector<std::vector<Rational>>{} : parse_gamma(o.gamma)};
    spec.s = static_cast<int>(spec.gamma.size());
    L = build_t_gamma(spec);
  } else {
    fail(ErrorKind::SpecError, "unknown family '" + o.family + "'");
  }
  const std::string text = algebra_to_json(L, o.expand) + "\n";
  if (o.output.empty() || o.output == "-") {
    out << text;
  } else {
    std::ofstream file(o.output);
    if (!file) fail(ErrorKind::ParseError, "cannot write " + o.output);
    file << text;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Casimir operators of triangular solvable Lie algebras", "casimir"};
  app.require_subcommand(1);
  Options o;

  auto* validate_cmd = app.add_subcommand("validate", "Check the Jacobi identity");
  validate_cmd->add_option("algebra", o.algebra, "Algebra JSON file or -")->required();

  auto* count_cmd = app.add_subcommand("count", "Number of functionally independent invariants");
  count_cmd->add_option("algebra", o.algebra, "Algebra JSON file or -")->required();
  count_cmd->add_option("--seed", o.seed, "Random seed");

  auto* inv_cmd = app.add_subcommand("invariants", "Basis of invariants");
  inv_cmd->add_option("algebra", o.algebra, "Algebra JSON file or -")->required();
  inv_cmd->add_option("--method", o.method, "closed-form or normalize")
      ->check(CLI::IsMember({"closed-form", "normalize"}));
  inv_cmd->add_flag("--explain", o.explain, "Show the derivation steps");
  inv_cmd->add_flag("--json", o.as_json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "Check expressions for invariance");
  verify_cmd->add_option("algebra", o.algebra, "Algebra JSON file or -")->required();
  verify_cmd->add_option("expressions", o.second, "One expression per line, or invariants JSON")->required();
  verify_cmd->add_flag("--json", o.as_json, "JSON report");

  auto* sym_cmd = app.add_subcommand("symmetrize", "Symmetrized form in the enveloping algebra");
  sym_cmd->add_option("algebra", o.algebra, "Algebra JSON file or -")->required();
  sym_cmd->add_option("expression", o.second, "Invariant expression")->required();
  sym_cmd->add_flag("--explain", o.explain, "Also test the Casimir property");

  auto* family_cmd = app.add_subcommand("family", "Emit a family algebra as JSON");
  family_cmd->add_option("name", o.family, "t0, t, st, t_gamma or g48")
      ->required()
      ->check(CLI::IsMember({"t0", "t", "st", "t_gamma", "g48"}));
  family_cmd->add_option("--n", o.n, "Matrix size");
  family_cmd->add_option("--gamma", o.gamma, "Rows of gamma: entries split by ',', rows by ';'");
  family_cmd->add_option("--b", o.b, "Parameter of g48");
  family_cmd->add_option("-o,--output", o.output, "Output file");
  family_cmd->add_flag("--expand", o.expand, "Write the full bracket table");

  std::vector<const char*> argv{"casimir"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, in, out);
    if (count_cmd->parsed()) return cmd_count(o, in, out);
    if (inv_cmd->parsed()) return cmd_invariants(o, in, out);
    if (verify_cmd->parsed()) return cmd_verify(o, in, out);
    if (sym_cmd->parsed()) return cmd_symmetrize(o, in, out);
    if (family_cmd->parsed()) return cmd_family(o, out);
  } catch (const Error& e) {
    err << json{{"error", std::string(e.name())}, {"message", e.what()}}.dump() << '\n';
    return exit_code(e.kind());
  }
  return 1;
}

}  // namespace casimir::cli
