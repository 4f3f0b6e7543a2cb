// plogic: parse parenthesis-free prefix formulas and evaluate them under
// classical, three-valued (Lukasiewicz / Kleene), and matrix-vector
// semantics.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plogic/classical.hpp"
#include "plogic/polish.hpp"
#include "plogic/trivalent.hpp"
#include "plogic/vector_logic.hpp"

using json = nlohmann::json;
using namespace plogic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

// Thrown after a diagnostic has already been printed.
struct ExitRequest {
  int code;
};

enum class Logic { Classical, Lukasiewicz, Kleene, Matrix, Projection };

Logic logic_from(const std::string& name) {
  if (name == "classical") return Logic::Classical;
  if (name == "lukasiewicz") return Logic::Lukasiewicz;
  if (name == "kleene") return Logic::Kleene;
  if (name == "matrix") return Logic::Matrix;
  if (name == "projection") return Logic::Projection;
  throw std::invalid_argument("unknown logic '" + name + "'");
}

struct Options {
  std::string format = "text";
  bool quiet = false;
};

// Weights and decoded values are emitted with 12 significant digits in
// every format, so text, CSV and JSON carry identical rows.
std::string format_weight(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string format_full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json weight_json(double x) { return json::parse(format_weight(x)); }

std::string value3_text(TruthValue3 v) {
  switch (v) {
    case TruthValue3::False: return "0";
    case TruthValue3::Half: return "½";
    case TruthValue3::True: return "1";
  }
  return "?";
}

std::string value3_machine(TruthValue3 v) { return format_weight(as_weight(v)); }

void caret_diagnostic(const std::string& expr, const ParseError& e) {
  std::cerr << "error: " << e.what() << "\n";
  std::cerr << "  " << expr << "\n";
  std::cerr << "  " << std::string(e.position(), ' ') << "^\n";
}

Formula parse_cli(const std::string& expr) {
  try {
    return parse(expr);
  } catch (const ParseError& e) {
    caret_diagnostic(expr, e);
    throw ExitRequest{kExitUsage};
  }
}

// "p=0.5,q=1" -> ordered (name, weight) pairs
std::vector<std::pair<char, double>> parse_assignment_list(const std::string& spec) {
  std::vector<std::pair<char, double>> out;
  if (spec.empty()) return out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string item =
        spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t eq = item.find('=');
    if (eq != 1 || item.empty() || item[0] < 'a' || item[0] > 'z')
      throw std::invalid_argument("bad assignment entry '" + item +
                                  "' (expected <variable>=<value>)");
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(item.substr(2), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad value in assignment entry '" + item + "'");
    }
    if (used != item.size() - 2)
      throw std::invalid_argument("bad value in assignment entry '" + item + "'");
    out.emplace_back(item[0], value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Assignment2 to_assignment2(const std::vector<std::pair<char, double>>& pairs) {
  Assignment2 a;
  for (auto [name, value] : pairs) {
    if (value != 0.0 && value != 1.0)
      throw std::invalid_argument(std::string("classical value for '") + name +
                                  "' must be 0 or 1");
    a[name] = value == 1.0;
  }
  return a;
}

Assignment3 to_assignment3(const std::vector<std::pair<char, double>>& pairs) {
  Assignment3 a;
  for (auto [name, value] : pairs) {
    if (value != 0.0 && value != 0.5 && value != 1.0)
      throw std::invalid_argument(std::string("three-valued value for '") + name +
                                  "' must be 0, 0.5, or 1");
    a[name] = from_halves(static_cast<int>(value * 2));
  }
  return a;
}

AssignmentVec to_assignment_vec(const std::vector<std::pair<char, double>>& pairs) {
  AssignmentVec a;
  for (auto [name, value] : pairs) {
    if (!(value >= 0.0 && value <= 1.0))
      throw std::invalid_argument(std::string("weight for '") + name + "' must lie in [0, 1]");
    a[name] = value;
  }
  return a;
}

// "canonical" or "random:<seed>"; a bare "random" is rejected so every run
// is reproducible from its command line.
Basis basis_from(const std::string& spec, int dim) {
  if (spec == "canonical") return Basis::canonical(dim);
  if (spec.rfind("random:", 0) == 0) {
    const std::string seed_text = spec.substr(7);
    try {
      std::size_t used = 0;
      const unsigned long long seed = std::stoull(seed_text, &used);
      if (used == seed_text.size() && !seed_text.empty()) return Basis::random(dim, seed);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("bad seed in basis spec '" + spec + "'");
  }
  if (spec == "random")
    throw std::invalid_argument("random basis requires an explicit seed: random:<seed>");
  throw std::invalid_argument("unknown basis '" + spec + "' (canonical | random:<seed>)");
}

void render_tree(const Formula& f, const std::string& prefix, bool root, bool last,
                 std::ostream& os) {
  os << prefix;
  if (!root) os << (last ? "└─ " : "├─ ");
  os << f.symbol() << "\n";
  const std::string child_prefix =
      root ? prefix : prefix + (last ? "   " : "│  ");
  const auto& kids = f.children();
  for (std::size_t i = 0; i < kids.size(); ++i)
    render_tree(kids[i], child_prefix, false, i + 1 == kids.size(), os);
}

json tree_json(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Atom:
      return {{"kind", "atom"}, {"name", std::string(1, f.symbol())}};
    case NodeKind::Constant:
      return {{"kind", "const"}, {"value", f.constant_value() ? 1 : 0}};
    case NodeKind::Op:
      break;
  }
  json children = json::array();
  for (const Formula& child : f.children()) children.push_back(tree_json(child));
  return {{"kind", "op"}, {"symbol", std::string(1, f.symbol())}, {"children", children}};
}

void emit_json(const std::string& command, const std::string& formula,
               const std::string& semantics, json results) {
  const json out = {{"command", command},
                    {"formula", formula},
                    {"semantics", semantics},
                    {"results", std::move(results)}};
  std::cout << out.dump(2) << "\n";
}

// ---------------------------------------------------------------- parse --

int cmd_parse(const Options& opt, const std::string& expr) {
  Formula f = parse_cli(expr);
  const auto vars = free_variables(f);

  if (opt.format == "json") {
    json variables = json::array();
    for (char v : vars) variables.push_back(std::string(1, v));
    emit_json("parse", expr, "syntax",
              {{"valid", true},
               {"polish", to_polish(f)},
               {"infix", to_infix(f)},
               {"variables", variables},
               {"tree", tree_json(f)}});
    return kExitOk;
  }
  if (opt.format == "csv") {
    std::cout << "key,value\n";
    std::cout << "valid,true\n";
    std::cout << "polish," << to_polish(f) << "\n";
    std::cout << "infix," << to_infix(f) << "\n";
    std::string names;
    for (char v : vars) names += v;
    std::cout << "variables," << names << "\n";
    return kExitOk;
  }

  if (opt.quiet) {
    std::cout << "well-formed\n";
    return kExitOk;
  }
  std::cout << "formula: " << to_polish(f) << "\n";
  std::cout << "status: well-formed\n";
  std::cout << "infix: " << to_infix(f) << "\n";
  std::cout << "variables:";
  for (char v : vars) std::cout << ' ' << v;
  std::cout << "\n";
  std::cout << "tree:\n";
  render_tree(f, "  ", true, true, std::cout);
  return kExitOk;
}

// ---------------------------------------------------------------- table --

struct TableRow {
  std::vector<std::string> cells_text;
  std::vector<std::string> cells_machine;
  std::string value_text;
  std::string value_machine;
};

int render_table(const Options& opt, const std::string& expr, const std::string& semantics,
                 const std::vector<char>& variables, const std::vector<TableRow>& rows) {
  if (opt.format == "json") {
    json jrows = json::array();
    for (const TableRow& r : rows) {
      json assignment = json::array();
      for (const std::string& c : r.cells_machine) assignment.push_back(json::parse(c));
      jrows.push_back({{"assignment", assignment}, {"value", json::parse(r.value_machine)}});
    }
    json jvars = json::array();
    for (char v : variables) jvars.push_back(std::string(1, v));
    emit_json("table", expr, semantics, {{"variables", jvars}, {"rows", jrows}});
    return kExitOk;
  }
  if (opt.format == "csv") {
    for (std::size_t i = 0; i < variables.size(); ++i) std::cout << variables[i] << ",";
    std::cout << "value\n";
    for (const TableRow& r : rows) {
      for (const std::string& c : r.cells_machine) std::cout << c << ",";
      std::cout << r.value_machine << "\n";
    }
    return kExitOk;
  }

  if (!opt.quiet) {
    std::cout << "formula: " << expr << "\n";
    std::cout << "semantics: " << semantics << "\n";
    for (char v : variables) std::cout << v << ' ';
    std::cout << "| value\n";
  }
  for (const TableRow& r : rows) {
    for (const std::string& c : r.cells_text) std::cout << c << ' ';
    std::cout << "| " << r.value_text << "\n";
  }
  return kExitOk;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> grid;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string item =
        spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad grid entry '" + item + "'");
    }
    if (used != item.size() || !(value >= 0.0 && value <= 1.0))
      throw std::invalid_argument("grid entries must be numbers in [0, 1]");
    grid.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (grid.empty()) throw std::invalid_argument("empty grid");
  return grid;
}

int cmd_table(const Options& opt, const std::string& expr, const std::string& logic_name,
              const std::string& grid_spec, int dim, const std::string& basis_spec) {
  const Formula f = parse_cli(expr);
  const Logic logic = logic_from(logic_name);
  std::vector<TableRow> rows;
  std::vector<char> variables;

  switch (logic) {
    case Logic::Classical: {
      const TruthTable table = truth_table(f);
      variables = table.variables;
      for (const auto& [assign, value] : table.rows) {
        TableRow r;
        for (bool b : assign) {
          r.cells_text.push_back(b ? "1" : "0");
          r.cells_machine.push_back(b ? "1" : "0");
        }
        r.value_text = value ? "1" : "0";
        r.value_machine = r.value_text;
        rows.push_back(std::move(r));
      }
      break;
    }
    case Logic::Lukasiewicz:
    case Logic::Kleene: {
      const TrivalentTable table = trivalent_table(
          f, logic == Logic::Lukasiewicz ? Trivalent::Lukasiewicz : Trivalent::Kleene);
      variables = table.variables;
      for (const auto& [assign, value] : table.rows) {
        TableRow r;
        for (TruthValue3 v : assign) {
          r.cells_text.push_back(value3_text(v));
          r.cells_machine.push_back(value3_machine(v));
        }
        r.value_text = value3_text(value);
        r.value_machine = value3_machine(value);
        rows.push_back(std::move(r));
      }
      break;
    }
    case Logic::Matrix:
    case Logic::Projection: {
      variables = free_variables(f);
      if (variables.size() > kMaxTableVariables3)
        throw TooManyVariables(variables.size(), kMaxTableVariables3);
      // default grid mirrors the trivalent row order 1, 1/2, 0
      const std::vector<double> grid =
          grid_spec.empty() ? std::vector<double>{1.0, 0.5, 0.0} : parse_grid(grid_spec);
      const std::optional<Basis> basis =
          logic == Logic::Matrix ? std::optional<Basis>(basis_from(basis_spec, dim))
                                 : std::nullopt;

      std::size_t total = 1;
      for (std::size_t i = 0; i < variables.size(); ++i) {
        total *= grid.size();
        if (total > 100'000) throw std::invalid_argument("grid too large");
      }
      std::vector<std::size_t> digits(variables.size(), 0);
      for (std::size_t row = 0; row < total; ++row) {
        AssignmentVec a;
        TableRow r;
        for (std::size_t j = 0; j < variables.size(); ++j) {
          const double w = grid[digits[j]];
          a[variables[j]] = w;
          r.cells_text.push_back(format_weight(w));
          r.cells_machine.push_back(format_weight(w));
        }
        const double value =
            basis ? decode(eval_matrix(f, a, *basis)) : eval_projection(f, a);
        r.value_text = format_weight(value);
        r.value_machine = r.value_text;
        rows.push_back(std::move(r));
        for (std::size_t j = variables.size(); j-- > 0;) {
          if (++digits[j] < grid.size()) break;
          digits[j] = 0;
        }
      }
      break;
    }
  }
  return render_table(opt, expr, logic_name, variables, rows);
}

// ---------------------------------------------------------------- check --

int cmd_check(const Options& opt, const std::string& expr, const std::string& mode,
              const std::string& other) {
  const Formula f = parse_cli(expr);

  std::optional<Assignment2> counterexample;
  std::string verdict_word;
  if (mode == "tautology") {
    counterexample = tautology_counterexample(f);
    verdict_word = counterexample ? "NOT A TAUTOLOGY" : "TAUTOLOGY";
  } else if (mode == "equiv") {
    if (other.empty()) {
      std::cerr << "error: --mode equiv needs a second formula\n";
      return kExitUsage;
    }
    const Formula g = parse_cli(other);
    counterexample = equivalence_counterexample(f, g);
    verdict_word = counterexample ? "NOT EQUIVALENT" : "EQUIVALENT";
  } else {
    std::cerr << "error: unknown mode '" << mode << "'\n";
    return kExitUsage;
  }
  const bool verdict = !counterexample.has_value();

  if (opt.format == "json") {
    json cx;
    if (counterexample) {
      cx = json::object();
      for (auto [name, value] : *counterexample) cx[std::string(1, name)] = value ? 1 : 0;
    }
    emit_json("check", expr, "classical",
              {{"mode", mode == "equiv" ? "equivalence" : "tautology"},
               {"other", other},
               {"verdict", verdict},
               {"counterexample", cx}});
  } else if (opt.format == "csv") {
    std::cout << "key,value\n";
    std::cout << "verdict," << (verdict ? "true" : "false") << "\n";
    if (counterexample) {
      std::string cx;
      for (auto [name, value] : *counterexample) {
        if (!cx.empty()) cx += ' ';
        cx += name;
        cx += '=';
        cx += value ? '1' : '0';
      }
      std::cout << "counterexample," << cx << "\n";
    }
  } else {
    std::cout << verdict_word << "\n";
    if (counterexample && !opt.quiet) {
      std::cout << "counterexample:";
      for (auto [name, value] : *counterexample)
        std::cout << ' ' << name << '=' << (value ? '1' : '0');
      std::cout << "\n";
    }
  }
  return verdict ? kExitOk : kExitFalse;
}

// ----------------------------------------------------------------- eval --

int cmd_eval(const Options& opt, const std::string& expr, const std::string& assign_spec,
             const std::string& logic_name, int dim, const std::string& basis_spec) {
  const Formula f = parse_cli(expr);
  const Logic logic = logic_from(logic_name);
  const auto pairs = parse_assignment_list(assign_spec);

  std::string value_text, value_machine;
  std::optional<Eigen::VectorXd> vector_out;
  double scalar = 0;

  switch (logic) {
    case Logic::Classical: {
      const bool v = eval2(f, to_assignment2(pairs));
      scalar = v ? 1.0 : 0.0;
      value_text = value_machine = v ? "1" : "0";
      break;
    }
    case Logic::Lukasiewicz:
    case Logic::Kleene: {
      const TruthValue3 v =
          eval3(f, to_assignment3(pairs),
                logic == Logic::Lukasiewicz ? Trivalent::Lukasiewicz : Trivalent::Kleene);
      scalar = as_weight(v);
      value_text = value3_text(v);
      value_machine = value3_machine(v);
      break;
    }
    case Logic::Projection: {
      scalar = eval_projection(f, to_assignment_vec(pairs));
      value_text = value_machine = format_weight(scalar);
      break;
    }
    case Logic::Matrix: {
      const Basis basis = basis_from(basis_spec, dim);
      const TruthVector v = eval_matrix(f, to_assignment_vec(pairs), basis);
      scalar = decode(v);
      vector_out = v.components;
      value_text = value_machine = format_weight(scalar);
      break;
    }
  }

  if (opt.format == "json") {
    json results = {{"value", json::parse(value_machine)}};
    if (vector_out) {
      json vec = json::array();
      for (Eigen::Index i = 0; i < vector_out->size(); ++i)
        vec.push_back(weight_json((*vector_out)(i)));
      results["vector"] = vec;
      results["decoded"] = weight_json(scalar);
    }
    emit_json("eval", expr, logic_name, results);
  } else if (opt.format == "csv") {
    std::cout << "key,value\n";
    if (vector_out) {
      std::string components;
      for (Eigen::Index i = 0; i < vector_out->size(); ++i) {
        if (i > 0) components += ' ';
        components += format_weight((*vector_out)(i));
      }
      std::cout << "vector," << components << "\n";
      std::cout << "decoded," << value_machine << "\n";
    } else {
      std::cout << "value," << value_machine << "\n";
    }
  } else if (opt.quiet) {
    std::cout << value_machine << "\n";
  } else if (vector_out) {
    std::cout << "vector: (";
    for (Eigen::Index i = 0; i < vector_out->size(); ++i) {
      if (i > 0) std::cout << ", ";
      std::cout << format_weight((*vector_out)(i));
    }
    std::cout << ")\n";
    std::cout << "decoded: " << value_text << "\n";
  } else {
    std::cout << "value: " << value_text << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------- diff --

int cmd_diff(const Options& opt, const std::string& expr, const std::string& pair) {
  const Formula f = parse_cli(expr);
  const std::vector<char> variables = free_variables(f);
  if (variables.size() > 6) throw TooManyVariables(variables.size(), 6);

  struct DiffRow {
    std::vector<TruthValue3> assignment;
    std::string left_text, left_machine;
    std::string right_text, right_machine;
  };
  std::vector<DiffRow> rows;
  std::string left_name, right_name;

  if (pair == "luk-kleene") {
    left_name = "lukasiewicz";
    right_name = "kleene";
    for (const SemanticsDisagreement& d : diff_semantics(f)) {
      DiffRow r;
      for (char v : variables) r.assignment.push_back(d.assignment.at(v));
      r.left_text = value3_text(d.lukasiewicz);
      r.left_machine = value3_machine(d.lukasiewicz);
      r.right_text = value3_text(d.kleene);
      r.right_machine = value3_machine(d.kleene);
      rows.push_back(std::move(r));
    }
  } else if (pair == "luk-matrix") {
    left_name = "lukasiewicz";
    right_name = "matrix";
    // {0, 1/2, 1} grid in trivalent row order; the matrix side uses the
    // basis-free projection, which equals the decoded matrix evaluation
    constexpr TruthValue3 kOrder[3] = {TruthValue3::True, TruthValue3::Half, TruthValue3::False};
    const std::size_t n = variables.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t row = 0; row < total; ++row) {
      Assignment3 a3;
      AssignmentVec av;
      std::vector<TruthValue3> assignment(n);
      for (std::size_t j = 0; j < n; ++j) {
        assignment[j] = kOrder[digits[j]];
        a3[variables[j]] = assignment[j];
        av[variables[j]] = as_weight(assignment[j]);
      }
      const TruthValue3 luk = eval3_lukasiewicz(f, a3);
      const double proj = eval_projection(f, av);
      if (std::abs(proj - as_weight(luk)) > 1e-12) {
        DiffRow r;
        r.assignment = std::move(assignment);
        r.left_text = value3_text(luk);
        r.left_machine = value3_machine(luk);
        r.right_text = format_weight(proj);
        r.right_machine = r.right_text;
        rows.push_back(std::move(r));
      }
      for (std::size_t j = n; j-- > 0;) {
        if (++digits[j] < 3) break;
        digits[j] = 0;
      }
    }
  } else {
    std::cerr << "error: unknown pair '" << pair << "' (luk-kleene | luk-matrix)\n";
    return kExitUsage;
  }

  if (opt.format == "json") {
    json jrows = json::array();
    for (const DiffRow& r : rows) {
      json assignment = json::array();
      for (TruthValue3 v : r.assignment) assignment.push_back(json::parse(value3_machine(v)));
      jrows.push_back({{"assignment", assignment},
                       {"left", json::parse(r.left_machine)},
                       {"right", json::parse(r.right_machine)}});
    }
    json jvars = json::array();
    for (char v : variables) jvars.push_back(std::string(1, v));
    emit_json("diff", expr, pair,
              {{"left", left_name},
               {"right", right_name},
               {"variables", jvars},
               {"disagreements", jrows}});
  } else if (opt.format == "csv") {
    for (char v : variables) std::cout << v << ",";
    std::cout << left_name << "," << right_name << "\n";
    for (const DiffRow& r : rows) {
      for (TruthValue3 v : r.assignment) std::cout << value3_machine(v) << ",";
      std::cout << r.left_machine << "," << r.right_machine << "\n";
    }
  } else {
    if (!opt.quiet) {
      std::cout << "formula: " << expr << "\n";
      std::cout << "pair: " << left_name << " vs " << right_name << "\n";
    }
    for (const DiffRow& r : rows) {
      std::cout << "(";
      for (std::size_t j = 0; j < r.assignment.size(); ++j) {
        if (j > 0) std::cout << ", ";
        std::cout << value3_text(r.assignment[j]);
      }
      std::cout << "): " << r.left_text << " vs " << r.right_text << "\n";
    }
    if (!opt.quiet) {
      if (rows.empty())
        std::cout << "no disagreements\n";
      else
        std::cout << rows.size() << (rows.size() == 1 ? " disagreement\n" : " disagreements\n");
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------- matrices --

int cmd_matrices(const Options& opt, int dim, const std::string& basis_spec,
                 const std::string& symbol_spec) {
  const Basis basis = basis_from(basis_spec, dim);
  std::vector<char> symbols;
  if (symbol_spec == "all")
    symbols = {'N', 'C', 'K', 'A'};
  else if (symbol_spec.size() == 1 && std::string("NCKA").find(symbol_spec) != std::string::npos)
    symbols = {symbol_spec[0]};
  else
    throw std::invalid_argument("unknown symbol '" + symbol_spec + "' (N | C | K | A | all)");

  auto dump_rows = [](const Eigen::MatrixXd& m) {
    std::vector<std::string> lines;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      std::string line;
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (j > 0) line += ' ';
        line += format_full(m(i, j));
      }
      lines.push_back(std::move(line));
    }
    return lines;
  };

  if (opt.format == "json") {
    json matrices = json::array();
    for (char s : symbols) {
      const LogicMatrix m = build_matrix(s, basis);
      json rows = json::array();
      for (Eigen::Index i = 0; i < m.entries().rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.entries().cols(); ++j)
          row.push_back(m.entries()(i, j));
        rows.push_back(row);
      }
      matrices.push_back({{"symbol", std::string(1, s)}, {"rows", rows}});
    }
    emit_json("matrices", "", "matrix",
              {{"dim", dim}, {"basis", basis_spec}, {"matrices", matrices}});
    return kExitOk;
  }
  if (opt.format == "csv") {
    for (char s : symbols) {
      const LogicMatrix m = build_matrix(s, basis);
      for (Eigen::Index i = 0; i < m.entries().rows(); ++i) {
        std::cout << s << "," << i;
        for (Eigen::Index j = 0; j < m.entries().cols(); ++j)
          std::cout << "," << format_full(m.entries()(i, j));
        std::cout << "\n";
      }
    }
    return kExitOk;
  }

  bool first = true;
  for (char s : symbols) {
    const LogicMatrix m = build_matrix(s, basis);
    if (symbols.size() > 1) {
      if (!first) std::cout << "\n";
      std::cout << s << ":\n";
    }
    for (const std::string& line : dump_rows(m.entries())) std::cout << line << "\n";
    first = false;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;

  CLI::App app{"Polish-notation propositional logic: classical, three-valued, and "
               "matrix-vector semantics"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_flag("--quiet", opt.quiet, "Minimal output");

  std::string expr, expr2;
  std::string logic = "classical";
  std::string mode = "tautology";
  std::string pair = "luk-kleene";
  std::string basis_spec = "canonical";
  std::string symbol_spec = "all";
  std::string assign_spec;
  std::string grid_spec;
  int dim = 2;

  CLI::App* c_parse = app.add_subcommand("parse", "Parse a prefix formula and show its tree");
  c_parse->add_option("expr", expr, "Formula in prefix notation")->required();

  CLI::App* c_table = app.add_subcommand("table", "Print a truth table");
  c_table->add_option("expr", expr)->required();
  c_table->add_option("--logic", logic, "classical | lukasiewicz | kleene | matrix")
      ->check(CLI::IsMember({"classical", "lukasiewicz", "kleene", "matrix"}));
  c_table->add_option("--grid", grid_spec, "Comma list of weights for matrix tables");
  c_table->add_option("--dim", dim, "Basis dimension for matrix logic");
  c_table->add_option("--basis", basis_spec, "canonical | random:<seed>");

  CLI::App* c_check = app.add_subcommand("check", "Tautology or equivalence verdict");
  c_check->add_option("expr", expr)->required();
  c_check->add_option("--mode", mode, "tautology | equiv")
      ->check(CLI::IsMember({"tautology", "equiv"}));
  c_check->add_option("expr2", expr2, "Second formula for --mode equiv");

  CLI::App* c_eval = app.add_subcommand("eval", "Evaluate under one semantics");
  c_eval->add_option("expr", expr)->required();
  c_eval->add_option("--assign", assign_spec, "e.g. p=0.5,q=1")->required();
  c_eval->add_option("--logic", logic,
                     "classical | lukasiewicz | kleene | matrix | projection")
      ->check(CLI::IsMember({"classical", "lukasiewicz", "kleene", "matrix", "projection"}));
  c_eval->add_option("--dim", dim, "Basis dimension for matrix logic");
  c_eval->add_option("--basis", basis_spec, "canonical | random:<seed>");

  CLI::App* c_diff = app.add_subcommand("diff", "List assignments where two semantics differ");
  c_diff->add_option("expr", expr)->required();
  c_diff->add_option("--pair", pair, "luk-kleene | luk-matrix")
      ->check(CLI::IsMember({"luk-kleene", "luk-matrix"}));

  CLI::App* c_matrices = app.add_subcommand("matrices", "Dump connective matrices");
  c_matrices->add_option("--dim", dim, "Basis dimension");
  c_matrices->add_option("--basis", basis_spec, "canonical | random:<seed>");
  c_matrices->add_option("--symbol", symbol_spec, "N | C | K | A | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(c_parse)) return cmd_parse(opt, expr);
    if (app.got_subcommand(c_table))
      return cmd_table(opt, expr, logic, grid_spec, dim, basis_spec);
    if (app.got_subcommand(c_check)) return cmd_check(opt, expr, mode, expr2);
    if (app.got_subcommand(c_eval))
      return cmd_eval(opt, expr, assign_spec, logic, dim, basis_spec);
    if (app.got_subcommand(c_diff)) return cmd_diff(opt, expr, pair);
    if (app.got_subcommand(c_matrices)) return cmd_matrices(opt, dim, basis_spec, symbol_spec);
  } catch (const ExitRequest& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
