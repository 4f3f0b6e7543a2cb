#include <sys/wait.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

// Path injected by the build so the suite always drives the binary it was
// built with.
#ifndef PLOGIC_CLI_PATH
#error "PLOGIC_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(PLOGIC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  for (const std::string& line : lines_of(text)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("parse: valid formula") {
  const RunResult r = run("parse CCpKqNqNp");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("well-formed") != std::string::npos);
  CHECK(r.out.find("((p → (q ∧ ¬q)) → ¬p)") != std::string::npos);

  const RunResult j = run("--format json parse CCpKqNqNp");
  CHECK(j.exit_code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["command"] == "parse");
  CHECK(doc["formula"] == "CCpKqNqNp");
  CHECK(doc["results"]["valid"] == true);
  CHECK(doc["results"]["polish"] == "CCpKqNqNp");
  CHECK(doc["results"]["variables"] == nlohmann::json::array({"p", "q"}));
  CHECK(doc["results"]["tree"]["symbol"] == "C");
}

TEST_CASE("parse: invalid formulas exit 2") {
  CHECK(run("parse CKCpqq").exit_code == 2);
  CHECK(run("parse ''").exit_code == 2);
  CHECK(run("parse 'Kp$'").exit_code == 2);
  CHECK(run("parse Kpqr").exit_code == 2);
}

TEST_CASE("table: lukasiewicz grid") {
  const RunResult r = run("--format csv table Cpq --logic lukasiewicz");
  CHECK(r.exit_code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 10);  // header + 9
  CHECK(rows[0] == std::vector<std::string>{"p", "q", "value"});
  bool found = false;
  for (const auto& row : rows)
    if (row == std::vector<std::string>{"0.5", "0.5", "1"}) found = true;
  CHECK(found);
}

TEST_CASE("table: matrix grid shows decoded weights") {
  const RunResult r = run("--format csv table Cpq --logic matrix");
  CHECK(r.exit_code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 10);
  bool found = false;
  for (const auto& row : rows)
    if (row == std::vector<std::string>{"0.5", "0.5", "0.75"}) found = true;
  CHECK(found);
}

TEST_CASE("table: classical") {
  const RunResult r = run("--format csv table Np --logic classical");
  CHECK(r.exit_code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1] == std::vector<std::string>{"1", "0"});
  CHECK(rows[2] == std::vector<std::string>{"0", "1"});
}

TEST_CASE("table: text, csv and json rows all agree") {
  const RunResult text = run("--quiet table ApNq --logic lukasiewicz");
  const RunResult csv = run("--format csv table ApNq --logic lukasiewicz");
  const RunResult jtxt = run("--format json table ApNq --logic lukasiewicz");
  REQUIRE(text.exit_code == 0);
  REQUIRE(csv.exit_code == 0);
  REQUIRE(jtxt.exit_code == 0);

  // text rows: cells then "| value"; 1/2 prints as the unicode half glyph
  std::vector<std::vector<std::string>> from_text;
  for (std::string line : lines_of(text.out)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (in >> cell) {
      if (cell == "|") continue;
      if (cell == "½") cell = "0.5";
      cells.push_back(cell);
    }
    from_text.push_back(std::move(cells));
  }

  const auto from_csv = csv_rows(csv.out);
  REQUIRE(from_csv.size() == from_text.size() + 1);
  for (std::size_t i = 0; i < from_text.size(); ++i) CHECK(from_text[i] == from_csv[i + 1]);

  const auto doc = nlohmann::json::parse(jtxt.out);
  const auto& jrows = doc["results"]["rows"];
  REQUIRE(jrows.size() == from_text.size());
  for (std::size_t i = 0; i < from_text.size(); ++i) {
    const auto& jr = jrows[i];
    for (std::size_t c = 0; c < 2; ++c)
      CHECK(jr["assignment"][c].get<double>() == doctest::Approx(std::stod(from_text[i][c])));
    CHECK(jr["value"].get<double>() == doctest::Approx(std::stod(from_text[i][2])));
  }
}

TEST_CASE("check: verdicts and exit codes") {
  const RunResult taut = run("check ApNp --mode tautology");
  CHECK(taut.exit_code == 0);
  CHECK(taut.out.find("TAUTOLOGY") == 0);

  const RunResult equiv = run("check Apq --mode equiv NKNpNq");
  CHECK(equiv.exit_code == 0);
  CHECK(equiv.out.find("EQUIVALENT") == 0);

  const RunResult no = run("check Kpq --mode tautology");
  CHECK(no.exit_code == 1);
  CHECK(no.out.find("NOT A TAUTOLOGY") != std::string::npos);
  CHECK(no.out.find("p=1 q=0") != std::string::npos);

  const RunResult jr = run("--format json check Kpq --mode tautology");
  CHECK(jr.exit_code == 1);
  const auto doc = nlohmann::json::parse(jr.out);
  CHECK(doc["results"]["verdict"] == false);
  CHECK(doc["results"]["counterexample"]["p"] == 1);
  CHECK(doc["results"]["counterexample"]["q"] == 0);

  CHECK(run("check Apq --mode equiv").exit_code == 2);
}

TEST_CASE("eval: projection, matrix, classical") {
  const RunResult proj = run("--quiet eval Kpq --assign p=0.5,q=0.5 --logic projection");
  CHECK(proj.exit_code == 0);
  CHECK(proj.out == "0.25\n");

  const RunResult mat = run("eval Np --assign p=0.5 --logic matrix --dim 2");
  CHECK(mat.exit_code == 0);
  CHECK(mat.out.find("vector: (0.5, 0.5)") != std::string::npos);
  CHECK(mat.out.find("decoded: 0.5") != std::string::npos);

  const RunResult cls = run("--quiet eval Cpq --assign p=1,q=0 --logic classical");
  CHECK(cls.exit_code == 0);
  CHECK(cls.out == "0\n");

  const RunResult jm = run("--format json eval Np --assign p=0.5 --logic matrix");
  const auto doc = nlohmann::json::parse(jm.out);
  CHECK(doc["results"]["vector"] == nlohmann::json::array({0.5, 0.5}));
  CHECK(doc["results"]["decoded"] == 0.5);
}

TEST_CASE("eval: bad assignments exit 2") {
  CHECK(run("eval Cpq --assign p=1 --logic classical").exit_code == 2);          // missing q
  CHECK(run("eval Cpq --assign p=2,q=0 --logic classical").exit_code == 2);      // bad domain
  CHECK(run("eval Cpq --assign p=0.3,q=0 --logic lukasiewicz").exit_code == 2);  // bad domain
  CHECK(run("eval Cpq --assign p=1.5,q=0 --logic matrix").exit_code == 2);       // bad weight
  CHECK(run("eval Cpq --assign garbage --logic classical").exit_code == 2);
}

TEST_CASE("diff: lukasiewicz vs kleene") {
  const RunResult r = run("--format csv diff Cpq --pair luk-kleene");
  CHECK(r.exit_code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"p", "q", "lukasiewicz", "kleene"});
  CHECK(rows[1] == std::vector<std::string>{"0.5", "0.5", "1", "0.5"});
}

TEST_CASE("diff: lukasiewicz vs matrix") {
  const RunResult a = run("--format csv diff Apq --pair luk-matrix");
  CHECK(a.exit_code == 0);
  const auto rows = csv_rows(a.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1] == std::vector<std::string>{"0.5", "0.5", "0.5", "0.75"});

  const RunResult n = run("diff Np --pair luk-matrix");
  CHECK(n.exit_code == 0);
  CHECK(n.out.find("no disagreements") != std::string::npos);
}

TEST_CASE("matrices: canonical negation dump") {
  const RunResult r = run("matrices --dim 2 --basis canonical --symbol N");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0 1\n1 0\n");

  const RunResult k = run("matrices --dim 2 --basis canonical --symbol K");
  CHECK(k.exit_code == 0);
  CHECK(k.out == "1 1 1 0\n0 0 0 1\n");

  const RunResult all = run("--format json matrices --dim 3 --basis random:5");
  CHECK(all.exit_code == 0);
  const auto doc = nlohmann::json::parse(all.out);
  REQUIRE(doc["results"]["matrices"].size() == 4);
  CHECK(doc["results"]["matrices"][0]["symbol"] == "N");
  CHECK(doc["results"]["matrices"][1]["rows"].size() == 3);
  CHECK(doc["results"]["matrices"][1]["rows"][0].size() == 9);
}

TEST_CASE("matrices: errors") {
  CHECK(run("matrices --dim 1").exit_code == 2);
  CHECK(run("matrices --symbol Z").exit_code == 2);
}

TEST_CASE("random basis requires a seed") {
  CHECK(run("eval Np --assign p=0.5 --logic matrix --basis random").exit_code == 2);
  CHECK(run("matrices --basis random:17 --symbol N").exit_code == 0);
  // same seed, same dump
  const RunResult a = run("matrices --dim 4 --basis random:17");
  const RunResult b = run("matrices --dim 4 --basis random:17");
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("nosuchcommand").exit_code == 2);
  CHECK(run("table Cpq --logic nosuchlogic").exit_code == 2);
  CHECK(run("parse").exit_code == 2);
}

TEST_SUITE_END();
