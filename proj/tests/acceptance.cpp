// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. argv[1] is the path to the gengame executable.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gengame/commands.hpp"
#include "gengame/expr.hpp"
#include "laws.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using test_support::build;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Expected {
  const char* expr;
  unsigned nim;
};

const std::vector<Expected>& sweep() {
  static const std::vector<Expected> groups = {
      {"1", 0},
      {"Z2^3", 0},
      {"Z2 x Z3^3", 0},
      {"Z2^4", 0},
      {"D4", 0},
      {"Q8", 0},
      {"Z2 x Z3^2", 0},
      {"Z2 x perm(7; (0 1 2 3 4 5 6); (1 2 4)(3 6 5))", 0},
      {"Z4", 1},
      {"Z8", 1},
      {"Z12", 1},
      {"Z2^2", 1},
      {"Z2^2 x Z3", 1},
      {"Z2^2 x Z3^2", 1},
      {"Z3^3", 1},
      {"Z5^3", 1},
      {"Z2", 2},
      {"Z3", 2},
      {"Z9", 2},
      {"Z3^2", 2},
      {"Z15", 2},
      {"Z6", 4},
      {"Z10", 4},
      {"Z18", 4},
  };
  return groups;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string summarize(const laws::Tally& t) {
  std::string s = std::to_string(t.checks) + " checks, " + std::to_string(t.failures) + " failures";
  for (const auto& n : t.notes) s += "; " + n;
  return s;
}

Outcome closed_form_sweep() {
  std::string catalog;
  for (const auto& e : sweep()) catalog += std::string(e.expr) + " *" + std::to_string(e.nim) + "\n";
  const fs::path path = fs::temp_directory_path() / "gengame_acceptance_sweep.txt";
  std::ofstream(path) << catalog;
  std::ostringstream out;
  std::ostringstream err;
  const int code = gengame::run_cli({"verify", path.string()}, out, err);
  const std::string want = std::to_string(sweep().size()) + " passed, 0 failed, 0 skipped";
  const bool ok = code == gengame::kExitOk && out.str().find(want) != std::string::npos;
  return {ok, ok ? want : "exit " + std::to_string(code) + ": " + err.str()};
}

Outcome oracle_equivalence() {
  std::size_t groups = 0;
  std::size_t positions = 0;
  for (const auto& e : sweep()) {
    const gen::Group g = build(e.expr);
    if (g.order() > 16) continue;
    ++groups;
    const auto report = gen::verify_position_invariance(g);
    positions += report.positions_checked;
    const unsigned nim = gen::nim_of_game(g).nim;
    if (!report.ok() || report.grundy_empty != nim)
      return {false, std::string(e.expr) + ": grundy(empty)=" + std::to_string(report.grundy_empty) +
                         " nim=" + std::to_string(nim) + " violations=" + std::to_string(report.violation_count)};
  }
  return {true, std::to_string(groups) + " groups, " + std::to_string(positions) + " positions"};
}

Outcome even_types() {
  laws::Tally t;
  for (const auto& expr : test_support::catalog_groups()) {
    const gen::Group g = build(expr);
    if (g.order() % 2 != 0) continue;
    t += laws::even_type_table(gen::nim_of_game(g, expr));
  }
  return {t.ok() && t.checks > 0, summarize(t)};
}

Outcome odd_types() {
  laws::Tally t;
  for (const auto* expr : {"Z3", "Z9", "Z3^2", "Z7", "Z3^3", "Z5 x Z7"}) {
    t += laws::odd_type_table(gen::nim_of_game(build(expr), expr));
  }
  return {t.ok() && t.checks > 0, summarize(t)};
}

Outcome z2z2_types() {
  const gen::GameReport r = gen::nim_of_game(build("Z2^2 x Z3^2"), "Z2^2 x Z3^2");
  bool e0 = false, e1 = false, e2 = false, o2a = false, o2b = false, o1 = false;
  for (const auto& cls : r.classes) {
    const auto label = cls.label.to_string();
    e0 |= label == "E_0";
    e1 |= label == "E_1";
    e2 |= label == "E_2";
    o2a |= label == "O_2^a";
    o2b |= label == "O_2^b";
    o1 |= label == "O_1";
  }
  const auto t = laws::z2z2_type_table(r);
  const auto& phi = r.classes.at(r.frattini_index);
  const bool frattini_ok =
      phi.label.to_string() == "O_2^b" && phi.type == gen::TypeTriple{1, 1, 2} && r.nim == 1;
  const bool ok = !o1 && e0 && e1 && e2 && o2a && o2b && t.ok() && frattini_ok;
  return {ok, std::to_string(r.classes.size()) + " classes, " + summarize(t) +
                  (frattini_ok ? "" : "; Frattini class " + laws::describe(phi)) + (o1 ? "; O_1 nonempty" : "")};
}

Outcome deficiency_laws() {
  std::mt19937_64 rng(20240229);
  laws::Tally t;
  std::size_t products = 0;
  for (const auto& expr : test_support::catalog_groups()) {
    const auto parsed = gengame::parse_group_expr(expr);
    const gen::Group g = gengame::build_group(parsed);
    const auto report = gen::nim_of_game(g, expr);
    t += laws::option_deficiencies(report);
    t += laws::frattini_deficiency(g, report);
    if (const auto parts = gengame::split_product(parsed)) {
      ++products;
      const gen::Group left = gengame::build_group(parts->first);
      const gen::Group right = gengame::build_group(parts->second);
      t += laws::full_factors(left, right, rng);
      t += laws::full_factors(right, left, rng);
      t += laws::factor_deficiencies(left, right, rng);
    }
    if (g.order() <= 16) t += laws::brute_vs_lattice(g, rng, 200);
  }
  return {t.ok() && products > 0, std::to_string(products) + " product groups, " + summarize(t)};
}

Outcome exchange_law() {
  std::mt19937_64 rng(8128);
  laws::Tally t;
  const std::vector<std::pair<const char*, const char*>> groups = {
      {"Z2", "Z3^2"}, {"Z2^2", "Z3^2"}, {"Z2", "perm(7; (0 1 2 3 4 5 6); (1 2 4)(3 6 5))"}};
  for (const auto& [two, odd] : groups) t += laws::exchange_law(build(two), build(odd), rng, 50);
  return {t.ok() && t.checks > 0, summarize(t)};
}

Outcome determinism(const std::string& exe) {
  if (exe.empty()) return {false, "no executable given"};
  const fs::path dir = fs::temp_directory_path();
  std::vector<std::string> dots;
  std::vector<std::string> jsons;
  for (int i = 0; i < 2; ++i) {
    const fs::path dot = dir / ("gengame_acceptance_" + std::to_string(i) + ".dot");
    const fs::path json = dir / ("gengame_acceptance_" + std::to_string(i) + ".json");
    const std::string cmd = "\"" + exe + "\" analyze \"Z2^2 x Z3^2\" --dot \"" + dot.string() + "\" --json > \"" +
                            json.string() + "\"";
    if (std::system(cmd.c_str()) != 0) return {false, "command failed: " + cmd};
    dots.push_back(read_file(dot));
    jsons.push_back(read_file(json));
  }
  const bool ok = !dots[0].empty() && !jsons[0].empty() && dots[0] == dots[1] && jsons[0] == jsons[1];
  return {ok, std::to_string(dots[0].size()) + " DOT bytes, " + std::to_string(jsons[0].size()) + " JSON bytes"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0 means no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "closed-form sweep", 120, closed_form_sweep},
      {2, "oracle equivalence", 30, oracle_equivalence},
      {3, "even-type table", 0, even_types},
      {4, "odd-type table", 0, odd_types},
      {5, "Z2^2 x Z3^2 type table", 10, z2z2_types},
      {6, "deficiency laws", 0, deficiency_laws},
      {7, "generator exchange", 0, exchange_law},
      {8, "deterministic analyze output", 0, [&] { return determinism(exe); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      outcome.ok = false;
      outcome.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    if (!outcome.ok) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (outcome.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << "): "
              << outcome.detail << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
