#include "gengame/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "gen/gen.hpp"
#include "gengame/catalog.hpp"
#include "gengame/expr.hpp"

namespace gengame {

namespace {

using nlohmann::ordered_json;

/// Maps library exceptions onto exit codes; everything else propagates.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const gen::ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const gen::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

struct Parsed {
  GroupExpr expr;
  gen::Group group;
};

Parsed load(const std::string& text, std::size_t max_order) {
  GroupExpr expr = parse_group_expr(text);
  gen::Group group = build_group(expr, {max_order, {}});
  return {std::move(expr), std::move(group)};
}

int cmd_nim(const std::string& text, bool json, std::size_t max_order, std::ostream& out) {
  const auto [expr, group] = load(text, max_order);
  const auto report = gen::nim_of_game(group, render(expr));
  if (json) {
    out << gen::report_to_json(report) << '\n';
  } else {
    out << "GEN(" << report.group << ") = *" << report.nim << '\n';
  }
  return kExitOk;
}

int cmd_analyze(const std::string& text, const std::string& dot_file, bool json,
                std::size_t max_order, std::ostream& out, std::ostream& err) {
  const auto [expr, group] = load(text, max_order);
  const auto report = gen::nim_of_game(group, render(expr));
  if (!dot_file.empty()) {
    std::ofstream dot(dot_file, std::ios::binary);
    if (!dot) {
      err << "error: cannot write " << dot_file << '\n';
      return kExitInputError;
    }
    dot << gen::export_structure_digraph(report);
  }
  if (json) {
    out << gen::report_to_json(report) << '\n';
    return kExitOk;
  }
  out << "GEN(" << report.group << ") = *" << report.nim << '\n';
  out << "order " << report.order << ", d(G) = " << report.min_generators << ", maximal "
      << report.maximal_count << ", intersection " << report.intersection_count << ", classes "
      << report.classes.size() << '\n';
  out << std::left << std::setw(5) << "idx" << std::setw(8) << "size" << std::setw(6) << "def"
      << std::setw(8) << "class" << std::setw(10) << "type" << "options\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& cls = report.classes[i];
    std::string opts;
    for (auto j : cls.options) opts += (opts.empty() ? "" : ",") + std::to_string(j);
    out << std::setw(5) << (std::to_string(i) + (i == report.frattini_index ? "*" : ""))
        << std::setw(8) << cls.subgroup.size() << std::setw(6) << cls.deficiency << std::setw(8)
        << cls.label.to_string() << std::setw(10) << cls.type.to_string() << opts << '\n';
  }
  out << "* Frattini class\n";
  return kExitOk;
}

int cmd_decompose(const std::string& text, std::size_t max_order, std::ostream& out) {
  const auto [expr, group] = load(text, max_order);
  const auto dec = gen::decompose_sylow2(group);
  const bool nilpotent = gen::is_nilpotent(group);
  if (dec.valid) {
    out << "valid: T order " << dec.two_part.size() << ", H order " << dec.odd_part.size();
  } else {
    out << "no Sylow 2-direct factor";
  }
  out << "; nilpotent: " << (nilpotent ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_oracle(const std::string& text, std::size_t cap, std::size_t max_order, std::ostream& out) {
  const auto [expr, group] = load(text, max_order);
  const auto memo = gen::GrundyMemo::build(group, cap);
  out << "grundy(\xE2\x88\x85)=" << memo.value(std::uint64_t{0}) << " grundy({e})="
      << memo.value(std::uint64_t{1}) << '\n';
  return kExitOk;
}

enum class Status { passed, failed, skipped };

struct EntryResult {
  Status status = Status::passed;
  std::optional<gen::ConsistencyReport> row;
  std::vector<std::string> problems;
  std::optional<gen::PositionInvarianceReport> oracle;
};

struct VerifyOptions {
  bool oracle = false;
  std::size_t oracle_cap = gen::kDefaultOracleCap;
  std::size_t max_order = gen::kDefaultMaxOrder;
  std::filesystem::path base_dir;
};

EntryResult verify_entry(const CatalogEntry& entry, const VerifyOptions& opt) {
  EntryResult result;
  if (!entry.expr) {
    result.status = Status::failed;
    result.problems.push_back(entry.error);
    return result;
  }
  try {
    const gen::Group group = build_group(*entry.expr, {opt.max_order, opt.base_dir});
    result.row = gen::verify_theorem(group, render(*entry.expr));
    if (!result.row->match) {
      result.problems.push_back("prediction *" + std::to_string(*result.row->predicted) +
                                " disagrees with computed *" + std::to_string(result.row->computed));
    }
    if (entry.expected_nim && *entry.expected_nim != result.row->computed) {
      result.problems.push_back("expected *" + std::to_string(*entry.expected_nim) + ", computed *" +
                                std::to_string(result.row->computed));
    }
    if (opt.oracle && group.order() <= std::min(opt.oracle_cap, gen::kMaxOracleCap)) {
      result.oracle = gen::verify_position_invariance(group, opt.oracle_cap);
      if (result.oracle->grundy_empty != result.row->computed) {
        result.problems.push_back("oracle grundy(empty) = " + std::to_string(result.oracle->grundy_empty));
      }
      if (!result.oracle->ok()) {
        result.problems.push_back(std::to_string(result.oracle->violation_count) +
                                  " position-invariance violations");
      }
    }
    result.status = result.problems.empty() ? Status::passed : Status::failed;
  } catch (const gen::ResourceLimit& e) {
    result.status = Status::skipped;
    result.problems.push_back(e.what());
  } catch (const gen::Error& e) {
    result.status = Status::failed;
    result.problems.push_back(e.what());
  }
  return result;
}

int cmd_verify(const std::string& catalog_path, VerifyOptions opt, bool json, std::size_t jobs,
               std::ostream& out, std::ostream& err) {
  std::ifstream in(catalog_path);
  if (!in) {
    err << "error: cannot read catalog " << catalog_path << '\n';
    return kExitInputError;
  }
  std::ostringstream text;
  text << in.rdbuf();
  const auto entries = parse_catalog(text.str());
  opt.base_dir = std::filesystem::path(catalog_path).parent_path();

  // Rows are buffered per entry and emitted in catalog order.
  std::vector<EntryResult> results(entries.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) results[i] = verify_entry(entries[i], opt);
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(entries.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }

  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& r : results) {
    if (r.status == Status::passed) ++passed;
    if (r.status == Status::failed) ++failed;
    if (r.status == Status::skipped) ++skipped;
  }
  const auto status_name = [](Status s) {
    return s == Status::passed ? "passed" : s == Status::failed ? "failed" : "skipped";
  };

  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (const auto& problem : results[i].problems) {
      err << "line " << entries[i].line << ": " << entries[i].text << ": " << problem << '\n';
    }
  }

  if (json) {
    ordered_json doc;
    auto rows = ordered_json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& r = results[i];
      ordered_json row = r.row ? ordered_json::parse(gen::consistency_to_json(*r.row)) : ordered_json::object();
      if (!r.row) row["group"] = entries[i].text;
      row["line"] = entries[i].line;
      row["expected"] = entries[i].expected_nim ? ordered_json(*entries[i].expected_nim) : ordered_json(nullptr);
      if (r.oracle) {
        row["oracle"] = {{"grundy_empty", r.oracle->grundy_empty},
                         {"grundy_identity", r.oracle->grundy_identity},
                         {"positions", r.oracle->positions_checked},
                         {"violations", r.oracle->violation_count}};
      }
      row["status"] = status_name(r.status);
      row["problems"] = r.problems;
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    doc["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
    out << doc.dump(2) << '\n';
  } else {
    out << gen::consistency_tsv_header() << '\n';
    for (const auto& r : results)
      if (r.row) out << gen::to_tsv_row(*r.row) << '\n';
    out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  }
  return failed == 0 ? kExitOk : kExitVerificationFailure;
}

std::optional<std::size_t> env_max_order(std::ostream& err, bool& bad) {
  const char* raw = std::getenv("GEN_MAX_ORDER");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const auto value = std::stoul(raw, &used);
    if (used != std::string(raw).size() || value == 0) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    err << "error: GEN_MAX_ORDER must be a positive integer, got '" << raw << "'\n";
    bad = true;
    return std::nullopt;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nim-values of the generating-set achievement game on finite groups", "gengame"};
  app.require_subcommand(1);

  std::size_t max_order = 0;
  app.add_option("--max-order", max_order, "Largest group order to build (overrides GEN_MAX_ORDER)")
      ->check(CLI::Range(std::size_t{1}, gen::kMaxSupportedOrder));

  std::string expr_text;
  bool json = false;
  std::string dot_file;
  std::string catalog;
  bool with_oracle = false;
  std::size_t oracle_cap = gen::kDefaultOracleCap;
  std::size_t jobs = std::max(1U, std::thread::hardware_concurrency());

  auto* nim = app.add_subcommand("nim", "Print the nim-value of GEN(G)");
  nim->add_option("expr", expr_text, "Group expression")->required();
  nim->add_flag("--json", json, "Print the full report as JSON");

  auto* analyze = app.add_subcommand("analyze", "Print the structure classes of GEN(G)");
  analyze->add_option("expr", expr_text, "Group expression")->required();
  analyze->add_option("--dot", dot_file, "Write the structure-class digraph to FILE");
  analyze->add_flag("--json", json, "Print the report as JSON");

  auto* verify = app.add_subcommand("verify", "Check every catalog entry against the closed form");
  verify->add_option("catalog", catalog, "Catalog file")->required();
  verify->add_flag("--oracle", with_oracle, "Also run the brute-force game-tree oracle");
  verify->add_option("--oracle-cap", oracle_cap, "Largest order the oracle attempts")
      ->check(CLI::Range(std::size_t{1}, gen::kMaxOracleCap));
  verify->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "Print rows as JSON");

  auto* decompose = app.add_subcommand("decompose", "Look for a Sylow 2-direct factor");
  decompose->add_option("expr", expr_text, "Group expression")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force Grundy values of the empty set and {e}");
  oracle->add_option("expr", expr_text, "Group expression")->required();
  oracle->add_option("--oracle-cap", oracle_cap, "Largest order the oracle attempts")
      ->check(CLI::Range(std::size_t{1}, gen::kMaxOracleCap));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  bool bad_env = false;
  const auto env_order = env_max_order(err, bad_env);
  if (bad_env) return kExitInputError;
  std::size_t effective_order = gen::kDefaultMaxOrder;
  if (env_order) effective_order = *env_order;
  if (max_order != 0) effective_order = max_order;

  return guarded(err, [&]() -> int {
    if (*nim) return cmd_nim(expr_text, json, effective_order, out);
    if (*analyze) return cmd_analyze(expr_text, dot_file, json, effective_order, out, err);
    if (*decompose) return cmd_decompose(expr_text, effective_order, out);
    if (*oracle) return cmd_oracle(expr_text, oracle_cap, effective_order, out);
    VerifyOptions opt;
    opt.oracle = with_oracle;
    opt.oracle_cap = oracle_cap;
    opt.max_order = effective_order;
    return cmd_verify(catalog, opt, json, jobs, out, err);
  });
}

}  // namespace gengame
