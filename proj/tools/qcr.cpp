// qcr: command-line front end.
//
// Exit codes: 0 SAT (or success), 1 UNSAT (or a redundant constraint for
// `nrd check`), 2 usage or input error, 3 oracle budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcr/igsp.hpp"
#include "qcr/io.hpp"
#include "qcr/oracle.hpp"
#include "qcr/redundancy.hpp"
#include "qcr/run.hpp"

namespace {

using json = nlohmann::json;

constexpr int kSat = 0;
constexpr int kUnsat = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw qcr::Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json constraints_json(const qcr::Network& q) {
  json arr = json::array();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      arr.push_back({{"x", q.vars()[i]}, {"rel", q.calculus().format(q.label(i, j))}, {"y", q.vars()[j]}});
  return arr;
}

int cmd_solve(const std::string& path, const std::string& mode, const std::string& prune, bool certificate,
              bool stats, bool as_json) {
  const auto q = qcr::parse_qcn(read_input(path));
  const auto rep = qcr::run_solver(q, {qcr::parse_mode(mode), qcr::parse_prune(prune)}, path);
  if (as_json) {
    json j = {{"instance", path},      {"calculus", rep.calculus},   {"n", rep.n},
              {"mode", mode},          {"answer", rep.sat ? "SAT" : "UNSAT"},
              {"wall_ms", rep.wall_ms}, {"peak_states", rep.peak_states}};
    if (certificate && rep.certificate) j["certificate"] = constraints_json(*rep.certificate);
    if (certificate && rep.model) {
      json m = json::array();
      for (std::size_t i = 0; i < rep.model->size(); ++i)
        m.push_back({{"var", q.vars()[i]}, {"lo", (*rep.model)[i].lo}, {"hi", (*rep.model)[i].hi}});
      j["model"] = m;
    }
    if (stats) {
      json s = json::array();
      for (const auto& c : rep.stats)
        s.push_back({{"card", c.cardinality}, {"subsets", c.subsets}, {"max_states", c.max_states},
                     {"total_states", c.total_states}});
      j["stats"] = s;
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (rep.sat ? "SAT" : "UNSAT") << '\n';
    if (certificate && rep.model)
      for (std::size_t i = 0; i < rep.model->size(); ++i)
        std::cout << "MODEL " << q.vars()[i] << ' ' << (*rep.model)[i].lo << ' ' << (*rep.model)[i].hi << '\n';
    else if (certificate && rep.certificate)
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
          std::cout << "CERT " << q.vars()[i] << ' ' << q.calculus().format(rep.certificate->label(i, j)) << ' '
                    << q.vars()[j] << '\n';
    if (stats) {
      if (!rep.stats.empty()) {
        std::cout << "card,subsets,max_states,total_states\n";
        for (const auto& c : rep.stats)
          std::cout << c.cardinality << ',' << c.subsets << ',' << c.max_states << ',' << c.total_states << '\n';
      } else if (rep.mode == qcr::SolveMode::Dp) {
        std::cout << "enqueued," << rep.peak_states << '\n';
      }
    }
  }
  return rep.sat ? kSat : kUnsat;
}

int cmd_igsp(const std::string& path, const std::string& mode, bool as_json) {
  const auto g = qcr::parse_graph(read_input(path));
  bool sat;
  std::vector<qcr::IntervalCoords> model;
  std::vector<qcr::Edge> realized;
  if (qcr::parse_mode(mode) == qcr::SolveMode::Dp) {
    auto r = qcr::solve_igsp(g);
    sat = r.sat;
    model = r.model;
    realized = r.realized;
  } else {
    auto r = qcr::oracle_ia(qcr::encode_igsp(g));
    sat = r.sat;
    model = r.model;
    realized = qcr::intersecting_pairs(model);
  }
  if (sat && !qcr::ia_model_satisfies(qcr::encode_igsp(g), model))
    throw qcr::Error("internal error: interval model failed validation");
  if (as_json) {
    json j = {{"instance", path}, {"mode", mode}, {"answer", sat ? "SAT" : "UNSAT"}};
    if (sat) {
      json m = json::array();
      for (std::size_t v = 0; v < model.size(); ++v) m.push_back({{"vertex", v}, {"lo", model[v].lo}, {"hi", model[v].hi}});
      j["model"] = m;
      json e = json::array();
      for (auto [u, v] : realized) e.push_back({u, v});
      j["edges"] = e;
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (sat ? "SAT" : "UNSAT") << '\n';
    for (std::size_t v = 0; v < model.size(); ++v) std::cout << "MODEL " << v << ' ' << model[v].lo << ' ' << model[v].hi << '\n';
  }
  return sat ? kSat : kUnsat;
}

int cmd_nrd_value(const std::string& rel, std::size_t n, bool as_json) {
  auto v = qcr::nrd_value({rel, n});
  if (as_json)
    std::cout << json{{"relation", rel}, {"n", n}, {"value", v.value}, {"kind", v.lower_bound ? "lower-bound" : "exact"}}.dump()
              << '\n';
  else
    std::cout << (v.lower_bound ? "lower-bound " : "exact ") << v.value << '\n';
  return 0;
}

int cmd_nrd_check(const std::string& path, bool as_json) {
  const auto q = qcr::parse_qcn(read_input(path));
  bool all = true;
  json arr = json::array();
  for (const auto& c : qcr::constraints_of(q)) {
    const bool nr = qcr::is_nonredundant(q, c);
    all = all && nr;
    const auto label = q.language().format(c.rel);
    if (as_json)
      arr.push_back({{"x", c.x}, {"rel", label}, {"y", c.y}, {"nonredundant", nr}});
    else
      std::cout << c.x << ' ' << label << ' ' << c.y << ' ' << (nr ? "nonredundant" : "redundant") << '\n';
  }
  if (as_json) std::cout << json{{"instance", path}, {"prime", all}, {"constraints", arr}}.dump(2) << '\n';
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qualitative constraint reasoning: interval and region networks"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured JSON output");

  std::string path, mode = "dp", prune = "full";
  bool certificate = false, stats = false;
  auto* solve = app.add_subcommand("solve", "Decide a QCN file");
  solve->add_option("file", path, "QCN file, or - for stdin")->required();
  solve->add_option("--mode", mode, "dp or oracle")->check(CLI::IsMember({"dp", "oracle"}));
  solve->add_option("--prune", prune, "RCC-8 pruning: full, safe or none (exhaustive)")
      ->check(CLI::IsMember({"full", "safe", "none"}));
  solve->add_flag("--certificate", certificate, "Print a validated solution");
  solve->add_flag("--stats", stats, "Print per-cardinality state counts");
  solve->add_flag("--json", as_json, "Structured JSON output");

  auto* igsp = app.add_subcommand("igsp", "Decide an interval graph sandwich instance");
  igsp->add_option("file", path, "Graph file, or - for stdin")->required();
  igsp->add_option("--mode", mode, "dp or oracle")->check(CLI::IsMember({"dp", "oracle"}));
  igsp->add_flag("--json", as_json, "Structured JSON output");

  auto* nrd = app.add_subcommand("nrd", "Non-redundancy tools");
  nrd->require_subcommand(1);
  std::string rel;
  std::size_t n = 3;
  auto* nrd_value = nrd->add_subcommand("value", "Maximum prime instance size over one relation");
  nrd_value->add_option("relation", rel)->required();
  nrd_value->add_option("n", n)->required();
  nrd_value->add_flag("--json", as_json, "Structured JSON output");
  auto* nrd_gen = nrd->add_subcommand("generate", "Emit the maximal prime instance");
  nrd_gen->add_option("relation", rel)->required();
  nrd_gen->add_option("n", n)->required();
  auto* nrd_check = nrd->add_subcommand("check", "Report each constraint as redundant or not");
  nrd_check->add_option("file", path)->required();
  nrd_check->add_flag("--json", as_json, "Structured JSON output");
  auto* nrd_prime = nrd->add_subcommand("prime", "Remove redundant constraints");
  nrd_prime->add_option("file", path)->required();

  qcr::GenSpec spec;
  std::size_t label_size = 0;
  bool graph = false;
  double p_forced = 0.3, p_optional = 0.3;
  auto* gen = app.add_subcommand("gen", "Emit a seeded random instance");
  gen->add_option("--calculus", spec.calculus, "ia3, ia7, ia13, rcc8 or rcc5");
  gen->add_option("--n", spec.n, "Number of variables");
  gen->add_option("--density", spec.density, "Probability that a pair is constrained")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--label-size", label_size, "Atoms per label (0: uniform nonempty)");
  gen->add_option("--seed", spec.seed, "Generator seed");
  gen->add_flag("--graph", graph, "Emit a sandwich graph instead");
  gen->add_option("--p-forced", p_forced, "Graph mode: probability of a forced edge");
  gen->add_option("--p-optional", p_optional, "Graph mode: probability of an optional edge");

  std::string suite;
  std::vector<std::string> files;
  std::vector<std::string> modes = {"dp"};
  auto* bench = app.add_subcommand("bench", "Run a suite and print CSV");
  bench->add_option("--suite", suite, "Suite file (file/gen lines)");
  bench->add_option("files", files, "QCN files");
  bench->add_option("--modes", modes, "Comma-separated modes to run")->delimiter(',')->allow_extra_args(false)->check(CLI::IsMember({"dp", "oracle"}));
  bench->add_option("--prune", prune, "RCC-8 pruning")->check(CLI::IsMember({"full", "safe", "none"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(path, mode, prune, certificate, stats, as_json);
    if (igsp->parsed()) return cmd_igsp(path, mode, as_json);
    if (nrd_value->parsed()) return cmd_nrd_value(rel, n, as_json);
    if (nrd_gen->parsed()) {
      std::cout << qcr::emit_qcn(qcr::generate_max_prime({rel, n}));
      return 0;
    }
    if (nrd_check->parsed()) return cmd_nrd_check(path, as_json);
    if (nrd_prime->parsed()) {
      std::cout << qcr::emit_qcn(qcr::prime(qcr::parse_qcn(read_input(path))));
      return 0;
    }
    if (gen->parsed()) {
      if (graph) {
        std::cout << qcr::emit_graph(qcr::gen_graph(spec.n, p_forced, p_optional, spec.seed));
      } else {
        if (label_size > 0) {
          spec.dist = qcr::LabelDist::FixedSize;
          spec.label_size = label_size;
        }
        std::cout << qcr::emit_qcn(qcr::gen_random(spec));
      }
      return 0;
    }
    if (bench->parsed()) {
      std::vector<qcr::BenchEntry> entries;
      if (!suite.empty()) {
        std::ifstream in(suite);
        if (!in) throw qcr::Error("cannot open '" + suite + "'");
        entries = qcr::load_suite(in);
      }
      for (const auto& f : files) entries.push_back({f, qcr::parse_qcn(read_input(f))});
      std::vector<qcr::SolveMode> ms;
      for (const auto& m : modes) ms.push_back(qcr::parse_mode(m));
      std::cout << qcr::bench_csv(entries, ms, qcr::parse_prune(prune));
      return 0;
    }
  } catch (const qcr::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
