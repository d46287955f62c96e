#pragma once

// One solver run with a validated result, and the CSV bench harness.

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcr/ia_solver.hpp"
#include "qcr/io.hpp"
#include "qcr/oracle.hpp"
#include "qcr/rcc8_solver.hpp"

namespace qcr {

enum class SolveMode { Dp, Oracle };

inline const char* to_string(SolveMode m) { return m == SolveMode::Dp ? "dp" : "oracle"; }

inline SolveMode parse_mode(std::string_view s) {
  if (s == "dp") return SolveMode::Dp;
  if (s == "oracle") return SolveMode::Oracle;
  throw Error("unknown mode '" + std::string(s) + "' (expected dp or oracle)");
}

inline rcc::PruneMode parse_prune(std::string_view s) {
  if (s == "full") return rcc::PruneMode::Full;
  if (s == "safe") return rcc::PruneMode::Safe;
  if (s == "none") return rcc::PruneMode::None;
  throw Error("unknown prune mode '" + std::string(s) + "' (expected full, safe or none)");
}

struct SolveOptions {
  SolveMode mode = SolveMode::Dp;
  rcc::PruneMode prune = rcc::PruneMode::Full;
};

struct RunReport {
  std::string instance;
  std::string calculus;
  std::size_t n = 0;
  SolveMode mode = SolveMode::Dp;
  bool sat = false;
  double wall_ms = 0;
  /// A3: enqueued 2-partitions; RCC-8 DP: largest stored state set.
  std::size_t peak_states = 0;
  /// Atomic network of a solution, checked against the input before it is
  /// stored here.
  std::optional<Network> certificate;
  /// Interval model, for interval networks.
  std::optional<std::vector<IntervalCoords>> model;
  std::vector<rcc::CardinalityStats> stats;
};

namespace detail {

inline bool is_ia(const Network& q) { return &q.calculus() == ia13().get(); }

inline void check_certificate(const Network& q, const Network& cert) {
  if (!atomic_closed(cert) || !refines(cert, q)) throw Error("internal error: certificate failed validation");
}

}  // namespace detail

/// Decides q. The DP mode runs the A3 solver on interval networks (labels must
/// be unions of p, cap, p-) and the subset recurrence on RCC-8 networks.
inline RunReport run_solver(const Network& q, const SolveOptions& opt, std::string id = "") {
  RunReport rep;
  rep.instance = std::move(id);
  rep.calculus = q.language().id();
  rep.n = q.size();
  rep.mode = opt.mode;
  const auto t0 = std::chrono::steady_clock::now();
  if (detail::is_ia(q)) {
    if (opt.mode == SolveMode::Dp) {
      if (!detail::is_a3_network(q))
        throw MalformedLabel("dp mode decides interval networks over {p, cap, p-} only; use --mode oracle");
      auto r = a3::solve_a3(q);
      rep.sat = r.sat;
      rep.peak_states = r.enqueued;
      if (r.sat) rep.model = std::move(r.model);
    } else {
      auto r = oracle_ia(q);
      rep.sat = r.sat;
      if (r.sat) rep.model = std::move(r.model);
    }
    if (rep.model) {
      if (!ia_model_satisfies(q, *rep.model)) throw Error("internal error: interval model failed validation");
      rep.certificate = ia_network_of(ia13_language(), q.vars(), *rep.model);
    }
  } else {
    if (opt.mode == SolveMode::Dp) {
      rcc::Rcc8Options o;
      o.prune = opt.prune;
      auto r = rcc::solve_rcc8(q, o);
      rep.sat = r.sat;
      rep.peak_states = r.peak_states;
      rep.stats = std::move(r.stats);
      rep.certificate = std::move(r.certificate);
    } else {
      auto r = oracle_rcc8(q);
      rep.sat = r.sat;
      rep.certificate = std::move(r.scenario);
    }
    if (rep.certificate) detail::check_certificate(q, *rep.certificate);
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

struct BenchEntry {
  std::string id;
  Network network;
};

/// Suite file lines: `file <path>`, a bare path, or
/// `gen <calculus> <n> <density> <seed> [count] [label_size]`
/// (label_size 0 or absent: uniform nonempty labels).
inline std::vector<BenchEntry> load_suite(std::istream& in) {
  std::vector<BenchEntry> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;
    std::istringstream ls{std::string(s)};
    std::string kind;
    ls >> kind;
    if (kind == "gen") {
      GenSpec g;
      std::size_t count = 1, k = 0;
      if (!(ls >> g.calculus >> g.n >> g.density >> g.seed)) throw ParseError(line, "expected 'gen <calculus> <n> <density> <seed> [count] [label_size]'");
      ls >> count;
      if (ls >> k && k > 0) {
        g.dist = LabelDist::FixedSize;
        g.label_size = k;
      }
      for (std::size_t c = 0; c < count; ++c) {
        GenSpec gi = g;
        gi.seed = g.seed + c;
        std::ostringstream id;
        id << "gen:" << g.calculus << ":n" << g.n << ":d" << g.density << ":s" << gi.seed;
        out.push_back({id.str(), gen_random(gi)});
      }
    } else {
      std::string path = kind == "file" ? "" : kind;
      if (kind == "file" && !(ls >> path)) throw ParseError(line, "expected 'file <path>'");
      std::ifstream f(path);
      if (!f) throw ParseError(line, "cannot open '" + path + "'");
      out.push_back({path, parse_qcn(f)});
    }
  }
  return out;
}

inline std::string bench_header() {
  return "instance,calculus,n,mode,answer,wall_ms,peak_states,max_states_by_card,error\n";
}

/// One CSV row per (entry, mode). A failing row records its error and the
/// run continues.
inline std::string bench_csv(const std::vector<BenchEntry>& suite, const std::vector<SolveMode>& modes,
                             rcc::PruneMode prune = rcc::PruneMode::Full) {
  std::ostringstream out;
  out << bench_header();
  for (const auto& e : suite)
    for (auto m : modes) {
      out << e.id << ',' << e.network.language().id() << ',' << e.network.size() << ',' << to_string(m) << ',';
      try {
        auto r = run_solver(e.network, {m, prune}, e.id);
        std::string by_card;
        for (const auto& s : r.stats) {
          if (!by_card.empty()) by_card += ';';
          by_card += std::to_string(s.max_states);
        }
        out << (r.sat ? "SAT" : "UNSAT") << ',' << r.wall_ms << ',' << r.peak_states << ',' << by_card << ",\n";
      } catch (const std::exception& ex) {
        std::string msg = ex.what();
        for (auto& c : msg)
          if (c == ',' || c == '\n') c = ' ';
        out << "ERROR,,,," << msg << '\n';
      }
    }
  return out.str();
}

}  // namespace qcr
