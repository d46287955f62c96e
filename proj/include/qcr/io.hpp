#pragma once

// Text formats and the random instance generator.
//
// QCN files:
//   # comment
//   calculus rcc8
//   vars x y z
//   x {TPP,NTPP} y
//
// Graph files (sandwich instances), vertices 0-based:
//   4
//   E1 0 1
//   E2 1 2

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qcr/network.hpp"
#include "qcr/sandwich.hpp"

namespace qcr {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

/// Parses `{a,b,...}` against a language's atom names; `∩` reads as `cap`.
inline RelSet parse_label(const Language& lang, std::string_view text, std::size_t line) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') throw ParseError(line, "expected {R1,R2,...}");
  text = trim(text.substr(1, text.size() - 2));
  RelSet out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    if (item.empty()) throw ParseError(line, "empty relation name in label");
    if (item == "∩") item = "cap";
    const auto atom = lang.find_atom(item);
    if (!atom) throw UnknownRelation(std::string(item));
    out |= *atom;
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (trim(text).empty()) throw ParseError(line, "trailing comma in label");
  }
  return out;
}

}  // namespace detail

inline Network parse_qcn(std::istream& in) {
  std::shared_ptr<const Language> lang;
  std::optional<std::vector<std::string>> vars;
  std::vector<Constraint> cs;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;
    const auto brace = s.find('{');
    if (brace == std::string_view::npos) {
      std::istringstream ls{std::string(s)};
      std::string key;
      ls >> key;
      if (key == "calculus") {
        std::string id, extra;
        if (!(ls >> id) || (ls >> extra)) throw ParseError(line, "expected 'calculus <id>'");
        if (lang) throw ParseError(line, "duplicate calculus line");
        lang = language(id);
      } else if (key == "vars") {
        if (!lang) throw ParseError(line, "'vars' before 'calculus'");
        if (vars) throw ParseError(line, "duplicate vars line");
        vars.emplace();
        for (std::string v; ls >> v;) {
          if (std::find(vars->begin(), vars->end(), v) != vars->end())
            throw ParseError(line, "duplicate variable '" + v + "'");
          vars->push_back(v);
        }
      } else {
        throw ParseError(line, "unrecognised line");
      }
      continue;
    }
    if (!lang || !vars) throw ParseError(line, "constraint before 'calculus' and 'vars'");
    const auto close = s.find('}', brace);
    if (close == std::string_view::npos) throw ParseError(line, "unterminated label");
    const auto x = detail::trim(s.substr(0, brace));
    const auto y = detail::trim(s.substr(close + 1));
    if (x.empty() || y.empty() || x.find_first_of(" \t") != std::string_view::npos ||
        y.find_first_of(" \t") != std::string_view::npos)
      throw ParseError(line, "expected 'x {R1,...} y'");
    const RelSet rel = detail::parse_label(*lang, s.substr(brace, close - brace + 1), line);
    for (auto v : {x, y})
      if (std::find(vars->begin(), vars->end(), v) == vars->end())
        throw ParseError(line, "unknown variable '" + std::string(v) + "'");
    if (x == y) throw ParseError(line, "constraint between a variable and itself");
    cs.push_back({std::string(x), rel, std::string(y)});
  }
  if (!lang) throw ParseError(line, "missing 'calculus' line");
  if (!vars) throw ParseError(line, "missing 'vars' line");
  return build_qcn(lang, *vars, cs);
}

inline Network parse_qcn(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_qcn(in);
}

/// Writes q in the QCN file format, one line per constrained pair i < j.
/// Labels that are not unions of the language's atoms are written in the base
/// calculus (the file then declares ia13 or rcc8).
inline std::string emit_qcn(const Network& q) {
  const Language* lang = &q.language();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      if (!lang->expressible(q.label(i, j)))
        lang = &q.calculus() == ia13().get() ? ia13_language().get() : rcc8_language().get();
  std::ostringstream out;
  out << "calculus " << lang->id() << "\nvars";
  for (const auto& v : q.vars()) out << ' ' << v;
  out << '\n';
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      if (q.constrained(i, j)) out << q.vars()[i] << ' ' << lang->format(q.label(i, j)) << ' ' << q.vars()[j] << '\n';
  return out.str();
}

inline SandwichInput parse_graph(std::istream& in) {
  SandwichInput g;
  bool have_n = false;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;
    std::istringstream ls{std::string(s)};
    if (!have_n) {
      long long n;
      std::string extra;
      if (!(ls >> n) || n < 0 || (ls >> extra)) throw ParseError(line, "expected the vertex count");
      g.n = static_cast<std::size_t>(n);
      have_n = true;
      continue;
    }
    std::string kind, extra;
    long long u, v;
    if (!(ls >> kind >> u >> v) || (ls >> extra) || (kind != "E1" && kind != "E2"))
      throw ParseError(line, "expected 'E1 u v' or 'E2 u v'");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= g.n || static_cast<std::size_t>(v) >= g.n)
      throw ParseError(line, "vertex out of range");
    if (u == v) throw ParseError(line, "self-loop");
    (kind == "E1" ? g.forced : g.optional).emplace_back(u, v);
  }
  if (!have_n) throw ParseError(line, "missing vertex count");
  validate(g);
  return g;
}

inline SandwichInput parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline std::string emit_graph(const SandwichInput& g) {
  std::ostringstream out;
  out << g.n << '\n';
  for (auto [u, v] : g.forced) out << "E1 " << u << ' ' << v << '\n';
  for (auto [u, v] : g.optional) out << "E2 " << u << ' ' << v << '\n';
  return out.str();
}

enum class LabelDist {
  /// Uniform over nonempty unions of the language's atoms.
  UniformNonempty,
  /// Exactly `label_size` distinct atoms, chosen uniformly.
  FixedSize,
};

struct GenSpec {
  std::string calculus = "rcc8";
  std::size_t n = 5;
  double density = 0.5;
  LabelDist dist = LabelDist::UniformNonempty;
  std::size_t label_size = 1;
  std::uint64_t seed = 1;
};

/// Each unordered pair is constrained with probability `density`; all draws
/// come from one mt19937_64 stream, so a spec always yields the same network.
inline Network gen_random(const GenSpec& spec) {
  if (spec.density < 0.0 || spec.density > 1.0) throw Error("density must lie in [0, 1]");
  const auto& lang = language(spec.calculus);
  const std::size_t atoms = lang->atoms().size();
  if (spec.dist == LabelDist::FixedSize && (spec.label_size == 0 || spec.label_size > atoms))
    throw Error("label size must lie in [1, " + std::to_string(atoms) + "]");
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Network q = Network::unconstrained(lang, spec.n);
  for (std::size_t i = 0; i < spec.n; ++i)
    for (std::size_t j = i + 1; j < spec.n; ++j) {
      if (!(coin(rng) < spec.density)) continue;
      RelSet label;
      if (spec.dist == LabelDist::UniformNonempty) {
        std::uniform_int_distribution<std::uint32_t> pick(1, (1u << atoms) - 1);
        const auto mask = pick(rng);
        for (std::size_t a = 0; a < atoms; ++a)
          if ((mask >> a) & 1u) label |= lang->atoms()[a].set;
      } else {
        std::vector<std::size_t> idx(atoms);
        for (std::size_t a = 0; a < atoms; ++a) idx[a] = a;
        for (std::size_t k = 0; k < spec.label_size; ++k) {
          std::uniform_int_distribution<std::size_t> pick(k, atoms - 1);
          std::swap(idx[k], idx[pick(rng)]);
          label |= lang->atoms()[idx[k]].set;
        }
      }
      q.set_label(i, j, label);
    }
  return q;
}

/// Random sandwich instance: each pair is forced, optional or absent with the
/// given probabilities.
inline SandwichInput gen_graph(std::size_t n, double p_forced, double p_optional, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  SandwichInput g;
  g.n = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double u = coin(rng);
      if (u < p_forced) g.forced.emplace_back(i, j);
      else if (u < p_forced + p_optional) g.optional.emplace_back(i, j);
    }
  return g;
}

}  // namespace qcr
