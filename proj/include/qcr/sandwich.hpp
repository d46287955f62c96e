#pragma once

// Interval graph sandwich instances and their encoding as A3 networks.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qcr/network.hpp"

namespace qcr {

using Edge = std::pair<std::size_t, std::size_t>;

/// Forced edges E1 and optional edges E2 over vertices 0..n-1.
struct SandwichInput {
  std::size_t n = 0;
  std::vector<Edge> forced;
  std::vector<Edge> optional;
};

inline Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

inline void validate(const SandwichInput& g) {
  std::set<Edge> forced;
  for (auto e : g.forced) {
    if (e.first == e.second) throw Error("self-loop on vertex " + std::to_string(e.first));
    if (e.first >= g.n || e.second >= g.n) throw Error("edge endpoint out of range");
    forced.insert(normalized(e));
  }
  for (auto e : g.optional) {
    if (e.first == e.second) throw Error("self-loop on vertex " + std::to_string(e.first));
    if (e.first >= g.n || e.second >= g.n) throw Error("edge endpoint out of range");
    if (forced.count(normalized(e)))
      throw OverlappingEdgeSets("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                " is both forced and optional");
  }
}

/// Forced pairs get {cap}, optional pairs stay unconstrained, all other pairs
/// get {p, p-}. Vertices are named by their index.
inline Network encode_igsp(const SandwichInput& g) {
  validate(g);
  std::vector<std::string> vars;
  for (std::size_t v = 0; v < g.n; ++v) vars.push_back(std::to_string(v));
  Network q(ia3_language(), std::move(vars));
  const RelSet apart = ia::p() | ia::p_inv();
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = i + 1; j < g.n; ++j) q.set_label(i, j, apart);
  for (auto e : g.forced) q.set_label(e.first, e.second, ia::cap());
  for (auto e : g.optional) q.set_label(e.first, e.second, q.calculus().full());
  return q;
}

}  // namespace qcr
