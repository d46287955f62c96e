#pragma once

// Fixtures and seeded generators shared by the test binaries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcr/io.hpp"
#include "qcr/network.hpp"

namespace qcr::fx {

inline RelSet R(std::initializer_list<std::string_view> names) { return rcc::basics(names); }

/// Six regions a1..a3, b1..b3: each a_i is tangentially inside or around b_i,
/// a1 contains b3, a2 contains b1, a3 contains b2, and the a's overlap.
inline Network six_regions() {
  return build_qcn(rcc8_language(), {"a1", "a2", "a3", "b1", "b2", "b3"},
                   {{"a1", R({"TPP", "TPP-"}), "b1"},
                    {"a2", R({"TPP", "TPP-"}), "b2"},
                    {"a3", R({"TPP", "TPP-"}), "b3"},
                    {"a1", R({"TPP-"}), "b3"},
                    {"a2", R({"TPP-"}), "b1"},
                    {"a3", R({"TPP-"}), "b2"},
                    {"a1", R({"PO"}), "a2"},
                    {"a2", R({"PO"}), "a3"},
                    {"a1", R({"PO"}), "a3"}});
}

/// Satisfiable six-variable network on which merging orders by equal IP sets
/// keeps a dead end: {v2} < {v5} and {v5} < {v2} get the same IPs and only
/// the second one extends.
inline Network ip_merge_counterexample() {
  return parse_qcn(
      "calculus rcc8\n"
      "vars v0 v1 v2 v3 v4 v5\n"
      "v0 {TPP,NTPP,NTPP-} v1\n"
      "v0 {NTPP,TPP-,EQ} v2\n"
      "v0 {TPP,NTPP,NTPP-,EQ} v3\n"
      "v0 {EC,TPP,NTPP,EQ} v4\n"
      "v0 {TPP,NTPP,TPP-} v5\n"
      "v1 {DC,EC,EQ} v2\n"
      "v1 {PO,NTPP,TPP-} v3\n"
      "v1 {PO,NTPP,NTPP-,EQ} v4\n"
      "v1 {DC,EC,PO} v5\n"
      "v2 {PO,NTPP,EQ} v3\n"
      "v2 {DC,TPP,TPP-,NTPP-} v4\n"
      "v2 {TPP,NTPP,TPP-,NTPP-} v5\n"
      "v3 {DC,PO,NTPP,NTPP-} v5\n"
      "v4 {DC,TPP,NTPP-} v5\n");
}

/// Random network whose labels draw `min_k`..`max_k` basics with replacement.
inline Network random_small_labels(const std::shared_ptr<const Language>& lang, std::size_t n, double density,
                                   int min_k, int max_k, std::mt19937_64& rng) {
  Network q = Network::unconstrained(lang, n);
  const auto atoms = lang->atoms().size();
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> size(min_k, max_k);
  std::uniform_int_distribution<std::size_t> pick(0, atoms - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(coin(rng) < density)) continue;
      RelSet r;
      for (int k = size(rng); k > 0; --k) r |= lang->atoms()[pick(rng)].set;
      q.set_label(i, j, r);
    }
  return q;
}

inline Network random_uniform(const std::string& calculus, std::size_t n, double density, std::uint64_t seed) {
  GenSpec g;
  g.calculus = calculus;
  g.n = n;
  g.density = density;
  g.seed = seed;
  return gen_random(g);
}

/// Calls f with every atomic refinement of q (no pruning).
template <typename F>
void for_each_atomic_refinement(const Network& q, F&& f) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) pairs.emplace_back(i, j);
  Network s = q;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == pairs.size()) {
      f(s);
      return;
    }
    auto [i, j] = pairs[k];
    for (Basic b : q.label(i, j)) {
      s.set_label(i, j, RelSet::of(b));
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace qcr::fx
