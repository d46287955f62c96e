#pragma once

// Interval graph sandwich problem on top of the A3 solver.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qcr/ia_solver.hpp"
#include "qcr/sandwich.hpp"

namespace qcr {

struct IgspResult {
  bool sat = false;
  std::vector<IntervalCoords> model;
  /// Pairs whose intervals intersect in the model (i < j), when sat.
  std::vector<Edge> realized;
  std::size_t enqueued = 0;
};

inline std::vector<Edge> intersecting_pairs(const std::vector<IntervalCoords>& model) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < model.size(); ++i)
    for (std::size_t j = i + 1; j < model.size(); ++j)
      if (ia::cap().contains(ia_relation_of(model[i], model[j]))) out.emplace_back(i, j);
  return out;
}

inline IgspResult solve_igsp(const SandwichInput& g) {
  auto r = a3::solve_a3(encode_igsp(g));
  IgspResult out;
  out.sat = r.sat;
  out.enqueued = r.enqueued;
  if (r.sat) {
    out.model = std::move(r.model);
    out.realized = intersecting_pairs(out.model);
  }
  return out;
}

}  // namespace qcr
