#pragma once

// Endpoint semantics of Allen's interval relations.

#include <memory>
#include <string>
#include <vector>

#include "qcr/network.hpp"

namespace qcr {

/// Endpoint coordinates of one interval; lo < hi.
struct IntervalCoords {
  long lo;
  long hi;
  bool operator==(const IntervalCoords&) const = default;
};

/// Decodes the IA-13 basic holding between two intervals from their endpoints
/// (basic order `p m o s f d e d- f- s- o- m- p-`).
inline Basic ia_relation_of(IntervalCoords x, IntervalCoords y) {
  const auto [a, b] = x;
  const auto [c, d] = y;
  enum : Basic { P, M, O, S, F, D, E, DI, FI, SI, OI, MI, PI };
  if (b < c) return P;
  if (b == c) return M;
  if (d < a) return PI;
  if (d == a) return MI;
  if (a == c && b == d) return E;
  if (a == c) return b < d ? S : SI;
  if (b == d) return a > c ? F : FI;
  if (a > c && b < d) return D;
  if (a < c && b > d) return DI;
  return a < c ? O : OI;
}

/// The atomic IA-13 network realised by a list of intervals.
inline Network ia_network_of(std::shared_ptr<const Language> lang, const std::vector<std::string>& vars,
                             const std::vector<IntervalCoords>& iv) {
  Network q(std::move(lang), vars);
  for (std::size_t i = 0; i < iv.size(); ++i)
    for (std::size_t j = i + 1; j < iv.size(); ++j) q.set_label(i, j, RelSet::of(ia_relation_of(iv[i], iv[j])));
  return q;
}

/// True iff the intervals satisfy every label of q.
inline bool ia_model_satisfies(const Network& q, const std::vector<IntervalCoords>& iv) {
  if (iv.size() != q.size()) return false;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    if (iv[i].lo >= iv[i].hi) return false;
    for (std::size_t j = i + 1; j < iv.size(); ++j)
      if (!q.label(i, j).contains(ia_relation_of(iv[i], iv[j]))) return false;
  }
  return true;
}

}  // namespace qcr
