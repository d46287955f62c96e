#pragma once

// Brute-force satisfiability deciders. They share nothing with the dynamic
// programming solvers beyond the composition tables and exist to be trusted:
// slow, exhaustive and simple.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcr/interval.hpp"
#include "qcr/network.hpp"
#include "qcr/sandwich.hpp"

namespace qcr {

struct OracleBudget {
  std::size_t max_vars = 7;
  std::uint64_t max_refinements = 200'000'000;

  static constexpr std::size_t kDefaultIaVars = 7;
  static constexpr std::size_t kDefaultRccVars = 6;

  /// Defaults, overridden by QCR_ORACLE_MAX_VARS / QCR_ORACLE_MAX_REFINEMENTS.
  static OracleBudget from_env(std::size_t default_vars) {
    OracleBudget b;
    b.max_vars = default_vars;
    if (const char* v = std::getenv("QCR_ORACLE_MAX_VARS")) b.max_vars = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("QCR_ORACLE_MAX_REFINEMENTS"))
      b.max_refinements = std::strtoull(v, nullptr, 10);
    return b;
  }
  static OracleBudget ia() { return from_env(kDefaultIaVars); }
  static OracleBudget rcc() { return from_env(kDefaultRccVars); }
};

struct IaOracleResult {
  bool sat = false;
  std::vector<IntervalCoords> model;  // 0-based endpoint ranks, when sat
};

namespace detail {

/// Places intervals one at a time in every position relative to the distinct
/// endpoint values seen so far. Each distinct endpoint preorder is produced
/// exactly once. `visit` returns false to stop the enumeration.
class EndpointEnumerator {
 public:
  EndpointEnumerator(const Network& q, bool distinct, std::uint64_t budget)
      : q_(q), distinct_(distinct), budget_(budget) {}

  /// Returns false if the enumeration was stopped by `visit`.
  bool run(const std::function<bool(const std::vector<IntervalCoords>&)>& visit) {
    visit_ = &visit;
    placed_.clear();
    return place(0);
  }

 private:
  bool place(std::size_t k) {
    if (k == q_.size()) return (*visit_)(placed_);
    if (++nodes_ > budget_) throw BudgetExceeded("oracle_ia: enumeration budget exhausted");
    // Current points have ranks 0..m-1; scale by 4 so new points fit in gaps.
    const long m = static_cast<long>(distinct_points());
    const long slots = 2 * m + 1;  // even: gap before point s/2, odd: on point
    for (long a = 0; a < slots; ++a) {
      if (distinct_ && (a % 2)) continue;
      for (long b = a; b < slots; ++b) {
        if (distinct_ && (b % 2)) continue;
        if (a == b && (a % 2)) continue;  // both on the same point
        long lo, hi;
        if (a == b) {
          lo = 4 * (a / 2) - 3;
          hi = 4 * (a / 2) - 1;
        } else {
          lo = (a % 2) ? 4 * (a / 2) : 4 * (a / 2) - 2;
          hi = (b % 2) ? 4 * (b / 2) : 4 * (b / 2) - 2;
        }
        IntervalCoords cand{lo, hi};
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
          IntervalCoords scaled{4 * placed_[i].lo, 4 * placed_[i].hi};
          ok = q_.label(i, k).contains(ia_relation_of(scaled, cand));
        }
        if (!ok) continue;
        auto saved = placed_;
        for (auto& iv : placed_) iv = {4 * iv.lo, 4 * iv.hi};
        placed_.push_back(cand);
        compress();
        bool keep_going = place(k + 1);
        placed_ = std::move(saved);
        if (!keep_going) return false;
      }
    }
    return true;
  }

  std::size_t distinct_points() const {
    std::vector<long> pts;
    for (auto iv : placed_) {
      pts.push_back(iv.lo);
      pts.push_back(iv.hi);
    }
    std::sort(pts.begin(), pts.end());
    return static_cast<std::size_t>(std::unique(pts.begin(), pts.end()) - pts.begin());
  }

  void compress() {
    std::vector<long> pts;
    for (auto iv : placed_) {
      pts.push_back(iv.lo);
      pts.push_back(iv.hi);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto rank = [&](long v) { return static_cast<long>(std::lower_bound(pts.begin(), pts.end(), v) - pts.begin()); };
    for (auto& iv : placed_) iv = {rank(iv.lo), rank(iv.hi)};
  }

  const Network& q_;
  bool distinct_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<IntervalCoords> placed_;
  const std::function<bool(const std::vector<IntervalCoords>&)>* visit_ = nullptr;
};

inline bool is_a3_network(const Network& q) {
  if (&q.calculus() != ia13().get()) return false;
  const auto& a3 = *ia3_language();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      if (!a3.expressible(q.label(i, j))) return false;
  return true;
}

inline void check_ia_input(const Network& q, const OracleBudget& budget) {
  if (&q.calculus() != ia13().get()) throw Error("oracle_ia: network is not over the interval algebra");
  if (q.size() > budget.max_vars)
    throw BudgetExceeded("oracle_ia: " + std::to_string(q.size()) + " variables exceed the budget of " +
                         std::to_string(budget.max_vars));
}

}  // namespace detail

/// Calls `visit` with every endpoint configuration (as 0-based ranks)
/// satisfying q. A3 networks use pairwise distinct endpoints; every other IA
/// network ranges over all endpoint preorders. `visit` returns false to stop.
inline void for_each_ia_model(const Network& q, const std::function<bool(const std::vector<IntervalCoords>&)>& visit,
                              const OracleBudget& budget = OracleBudget::ia()) {
  detail::check_ia_input(q, budget);
  if (q.has_empty_label()) return;
  detail::EndpointEnumerator e(q, detail::is_a3_network(q), budget.max_refinements);
  e.run(visit);
}

/// Decides an interval network by endpoint-order enumeration.
inline IaOracleResult oracle_ia(const Network& q, const OracleBudget& budget = OracleBudget::ia()) {
  detail::check_ia_input(q, budget);
  IaOracleResult res;
  if (q.has_empty_label()) return res;
  // Closure is sound, so an inconsistency found here is a definite UNSAT.
  Network closed = q;
  if (!close_in_place(closed)) return res;
  for_each_ia_model(
      q,
      [&](const std::vector<IntervalCoords>& iv) {
        res.sat = true;
        res.model = iv;
        return false;
      },
      budget);
  return res;
}

struct RccOracleResult {
  bool sat = false;
  std::optional<Network> scenario;  // atomic, closed refinement when sat
};

namespace detail {

inline void check_rcc_input(const Network& q, const OracleBudget& budget) {
  if (q.size() > budget.max_vars)
    throw BudgetExceeded("oracle_rcc8: " + std::to_string(q.size()) + " variables exceed the budget of " +
                         std::to_string(budget.max_vars));
}

template <typename Visit>
bool refine_search(Network q, std::uint64_t& nodes, std::uint64_t budget, Visit& visit) {
  if (++nodes > budget) throw BudgetExceeded("oracle_rcc8: search budget exhausted");
  if (!close_in_place(q)) return true;
  std::size_t bi = 0, bj = 0;
  int best = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      int s = q.label(i, j).size();
      if (s > 1 && (best == 0 || s < best)) {
        best = s;
        bi = i;
        bj = j;
      }
    }
  if (best == 0) return visit(q);
  for (Basic b : q.label(bi, bj)) {
    Network next = q;
    next.set_label(bi, bj, RelSet::of(b));
    if (!refine_search(std::move(next), nodes, budget, visit)) return false;
  }
  return true;
}

}  // namespace detail

/// Calls `visit` with every atomic, algebraically closed refinement of q.
/// Backtracks over labels with closure as forward pruning; `visit` returns
/// false to stop.
template <typename Visit>
void for_each_closed_scenario(const Network& q, Visit&& visit, const OracleBudget& budget = OracleBudget::rcc()) {
  detail::check_rcc_input(q, budget);
  if (q.has_empty_label()) return;
  std::uint64_t nodes = 0;
  detail::refine_search(q, nodes, budget.max_refinements, visit);
}

/// Decides an RCC-8 network: SAT iff some atomic refinement is closed.
inline RccOracleResult oracle_rcc8(const Network& q, const OracleBudget& budget = OracleBudget::rcc()) {
  RccOracleResult res;
  for_each_closed_scenario(
      q,
      [&](const Network& s) {
        res.sat = true;
        res.scenario = s;
        return false;
      },
      budget);
  return res;
}

/// Reference variant without pruning: tests every atomic refinement. The
/// product of label sizes must stay within budget.max_refinements.
inline bool oracle_rcc8_naive(const Network& q, const OracleBudget& budget = OracleBudget::rcc()) {
  detail::check_rcc_input(q, budget);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      pairs.emplace_back(i, j);
      product *= static_cast<std::uint64_t>(q.label(i, j).size());
      if (product > budget.max_refinements) throw BudgetExceeded("oracle_rcc8_naive: too many refinements");
    }
  if (product == 0) return false;
  Network s = q;
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == pairs.size()) return atomic_closed(s);
    auto [i, j] = pairs[k];
    for (Basic b : q.label(i, j)) {
      s.set_label(i, j, RelSet::of(b));
      if (rec(k + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

/// Decides a sandwich instance by endpoint enumeration on its A3 encoding.
inline bool oracle_igsp(const SandwichInput& g, const OracleBudget& budget = OracleBudget::ia()) {
  return oracle_ia(encode_igsp(g), budget).sat;
}

}  // namespace qcr
