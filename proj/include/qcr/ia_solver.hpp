#pragma once

// Endpoint 2-partition dynamic program for networks over {p, cap, p-}.
//
// A state splits the 2n endpoints into a placed prefix and the remaining
// ones. Endpoints move from remaining to placed one at a time; the relations
// forced so far (sigma) travel with the state. Only the first sequence found
// for each placed set is kept, which bounds the search by 4^n states.

#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_set>
#include <variant>
#include <vector>

#include "qcr/interval.hpp"
#include "qcr/network.hpp"

namespace qcr::a3 {

enum class Side : std::uint8_t { Start = 0, End = 1 };

struct EndpointId {
  std::uint32_t interval;
  Side side;

  static EndpointId from_index(std::size_t idx) {
    return {static_cast<std::uint32_t>(idx / 2), static_cast<Side>(idx % 2)};
  }
  std::size_t index() const { return 2 * interval + static_cast<std::size_t>(side); }
  bool operator==(const EndpointId&) const = default;
};

/// A3 relation value of sigma; Undefined means "not forced yet".
enum class Rel : std::uint8_t { Undefined = 0, P = 1, Cap = 2, PInv = 3 };

inline Rel inverse(Rel r) {
  switch (r) {
    case Rel::P: return Rel::PInv;
    case Rel::PInv: return Rel::P;
    default: return r;
  }
}

/// Partial instantiation over interval pairs, two bits per unordered pair.
class Sigma {
 public:
  Sigma() = default;
  explicit Sigma(std::size_t n) : n_(n), words_((n * (n - (n > 0)) / 2 * 2 + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  Rel get(std::size_t x, std::size_t y) const {
    if (x == y) return Rel::Undefined;
    if (x < y) return raw(slot(x, y));
    return inverse(raw(slot(y, x)));
  }

  void set(std::size_t x, std::size_t y, Rel r) {
    if (x < y) put(slot(x, y), r);
    else put(slot(y, x), inverse(r));
  }

  bool operator==(const Sigma&) const = default;

 private:
  std::size_t slot(std::size_t x, std::size_t y) const { return x * n_ - x * (x + 1) / 2 + (y - x - 1); }
  Rel raw(std::size_t s) const { return static_cast<Rel>((words_[s / 32] >> (2 * (s % 32))) & 3u); }
  void put(std::size_t s, Rel r) {
    auto& w = words_[s / 32];
    const auto shift = 2 * (s % 32);
    w = (w & ~(std::uint64_t{3} << shift)) | (std::uint64_t{static_cast<std::uint8_t>(r)} << shift);
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// (V_<, V_>) with its sigma. `placed` is a bit mask over endpoint indices
/// (2 * interval + side); remaining is its complement.
struct EndpointState {
  std::size_t intervals = 0;
  std::uint64_t placed = 0;
  Sigma sigma;

  static EndpointState initial(std::size_t n) { return {n, 0, Sigma(n)}; }

  std::uint64_t all() const { return intervals * 2 == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * intervals)) - 1; }
  std::uint64_t remaining() const { return all() & ~placed; }
  bool is_placed(EndpointId e) const { return (placed >> e.index()) & 1u; }
  bool is_open(std::size_t x) const {
    return is_placed({static_cast<std::uint32_t>(x), Side::Start}) && !is_placed({static_cast<std::uint32_t>(x), Side::End});
  }
  bool complete() const { return placed == all(); }

  /// Every placed end point has its start placed too.
  bool well_formed() const {
    for (std::size_t x = 0; x < intervals; ++x)
      if (is_placed({static_cast<std::uint32_t>(x), Side::End}) && !is_placed({static_cast<std::uint32_t>(x), Side::Start}))
        return false;
    return true;
  }
};

struct Conflict {
  enum class Reason { EndBeforeStart, Overwrite };
  Reason reason;
};

/// Moves endpoint x from remaining to placed and extends sigma with the
/// relations this forces. Fails when x closes an interval that never opened,
/// or when a forced relation contradicts one already in sigma.
inline std::variant<EndpointState, Conflict> extend_sigma(const EndpointState& s, EndpointId x) {
  const std::size_t xi = x.interval;
  if (x.side == Side::End && !s.is_placed({x.interval, Side::Start})) return Conflict{Conflict::Reason::EndBeforeStart};
  EndpointState next = s;
  next.placed |= std::uint64_t{1} << x.index();
  auto assign = [&](std::size_t a, std::size_t b, Rel r) {
    Rel cur = next.sigma.get(a, b);
    if (cur != Rel::Undefined && cur != r) return false;
    next.sigma.set(a, b, r);
    return true;
  };
  for (std::size_t y = 0; y < s.intervals; ++y) {
    if (y == xi) continue;
    const bool y_start = s.is_placed({static_cast<std::uint32_t>(y), Side::Start});
    const bool y_end = s.is_placed({static_cast<std::uint32_t>(y), Side::End});
    bool ok = true;
    if (x.side == Side::Start) {
      if (y_end) ok = assign(y, xi, Rel::P);  // y closed before x opens
    } else {
      if (!y_start) ok = assign(xi, y, Rel::P);  // x closes before y opens
    }
    if (ok && y_start && !y_end) ok = assign(xi, y, Rel::Cap);  // y is open
    if (!ok) return Conflict{Conflict::Reason::Overwrite};
  }
  return next;
}

namespace detail {

/// Allowed A3 values per pair as a 4-bit mask indexed by Rel.
class AllowedTable {
 public:
  explicit AllowedTable(const Network& q) : n_(q.size()), bits_(n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        const RelSet l = q.label(i, j);
        std::uint8_t m = 1;  // Undefined always passes
        if (l.intersects(ia::p())) m |= 1u << static_cast<int>(Rel::P);
        if (l.intersects(ia::cap())) m |= 1u << static_cast<int>(Rel::Cap);
        if (l.intersects(ia::p_inv())) m |= 1u << static_cast<int>(Rel::PInv);
        bits_[i * n_ + j] = m;
      }
  }
  bool allows(std::size_t i, std::size_t j, Rel r) const {
    return (bits_[i * n_ + j] >> static_cast<int>(r)) & 1u;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

inline void require_a3(const Network& q) {
  if (&q.calculus() != ia13().get()) throw MalformedLabel("network is not over the interval algebra");
  const auto& a3 = *ia3_language();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      if (!a3.expressible(q.label(i, j)))
        throw MalformedLabel("label " + q.calculus().format(q.label(i, j)) + " on (" + q.vars()[i] + "," +
                             q.vars()[j] + ") is not a union of p, cap, p-");
}

}  // namespace detail

/// True iff every relation sigma has fixed is allowed by q.
inline bool state_consistent(const EndpointState& s, const Network& q) {
  detail::AllowedTable allowed(q);
  for (std::size_t x = 0; x < s.intervals; ++x)
    for (std::size_t y = 0; y < s.intervals; ++y)
      if (x != y && !allowed.allows(x, y, s.sigma.get(x, y))) return false;
  return true;
}

struct A3Result {
  bool sat = false;
  /// Placement order of all 2n endpoints, when sat.
  std::vector<EndpointId> order;
  /// Interval model: the i-th placed endpoint sits at coordinate i.
  std::vector<IntervalCoords> model;
  /// Number of 2-partitions ever enqueued, including the initial one.
  std::size_t enqueued = 0;
};

namespace detail {

class VisitedSet {
 public:
  explicit VisitedSet(std::size_t endpoints) {
    if (endpoints <= 28) dense_.assign(std::size_t{1} << endpoints, false);
  }
  /// Returns true if key was not present.
  bool insert(std::uint64_t key) {
    if (!dense_.empty()) {
      if (dense_[key]) return false;
      dense_[key] = true;
      return true;
    }
    return sparse_.insert(key).second;
  }

 private:
  std::vector<bool> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

}  // namespace detail

/// Decides q by breadth-first search over endpoint 2-partitions. Endpoints
/// are tried in fixed index order, so certificates are deterministic.
inline A3Result solve_a3(const Network& q) {
  detail::require_a3(q);
  const std::size_t n = q.size();
  if (n > 32) throw Error("solve_a3: at most 32 intervals are supported");
  A3Result result;
  if (q.has_empty_label()) return result;
  detail::AllowedTable allowed(q);

  struct Node {
    std::uint64_t placed;
    std::uint32_t parent;
    std::uint8_t endpoint;
  };
  std::vector<Node> nodes;
  std::deque<std::pair<std::uint32_t, Sigma>> queue;
  detail::VisitedSet visited(2 * n);

  auto start = EndpointState::initial(n);
  visited.insert(0);
  nodes.push_back({0, 0, 0});
  queue.emplace_back(0, start.sigma);

  std::optional<std::uint32_t> goal;
  while (!queue.empty()) {
    auto [idx, sigma] = std::move(queue.front());
    queue.pop_front();
    EndpointState s{n, nodes[idx].placed, std::move(sigma)};
    if (s.complete()) {
      goal = idx;
      break;
    }
    for (std::size_t e = 0; e < 2 * n; ++e) {
      if ((s.placed >> e) & 1u) continue;
      const auto x = EndpointId::from_index(e);
      const std::uint64_t key = s.placed | (std::uint64_t{1} << e);
      // Cheap rejections first; the visited check matches "s' not in M".
      if (x.side == Side::End && !s.is_placed({x.interval, Side::Start})) continue;
      auto ext = extend_sigma(s, x);
      if (std::holds_alternative<Conflict>(ext)) continue;
      auto& next = std::get<EndpointState>(ext);
      bool ok = true;
      for (std::size_t y = 0; y < n && ok; ++y)
        if (y != x.interval) ok = allowed.allows(x.interval, y, next.sigma.get(x.interval, y));
      if (!ok) continue;
      if (!visited.insert(key)) continue;
      nodes.push_back({key, idx, static_cast<std::uint8_t>(e)});
      queue.emplace_back(static_cast<std::uint32_t>(nodes.size() - 1), std::move(next.sigma));
    }
  }
  result.enqueued = nodes.size();
  if (!goal) return result;

  result.sat = true;
  std::vector<EndpointId> rev;
  for (std::uint32_t i = *goal; i != 0; i = nodes[i].parent) rev.push_back(EndpointId::from_index(nodes[i].endpoint));
  result.order.assign(rev.rbegin(), rev.rend());
  result.model.assign(n, {0, 0});
  for (std::size_t pos = 0; pos < result.order.size(); ++pos) {
    const auto e = result.order[pos];
    auto& iv = result.model[e.interval];
    (e.side == Side::Start ? iv.lo : iv.hi) = static_cast<long>(pos);
  }
  return result;
}

}  // namespace qcr::a3
