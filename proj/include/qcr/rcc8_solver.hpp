#pragma once

// Dynamic programming over variable subsets for RCC-8 networks.
//
// States are ordered partitions T of a subset V_T (blocks of equal variables,
// strictly ordered, earlier blocks never contain later ones). Each state is
// solved greedily under the order (solve_under_order) and summarised by its
// inconsistency paths: pairs of not-yet-ordered variables whose constraints
// already clash with the partial solution. Orders with fewer clashes dominate
// orders with more, which is what keeps the stored state sets small.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcr/network.hpp"

namespace qcr::rcc {

using VarMask = std::uint64_t;

/// Strictly ordered list of disjoint, nonempty blocks of variable ids.
class OrderedPartition {
 public:
  OrderedPartition() = default;
  explicit OrderedPartition(std::vector<std::vector<std::size_t>> blocks) : blocks_(std::move(blocks)) {
    for (auto& b : blocks_) {
      if (b.empty()) throw Error("ordered partition: empty block");
      std::sort(b.begin(), b.end());
      for (auto v : b) {
        if (v >= 64) throw Error("ordered partition: variable id out of range");
        if ((support_ >> v) & 1u) throw Error("ordered partition: variable in two blocks");
        support_ |= VarMask{1} << v;
      }
    }
  }

  /// One block per variable, in the given sequence.
  static OrderedPartition chain(const std::vector<std::size_t>& vars) {
    std::vector<std::vector<std::size_t>> blocks;
    for (auto v : vars) blocks.push_back({v});
    return OrderedPartition(std::move(blocks));
  }

  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  VarMask support() const { return support_; }
  bool contains(std::size_t v) const { return (support_ >> v) & 1u; }
  bool empty() const { return blocks_.empty(); }

  /// Block index of v, or -1 when v is outside the support.
  int position(std::size_t v) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (std::find(blocks_[i].begin(), blocks_[i].end(), v) != blocks_[i].end()) return static_cast<int>(i);
    return -1;
  }

  /// Block index per variable id (size n), -1 outside the support.
  std::vector<int> positions(std::size_t n) const {
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (auto v : blocks_[i]) pos.at(v) = static_cast<int>(i);
    return pos;
  }

  /// Support variables listed block by block.
  std::vector<std::size_t> linear() const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  /// T < S^= : appends `block` as a new last block.
  OrderedPartition then(const std::vector<std::size_t>& block) const {
    auto blocks = blocks_;
    blocks.push_back(block);
    return OrderedPartition(std::move(blocks));
  }

  std::string format(const std::vector<std::string>& names) const {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) out += " < ";
      out += '{';
      for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
        if (j) out += ',';
        out += names.at(blocks_[i][j]);
      }
      out += '}';
    }
    return out;
  }

  bool operator==(const OrderedPartition& o) const { return blocks_ == o.blocks_; }
  /// Lexicographic on the block sequence.
  bool operator<(const OrderedPartition& o) const { return blocks_ < o.blocks_; }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  VarMask support_ = 0;
};

inline RelSet contained_by_earlier() { return basics({"TPP-", "NTPP-", "EQ"}); }
inline RelSet contained_by_later() { return basics({"TPP", "NTPP", "EQ"}); }
inline RelSet eq() { return basics({"EQ"}); }

/// Label rule for a pair whose order positions compare as `cmp`
/// (negative: x before y, zero: same block, positive: x after y).
inline RelSet order_restricted(RelSet label, int cmp) {
  if (cmp < 0) return label.minus(contained_by_earlier());
  if (cmp > 0) return label.minus(contained_by_later());
  return label & eq();
}

namespace detail {

inline void require_rcc8(const Network& f) {
  if (&f.calculus() != rcc8().get()) throw MalformedLabel("network is not over RCC-8");
}

/// Lays out the support first; outside variables count as one trailing block
/// when `outside_after` is set and are otherwise left unplaced.
inline std::vector<int> order_positions(const OrderedPartition& t, std::size_t n, bool outside_after) {
  auto pos = t.positions(n);
  if (outside_after)
    for (auto& p : pos)
      if (p < 0) p = static_cast<int>(t.blocks().size());
  return pos;
}

}  // namespace detail

/// P o f: rewrites every pair with both ends in the support of `p` by the
/// order rule; all other pairs are left untouched.
inline Network restrict_circ(const Network& f, const OrderedPartition& p) {
  detail::require_rcc8(f);
  Network out = f;
  const auto pos = p.positions(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (pos[i] >= 0 && pos[j] >= 0) out.set_label(i, j, order_restricted(f.label(i, j), pos[i] - pos[j]));
  return out;
}

/// (T < V \ V_T) (.) f: pairs touching the support follow the order rule with
/// every outside variable after the support; pairs entirely outside the
/// support become unconstrained.
inline Network restrict_odot(const Network& f, const OrderedPartition& t) {
  detail::require_rcc8(f);
  Network out = f;
  const auto pos = t.positions(f.size());
  const int after = static_cast<int>(t.blocks().size());
  const RelSet full = f.calculus().full();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (pos[i] < 0 && pos[j] < 0) {
        out.set_label(i, j, full);
        continue;
      }
      const int pi = pos[i] < 0 ? after : pos[i];
      const int pj = pos[j] < 0 ? after : pos[j];
      out.set_label(i, j, order_restricted(f.label(i, j), pi - pj));
    }
  return out;
}

namespace detail {

/// support[r][a] = { b : the atomic triangle x-y = r, x-z = a, z-y = b is
/// closed }. Indexed by RCC-8 basics.
struct TriangleSupport {
  std::array<std::array<RelSet, 8>, 8> table{};

  TriangleSupport() {
    const Calculus& c = *rcc8();
    for (Basic r = 0; r < 8; ++r)
      for (Basic a = 0; a < 8; ++a) {
        RelSet bs;
        for (Basic b = 0; b < 8; ++b) {
          const bool ok = c.compose(a, b).contains(r) &&                   // x-y via z
                          c.compose(r, c.converse(b)).contains(a) &&       // x-z via y
                          c.compose(c.converse(a), r).contains(b);         // z-y via x
          if (ok) bs |= RelSet::of(b);
        }
        table[r][a] = bs;
      }
  }
};

inline const TriangleSupport& triangle_support() {
  static const TriangleSupport t;
  return t;
}

}  // namespace detail

/// Reduced local 3-consistency in place: drops every basic r of a label
/// g(x,y) for which some third variable z admits no closed atomic triangle.
/// Returns false (and empties every label) if some label becomes empty.
inline bool rlc3_in_place(Network& g) {
  const std::size_t n = g.size();
  const auto& sup = detail::triangle_support().table;
  auto wipe = [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) g.set_label(i, j, RelSet{});
    return false;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.label(i, j).empty()) return wipe();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        RelSet keep;
        for (Basic r : g.label(x, y)) {
          bool ok = true;
          for (std::size_t z = 0; z < n && ok; ++z) {
            if (z == x || z == y) continue;
            const RelSet zy = g.label(z, y);
            bool any = false;
            for (Basic a : g.label(x, z))
              if (sup[r][a].intersects(zy)) {
                any = true;
                break;
              }
            ok = any;
          }
          if (ok) keep |= RelSet::of(r);
        }
        if (keep != g.label(x, y)) {
          if (keep.empty()) return wipe();
          g.set_label(x, y, keep);
          changed = true;
        }
      }
  }
  return true;
}

namespace detail {

/// Is the sub-network of g on `vars` with (x, y) forced to r satisfiable?
/// Decided by atomic refinement with closure checks; |vars| is tiny.
inline bool local_satisfiable(const Network& g, const std::vector<std::size_t>& vars, std::size_t x, std::size_t y,
                              Basic r) {
  std::vector<std::string> names;
  for (auto v : vars) names.push_back(g.vars()[v]);
  Network sub(g.language_ptr(), names);
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b) {
      RelSet l = g.label(vars[a], vars[b]);
      if (vars[a] == x && vars[b] == y) l = RelSet::of(r);
      if (vars[a] == y && vars[b] == x) l = g.calculus().converse(RelSet::of(r));
      sub.set_label(a, b, l);
    }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b) pairs.emplace_back(a, b);
  Network s = sub;
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == pairs.size()) return atomic_closed(s);
    auto [a, b] = pairs[k];
    for (Basic v : sub.label(a, b)) {
      s.set_label(a, b, RelSet::of(v));
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace detail

/// RLC_k by brute force: for every subset S with |S| <= k, every pair in S and
/// every basic on that pair, keep the basic only if the sub-network over S
/// with the pair fixed to it is satisfiable. Iterates to a fixpoint. Any
/// empty label empties the whole network.
inline Network rlc(Network g, std::size_t k) {
  if (k < 2) throw Error("rlc: k must be at least 2");
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> subsets;
  for (VarMask m = 1; m < (VarMask{1} << n); ++m) {
    const auto c = static_cast<std::size_t>(std::popcount(m));
    if (c < 2 || c > k) continue;
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < n; ++v)
      if ((m >> v) & 1u) vs.push_back(v);
    subsets.push_back(std::move(vs));
  }
  auto wipe = [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) g.set_label(i, j, RelSet{});
  };
  if (g.has_empty_label()) {
    wipe();
    return g;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& s : subsets)
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
          RelSet keep;
          for (Basic r : g.label(s[a], s[b]))
            if (detail::local_satisfiable(g, s, s[a], s[b], r)) keep |= RelSet::of(r);
          if (keep != g.label(s[a], s[b])) {
            g.set_label(s[a], s[b], keep);
            changed = true;
            if (keep.empty()) {
              wipe();
              return g;
            }
          }
        }
  }
  return g;
}

/// Smallest basic of r under DC < EC < PO < TPP < NTPP; EQ when r = {EQ}.
inline Basic diamond_min(RelSet r) {
  for (Basic b : *rcc8()->diamond_sequence())
    if (r.contains(b)) return b;
  return r.lowest();
}

/// Index in the diamond sequence (0..4), or -1 for other basics.
inline int diamond_rank(Basic b) {
  const auto& seq = *rcc8()->diamond_sequence();
  for (int i = 0; i < 5; ++i)
    if (seq[static_cast<std::size_t>(i)] == b) return i;
  return -1;
}

/// Inconsistency-path set: a bit per ordered pair (head, tail) of variables.
class IPSet {
 public:
  IPSet() = default;
  explicit IPSet(std::size_t n) : n_(n), words_((n * n + 63) / 64, 0) {}

  void insert(std::size_t head, std::size_t tail) {
    const auto k = head * n_ + tail;
    words_[k / 64] |= std::uint64_t{1} << (k % 64);
  }
  bool contains(std::size_t head, std::size_t tail) const {
    const auto k = head * n_ + tail;
    return (words_[k / 64] >> (k % 64)) & 1u;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool subset_of(const IPSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t h = 0; h < n_; ++h)
      for (std::size_t t = 0; t < n_; ++t)
        if (contains(h, t)) out.emplace_back(h, t);
    return out;
  }
  bool operator==(const IPSet&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Result of solving (T < V \ V_T) (.) f under one order.
struct SolvedOrderState {
  OrderedPartition order;
  Network g;
  bool no_instance = false;
  IPSet ips;
};

/// Solves (T < V \ V_T) (.) f greedily: after RLC_3, every support pair
/// (x_j, x_i), i ascending and j descending from i-1, is fixed to its
/// diamond-minimum and RLC_3 is re-run. An empty label anywhere yields the
/// no-instance marker (every label emptied).
inline SolvedOrderState solve_under_order(const Network& f, const OrderedPartition& t) {
  SolvedOrderState st{t, restrict_odot(f, t), false, IPSet(f.size())};
  if (!rlc3_in_place(st.g)) {
    st.no_instance = true;
    return st;
  }
  const auto seq = t.linear();
  for (std::size_t i = 1; i < seq.size(); ++i)
    for (std::size_t j = i; j-- > 0;) {
      const RelSet l = st.g.label(seq[j], seq[i]);
      if (l.is_atomic()) continue;
      st.g.set_label(seq[j], seq[i], RelSet::of(diamond_min(l)));
      if (!rlc3_in_place(st.g)) {
        st.no_instance = true;
        return st;
      }
    }
  return st;
}

/// How an outside-to-outside step of an inconsistency path is labelled.
enum class OutsideEdges {
  /// f restricted as if the walk were increasing in the order (P o f).
  OrderRestricted,
  /// f as given.
  Unrestricted,
};

/// All inconsistency paths of a solved state. A pair (h, t) of outside
/// variables is an IP if some chain x_1 <_T ... <_T x_k through the support,
/// followed by a walk t = y_1, ..., y_i = h outside the support, composes
/// (right to left, from h back to x_1) to a relation set disjoint from
/// g(x_1, h).
///
/// Each chain is tracked exactly: the search runs over (variable, composed
/// set) states, of which there are at most n * 256.
inline IPSet inconsistency_paths(const Network& f, const SolvedOrderState& st,
                                 OutsideEdges policy = OutsideEdges::OrderRestricted) {
  const std::size_t n = f.size();
  IPSet ips(n);
  if (st.no_instance) return ips;
  const Calculus& c = f.calculus();
  const auto pos = st.order.positions(n);
  std::vector<std::size_t> inside, outside;
  for (std::size_t v = 0; v < n; ++v) (pos[v] >= 0 ? inside : outside).push_back(v);
  if (outside.empty() || inside.empty()) return ips;

  auto outside_label = [&](std::size_t a, std::size_t b) {
    const RelSet l = f.label(a, b);
    return policy == OutsideEdges::OrderRestricted ? order_restricted(l, -1) : l;
  };

  constexpr std::size_t kSets = 256;
  std::vector<char> seen_out(n * kSets), seen_in(n * kSets);
  for (std::size_t h : outside) {
    // Backward walk over outside variables: states (u, R(u, h)).
    std::fill(seen_out.begin(), seen_out.end(), 0);
    std::vector<std::pair<std::size_t, RelSet>> frontier{{h, c.identity_set()}};
    seen_out[h * kSets + c.identity_set().bits()] = 1;
    std::vector<std::pair<std::size_t, RelSet>> reached = frontier;
    while (!frontier.empty()) {
      std::vector<std::pair<std::size_t, RelSet>> next;
      for (auto [u, r] : frontier)
        for (std::size_t w : outside) {
          if (w == u) continue;
          // an empty set still counts: it misses every g(x_1, h)
          const RelSet nr = c.compose(outside_label(w, u), r);
          auto& s = seen_out[w * kSets + nr.bits()];
          if (s) continue;
          s = 1;
          next.emplace_back(w, nr);
          reached.emplace_back(w, nr);
        }
      frontier = std::move(next);
    }
    for (std::size_t t : outside) {
      if (ips.contains(h, t)) continue;
      // Step into the support from t, then walk down the order.
      std::fill(seen_in.begin(), seen_in.end(), 0);
      std::vector<std::pair<std::size_t, RelSet>> chain;
      for (auto [u, r] : reached) {
        if (u != t) continue;
        for (std::size_t x : inside) {
          const RelSet nr = c.compose(st.g.label(x, t), r);
          auto& s = seen_in[x * kSets + nr.bits()];
          if (s) continue;
          s = 1;
          chain.emplace_back(x, nr);
        }
      }
      bool found = false;
      while (!chain.empty() && !found) {
        std::vector<std::pair<std::size_t, RelSet>> next;
        for (auto [x, r] : chain) {
          if (!st.g.label(x, h).intersects(r)) {
            found = true;
            break;
          }
          for (std::size_t w : inside) {
            if (pos[w] >= pos[x]) continue;
            const RelSet nr = c.compose(st.g.label(w, x), r);
            auto& s = seen_in[w * kSets + nr.bits()];
            if (s) continue;
            s = 1;
            next.emplace_back(w, nr);
          }
        }
        chain = std::move(next);
      }
      if (found) ips.insert(h, t);
    }
  }
  return ips;
}

enum class OrderComparison { Less, Equivalent, Greater, Incomparable };

/// Compares two solved states over the same support by their IP sets.
inline OrderComparison compare_orders(const SolvedOrderState& a, const SolvedOrderState& b) {
  if (a.order.support() != b.order.support()) throw SupportMismatch("compare_orders: supports differ");
  if (a.ips == b.ips) return OrderComparison::Equivalent;
  if (a.ips.subset_of(b.ips)) return OrderComparison::Less;
  if (b.ips.subset_of(a.ips)) return OrderComparison::Greater;
  return OrderComparison::Incomparable;
}

enum class PruneMode {
  /// Drops no-instances, equivalent duplicates and strictly dominated orders.
  Full,
  /// Drops no-instances and equivalent duplicates only.
  Safe,
  /// Drops no-instances only. Exhaustive; used as a differential reference.
  None,
};

/// Minimal set of states: no-instances removed, and, depending on the mode,
/// one representative per IP-equivalence class (the lexicographically least
/// order) and no state strictly dominated by another input state.
inline std::vector<SolvedOrderState> prune_min(std::vector<SolvedOrderState> states, PruneMode mode = PruneMode::Full) {
  std::erase_if(states, [](const SolvedOrderState& s) { return s.no_instance; });
  if (mode == PruneMode::None || states.size() < 2) return states;
  for (std::size_t i = 1; i < states.size(); ++i)
    if (states[i].order.support() != states[0].order.support()) throw SupportMismatch("prune_min: supports differ");
  std::sort(states.begin(), states.end(),
            [](const SolvedOrderState& a, const SolvedOrderState& b) { return a.order < b.order; });
  std::vector<SolvedOrderState> out;
  std::vector<char> dominated(states.size(), 0);
  if (mode == PruneMode::Full) {
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t j = 0; j < states.size() && !dominated[i]; ++j)
        if (i != j && states[j].ips != states[i].ips && states[j].ips.subset_of(states[i].ips)) dominated[i] = 1;
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (dominated[i]) continue;
    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const SolvedOrderState& k) { return k.ips == states[i].ips; });
    if (!duplicate) out.push_back(std::move(states[i]));
  }
  return out;
}

/// Per-cardinality state counts of one run.
struct CardinalityStats {
  std::size_t cardinality = 0;
  std::size_t subsets = 0;
  std::size_t max_states = 0;
  std::size_t total_states = 0;
};

struct Rcc8Options {
  PruneMode prune = PruneMode::Full;
  OutsideEdges ip_edges = OutsideEdges::OrderRestricted;
};

struct Rcc8Result {
  bool sat = false;
  std::optional<OrderedPartition> order;
  std::optional<Network> certificate;
  std::vector<CardinalityStats> stats;
  std::size_t candidates = 0;
  std::size_t peak_states = 0;
};

/// Atomic certificate for a full order: the greedy solution at full support,
/// checked to be closed and to refine f.
inline Network extract_certificate(const Network& f, const OrderedPartition& t) {
  detail::require_rcc8(f);
  const VarMask all = f.size() == 64 ? ~VarMask{0} : (VarMask{1} << f.size()) - 1;
  if (t.support() != all) throw Error("extract_certificate: order does not cover every variable");
  auto st = solve_under_order(f, t);
  if (st.no_instance) throw NotAYesOrder("extract_certificate: the order admits no solution");
  if (!atomic_closed(st.g) || !refines(st.g, f))
    throw Error("extract_certificate: internal error, greedy solution failed validation");
  return st.g;
}

/// Decides f by the subset recurrence: R(empty) = {empty order}, and R(S)
/// prunes { T < (S \ V_T)^= : V_T a proper subset of S, T in R(V_T) }.
/// f is SAT iff R(V) is nonempty.
inline Rcc8Result solve_rcc8(const Network& f, const Rcc8Options& opt = {}) {
  detail::require_rcc8(f);
  const std::size_t n = f.size();
  if (n > 24) throw Error("solve_rcc8: at most 24 variables are supported");
  Rcc8Result res;
  if (f.has_empty_label()) return res;
  if (n == 0) {
    res.sat = true;
    res.order = OrderedPartition{};
    res.certificate = f;
    return res;
  }
  const VarMask all = (VarMask{1} << n) - 1;
  std::vector<std::vector<OrderedPartition>> memo(std::size_t{1} << n);
  memo[0].push_back(OrderedPartition{});

  std::vector<std::vector<VarMask>> by_card(n + 1);
  for (VarMask s = 1; s <= all; ++s) by_card[static_cast<std::size_t>(std::popcount(s))].push_back(s);

  for (std::size_t card = 1; card <= n; ++card) {
    CardinalityStats cs{card, by_card[card].size(), 0, 0};
    for (VarMask s : by_card[card]) {
      std::vector<SolvedOrderState> cands;
      // proper subsets vt of s, including the empty set
      for (VarMask vt = (s - 1) & s;; vt = (vt - 1) & s) {
        std::vector<std::size_t> block;
        for (std::size_t v = 0; v < n; ++v)
          if (((s & ~vt) >> v) & 1u) block.push_back(v);
        for (const auto& t : memo[vt]) {
          auto st = solve_under_order(f, t.then(block));
          ++res.candidates;
          if (st.no_instance) continue;
          st.ips = inconsistency_paths(f, st, opt.ip_edges);
          cands.push_back(std::move(st));
        }
        if (vt == 0) break;
      }
      auto kept = prune_min(std::move(cands), opt.prune);
      auto& slot = memo[s];
      for (auto& k : kept) slot.push_back(std::move(k.order));
      cs.max_states = std::max(cs.max_states, slot.size());
      cs.total_states += slot.size();
    }
    res.peak_states = std::max(res.peak_states, cs.max_states);
    res.stats.push_back(cs);
  }
  if (!memo[all].empty()) {
    res.sat = true;
    res.order = memo[all].front();
    res.certificate = extract_certificate(f, *res.order);
  }
  return res;
}

}  // namespace qcr::rcc
