#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qcr/language.hpp"

namespace qcr {

/// One input constraint `x R y`, where R is a label in the base calculus.
struct Constraint {
  std::string x;
  RelSet rel;
  std::string y;
};

/// Qualitative constraint network: a total labelling of variable pairs.
///
/// Variables are interned to dense ids 0..n-1 and labels live in a flat n x n
/// matrix. The matrix is kept converse-consistent: writing (i, j) also writes
/// (j, i). The diagonal always holds the identity relation; unconstrained pairs
/// hold the full relation.
class Network {
 public:
  Network(std::shared_ptr<const Language> lang, std::vector<std::string> vars)
      : lang_(std::move(lang)), vars_(std::move(vars)), labels_(vars_.size() * vars_.size()) {
    const auto full = calculus().full();
    const auto id = calculus().identity_set();
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) labels_[i * size() + j] = i == j ? id : full;
  }

  /// Variables named v0..v{n-1}.
  static Network unconstrained(std::shared_ptr<const Language> lang, std::size_t n) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back("v" + std::to_string(i));
    return Network(std::move(lang), std::move(vars));
  }

  const Language& language() const { return *lang_; }
  const std::shared_ptr<const Language>& language_ptr() const { return lang_; }
  const Calculus& calculus() const { return lang_->base(); }
  std::size_t size() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }

  std::size_t var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    throw UnknownVariable(std::string(name));
  }

  RelSet label(std::size_t i, std::size_t j) const { return labels_[i * size() + j]; }

  void set_label(std::size_t i, std::size_t j, RelSet r) {
    labels_[i * size() + j] = r;
    labels_[j * size() + i] = calculus().converse(r);
  }

  /// Intersects label(i, j) with r; returns true if the label shrank.
  bool refine(std::size_t i, std::size_t j, RelSet r) {
    auto cur = label(i, j);
    auto next = cur & r;
    if (next == cur) return false;
    set_label(i, j, next);
    return true;
  }

  bool constrained(std::size_t i, std::size_t j) const { return label(i, j) != calculus().full(); }

  bool has_empty_label() const {
    for (auto r : labels_)
      if (r.empty()) return true;
    return false;
  }

  bool is_atomic() const {
    for (auto r : labels_)
      if (!r.is_atomic()) return false;
    return true;
  }

  /// Number of constrained unordered pairs.
  std::size_t constraint_count() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j) count += constrained(i, j);
    return count;
  }

  /// Labels equal and the same base calculus; variable names are ignored.
  bool same_labels(const Network& o) const { return &calculus() == &o.calculus() && labels_ == o.labels_; }

  bool operator==(const Network& o) const {
    return lang_->id() == o.lang_->id() && vars_ == o.vars_ && labels_ == o.labels_;
  }

 private:
  std::shared_ptr<const Language> lang_;
  std::vector<std::string> vars_;
  std::vector<RelSet> labels_;
};

/// Builds a network from a constraint list: duplicates on one pair are
/// intersected and the converse direction is filled in. An empty intersection
/// is kept (check `has_empty_label()`); it marks a trivially unsatisfiable
/// network rather than an error.
inline Network build_qcn(std::shared_ptr<const Language> lang, std::vector<std::string> vars,
                         const std::vector<Constraint>& constraints) {
  Network q(std::move(lang), std::move(vars));
  for (const auto& c : constraints) {
    auto i = q.var_index(c.x);
    auto j = q.var_index(c.y);
    q.refine(i, j, c.rel);
  }
  return q;
}

/// Path-consistency fixpoint label(x,z) &= label(x,y) o label(y,z), computed
/// in place with a worklist of changed pairs. Returns false as soon as a label
/// becomes empty (the network is then left partially refined).
inline bool close_in_place(Network& q) {
  const std::size_t n = q.size();
  const auto& calc = q.calculus();
  std::vector<std::pair<std::size_t, std::size_t>> work;
  std::vector<char> queued(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (q.label(i, j).empty()) return false;
      work.emplace_back(i, j);
      queued[i * n + j] = 1;
    }
  auto push = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    if (!queued[a * n + b]) {
      queued[a * n + b] = 1;
      work.emplace_back(a, b);
    }
  };
  while (!work.empty()) {
    auto [i, j] = work.back();
    work.pop_back();
    queued[i * n + j] = 0;
    const RelSet ij = q.label(i, j);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      // (i,k) via j and (k,j) via i
      if (q.refine(i, k, calc.compose(ij, q.label(j, k)))) {
        if (q.label(i, k).empty()) return false;
        push(i, k);
      }
      if (q.refine(k, j, calc.compose(q.label(k, i), ij))) {
        if (q.label(k, j).empty()) return false;
        push(k, j);
      }
    }
  }
  return true;
}

/// Returns the algebraic closure of q. If closure derives an empty label,
/// every label is emptied so the inconsistency is visible on any pair.
inline Network algebraic_closure(Network q) {
  if (!close_in_place(q)) {
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j)
        if (i != j) q.set_label(i, j, RelSet{});
  }
  return q;
}

/// True iff an atomic network is closed: every triangle is supported by the
/// composition table. Non-atomic inputs return false.
inline bool atomic_closed(const Network& q) {
  const std::size_t n = q.size();
  const auto& calc = q.calculus();
  for (std::size_t i = 0; i < n; ++i) {
    if (q.label(i, i) != calc.identity_set()) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (!q.label(i, j).is_atomic()) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!q.label(i, k).subset_of(calc.compose(q.label(i, j), q.label(j, k)))) return false;
  return true;
}

/// True iff `fine` refines `coarse` pair by pair.
inline bool refines(const Network& fine, const Network& coarse) {
  if (fine.size() != coarse.size()) return false;
  for (std::size_t i = 0; i < fine.size(); ++i)
    for (std::size_t j = 0; j < fine.size(); ++j)
      if (!fine.label(i, j).subset_of(coarse.label(i, j))) return false;
  return true;
}

}  // namespace qcr
