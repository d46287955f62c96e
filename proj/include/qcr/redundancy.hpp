#pragma once

// Non-redundancy of single constraints, prime sub-networks, and the maximal
// prime instances over one relation together with their sizes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcr/oracle.hpp"

namespace qcr {

/// Shape of the largest prime instance over a single relation.
enum class NrdShape {
  Complete,    // all pairs
  Bipartite,   // balanced complete bipartite orientation
  MeetsHub,    // m(s, x_i), m(x_i, t)
  Star,        // a spanning tree
};

struct NrdRelation {
  std::string name;
  std::shared_ptr<const Language> lang;
  RelSet set;
  NrdShape shape;
  /// Only a lower bound is known (the instance is a witness, not a maximum).
  bool lower_bound_only = false;
};

namespace detail {

inline std::vector<NrdRelation> nrd_registry() {
  std::vector<NrdRelation> out;
  auto add = [&](std::string name, const std::shared_ptr<const Language>& lang, RelSet set, NrdShape shape,
                 bool lb = false) { out.push_back({std::move(name), lang, set, shape, lb}); };
  const auto& ia = ia13_language();
  const auto& rc = rcc8_language();
  for (const char* r : {"p", "s", "f", "d", "p-", "s-", "f-", "d-"}) add(r, ia, ia::basics({r}), NrdShape::Bipartite);
  add("sub", ia7_language(), ia::sub(), NrdShape::Bipartite);
  add("sub-", ia7_language(), ia::sub_inv(), NrdShape::Bipartite);
  add("m", ia, ia::basics({"m"}), NrdShape::MeetsHub);
  add("m-", ia, ia::basics({"m-"}), NrdShape::MeetsHub);
  add("e", ia, ia::basics({"e"}), NrdShape::Star);
  for (const char* r : {"o", "o-"}) add(r, ia, ia::basics({r}), NrdShape::Bipartite, true);
  add("alpha", ia7_language(), ia::alpha(), NrdShape::Bipartite, true);
  add("alpha-", ia7_language(), ia::alpha_inv(), NrdShape::Bipartite, true);
  add("cap", ia3_language(), ia::cap(), NrdShape::Bipartite, true);
  for (const char* r : {"DC", "EC", "PO"}) add(r, rc, rcc::basics({r}), NrdShape::Complete);
  add("DR", rcc5_language(), rcc::dr(), NrdShape::Complete);
  for (const char* r : {"NTPP", "NTPP-"}) add(r, rc, rcc::basics({r}), NrdShape::Bipartite);
  add("PP", rcc5_language(), rcc::pp(), NrdShape::Bipartite);
  add("PP-", rcc5_language(), rcc::pp_inv(), NrdShape::Bipartite);
  for (const char* r : {"TPP", "TPP-"}) add(r, rc, rcc::basics({r}), NrdShape::Bipartite, true);
  add("EQ", rc, rcc::basics({"EQ"}), NrdShape::Star);
  return out;
}

}  // namespace detail

/// Every classified relation, converses included.
inline const std::vector<NrdRelation>& nrd_relations() {
  static const auto reg = detail::nrd_registry();
  return reg;
}

/// Looks a relation up by name; `∩` is accepted for `cap`.
inline const NrdRelation& nrd_relation(std::string_view name) {
  if (name == "∩") name = "cap";
  if (name == "∩-" || name == "cap-") name = "cap";
  for (const auto& r : nrd_relations())
    if (r.name == name) return r;
  // symmetric relations are their own converse
  if (!name.empty() && name.back() == '-') {
    auto base = name.substr(0, name.size() - 1);
    for (const auto& r : nrd_relations())
      if (r.name == base && r.lang->base().converse(r.set) == r.set) return r;
  }
  throw UnclassifiedRelation(std::string(name));
}

struct NrdQuery {
  std::string relation;
  std::size_t n = 3;
};

struct NrdValue {
  std::size_t value = 0;
  /// True when `value` is only a lower bound (o, alpha, cap, TPP and converses).
  bool lower_bound = false;
};

namespace detail {

inline void require_n(std::size_t n) {
  if (n < 3) throw Error("non-redundancy is defined for n >= 3, got " + std::to_string(n));
}

inline std::size_t shape_count(NrdShape s, std::size_t n) {
  switch (s) {
    case NrdShape::Complete: return n * (n - 1) / 2;
    case NrdShape::Bipartite: return ((n + 1) / 2) * (n / 2);
    case NrdShape::MeetsHub: return 2 * n - 4;
    case NrdShape::Star: return n - 1;
  }
  return 0;
}

}  // namespace detail

inline NrdValue nrd_value(const NrdQuery& q) {
  const auto& r = nrd_relation(q.relation);
  detail::require_n(q.n);
  return {detail::shape_count(r.shape, q.n), r.lower_bound_only};
}

/// The witness instance of the classification: its constraint count is
/// nrd_value(q).value.
inline Network generate_max_prime(const NrdQuery& q) {
  const auto& r = nrd_relation(q.relation);
  detail::require_n(q.n);
  const std::size_t n = q.n;
  std::vector<std::string> vars;
  std::vector<Constraint> cs;
  switch (r.shape) {
    case NrdShape::Complete:
      for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) cs.push_back({vars[i], r.set, vars[j]});
      break;
    case NrdShape::Bipartite: {
      const std::size_t a = (n + 1) / 2, b = n / 2;
      for (std::size_t i = 1; i <= a; ++i) vars.push_back("x" + std::to_string(i));
      for (std::size_t j = 1; j <= b; ++j) vars.push_back("y" + std::to_string(j));
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) cs.push_back({vars[i], r.set, vars[a + j]});
      break;
    }
    case NrdShape::MeetsHub:
      vars = {"s", "t"};
      for (std::size_t i = 1; i + 2 <= n; ++i) vars.push_back("x" + std::to_string(i));
      for (std::size_t i = 2; i < n; ++i) {
        cs.push_back({"s", r.set, vars[i]});
        cs.push_back({vars[i], r.set, "t"});
      }
      break;
    case NrdShape::Star:
      for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
      for (std::size_t i = 1; i < n; ++i) cs.push_back({vars[0], r.set, vars[i]});
      break;
  }
  return build_qcn(r.lang, std::move(vars), cs);
}

namespace detail {

inline bool oracle_sat(const Network& q) {
  if (&q.calculus() == ia13().get()) return oracle_ia(q, OracleBudget::ia()).sat;
  if (&q.calculus() == rcc8().get()) return oracle_rcc8(q, OracleBudget::rcc()).sat;
  throw Error("no oracle for calculus " + q.calculus().name());
}

}  // namespace detail

/// True iff some solution of q without c violates c. Decided by forcing each
/// basic outside c's label in turn on q without c and asking the oracle.
inline bool is_nonredundant(const Network& q, const Constraint& c) {
  const auto i = q.var_index(c.x);
  const auto j = q.var_index(c.y);
  if (i == j || !q.constrained(i, j) || q.label(i, j) != c.rel)
    throw ConstraintNotPresent("constraint " + c.x + " " + q.calculus().format(c.rel) + " " + c.y +
                               " is not in the network");
  Network probe = q;
  for (Basic r : q.calculus().full().minus(c.rel)) {
    probe.set_label(i, j, RelSet::of(r));
    if (detail::oracle_sat(probe)) return true;
  }
  return false;
}

/// Constraints of q, one per constrained pair i < j, in lexicographic order.
inline std::vector<Constraint> constraints_of(const Network& q) {
  std::vector<Constraint> out;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      if (q.constrained(i, j)) out.push_back({q.vars()[i], q.label(i, j), q.vars()[j]});
  return out;
}

/// Drops redundant constraints in lexicographic pair order. One pass suffices:
/// a constraint that is non-redundant stays so when others are dropped.
inline Network prime(Network q) {
  for (const auto& c : constraints_of(q)) {
    if (!is_nonredundant(q, c)) q.set_label(q.var_index(c.x), q.var_index(c.y), q.calculus().full());
  }
  return q;
}

}  // namespace qcr
