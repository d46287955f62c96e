#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcr/error.hpp"
#include "qcr/relset.hpp"
#include "qcr/tables.hpp"

namespace qcr {

/// A partition scheme: basic relations with converse and composition tables.
///
/// Instances are immutable once built. Calculi with at most eight basics keep
/// a full set-composition cache (256 x 256 entries), which the RCC-8 solver
/// relies on in its inner loops.
class Calculus {
 public:
  static constexpr std::size_t kMaxBasics = 16;

  /// Builds a calculus from the line-oriented table formats
  /// (`REL REL -> REL|REL|...` and `REL -> REL`). The basic order is the order
  /// of first appearance in the converse table. The identity is detected as
  /// the unique basic acting neutrally on both sides of composition.
  static Calculus from_tables(std::string name, std::string_view composition_text,
                              std::string_view converse_text);

  const std::string& name() const { return name_; }
  std::size_t size() const { return basics_.size(); }
  const std::vector<std::string>& basics() const { return basics_; }
  const std::string& basic_name(Basic b) const { return basics_.at(b); }
  std::optional<Basic> find(std::string_view basic) const;
  Basic index_of(std::string_view basic) const;

  Basic identity() const { return identity_; }
  RelSet identity_set() const { return RelSet::of(identity_); }
  RelSet full() const { return RelSet::first(static_cast<unsigned>(size())); }

  Basic converse(Basic b) const { return converse_[b]; }
  RelSet converse(RelSet r) const;

  RelSet compose(Basic a, Basic b) const { return composition_[a * size() + b]; }
  RelSet compose(RelSet r, RelSet s) const;

  /// The DC < EC < PO < TPP < NTPP sequence, present only for RCC-8.
  const std::optional<std::array<Basic, 5>>& diamond_sequence() const { return diamond_; }
  void set_diamond_sequence(std::array<Basic, 5> seq) { diamond_ = seq; }

  std::string format(RelSet r) const;

 private:
  Calculus() = default;
  void build_cache();

  std::string name_;
  std::vector<std::string> basics_;
  std::vector<Basic> converse_;
  std::vector<RelSet> composition_;
  Basic identity_ = 0;
  std::optional<std::array<Basic, 5>> diamond_;
  std::vector<RelSet> set_cache_;   // only when size() <= 8
  std::vector<RelSet> converse_cache_;
};

/// Checks converse involution, identity laws, converse-of-composition, the
/// triangle law and nonempty compositions. Returns a human-readable line per violation.
inline std::vector<std::string> validate(const Calculus& calc);

/// Allen's thirteen interval relations, basics `p m o s f d e d- f- s- o- m- p-`.
inline const std::shared_ptr<const Calculus>& ia13();
/// RCC-8, basics `DC EC PO TPP NTPP TPP- NTPP- EQ`.
inline const std::shared_ptr<const Calculus>& rcc8();

// ----------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (!toks.empty()) f(lineno, toks);
  }
}

}  // namespace detail

inline std::optional<Basic> Calculus::find(std::string_view basic) const {
  for (std::size_t i = 0; i < basics_.size(); ++i)
    if (basics_[i] == basic) return static_cast<Basic>(i);
  return std::nullopt;
}

inline Basic Calculus::index_of(std::string_view basic) const {
  if (auto b = find(basic)) return *b;
  throw UnknownRelation(std::string(basic));
}

inline RelSet Calculus::converse(RelSet r) const {
  if (!converse_cache_.empty()) return converse_cache_[r.bits()];
  RelSet out;
  for (Basic b : r) out |= RelSet::of(converse_[b]);
  return out;
}

inline RelSet Calculus::compose(RelSet r, RelSet s) const {
  if (!set_cache_.empty()) return set_cache_[(r.bits() << size()) | s.bits()];
  RelSet out;
  for (Basic a : r)
    for (Basic b : s) out |= composition_[a * size() + b];
  return out;
}

inline std::string Calculus::format(RelSet r) const {
  std::string out = "{";
  bool first = true;
  for (Basic b : r) {
    if (!first) out += ',';
    out += basics_[b];
    first = false;
  }
  return out + "}";
}

inline void Calculus::build_cache() {
  if (size() > 8) return;
  const unsigned span = 1u << size();
  converse_cache_.assign(span, RelSet{});
  for (unsigned m = 0; m < span; ++m) {
    RelSet out;
    for (Basic b : RelSet(static_cast<RelSet::mask_type>(m))) out |= RelSet::of(converse_[b]);
    converse_cache_[m] = out;
  }
  std::vector<RelSet> cache(span * span);
  for (unsigned r = 0; r < span; ++r) {
    for (unsigned s = 0; s < span; ++s) {
      RelSet out;
      for (Basic a : RelSet(static_cast<RelSet::mask_type>(r)))
        for (Basic b : RelSet(static_cast<RelSet::mask_type>(s))) out |= composition_[a * size() + b];
      cache[(r << size()) | s] = out;
    }
  }
  set_cache_ = std::move(cache);
}

inline Calculus Calculus::from_tables(std::string name, std::string_view composition_text,
                                      std::string_view converse_text) {
  Calculus c;
  c.name_ = std::move(name);
  std::vector<std::pair<std::string, std::string>> conv_pairs;
  detail::for_each_line(converse_text, [&](std::size_t lineno, const auto& toks) {
    if (toks.size() != 3 || toks[1] != "->") throw ParseError(lineno, "expected 'REL -> REL'");
    conv_pairs.emplace_back(std::string(toks[0]), std::string(toks[2]));
    if (!c.find(toks[0])) c.basics_.emplace_back(toks[0]);
  });
  if (c.basics_.empty() || c.basics_.size() > kMaxBasics)
    throw Error("calculus '" + c.name_ + "': need between 1 and 16 basic relations");
  const std::size_t n = c.basics_.size();
  c.converse_.assign(n, 0);
  std::vector<bool> conv_seen(n, false);
  for (const auto& [from, to] : conv_pairs) {
    auto f = c.index_of(from);
    auto t = c.find(to);
    if (!t) throw Error("calculus '" + c.name_ + "': converse of " + from + " is not a basic");
    c.converse_[f] = *t;
    conv_seen[f] = true;
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (!conv_seen[b]) throw Error("calculus '" + c.name_ + "': missing converse of " + c.basics_[b]);
    if (c.converse_[c.converse_[b]] != b) throw Error("calculus '" + c.name_ + "': converse is not an involution");
  }

  c.composition_.assign(n * n, RelSet{});
  std::vector<bool> comp_seen(n * n, false);
  detail::for_each_line(composition_text, [&](std::size_t lineno, const auto& toks) {
    if (toks.size() != 4 || toks[2] != "->")
      throw ParseError(lineno, "expected 'REL REL -> REL|REL|...'");
    auto a = c.find(toks[0]);
    auto b = c.find(toks[1]);
    if (!a) throw UnknownRelation(std::string(toks[0]));
    if (!b) throw UnknownRelation(std::string(toks[1]));
    RelSet out;
    std::string_view rest = toks[3];
    while (!rest.empty()) {
      auto bar = rest.find('|');
      auto item = rest.substr(0, bar);
      auto r = c.find(item);
      if (!r) throw UnknownRelation(std::string(item));
      out |= RelSet::of(*r);
      rest = bar == std::string_view::npos ? std::string_view{} : rest.substr(bar + 1);
    }
    c.composition_[*a * n + *b] = out;
    comp_seen[*a * n + *b] = true;
  });
  for (std::size_t i = 0; i < n * n; ++i)
    if (!comp_seen[i])
      throw Error("calculus '" + c.name_ + "': missing composition entry " + c.basics_[i / n] + " " +
                  c.basics_[i % n]);

  std::optional<Basic> identity;
  for (std::size_t e = 0; e < n; ++e) {
    bool neutral = true;
    for (std::size_t r = 0; r < n && neutral; ++r) {
      auto single = RelSet::of(static_cast<Basic>(r));
      neutral = c.composition_[e * n + r] == single && c.composition_[r * n + e] == single;
    }
    if (neutral) {
      if (identity) throw Error("calculus '" + c.name_ + "': identity is not unique");
      identity = static_cast<Basic>(e);
    }
  }
  if (!identity) throw Error("calculus '" + c.name_ + "': no identity relation");
  c.identity_ = *identity;
  c.build_cache();
  return c;
}

inline std::vector<std::string> validate(const Calculus& calc) {
  std::vector<std::string> errors;
  const auto n = static_cast<Basic>(calc.size());
  auto name = [&](Basic b) { return calc.basic_name(b); };
  for (Basic b = 0; b < n; ++b) {
    if (calc.converse(calc.converse(b)) != b) errors.push_back("converse is not an involution at " + name(b));
  }
  if (calc.converse(calc.identity()) != calc.identity()) errors.push_back("identity is not self-converse");
  for (Basic r = 0; r < n; ++r) {
    if (calc.compose(calc.identity(), r) != RelSet::of(r)) errors.push_back("left identity law fails at " + name(r));
    if (calc.compose(r, calc.identity()) != RelSet::of(r)) errors.push_back("right identity law fails at " + name(r));
    for (Basic s = 0; s < n; ++s) {
      auto lhs = calc.converse(calc.compose(r, s));
      auto rhs = calc.compose(calc.converse(s), calc.converse(r));
      if (lhs != rhs)
        errors.push_back("converse of " + name(r) + " o " + name(s) + " is " + calc.format(lhs) +
                         " but the reversed composition gives " + calc.format(rhs));
      if (calc.compose(r, s).empty()) errors.push_back("empty composition " + name(r) + " o " + name(s));
      // triangle law: t in r o s iff s in r- o t
      for (Basic t = 0; t < n; ++t)
        if (calc.compose(r, s).contains(t) != calc.compose(calc.converse(r), t).contains(s))
          errors.push_back("triangle law fails at " + name(r) + " o " + name(s) + " -> " + name(t));
    }
  }
  return errors;
}

namespace detail {

inline std::shared_ptr<const Calculus> checked(Calculus c) {
  auto errors = validate(c);
  if (!errors.empty()) throw Error("shipped table for " + c.name() + " is invalid: " + errors.front());
  return std::make_shared<const Calculus>(std::move(c));
}

}  // namespace detail

inline const std::shared_ptr<const Calculus>& ia13() {
  static const std::shared_ptr<const Calculus> calc =
      detail::checked(Calculus::from_tables("ia13", tables::kIa13Composition, tables::kIa13Converse));
  return calc;
}

inline const std::shared_ptr<const Calculus>& rcc8() {
  static const std::shared_ptr<const Calculus> calc = [] {
    auto c = Calculus::from_tables("rcc8", tables::kRcc8Composition, tables::kRcc8Converse);
    c.set_diamond_sequence({c.index_of("DC"), c.index_of("EC"), c.index_of("PO"), c.index_of("TPP"),
                            c.index_of("NTPP")});
    return detail::checked(std::move(c));
  }();
  return calc;
}

}  // namespace qcr
