#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcr/calculus.hpp"

namespace qcr {

/// A coarsening view over a base calculus: a list of named macro relations
/// ("atoms") that partition the base basics. IA-13 and RCC-8 are their own
/// atoms; the A3, A7 and RCC-5 fragments group basics of IA-13 / RCC-8.
///
/// Network labels always live in the base calculus. A label is expressible in
/// a language iff it is a union of that language's atoms.
class Language {
 public:
  struct Atom {
    std::string name;
    RelSet set;
  };

  Language(std::string id, std::shared_ptr<const Calculus> base, std::vector<Atom> atoms)
      : id_(std::move(id)), base_(std::move(base)), atoms_(std::move(atoms)) {}

  /// Every basic is an atom of its own.
  static Language identity_view(std::string id, std::shared_ptr<const Calculus> base) {
    std::vector<Atom> atoms;
    for (Basic b = 0; b < base->size(); ++b) atoms.push_back({base->basic_name(b), RelSet::of(b)});
    return Language(std::move(id), std::move(base), std::move(atoms));
  }

  const std::string& id() const { return id_; }
  const Calculus& base() const { return *base_; }
  const std::shared_ptr<const Calculus>& base_ptr() const { return base_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  std::optional<RelSet> find_atom(std::string_view name) const {
    for (const auto& a : atoms_)
      if (a.name == name) return a.set;
    return std::nullopt;
  }
  RelSet atom(std::string_view name) const {
    if (auto r = find_atom(name)) return *r;
    throw UnknownRelation(std::string(name));
  }

  /// True iff every atom is either contained in r or disjoint from it.
  bool expressible(RelSet r) const {
    for (const auto& a : atoms_)
      if (a.set.intersects(r) && !a.set.subset_of(r)) return false;
    return true;
  }

  /// Atom indices whose union is r; nullopt if r is not expressible.
  std::optional<std::vector<std::size_t>> decompose(RelSet r) const {
    if (!expressible(r)) return std::nullopt;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (atoms_[i].set.subset_of(r)) out.push_back(i);
    return out;
  }

  std::string format(RelSet r) const {
    auto parts = decompose(r);
    if (!parts) return base_->format(r);
    std::string out = "{";
    for (std::size_t i = 0; i < parts->size(); ++i) {
      if (i) out += ',';
      out += atoms_[(*parts)[i]].name;
    }
    return out + "}";
  }

 private:
  std::string id_;
  std::shared_ptr<const Calculus> base_;
  std::vector<Atom> atoms_;
};

namespace ia {

inline RelSet basics(std::initializer_list<std::string_view> names) {
  RelSet out;
  for (auto n : names) out |= RelSet::of(ia13()->index_of(n));
  return out;
}

inline RelSet p() { return basics({"p"}); }
inline RelSet p_inv() { return basics({"p-"}); }
/// Intersects: every IA relation except p and p-.
inline RelSet cap() { return ia13()->full().minus(p() | p_inv()); }
inline RelSet alpha() { return basics({"m", "o"}); }
inline RelSet alpha_inv() { return basics({"m-", "o-"}); }
inline RelSet sub() { return basics({"s", "f", "d"}); }
inline RelSet sub_inv() { return basics({"s-", "f-", "d-"}); }

}  // namespace ia

namespace rcc {

inline RelSet basics(std::initializer_list<std::string_view> names) {
  RelSet out;
  for (auto n : names) out |= RelSet::of(rcc8()->index_of(n));
  return out;
}

inline RelSet pp() { return basics({"TPP", "NTPP"}); }
inline RelSet pp_inv() { return basics({"TPP-", "NTPP-"}); }
inline RelSet dr() { return basics({"DC", "EC"}); }
/// DC, EC, PO, TPP, NTPP: the relations allowed from an earlier to a later
/// variable of a total order.
inline RelSet diamond() { return basics({"DC", "EC", "PO", "TPP", "NTPP"}); }

}  // namespace rcc

inline const std::shared_ptr<const Language>& ia13_language() {
  static const auto lang = std::make_shared<const Language>(Language::identity_view("ia13", ia13()));
  return lang;
}

inline const std::shared_ptr<const Language>& ia3_language() {
  static const auto lang = std::make_shared<const Language>(
      "ia3", ia13(), std::vector<Language::Atom>{{"p", ia::p()}, {"cap", ia::cap()}, {"p-", ia::p_inv()}});
  return lang;
}

inline const std::shared_ptr<const Language>& ia7_language() {
  static const auto lang = std::make_shared<const Language>(
      "ia7", ia13(), std::vector<Language::Atom>{{"p", ia::p()},
                              {"p-", ia::p_inv()},
                              {"alpha", ia::alpha()},
                              {"alpha-", ia::alpha_inv()},
                              {"sub", ia::sub()},
                              {"sub-", ia::sub_inv()},
                              {"e", ia::basics({"e"})}});
  return lang;
}

inline const std::shared_ptr<const Language>& rcc8_language() {
  static const auto lang = std::make_shared<const Language>(Language::identity_view("rcc8", rcc8()));
  return lang;
}

inline const std::shared_ptr<const Language>& rcc5_language() {
  static const auto lang = std::make_shared<const Language>(
      "rcc5", rcc8(), std::vector<Language::Atom>{{"EQ", rcc::basics({"EQ"})},
                              {"PO", rcc::basics({"PO"})},
                              {"DR", rcc::dr()},
                              {"PP", rcc::pp()},
                              {"PP-", rcc::pp_inv()}});
  return lang;
}

/// Looks up one of the shipped languages by id (`ia3`, `ia7`, `ia13`/`ia`,
/// `rcc8`, `rcc5`).
inline const std::shared_ptr<const Language>& language(std::string_view id) {
  if (id == "ia3") return ia3_language();
  if (id == "ia7") return ia7_language();
  if (id == "ia13" || id == "ia") return ia13_language();
  if (id == "rcc8") return rcc8_language();
  if (id == "rcc5") return rcc5_language();
  throw UnknownCalculus(std::string(id));
}

}  // namespace qcr
