#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <random>
#include <sstream>

#include "qcr/network.hpp"
#include "qcr/tables.hpp"

using namespace qcr;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RelSet ia_set(std::initializer_list<std::string_view> names) { return ia::basics(names); }
RelSet rcc_set(std::initializer_list<std::string_view> names) { return rcc::basics(names); }

// Endpoint decoding written out independently of interval.hpp.
std::string allen_name(int a, int b, int c, int d) {
  if (b < c) return "p";
  if (d < a) return "p-";
  if (b == c) return "m";
  if (d == a) return "m-";
  if (a == c && b == d) return "e";
  if (a == c) return b < d ? "s" : "s-";
  if (b == d) return a > c ? "f" : "f-";
  if (c < a && b < d) return "d";
  if (a < c && d < b) return "d-";
  return a < c ? "o" : "o-";
}

}  // namespace

TEST(Tables, EmbeddedTextMatchesDataFiles) {
  const std::string dir = QCR_DATA_DIR;
  EXPECT_EQ(slurp(dir + "/ia13.comp"), tables::kIa13Composition);
  EXPECT_EQ(slurp(dir + "/ia13.conv"), tables::kIa13Converse);
  EXPECT_EQ(slurp(dir + "/rcc8.comp"), tables::kRcc8Composition);
  EXPECT_EQ(slurp(dir + "/rcc8.conv"), tables::kRcc8Converse);
}

TEST(Tables, BasicOrder) {
  const std::vector<std::string> ia = {"p", "m", "o", "s", "f", "d", "e", "d-", "f-", "s-", "o-", "m-", "p-"};
  const std::vector<std::string> rcc = {"DC", "EC", "PO", "TPP", "NTPP", "TPP-", "NTPP-", "EQ"};
  EXPECT_EQ(ia13()->basics(), ia);
  EXPECT_EQ(rcc8()->basics(), rcc);
  EXPECT_EQ(ia13()->basic_name(ia13()->identity()), "e");
  EXPECT_EQ(rcc8()->basic_name(rcc8()->identity()), "EQ");
  for (Basic b = 0; b < 13; ++b) EXPECT_EQ(ia13()->converse(b), 12 - b);
}

TEST(Tables, IaCompositionMatchesEndpointSemantics) {
  // Every configuration of three intervals over six coordinates realises every
  // composition entry (at most six distinct endpoints are involved).
  const auto& c = *ia13();
  std::map<std::pair<std::string, std::string>, std::set<std::string>> derived;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int cc = 0; cc < 6; ++cc)
        for (int d = cc + 1; d < 6; ++d)
          for (int e = 0; e < 6; ++e)
            for (int f = e + 1; f < 6; ++f)
              derived[{allen_name(a, b, cc, d), allen_name(cc, d, e, f)}].insert(allen_name(a, b, e, f));
  ASSERT_EQ(derived.size(), 169u);
  for (const auto& [key, rels] : derived) {
    RelSet expect;
    for (const auto& r : rels) expect |= RelSet::of(c.index_of(r));
    EXPECT_EQ(c.compose(c.index_of(key.first), c.index_of(key.second)), expect) << key.first << " " << key.second;
  }
}

TEST(Tables, ValidateReportsNoViolations) {
  EXPECT_TRUE(validate(*ia13()).empty());
  EXPECT_TRUE(validate(*rcc8()).empty());
}

TEST(Tables, RejectsNonInvolutiveConverse) {
  const std::string comp = "a a -> a\na b -> b\nb a -> b\nb b -> a|b\n";
  const std::string conv = "a -> a\nb -> a\n";
  EXPECT_THROW(Calculus::from_tables("bad", comp, conv), Error);
}

TEST(Tables, RejectsUnknownRelationInTable) {
  const std::string comp = "a a -> a\na b -> c\nb a -> b\nb b -> a|b\n";
  const std::string conv = "a -> a\nb -> b\n";
  EXPECT_THROW(Calculus::from_tables("bad", comp, conv), UnknownRelation);
}

TEST(Converse, Examples) {
  EXPECT_EQ(ia13()->converse(ia_set({"m"})), ia_set({"m-"}));
  EXPECT_EQ(ia13()->converse(ia_set({"e"})), ia_set({"e"}));
  EXPECT_EQ(rcc8()->converse(rcc_set({"TPP", "DC"})), rcc_set({"TPP-", "DC"}));
  EXPECT_EQ(rcc8()->converse(RelSet{}), RelSet{});
}

TEST(Compose, Examples) {
  EXPECT_EQ(ia13()->compose(ia_set({"p"}), ia_set({"p"})), ia_set({"p"}));
  EXPECT_EQ(rcc8()->compose(rcc_set({"NTPP"}), rcc_set({"NTPP"})), rcc_set({"NTPP"}));
  EXPECT_EQ(rcc8()->compose(rcc_set({"EQ"}), rcc_set({"PO"})), rcc_set({"PO"}));
  EXPECT_EQ(rcc8()->compose(RelSet{}, rcc_set({"PO"})), RelSet{});
  EXPECT_EQ(rcc8()->compose(rcc_set({"DC"}), rcc_set({"DC"})), rcc8()->full());
}

TEST(Compose, SetCompositionIsUnionOfBasics) {
  for (const auto* c : {ia13().get(), rcc8().get()}) {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 500; ++it) {
      RelSet r(static_cast<std::uint16_t>(rng() & c->full().bits()));
      RelSet s(static_cast<std::uint16_t>(rng() & c->full().bits()));
      RelSet expect;
      for (Basic a : r)
        for (Basic b : s) expect |= c->compose(a, b);
      EXPECT_EQ(c->compose(r, s), expect);
      RelSet conv;
      for (Basic a : r) conv |= RelSet::of(c->converse(a));
      EXPECT_EQ(c->converse(r), conv);
    }
  }
}

TEST(Laws, ExhaustiveCoherence) {
  for (const auto* c : {ia13().get(), rcc8().get()}) {
    const auto n = static_cast<Basic>(c->size());
    EXPECT_EQ(c->converse(c->identity()), c->identity());
    for (Basic r = 0; r < n; ++r) {
      EXPECT_EQ(c->converse(c->converse(r)), r);
      EXPECT_EQ(c->compose(c->identity(), r), RelSet::of(r));
      EXPECT_EQ(c->compose(r, c->identity()), RelSet::of(r));
      for (Basic s = 0; s < n; ++s) {
        EXPECT_FALSE(c->compose(r, s).empty());
        EXPECT_EQ(c->converse(c->compose(r, s)), c->compose(c->converse(s), c->converse(r)));
        // r o s allows t iff r- o t allows s (well-formed relation algebra)
        for (Basic t = 0; t < n; ++t)
          EXPECT_EQ(c->compose(r, s).contains(t), c->compose(c->converse(r), t).contains(s));
      }
    }
  }
}

TEST(DiamondOrder, EarlierDiamondAllowsMore) {
  const auto& c = *rcc8();
  const auto& seq = *c.diamond_sequence();
  const RelSet dia = rcc::diamond();
  for (std::size_t i = 1; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      EXPECT_TRUE((c.compose(seq[i], seq[j]) & dia).subset_of(c.compose(seq[i - 1], seq[j]) & dia)) << i << "," << j;
}

TEST(DiamondOrder, LaterRightOperandOnlyAddsLaterRelations) {
  const auto& c = *rcc8();
  const auto& seq = *c.diamond_sequence();
  const RelSet dia = rcc::diamond();
  auto rank = [&](Basic b) { return std::find(seq.begin(), seq.end(), b) - seq.begin(); };
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t jp = j + 1; jp < 5; ++jp) {
        const RelSet a = c.compose(seq[i], seq[j]) & dia;
        const RelSet b = c.compose(seq[i], seq[jp]) & dia;
        for (Basic k : b) {
          if (a.contains(k)) continue;
          for (Basic kp : a) EXPECT_LT(rank(kp), rank(k)) << i << "," << j << "," << jp;
        }
      }
}

TEST(Language, NamedRelations) {
  EXPECT_EQ(ia::cap().size(), 11);
  EXPECT_EQ(ia::cap() | ia::p() | ia::p_inv(), ia13()->full());
  EXPECT_EQ(ia7_language()->atoms().size(), 7u);
  RelSet all;
  for (const auto& a : ia7_language()->atoms()) {
    EXPECT_FALSE(all.intersects(a.set));
    all |= a.set;
  }
  EXPECT_EQ(all, ia13()->full());
  all = RelSet{};
  for (const auto& a : rcc5_language()->atoms()) {
    EXPECT_FALSE(all.intersects(a.set));
    all |= a.set;
  }
  EXPECT_EQ(all, rcc8()->full());
  EXPECT_TRUE(ia3_language()->expressible(ia::p() | ia::cap()));
  EXPECT_FALSE(ia3_language()->expressible(ia_set({"m"})));
  EXPECT_EQ(ia3_language()->format(ia::cap()), "{cap}");
  EXPECT_THROW(language("rcc9"), UnknownCalculus);
  EXPECT_THROW(ia3_language()->atom("q"), UnknownRelation);
}

TEST(BuildQcn, MergesDuplicates) {
  auto q = build_qcn(ia3_language(), {"x", "y"}, {{"x", ia::p(), "y"}, {"x", ia::p() | ia::cap(), "y"}});
  EXPECT_EQ(q.label(0, 1), ia::p());
  EXPECT_EQ(q.label(1, 0), ia::p_inv());
  EXPECT_EQ(q.label(0, 0), ia_set({"e"}));
  EXPECT_FALSE(q.has_empty_label());
}

TEST(BuildQcn, EmptyIntersectionIsFlagged) {
  auto q = build_qcn(ia3_language(), {"x", "y"}, {{"x", ia::p(), "y"}, {"x", ia::p_inv(), "y"}});
  EXPECT_TRUE(q.has_empty_label());
}

TEST(BuildQcn, UnconstrainedIsFull) {
  auto q = build_qcn(ia3_language(), {"x", "y"}, {});
  EXPECT_EQ(q.label(0, 1), ia13()->full());
  EXPECT_THROW(build_qcn(ia3_language(), {"x"}, {{"x", ia::p(), "z"}}), UnknownVariable);
}

TEST(BuildQcn, ConverseDirectionConstraint) {
  auto q = build_qcn(rcc8_language(), {"x", "y"}, {{"y", rcc_set({"TPP"}), "x"}});
  EXPECT_EQ(q.label(0, 1), rcc_set({"TPP-"}));
}

TEST(Closure, Examples) {
  auto q = build_qcn(ia3_language(), {"x", "y", "z"}, {{"x", ia::p(), "y"}, {"y", ia::p(), "z"}});
  auto c = algebraic_closure(q);
  EXPECT_EQ(c.label(0, 2), ia::p());

  auto r = build_qcn(rcc8_language(), {"x", "y", "z"},
                     {{"x", rcc_set({"NTPP"}), "y"}, {"y", rcc_set({"NTPP"}), "z"}, {"x", rcc_set({"DC"}), "z"}});
  EXPECT_TRUE(algebraic_closure(r).has_empty_label());

  auto atomic = build_qcn(rcc8_language(), {"x", "y", "z"},
                          {{"x", rcc_set({"NTPP"}), "y"}, {"y", rcc_set({"NTPP"}), "z"}, {"x", rcc_set({"NTPP"}), "z"}});
  EXPECT_EQ(algebraic_closure(atomic), atomic);
  EXPECT_TRUE(atomic_closed(atomic));
}

TEST(Closure, MonotoneAndIdempotent) {
  std::mt19937_64 rng(11);
  for (const auto& lang : {rcc8_language(), ia13_language()}) {
    for (int it = 0; it < 300; ++it) {
      const std::size_t n = 3 + rng() % 4;
      Network q = Network::unconstrained(lang, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (rng() % 2) {
            RelSet r(static_cast<std::uint16_t>(rng() & lang->base().full().bits()));
            if (r.empty()) r = RelSet::of(0);
            q.set_label(i, j, r);
          }
      auto c1 = algebraic_closure(q);
      EXPECT_TRUE(refines(c1, q));
      EXPECT_EQ(algebraic_closure(c1), c1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(c1.label(j, i), lang->base().converse(c1.label(i, j)));
    }
  }
}

TEST(RelSetOps, Basics) {
  RelSet a = RelSet::of(1) | RelSet::of(3);
  EXPECT_EQ(a.size(), 2);
  EXPECT_TRUE(a.contains(3));
  EXPECT_FALSE(a.is_atomic());
  EXPECT_EQ(a.lowest(), 1);
  EXPECT_EQ(a.minus(RelSet::of(1)), RelSet::of(3));
  std::vector<Basic> got;
  for (Basic b : a) got.push_back(b);
  EXPECT_EQ(got, (std::vector<Basic>{1, 3}));
  EXPECT_EQ(rcc8()->format(a), "{EC,TPP}");
}
