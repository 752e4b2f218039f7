#include "support.hpp"

#include "vtangle/errors.hpp"
#include "vtangle/invariants.hpp"
#include "vtangle/tangle_ops.hpp"

#include <gtest/gtest.h>

namespace vtangle {
namespace {

using namespace vtangle::testing;

struct Pulled {
  LaurentPoly upper;
  LaurentPoly lower;
};

// Both summands rewritten in the variables of the glued diagram.
template <typename F>
Pulled pull_back(const GlueResult& g, const TangleDiagram& t, const TangleDiagram& u, F invariant) {
  const auto n = g.diagram.components.size();
  return {substitute(invariant(t), g.upper_var_map(), n), substitute(invariant(u), g.lower_var_map(), n)};
}

template <typename F>
void expect_additive(const TangleDiagram& t, const TangleDiagram& u, F invariant) {
  auto g = connect(t, u);
  auto parts = pull_back(g, t, u, invariant);
  EXPECT_EQ(invariant(g.diagram), parts.upper + parts.lower);
}

TEST(Connect, IdentityBraidIsNeutral) {
  auto t = clasp();
  for (const auto& g : {connect(t, identity_braid(2)), connect(identity_braid(2), t)}) {
    ASSERT_TRUE(is_valid(g.diagram));
    EXPECT_TRUE(is_string_link(g.diagram));
    EXPECT_EQ(p_lk(g.diagram, 2, 3), p_lk(t, 2, 3));
    EXPECT_EQ(p_lk_L(g.diagram, 2, 3), p_lk_L(t, 2, 3));
    EXPECT_EQ(vlk_matrix(g.diagram), vlk_matrix(t));
    ASSERT_EQ(g.relations.pairs.size(), 2u);
    EXPECT_EQ(g.relations.pairs[0], (std::pair<std::size_t, std::size_t>{0, 0}));
    EXPECT_EQ(g.relations.pairs[1], (std::pair<std::size_t, std::size_t>{1, 1}));
  }
}

TEST(Connect, ClaspOnClasp) {
  auto g = connect(clasp(), clasp());
  ASSERT_TRUE(is_valid(g.diagram));
  EXPECT_EQ(g.diagram.chords.size(), 4u);
  const Rational a = Rational::parse("1/3");
  const Rational b = 5;
  EXPECT_EQ(p_lk(g.diagram, a, b), LaurentPoly::mono(2, Rational(2) * (a + b), {1, 1}));
  EXPECT_EQ(vlk(g.diagram, 0, 1), 2);
  EXPECT_EQ(vlk(g.diagram, 1, 0), 2);
}

TEST(Connect, RenamesClashingLowerLabels) {
  auto g = connect(clasp(), clasp());
  std::set<std::string> labels;
  for (const auto& c : g.diagram.chords) labels.insert(c.label);
  EXPECT_EQ(labels.size(), 4u);
  EXPECT_TRUE(labels.contains("1"));
  EXPECT_TRUE(labels.contains("u_1"));
}

TEST(Connect, CountMismatch) {
  EXPECT_THROW(connect(clasp(), identity_braid(3)), GluingError);
}

TEST(Connect, DirectionClash) {
  // The lower strand leaves through its top point, meeting the upper strand head-on.
  auto up = parse("tangle 1 1\ncomponent A long B1:in T1:out\n");
  EXPECT_THROW(connect(identity_braid(1), up), GluingError);
}

TEST(Connect, CapAndCupCloseUp) {
  auto cap = parse("tangle 0 2\ncomponent C long B1:in B2:out\n");
  auto cup = parse("tangle 2 0\ncomponent C long T2:in T1:out\n");
  auto g = connect(cap, cup);
  ASSERT_TRUE(is_valid(g.diagram));
  ASSERT_EQ(g.diagram.components.size(), 1u);
  EXPECT_TRUE(g.diagram.components[0].is_closed());
  EXPECT_EQ(g.component_map[0].size(), 2u);
  EXPECT_EQ(g.relations.pairs.size(), 2u);
}

TEST(Connect, ClosedComponentsRideAlong) {
  auto t = parse(
      "tangle 1 1\n"
      "component O closed\nO1+ O2+ U1+ U2+\n"
      "component A long T1:in B1:out\n");
  auto g = connect(t, identity_braid(1));
  ASSERT_EQ(g.diagram.components.size(), 2u);
  EXPECT_TRUE(g.diagram.components[0].is_closed());
  EXPECT_EQ(p_sc(g.diagram), p_sc(t));
  EXPECT_EQ(g.upper_var_map(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(g.lower_var_map(), (std::vector<std::size_t>{1}));
}

TEST(Connect, ComponentMapCoversEveryInput) {
  Rng rng(50);
  for (int k = 0; k < 30; ++k) {
    auto t = random_diagram(rng, {.closed = 1, .strands = 3, .chords = 6, .permute_bottom = true});
    auto u = random_diagram(rng, {.strands = 3, .chords = 6, .permute_bottom = true});
    auto g = connect(t, u);
    ASSERT_TRUE(is_valid(g.diagram));
    std::size_t uppers = 0;
    std::size_t lowers = 0;
    for (const auto& group : g.component_map) {
      for (const auto& ic : group) (ic.tangle == Operand::Upper ? uppers : lowers)++;
    }
    EXPECT_EQ(uppers, t.components.size());
    EXPECT_EQ(lowers, u.components.size());
    EXPECT_EQ(g.relations.pairs.size(), 3u);
    EXPECT_EQ(g.diagram.chords.size(), 12u);
  }
}

class StringLinkSum : public ::testing::TestWithParam<int> {};

TEST_P(StringLinkSum, IsAdditiveAndCommutative) {
  Rng rng(static_cast<std::uint64_t>(GetParam()) + 1000);
  const std::size_t n = 2 + GetParam() % 2;
  std::uniform_int_distribution<std::size_t> chords(0, 8);
  auto t = random_string_link(rng, n, chords(rng));
  auto u = random_string_link(rng, n, chords(rng));
  const Rational a = Rational::parse("2/3");
  const Rational b = Rational::parse("-7/4");

  auto psc = [](const TangleDiagram& d) { return p_sc(d); };
  auto plk = [&](const TangleDiagram& d) { return p_lk(d, a, b); };
  auto plkL = [&](const TangleDiagram& d) { return p_lk_L(d, a, b); };

  // For string links both var maps are the identity, so the sum needs no rewriting.
  auto tu = connect(t, u).diagram;
  auto ut = connect(u, t).diagram;
  ASSERT_TRUE(is_string_link(tu));
  EXPECT_EQ(p_sc(tu), p_sc(t) + p_sc(u));
  EXPECT_EQ(p_lk(tu, a, b), p_lk(t, a, b) + p_lk(u, a, b));
  EXPECT_EQ(p_lk_L(tu, a, b), p_lk_L(t, a, b) + p_lk_L(u, a, b));
  EXPECT_EQ(p_sc(ut), p_sc(tu));
  EXPECT_EQ(p_lk(ut, a, b), p_lk(tu, a, b));
  EXPECT_EQ(p_lk_L(ut, a, b), p_lk_L(tu, a, b));
  expect_additive(t, u, psc);
  expect_additive(t, u, plk);
  expect_additive(t, u, plkL);
}

INSTANTIATE_TEST_SUITE_P(Seeds, StringLinkSum, ::testing::Range(0, 40));

TEST(PermutedSum, SelfCrossingsAndLinkingNumbersAdd) {
  Rng rng(60);
  for (int k = 0; k < 60; ++k) {
    auto t = random_diagram(rng, {.closed = static_cast<std::size_t>(k % 2), .strands = 3, .chords = 7,
                                  .permute_bottom = true});
    auto u = random_diagram(rng, {.strands = 3, .chords = 7, .permute_bottom = true});
    auto g = connect(t, u);
    expect_additive(t, u, [](const TangleDiagram& d) { return p_sc(d); });

    // vlk of merged components is the sum of the glued pieces' vlk.
    auto sum = vlk_matrix(g.diagram);
    auto tmap = g.upper_var_map();
    auto umap = g.lower_var_map();
    IntMatrix expected(sum.size(), std::vector<long>(sum.size(), 0));
    auto vt = vlk_matrix(t);
    auto vu = vlk_matrix(u);
    for (std::size_t i = 0; i < vt.size(); ++i) {
      for (std::size_t j = 0; j < vt.size(); ++j) expected[tmap[i]][tmap[j]] += vt[i][j];
    }
    for (std::size_t i = 0; i < vu.size(); ++i) {
      for (std::size_t j = 0; j < vu.size(); ++j) expected[umap[i]][umap[j]] += vu[i][j];
    }
    EXPECT_EQ(sum, expected);

    // With a = b the cross terms are symmetric in i and j.
    const Rational a = Rational::parse("5/2");
    expect_additive(t, u, [&](const TangleDiagram& d) { return p_lk(d, a, a); });
    expect_additive(t, u, [&](const TangleDiagram& d) { return p_lk_L(d, a, a); });
  }
}

TEST(PermutedSum, UnequalWeightsSeeTheVariableOrder) {
  // A relation that swaps the order of two components moves U's crossing
  // from the a-slot to the b-slot, so the quotient sum differs when a != b.
  auto swap = parse("tangle 2 2\ncomponent A long T1:in B2:out\ncomponent B long T2:in B1:out\n");
  auto u = parse("tangle 2 2\ncomponent A long T1:in B1:out\nO1+\ncomponent B long T2:in B2:out\nU1+\n");
  auto g = connect(swap, u);
  const Rational a = 1;
  const Rational b = 2;
  auto parts = pull_back(g, swap, u, [&](const TangleDiagram& d) { return p_lk(d, a, b); });
  EXPECT_EQ(p_lk(g.diagram, a, b), LaurentPoly::mono(2, b, {1, 1}));
  EXPECT_EQ(parts.upper + parts.lower, LaurentPoly::mono(2, a, {1, 1}));
  auto sym = pull_back(g, swap, u, [&](const TangleDiagram& d) { return p_lk(d, a, a); });
  EXPECT_EQ(p_lk(g.diagram, a, a), sym.upper + sym.lower);
}

TEST(StringLink, Recognition) {
  EXPECT_TRUE(is_string_link(identity_braid(3)));
  EXPECT_TRUE(is_string_link(clasp()));
  EXPECT_TRUE(is_string_link(TangleDiagram{}));
  EXPECT_FALSE(is_string_link(virtual_trefoil()));
  EXPECT_FALSE(is_string_link(parse("tangle 2 2\ncomponent A long T1:in B2:out\ncomponent B long T2:in B1:out\n")));
  EXPECT_FALSE(is_string_link(parse("tangle 1 1\ncomponent A long T1:in B1:out\ncomponent O closed\n")));
}

TEST(Closure, OfIdentityIsUnlink) {
  auto d = closure(identity_braid(3));
  EXPECT_EQ(d.top, 0);
  EXPECT_EQ(d.bottom, 0);
  ASSERT_EQ(d.components.size(), 3u);
  for (const auto& c : d.components) EXPECT_TRUE(c.is_closed());
  EXPECT_TRUE(is_zero(p_lk(d, 1, 1)));
}

TEST(Closure, KeepsChordData) {
  auto d = closure(clasp());
  EXPECT_TRUE(is_valid(d));
  EXPECT_EQ(vlk(d, 0, 1), 1);
  EXPECT_EQ(vlk(d, 1, 0), 1);
  EXPECT_THROW(closure(virtual_trefoil()), std::invalid_argument);
}

TEST(Closure, LongKnotClosesToHenrich) {
  EXPECT_EQ(p_sc(long_virtual_trefoil()), henrich_pt(closure(long_virtual_trefoil())));
  Rng rng(70);
  for (int k = 0; k < 30; ++k) {
    auto d = random_string_link(rng, 1, 1 + k % 9);
    EXPECT_EQ(p_sc(d), henrich_pt(closure(d)));
  }
}

TEST(Generator, PrescribedLinkingNumbers) {
  auto unlink = gen_vlk_link(0, 0);
  EXPECT_EQ(unlink.components.size(), 2u);
  EXPECT_TRUE(unlink.chords.empty());
  EXPECT_TRUE(is_zero(p_lk_L(unlink, 1, 1)));

  auto d = gen_vlk_link(3, 2);
  EXPECT_EQ(vlk(d, 0, 1), 3);
  EXPECT_EQ(vlk(d, 1, 0), -2);
  EXPECT_TRUE(is_zero(p_sc(d)));
  EXPECT_TRUE(is_valid(d));
}

TEST(Generator, SeparationWitness) {
  auto d = gen_vlk_link(2, 1);
  EXPECT_TRUE(is_zero(p_lk(d, 1, 2)));
  EXPECT_EQ(p_lk_L(d, 1, 2), LaurentPoly::mono(2, 2, {1, -1}) + LaurentPoly::mono(2, -2, {-1, 1}));
}

TEST(Generator, RejectsNegativeCounts) {
  EXPECT_THROW(gen_vlk_link(-1, 0), std::invalid_argument);
  EXPECT_THROW(gen_vlk_string_link(0, -2), std::invalid_argument);
}

TEST(Generator, StringLinkVersionClosesToTheLink) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      auto s = gen_vlk_string_link(a, b);
      EXPECT_TRUE(is_string_link(s));
      EXPECT_EQ(vlk_matrix(closure(s)), vlk_matrix(gen_vlk_link(a, b)));
    }
  }
}

}  // namespace
}  // namespace vtangle
