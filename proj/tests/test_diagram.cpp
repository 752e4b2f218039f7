#include "support.hpp"

#include "vtangle/diagram.hpp"
#include "vtangle/invariants.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace vtangle {
namespace {

using namespace vtangle::testing;

bool mentions(const std::vector<std::string>& problems, const std::string& needle) {
  return std::any_of(problems.begin(), problems.end(),
                     [&](const std::string& p) { return p.find(needle) != std::string::npos; });
}

TEST(Validate, EmptyDiagramIsValid) {
  TangleDiagram d;
  EXPECT_TRUE(validate(d).empty());
  EXPECT_TRUE(is_valid(d));
}

TEST(Validate, ClaspIsValid) { EXPECT_TRUE(validate(clasp()).empty()); }

TEST(Validate, DanglingChord) {
  TangleDiagram d;
  d.components.push_back(Component::closed("K", {{"1", ChordEnd::A}, {"2", ChordEnd::A}, {"2", ChordEnd::B}}));
  d.chords = {Chord::classical("1", 1, ChordEnd::A), Chord::classical("2", 1, ChordEnd::A)};
  auto problems = validate(d);
  EXPECT_TRUE(mentions(problems, "dangling chord 1"));
}

TEST(Validate, ReportsEveryViolation) {
  TangleDiagram d;
  d.top = 1;
  d.bottom = 1;
  // starts at an Out point and leaves B1 unused
  d.components.push_back(Component::long_strand("A", {Side::Top, 1, Direction::Out}, {Side::Top, 1, Direction::Out},
                                                {{"x", ChordEnd::A}, {"x", ChordEnd::A}}));
  d.components.push_back(Component::closed("A"));
  d.chords = {Chord::classical("x", 2, ChordEnd::A), Chord::classical("y", 1, ChordEnd::A)};
  auto problems = validate(d);
  EXPECT_GE(problems.size(), 5u);
  EXPECT_TRUE(mentions(problems, "A"));
  EXPECT_TRUE(mentions(problems, "x"));
  EXPECT_TRUE(mentions(problems, "y"));
  EXPECT_FALSE(is_valid(d));
}

TEST(Validate, UnknownChordInVisits) {
  TangleDiagram d;
  d.components.push_back(Component::closed("K", {{"ghost", ChordEnd::A}, {"ghost", ChordEnd::B}}));
  EXPECT_FALSE(validate(d).empty());
}

TEST(Validate, IsPureAndIdempotent) {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    auto d = random_diagram(rng, {.closed = 1, .strands = 2, .chords = 6, .singular = 1});
    auto copy = d;
    EXPECT_EQ(validate(d), validate(d));
    EXPECT_TRUE(validate(d).empty());
    EXPECT_TRUE(equal_diagrams(d, copy));
  }
}

TEST(Diagram, EndpointCountMatchesVisits) {
  Rng rng(11);
  for (int k = 0; k < 30; ++k) {
    auto d = random_diagram(rng, {.closed = 2, .strands = 1, .chords = static_cast<std::size_t>(k % 9)});
    EXPECT_EQ(d.visit_count(), 2 * d.chords.size());
  }
}

TEST(Diagram, LocateFindsBothEnds) {
  auto d = virtual_trefoil();
  auto a = d.locate("1", ChordEnd::A);
  auto b = d.locate("1", ChordEnd::B);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->position, 0u);
  EXPECT_EQ(b->position, 2u);
  EXPECT_FALSE(d.locate("9", ChordEnd::A));

  DiagramIndex index(d);
  EXPECT_EQ(index.over_location("2").position, 1u);
  EXPECT_EQ(index.under_location("2").position, 3u);
}

TEST(EqualDiagrams, ReflexiveAndRotationInvariant) {
  auto d = classical_trefoil();
  EXPECT_TRUE(equal_diagrams(d, d));
  auto rotated = d;
  auto& v = rotated.components[0].visits;
  std::rotate(v.begin(), v.begin() + 1, v.end());
  EXPECT_TRUE(equal_diagrams(d, rotated));
  EXPECT_TRUE(equal_diagrams(rotated, d));
}

TEST(EqualDiagrams, SignFlipDiffers) {
  auto d = clasp();
  auto flipped = d;
  flipped.chords[0].sign = -1;
  EXPECT_FALSE(equal_diagrams(d, flipped));
}

TEST(EqualDiagrams, LongComponentsDoNotRotate) {
  auto d = long_virtual_trefoil();
  auto rotated = d;
  auto& v = rotated.components[0].visits;
  std::rotate(v.begin(), v.begin() + 1, v.end());
  EXPECT_FALSE(equal_diagrams(d, rotated));
}

TEST(EqualDiagrams, ComponentOrderMatters) {
  auto d = clasp();
  auto swapped = d;
  std::swap(swapped.components[0], swapped.components[1]);
  EXPECT_FALSE(equal_diagrams(d, swapped));
}

TEST(EqualDiagrams, EndNamingIsIrrelevant) {
  auto d = virtual_trefoil();
  auto renamed = d;
  for (auto& v : renamed.components[0].visits) {
    if (v.chord == "1") v.end = other(v.end);
  }
  renamed.chords[0].over = other(renamed.chords[0].over);
  EXPECT_TRUE(equal_diagrams(d, renamed));
}

TEST(ReverseComponent, IsAnInvolution) {
  Rng rng(5);
  for (int k = 0; k < 40; ++k) {
    auto d = random_diagram(rng, {.closed = 1, .strands = 2, .chords = 7, .singular = k % 2});
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      auto once = reverse_component(d, c);
      EXPECT_TRUE(is_valid(once));
      EXPECT_TRUE(equal_diagrams(reverse_component(once, c), d));
    }
  }
}

TEST(ReverseComponent, LongStrandSwapsEndpoints) {
  auto d = clasp();
  auto r = reverse_component(d, "A");
  const auto& a = r.components[0];
  EXPECT_EQ(a.start, (BoundaryPoint{Side::Bottom, 1, Direction::In}));
  EXPECT_EQ(a.end, (BoundaryPoint{Side::Top, 1, Direction::Out}));
  ASSERT_EQ(a.visits.size(), 2u);
  EXPECT_EQ(a.visits[0].chord, "2");
  EXPECT_TRUE(is_valid(r));
}

TEST(ReverseComponent, UnknownIdThrows) {
  EXPECT_THROW(reverse_component(clasp(), "Z"), std::invalid_argument);
  EXPECT_THROW(reverse_component(clasp(), 7), std::invalid_argument);
}

TEST(ReverseComponent, PreservesSelfCrossingPolynomial) {
  EXPECT_EQ(p_sc(reverse_component(virtual_trefoil(), 0)), p_sc(virtual_trefoil()));
  Rng rng(8);
  for (int k = 0; k < 50; ++k) {
    auto d = random_diagram(rng, {.closed = 1, .strands = 1, .chords = 8});
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      EXPECT_EQ(p_sc(reverse_component(d, c)), p_sc(d));
    }
  }
}

TEST(ReverseComponent, FlipsLinkingSignsOfItsCrossings) {
  // Reversing strand A turns both clasp crossings negative; over data stays.
  auto r = reverse_component(clasp(), "A");
  EXPECT_EQ(vlk(r, 0, 1), -1);
  EXPECT_EQ(vlk(r, 1, 0), -1);
}

}  // namespace
}  // namespace vtangle
