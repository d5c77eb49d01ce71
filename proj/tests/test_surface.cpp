#include <gtest/gtest.h>

#include "origami/constructions.hpp"
#include "origami/surface.hpp"

using namespace origami;

namespace {

GridSurface origami_of(const char* h, const char* v, int d) {
  return GridSurface::from_permutations(Perm::parse_cycles(h, d), Perm::parse_cycles(v, d));
}

GridSurface torus() { return origami_of("()", "()", 1); }

int cylinder_area(const std::vector<Cylinder>& cs) {
  int a = 0;
  for (const auto& c : cs) a += c.circumference * c.width;
  return a;
}

}  // namespace

TEST(FromPermutations, Torus) {
  const auto t = torus();
  EXPECT_EQ(t.degree(), 1);
  EXPECT_EQ(genus(t), 1);
  EXPECT_TRUE(stratum(t).alpha.empty());
}

TEST(FromPermutations, H2IsGenusTwo) {
  const auto s = origami_of("(1,2)", "(2,3)", 3);
  EXPECT_EQ(genus(s), 2);
  EXPECT_EQ(stratum(s), StratumSig({2}));
}

TEST(FromPermutations, O3IsStratumFour) {
  const auto s = origami_of("(1,3,5)", "(1,2)(3,4)", 5);
  EXPECT_EQ(genus(s), 3);
  EXPECT_EQ(stratum(s), StratumSig({4}));
}

TEST(FromPermutations, RejectsDisconnected) {
  EXPECT_THROW(origami_of("(1,2)", "(1,2)", 3), std::invalid_argument);
}

TEST(Validate, RejectsBadPositions) {
  GridData g;
  g.rx = 2;
  g.cells = {Cell{0, 0, 0, 0}, Cell{1, 0, 1, 1}};  // right does not advance a
  EXPECT_THROW(GridSurface{g}, std::invalid_argument);
}

TEST(Refine, Examples) {
  const auto r = refine(torus(), 2, 2);
  EXPECT_EQ(r.num_cells(), 4);
  EXPECT_EQ(r.degree(), 1);
  const auto h2 = origami_of("(1,2)", "(2,3)", 3);
  EXPECT_EQ(refine(h2, 1, 1), h2);
  for (const auto& s : {h2, origami_of("(1,3,5)", "(1,2)(3,4)", 5), origami_of("(1,2,3)", "(1,4)", 4)}) {
    EXPECT_EQ(stratum(refine(s, 2, 1)), stratum(s));
    EXPECT_EQ(stratum(refine(s, 3, 2)), stratum(s));
    EXPECT_EQ(refine(s, 3, 2).degree(), s.degree());
  }
}

// Stratum from the complex agrees with commutator cycle data for every
// transitive pair in S_4.
TEST(Stratum, MatchesCommutatorOnAllS4Pairs) {
  std::vector<int> a(4), b(4);
  std::iota(a.begin(), a.end(), 0);
  do {
    std::iota(b.begin(), b.end(), 0);
    do {
      const Perm h(a), v(b);
      if (!is_transitive(h, v)) continue;
      const auto s = GridSurface::from_permutations(h, v);
      EXPECT_EQ(stratum(s).alpha, cycle_type(commutator(h, v)).divisor_data());
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
}

TEST(Cylinders, TorusVertical) {
  const auto cs = cylinders(torus(), Direction::Vertical);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].circumference, 1);
}

TEST(Cylinders, OgStructure) {
  for (int g = 3; g <= 6; ++g) {
    const auto s = minimal_cover(MinimalKind::Odd, g, 2 * g - 1);
    const auto vert = cylinders(s, Direction::Vertical);
    int two = 0, one = 0;
    for (const auto& c : vert) (c.circumference == 2 ? two : one) += 1;
    EXPECT_EQ(two, g - 1);
    EXPECT_EQ(one, 1);
    const auto hor = cylinders(s, Direction::Horizontal);
    std::vector<int> circ;
    for (const auto& c : hor) circ.push_back(c.circumference);
    std::sort(circ.begin(), circ.end());
    std::vector<int> want(static_cast<std::size_t>(g - 1), 1);
    want.push_back(g);
    EXPECT_EQ(circ, want);
    EXPECT_EQ(cylinder_area(vert), s.num_cells());
    EXPECT_EQ(cylinder_area(hor), s.num_cells());
  }
}

TEST(Cylinders, EveryCellInOneCylinder) {
  const auto s = refine(origami_of("(1,2,3)(4,5)", "(1,4)(2,5,6)", 6), 2, 3);
  for (auto dir : {Direction::Horizontal, Direction::Vertical}) {
    std::vector<int> hits(static_cast<std::size_t>(s.num_cells()), 0);
    for (const auto& c : cylinders(s, dir)) {
      EXPECT_EQ(c.circumference * c.width, static_cast<int>(c.cells.size()));
      for (int x : c.cells) ++hits[x];
    }
    for (int h : hits) EXPECT_EQ(h, 1);
  }
}

TEST(CutAndReglue, EmptyIsIdentity) {
  const auto s = origami_of("(1,2)", "(2,3)", 3);
  EXPECT_EQ(cut_and_reglue(s, {}), s);
}

TEST(CutAndReglue, TwoSlitTorusPairIsGenusTwo) {
  GridData g = disjoint_union(detail::torus_strip(1, 2), detail::torus_strip(1, 2));
  GridSurface s(cut_and_reglue_data(g, {SlitFamily::cyclic(Direction::Horizontal, {Slit{0, 1}, Slit{2, 1}})}));
  EXPECT_EQ(genus(s), 2);
  EXPECT_EQ(stratum(s), StratumSig({1, 1}));
  EXPECT_EQ(s.degree(), 2);
}

TEST(CutAndReglue, Errors) {
  const auto s = refine(origami_of("(1,2)", "(2,3)", 3), 2, 1);
  // Overlapping slits.
  EXPECT_THROW(cut_and_reglue(s, {SlitFamily::cyclic(Direction::Horizontal, {Slit{0, 1}, Slit{0, 1}})}), std::invalid_argument);
  // Length mismatch.
  EXPECT_THROW(cut_and_reglue(s, {SlitFamily::cyclic(Direction::Horizontal, {Slit{0, 2}, Slit{2, 1}})}), std::invalid_argument);
  // Disconnecting: two slits on a torus glued to each other split it.
  const auto t = refine(torus(), 1, 2);
  EXPECT_THROW(cut_and_reglue(t, {SlitFamily::cyclic(Direction::Horizontal, {Slit{0, 1}, Slit{1, 1}})}), std::invalid_argument);
}

TEST(Canonical, IdempotentAndConjugationInvariant) {
  const auto h = Perm::parse_cycles("(1,2)", 3), v = Perm::parse_cycles("(2,3)", 3);
  const auto s = GridSurface::from_permutations(h, v);
  const auto c = canonical_form(s);
  EXPECT_EQ(canonical_form(c), c);
  std::vector<int> im{0, 1, 2};
  do {
    const Perm r(im);
    EXPECT_EQ(canonical_form(GridSurface::from_permutations(conjugate(h, r), conjugate(v, r))), c);
  } while (std::next_permutation(im.begin(), im.end()));
  const auto o3 = origami_of("(1,3,5)", "(1,2)(3,4)", 5);
  EXPECT_NE(canonical_form(minimal_cover(MinimalKind::Hyp, 3, 5)), canonical_form(o3));
}

TEST(Canonical, TranslationInvariantOnRefinedGrid) {
  // Shifting torus positions by a grid translation gives an equivalent cover.
  const auto s = refine(origami_of("(1,2)", "(2,3)", 3), 2, 1);
  GridData d = s.data();
  for (auto& c : d.cells) c.a = (c.a + 1) % d.rx;
  EXPECT_EQ(canonical_form(GridSurface(d)), canonical_form(s));
}
