#include <gtest/gtest.h>

#include <random>

#include "origami/census.hpp"
#include "origami/haupt.hpp"

using namespace origami;

namespace {

GaussianRational gr(const std::string& re, const std::string& im = "0") { return {parse_rational(re), parse_rational(im)}; }

// Unit lattice, area n: a = (1, ..., 1), b = (i, ..., i) with the first b scaled.
Character unit_character(int g, int area) {
  std::vector<GaussianRational> a(g, gr("1")), b(g, gr("0", "1"));
  b[0] = gr("0", std::to_string(area - g + 1));
  return Character(g, a, b);
}

// Random word in symplectic generators acting on (a_i, b_i).
Character symplectic_shuffle(Character chi, std::mt19937& rng, int steps) {
  const int g = chi.genus;
  std::uniform_int_distribution<int> pick(0, g - 1), op(0, 3);
  for (int s = 0; s < steps; ++s) {
    const int i = pick(rng), j = pick(rng);
    switch (op(rng)) {
      case 0: chi.b[i] = chi.b[i] + chi.a[i]; break;
      case 1: chi.a[i] = chi.a[i] + chi.b[i]; break;
      case 2:
        std::swap(chi.a[i], chi.a[j]);
        std::swap(chi.b[i], chi.b[j]);
        break;
      case 3:
        if (i != j) {
          chi.a[i] = chi.a[i] + chi.a[j];
          chi.b[j] = chi.b[j] - chi.b[i];
        }
        break;
    }
  }
  return chi;
}

}  // namespace

TEST(Area, Examples) {
  EXPECT_EQ(area(Character(2, {gr("1"), gr("1")}, {gr("0", "1"), gr("0", "1")})), 2);
  EXPECT_EQ(area(Character(2, {gr("1"), gr("3/2")}, {gr("2"), gr("-7")})), 0);
}

TEST(Area, InvariantUnderSymplecticChange) {
  std::mt19937 rng(12345);
  for (int g : {2, 3}) {
    const Character chi(g == 2 ? Character(2, {gr("1", "1/2"), gr("2/3")}, {gr("0", "1"), gr("-1", "5")})
                               : Character(3, {gr("1"), gr("0", "1/3"), gr("2", "1")}, {gr("1", "1"), gr("3"), gr("0", "-2")}));
    for (int trial = 0; trial < 20; ++trial) EXPECT_EQ(area(symplectic_shuffle(chi, rng, 30)), area(chi));
  }
}

TEST(PeriodLattice, Examples) {
  const auto l = period_lattice(unit_character(2, 2));
  EXPECT_EQ(l.rank, 2);
  EXPECT_EQ(l.covolume, 1);
  EXPECT_TRUE(l.is_unit_square());
  EXPECT_LT(period_lattice(Character(2, {gr("1"), gr("2")}, {gr("1/2"), gr("3")})).rank, 2);
  EXPECT_EQ(period_lattice(Character(2, {gr("1"), gr("0", "1/2")}, {gr("0", "2"), gr("0")})).covolume, Rational(1, 2));
}

TEST(Verdict, Examples) {
  const auto chi = unit_character(2, 2);
  const auto no = haupt_verdict(chi, StratumSig({2}));
  EXPECT_FALSE(no.realizable);
  EXPECT_NE(no.reason.find("does not exceed"), std::string::npos);
  EXPECT_TRUE(haupt_verdict(chi, StratumSig({1, 1})).realizable);
  const Character flat(2, {gr("1"), gr("0", "1")}, {gr("1"), gr("0", "1")});
  const auto neg = haupt_verdict(flat, StratumSig({2}));
  EXPECT_FALSE(neg.realizable);
  EXPECT_NE(neg.reason.find("not positive"), std::string::npos);
  const Character minus(2, {gr("0", "1"), gr("1")}, {gr("1"), gr("0")});
  EXPECT_FALSE(haupt_verdict(minus, StratumSig({1, 1})).realizable);
}

// Every a_i, b_i lies in the lattice, so each det(a_i, b_i) is a multiple of
// the covolume and d_chi comes out integral.
TEST(Verdict, DegreeIsIntegralOnLattices) {
  const Character chi(2, {gr("1"), gr("0", "1")}, {gr("0", "5/2"), gr("0")});
  const auto v = haupt_verdict(chi, StratumSig({1, 1}));
  EXPECT_TRUE(v.realizable);
  EXPECT_EQ(v.lattice.covolume, Rational(1, 2));
  EXPECT_EQ(*v.degree, 5);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<GaussianRational> a, b;
    for (int i = 0; i < 2; ++i) {
      a.push_back({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
      b.push_back({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    }
    const auto w = haupt_verdict(Character(2, a, b), StratumSig({1, 1}));
    if (w.lattice.rank == 2) {
      EXPECT_EQ(w.reason.find("no branched cover"), std::string::npos);
      if (w.area > 0) { EXPECT_TRUE(w.degree.has_value()); }
    }
  }
}

TEST(Verdict, GenusMismatch) {
  EXPECT_THROW(haupt_verdict(unit_character(2, 4), StratumSig({4})), std::invalid_argument);
}

TEST(CharacterOf, TorusAndH2) {
  const auto torus = GridSurface::from_permutations(Perm::identity(1), Perm::identity(1));
  const auto t = character_of(torus);
  EXPECT_EQ(t.genus, 1);
  EXPECT_EQ(area(t), 1);
  const auto h2 = character_of(minimal_cover(MinimalKind::Hyp, 2, 3));
  EXPECT_EQ(area(h2), 3);
  EXPECT_TRUE(period_lattice(h2).is_unit_square());
}

TEST(CharacterOf, FlatAreaIdentityOnFixtures) {
  std::vector<GridSurface> fixtures;
  for (int g = 2; g <= 5; ++g) fixtures.push_back(minimal_cover(MinimalKind::Hyp, g, 2 * g));
  fixtures.push_back(minimal_cover(MinimalKind::Even, 4, 8));
  fixtures.push_back(equal_pair_cover(PairKind::NonHyp, 5, 6));
  fixtures.push_back(odd_pair_base(3, 2, 7));
  fixtures.push_back(add_even_zero(minimal_cover(MinimalKind::Even, 4, 7), 2));
  for (const auto& s : fixtures) {
    const auto chi = character_of(s);
    EXPECT_EQ(area(chi), s.degree());
    EXPECT_TRUE(period_lattice(chi).is_unit_square());
  }
}

TEST(CharacterOf, FlatAreaIdentityOnCensus) {
  for (int d = 1; d <= 4; ++d)
    for (const auto& e : enumerate(d)) EXPECT_EQ(area(character_of(e.surface)), d);
}

TEST(Realize, Examples) {
  const auto r = realize(unit_character(4, 4), StratumSig({1, 2, 3}), ComponentLabel::Unique);
  EXPECT_EQ(r.certificate.degree, 4);
  EXPECT_TRUE(verify(r.certificate));
  const auto h = realize(unit_character(2, 3), StratumSig({2}), ComponentLabel::Hyperelliptic);
  EXPECT_EQ(h.certificate.degree, 3);
  EXPECT_EQ(canonical_form(h.certificate.surface), canonical_form(minimal_cover(MinimalKind::Hyp, 2, 3)));
}

TEST(Realize, HalfCovolume) {
  const Character chi(2, {gr("1"), gr("0", "1/2")}, {gr("0", "2"), gr("0")});
  const auto v = haupt_verdict(chi, StratumSig({1, 1}));
  ASSERT_TRUE(v.realizable);
  EXPECT_EQ(*v.degree, 4);
  const auto r = realize(chi, StratumSig({1, 1}), ComponentLabel::Hyperelliptic);
  EXPECT_EQ(r.certificate.degree, 4);
  const auto normalized = transform(chi, r.normalizing);
  EXPECT_TRUE(period_lattice(normalized).is_unit_square());
  EXPECT_EQ(area(normalized), 4);
  const auto got = character_of(r.certificate.surface);
  EXPECT_EQ(area(got), area(normalized));
  EXPECT_TRUE(period_lattice(got).is_unit_square());
}

TEST(Realize, RoundTripOnFixtures) {
  for (const auto& s : {minimal_cover(MinimalKind::Odd, 4, 8), odd_pair_base(3, 2, 6), equal_pair_cover(PairKind::Hyp, 3, 5)}) {
    const auto r = realize(character_of(s), stratum(s), classify_component(s));
    EXPECT_EQ(r.certificate.stratum, stratum(s));
    EXPECT_EQ(r.certificate.degree, s.degree());
  }
}

TEST(Realize, RejectsUnrealizable) {
  EXPECT_THROW(realize(unit_character(2, 2), StratumSig({2}), ComponentLabel::Hyperelliptic), std::invalid_argument);
}
