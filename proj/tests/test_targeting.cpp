#include <gtest/gtest.h>

#include "origami/targeting.hpp"

using namespace origami;

namespace {

std::vector<std::vector<int>> partitions_of(int n, int mx) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int p = std::min(n, mx); p >= 1; --p)
    for (auto r : partitions_of(n - p, p)) {
      r.insert(r.begin(), p);
      out.push_back(r);
    }
  return out;
}

std::vector<std::string> ops(const Certificate& c) {
  std::vector<std::string> out;
  for (const auto& s : c.script) out.push_back(s.to_string());
  return out;
}

}  // namespace

TEST(Table, Examples) {
  using enum ComponentLabel;
  EXPECT_EQ(components_of(StratumSig({2})), std::vector<ComponentLabel>{Hyperelliptic});
  EXPECT_EQ(components_of(StratumSig({4})), (std::vector<ComponentLabel>{Hyperelliptic, OddSpin}));
  EXPECT_EQ(components_of(StratumSig({6})), (std::vector<ComponentLabel>{Hyperelliptic, EvenSpin, OddSpin}));
  EXPECT_EQ(components_of(StratumSig({1, 2, 3})), std::vector<ComponentLabel>{Unique});
  EXPECT_EQ(components_of(StratumSig({1, 1})), std::vector<ComponentLabel>{Hyperelliptic});
  EXPECT_EQ(components_of(StratumSig({2, 2})), (std::vector<ComponentLabel>{Hyperelliptic, OddSpin}));
  EXPECT_EQ(components_of(StratumSig({3, 3})), (std::vector<ComponentLabel>{Hyperelliptic, NonHyperelliptic}));
  EXPECT_EQ(components_of(StratumSig({4, 4})), (std::vector<ComponentLabel>{Hyperelliptic, EvenSpin, OddSpin}));
  EXPECT_EQ(components_of(StratumSig({2, 4})), (std::vector<ComponentLabel>{EvenSpin, OddSpin}));
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(StratumSig({2, 4, 6}), 1), 0);
  for (int s : {0, 1}) EXPECT_EQ(theta(StratumSig({8}), s), s);
  EXPECT_EQ(theta(StratumSig({2, 2}), 0), 1);
  EXPECT_THROW(theta(StratumSig({1, 3}), 0), std::invalid_argument);
}

TEST(Build, WorkedExampleOneTwoThree) {
  const auto c = build(StratumSig({1, 2, 3}), ComponentLabel::Unique, 4);
  EXPECT_TRUE(verify(c));
  EXPECT_EQ(ops(c), (std::vector<std::string>{"odd_pair_base(m=2,n=1,d=4)", "add_even_zero(k=1)"}));
  EXPECT_EQ(c.stratum, StratumSig({1, 2, 3}));
  EXPECT_EQ(c.degree, 4);
}

TEST(Build, WorkedExampleTwoFourSix) {
  const auto c = build(StratumSig({2, 4, 6}), ComponentLabel::OddSpin, 7);
  EXPECT_TRUE(verify(c));
  EXPECT_EQ(ops(c), (std::vector<std::string>{"minimal_cover(kind=2,g=4,d=7)", "add_even_zero(k=2)", "add_even_zero(k=1)"}));
  EXPECT_EQ(c.stratum, StratumSig({2, 4, 6}));
  EXPECT_EQ(c.component_evidence.spin->parity, 1);
}

TEST(Build, MinimalHyperellipticIsH) {
  for (int g = 2; g <= 5; ++g) {
    const auto c = build(StratumSig({2 * g - 2}), ComponentLabel::Hyperelliptic, 2 * g - 1);
    EXPECT_EQ(c.surface, minimal_cover(MinimalKind::Hyp, g, 2 * g - 1));
    EXPECT_EQ(c.component_evidence.involution->fixed_points(), 2 * g + 2);
  }
}

TEST(Build, Errors) {
  EXPECT_THROW(build(StratumSig({4}), ComponentLabel::EvenSpin, 6), std::invalid_argument);
  EXPECT_THROW(build(StratumSig({1, 2, 3}), ComponentLabel::OddSpin, 5), std::invalid_argument);
  EXPECT_THROW(build(StratumSig({6}), ComponentLabel::OddSpin, 6), std::invalid_argument);
  EXPECT_THROW(build(StratumSig(std::vector<int>{}), ComponentLabel::Unique, 3), std::invalid_argument);
}

// Every component of every stratum of genus 2..4, at d = max+1 .. max+3.
TEST(Build, SweepGenusTwoToFour) {
  int built = 0;
  for (int g = 2; g <= 4; ++g)
    for (const auto& p : partitions_of(2 * g - 2, 2 * g - 2)) {
      const StratumSig st(p);
      for (auto comp : components_of(st))
        for (int d = st.max_order() + 1; d <= st.max_order() + 3; ++d) {
          SCOPED_TRACE(st.to_string() + " " + to_string(comp) + " d=" + std::to_string(d));
          const auto c = build(st, comp, d);
          const auto rep = verify_report(c);
          EXPECT_TRUE(rep.ok) << (rep.diffs.empty() ? "" : rep.diffs.front());
          EXPECT_EQ(c.degree, d);
          EXPECT_EQ(c.surface.degree(), d);
          EXPECT_LT(stratum(c.surface).max_order(), d);
          ++built;
        }
    }
  EXPECT_EQ(built, 75);
}

TEST(Build, HigherGenusSamples) {
  const std::vector<std::pair<std::vector<int>, ComponentLabel>> cases{
      {{4, 4}, ComponentLabel::EvenSpin}, {{4, 4}, ComponentLabel::OddSpin}, {{2, 2, 4}, ComponentLabel::EvenSpin},
      {{1, 3, 4}, ComponentLabel::Unique}, {{3, 5}, ComponentLabel::Unique}, {{5, 5}, ComponentLabel::NonHyperelliptic},
      {{2, 8}, ComponentLabel::EvenSpin}, {{1, 1, 3, 3}, ComponentLabel::Unique}};
  for (const auto& [a, comp] : cases)
    for (int d : {*std::max_element(a.begin(), a.end()) + 1, 9}) {
      SCOPED_TRACE(StratumSig(a).to_string() + " d=" + std::to_string(d));
      EXPECT_TRUE(verify(build(StratumSig(a), comp, d)));
    }
}

TEST(Build, Deterministic) {
  const auto a = build(StratumSig({2, 2, 2}), ComponentLabel::EvenSpin, 3);
  const auto b = build(StratumSig({2, 2, 2}), ComponentLabel::EvenSpin, 3);
  EXPECT_EQ(a.surface, b.surface);
  EXPECT_EQ(a.script, b.script);
}

TEST(Verify, TamperedLabelFails) {
  auto c = build(StratumSig({6}), ComponentLabel::OddSpin, 7);
  ASSERT_TRUE(verify(c));
  c.component = ComponentLabel::EvenSpin;
  const auto r = verify_report(c);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.diffs.empty());
}

TEST(Verify, TamperedFieldsFail) {
  const auto good = build(StratumSig({2, 4}), ComponentLabel::EvenSpin, 5);
  auto c = good;
  c.degree = 6;
  EXPECT_FALSE(verify(c));
  c = good;
  c.stratum = StratumSig({1, 5});
  EXPECT_FALSE(verify(c));
  c = good;
  c.component_evidence.spin->indices[0] += 1;
  EXPECT_FALSE(verify(c));
  c = good;
  c.script.pop_back();
  EXPECT_FALSE(verify(c));
  c = good;
  c.script.clear();
  EXPECT_FALSE(verify(c));
}

TEST(Verify, ReplayIsCanonicallyIdentical) {
  for (const auto& [a, comp, d] : std::vector<std::tuple<std::vector<int>, ComponentLabel, int>>{
           {{1, 2, 3}, ComponentLabel::Unique, 4}, {{2, 4, 6}, ComponentLabel::OddSpin, 7},
           {{1, 1, 1, 1}, ComponentLabel::Unique, 2}, {{4, 4}, ComponentLabel::EvenSpin, 6}}) {
    const auto c = build(StratumSig(a), comp, d);
    EXPECT_EQ(canonical_form(replay(c.script)), canonical_form(c.surface));
  }
}

TEST(GridSearch, FindsDegreeTwoCover) {
  const auto c = build(StratumSig({1, 1, 1, 1}), ComponentLabel::Unique, 2);
  ASSERT_EQ(c.script.size(), 1u);
  EXPECT_EQ(c.script[0].op, "grid_search");
  EXPECT_EQ(c.script[0].param("rx"), 4);
  EXPECT_TRUE(verify(c));
}

TEST(GridSearch, MinBranchPoints) {
  EXPECT_EQ(detail::min_branch_points(StratumSig({1, 1, 1, 1}), 2), 4);
  EXPECT_EQ(detail::min_branch_points(StratumSig({1, 1}), 4), 1);
  EXPECT_EQ(detail::min_branch_points(StratumSig({1, 2, 3}), 4), 3);
}

TEST(Replay, RejectsMalformedScripts) {
  EXPECT_THROW(replay({}), std::invalid_argument);
  EXPECT_THROW(replay({detail::step("add_even_zero", {{"k", 1}})}), std::invalid_argument);
  EXPECT_THROW(replay({detail::step("teleport", {})}), std::invalid_argument);
  EXPECT_THROW(replay({detail::step("odd_shape_cover", {{"g", 3}})}), std::invalid_argument);
}
