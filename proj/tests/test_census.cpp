#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <numeric>

#include "origami/census.hpp"
#include "origami/constructions.hpp"

using namespace origami;

namespace {

// Regression constant: 3-square origamis in stratum (2), found by a plain
// loop over all 36 pairs of S_3 with a transitivity filter and dedup.
constexpr int kDegreeThreeStratumTwo = 3;

// Independent count: labelled transitive pairs per stratum via the commutator
// cycle type, no canonical forms involved.
std::map<StratumSig, std::uint64_t> labelled_by_stratum(int d) {
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<StratumSig, std::uint64_t> out;
  for (const auto& h : all)
    for (const auto& v : all) {
      std::vector<int> comp(static_cast<std::size_t>(d));
      std::iota(comp.begin(), comp.end(), 0);
      auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
      };
      for (int i = 0; i < d; ++i) {
        comp[find(i)] = find(h[i]);
        comp[find(i)] = find(v[i]);
      }
      bool transitive = true;
      for (int i = 0; i < d; ++i) transitive = transitive && find(i) == find(0);
      if (!transitive) continue;
      const auto ct = cycle_type(commutator(Perm(h), Perm(v)));
      std::vector<int> alpha;
      for (int part : ct.parts())
        if (part > 1) alpha.push_back(part - 1);
      ++out[StratumSig(alpha)];
    }
  return out;
}

}  // namespace

TEST(Census, DegreeOneIsTheTorus) {
  const auto e = enumerate(1);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_TRUE(e[0].stratum.alpha.empty());
  EXPECT_EQ(genus(e[0].surface), 1);
}

TEST(Census, DegreeTwoIsAllGenusOne) {
  for (const auto& e : enumerate(2)) EXPECT_EQ(genus(e.surface), 1);
}

TEST(Census, DegreeThreeFrozenCount) {
  int n = 0;
  for (const auto& e : enumerate(3))
    if (e.stratum == StratumSig({2})) ++n;
  EXPECT_EQ(n, kDegreeThreeStratumTwo);
}

TEST(Census, ClassSizesSumToTransitivePairs) {
  const std::uint64_t known[] = {0, 1, 3, 26, 426, 11064, 413640};
  for (int d = 1; d <= 6; ++d) {
    EXPECT_EQ(transitive_pair_count(d), known[d]);
    std::uint64_t total = 0;
    for (const auto& e : enumerate(d)) total += e.class_size;
    EXPECT_EQ(total, known[d]) << "d=" << d;
  }
}

TEST(Census, StratumWeightsMatchBruteForce) {
  for (int d = 2; d <= 5; ++d) {
    std::map<StratumSig, std::uint64_t> got;
    for (const auto& e : enumerate(d)) got[e.stratum] += e.class_size;
    EXPECT_EQ(got, labelled_by_stratum(d)) << "d=" << d;
  }
}

TEST(Census, EntriesAreCanonical) {
  for (const auto& e : enumerate(5)) EXPECT_EQ(canonical_form(e.surface), e.surface);
}

TEST(Census, JobsDoNotChangeOutput) {
  const auto a = enumerate(6, 1);
  const auto b = enumerate(6, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].surface, b[i].surface);
    EXPECT_EQ(a[i].component, b[i].component);
  }
}

TEST(CrossValidate, DegreeThree) {
  const auto r = cross_validate(3);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.partition.at(StratumSig({2})).at(ComponentLabel::Hyperelliptic), 0u);
}

TEST(CrossValidate, DegreeTwoHasNoHighZero) {
  for (const auto& e : enumerate(2))
    if (e.primitive) { EXPECT_TRUE(e.stratum.alpha.empty() || e.stratum.max_order() < 2); }
  EXPECT_TRUE(cross_validate(2).rh_violations.empty());
}

TEST(CrossValidate, DegreeFiveSplitsMinimalGenusThree) {
  const auto r = cross_validate(5);
  EXPECT_TRUE(r.ok()) << r.lines().front();
  const auto& m = r.partition.at(StratumSig({4}));
  EXPECT_EQ(m.size(), 2u);
  EXPECT_TRUE(m.count(ComponentLabel::Hyperelliptic));
  EXPECT_TRUE(m.count(ComponentLabel::OddSpin));
}

TEST(CrossValidate, DegreeSixSettlesLowGenusCells) {
  const auto r = cross_validate(6, 2);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.partition.at(StratumSig({1, 1})).size(), 1u);
  EXPECT_EQ(r.partition.at(StratumSig({2, 2})).size(), 2u);
}

TEST(Census, ConstructionsAppearWithSameLabel) {
  std::vector<std::pair<GridSurface, ComponentLabel>> fixtures{
      {minimal_cover(MinimalKind::Hyp, 2, 3), ComponentLabel::Hyperelliptic},
      {minimal_cover(MinimalKind::Hyp, 2, 4), ComponentLabel::Hyperelliptic},
      {minimal_cover(MinimalKind::Hyp, 3, 5), ComponentLabel::Hyperelliptic},
      {minimal_cover(MinimalKind::Odd, 3, 5), ComponentLabel::OddSpin},
      {minimal_cover(MinimalKind::Odd, 3, 6), ComponentLabel::OddSpin},
      {odd_shape_cover(2, 4), ComponentLabel::Hyperelliptic}};
  std::map<int, std::vector<CensusEntry>> by_degree;
  for (const auto& [s, label] : fixtures) {
    const int d = s.degree();
    if (!by_degree.count(d)) by_degree[d] = enumerate(d);
    const auto canon = canonical_form(s);
    bool found = false;
    for (const auto& e : by_degree[d])
      if (e.surface == canon) {
        found = true;
        EXPECT_EQ(e.component, label);
        EXPECT_EQ(e.component, classify_component(s));
      }
    EXPECT_TRUE(found);
  }
}

TEST(Census, Guard) {
  EXPECT_THROW(enumerate(0), std::invalid_argument);
  EXPECT_THROW(enumerate(8), std::invalid_argument);
  ::setenv("ORIGAMI_FORGE_CENSUS_GUARD", "4", 1);
  EXPECT_EQ(census_guard(), 4);
  EXPECT_THROW(enumerate(5), std::invalid_argument);
  ::setenv("ORIGAMI_FORGE_CENSUS_GUARD", "zero", 1);
  EXPECT_THROW(census_guard(), std::invalid_argument);
  ::unsetenv("ORIGAMI_FORGE_CENSUS_GUARD");
  EXPECT_EQ(census_guard(), 7);
}
