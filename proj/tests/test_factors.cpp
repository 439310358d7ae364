#include "flawshift/factors.hpp"

#include <gtest/gtest.h>

using namespace flawshift;

namespace {

LatticePath P(const std::string& text) { return LatticePath::parse(text); }

VertexSet V(std::vector<int> elems) { return VertexSet(std::move(elems)); }

TEST(VertexSet, Basics) {
  const VertexSet s = V({3, 1});
  EXPECT_EQ(s.to_string(), "{1,3}");
  EXPECT_EQ(V({}).to_string(), "{}");
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_TRUE(s.disjoint_with(V({2, 4})));
  EXPECT_FALSE(s.disjoint_with(V({3})));
  EXPECT_TRUE(V({1}).strict_subset_of(V({1, 2})));
  EXPECT_FALSE(V({1, 2}).strict_subset_of(V({1, 2})));
  EXPECT_FALSE(V({3}).strict_subset_of(V({1, 2})));
  EXPECT_EQ(V({1, 3}).complement_in(5), V({2, 4, 5}));
}

TEST(PathToSet, Examples) {
  EXPECT_EQ(path_to_set(P("UDUD")), V({1, 3}));
  EXPECT_EQ(path_to_set(P("UUUD")), V({1, 2, 3}));
  EXPECT_EQ(path_to_set(P("DDDD")), V({}));
}

TEST(OddCycle, KOne) {
  const FactorCycle c = odd_cycle(P("UD"));
  ASSERT_EQ(c.vertices.size(), 3u);
  EXPECT_EQ(c.vertices[0], V({1}));
  EXPECT_EQ(c.vertices[1], V({3}));
  EXPECT_EQ(c.vertices[2], V({2}));
}

TEST(OddCycle, KTwo) {
  const FactorCycle c = odd_cycle(P("UDUD"));
  ASSERT_EQ(c.vertices.size(), 5u);
  EXPECT_EQ(c.vertices[0], V({1, 3}));
  EXPECT_EQ(c.vertices[1], V({4, 5}));
  EXPECT_EQ(c.vertices[2], V({2, 3}));
  EXPECT_EQ(c.vertices[3], V({1, 5}));
  EXPECT_EQ(c.vertices[4], V({2, 4}));
  for (std::size_t i = 0; i < 5; ++i)
    EXPECT_TRUE(c.vertices[i].disjoint_with(c.vertices[(i + 1) % 5]));
}

TEST(OddCycle, EndsAtTheComplementOfTheStart) {
  for (int k = 1; k <= 5; ++k) {
    RowOrder rows = lex_zero_flaw_order(k);
    while (auto x0 = rows()) {
      const FactorCycle c = odd_cycle(*x0);
      ASSERT_EQ(c.vertices.size(), static_cast<std::size_t>(2 * k + 1));
      // last column path is the mirror: its subset is the complement in [2k]
      VertexSet first_complement = c.vertices.front().complement_in(2 * k);
      EXPECT_EQ(c.vertices.back(), first_complement);
    }
  }
  EXPECT_THROW(odd_cycle(P("DU")), domain_error);
}

TEST(OddFactor, CountsAndValidity) {
  for (int k = 1; k <= 4; ++k) {
    const CycleFactor fac = odd_factor(k);
    EXPECT_EQ(fac.cycles.size(), catalan(k));
    const FactorReport rep = verify_factor(fac);
    EXPECT_TRUE(rep.pass) << rep.first_violation;
    EXPECT_EQ(rep.cycle_length, static_cast<std::size_t>(2 * k + 1));
    EXPECT_EQ(rep.vertices_seen, binomial_exact(2 * k + 1, k));
  }
  EXPECT_THROW(odd_factor(0), domain_error);
}

TEST(MiddleLevelsDouble, KOne) {
  const FactorCycle doubled = middle_levels_double(odd_cycle(P("UD")));
  ASSERT_EQ(doubled.vertices.size(), 6u);
  EXPECT_EQ(doubled.vertices[0], V({1}));
  EXPECT_EQ(doubled.vertices[1], V({1, 2}));
  EXPECT_EQ(doubled.vertices[2], V({2}));
  EXPECT_EQ(doubled.vertices[3], V({2, 3}));
  EXPECT_EQ(doubled.vertices[4], V({3}));
  EXPECT_EQ(doubled.vertices[5], V({1, 3}));
}

TEST(MiddleLevelsDouble, DoublesLengthAndAlternatesContainment) {
  const FactorCycle base = odd_cycle(P("UDUD"));
  const FactorCycle doubled = middle_levels_double(base);
  ASSERT_EQ(doubled.vertices.size(), 10u);
  for (std::size_t i = 0; i < doubled.vertices.size(); ++i) {
    const VertexSet& a = doubled.vertices[i];
    const VertexSet& b = doubled.vertices[(i + 1) % doubled.vertices.size()];
    EXPECT_TRUE(a.strict_subset_of(b) || b.strict_subset_of(a))
        << a.to_string() << " vs " << b.to_string();
  }
}

TEST(MiddleLevelsDouble, RejectsEvenLength) {
  FactorCycle even;
  even.vertices = {V({1}), V({2}), V({3}), V({4})};
  EXPECT_THROW(middle_levels_double(even), domain_error);
}

TEST(MiddleFactor, CountsAndValidity) {
  for (int k = 1; k <= 4; ++k) {
    const CycleFactor fac = middle_factor(k);
    EXPECT_EQ(fac.cycles.size(), catalan(k));
    const FactorReport rep = verify_factor(fac);
    EXPECT_TRUE(rep.pass) << rep.first_violation;
    EXPECT_EQ(rep.cycle_length, static_cast<std::size_t>(4 * k + 2));
    EXPECT_EQ(rep.vertices_seen, 2 * binomial_exact(2 * k + 1, k));
    for (const auto& c : fac.cycles)
      for (std::size_t j = 0; j < c.vertices.size(); ++j)
        EXPECT_EQ(c.vertices[j].size(), j % 2 == 0 ? k : k + 1);
  }
}

TEST(VerifyFactor, ReportsDuplicatedVertexAcrossCycles) {
  CycleFactor fac = odd_factor(2);
  // plant a duplicate: overwrite one vertex of the second cycle with a
  // vertex from the first
  const VertexSet dup = fac.cycles[0].vertices[0];
  fac.cycles[1].vertices[0] = dup;
  const FactorReport rep = verify_factor(fac);
  EXPECT_FALSE(rep.pass);
  EXPECT_NE(rep.first_violation.find(dup.to_string()), std::string::npos)
      << rep.first_violation;
}

TEST(VerifyFactor, ReportsNonAdjacentPair) {
  CycleFactor fac = odd_factor(2);
  std::swap(fac.cycles[0].vertices[0], fac.cycles[0].vertices[1]);
  const FactorReport rep = verify_factor(fac);
  EXPECT_FALSE(rep.pass);
  EXPECT_NE(rep.first_violation.find("not adjacent"), std::string::npos);
}

TEST(VerifyFactor, ReportsForeignVertex) {
  CycleFactor fac = odd_factor(2);
  fac.cycles[0].vertices[0] = V({1, 9});  // 9 is outside {1..5}
  const FactorReport rep = verify_factor(fac);
  EXPECT_FALSE(rep.pass);
  EXPECT_NE(rep.first_violation.find("not a vertex"), std::string::npos);
}

}  // namespace
