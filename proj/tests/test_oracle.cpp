#include "flawshift/oracle.hpp"

#include <gtest/gtest.h>

using namespace flawshift;

namespace {

LatticePath P(const std::string& text) { return LatticePath::parse(text); }

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(enumerate_lattice_paths(1),
            (std::vector<LatticePath>{P("UD"), P("DU")}));
  EXPECT_EQ(enumerate_lattice_paths(2).size(), 6u);
  EXPECT_EQ(enumerate_lattice_paths(3).size(), 20u);
  EXPECT_EQ(enumerate_lattice_paths(0), (std::vector<LatticePath>{P("")}));
}

TEST(Enumerate, LexicographicAndExactCount) {
  for (int k = 0; k <= 6; ++k) {
    const auto paths = enumerate_lattice_paths(k);
    EXPECT_EQ(paths.size(), binomial_exact(2 * k, k));
    EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end()));
    for (const auto& x : paths) EXPECT_EQ(x.up_count(), k);
  }
}

TEST(Enumerate, CapRefusal) {
  EXPECT_THROW(enumerate_lattice_paths(11), domain_error);
  EXPECT_NO_THROW(enumerate_lattice_paths(11, 11));
  EXPECT_THROW(enumerate_paths(24, 12), domain_error);
}

TEST(Catalan, Values) {
  EXPECT_EQ(catalan(0), 1u);
  EXPECT_EQ(catalan(1), 1u);
  EXPECT_EQ(catalan(3), 5u);
  EXPECT_EQ(catalan(8), 1430u);
  EXPECT_EQ(catalan(30), 3814986502092304u);
}

TEST(Catalan, OverflowIsAnErrorNotWraparound) {
  EXPECT_THROW(catalan(40), std::overflow_error);
  EXPECT_THROW(binomial_exact(80, 40), std::overflow_error);
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial_exact(0, 0), 1u);
  EXPECT_EQ(binomial_exact(6, 3), 20u);
  EXPECT_EQ(binomial_exact(7, 3), 35u);
  EXPECT_EQ(binomial_exact(5, -1), 0u);
  EXPECT_EQ(binomial_exact(5, 6), 0u);
  EXPECT_EQ(binomial_exact(20, 10), 184756u);
}

TEST(ChungFeller, SmallClasses) {
  const auto rep1 = verify_chung_feller(1);
  EXPECT_TRUE(rep1.pass);
  ASSERT_EQ(rep1.partition.classes.size(), 2u);
  EXPECT_EQ(rep1.partition.classes[0], (std::vector<LatticePath>{P("UD")}));
  EXPECT_EQ(rep1.partition.classes[1], (std::vector<LatticePath>{P("DU")}));

  const auto rep3 = verify_chung_feller(3);
  EXPECT_TRUE(rep3.pass);
  ASSERT_EQ(rep3.partition.classes.size(), 4u);
  for (const auto& cls : rep3.partition.classes) EXPECT_EQ(cls.size(), 5u);
  EXPECT_EQ(rep3.expected_class_size, 5u);
}

TEST(ChungFeller, HoldsThroughKEight) {
  for (int k = 1; k <= 8; ++k) {
    const auto rep = verify_chung_feller(k);
    EXPECT_TRUE(rep.pass) << k;
    EXPECT_EQ(rep.partition.classes.size(), static_cast<std::size_t>(k + 1));
    EXPECT_EQ(rep.expected_class_size, catalan(k));
  }
}

TEST(Hamming, Examples) {
  EXPECT_EQ(hamming(P("UUUDDD"), P("UDUDDU")), 2);
  EXPECT_EQ(hamming(P("UDUD"), P("UDUD")), 0);
  // The subpath-swapping image of UDUD is DUUD; they differ in two
  // positions. Larger gaps first appear at k = 3.
  EXPECT_EQ(hamming(P("UDUD"), P("DUUD")), 2);
  EXPECT_EQ(hamming(P("UUDUDD"), P("UDUDDU")), 4);
  EXPECT_THROW(hamming(P("UD"), P("UDUD")), domain_error);
}

}  // namespace
