#include <gtest/gtest.h>

#include "families.hpp"
#include "properties.hpp"

namespace {

std::string join(const props::Failures& f) {
  std::string s;
  for (const auto& x : f) s += x + "\n";
  return s;
}

}  // namespace

TEST(Property, EulerIdentity) {
  auto f = props::euler_identity(101);
  EXPECT_TRUE(f.empty()) << join(f);
}

TEST(Property, RingAxioms) {
  auto f = props::ring_axioms(102);
  EXPECT_TRUE(f.empty()) << join(f);
}

TEST(Property, SPolynomialsReduceToZero) {
  auto f = props::spoly_reduction(103);
  EXPECT_TRUE(f.empty()) << join(f);
}

TEST(Property, EliminationIdealContainment) {
  auto f = props::eliminate_containment(104);
  EXPECT_TRUE(f.empty()) << join(f);
}

TEST(Property, ScanDeterministicAcrossThreads) {
  auto f = props::scan_determinism(105);
  EXPECT_TRUE(f.empty()) << join(f);
}

TEST(Property, ScanScaleAndMonotonicity) {
  auto f = props::scan_invariants(106);
  EXPECT_TRUE(f.empty()) << join(f);
}

TEST(Property, CopositiveDiscriminantEquivalence) {
  auto f = props::copositive_equivalence(107);
  EXPECT_TRUE(f.empty()) << join(f);
}

TEST(Property, ResultantMatchesElimination) {
  auto f = props::resultant_consistency(108);
  EXPECT_TRUE(f.empty()) << join(f);
}

TEST(Property, BoundarySamplesLieOnLocus) {
  auto a = props::locus_soundness(fam::circle_quadratic(), 5, 109);
  EXPECT_TRUE(a.empty()) << join(a);
  auto b = props::locus_soundness(fam::circle_quartic(), 4, 110);
  EXPECT_TRUE(b.empty()) << join(b);
}
