#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "disclab/disclab.hpp"
#include "families.hpp"
#include "oracles.hpp"

using namespace disclab;

namespace {

Polynomial family_at(const char* text, const std::vector<std::string>& xs, const char* a, const char* b) {
  std::vector<std::string> names = xs;
  names.push_back("a");
  names.push_back("b");
  auto v = VarSet::make(names);
  Polynomial f = parse_expression(text, v);
  f = specialize(f, {{xs.size(), parse_expression(a, v).constant_value()}, {xs.size() + 1, parse_expression(b, v).constant_value()}});
  return restrict_vars(f, xs);
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Usage;
}

}  // namespace

TEST(SphereMin, PinnedValues) {
  auto v = VarSet::make({"x1", "x2"});
  EXPECT_NEAR(sphere_min(parse_expression("(x1^2+x2^2)^2", v)).value, 1.0, 1e-8);
  EXPECT_NEAR(sphere_min(parse_expression("x1^4+x2^4", v)).value, 0.5, 1e-8);
  EXPECT_NEAR(sphere_min(parse_expression("-x1^2", v)).value, -1.0, 1e-8);
}

TEST(SphereMin, BinaryFormsAgreeWithAngleSweep) {
  std::mt19937_64 rng(21);
  auto v = VarSet::make({"x1", "x2"});
  for (int t = 0; t < 15; ++t) {
    Polynomial f = oracle::random_form(v, 2, 4, rng, 5);
    EXPECT_NEAR(sphere_min(f).value, oracle::circle_min(f), 1e-7) << to_string(f);
  }
}

TEST(SphereMin, WitnessIsOnSphereAndAttainsValue) {
  auto v = VarSet::make({"x1", "x2", "x3"});
  Polynomial f = parse_expression("x1^4-3*x1*x2^2*x3+x3^4+x2^4", v);
  auto r = sphere_min(f);
  double n2 = 0;
  for (double x : r.witness) n2 += x * x;
  EXPECT_NEAR(std::sqrt(n2), 1.0, 1e-10);
  EXPECT_LE(evaluate(f, std::span<const double>(r.witness)), r.value + 1e-10);
  EXPECT_EQ(r.starts_used, 64u);
}

TEST(SphereMin, NonFormRejected) {
  auto v = VarSet::make({"x1", "x2"});
  EXPECT_EQ(kind_of([&] { sphere_min(parse_expression("x1^2+x2", v)); }), ErrorKind::NotHomogeneous);
}

TEST(SphereMin, RobinsonAndHornAreBoundary) {
  Polynomial rob = family_at(fam::kSexticFamily, {"x1", "x2", "x3"}, "1", "3");
  EXPECT_NEAR(sphere_min(rob).value, 0.0, 1e-4);
  Polynomial horn = family_at(fam::kQuarticFamily, {"x1", "x2", "x3", "x4", "x5"}, "4", "0");
  auto m = classify(horn, ConstraintSet{});
  EXPECT_EQ(m.verdict, Verdict::Boundary);
  EXPECT_NEAR(m.margin, 0.0, 1e-4);
}

TEST(ProductSphere, BiquadraticProduct) {
  auto v = VarSet::make({"x1", "x2", "x3", "y1", "y2", "y3"});
  Polynomial f = parse_expression("(x1^2+x2^2+x3^2)*(y1^2+y2^2+y3^2)", v);
  EXPECT_NEAR(product_sphere_min(f, {3, 3}).value, 1.0, 1e-8);
  EXPECT_EQ(kind_of([&] { product_sphere_min(f, {2, 3}); }), ErrorKind::GroupMismatch);
}

TEST(Constrained, CircleAndNonAttained) {
  auto v = VarSet::make({"x1", "x2"});
  ConstraintSet circle;
  circle.equalities.push_back(parse_expression("x1^2+x2^2-1", v));
  EXPECT_NEAR(constrained_min(parse_expression("x1^2+x2^2", v), circle, false).value, 1.0, 1e-6);
  EXPECT_NEAR(constrained_min(parse_expression("x1", v), circle, false).value, -1.0, 1e-6);

  ConstraintSet cubic;
  cubic.equalities.push_back(parse_expression("x1^3+x2^3-1", v));
  auto r = constrained_min(parse_expression("x1+x2", v), cubic, false);
  EXPECT_GE(r.value, -1e-6);
  EXPECT_LT(r.value, 0.1);
  EXPECT_FALSE(r.attained);
}

TEST(Constrained, HomogenizedCubicReachesInfinity) {
  auto v = VarSet::make({"x1", "x2"});
  ConstraintSet K;
  K.equalities.push_back(parse_expression("x1^2*(x1-x2)-1", v));
  ScanOptions o;
  o.seed = 42;
  auto r = constrained_min(parse_expression("x1-x2+1", v), K, true, o);
  EXPECT_LE(r.value, -1 + 1e-4);
  // Homogenizing variable is last and near zero at the witness.
  EXPECT_NEAR(r.witness.back(), 0.0, 1e-3);
}

TEST(Classify, VerdictsAndFlags) {
  auto v = VarSet::make({"x1", "x2"});
  EXPECT_EQ(classify(parse_expression("(x1^2+x2^2)^2", v), {}).verdict, Verdict::Interior);
  EXPECT_EQ(classify(parse_expression("-x1^4-x2^4", v), {}).verdict, Verdict::Exterior);
  ConstraintSet K;
  K.equalities.push_back(parse_expression("x1^2+x2^2-1", v));
  EXPECT_EQ(kind_of([&] { classify(parse_expression("x1", v), K); }), ErrorKind::FlagMissing);
  K.compact = true;
  EXPECT_EQ(classify(parse_expression("x1+1", v), K).verdict, Verdict::Boundary);
  EXPECT_EQ(classify(parse_expression("x1+2", v), K).verdict, Verdict::Interior);
}

TEST(Barrier, ValuesAndNotInterior) {
  auto v = VarSet::make({"x1", "x2", "x3"});
  EXPECT_NEAR(barrier_value(parse_expression("(x1^2+x2^2+x3^2)^2", v)), 0.0, 1e-8);
  EXPECT_NEAR(barrier_value(parse_expression("2*(x1^2+x2^2+x3^2)^2", v)), -std::log(2.0), 1e-8);
  Polynomial rob = family_at(fam::kSexticFamily, {"x1", "x2", "x3"}, "1", "3");
  EXPECT_EQ(kind_of([&] { barrier_value(rob); }), ErrorKind::NotInterior);
}

TEST(Concavity, EqualAndKnownPairs) {
  auto v = VarSet::make({"x1", "x2"});
  Polynomial f1 = parse_expression("x1^4+x2^4", v), f2 = parse_expression("(x1^2+x2^2)^2", v);
  auto same = concavity_probe(f1, f1, 11);
  for (std::size_t i = 0; i < same.lhs.size(); ++i) EXPECT_NEAR(same.lhs[i], same.rhs[i], 1e-8);
  auto rep = concavity_probe(f1, f2, 11);
  EXPECT_EQ(rep.thetas.size(), 11u);
  EXPECT_TRUE(rep.holds(1e-6));
  EXPECT_EQ(kind_of([&] { concavity_probe(f1, parse_expression("x1^2", v), 3); }), ErrorKind::DegreeMismatch);
}

TEST(Determinism, ThreadCountDoesNotMatter) {
  auto v = VarSet::make({"x1", "x2", "x3"});
  Polynomial f = parse_expression("x1^4+x2^4+x3^4-2*x1*x2*x3^2+x1^2*x2^2", v);
  ScanOptions a, b;
  a.seed = b.seed = 99;
  a.threads = 1;
  b.threads = 4;
  auto ra = sphere_min(f, a), rb = sphere_min(f, b);
  EXPECT_EQ(ra.value, rb.value);
  EXPECT_EQ(ra.witness, rb.witness);
  EXPECT_EQ(ra.converged, rb.converged);
  EXPECT_EQ(ra.spread, rb.spread);
}
