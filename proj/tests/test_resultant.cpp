#include <gtest/gtest.h>

#include <random>

#include "disclab/disclab.hpp"
#include "families.hpp"
#include "oracles.hpp"

using namespace disclab;

namespace {

bool equal_up_to_sign(const Polynomial& a, const Polynomial& b) { return a == b || a == -b; }

}  // namespace

TEST(Sylvester, SmallKnownValues) {
  auto v = VarSet::make({"x", "a", "b", "c"});
  EXPECT_EQ(sylvester_resultant(parse_expression("x-1", v), parse_expression("x+1", v), "x"), parse_expression("2", v));
  EXPECT_TRUE(sylvester_resultant(parse_expression("x^2-1", v), parse_expression("x-1", v), "x").is_zero());
  Polynomial r = sylvester_resultant(parse_expression("a*x^2+b*x+c", v), parse_expression("2*a*x+b", v), "x");
  // Res(f, f') = a * disc(f) for a quadratic.
  EXPECT_TRUE(equal_up_to_sign(r, parse_expression("a*(b^2-4*a*c)", v))) << r;
}

TEST(Sylvester, MatchesLeibnizOracleOnRandomIntegerPolys) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-5, 5), deg(1, 4);
  auto v = VarSet::make({"x"});
  for (int t = 0; t < 40; ++t) {
    int df = deg(rng), dg = deg(rng);
    std::vector<Rational> cf(df + 1), cg(dg + 1);
    for (auto& q : cf) q = c(rng);
    for (auto& q : cg) q = c(rng);
    if (cf[0] == 0) cf[0] = 1;
    if (cg[0] == 0) cg[0] = -2;
    Polynomial f(v), g(v);
    for (int i = 0; i <= df; ++i) f += Polynomial::monomial(v, Monomial::unit(1, 0, df - i), cf[i]);
    for (int i = 0; i <= dg; ++i) g += Polynomial::monomial(v, Monomial::unit(1, 0, dg - i), cg[i]);
    auto m = sylvester_matrix(f, g, 0);
    std::vector<std::vector<Rational>> num;
    for (const auto& row : m.entries) {
      num.emplace_back();
      for (const auto& e : row) num.back().push_back(e.constant_value());
    }
    EXPECT_EQ(oracle::leibniz_det(num), oracle::sylvester_numeric(cf, cg));
    Polynomial r = sylvester_resultant(f, g, 0);
    ASSERT_TRUE(r.is_constant());
    EXPECT_EQ(r.constant_value(), oracle::sylvester_numeric(cf, cg));
  }
}

TEST(Sylvester, ZeroInputRejected) {
  auto v = VarSet::make({"x"});
  try {
    sylvester_resultant(Polynomial(v), parse_expression("x", v), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroInput);
  }
}

TEST(BinaryForms, QuadraticPairResultant) {
  auto v = VarSet::make({"x", "y", "a", "b", "c", "d", "e", "f"});
  Polynomial r = binary_form_resultant(parse_expression("a*x^2+b*x*y+c*y^2", v), parse_expression("d*x^2+e*x*y+f*y^2", v), 0, 1);
  EXPECT_TRUE(equal_up_to_sign(r, parse_expression(fam::kQuadraticRes, v)));
}

TEST(BinaryForms, CommonRootAtInfinityGivesZero) {
  auto v = VarSet::make({"x", "y"});
  EXPECT_TRUE(binary_form_resultant(parse_expression("x*y", v), parse_expression("y^2", v), 0, 1).is_zero());
  EXPECT_FALSE(binary_form_resultant(parse_expression("x*y", v), parse_expression("x^2+y^2", v), 0, 1).is_zero());
}

TEST(Discriminant, BinaryCubicAndQuartic) {
  auto v = VarSet::make({"x", "y", "a", "b", "c", "d", "e"});
  Polynomial d3 = discriminant(parse_expression("a*x^3+b*x^2*y+c*x*y^2+d*y^3", v), {"x", "y"}, DiscMode::Form);
  EXPECT_TRUE(equal_up_to_sign(d3, parse_expression(fam::kCubicDisc, v)));
  Polynomial d4 =
      discriminant(parse_expression("a*x^4+b*x^3*y+c*x^2*y^2+d*x*y^3+e*y^4", v), {"x", "y"}, DiscMode::Form);
  EXPECT_TRUE(equal_up_to_sign(d4, parse_expression(fam::kQuarticDisc, v)));
  EXPECT_EQ(*d4.degree(), 6u);
}

TEST(Discriminant, AffineQuadratic) {
  auto v = VarSet::make({"x", "b", "c"});
  Polynomial d = discriminant(parse_expression("x^2+b*x+c", v), {"x"}, DiscMode::Affine);
  EXPECT_TRUE(equal_up_to_sign(d, parse_expression("b^2-4*c", v)));
  EXPECT_EQ(d.vars()->names(), v->names());
}

TEST(Discriminant, TernaryQuadraticIsDeterminantMultiple) {
  // Disc of x^T A x is a constant times det A.
  auto v = VarSet::make({"x", "y", "z", "a", "b", "c", "d", "e", "f"});
  Polynomial q = parse_expression("a*x^2+b*y^2+c*z^2+2*d*x*y+2*e*x*z+2*f*y*z", v);
  Polynomial det = parse_expression("a*b*c+2*d*e*f-a*f^2-b*e^2-c*d^2", v);
  Polynomial d = discriminant(q, {"x", "y", "z"}, DiscMode::Form);
  EXPECT_TRUE(equal_up_to_sign(d, det));
}

TEST(Discriminant, Errors) {
  auto v = VarSet::make({"x", "y"});
  try {
    discriminant(parse_expression("x^2+y", v), {"x", "y"}, DiscMode::Form);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHomogeneous);
  }
  try {
    discriminant(parse_expression("x+y", v), {"x", "y"}, DiscMode::Form);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeTooSmall);
  }
}

TEST(Macaulay, LinearFormsGiveDeterminant) {
  std::mt19937_64 rng(3);
  auto v = VarSet::make({"x", "y", "z"});
  for (int t = 0; t < 10; ++t) {
    std::vector<Polynomial> fs;
    std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
    std::uniform_int_distribution<int> c(-4, 4);
    for (int i = 0; i < 3; ++i) {
      Polynomial f(v);
      for (int j = 0; j < 3; ++j) {
        m[i][j] = c(rng);
        f += Polynomial::variable(v, j) * m[i][j];
      }
      fs.push_back(f);
    }
    std::size_t idx[3] = {0, 1, 2};
    Polynomial r = macaulay_resultant(fs, idx);
    Rational det = oracle::leibniz_det(m);
    if (det == 0) {
      EXPECT_TRUE(r.is_zero());
    } else {
      ASSERT_TRUE(r.is_constant());
      EXPECT_TRUE(r.constant_value() == det || r.constant_value() == -det);
    }
  }
}

TEST(Macaulay, DegreeInEachFormsCoefficients) {
  // Res of generic forms of degrees (1,1,2) has degree prod_{i != k} d_i in
  // the coefficients of f_k.
  auto v = VarSet::make({"x", "y", "z", "a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3", "c4", "c5", "c6"});
  std::vector<Polynomial> fs{parse_expression("a1*x+a2*y+a3*z", v), parse_expression("b1*x+b2*y+b3*z", v),
                             parse_expression("c1*x^2+c2*y^2+c3*z^2+c4*x*y+c5*x*z+c6*y*z", v)};
  std::size_t idx[3] = {0, 1, 2};
  Polynomial r = macaulay_resultant(fs, idx);
  std::vector<std::size_t> a{3, 4, 5}, b{6, 7, 8}, c{9, 10, 11, 12, 13, 14};
  EXPECT_EQ(*r.degree_in(a), 2u);
  EXPECT_EQ(*r.degree_in(b), 2u);
  EXPECT_EQ(*r.degree_in(c), 1u);
  EXPECT_TRUE(r.is_homogeneous(a));
}

TEST(Macaulay, VanishesOnCommonRoot) {
  auto v = VarSet::make({"x", "y", "z"});
  // All three vanish at (1,1,1).
  std::vector<Polynomial> fs{parse_expression("x^2-y*z", v), parse_expression("x*y-z^2", v), parse_expression("x-2*y+z", v)};
  std::size_t idx[3] = {0, 1, 2};
  EXPECT_TRUE(macaulay_resultant(fs, idx).is_zero());
  std::vector<Polynomial> gs{parse_expression("x^2", v), parse_expression("y^2", v), parse_expression("z^2", v)};
  Polynomial r = macaulay_resultant(gs, idx);
  ASSERT_TRUE(r.is_constant());
  EXPECT_NE(r.constant_value(), 0);
}

TEST(Macaulay, InterpolationAgreesWithSymbolic) {
  auto v = VarSet::make({"x", "y", "z", "a", "b", "c"});
  std::vector<Polynomial> fs{parse_expression("a*x^2+y^2+z^2", v), parse_expression("x^2+b*y^2+x*z", v), parse_expression("x+y+c*z", v)};
  std::size_t idx[3] = {0, 1, 2};
  ResultantOptions sym, interp;
  sym.symbolic_size_limit = 1000;
  interp.symbolic_size_limit = 0;
  EXPECT_EQ(macaulay_resultant(fs, idx, sym), macaulay_resultant(fs, idx, interp));
}

TEST(Macaulay, CountMismatch) {
  auto v = VarSet::make({"x", "y", "z"});
  std::vector<Polynomial> fs{parse_expression("x", v), parse_expression("y", v)};
  std::size_t idx[3] = {0, 1, 2};
  try {
    macaulay_resultant(fs, idx);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(DiscriminantalVariety, SingularVersusSmooth) {
  auto v = VarSet::make({"x", "y", "z"});
  std::size_t idx[3] = {0, 1, 2};
  // The nodal cubic is singular at (0:0:1).
  EXPECT_TRUE(in_discriminantal_variety({parse_expression("y^2*z-x^3-x^2*z", v)}, idx));
  EXPECT_FALSE(in_discriminantal_variety({parse_expression("x^2+y^2+z^2", v)}, idx));
  // Two conics tangent at (0:0:1).
  EXPECT_TRUE(in_discriminantal_variety({parse_expression("y*z-x^2", v), parse_expression("y*z-2*x^2-y^2", v)}, idx));
  auto w = VarSet::make({"x", "y", "a"});
  std::size_t idx2[2] = {0, 1};
  try {
    in_discriminantal_variety({parse_expression("x^2+a*y^2", w)}, idx2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}
