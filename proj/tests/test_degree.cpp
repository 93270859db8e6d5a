#include <gtest/gtest.h>

#include <random>

#include "disclab/disclab.hpp"
#include "oracles.hpp"

using namespace disclab;

TEST(CompleteSymmetric, KnownValues) {
  EXPECT_EQ(complete_symmetric(0, std::vector<long>{5, 7}), 1);
  EXPECT_EQ(complete_symmetric(2, std::vector<long>{1, 1}), 3);
  EXPECT_EQ(complete_symmetric(3, std::vector<long>{2, 2, 2, 2}), 160);
  try {
    complete_symmetric(1, std::vector<long>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyList);
  }
}

TEST(CompleteSymmetric, MatchesEnumeration) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> a(-3, 5);
  std::uniform_int_distribution<int> len(1, 5), kk(0, 6);
  for (int t = 0; t < 100; ++t) {
    std::vector<long> v(len(rng));
    for (auto& x : v) x = a(rng);
    unsigned k = kk(rng);
    EXPECT_EQ(complete_symmetric(k, v), oracle::complete_symmetric_brute(k, v));
  }
}

TEST(DiscDegree, SingleFormExamples) {
  EXPECT_EQ(disc_total_degree({3, {3}}), 12);
  EXPECT_EQ(disc_total_degree({3, {4}}), 27);
  EXPECT_EQ(disc_total_degree({2, {4}}), 6);
  EXPECT_EQ(disc_degree_in_fk({3, {2, 2}}, 0), 6);
  EXPECT_EQ(disc_total_degree({3, {2, 2}}), 12);
  EXPECT_EQ(disc_total_degree({3, {1, 2, 3}}), 11);
}

TEST(DiscDegree, Errors) {
  auto kind = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Usage;
  };
  EXPECT_EQ(kind([] { disc_degree_in_fk({3, {2, 2}}, 2); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind([] { disc_total_degree({3, {1, 1}}); }), ErrorKind::AllDegreesOne);
  EXPECT_EQ(kind([] { disc_total_degree({2, {2, 2, 2}}); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind([] { disc_total_degree({2, {}}); }), ErrorKind::EmptyList);
}

TEST(DiscDegree, SymmetricUnderPermutation) {
  std::vector<unsigned> d{2, 3, 4};
  auto base = disc_total_degree({5, d});
  std::sort(d.begin(), d.end());
  do {
    EXPECT_EQ(disc_total_degree({5, d}), base);
  } while (std::next_permutation(d.begin(), d.end()));
}

TEST(DiscDegree, SquareSystemsMatchResultantDegree) {
  for (unsigned nv = 1; nv <= 5; ++nv) {
    std::vector<unsigned> d(nv, 1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == nv) {
        bool any = std::any_of(d.begin(), d.end(), [](unsigned x) { return x > 1; });
        if (any) {
          EXPECT_EQ(disc_total_degree({nv, d}), resultant_total_degree(d));
          for (std::size_t k = 0; k < nv; ++k) {
            mpz_class p = 1;
            for (std::size_t j = 0; j < nv; ++j)
              if (j != k) p *= d[j];
            EXPECT_EQ(disc_degree_in_fk({nv, d}, k), p);
          }
        }
        return;
      }
      for (unsigned x = 1; x <= 4; ++x) {
        d[i] = x;
        rec(i + 1);
      }
    };
    rec(0);
  }
}

TEST(DiscDegree, EqualDegreeClosedForms) {
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned m = 0; m <= n; ++m)
      for (unsigned d = 2; d <= 4; ++d) {
        DiscriminantSpec s{n + 1, std::vector<unsigned>(m + 1, d)};
        mpz_class each = oracle::binom(n + 1, m + 1) * oracle::ipow(d, m) * oracle::ipow(d - 1, n - m);
        mpz_class total = (n + 1) * oracle::binom(n, m) * oracle::ipow(d, m) * oracle::ipow(d - 1, n - m);
        for (unsigned k = 0; k <= m; ++k) EXPECT_EQ(disc_degree_in_fk(s, k), each) << n << ' ' << m << ' ' << d;
        EXPECT_EQ(disc_total_degree(s), total);
      }
}

TEST(Multihomog, KnownValues) {
  EXPECT_EQ(multihomog_disc_degree({{3}, {4}}), 27);
  EXPECT_EQ(multihomog_disc_degree({{2, 2}, {1, 1}}), 2);
  EXPECT_EQ(multihomog_disc_degree({{3, 3}, {2, 2}}), 129);
}

TEST(Multihomog, SingleGroupClosedForm) {
  for (unsigned n = 2; n <= 6; ++n)
    for (unsigned d = 2; d <= 5; ++d) EXPECT_EQ(multihomog_disc_degree({{n}, {d}}), n * oracle::ipow(d - 1, n - 1));
}

TEST(Multihomog, MatchesNaiveExpansion) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<unsigned> r(1, 3), nd(1, 4), dd(1, 3);
  int checked = 0;
  while (checked < 25) {
    std::vector<unsigned> dims(r(rng)), degs(dims.size());
    for (auto& x : dims) x = nd(rng);
    for (auto& x : degs) x = dd(rng);
    MultiHomogSpec s{dims, degs};
    try {
      check_multihomog(s);
    } catch (const Error&) {
      continue;
    }
    EXPECT_EQ(multihomog_disc_degree(s), oracle::multihomog_brute(dims, degs));
    ++checked;
  }
}

TEST(Multihomog, Errors) {
  try {
    multihomog_disc_degree({{2, 2}, {1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupMismatch);
  }
  try {
    multihomog_disc_degree({{4, 2}, {1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypersurfaceConditionViolated);
  }
}

TEST(TruncatedSeriesTest, InverseTimesSelfIsOne) {
  MultiHomogSpec s{{3, 4}, {2, 3}};
  auto p = multihomog_base_series(s);
  auto q = p.inverse();
  auto one = p * q;
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i], i == 0 ? 1 : 0);
}
