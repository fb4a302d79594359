#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "schurkit/partition.hpp"
#include "test_oracles.hpp"

using namespace schurkit;

TEST(Partition, NormalFormStripsTrailingZeros) {
  EXPECT_EQ(Partition({2, 0}), Partition({2}));
  EXPECT_EQ(Partition({2, 1, 0, 0}).length(), 2u);
  EXPECT_EQ(Partition({}).to_string(), "0");
  EXPECT_EQ(Partition({4, 3, 1, 1}).to_string(), "4,3,1,1");
  EXPECT_EQ(std::hash<Partition>{}(Partition({3, 1, 0})), std::hash<Partition>{}(Partition({3, 1})));
}

TEST(Partition, RejectsInvalidParts) {
  EXPECT_THROW(Partition({1, 2}), ArgumentError);
  EXPECT_THROW(Partition({2, -1}), ArgumentError);
  EXPECT_THROW(Partition::parse("1,x"), ArgumentError);
  EXPECT_THROW(Partition::parse("1,,2"), ArgumentError);
}

TEST(Partition, ParseAcceptsTrailingZerosAndParentheses) {
  EXPECT_EQ(Partition::parse("4,3,1,1"), Partition({4, 3, 1, 1}));
  EXPECT_EQ(Partition::parse("(2,0)"), Partition({2}));
  EXPECT_EQ(Partition::parse("2, 1, 0"), Partition({2, 1}));
  EXPECT_EQ(Partition::parse(""), Partition{});
  for (const auto& p : enumerate_partitions(4, 6)) EXPECT_EQ(Partition::parse(p.to_string()), p);
}

TEST(Partition, EnumerationSmallCases) {
  EXPECT_EQ(enumerate_partitions(2, 2), (std::vector<Partition>{{2}, {1, 1}}));
  EXPECT_EQ(enumerate_partitions(2, 3), (std::vector<Partition>{{3}, {2, 1}}));
  EXPECT_EQ(enumerate_partitions(3, 4), (std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}}));
  EXPECT_EQ(enumerate_partitions(3, 0), (std::vector<Partition>{Partition{}}));
}

TEST(Partition, EnumerationMatchesCompositionFilter) {
  for (int d = 1; d <= 4; ++d) {
    for (int n = 0; n <= 8; ++n) {
      const auto got = enumerate_partitions(d, n);
      std::set<Partition> expected;
      for (const auto& c : oracle::compositions(n, d)) {
        if (std::is_sorted(c.rbegin(), c.rend())) expected.insert(Partition(c));
      }
      EXPECT_EQ(std::set<Partition>(got.begin(), got.end()), expected) << "d=" << d << " n=" << n;
      EXPECT_EQ(got.size(), expected.size());
      EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), CanonicalLess{}));
    }
  }
}

TEST(Partition, CanonicalOrderIsStrictTotal) {
  const auto parts = enumerate_partitions(4, 7);
  for (const auto& a : parts) {
    EXPECT_FALSE(precedes(a, a));
    for (const auto& b : parts) {
      if (a != b) {
        EXPECT_NE(precedes(a, b), precedes(b, a));
      }
    }
  }
  auto sorted = parts;
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  auto twice = sorted;
  std::sort(twice.begin(), twice.end(), CanonicalLess{});
  EXPECT_EQ(sorted, twice);
}

TEST(Partition, Interlacing) {
  EXPECT_TRUE(interlaces(Partition({3, 3, 1}), Partition({4, 3, 1, 1}), 4));
  EXPECT_FALSE(interlaces(Partition({5}), Partition({4, 3, 1, 1}), 4));
  EXPECT_TRUE(interlaces(Partition({4, 3, 1}), Partition({4, 3, 1}), 4));
  EXPECT_THROW(interlaces(Partition({1, 1, 1, 1}), Partition({4, 3, 1, 1}), 4), ArgumentError);
  EXPECT_THROW(interlaces(Partition({1}), Partition({1, 1, 1}), 2), ArgumentError);
}

TEST(Partition, AddAndRemoveBox) {
  EXPECT_EQ(add_box(Partition({3, 2, 1}), 2, 3), Partition({3, 3, 1}));
  EXPECT_FALSE(add_box(Partition({2, 2}), 2, 2).has_value());
  EXPECT_EQ(add_box(Partition{}, 1, 1), Partition({1}));
  EXPECT_THROW(add_box(Partition({1}), 3, 2), ArgumentError);
  EXPECT_EQ(remove_box_set(Partition({3, 2, 1})),
            (std::vector<Partition>{{3, 2}, {3, 1, 1}, {2, 2, 1}}));
  EXPECT_EQ(remove_box_set(Partition({5})), (std::vector<Partition>{{4}}));
  EXPECT_EQ(remove_box_set(Partition({1, 1, 1})), (std::vector<Partition>{{1, 1}}));
  EXPECT_TRUE(remove_box_set(Partition{}).empty());
}

TEST(Partition, DimPMatchesHookLength) {
  EXPECT_EQ(dim_p(Partition({2, 1})), 2);
  EXPECT_EQ(dim_p(Partition({7})), 1);
  EXPECT_EQ(dim_p(Partition({3, 2, 1})), 16);
  for (int n = 1; n <= 9; ++n) {
    for (const auto& lambda : enumerate_partitions(n, n)) {
      EXPECT_EQ(dim_p(lambda), oracle::hook_length_count(lambda)) << lambda.to_string();
    }
  }
}

TEST(Partition, DimPMatchesStandardTableauCount) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : enumerate_partitions(n, n)) {
      EXPECT_EQ(dim_p(lambda), oracle::count_standard_tableaux(lambda)) << lambda.to_string();
    }
  }
}

TEST(Partition, DimQMatchesSemistandardTableauCount) {
  EXPECT_EQ(dim_q(Partition({2}), 2), 3);
  EXPECT_EQ(dim_q(Partition({2, 1}), 3), 8);
  EXPECT_EQ(dim_q(Partition({1, 1, 1}), 2), 0);
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= a; ++b) EXPECT_EQ(dim_q(Partition({a, b}), 2), a - b + 1);
  }
  for (int d = 1; d <= 4; ++d) {
    for (int n = 0; n <= 5; ++n) {
      for (const auto& lambda : enumerate_partitions(d, n)) {
        EXPECT_EQ(dim_q(lambda, d), oracle::count_semistandard_tableaux(lambda, d))
            << lambda.to_string() << " d=" << d;
      }
    }
  }
}

TEST(Partition, SchurDualityPieriAndBranchingIdentities) {
  for (int d = 1; d <= 4; ++d) {
    for (int n = 0; n <= 8; ++n) {
      BigInt total = 0;
      for (const auto& lambda : enumerate_partitions(d, n)) {
        total += dim_q(lambda, d) * dim_p(lambda);
        BigInt pieri = 0;
        for (int j = 1; j <= d; ++j) {
          if (auto up = add_box(lambda, j, d)) pieri += dim_q(*up, d);
        }
        EXPECT_EQ(pieri, BigInt(d * dim_q(lambda, d)));
        if (n > 0) {
          BigInt branch = 0;
          for (const auto& mu : remove_box_set(lambda)) branch += dim_p(mu);
          EXPECT_EQ(branch, dim_p(lambda));
        }
        if (d > 1) {
          BigInt gz = 0;
          for (int m = 0; m <= n; ++m) {
            for (const auto& mu : enumerate_partitions(d - 1, m)) {
              if (interlaces(mu, lambda, d)) gz += dim_q(mu, d - 1);
            }
          }
          EXPECT_EQ(gz, dim_q(lambda, d));
        }
      }
      BigInt power = 1;
      for (int k = 0; k < n; ++k) power *= d;
      EXPECT_EQ(total, power) << "d=" << d << " n=" << n;
    }
  }
}
