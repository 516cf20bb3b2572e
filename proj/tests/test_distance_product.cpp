#include "sz/distance_product.hpp"

#include <array>
#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "sz/minplus.hpp"
#include "test_oracles.hpp"

namespace sz {
namespace {

using testing::brute_minplus;
using testing::random_matrix;

const std::array<ProductBackend, 5> kBackends = {
    ProductBackend::naive(), ProductBackend::blocked(3), ProductBackend::blocked(64),
    ProductBackend::encoded(), ProductBackend::encoded_strassen(2)};

TEST(DistanceProductTest, CounterExampleSquare) {
  const WeightMatrix expected{{0, 2, 4}, {2, 0, 6}, {4, 6, 0}};
  for (const auto& backend : kBackends) {
    EXPECT_EQ(distance_product(testing::g_prime_matrix(), testing::g_prime_matrix(), backend),
              expected)
        << to_string(backend.kind);
  }
}

TEST(DistanceProductTest, IdentityIsNeutral) {
  std::mt19937_64 rng(11);
  for (const auto& backend : kBackends) {
    for (int t = 0; t < 20; ++t) {
      const Index n = 1 + t % 7;
      const WeightMatrix a = random_matrix(rng, n, -8, 16, 0.3);
      EXPECT_EQ(distance_product(a, minplus_identity(n), backend), a);
      EXPECT_EQ(distance_product(minplus_identity(n), a, backend), a);
    }
  }
}

TEST(DistanceProductTest, MatchesBruteForceFiveByFive) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const WeightMatrix a = random_matrix(rng, 5, 1, 8, 0.25);
    const WeightMatrix b = random_matrix(rng, 5, 1, 8, 0.25);
    const WeightMatrix want = brute_minplus(a, b);
    for (const auto& backend : kBackends) {
      ASSERT_EQ(distance_product(a, b, backend), want) << to_string(backend.kind);
    }
  }
}

TEST(DistanceProductTest, AllInfinityOperand) {
  const WeightMatrix a = constant_matrix(3, kInf);
  const WeightMatrix b{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (const auto& backend : kBackends) {
    EXPECT_EQ(distance_product(a, b, backend), a);
    EXPECT_EQ(distance_product(b, a, backend), a);
  }
}

TEST(DistanceProductTest, DimensionMismatch) {
  for (const auto& backend : kBackends) {
    EXPECT_THROW(distance_product(constant_matrix(2, 0), constant_matrix(3, 0), backend),
                 InvalidArgument);
  }
}

TEST(DistanceProductTest, EncodedRejectsWideSpreadAndCallerFallsBack) {
  ProductBackend enc = ProductBackend::encoded();
  enc.max_spread = 10;
  const WeightMatrix a{{0, 11}, {kInf, 3}};
  EXPECT_THROW(distance_product(a, a, enc), BackendUnsupported);
  EXPECT_EQ(distance_product_or_naive(a, a, enc), brute_minplus(a, a));
}

TEST(DistanceProductTest, Associative) {
  std::mt19937_64 rng(3);
  for (const auto& backend : kBackends) {
    for (int t = 0; t < 30; ++t) {
      const Index n = 1 + t % 6;
      const WeightMatrix a = random_matrix(rng, n, -5, 10, 0.3);
      const WeightMatrix b = random_matrix(rng, n, -5, 10, 0.3);
      const WeightMatrix c = random_matrix(rng, n, -5, 10, 0.3);
      EXPECT_EQ(distance_product(distance_product(a, b, backend), c, backend),
                distance_product(a, distance_product(b, c, backend), backend));
    }
  }
}

TEST(DistanceProductTest, Monotone) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> bump(0, 3);
  std::bernoulli_distribution to_inf(0.1);
  const auto raise = [&](const WeightMatrix& m) {
    return WeightMatrix(m.dense().unaryExpr([&](ExtInt v) {
      return to_inf(rng) ? kInf : v + ExtInt(bump(rng));
    }));
  };
  for (int t = 0; t < 200; ++t) {
    const Index n = 1 + t % 6;
    const WeightMatrix a = random_matrix(rng, n, -5, 10, 0.2);
    const WeightMatrix b = random_matrix(rng, n, -5, 10, 0.2);
    const WeightMatrix lo = distance_product(a, b);
    const WeightMatrix hi = distance_product(raise(a), raise(b));
    EXPECT_TRUE((lo.dense().array() <= hi.dense().array()).all());
  }
}

TEST(DistanceProductTest, RangeGrowth) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    const Index n = 1 + t % 8;
    const WeightMatrix a = random_matrix(rng, n, 1, 8, 0.3);
    const WeightMatrix b = random_matrix(rng, n, 1, 8, 0.3);
    const WeightMatrix c = distance_product(a, b);
    for (const ExtInt v : c.dense().reshaped()) {
      if (v.is_finite()) {
        EXPECT_GE(v.value(), 2);
        EXPECT_LE(v.value(), 16);
      }
    }
  }
}

TEST(DistanceProductTest, ThreadCountDoesNotChangeOutput) {
  std::mt19937_64 rng(8);
  const WeightMatrix a = random_matrix(rng, 37, -16, 32, 0.4);
  const WeightMatrix b = random_matrix(rng, 37, -16, 32, 0.4);
  ::setenv("SZ_THREADS", "1", 1);
  const WeightMatrix one = distance_product(a, b, ProductBackend::blocked(5));
  ::setenv("SZ_THREADS", "4", 1);
  EXPECT_EQ(product_threads(), 4u);
  const WeightMatrix four = distance_product(a, b, ProductBackend::blocked(5));
  const WeightMatrix four_naive = distance_product(a, b, ProductBackend::naive());
  ::unsetenv("SZ_THREADS");
  EXPECT_EQ(one, four);
  EXPECT_EQ(one, four_naive);
  EXPECT_EQ(one, brute_minplus(a, b));
}

TEST(BackendNameTest, ParsesAllNames) {
  for (const auto* name : {"naive", "blocked", "encoded", "encoded-strassen"}) {
    EXPECT_EQ(to_string(parse_backend_kind(name)), name);
  }
  EXPECT_THROW(parse_backend_kind("strassen"), InvalidArgument);
}

TEST(EncodedStatsTest, TracksPeakBits) {
  EncodedStats stats;
  const WeightMatrix a{{0, 3}, {3, 0}};
  distance_product(a, a, ProductBackend::encoded(), &stats);
  EXPECT_EQ(stats.products, 1u);
  EXPECT_EQ(stats.peak_spread, 3);
  // Diagonal cell: 3^6 + 1 = 730 needs 10 bits.
  EXPECT_EQ(stats.peak_bits, 10u);
}

}  // namespace
}  // namespace sz
