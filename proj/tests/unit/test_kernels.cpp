#include <cstring>
#include <random>

#include <omp.h>

#include <gtest/gtest.h>

#include "lstree/kernels.hpp"
#include "oracles.hpp"

using namespace lstree;

namespace {

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

class KernelThreads : public ::testing::TestWithParam<int> {};

}  // namespace

TEST_P(KernelThreads, ParallelDistancesMatchSerialBitwise) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(GetParam());
  std::mt19937_64 rng(11);
  for (std::size_t d : {1u, 2u, 5u}) {
    const std::size_t n = 173;
    const auto x = oracle::random_coords(rng, n, d);
    std::vector<double> serial(n * n), parallel(n * n);
    kernels::euclidean_distances_serial(x, n, d, serial);
    kernels::euclidean_distances_parallel(x, n, d, parallel);
    EXPECT_TRUE(bitwise_equal(serial, parallel)) << "d=" << d;
  }
  omp_set_num_threads(saved);
}

TEST_P(KernelThreads, ParallelKnnMatchesSerial) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(GetParam());
  std::mt19937_64 rng(12);
  const std::size_t n = 150;
  const auto x = oracle::random_coords(rng, n, 2);
  std::vector<double> dist(n * n);
  kernels::euclidean_distances_serial(x, n, 2, dist);
  for (std::size_t k : {1u, 7u, 149u}) {
    std::vector<index_t> ns(n * k), np(n * k);
    std::vector<double> rs(n), rp(n);
    kernels::knn_rows_serial(dist, n, k, ns, rs);
    kernels::knn_rows_parallel(dist, n, k, np, rp);
    EXPECT_EQ(ns, np);
    EXPECT_TRUE(bitwise_equal(rs, rp));
  }
  omp_set_num_threads(saved);
}

INSTANTIATE_TEST_SUITE_P(ThreadCounts, KernelThreads, ::testing::Values(1, 2, 3, 8));

TEST(Kernels, DistancesMatchNaiveFormula) {
  std::mt19937_64 rng(13);
  const std::size_t n = 40, d = 3;
  const auto x = oracle::random_coords(rng, n, d);
  const PointMatrix points(n, d, x);
  std::vector<double> out(n * n);
  kernels::euclidean_distances_parallel(x, n, d, out);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_NEAR(out[i * n + j], oracle::distance(points, i, j), 1e-12);
      EXPECT_EQ(out[i * n + j], out[j * n + i]);
    }
    EXPECT_EQ(out[i * n + i], 0.0);
  }
}

TEST(Kernels, MaxThreadsIsPositive) { EXPECT_GE(kernels::max_threads(), 1); }
