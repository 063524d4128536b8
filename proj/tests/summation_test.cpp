#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "primetab/summation.hpp"

using namespace primetab;

TEST_CASE("pairwise sum of integers is exact") {
  std::vector<double> xs;
  for (int i = 1; i <= 10000; ++i) xs.push_back(i);
  CHECK(pairwise_sum(std::span<const double>(xs)) == 50005000.0);
}

TEST_CASE("pairwise sum beats plain accumulation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xs(1 << 20);
  long double exact = 0.0L;
  double naive = 0.0;
  for (auto& x : xs) {
    x = u(rng);
    exact += x;
    naive += x;
  }
  const double pw = pairwise_sum(std::span<const double>(xs));
  const double err_pw = std::abs(static_cast<double>(pw - exact));
  CHECK(err_pw <= std::abs(static_cast<double>(naive - exact)));
  CHECK(err_pw < 1e-9);
}

TEST_CASE("value is a snapshot and the result is reproducible") {
  PairwiseAccumulator<double> a;
  PairwiseAccumulator<double> b;
  for (int i = 0; i < 1000; ++i) {
    a.add(1.0 / (i + 1));
    b.add(1.0 / (i + 1));
    if (i == 500) (void)a.value();
  }
  CHECK(a.count() == 1000);
  CHECK(a.value() == b.value());
}
