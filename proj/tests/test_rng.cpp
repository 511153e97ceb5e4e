#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "driftreg/rng.hpp"

using namespace driftreg;

TEST_SUITE("rng") {

TEST_CASE("a seed reproduces the full stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next_u64() == b.next_u64());
    CHECK(a.gaussian() == b.gaussian());
    CHECK(a.poisson(12.0) == b.poisson(12.0));
    CHECK(a.poisson(200.0) == b.poisson(200.0));
  }
}

TEST_CASE("uniform stays in [0,1)") {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("uniform_int covers the closed range") {
  Rng rng(2);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t v = rng.uniform_int(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("gaussian has unit moments") {
  Rng rng(3);
  const int n = 100000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.gaussian();
    sum += z;
    sum2 += z * z;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::fabs(mean) < 0.02);
  CHECK(std::fabs(var - 1.0) < 0.02);
}

TEST_CASE("poisson matches mean and variance on both sampler branches") {
  for (double lambda : {3.5, 300.0}) {
    Rng rng(4);
    const int n = 50000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double k = static_cast<double>(rng.poisson(lambda));
      sum += k;
      sum2 += k * k;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(mean == doctest::Approx(lambda).epsilon(0.02));
    CHECK(var == doctest::Approx(lambda).epsilon(0.05));
  }
}

TEST_CASE("poisson of zero mean is zero") {
  Rng rng(5);
  CHECK(rng.poisson(0.0) == 0);
}

TEST_CASE("mix64 separates nearby inputs") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 4096; ++i) seen.insert(mix64(12345, i));
  CHECK(seen.size() == 4096);
  CHECK(mix64(1, 2) != mix64(2, 1));
}

}  // TEST_SUITE
