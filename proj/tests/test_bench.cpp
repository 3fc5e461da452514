// Copyright 2026 The depthcut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <cstdlib>

#include "depthcut/bench.hpp"

using namespace depthcut;

namespace {

BenchRow Row(const std::string& family, long n, long t2, std::uint64_t seed) {
  BenchRow r;
  r.family = family;
  r.algorithm = "triangles";
  r.strategy = "greedy";
  r.n = n;
  r.fragments_t2 = t2;
  r.seed = seed;
  r.oracle_ok = true;
  return r;
}

long Lines(const std::string& s) { return static_cast<long>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("least squares recovers an exact line") {
  const Fit f = LeastSquares({1, 2, 3, 4}, {3, 5, 7, 9});
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.r2 == doctest::Approx(1.0));
  CHECK(f.points == 4);
}

TEST_CASE("least squares matches the normal equations on noisy data") {
  const std::vector<double> x{0, 1, 2, 3, 4, 5}, y{1.1, 2.9, 5.2, 6.8, 9.1, 11.0};
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i], sy += y[i], sxx += x[i] * x[i], sxy += x[i] * y[i], syy += y[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double corr = (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
  const Fit f = LeastSquares(x, y);
  CHECK(f.slope == doctest::Approx(slope));
  CHECK(f.intercept == doctest::Approx((sy - slope * sx) / n));
  CHECK(f.r2 == doctest::Approx(corr * corr));
}

TEST_CASE("scaling fit averages seeds in log space") {
  std::vector<BenchRow> rows;
  for (long n : {16, 32, 64, 128}) {
    const double t = 7.0 * std::pow(static_cast<double>(n), 1.5);
    // Seeds at t/2 and 2t have geometric mean t.
    rows.push_back(Row("random", n, std::lround(t / 2), 1));
    rows.push_back(Row("random", n, std::lround(t * 2), 2));
    rows.push_back(Row("parallel", n, 3 * n, 1));
  }
  const auto fits = FitScaling(rows);
  REQUIRE(fits.size() == 2);
  for (const auto& f : fits) {
    CHECK(f.points == 4);
    if (f.family == "random") CHECK(f.slope == doctest::Approx(1.5).epsilon(0.01));
    if (f.family == "parallel") CHECK(f.slope == doctest::Approx(1.0));
  }
  CHECK(Lines(FitCsv(fits)) == 3);
}

TEST_CASE("instances pass the oracle and report counts") {
  const BenchRow tri = RunInstance("random", 12, 3, CutStrategy::kGreedy);
  CHECK(tri.oracle_ok);
  CHECK(tri.algorithm == "triangles");
  CHECK(tri.n == 12);
  CHECK(tri.fragments_t2 >= tri.n);
  const BenchRow seg = RunInstance("random-lines", 8, 3, CutStrategy::kExact);
  CHECK(seg.oracle_ok);
  CHECK(seg.algorithm == "lines");
  CHECK(seg.fragments_t2 >= seg.n + seg.cuts_x);
  CHECK_THROWS(RunInstance("no-such-family", 4, 1, CutStrategy::kGreedy));
}

TEST_CASE("parallel runs keep task order and results") {
  BenchConfig cfg;
  cfg.families = {"random", "random-lines"};
  cfg.sizes = {8, 12};
  cfg.seeds = {1, 2};
  cfg.workers = 1;
  const auto serial = RunBench(cfg);
  cfg.workers = 3;
  const auto parallel = RunBench(cfg);
  REQUIRE(serial.size() == 8);
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].family == parallel[i].family);
    CHECK(serial[i].n == parallel[i].n);
    CHECK(serial[i].seed == parallel[i].seed);
    CHECK(serial[i].fragments_t2 == parallel[i].fragments_t2);
    CHECK(serial[i].oracle_ok);
  }
  CHECK(Lines(BenchCsv(serial)) == 9);
}

TEST_CASE("worker count comes from the environment") {
  setenv(kWorkersEnv, "3", 1);
  CHECK(WorkersFromEnv() == 3);
  setenv(kWorkersEnv, "zero", 1);
  CHECK(WorkersFromEnv() == 1);
  unsetenv(kWorkersEnv);
  CHECK(WorkersFromEnv() == 1);
}
