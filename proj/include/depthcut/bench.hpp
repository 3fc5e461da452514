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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "depthcut/cutset.hpp"

namespace depthcut {

/// Worker count for bench runs, from DEPTHCUT_WORKERS (default 1).
inline constexpr const char* kWorkersEnv = "DEPTHCUT_WORKERS";
int WorkersFromEnv();

struct BenchRow {
  std::string family;
  std::string algorithm;  // triangles, triangles-k or lines
  long n = 0;
  long K = 0;
  long r = 0;
  int rho = 0;
  std::string strategy;
  long fragments_t1 = 0;
  long cuts_x = 0;
  long fragments_t2 = 0;
  bool oracle_ok = false;
  double wall_ms = 0;
  std::uint64_t seed = 0;
};

struct BenchConfig {
  std::vector<std::string> families;
  std::vector<int> sizes;
  std::vector<CutStrategy> strategies{CutStrategy::kGreedy};
  std::vector<std::uint64_t> seeds{1};
  /// Empty: triangles for triangle scenes, lines for segment scenes.
  std::string algorithm;
  int rho = 4;
  int workers = 1;
};

/// Raised when any instance fails the oracle; no report is produced.
class OracleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One pipeline run on a generated scene.
BenchRow RunInstance(const std::string& family, int n, std::uint64_t seed, CutStrategy strategy,
                     const std::string& algorithm = "", int rho = 4);

/// All (family, n, seed, strategy) instances, rows sorted in that order.
std::vector<BenchRow> RunBench(const BenchConfig& config);

struct Fit {
  std::string family, algorithm, strategy;
  double slope = 0, intercept = 0, r2 = 0;
  int points = 0;
};

/// Least squares of y on x; r2 is 1 for a perfect fit.
Fit LeastSquares(const std::vector<double>& x, const std::vector<double>& y);

/// log T2 against log n per (family, algorithm, strategy), seeds averaged in
/// log space.
std::vector<Fit> FitScaling(const std::vector<BenchRow>& rows);

std::string BenchCsv(const std::vector<BenchRow>& rows);
std::string FitCsv(const std::vector<Fit>& fits);

}  // namespace depthcut
