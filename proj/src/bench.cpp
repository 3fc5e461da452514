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

#include "depthcut/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "depthcut/scenes.hpp"

namespace depthcut {

int WorkersFromEnv() {
  const char* v = std::getenv(kWorkersEnv);
  if (v == nullptr || *v == '\0') return 1;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1) return 1;
  return static_cast<int>(std::min(n, 256L));
}

BenchRow RunInstance(const std::string& family, int n, std::uint64_t seed, CutStrategy strategy,
                     const std::string& algorithm, int rho) {
  const Scene scene = Generate(family, n, seed);
  std::string alg = algorithm;
  if (alg.empty()) alg = scene.triangles.empty() ? "lines" : "triangles";

  PipelineParams params;
  params.strategy = strategy;
  params.seed = seed;
  params.rho = rho;
  BenchRow row;
  row.family = family;
  row.algorithm = alg;
  row.strategy = ToString(strategy);
  row.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  if (alg == "lines") {
    if (scene.segments.empty()) throw std::invalid_argument(family + " has no segments");
    const LinesResult res = CutLines(scene.segments, params);
    row.n = res.stats.n;
    row.r = res.stats.r;
    row.rho = rho;
    row.fragments_t1 = res.stats.n + res.stats.boundary_cuts;
    row.cuts_x = res.stats.column_cuts;
    row.fragments_t2 = res.stats.fragments;
    row.oracle_ok = res.stats.oracle_ok && res.stats.hierarchy_check.empty();
  } else {
    if (scene.triangles.empty()) throw std::invalid_argument(family + " has no triangles");
    FragmentationResult res;
    if (alg == "triangles") res = CutTriangles(scene.triangles, params);
    else if (alg == "triangles-k") res = CutTrianglesKSensitive(scene.triangles, params);
    else throw std::invalid_argument("unknown algorithm '" + alg + "'");
    const PipelineStats& st = res.stats;
    row.n = st.n;
    row.K = st.K;
    row.r = st.r;
    row.rho = st.rho;
    row.fragments_t1 = st.t1;
    row.cuts_x = st.cuts_x;
    row.fragments_t2 = st.t2;
    row.oracle_ok = st.oracle_ok && st.hierarchy_check.empty() && st.max_prism_edges <= st.prism_budget;
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<BenchRow> RunBench(const BenchConfig& config) {
  struct Task {
    std::string family;
    int n;
    std::uint64_t seed;
    CutStrategy strategy;
  };
  std::vector<Task> tasks;
  for (const auto& f : config.families)
    for (int n : config.sizes)
      for (auto seed : config.seeds)
        for (auto s : config.strategies) tasks.push_back({f, n, seed, s});

  std::vector<BenchRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (std::size_t i; !failed && (i = next++) < tasks.size();) {
      try {
        const Task& t = tasks[i];
        rows[i] = RunInstance(t.family, t.n, t.seed, t.strategy, config.algorithm, config.rho);
        if (!rows[i].oracle_ok) {
          std::ostringstream msg;
          msg << "oracle failure: " << t.family << " n=" << t.n << " seed=" << t.seed << " strategy=" << ToString(t.strategy);
          throw OracleFailure(msg.str());
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  const int workers = std::max(1, std::min<int>(config.workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return rows;
}

Fit LeastSquares(const std::vector<double>& x, const std::vector<double>& y) {
  Fit fit;
  fit.points = static_cast<int>(x.size());
  if (x.size() < 2 || x.size() != y.size()) return fit;
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

std::vector<Fit> FitScaling(const std::vector<BenchRow>& rows) {
  using Key = std::tuple<std::string, std::string, std::string>;
  std::map<Key, std::map<long, std::vector<double>>> groups;
  for (const auto& r : rows)
    if (r.n > 0 && r.fragments_t2 > 0)
      groups[{r.family, r.algorithm, r.strategy}][r.n].push_back(std::log(static_cast<double>(r.fragments_t2)));
  std::vector<Fit> fits;
  for (const auto& [key, by_n] : groups) {
    std::vector<double> x, y;
    for (const auto& [n, logs] : by_n) {
      double sum = 0;
      for (double v : logs) sum += v;
      x.push_back(std::log(static_cast<double>(n)));
      y.push_back(sum / static_cast<double>(logs.size()));
    }
    Fit fit = LeastSquares(x, y);
    std::tie(fit.family, fit.algorithm, fit.strategy) = key;
    fits.push_back(std::move(fit));
  }
  return fits;
}

std::string BenchCsv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "family,algorithm,n,K,r,rho,strategy,fragments_T1,cuts_X,fragments_T2,oracle_ok,wall_ms,seed\n";
  out.setf(std::ios::fixed);
  out.precision(3);
  for (const auto& r : rows)
    out << r.family << ',' << r.algorithm << ',' << r.n << ',' << r.K << ',' << r.r << ',' << r.rho << ',' << r.strategy
        << ',' << r.fragments_t1 << ',' << r.cuts_x << ',' << r.fragments_t2 << ',' << (r.oracle_ok ? "true" : "false")
        << ',' << r.wall_ms << ',' << r.seed << '\n';
  return out.str();
}

std::string FitCsv(const std::vector<Fit>& fits) {
  std::ostringstream out;
  out << "family,algorithm,strategy,points,slope,intercept,r2\n";
  out.setf(std::ios::fixed);
  out.precision(4);
  for (const auto& f : fits)
    out << f.family << ',' << f.algorithm << ',' << f.strategy << ',' << f.points << ',' << f.slope << ','
        << f.intercept << ',' << f.r2 << '\n';
  return out.str();
}

}  // namespace depthcut
