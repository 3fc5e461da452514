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

// Command-line front end. Talks to the library only through depthcut.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "depthcut/depthcut.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitOracle = 3;

int ExitCode(dc_status s) {
  switch (s) {
    case DC_OK: return kExitOk;
    case DC_ERR_ORACLE:
    case DC_ERR_CYCLIC: return kExitOracle;
    default: return kExitValidation;
  }
}

int Report(dc_status s, const std::string& what) {
  if (s != DC_OK) std::cerr << "depthcut " << what << ": " << dc_last_error() << "\n";
  return ExitCode(s);
}

// Takes ownership of a library string.
std::string Take(char* s) {
  std::string out = s == nullptr ? "" : s;
  dc_string_free(s);
  return out;
}

void Emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
}

struct Scoped {
  dc_scene* scene = nullptr;
  dc_fragments* fragments = nullptr;
  ~Scoped() {
    dc_scene_free(scene);
    dc_fragments_free(fragments);
  }
};

// A fragment file if it parses as one, otherwise a scene.
dc_status LoadAny(const std::string& path, Scoped& h) {
  if (dc_fragments_load(path.c_str(), &h.fragments) == DC_OK) return DC_OK;
  return dc_scene_load(path.c_str(), &h.scene);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cuts disjoint triangles or segments in 3-space into fragments that admit a depth order."};
  app.set_version_flag("--version", std::string(dc_version()));
  app.require_subcommand(1);

  // gen
  std::string family, gen_out;
  int gen_n = 8;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Write a generated scene");
  gen->add_option("family", family, "Generator family (see --list)");
  gen->add_option("--n", gen_n, "Size parameter")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("-o,--out", gen_out, "Output file (stdout when omitted)");
  bool list = false;
  gen->add_flag("--list", list, "List the families");

  // cut
  std::string cut_in, cut_out, stats_out, obj_out, algorithm = "triangles", strategy = "greedy";
  long cut_r = 0;
  int rho = 4;
  std::uint64_t cut_seed = 1;
  bool triangulate = false;
  auto* cut = app.add_subcommand("cut", "Cut a scene into fragments that admit a depth order");
  cut->add_option("input", cut_in, "Scene file")->required();
  cut->add_option("-a,--algorithm", algorithm, "triangles, triangles-k or lines")
      ->check(CLI::IsMember({"triangles", "triangles-k", "lines"}));
  cut->add_option("-s,--strategy", strategy, "trivial, greedy or exact")->check(CLI::IsMember({"trivial", "greedy", "exact"}));
  cut->add_option("--r", cut_r, "Cutting parameter r (0 for the default)")->check(CLI::NonNegativeNumber);
  cut->add_option("--rho", rho, "Hierarchy branching")->check(CLI::Range(2, 64));
  cut->add_option("--seed", cut_seed, "Sampling seed");
  cut->add_option("-o,--out", cut_out, "Fragment file");
  cut->add_option("--stats", stats_out, "Statistics JSON file (stderr summary otherwise)");
  cut->add_flag("--triangulate", triangulate, "Fan-triangulate the fragments before writing");
  cut->add_option("--export-obj", obj_out, "Also write the fragments as OBJ geometry");

  // order
  std::string order_in;
  auto* order = app.add_subcommand("order", "Print a depth order or a cycle with witnesses");
  order->add_option("input", order_in, "Scene or fragment file")->required();

  // render
  std::string render_in, render_out, mode = "painter";
  int width = 128, height = 128;
  auto* render = app.add_subcommand("render", "Rasterize fragments to PPM or compare painter and z-buffer");
  render->add_option("input", render_in, "Fragment file")->required();
  render->add_option("--width", width, "Image width")->check(CLI::Range(1, 8192));
  render->add_option("--height", height, "Image height")->check(CLI::Range(1, 8192));
  render->add_option("-m,--mode", mode, "painter, zbuffer or diff")->check(CLI::IsMember({"painter", "zbuffer", "diff"}));
  render->add_option("-o,--out", render_out, "PPM output");

  // bench
  std::vector<std::string> families{"random"};
  std::vector<int> sizes{16, 32, 64};
  std::vector<std::string> strategies{"greedy"};
  std::vector<std::uint64_t> seeds{1};
  std::string bench_alg, csv_out = "bench.csv", fit_out = "bench_fit.csv";
  int bench_rho = 4;
  auto* bench = app.add_subcommand("bench", "Sweep sizes, check every instance and fit log-log slopes");
  bench->add_option("--families", families, "Families")->delimiter(',');
  bench->add_option("--sizes", sizes, "Size parameters")->delimiter(',');
  bench->add_option("--strategies", strategies, "Cut-set strategies")->delimiter(',');
  bench->add_option("--seeds", seeds, "Seeds")->delimiter(',');
  bench->add_option("-a,--algorithm", bench_alg, "Force triangles, triangles-k or lines");
  bench->add_option("--rho", bench_rho, "Hierarchy branching")->check(CLI::Range(2, 64));
  bench->add_option("-o,--out", csv_out, "CSV rows");
  bench->add_option("--fit", fit_out, "Fit summary CSV (also printed)");
  bench->footer("Worker count comes from the DEPTHCUT_WORKERS environment variable.");

  // verify
  std::string verify_in;
  auto* verify = app.add_subcommand("verify", "Validate a scene, or check a fragment file with the oracle");
  verify->add_option("input", verify_in, "Scene or fragment file")->required();

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    if (list) {
      std::cout << Take([] {
        char* s = nullptr;
        dc_families(&s);
        return s;
      }());
      return kExitOk;
    }
    if (family.empty()) {
      std::cerr << "depthcut gen: a family is required\n";
      return kExitValidation;
    }
    Scoped h;
    dc_status s = dc_scene_generate(family.c_str(), gen_n, gen_seed, &h.scene);
    if (s != DC_OK) return Report(s, "gen");
    char* json = nullptr;
    s = dc_scene_to_json(h.scene, &json);
    if (s != DC_OK) return Report(s, "gen");
    Emit(Take(json), gen_out);
    return kExitOk;
  }

  if (cut->parsed()) {
    Scoped h;
    dc_status s = dc_scene_load(cut_in.c_str(), &h.scene);
    if (s != DC_OK) return Report(s, "cut");
    if ((s = dc_scene_validate(h.scene)) != DC_OK) return Report(s, "cut");
    dc_cut_params p = dc_default_cut_params();
    p.algorithm = algorithm == "lines" ? DC_ALG_LINES : (algorithm == "triangles-k" ? DC_ALG_TRIANGLES_K : DC_ALG_TRIANGLES);
    p.strategy = strategy == "trivial" ? DC_STRATEGY_TRIVIAL : (strategy == "exact" ? DC_STRATEGY_EXACT : DC_STRATEGY_GREEDY);
    p.r = cut_r;
    p.rho = rho;
    p.seed = cut_seed;
    const dc_status cut_status = dc_cut(h.scene, &p, &h.fragments);
    if (h.fragments == nullptr) return Report(cut_status, "cut");
    if (!cut_out.empty() && (s = dc_fragments_save(h.fragments, cut_out.c_str(), triangulate ? 1 : 0)) != DC_OK)
      return Report(s, "cut");
    if (!obj_out.empty() && (s = dc_fragments_export_obj(h.fragments, obj_out.c_str())) != DC_OK) return Report(s, "cut");
    char* stats = nullptr;
    dc_fragments_stats_json(h.fragments, &stats);
    const std::string text = Take(stats);
    if (!stats_out.empty()) Emit(text, stats_out);
    else std::cerr << text;
    return Report(cut_status, "cut");
  }

  if (order->parsed()) {
    Scoped h;
    dc_status s = LoadAny(order_in, h);
    if (s != DC_OK) return Report(s, "order");
    int acyclic = 0;
    char* json = nullptr;
    s = h.fragments ? dc_fragments_order(h.fragments, &acyclic, &json) : dc_scene_order(h.scene, &acyclic, &json);
    if (s != DC_OK) return Report(s, "order");
    std::cout << Take(json);
    return kExitOk;
  }

  if (render->parsed()) {
    Scoped h;
    dc_status s = dc_fragments_load(render_in.c_str(), &h.fragments);
    if (s != DC_OK) return Report(s, "render");
    const dc_render_mode m = mode == "zbuffer" ? DC_RENDER_ZBUFFER : (mode == "diff" ? DC_RENDER_DIFF : DC_RENDER_PAINTER);
    long differing = 0, masked = 0;
    s = dc_render(h.fragments, width, height, m, render_out.empty() ? nullptr : render_out.c_str(), &differing, &masked);
    if (s != DC_OK) return Report(s, "render");
    const long pixels = static_cast<long>(width) * height;
    if (m == DC_RENDER_DIFF) {
      std::cout << "differing " << differing << "\nmasked " << masked << " of " << pixels << "\n";
      return differing == 0 ? kExitOk : kExitOracle;
    }
    std::cerr << "masked " << masked << " of " << pixels << "\n";
    return kExitOk;
  }

  if (bench->parsed()) {
    nlohmann::json cfg{{"families", families}, {"sizes", sizes}, {"strategies", strategies},
                       {"seeds", seeds},       {"algorithm", bench_alg}, {"rho", bench_rho}};
    char* summary = nullptr;
    dc_status s = dc_bench(cfg.dump().c_str(), csv_out.c_str(), fit_out.c_str(), &summary);
    if (s != DC_OK) return Report(s, "bench");
    std::cout << Take(summary);
    return kExitOk;
  }

  if (verify->parsed()) {
    Scoped h;
    dc_status s = LoadAny(verify_in, h);
    if (s != DC_OK) return Report(s, "verify");
    if (h.fragments) {
      char* report = nullptr;
      s = dc_fragments_verify(h.fragments, &report);
      std::cout << Take(report);
      return Report(s, "verify");
    }
    if ((s = dc_scene_validate(h.scene)) != DC_OK) return Report(s, "verify");
    int acyclic = 0;
    char* json = nullptr;
    s = dc_scene_order(h.scene, &acyclic, &json);
    if (s != DC_OK) return Report(s, "verify");
    Take(json);
    std::size_t tris = 0, segs = 0;
    dc_scene_counts(h.scene, &tris, &segs);
    std::cout << "valid scene: " << tris << " triangles, " << segs << " segments, "
              << (acyclic ? "admits a depth order" : "has a depth cycle") << "\n";
    return kExitOk;
  }
  return kExitOk;
}
