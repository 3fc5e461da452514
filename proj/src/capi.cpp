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

#include "depthcut/depthcut.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "depthcut/bench.hpp"
#include "depthcut/depth_graph.hpp"
#include "depthcut/io.hpp"
#include "depthcut/render.hpp"

struct dc_scene {
  depthcut::Scene scene;
};

struct dc_fragments {
  depthcut::FragmentFile file;
};

namespace {

using namespace depthcut;

thread_local std::string last_error;

dc_status Fail(dc_status code, const std::string& message) {
  last_error = message;
  return code;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
dc_status Guard(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const IoError& e) {
    return Fail(DC_ERR_IO, e.what());
  } catch (const FormatError& e) {
    return Fail(DC_ERR_FORMAT, e.what());
  } catch (const ParseError& e) {
    return Fail(DC_ERR_FORMAT, e.what());
  } catch (const Json::exception& e) {
    return Fail(DC_ERR_FORMAT, e.what());
  } catch (const DisjointnessViolation& e) {
    return Fail(DC_ERR_VALIDATION, e.what());
  } catch (const GeometryError& e) {
    return Fail(DC_ERR_VALIDATION, e.what());
  } catch (const SceneError& e) {
    return Fail(DC_ERR_VALIDATION, e.what());
  } catch (const OracleFailure& e) {
    return Fail(DC_ERR_ORACLE, e.what());
  } catch (const RenderError& e) {
    return Fail(DC_ERR_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(DC_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(DC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(DC_ERR_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool KnownFamily(const std::string& family) {
  const auto all = Families();
  return std::find(all.begin(), all.end(), family) != all.end();
}

Json PointJson2(const Point2& p) { return Json::array({FormatRational(p.x), FormatRational(p.y)}); }

Json OrderJson(const std::vector<DepthObject>& objects, int* acyclic) {
  const DepthOrderResult res = FindDepthOrder(BuildDepthGraph(objects));
  if (acyclic != nullptr) *acyclic = res.acyclic ? 1 : 0;
  if (res.acyclic) return {{"acyclic", true}, {"order", res.order}};
  Json witnesses = Json::array();
  for (const auto& w : res.cycle.witnesses) witnesses.push_back(PointJson2(w));
  return {{"acyclic", false}, {"cycle", res.cycle.nodes}, {"witnesses", witnesses}};
}

CutStrategy ToStrategy(dc_strategy s) {
  switch (s) {
    case DC_STRATEGY_TRIVIAL: return CutStrategy::kTrivial;
    case DC_STRATEGY_GREEDY: return CutStrategy::kGreedy;
    case DC_STRATEGY_EXACT: return CutStrategy::kExact;
  }
  throw std::invalid_argument("unknown strategy");
}

}  // namespace

extern "C" {

const char* dc_version(void) { return "1.0.0"; }

const char* dc_last_error(void) { return last_error.c_str(); }

void dc_string_free(char* s) { std::free(s); }

dc_cut_params dc_default_cut_params(void) {
  dc_cut_params p;
  p.algorithm = DC_ALG_TRIANGLES;
  p.strategy = DC_STRATEGY_GREEDY;
  p.r = 0;
  p.rho = 4;
  p.seed = 1;
  return p;
}

dc_status dc_scene_generate(const char* family, int n, uint64_t seed, dc_scene** out) {
  return Guard([&] {
    if (family == nullptr || out == nullptr) return Fail(DC_ERR_ARGUMENT, "null argument");
    if (!KnownFamily(family)) return Fail(DC_ERR_UNKNOWN, std::string("unknown family '") + family + "'");
    *out = new dc_scene{Generate(family, n, seed)};
    return DC_OK;
  });
}

dc_status dc_scene_load(const char* path, dc_scene** out) {
  return Guard([&] {
    if (path == nullptr || out == nullptr) return Fail(DC_ERR_ARGUMENT, "null argument");
    *out = new dc_scene{SceneFromJson(ReadJsonFile(path))};
    return DC_OK;
  });
}

dc_status dc_scene_save(const dc_scene* scene, const char* path) {
  return Guard([&] {
    if (scene == nullptr || path == nullptr) return Fail(DC_ERR_ARGUMENT, "null argument");
    WriteTextFile(path, DumpJson(SceneToJson(scene->scene)));
    return DC_OK;
  });
}

dc_status dc_scene_to_json(const dc_scene* scene, char** out) {
  return Guard([&] {
    if (scene == nullptr || out == nullptr) return Fail(DC_ERR_ARGUMENT, "null argument");
    *out = CopyString(DumpJson(SceneToJson(scene->scene)));
    return DC_OK;
  });
}

dc_status dc_scene_counts(const dc_scene* scene, size_t* triangles, size_t* segments) {
  if (scene == nullptr) return Fail(DC_ERR_ARGUMENT, "null scene");
  if (triangles != nullptr) *triangles = scene->scene.triangles.size();
  if (segments != nullptr) *segments = scene->scene.segments.size();
  return DC_OK;
}

dc_status dc_scene_validate(const dc_scene* scene) {
  return Guard([&] {
    if (scene == nullptr) return Fail(DC_ERR_ARGUMENT, "null scene");
    ValidateScene(scene->scene);
    return DC_OK;
  });
}

void dc_scene_free(dc_scene* scene) { delete scene; }

dc_status dc_families(char** out) {
  return Guard([&] {
    if (out == nullptr) return Fail(DC_ERR_ARGUMENT, "null argument");
    std::string all;
    for (const auto& f : Families()) all += f + "\n";
    *out = CopyString(all);
    return DC_OK;
  });
}

dc_status dc_cut(const dc_scene* scene, const dc_cut_params* params, dc_fragments** out) {
  return Guard([&] {
    if (scene == nullptr || params == nullptr || out == nullptr) return Fail(DC_ERR_ARGUMENT, "null argument");
    if (params->rho < 2) return Fail(DC_ERR_ARGUMENT, "rho must be at least 2");
    if (params->r < 0) return Fail(DC_ERR_ARGUMENT, "r must be non-negative");
    PipelineParams pp;
    pp.r = params->r;
    pp.rho = params->rho;
    pp.seed = params->seed;
    pp.strategy = ToStrategy(params->strategy);
    const Scene& s = scene->scene;
    auto result = std::make_unique<dc_fragments>();
    FragmentFile& file = result->file;
    bool ok = false;
    switch (params->algorithm) {
      case DC_ALG_TRIANGLES:
      case DC_ALG_TRIANGLES_K: {
        if (s.triangles.empty()) return Fail(DC_ERR_ARGUMENT, "scene has no triangles");
        if (!s.segments.empty()) return Fail(DC_ERR_ARGUMENT, "triangle algorithms take triangle-only scenes");
        FragmentationResult r = params->algorithm == DC_ALG_TRIANGLES ? CutTriangles(s.triangles, pp)
                                                                       : CutTrianglesKSensitive(s.triangles, pp);
        file.algorithm = r.stats.algorithm;
        file.stats = StatsToJson(r.stats);
        file.fragments = std::move(r.fragments);
        file.origin = std::move(r.origin);
        for (std::size_t i = 0; i < file.fragments.size(); ++i) file.fragments[i].parent_id = file.origin[i].triangle;
        ok = r.stats.oracle_ok && r.stats.hierarchy_check.empty();
        break;
      }
      case DC_ALG_LINES: {
        if (s.segments.empty()) return Fail(DC_ERR_ARGUMENT, "scene has no segments");
        if (!s.triangles.empty()) return Fail(DC_ERR_ARGUMENT, "the lines algorithm takes segment-only scenes");
        LinesResult r = CutLines(s.segments, pp);
        file.algorithm = "lines";
        file.stats = StatsToJson(r.stats);
        file.stats["cuts"] = CutSetToJson(r.cuts);
        file.segments = std::move(r.fragments.pieces);
        file.segment_parent = std::move(r.fragments.parent);
        ok = r.stats.oracle_ok && r.stats.hierarchy_check.empty();
        break;
      }
      default:
        return Fail(DC_ERR_UNKNOWN, "unknown algorithm");
    }
    *out = result.release();
    return ok ? DC_OK : Fail(DC_ERR_ORACLE, "the oracle found a depth cycle in the output");
  });
}

dc_status dc_fragments_load(const char* path, dc_fragments** out) {
  return Guard([&] {
    if (path == nullptr || out == nullptr) return Fail(DC_ERR_ARGUMENT, "null argument");
    *out = new dc_fragments{FragmentsFromJson(ReadJsonFile(path))};
    return DC_OK;
  });
}

dc_status dc_fragments_save(const dc_fragments* fragments, const char* path, int triangulate) {
  return Guard([&] {
    if (fragments == nullptr || path == nullptr) return Fail(DC_ERR_ARGUMENT, "null argument");
    if (!triangulate) {
      WriteTextFile(path, DumpJson(FragmentsToJson(fragments->file)));
      return DC_OK;
    }
    FragmentFile tri = fragments->file;
    tri.fragments.clear();
    tri.origin.clear();
    for (std::size_t i = 0; i < fragments->file.fragments.size(); ++i)
      for (auto& t : FanTriangulate(fragments->file.fragments[i])) {
        tri.fragments.push_back(std::move(t));
        if (i < fragments->file.origin.size()) tri.origin.push_back(fragments->file.origin[i]);
      }
    if (tri.stats.is_object()) tri.stats["triangulated"] = true;
    WriteTextFile(path, DumpJson(FragmentsToJson(tri)));
    return DC_OK;
  });
}

dc_status dc_fragments_export_obj(const dc_fragments* fragments, const char* path) {
  return Guard([&] {
    if (fragments == nullptr || path == nullptr) return Fail(DC_ERR_ARGUMENT, "null argument");
    WriteTextFile(path, FragmentsToObj(fragments->file.fragments));
    return DC_OK;
  });
}

dc_status dc_fragments_count(const dc_fragments* fragments, size_t* polygons, size_t* segments) {
  if (fragments == nullptr) return Fail(DC_ERR_ARGUMENT, "null fragments");
  if (polygons != nullptr) *polygons = fragments->file.fragments.size();
  if (segments != nullptr) *segments = fragments->file.segments.size();
  return DC_OK;
}

dc_status dc_fragments_stats_json(const dc_fragments* fragments, char** out) {
  return Guard([&] {
    if (fragments == nullptr || out == nullptr) return Fail(DC_ERR_ARGUMENT, "null argument");
    const Json& stats = fragments->file.stats;
    *out = CopyString(DumpJson(stats.is_null() ? Json::object() : stats));
    return DC_OK;
  });
}

void dc_fragments_free(dc_fragments* fragments) { delete fragments; }

dc_status dc_scene_order(const dc_scene* scene, int* acyclic, char** out) {
  return Guard([&] {
    if (scene == nullptr || out == nullptr) return Fail(DC_ERR_ARGUMENT, "null argument");
    ValidateScene(scene->scene);
    *out = CopyString(DumpJson(OrderJson(SceneObjects(scene->scene), acyclic)));
    return DC_OK;
  });
}

dc_status dc_fragments_order(const dc_fragments* fragments, int* acyclic, char** out) {
  return Guard([&] {
    if (fragments == nullptr || out == nullptr) return Fail(DC_ERR_ARGUMENT, "null argument");
    *out = CopyString(DumpJson(OrderJson(FragmentObjects(fragments->file), acyclic)));
    return DC_OK;
  });
}

dc_status dc_fragments_verify(const dc_fragments* fragments, char** report) {
  return Guard([&] {
    if (fragments == nullptr) return Fail(DC_ERR_ARGUMENT, "null fragments");
    const std::vector<DepthObject> objs = FragmentObjects(fragments->file);
    if (auto bad = PairwiseDisjoint3d(objs)) {
      const std::string msg = "objects " + std::to_string(bad->first) + " and " + std::to_string(bad->second) + " intersect";
      if (report != nullptr) *report = CopyString(DumpJson({{"ok", false}, {"reason", msg}}));
      return Fail(DC_ERR_VALIDATION, msg);
    }
    const DepthOrderResult res = FindDepthOrder(BuildDepthGraph(objs));
    Json out{{"objects", objs.size()}, {"acyclic", res.acyclic}};
    bool ok = res.acyclic;
    if (res.acyclic) {
      const auto violation = VerifyDepthOrder(objs, res.order);
      out["verify_depth_order"] = violation ? "violated" : "ok";
      ok = !violation;
    } else {
      out["cycle"] = res.cycle.nodes;
    }
    out["ok"] = ok;
    if (report != nullptr) *report = CopyString(DumpJson(out));
    return ok ? DC_OK : Fail(DC_ERR_ORACLE, "fragments admit no depth order");
  });
}

dc_status dc_render(const dc_fragments* fragments, int width, int height, dc_render_mode mode, const char* path,
                    long* differing, long* masked) {
  return Guard([&] {
    if (fragments == nullptr) return Fail(DC_ERR_ARGUMENT, "null fragments");
    if (width <= 0 || height <= 0 || width > 8192 || height > 8192) return Fail(DC_ERR_ARGUMENT, "bad image size");
    const auto& frags = fragments->file.fragments;
    if (frags.empty()) return Fail(DC_ERR_ARGUMENT, "no polygon fragments to render");
    const View view = View::Fit(frags);
    if (mode == DC_RENDER_ZBUFFER) {
      const Image img = RenderZBuffer(frags, width, height, view);
      if (masked != nullptr) *masked = img.MaskedCount();
      if (path != nullptr) WriteTextFile(path, img.ToPpm());
      return DC_OK;
    }
    if (mode != DC_RENDER_PAINTER && mode != DC_RENDER_DIFF) return Fail(DC_ERR_ARGUMENT, "unknown render mode");
    Image painter;
    try {
      painter = RenderPainter(frags, width, height, view);
    } catch (const RenderError& e) {
      return Fail(DC_ERR_CYCLIC, e.what());
    }
    if (mode == DC_RENDER_PAINTER) {
      if (masked != nullptr) *masked = painter.MaskedCount();
      if (path != nullptr) WriteTextFile(path, painter.ToPpm());
      return DC_OK;
    }
    const Image zbuf = RenderZBuffer(frags, width, height, view);
    const ImageDiff d = DiffImages(painter, zbuf);
    if (differing != nullptr) *differing = d.differing;
    if (masked != nullptr) *masked = d.masked;
    if (path != nullptr) WriteTextFile(path, zbuf.ToPpm());
    return DC_OK;
  });
}

dc_status dc_bench(const char* config_json, const char* csv_path, const char* fit_path, char** summary) {
  return Guard([&] {
    if (config_json == nullptr) return Fail(DC_ERR_ARGUMENT, "null config");
    const Json cfg = Json::parse(config_json);
    BenchConfig config;
    config.families = cfg.at("families").get<std::vector<std::string>>();
    for (const auto& f : config.families)
      if (!KnownFamily(f)) return Fail(DC_ERR_UNKNOWN, "unknown family '" + f + "'");
    config.sizes = cfg.at("sizes").get<std::vector<int>>();
    if (cfg.contains("strategies")) {
      config.strategies.clear();
      for (const auto& s : cfg["strategies"]) config.strategies.push_back(ParseStrategy(s.get<std::string>()));
    }
    if (cfg.contains("seeds")) config.seeds = cfg["seeds"].get<std::vector<std::uint64_t>>();
    config.algorithm = cfg.value("algorithm", "");
    config.rho = cfg.value("rho", 4);
    config.workers = WorkersFromEnv();
    const std::vector<BenchRow> rows = RunBench(config);
    const std::vector<Fit> fits = FitScaling(rows);
    if (csv_path != nullptr) WriteTextFile(csv_path, BenchCsv(rows));
    if (fit_path != nullptr) WriteTextFile(fit_path, FitCsv(fits));
    if (summary != nullptr) *summary = CopyString(FitCsv(fits));
    return DC_OK;
  });
}

}  // extern "C"
