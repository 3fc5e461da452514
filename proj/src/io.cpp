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

#include "depthcut/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace depthcut {

namespace {

Json PointJson(const Point3& p) { return Json::array({FormatRational(p.x), FormatRational(p.y), FormatRational(p.z)}); }

Rational Number(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw FormatError("coordinates must be strings or integers");
}

Point3 ParsePoint(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw FormatError("a vertex needs three coordinates");
  try {
    return {Number(j[0]), Number(j[1]), Number(j[2])};
  } catch (const ParseError& e) {
    throw FormatError(e.what());
  }
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

void CheckVersion(const Json& doc) {
  const Json& v = Field(doc, "version");
  if (!v.is_number_integer() || v.get<int>() != kFileVersion)
    throw FormatError("unsupported version " + v.dump());
}

}  // namespace

Json SceneToJson(const Scene& scene) {
  Json objects = Json::array();
  int id = 0;
  for (const auto& t : scene.triangles)
    objects.push_back({{"id", id++}, {"kind", "triangle"}, {"vertices", {PointJson(t.a), PointJson(t.b), PointJson(t.c)}}});
  for (const auto& s : scene.segments) {
    Json o{{"id", id++}, {"kind", "segment"}, {"vertices", {PointJson(s.a), PointJson(s.b)}}};
    if (s.open_a || s.open_b) o["open"] = {s.open_a, s.open_b};
    objects.push_back(std::move(o));
  }
  Json params = Json::object();
  for (const auto& [k, v] : scene.params) params[k] = v;
  Json meta{{"family", scene.family}, {"params", params}, {"seed", scene.seed}};
  if (scene.has_cycle) meta["has_cycle"] = *scene.has_cycle;
  if (scene.expected_min_cuts) {
    meta["expected_min_cuts"] = *scene.expected_min_cuts;
    meta["expected_min_cuts_source"] = scene.expected_min_cuts_source;
  }
  return {{"version", kFileVersion}, {"objects", objects}, {"metadata", meta}};
}

Scene SceneFromJson(const Json& doc) {
  CheckVersion(doc);
  Scene scene;
  std::set<long> ids;
  for (const auto& o : Field(doc, "objects")) {
    const long id = Field(o, "id").get<long>();
    if (!ids.insert(id).second) throw FormatError("duplicate id " + std::to_string(id));
    const std::string kind = Field(o, "kind").get<std::string>();
    const Json& v = Field(o, "vertices");
    if (kind == "triangle") {
      if (v.size() != 3) throw FormatError("triangle " + std::to_string(id) + " needs 3 vertices");
      Triangle3 t{ParsePoint(v[0]), ParsePoint(v[1]), ParsePoint(v[2])};
      t.id = static_cast<int>(scene.triangles.size());
      scene.triangles.push_back(t);
    } else if (kind == "segment") {
      if (v.size() != 2) throw FormatError("segment " + std::to_string(id) + " needs 2 vertices");
      Segment3 s{ParsePoint(v[0]), ParsePoint(v[1])};
      if (o.contains("open")) {
        s.open_a = o["open"].at(0).get<bool>();
        s.open_b = o["open"].at(1).get<bool>();
      }
      scene.segments.push_back(s);
    } else {
      throw FormatError("unknown object kind '" + kind + "'");
    }
  }
  if (doc.contains("metadata")) {
    const Json& m = doc["metadata"];
    scene.family = m.value("family", "");
    scene.seed = m.value("seed", std::uint64_t{0});
    if (m.contains("params"))
      for (const auto& [k, v] : m["params"].items()) scene.params.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
    if (m.contains("has_cycle")) scene.has_cycle = m["has_cycle"].get<bool>();
    if (m.contains("expected_min_cuts")) {
      scene.expected_min_cuts = m["expected_min_cuts"].get<int>();
      scene.expected_min_cuts_source = m.value("expected_min_cuts_source", "");
    }
  }
  return scene;
}

Json FragmentsToJson(const FragmentFile& file) {
  Json frags = Json::array();
  for (std::size_t i = 0; i < file.fragments.size(); ++i) {
    const auto& f = file.fragments[i];
    Json verts = Json::array(), edges = Json::array();
    for (std::size_t v = 0; v < f.size(); ++v) {
      verts.push_back(PointJson(f.Vertex3(v)));
      edges.push_back(f.edges[v] == EdgeKind::kCut ? "cut" : "original");
    }
    Json o{{"id", i}, {"parent", f.parent_id}, {"vertices", verts}, {"edges", edges}};
    if (i < file.origin.size()) {
      o["piece"] = file.origin[i].piece;
      o["prism"] = file.origin[i].prism;
    }
    frags.push_back(std::move(o));
  }
  Json segs = Json::array();
  for (std::size_t i = 0; i < file.segments.size(); ++i) {
    const auto& s = file.segments[i];
    segs.push_back({{"id", i},
                    {"parent", i < file.segment_parent.size() ? file.segment_parent[i] : -1},
                    {"vertices", {PointJson(s.a), PointJson(s.b)}},
                    {"open", {s.open_a, s.open_b}}});
  }
  return {{"version", kFileVersion}, {"kind", "fragments"}, {"algorithm", file.algorithm},
          {"fragments", frags},      {"segments", segs},     {"stats", file.stats.is_null() ? Json::object() : file.stats}};
}

FragmentFile FragmentsFromJson(const Json& doc) {
  CheckVersion(doc);
  if (Field(doc, "kind") != "fragments") throw FormatError("not a fragment file");
  FragmentFile file;
  file.algorithm = doc.value("algorithm", "");
  for (const auto& o : Field(doc, "fragments")) {
    const Json& v = Field(o, "vertices");
    const Json& e = Field(o, "edges");
    if (v.size() < 3 || v.size() != e.size()) throw FormatError("bad fragment " + o.value("id", Json()).dump());
    std::vector<Point3> pts;
    for (const auto& p : v) pts.push_back(ParsePoint(p));
    ConvexFragment f;
    std::size_t third = 2;
    while (third < pts.size() && Orient2d(Project(pts[0]), Project(pts[1]), Project(pts[third])) == 0) ++third;
    if (third == pts.size()) throw FormatError("fragment has empty projection");
    f.plane = HeightPlane::Through(pts[0], pts[1], pts[third]);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (f.plane.ZAt(Project(pts[i])) != pts[i].z) throw FormatError("fragment vertices are not coplanar");
      f.boundary.push_back(Project(pts[i]));
      const std::string kind = e[i].get<std::string>();
      if (kind != "cut" && kind != "original") throw FormatError("unknown edge kind '" + kind + "'");
      f.edges.push_back(kind == "cut" ? EdgeKind::kCut : EdgeKind::kOriginal);
    }
    if (TwiceSignedArea(f.boundary) <= 0) throw FormatError("fragment boundary must be counter-clockwise");
    f.parent_id = Field(o, "parent").get<int>();
    file.origin.push_back({f.parent_id, o.value("piece", -1), o.value("prism", -1)});
    file.fragments.push_back(std::move(f));
  }
  if (doc.contains("segments"))
    for (const auto& o : doc["segments"]) {
      const Json& v = Field(o, "vertices");
      if (v.size() != 2) throw FormatError("a segment needs 2 vertices");
      Segment3 s{ParsePoint(v[0]), ParsePoint(v[1])};
      if (o.contains("open")) {
        s.open_a = o["open"].at(0).get<bool>();
        s.open_b = o["open"].at(1).get<bool>();
      }
      file.segments.push_back(s);
      file.segment_parent.push_back(o.value("parent", -1));
    }
  if (doc.contains("stats")) file.stats = doc["stats"];
  return file;
}

std::vector<DepthObject> FragmentObjects(const FragmentFile& file) {
  std::vector<DepthObject> objs;
  int id = 0;
  for (const auto& f : file.fragments) objs.push_back(DepthObject::FromFragment(f, id++));
  for (const auto& s : file.segments) objs.push_back(DepthObject::FromSegment(s, id++));
  return objs;
}

Json StatsToJson(const PipelineStats& s) {
  return {{"algorithm", s.algorithm},
          {"n", s.n},
          {"edges", s.edges},
          {"K", s.K},
          {"r", s.r},
          {"rho", s.rho},
          {"k", s.k},
          {"level_cells", s.level_cells},
          {"max_children", s.max_children},
          {"resamples", s.resamples},
          {"T1", s.t1},
          {"T1_star", s.t1_star},
          {"prisms", s.prisms},
          {"max_prism_edges", s.max_prism_edges},
          {"prism_budget", s.prism_budget},
          {"degenerate_prisms", s.degenerate_prisms},
          {"X", s.cuts_x},
          {"planes", s.planes},
          {"T2", s.t2},
          {"oracle_ok", s.oracle_ok},
          {"hierarchy_ok", s.hierarchy_check.empty()},
          {"ms", {{"hierarchy", s.ms_hierarchy}, {"phase1", s.ms_phase1}, {"phase2", s.ms_phase2}, {"oracle", s.ms_oracle}}}};
}

Json StatsToJson(const LinesStats& s) {
  return {{"algorithm", "lines"},
          {"n", s.n},
          {"r", s.r},
          {"k", s.k},
          {"boundary_cuts", s.boundary_cuts},
          {"column_cuts", s.column_cuts},
          {"wall_segments", s.wall_segments},
          {"fragments", s.fragments},
          {"oracle_ok", s.oracle_ok},
          {"hierarchy_ok", s.hierarchy_check.empty()}};
}

Json CutSetToJson(const CutSet& cuts) {
  Json out = Json::array();
  for (const auto& [index, list] : cuts.cuts)
    for (const auto& c : list)
      out.push_back({{"segment", index}, {"t", FormatRational(c.t)}, {"point", PointJson(c.point)}, {"provenance", ToString(c.provenance)}});
  return out;
}

Json HierarchyToJson(const CuttingHierarchy& h) {
  Json levels = Json::array();
  for (const auto& level : h.levels) {
    Json cells = Json::array();
    for (const auto& c : level.cells) {
      Json verts = Json::array();
      for (const auto& v : c.trap.Vertices()) verts.push_back({FormatRational(v.x), FormatRational(v.y)});
      cells.push_back({{"vertices", verts}, {"crossing", c.crossing}, {"parent", c.parent}});
    }
    levels.push_back({{"index", level.index}, {"bound", level.bound}, {"cells", cells}});
  }
  return {{"rho", h.rho}, {"r", h.r}, {"total_weight", h.total_weight}, {"levels", levels}};
}

std::string FragmentsToObj(const std::vector<ConvexFragment>& fragments) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& f : fragments)
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Point3 p = f.Vertex3(i);
      out << "v " << ToDouble(p.x) << ' ' << ToDouble(p.y) << ' ' << ToDouble(p.z) << '\n';
    }
  std::size_t base = 1;
  for (const auto& f : fragments) {
    out << 'f';
    for (std::size_t i = 0; i < f.size(); ++i) out << ' ' << base + i;
    out << '\n';
    base += f.size();
  }
  return out.str();
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

std::string DumpJson(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace depthcut
