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

#include "depthcut/depth_graph.hpp"
#include "depthcut/io.hpp"

using namespace depthcut;

namespace {

bool SamePoint(const Point3& p, const Point3& q) { return p == q; }

bool SameScene(const Scene& a, const Scene& b) {
  if (a.triangles.size() != b.triangles.size() || a.segments.size() != b.segments.size()) return false;
  for (std::size_t i = 0; i < a.triangles.size(); ++i) {
    const auto &s = a.triangles[i], &t = b.triangles[i];
    if (!SamePoint(s.a, t.a) || !SamePoint(s.b, t.b) || !SamePoint(s.c, t.c)) return false;
  }
  for (std::size_t i = 0; i < a.segments.size(); ++i) {
    const auto &s = a.segments[i], &t = b.segments[i];
    if (!SamePoint(s.a, t.a) || !SamePoint(s.b, t.b) || s.open_a != t.open_a || s.open_b != t.open_b) return false;
  }
  return a.family == b.family && a.seed == b.seed && a.has_cycle == b.has_cycle;
}

Json OneTriangle(const char* z) {
  return Json::parse(std::string(R"({"version":1,"objects":[{"id":0,"kind":"triangle","vertices":[["0","0",")") + z +
                     R"("],["1","0","0"],["0","1","0"]]}]})");
}

}  // namespace

TEST_CASE("scene documents round-trip exactly") {
  for (const char* family : {"cyclic-triple", "random", "random-lines", "fig3", "parallel-overlap"}) {
    CAPTURE(family);
    Scene s = Generate(family, 8, 5);
    AnnotateScene(s);
    const Json doc = SceneToJson(s);
    const Scene back = SceneFromJson(Json::parse(DumpJson(doc)));
    CHECK(SameScene(s, back));
    CHECK(DumpJson(SceneToJson(back)) == DumpJson(doc));
  }
}

TEST_CASE("coordinates serialize as decimals or p/q") {
  Scene s;
  s.triangles.push_back({{Rational(1) / 3, Rational(1) / 8, Rational(-5)}, {1, 0, 0}, {0, 1, 0}});
  const Json doc = SceneToJson(s);
  const Json& v = doc["objects"][0]["vertices"][0];
  CHECK(v[0] == "1/3");
  CHECK(v[1] == "0.125");
  CHECK(v[2] == "-5");
  CHECK(SceneFromJson(doc).triangles[0].a.x == Rational(1) / 3);
}

TEST_CASE("malformed scenes are rejected") {
  CHECK_NOTHROW(SceneFromJson(OneTriangle("0")));
  CHECK_THROWS_AS(SceneFromJson(OneTriangle("x")), FormatError);
  Json dup = OneTriangle("0");
  dup["objects"].push_back(dup["objects"][0]);
  CHECK_THROWS_AS(SceneFromJson(dup), FormatError);
  Json bad_version = OneTriangle("0");
  bad_version["version"] = 99;
  CHECK_THROWS_AS(SceneFromJson(bad_version), FormatError);
  Json bad_kind = OneTriangle("0");
  bad_kind["objects"][0]["kind"] = "tetrahedron";
  CHECK_THROWS_AS(SceneFromJson(bad_kind), FormatError);
  CHECK_THROWS_AS(SceneFromJson(Json::parse(R"({"version":1})")), FormatError);
}

TEST_CASE("fragment files round-trip and keep the depth order") {
  const Scene s = GenCyclicTriple();
  const auto result = CutTriangles(s.triangles);
  REQUIRE(result.stats.oracle_ok);
  FragmentFile file{"triangles", result.fragments, result.origin, {}, {}, StatsToJson(result.stats)};
  const FragmentFile back = FragmentsFromJson(Json::parse(DumpJson(FragmentsToJson(file))));
  REQUIRE(back.fragments.size() == file.fragments.size());
  for (std::size_t i = 0; i < back.fragments.size(); ++i) {
    const auto &a = file.fragments[i], &b = back.fragments[i];
    REQUIRE(a.size() == b.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
      CHECK(a.Vertex3(v) == b.Vertex3(v));
      CHECK(a.edges[v] == b.edges[v]);
    }
    CHECK(a.parent_id == b.parent_id);
  }
  CHECK(IsAcyclic(FragmentObjects(back)));
  CHECK(back.stats["oracle_ok"] == true);
}

TEST_CASE("fragment files reject bad polygons") {
  const Json good = Json::parse(R"({"version":1,"kind":"fragments","algorithm":"triangles","fragments":[
    {"id":0,"parent":0,"vertices":[["0","0","0"],["1","0","0"],["0","1","0"]],"edges":["original","original","original"]}],
    "segments":[]})");
  CHECK_NOTHROW(FragmentsFromJson(good));
  Json cw = good;
  std::swap(cw["fragments"][0]["vertices"][1], cw["fragments"][0]["vertices"][2]);
  CHECK_THROWS_AS(FragmentsFromJson(cw), FormatError);
  Json warped = good;
  warped["fragments"][0]["vertices"].push_back(Json::array({"1", "1", "7"}));
  warped["fragments"][0]["edges"].push_back("cut");
  CHECK_THROWS_AS(FragmentsFromJson(warped), FormatError);
  Json edge = good;
  edge["fragments"][0]["edges"][0] = "bent";
  CHECK_THROWS_AS(FragmentsFromJson(edge), FormatError);
}

TEST_CASE("segment pieces survive the fragment format") {
  const Scene s = Generate("random-lines", 12, 3);
  const auto result = CutLines(s.segments);
  REQUIRE(result.stats.oracle_ok);
  FragmentFile file;
  file.algorithm = "lines";
  file.segments = result.fragments.pieces;
  file.segment_parent = result.fragments.parent;
  const FragmentFile back = FragmentsFromJson(FragmentsToJson(file));
  REQUIRE(back.segments.size() == file.segments.size());
  for (std::size_t i = 0; i < back.segments.size(); ++i) {
    CHECK(back.segments[i].a == file.segments[i].a);
    CHECK(back.segments[i].open_b == file.segments[i].open_b);
  }
  CHECK(IsAcyclic(FragmentObjects(back)));
}

TEST_CASE("OBJ export lists every vertex and face") {
  const auto frags = CutTriangles(GenCyclicTriple().triangles).fragments;
  const std::string obj = FragmentsToObj(frags);
  std::size_t verts = 0, faces = 0, expected = 0;
  for (const auto& f : frags) expected += f.size();
  for (std::size_t pos = 0; pos < obj.size();) {
    const std::size_t end = obj.find('\n', pos);
    if (obj.compare(pos, 2, "v ") == 0) ++verts;
    if (obj.compare(pos, 2, "f ") == 0) ++faces;
    pos = end == std::string::npos ? obj.size() : end + 1;
  }
  CHECK(verts == expected);
  CHECK(faces == frags.size());
}

TEST_CASE("missing files raise IoError") {
  CHECK_THROWS_AS(ReadJsonFile("/nonexistent/depthcut.json"), IoError);
}
