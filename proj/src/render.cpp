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

#include "depthcut/render.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "depthcut/depth_graph.hpp"

namespace depthcut {

namespace {

enum class Where { kOutside, kBoundary, kInside };

Where Locate(const std::vector<Point2>& ccw, const Point2& p) {
  bool on_edge = false;
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const int o = Orient2d(ccw[i], ccw[(i + 1) % ccw.size()], p);
    if (o < 0) return Where::kOutside;
    on_edge |= o == 0;
  }
  return on_edge ? Where::kBoundary : Where::kInside;
}

// Pixels whose centre is strictly inside each fragment, plus the mask.
struct Coverage {
  std::vector<std::vector<int>> inside;
  std::vector<bool> masked;
  std::vector<Point2> centers;
};

Coverage Rasterize(const std::vector<ConvexFragment>& fragments, int width, int height, const View& view) {
  if (width <= 0 || height <= 0) throw RenderError("image size must be positive");
  if (!(view.x0 < view.x1) || !(view.y0 < view.y1)) throw RenderError("empty view");
  Coverage cov;
  cov.inside.resize(fragments.size());
  cov.masked.assign(static_cast<std::size_t>(width) * height, false);
  cov.centers.reserve(cov.masked.size());
  for (int row = 0; row < height; ++row)
    for (int col = 0; col < width; ++col) cov.centers.push_back(view.PixelCenter(col, row, width, height));

  const double vx0 = ToDouble(view.x0), vy0 = ToDouble(view.y0);
  const double sx = width / ToDouble(view.x1 - view.x0), sy = height / ToDouble(view.y1 - view.y0);
  for (std::size_t f = 0; f < fragments.size(); ++f) {
    const auto& poly = fragments[f].boundary;
    double x0 = HUGE_VAL, x1 = -HUGE_VAL, y0 = HUGE_VAL, y1 = -HUGE_VAL;
    for (const auto& p : poly) {
      x0 = std::min(x0, ToDouble(p.x));
      x1 = std::max(x1, ToDouble(p.x));
      y0 = std::min(y0, ToDouble(p.y));
      y1 = std::max(y1, ToDouble(p.y));
    }
    // One pixel of slack on every side; the exact test decides.
    const int c0 = std::max(0, static_cast<int>(std::floor((x0 - vx0) * sx)) - 1);
    const int c1 = std::min(width - 1, static_cast<int>(std::ceil((x1 - vx0) * sx)) + 1);
    const int r0 = std::max(0, height - 1 - static_cast<int>(std::ceil((y1 - vy0) * sy)) - 1);
    const int r1 = std::min(height - 1, height - 1 - static_cast<int>(std::floor((y0 - vy0) * sy)) + 1);
    for (int row = r0; row <= r1; ++row)
      for (int col = c0; col <= c1; ++col) {
        const int px = row * width + col;
        switch (Locate(poly, cov.centers[px])) {
          case Where::kInside:
            cov.inside[f].push_back(px);
            break;
          case Where::kBoundary:
            cov.masked[px] = true;
            break;
          case Where::kOutside:
            break;
        }
      }
  }
  return cov;
}

Image Blank(int width, int height, const Coverage& cov) {
  Image img;
  img.width = width;
  img.height = height;
  img.pixels.assign(static_cast<std::size_t>(width) * height, Rgb{0, 0, 0});
  img.masked = cov.masked;
  return img;
}

}  // namespace

View View::Fit(const std::vector<ConvexFragment>& fragments) {
  View v{0, 0, 1, 1};
  bool first = true;
  for (const auto& f : fragments)
    for (const auto& p : f.boundary) {
      if (first) {
        v = {p.x, p.y, p.x, p.y};
        first = false;
        continue;
      }
      if (p.x < v.x0) v.x0 = p.x;
      if (p.x > v.x1) v.x1 = p.x;
      if (p.y < v.y0) v.y0 = p.y;
      if (p.y > v.y1) v.y1 = p.y;
    }
  Rational mx = (v.x1 - v.x0) / 16, my = (v.y1 - v.y0) / 16;
  if (mx == 0) mx = 1;
  if (my == 0) my = 1;
  return {v.x0 - mx, v.y0 - my, v.x1 + mx, v.y1 + my};
}

Point2 View::PixelCenter(int col, int row, int width, int height) const {
  const Rational fx = Rational(2 * col + 1) / (2 * width);
  const Rational fy = Rational(2 * row + 1) / (2 * height);
  return {Rational(x0 + fx * (x1 - x0)), Rational(y1 - fy * (y1 - y0))};
}

Rgb ObjectColor(int parent_id) {
  const double golden = 0.6180339887498949;
  double hue = std::fmod(0.137 + golden * static_cast<double>(parent_id < 0 ? -parent_id : parent_id), 1.0) * 6.0;
  const double s = 0.65, v = 0.95;
  const int sector = static_cast<int>(hue) % 6;
  const double frac = hue - std::floor(hue);
  const double p = v * (1 - s), q = v * (1 - s * frac), t = v * (1 - s * (1 - frac));
  double r = v, g = t, b = p;
  switch (sector) {
    case 1: r = q, g = v, b = p; break;
    case 2: r = p, g = v, b = t; break;
    case 3: r = p, g = q, b = v; break;
    case 4: r = t, g = p, b = v; break;
    case 5: r = v, g = p, b = q; break;
    default: break;
  }
  auto byte = [](double c) { return static_cast<std::uint8_t>(std::lround(c * 255.0)); };
  return {byte(r), byte(g), byte(b)};
}

long Image::MaskedCount() const { return static_cast<long>(std::count(masked.begin(), masked.end(), true)); }

std::string Image::ToPpm() const {
  std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.reserve(out.size() + pixels.size() * 3);
  for (const auto& p : pixels) out.append(reinterpret_cast<const char*>(p.data()), 3);
  return out;
}

Image RenderPainter(const std::vector<ConvexFragment>& fragments, const std::vector<int>& order, int width, int height,
                    const View& view) {
  if (order.size() != fragments.size()) throw RenderError("painter order must list every fragment once");
  const Coverage cov = Rasterize(fragments, width, height, view);
  Image img = Blank(width, height, cov);
  for (int f : order) {
    const Rgb color = ObjectColor(fragments.at(f).parent_id);
    for (int px : cov.inside[f]) img.pixels[px] = color;
  }
  return img;
}

Image RenderPainter(const std::vector<ConvexFragment>& fragments, int width, int height, const View& view) {
  std::vector<DepthObject> objs;
  for (std::size_t i = 0; i < fragments.size(); ++i) objs.push_back(DepthObject::FromFragment(fragments[i], static_cast<int>(i)));
  const DepthOrderResult res = FindDepthOrder(BuildDepthGraph(objs));
  if (!res.acyclic) throw RenderError("painter mode needs an acyclic fragment set");
  return RenderPainter(fragments, res.order, width, height, view);
}

Image RenderZBuffer(const std::vector<ConvexFragment>& fragments, int width, int height, const View& view) {
  const Coverage cov = Rasterize(fragments, width, height, view);
  Image img = Blank(width, height, cov);
  std::vector<std::optional<Rational>> depth(img.pixels.size());
  for (std::size_t f = 0; f < fragments.size(); ++f) {
    const Rgb color = ObjectColor(fragments[f].parent_id);
    for (int px : cov.inside[f]) {
      Rational z = fragments[f].plane.ZAt(cov.centers[px]);
      if (depth[px] && !(*depth[px] < z)) continue;
      depth[px] = std::move(z);
      img.pixels[px] = color;
    }
  }
  return img;
}

ImageDiff DiffImages(const Image& a, const Image& b) {
  if (a.width != b.width || a.height != b.height) throw RenderError("image sizes differ");
  ImageDiff d;
  d.pixels = static_cast<long>(a.pixels.size());
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    if (a.masked[i] || b.masked[i]) {
      ++d.masked;
      continue;
    }
    if (a.pixels[i] != b.pixels[i]) ++d.differing;
  }
  return d;
}

}  // namespace depthcut
