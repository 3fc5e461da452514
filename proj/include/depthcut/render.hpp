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

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "depthcut/geometry.hpp"

namespace depthcut {

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The projected window mapped onto the image. Row 0 is the top (largest y);
/// the viewer looks down the z axis, so larger z is nearer.
struct View {
  Rational x0, y0, x1, y1;

  /// Bounding box of the projections with a margin of 1/16 of the extent.
  static View Fit(const std::vector<ConvexFragment>& fragments);
  /// Exact centre of pixel (col, row) for a width x height image.
  Point2 PixelCenter(int col, int row, int width, int height) const;
};

using Rgb = std::array<std::uint8_t, 3>;

/// Flat colour per parent object, hue spaced by the golden ratio.
Rgb ObjectColor(int parent_id);

struct Image {
  int width = 0, height = 0;
  std::vector<Rgb> pixels;
  std::vector<bool> masked;  // centre lies exactly on a projected fragment boundary

  long MaskedCount() const;
  /// Binary PPM (P6).
  std::string ToPpm() const;
};

/// Back-to-front painting in `order` (lowest object first).
Image RenderPainter(const std::vector<ConvexFragment>& fragments, const std::vector<int>& order, int width, int height,
                    const View& view);
/// Computes the order with the oracle; throws RenderError on cyclic input.
Image RenderPainter(const std::vector<ConvexFragment>& fragments, int width, int height, const View& view);

/// Per-pixel exact depth test; keeps the highest fragment at each centre.
Image RenderZBuffer(const std::vector<ConvexFragment>& fragments, int width, int height, const View& view);

struct ImageDiff {
  long differing = 0;  // unmasked pixels with different colours
  long masked = 0;     // pixels masked in either image
  long pixels = 0;
  double MaskedFraction() const { return pixels == 0 ? 0.0 : static_cast<double>(masked) / static_cast<double>(pixels); }
};

/// Throws RenderError when the sizes differ.
ImageDiff DiffImages(const Image& a, const Image& b);

}  // namespace depthcut
