// Copyright 2026 The VS-Arena Authors.
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

#ifndef VSARENA_RENDER_CANVAS_H_
#define VSARENA_RENDER_CANVAS_H_

#include <cstdint>
#include <string>
#include <vector>

namespace vsarena::render {

struct Color {
  uint8_t r = 0;
  uint8_t g = 0;
  uint8_t b = 0;
  bool operator==(const Color&) const = default;
};

namespace palette {
inline constexpr Color kBlack{0, 0, 0};
inline constexpr Color kWhite{255, 255, 255};
inline constexpr Color kGray{128, 128, 128};
inline constexpr Color kLightGray{220, 220, 220};
inline constexpr Color kDarkGray{64, 64, 64};
inline constexpr Color kRed{220, 50, 47};
inline constexpr Color kBlue{38, 110, 210};
inline constexpr Color kGreen{60, 160, 70};
inline constexpr Color kYellow{230, 190, 40};
inline constexpr Color kOrange{240, 140, 30};
inline constexpr Color kPurple{130, 70, 170};
inline constexpr Color kBrown{140, 90, 50};
inline constexpr Color kCream{250, 245, 230};
inline constexpr Color kWood{205, 170, 120};
}  // namespace palette

// 8-bit RGB raster with integer-only drawing primitives, so identical
// calls give identical pixels everywhere.
class Canvas {
 public:
  Canvas(int width, int height, Color background = palette::kWhite);

  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<uint8_t>& pixels() const { return pixels_; }
  Color At(int x, int y) const;

  void Set(int x, int y, Color c);
  void FillRect(int x, int y, int w, int h, Color c);
  void StrokeRect(int x, int y, int w, int h, Color c, int thickness = 1);
  void Line(int x0, int y0, int x1, int y1, Color c);
  void FillCircle(int cx, int cy, int r, Color c);
  // Circle with a wedge opening towards (dx, dy): the player icon.
  void PacMan(int cx, int cy, int r, int dx, int dy, Color c);
  void Ghost(int cx, int cy, int r, Color c);
  // Text with the embedded font; `scale` multiplies every pixel.
  void Text(int x, int y, const std::string& text, Color c, int scale = 1);
  static int TextWidth(const std::string& text, int scale = 1);
  static int LineHeight(int scale = 1);

 private:
  int width_;
  int height_;
  std::vector<uint8_t> pixels_;
};

// Deterministic PNG encoding (fixed compression settings, no metadata).
std::string EncodePng(const Canvas& canvas);

}  // namespace vsarena::render

#endif  // VSARENA_RENDER_CANVAS_H_
