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

#include "vsarena/render/canvas.h"

#include <png.h>

#include <algorithm>
#include <cstdlib>

#include "vsarena/core/error.h"
#include "vsarena/render/font.h"

namespace vsarena::render {

Canvas::Canvas(int width, int height, Color background)
    : width_(width), height_(height), pixels_(static_cast<size_t>(width) * height * 3) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "canvas dimensions must be positive");
  }
  FillRect(0, 0, width, height, background);
}

Color Canvas::At(int x, int y) const {
  const size_t i = (static_cast<size_t>(y) * width_ + x) * 3;
  return {pixels_[i], pixels_[i + 1], pixels_[i + 2]};
}

void Canvas::Set(int x, int y, Color c) {
  if (x < 0 || y < 0 || x >= width_ || y >= height_) return;
  const size_t i = (static_cast<size_t>(y) * width_ + x) * 3;
  pixels_[i] = c.r;
  pixels_[i + 1] = c.g;
  pixels_[i + 2] = c.b;
}

void Canvas::FillRect(int x, int y, int w, int h, Color c) {
  const int x0 = std::max(0, x), y0 = std::max(0, y);
  const int x1 = std::min(width_, x + w), y1 = std::min(height_, y + h);
  for (int yy = y0; yy < y1; ++yy) {
    for (int xx = x0; xx < x1; ++xx) Set(xx, yy, c);
  }
}

void Canvas::StrokeRect(int x, int y, int w, int h, Color c, int t) {
  FillRect(x, y, w, t, c);
  FillRect(x, y + h - t, w, t, c);
  FillRect(x, y, t, h, c);
  FillRect(x + w - t, y, t, h, c);
}

void Canvas::Line(int x0, int y0, int x1, int y1, Color c) {
  // Bresenham.
  const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
  const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  while (true) {
    Set(x0, y0, c);
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

void Canvas::FillCircle(int cx, int cy, int r, Color c) {
  for (int y = -r; y <= r; ++y) {
    for (int x = -r; x <= r; ++x) {
      if (x * x + y * y <= r * r) Set(cx + x, cy + y, c);
    }
  }
}

void Canvas::PacMan(int cx, int cy, int r, int dx, int dy, Color c) {
  for (int y = -r; y <= r; ++y) {
    for (int x = -r; x <= r; ++x) {
      if (x * x + y * y > r * r) continue;
      // Mouth: points within 30 degrees of the facing direction. Compare
      // the squared cosine against 3/4 using integers only.
      const int along = x * dx + y * dy;
      if (along > 0 && 4 * along * along >= 3 * (x * x + y * y)) continue;
      Set(cx + x, cy + y, c);
    }
  }
}

void Canvas::Ghost(int cx, int cy, int r, Color c) {
  for (int y = -r; y <= 0; ++y) {
    for (int x = -r; x <= r; ++x) {
      if (x * x + y * y <= r * r) Set(cx + x, cy + y, c);
    }
  }
  FillRect(cx - r, cy, 2 * r + 1, r, c);
  // Scalloped hem.
  const int teeth = 3;
  const int tooth = (2 * r + 1) / teeth;
  for (int i = 0; i < teeth; ++i) {
    const int x0 = cx - r + i * tooth;
    for (int k = 0; k < tooth / 2; ++k) {
      FillRect(x0 + tooth / 2 - k, cy + r - (tooth / 2 - k), 1, tooth / 2 - k,
               palette::kWhite);
    }
  }
  const int eye = std::max(1, r / 4);
  FillCircle(cx - r / 3, cy - r / 4, eye, palette::kWhite);
  FillCircle(cx + r / 3, cy - r / 4, eye, palette::kWhite);
  FillCircle(cx - r / 3, cy - r / 4, std::max(1, eye / 2), palette::kBlack);
  FillCircle(cx + r / 3, cy - r / 4, std::max(1, eye / 2), palette::kBlack);
}

int Canvas::TextWidth(const std::string& text, int scale) {
  return static_cast<int>(text.size()) * kGlyphWidth * scale;
}

int Canvas::LineHeight(int scale) { return (kGlyphHeight + 2) * scale; }

void Canvas::Text(int x, int y, const std::string& text, Color c, int scale) {
  int pen = x;
  for (char ch : text) {
    const int code = static_cast<unsigned char>(ch);
    if (code >= 32 && code < 127) {
      const uint8_t* glyph = kFontGlyphs[code - 32];
      for (int row = 0; row < kGlyphHeight; ++row) {
        for (int col = 0; col < kGlyphWidth; ++col) {
          if (glyph[row] & (1 << (kGlyphWidth - 1 - col))) {
            FillRect(pen + col * scale, y + row * scale, scale, scale, c);
          }
        }
      }
    }
    pen += kGlyphWidth * scale;
  }
}

namespace {

void AppendBytes(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<std::string*>(png_get_io_ptr(png));
  out->append(reinterpret_cast<const char*>(data), length);
}

void NoFlush(png_structp) {}

}  // namespace

std::string EncodePng(const Canvas& canvas) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw Error(ErrorCode::kInternal, "png: cannot create writer");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw Error(ErrorCode::kInternal, "png: cannot create info");
  }
  std::string out;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorCode::kInternal, "png: encoding failed");
  }
  png_set_write_fn(png, &out, AppendBytes, NoFlush);
  png_set_IHDR(png, info, canvas.width(), canvas.height(), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_set_compression_level(png, 6);
  png_set_filter(png, PNG_FILTER_TYPE_BASE, PNG_FILTER_SUB);
  png_write_info(png, info);
  const auto& px = canvas.pixels();
  const size_t stride = static_cast<size_t>(canvas.width()) * 3;
  for (int y = 0; y < canvas.height(); ++y) {
    png_write_row(png, const_cast<png_bytep>(px.data() + y * stride));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

}  // namespace vsarena::render
