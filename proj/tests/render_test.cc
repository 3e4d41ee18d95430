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

#include <png.h>

#include <cstring>

#include "doctest.h"
#include "vsarena/core/environment.h"
#include "vsarena/games/registry.h"
#include "vsarena/render/canvas.h"
#include "vsarena/render/render.h"

namespace vsarena::render {
namespace {

struct Decoded {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> rgb;
};

// Independent decode through libpng's simplified reader.
Decoded Decode(const std::string& bytes) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  REQUIRE(png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()));
  image.format = PNG_FORMAT_RGB;
  Decoded d;
  d.width = static_cast<int>(image.width);
  d.height = static_cast<int>(image.height);
  d.rgb.resize(PNG_IMAGE_SIZE(image));
  REQUIRE(png_image_finish_read(&image, nullptr, d.rgb.data(), 0, nullptr));
  return d;
}

TEST_CASE("png output decodes to the rendered canvas for every env") {
  for (const auto& name : RegisteredGames()) {
    CAPTURE(name);
    Environment env(MakeGame(name));
    env.Reset(4);
    for (int agent = 0; agent < 2; ++agent) {
      const Canvas canvas = RenderImage(env.state(), agent);
      const Decoded d = Decode(RenderPng(env.state(), agent));
      CHECK(d.width == canvas.width());
      CHECK(d.height == canvas.height());
      CHECK(d.rgb == canvas.pixels());
    }
  }
}

TEST_CASE("canvas clips drawing to its bounds") {
  Canvas c(10, 6, palette::kWhite);
  c.FillRect(-5, -5, 8, 8, palette::kRed);
  CHECK(c.At(0, 0) == palette::kRed);
  CHECK(c.At(2, 2) == palette::kRed);
  CHECK(c.At(3, 3) == palette::kWhite);
  c.Set(100, 100, palette::kBlue);  // ignored
  c.Line(0, 5, 9, 5, palette::kBlue);
  CHECK(c.At(9, 5) == palette::kBlue);
  CHECK(Canvas::TextWidth("abc") > Canvas::TextWidth("a"));
  const Decoded d = Decode(EncodePng(c));
  CHECK(d.width == 10);
  CHECK(d.rgb == c.pixels());
}

TEST_CASE("views hide private information") {
  Environment kuhn(MakeGame("kuhn_poker"));
  kuhn.Reset(0);
  CHECK(RenderPng(kuhn.state(), 0) != RenderPng(kuhn.state(), 1));
  CHECK(kuhn.ObserveText(0).find("Your card") != std::string::npos);

  Environment hanabi(MakeGame("hanabi"));
  hanabi.Reset(0);
  const std::string text = hanabi.ObserveText(0);
  const auto own = text.substr(text.find("Your hand:"));
  const auto own_line = own.substr(0, own.find('\n'));
  CHECK(own_line.find("??") != std::string::npos);
  CHECK(text.find("Partner hand:") != std::string::npos);
}

TEST_CASE("text observations carry the game state") {
  Environment pong(MakeGame("pong"));
  pong.Reset(1);
  CHECK(pong.ObserveText(1).find("right paddle") != std::string::npos);
  Environment coin(MakeGame("coin_dilemma"));
  coin.Reset(1);
  const auto text = coin.ObserveText(0);
  CHECK(text.find("red") != std::string::npos);
  CHECK(text.find("Step 0 of 50") != std::string::npos);
}

}  // namespace
}  // namespace vsarena::render
