#!/usr/bin/env python3
# Copyright 2026 The VS-Arena Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Rasterizes a monospace TrueType font into the embedded glyph table.

The renderer never touches font files at run time; this script produces
src/render/font_data.cc once so images are identical on every platform.
"""

import argparse

from PIL import Image, ImageDraw, ImageFont

WIDTH = 7
HEIGHT = 11


def main():
  parser = argparse.ArgumentParser()
  parser.add_argument("--font",
                      default="/usr/share/fonts/truetype/dejavu/DejaVuSansMono.ttf")
  parser.add_argument("--size", type=int, default=11)
  parser.add_argument("--out", default="src/render/font_data.cc")
  args = parser.parse_args()

  font = ImageFont.truetype(args.font, args.size)
  ascent, _ = font.getmetrics()
  rows = []
  for code in range(32, 127):
    img = Image.new("L", (WIDTH, HEIGHT), 0)
    draw = ImageDraw.Draw(img)
    draw.text((0, -2 - (ascent - 11)), chr(code), fill=255, font=font)
    glyph = []
    for y in range(HEIGHT):
      bits = 0
      for x in range(WIDTH):
        if img.getpixel((x, y)) >= 110:
          bits |= 1 << (WIDTH - 1 - x)
      glyph.append(bits)
    rows.append((code, glyph))

  with open(args.out, "w") as f:
    f.write("// Generated by tools/gen_font.py from DejaVu Sans Mono "
            "(Bitstream Vera license).\n")
    f.write("#include \"vsarena/render/font.h\"\n\n")
    f.write("namespace vsarena::render {\n\n")
    f.write("const uint8_t kFontGlyphs[95][kGlyphHeight] = {\n")
    for code, glyph in rows:
      label = chr(code) if chr(code) not in "\\" else "backslash"
      f.write("    {" + ", ".join("0x%02x" % b for b in glyph) +
              "},  // '%s'\n" % label)
    f.write("};\n\n}  // namespace vsarena::render\n")


if __name__ == "__main__":
  main()
