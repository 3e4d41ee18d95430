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

#ifndef VSARENA_RENDER_FONT_H_
#define VSARENA_RENDER_FONT_H_

#include <cstdint>

namespace vsarena::render {

inline constexpr int kGlyphWidth = 7;
inline constexpr int kGlyphHeight = 11;

// Printable ASCII 32..126; bit 6 of each row byte is the leftmost pixel.
extern const uint8_t kFontGlyphs[95][kGlyphHeight];

}  // namespace vsarena::render

#endif  // VSARENA_RENDER_FONT_H_
