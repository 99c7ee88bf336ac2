#pragma once

#include <string>

#include "texdim/io/pgm.hpp"

namespace texdim {

// Decodes any libpng-readable file to an 8-bit raster (maxval 255).
// Color images are reduced with the Rec.601 luminance weights.
RawGray read_png(const std::string& path);

// 8-bit grayscale writer (fixture/tool support).
void write_png_gray(const std::string& path, const PixelMatrix& values);

// 8-bit RGB writer; rgb has rows = height, cols = 3 * width (interleaved).
void write_png_rgb(const std::string& path, const PixelMatrix& rgb);

}  // namespace texdim
