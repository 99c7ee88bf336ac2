#pragma once

#include <string>

#include "texdim/image.hpp"

namespace texdim {

// Raster before quantization: values in [0, maxval].
struct RawGray {
    PixelMatrix values;
    int maxval = 255;
};

// P5 (binary) and P2 (ASCII) readers, maxval up to 65535, '#' comments.
RawGray read_pgm(const std::string& path);

// P5 writer (1 byte per pixel for maxval <= 255, else 2 bytes big-endian).
void write_pgm(const std::string& path, const PixelMatrix& values, int maxval);

}  // namespace texdim
