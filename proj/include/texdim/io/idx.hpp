#pragma once

#include <string>
#include <vector>

#include "texdim/image.hpp"

namespace texdim {

// Reader for the big-endian IDX image container (magic 0x00000803:
// unsigned-byte pixels, 3 dimensions count x rows x cols). Values are
// returned unquantized in [0, 255].
std::vector<PixelMatrix> read_idx_images(const std::string& path);

}  // namespace texdim
