#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace texdim {

using PixelMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Quantized single-channel raster. `levels` is the gray-level count kappa of
// the co-occurrence domain; every pixel lies in [0, levels).
struct GrayImage {
    int levels = 0;
    PixelMatrix pixels;  // (height x width)

    int width() const { return static_cast<int>(pixels.cols()); }
    int height() const { return static_cast<int>(pixels.rows()); }
};

// Validates invariants (levels >= 2, pixels within range); throws
// std::domain_error otherwise.
GrayImage make_gray_image(PixelMatrix pixels, int levels);

// Uniform binning of values in [0, source_levels) onto [0, kappa).
// Identity when source_levels <= kappa.
GrayImage quantize(const PixelMatrix& raw, int source_levels, int kappa);

// Rec.601 luminance, rounded to the nearest integer level.
int luminance_level(int r, int g, int b);

}  // namespace texdim
