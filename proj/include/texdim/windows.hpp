#pragma once

#include <vector>

#include "texdim/image.hpp"

namespace texdim {

struct WindowCoord {
    int row = 0;
    int col = 0;
};

// Top-left corners of every window x window block on the stride grid,
// row-major order.
std::vector<WindowCoord> window_grid(int height, int width, int window, int stride);

GrayImage extract_window(const GrayImage& img, WindowCoord at, int window);

}  // namespace texdim
