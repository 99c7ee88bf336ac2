#include "texdim/windows.hpp"

#include <stdexcept>

namespace texdim {

std::vector<WindowCoord> window_grid(int height, int width, int window, int stride) {
    if (window < 1) throw std::domain_error("window_grid: window must be >= 1");
    if (stride < 1) throw std::domain_error("window_grid: stride must be >= 1");
    if (window > height || window > width)
        throw std::domain_error("window_grid: window larger than image");
    std::vector<WindowCoord> coords;
    for (int r = 0; r + window <= height; r += stride)
        for (int c = 0; c + window <= width; c += stride)
            coords.push_back({r, c});
    return coords;
}

GrayImage extract_window(const GrayImage& img, WindowCoord at, int window) {
    if (at.row < 0 || at.col < 0 || at.row + window > img.height() ||
        at.col + window > img.width())
        throw std::domain_error("extract_window: window out of bounds");
    GrayImage out;
    out.levels = img.levels;
    out.pixels = img.pixels.block(at.row, at.col, window, window);
    return out;
}

}  // namespace texdim
