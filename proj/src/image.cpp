#include "texdim/image.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace texdim {

GrayImage make_gray_image(PixelMatrix pixels, int levels) {
    if (levels < 2) throw std::domain_error("GrayImage: levels must be >= 2");
    if (pixels.size() == 0) throw std::domain_error("GrayImage: empty raster");
    if ((pixels.array() < 0).any() || (pixels.array() >= levels).any())
        throw std::domain_error("GrayImage: pixel value outside [0, levels)");
    return GrayImage{levels, std::move(pixels)};
}

GrayImage quantize(const PixelMatrix& raw, int source_levels, int kappa) {
    if (source_levels < 1) throw std::domain_error("quantize: source_levels must be >= 1");
    if (kappa < 2) throw std::domain_error("quantize: kappa must be >= 2");
    if (source_levels <= kappa) return make_gray_image(raw, kappa);
    PixelMatrix binned(raw.rows(), raw.cols());
    const std::int64_t k = kappa, src = source_levels;
    for (Eigen::Index r = 0; r < raw.rows(); ++r)
        for (Eigen::Index c = 0; c < raw.cols(); ++c) {
            const std::int64_t v = raw(r, c);
            if (v < 0 || v >= src)
                throw std::domain_error("quantize: value outside [0, source_levels)");
            binned(r, c) = static_cast<int>(v * k / src);
        }
    return make_gray_image(std::move(binned), kappa);
}

int luminance_level(int r, int g, int b) {
    return static_cast<int>(std::lround(0.299 * r + 0.587 * g + 0.114 * b));
}

}  // namespace texdim
