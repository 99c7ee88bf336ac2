#include "texdim/glcm.hpp"

#include <cstdlib>
#include <stdexcept>

namespace texdim {

std::vector<GlcmOffset> standard_offsets(bool symmetric) {
    return {{0, 1, symmetric}, {1, 0, symmetric}, {1, 1, symmetric}, {1, -1, symmetric}};
}

GlcmMatrix compute_glcm(const GrayImage& img, const GlcmOffset& offset) {
    if (img.levels < 2) throw std::domain_error("compute_glcm: kappa must be >= 2");
    if (offset.dr == 0 && offset.dc == 0)
        throw std::domain_error("compute_glcm: offset must be nonzero");
    const int h = img.height();
    const int w = img.width();
    if (std::abs(offset.dr) >= h || std::abs(offset.dc) >= w)
        throw std::domain_error("compute_glcm: offset too large for image");

    GlcmMatrix glcm;
    glcm.levels = img.levels;
    glcm.counts = CountMatrix::Zero(img.levels, img.levels);

    const int r_lo = std::max(0, -offset.dr);
    const int r_hi = std::min(h, h - offset.dr);
    const int c_lo = std::max(0, -offset.dc);
    const int c_hi = std::min(w, w - offset.dc);
    for (int r = r_lo; r < r_hi; ++r) {
        for (int c = c_lo; c < c_hi; ++c) {
            const int a = img.pixels(r, c);
            const int b = img.pixels(r + offset.dr, c + offset.dc);
            ++glcm.counts(a, b);
            if (offset.symmetric) ++glcm.counts(b, a);
        }
    }
    glcm.total = glcm.counts.sum();
    return glcm;
}

Eigen::MatrixXd normalize(const GlcmMatrix& glcm) {
    if (glcm.total <= 0) throw std::domain_error("normalize: GLCM total is zero");
    return glcm.counts.cast<double>() / static_cast<double>(glcm.total);
}

}  // namespace texdim
