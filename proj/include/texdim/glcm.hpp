#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "texdim/image.hpp"

namespace texdim {

// Spatial displacement (dr, dc) != (0, 0). With `symmetric` each pixel pair
// is accumulated in both (a,b) and (b,a).
struct GlcmOffset {
    int dr = 0;
    int dc = 1;
    bool symmetric = true;
};

// The four standard unit offsets at distance 1: (0,1), (1,0), (1,1), (1,-1).
std::vector<GlcmOffset> standard_offsets(bool symmetric = true);

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct GlcmMatrix {
    int levels = 0;
    CountMatrix counts;       // (levels x levels)
    std::int64_t total = 0;   // sum of counts
};

// counts[a][b] = #positions p with in-bounds p and p+(dr,dc) valued (a,b);
// total = (height-|dr|)(width-|dc|), doubled when symmetric.
GlcmMatrix compute_glcm(const GrayImage& img, const GlcmOffset& offset);

// Probability matrix p(i,j) = counts/total. Throws on total == 0.
Eigen::MatrixXd normalize(const GlcmMatrix& glcm);

}  // namespace texdim
