#pragma once

#include <Eigen/Core>
#include <array>
#include <string>
#include <vector>

#include "texdim/glcm.hpp"

namespace texdim {

// The 13 scalar GLCM statistics, natural log throughout. Degenerate cases
// (constant image) report 0 with the matching flag set so downstream CSV
// stays numeric.
struct HaralickFeatures {
    double angular_second_moment = 0.0;
    double contrast = 0.0;
    double correlation = 0.0;
    double sum_average = 0.0;
    double variance = 0.0;
    double inverse_difference_moment = 0.0;
    double sum_entropy = 0.0;
    double sum_variance = 0.0;
    double entropy = 0.0;
    double difference_variance = 0.0;
    double difference_entropy = 0.0;
    double info_correlation_1 = 0.0;
    double info_correlation_2 = 0.0;

    bool correlation_degenerate = false;
    bool info_correlation_1_degenerate = false;

    static constexpr int kCount = 13;
    Eigen::VectorXd to_vector() const;
    static const std::array<std::string, kCount>& names();
};

// Features of a normalized co-occurrence matrix p (rows index i, cols j).
HaralickFeatures haralick_features(const Eigen::MatrixXd& p);

enum class OffsetAggregation { kConcat, kAverage };

struct PatchFeatures {
    Eigen::VectorXd values;  // 13 * |offsets| (concat) or 13 (average)
    bool correlation_degenerate = false;
    bool info_correlation_1_degenerate = false;
};

// Feature vector of one patch over a set of offsets; flags are OR-ed
// across offsets.
PatchFeatures patch_feature_vector(const GrayImage& img,
                                   const std::vector<GlcmOffset>& offsets,
                                   OffsetAggregation aggregation);

// Column labels matching PatchFeatures::values for CSV headers.
std::vector<std::string> feature_labels(const std::vector<GlcmOffset>& offsets,
                                        OffsetAggregation aggregation);

}  // namespace texdim
