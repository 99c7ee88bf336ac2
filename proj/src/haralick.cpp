#include "texdim/haralick.hpp"

#include <cmath>
#include <stdexcept>

namespace texdim {

Eigen::VectorXd HaralickFeatures::to_vector() const {
    Eigen::VectorXd v(kCount);
    v << angular_second_moment, contrast, correlation, sum_average, variance,
        inverse_difference_moment, sum_entropy, sum_variance, entropy,
        difference_variance, difference_entropy, info_correlation_1,
        info_correlation_2;
    return v;
}

const std::array<std::string, HaralickFeatures::kCount>& HaralickFeatures::names() {
    static const std::array<std::string, kCount> labels = {
        "asm",          "contrast",     "correlation",
        "sum_average",  "variance",     "idm",
        "sum_entropy",  "sum_variance", "entropy",
        "diff_variance", "diff_entropy", "info_corr_1",
        "info_corr_2"};
    return labels;
}

namespace {

double plogp(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

}  // namespace

HaralickFeatures haralick_features(const Eigen::MatrixXd& p) {
    const Eigen::Index k = p.rows();
    if (k < 2 || p.cols() != k)
        throw std::domain_error("haralick_features: probability matrix must be kxk, k>=2");

    HaralickFeatures f;
    const Eigen::VectorXd px = p.rowwise().sum();   // marginal over i
    const Eigen::VectorXd py = p.colwise().sum();   // marginal over j
    const Eigen::VectorXd idx = Eigen::VectorXd::LinSpaced(k, 0.0, static_cast<double>(k - 1));

    const double mu_x = idx.dot(px);
    const double mu_y = idx.dot(py);
    const double var_x = (idx.array() - mu_x).square().matrix().dot(px);
    const double var_y = (idx.array() - mu_y).square().matrix().dot(py);

    Eigen::VectorXd p_sum = Eigen::VectorXd::Zero(2 * k - 1);   // p_{x+y}
    Eigen::VectorXd p_diff = Eigen::VectorXd::Zero(k);          // p_{x-y}
    double cross_moment = 0.0;  // sum of i*j*p(i,j)
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            const double pij = p(i, j);
            if (pij == 0.0) continue;
            const double d = static_cast<double>(i - j);
            f.angular_second_moment += pij * pij;
            f.contrast += d * d * pij;
            f.inverse_difference_moment += pij / (1.0 + d * d);
            f.entropy -= plogp(pij);
            f.variance += (static_cast<double>(i) - mu_x) * (static_cast<double>(i) - mu_x) * pij;
            cross_moment += static_cast<double>(i) * static_cast<double>(j) * pij;
            p_sum(i + j) += pij;
            p_diff(std::abs(i - j)) += pij;
        }
    }

    if (var_x > 0.0 && var_y > 0.0) {
        f.correlation = (cross_moment - mu_x * mu_y) / std::sqrt(var_x * var_y);
    } else {
        f.correlation = 0.0;
        f.correlation_degenerate = true;
    }

    for (Eigen::Index s = 0; s < p_sum.size(); ++s) {
        f.sum_average += static_cast<double>(s) * p_sum(s);
        f.sum_entropy -= plogp(p_sum(s));
    }
    for (Eigen::Index s = 0; s < p_sum.size(); ++s) {
        const double d = static_cast<double>(s) - f.sum_average;
        f.sum_variance += d * d * p_sum(s);
    }

    double mu_diff = 0.0;
    for (Eigen::Index s = 0; s < p_diff.size(); ++s) {
        mu_diff += static_cast<double>(s) * p_diff(s);
        f.difference_entropy -= plogp(p_diff(s));
    }
    for (Eigen::Index s = 0; s < p_diff.size(); ++s) {
        const double d = static_cast<double>(s) - mu_diff;
        f.difference_variance += d * d * p_diff(s);
    }

    double hx = 0.0, hy = 0.0, hxy1 = 0.0, hxy2 = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) hx -= plogp(px(i));
    for (Eigen::Index j = 0; j < k; ++j) hy -= plogp(py(j));
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            const double prod = px(i) * py(j);
            if (prod <= 0.0) continue;
            if (p(i, j) > 0.0) hxy1 -= p(i, j) * std::log(prod);
            hxy2 -= prod * std::log(prod);
        }
    }
    const double h_max = std::max(hx, hy);
    if (h_max > 0.0) {
        f.info_correlation_1 = (f.entropy - hxy1) / h_max;
    } else {
        f.info_correlation_1 = 0.0;
        f.info_correlation_1_degenerate = true;
    }
    f.info_correlation_2 = std::sqrt(std::max(0.0, 1.0 - std::exp(-2.0 * (hxy2 - f.entropy))));

    return f;
}

PatchFeatures patch_feature_vector(const GrayImage& img,
                                   const std::vector<GlcmOffset>& offsets,
                                   OffsetAggregation aggregation) {
    if (offsets.empty())
        throw std::domain_error("patch_feature_vector: at least one offset required");

    PatchFeatures out;
    const int n = HaralickFeatures::kCount;
    if (aggregation == OffsetAggregation::kConcat) {
        out.values.resize(n * static_cast<Eigen::Index>(offsets.size()));
    } else {
        out.values = Eigen::VectorXd::Zero(n);
    }

    for (std::size_t o = 0; o < offsets.size(); ++o) {
        const GlcmMatrix glcm = compute_glcm(img, offsets[o]);
        const HaralickFeatures f = haralick_features(normalize(glcm));
        out.correlation_degenerate |= f.correlation_degenerate;
        out.info_correlation_1_degenerate |= f.info_correlation_1_degenerate;
        if (aggregation == OffsetAggregation::kConcat) {
            out.values.segment(static_cast<Eigen::Index>(o) * n, n) = f.to_vector();
        } else {
            out.values += f.to_vector();
        }
    }
    if (aggregation == OffsetAggregation::kAverage)
        out.values /= static_cast<double>(offsets.size());
    return out;
}

std::vector<std::string> feature_labels(const std::vector<GlcmOffset>& offsets,
                                        OffsetAggregation aggregation) {
    const auto& base = HaralickFeatures::names();
    std::vector<std::string> labels;
    if (aggregation == OffsetAggregation::kAverage) {
        labels.assign(base.begin(), base.end());
        return labels;
    }
    for (const auto& off : offsets)
        for (const auto& name : base)
            labels.push_back(name + "_dr" + std::to_string(off.dr) + "_dc" +
                             std::to_string(off.dc));
    return labels;
}

}  // namespace texdim
