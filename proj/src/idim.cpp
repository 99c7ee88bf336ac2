#include "texdim/idim.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "texdim/parallel.hpp"
#include "texdim/rng.hpp"

namespace texdim {

void validate_cloud(const PointCloud& cloud) {
    if (cloud.rows() < 2) throw std::domain_error("point cloud: need at least 2 points");
    if (cloud.cols() < 1) throw std::domain_error("point cloud: need at least 1 dimension");
    if (!cloud.allFinite()) throw std::domain_error("point cloud: non-finite entry");
}

PointCloud merge_duplicate_points(const PointCloud& cloud, int* merged) {
    const Eigen::Index n = cloud.rows();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    auto row_compare = [&](Eigen::Index a, Eigen::Index b) {
        for (Eigen::Index c = 0; c < cloud.cols(); ++c) {
            if (cloud(a, c) != cloud(b, c)) return cloud(a, c) < cloud(b, c) ? -1 : 1;
        }
        return 0;
    };
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        const int c = row_compare(a, b);
        return c != 0 ? c < 0 : a < b;
    });

    // Equal rows form runs sorted by original index; keep the first of each.
    std::vector<bool> duplicate(static_cast<std::size_t>(n), false);
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (row_compare(order[i - 1], order[i]) == 0)
            duplicate[static_cast<std::size_t>(order[i])] = true;
    }

    const Eigen::Index kept =
        n - static_cast<Eigen::Index>(std::count(duplicate.begin(), duplicate.end(), true));
    PointCloud out(kept, cloud.cols());
    Eigen::Index row = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        if (!duplicate[static_cast<std::size_t>(i)]) out.row(row++) = cloud.row(i);
    if (merged) *merged = static_cast<int>(n - kept);
    return out;
}

Eigen::MatrixXd knn_distances(const PointCloud& cloud, int k_max) {
    validate_cloud(cloud);
    const Eigen::Index n = cloud.rows();
    if (k_max < 1 || k_max > n - 1)
        throw std::domain_error("knn_distances: k_max must be in [1, N-1]");

    const Eigen::VectorXd sq = cloud.rowwise().squaredNorm();
    Eigen::MatrixXd result(n, k_max);

    constexpr std::size_t kBlock = 128;
    parallel_chunks(static_cast<std::size_t>(n), kBlock,
                    [&](std::size_t first, std::size_t last) {
        const Eigen::Index b0 = static_cast<Eigen::Index>(first);
        const Eigen::Index nb = static_cast<Eigen::Index>(last - first);
        // d2(q, j) = |q|^2 + |j|^2 - 2 q.j
        Eigen::MatrixXd cross = cloud.middleRows(b0, nb) * cloud.transpose();
        std::vector<std::pair<double, Eigen::Index>> dist(static_cast<std::size_t>(n));
        for (Eigen::Index q = 0; q < nb; ++q) {
            const Eigen::Index qi = b0 + q;
            for (Eigen::Index j = 0; j < n; ++j) {
                const double d2 = std::max(0.0, sq(qi) + sq(j) - 2.0 * cross(q, j));
                dist[static_cast<std::size_t>(j)] = {d2, j};
            }
            dist[static_cast<std::size_t>(qi)].first =
                std::numeric_limits<double>::infinity();  // exclude self
            std::partial_sort(dist.begin(), dist.begin() + k_max, dist.end());
            for (int k = 0; k < k_max; ++k)
                result(qi, k) = std::sqrt(dist[static_cast<std::size_t>(k)].first);
        }
    });
    return result;
}

IdimEstimate mle_intrinsic_dimension(const PointCloud& cloud, const IdimConfig& config) {
    validate_cloud(cloud);
    IdimEstimate estimate;
    const PointCloud points = merge_duplicate_points(cloud, &estimate.merged_duplicates);
    const Eigen::Index n = points.rows();
    estimate.points_used = static_cast<int>(n);

    if (config.k_min < 2 || config.k_min > config.k_max)
        throw std::domain_error("mle: require 2 <= k_min <= k_max");
    if (config.k_max > n - 1)
        throw std::domain_error("mle: k_max exceeds usable points (" +
                                std::to_string(n) + " after duplicate merge)");

    const Eigen::MatrixXd dists = knn_distances(points, config.k_max);
    const int n_k = config.k_max - config.k_min + 1;
    Eigen::MatrixXd per_point(n, n_k);

    parallel_chunks(static_cast<std::size_t>(n), 256,
                    [&](std::size_t first, std::size_t last) {
        std::vector<double> log_prefix(static_cast<std::size_t>(config.k_max) + 1);
        for (std::size_t i = first; i < last; ++i) {
            const Eigen::Index pi = static_cast<Eigen::Index>(i);
            log_prefix[0] = 0.0;
            for (int j = 0; j < config.k_max; ++j) {
                const double t = dists(pi, j);
                if (t <= 0.0)
                    throw std::domain_error(
                        "mle: zero neighbor distance at point " + std::to_string(pi) +
                        " after duplicate merge");
                log_prefix[static_cast<std::size_t>(j) + 1] =
                    log_prefix[static_cast<std::size_t>(j)] + std::log(t);
            }
            for (int k = config.k_min; k <= config.k_max; ++k) {
                // sum_{j<k} ln(T_k/T_j) = (k-1) ln T_k - sum_{j<k} ln T_j
                const double log_tk = std::log(dists(pi, k - 1));
                const double sum = (k - 1) * log_tk -
                                   log_prefix[static_cast<std::size_t>(k) - 1];
                if (sum <= 0.0)
                    throw std::domain_error(
                        "mle: degenerate neighbor distances at point " +
                        std::to_string(pi));
                per_point(pi, k - config.k_min) = static_cast<double>(k - 1) / sum;
            }
        }
    });

    double global_acc = 0.0;
    for (int k = config.k_min; k <= config.k_max; ++k) {
        const auto col = per_point.col(k - config.k_min);
        double value;
        if (config.harmonic_average) {
            value = static_cast<double>(n) / col.cwiseInverse().sum();
        } else {
            value = col.mean();
        }
        estimate.per_k[k] = value;
        global_acc += value;
    }
    estimate.global_value = global_acc / n_k;
    if (config.keep_per_point) estimate.per_point = std::move(per_point);
    return estimate;
}

namespace detail {

void sample_unit_ball_point(CounterRng& rng, int p, double* out) {
    double norm_sq = 0.0;
    do {
        norm_sq = 0.0;
        for (int d = 0; d < p; ++d) {
            const double g = rng.next_normal();
            out[d] = g;
            norm_sq += g * g;
        }
    } while (norm_sq == 0.0);
    const double scale = std::pow(rng.next_unit(), 1.0 / p) / std::sqrt(norm_sq);
    for (int d = 0; d < p; ++d) out[d] *= scale;
}

}  // namespace detail

PointCloud generate_uniform_ball(int n_points, int p, std::uint64_t seed) {
    if (n_points < 1) throw std::domain_error("generate_uniform_ball: n_points >= 1");
    if (p < 1) throw std::domain_error("generate_uniform_ball: p >= 1");
    PointCloud cloud(n_points, p);
    parallel_chunks(static_cast<std::size_t>(n_points), 1024,
                    [&](std::size_t first, std::size_t last) {
        std::vector<double> point(static_cast<std::size_t>(p));
        for (std::size_t i = first; i < last; ++i) {
            CounterRng rng(seed, i);
            detail::sample_unit_ball_point(rng, p, point.data());
            for (int d = 0; d < p; ++d) cloud(static_cast<Eigen::Index>(i), d) = point[static_cast<std::size_t>(d)];
        }
    });
    return cloud;
}

PointCloud generate_embedded_cube(int n_points, int intrinsic_p, int ambient_d,
                                  std::uint64_t seed, bool rotate) {
    if (n_points < 1) throw std::domain_error("generate_embedded_cube: n_points >= 1");
    if (intrinsic_p < 1 || intrinsic_p > ambient_d)
        throw std::domain_error("generate_embedded_cube: require 1 <= p <= D");

    PointCloud cloud = PointCloud::Zero(n_points, ambient_d);
    parallel_chunks(static_cast<std::size_t>(n_points), 1024,
                    [&](std::size_t first, std::size_t last) {
        for (std::size_t i = first; i < last; ++i) {
            CounterRng rng(seed, i);
            for (int d = 0; d < intrinsic_p; ++d)
                cloud(static_cast<Eigen::Index>(i), d) = rng.next_unit();
        }
    });

    if (rotate) {
        // Seeded random orthogonal map: QR of a Gaussian matrix with the R
        // diagonal sign convention fixed, applied as an isometry on rows.
        CounterRng rng(seed, 0x524f54415445ULL);  // distinct stream from the points
        Eigen::MatrixXd gaussian(ambient_d, ambient_d);
        for (Eigen::Index r = 0; r < ambient_d; ++r)
            for (Eigen::Index c = 0; c < ambient_d; ++c)
                gaussian(r, c) = rng.next_normal();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian);
        Eigen::MatrixXd q = qr.householderQ();
        const Eigen::MatrixXd r_mat = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Eigen::Index c = 0; c < ambient_d; ++c)
            if (r_mat(c, c) < 0.0) q.col(c) = -q.col(c);
        cloud = cloud * q.transpose();
    }
    return cloud;
}

}  // namespace texdim
