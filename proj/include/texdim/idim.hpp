#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>

namespace texdim {

// One sample per row.
using PointCloud = Eigen::MatrixXd;

// Throws std::domain_error unless N >= 2, D >= 1, all entries finite.
void validate_cloud(const PointCloud& cloud);

// Exact duplicate rows removed (first occurrence kept, original order
// preserved). merged, when given, receives the number of dropped rows.
PointCloud merge_duplicate_points(const PointCloud& cloud, int* merged = nullptr);

// Exact brute-force Euclidean k-NN: row i holds the sorted distances
// T_1 <= ... <= T_{k_max} from point i to its nearest neighbors, self
// excluded, ties broken by point index.
Eigen::MatrixXd knn_distances(const PointCloud& cloud, int k_max);

struct IdimConfig {
    int k_min = 10;
    int k_max = 20;
    // Average inverse estimates instead of the estimates themselves
    // (harmonic aggregation); off by default.
    bool harmonic_average = false;
    bool keep_per_point = false;
};

struct IdimEstimate {
    double global_value = 0.0;
    std::map<int, double> per_k;
    Eigen::MatrixXd per_point;  // (points x k-range) when requested, else empty
    int merged_duplicates = 0;
    int points_used = 0;
};

// k-NN maximum-likelihood intrinsic dimension:
//   m_k(x) = [ 1/(k-1) * sum_{j<k} ln(T_k(x)/T_j(x)) ]^{-1},
// averaged over points per k, then over k in [k_min, k_max].
IdimEstimate mle_intrinsic_dimension(const PointCloud& cloud, const IdimConfig& config);

// n points uniform in the unit p-ball: direction from p standard normals,
// radius U^{1/p}. Deterministic per (seed, point index).
PointCloud generate_uniform_ball(int n_points, int p, std::uint64_t seed);

class CounterRng;

namespace detail {
// The single-point construction behind generate_uniform_ball, exposed so
// Monte Carlo loops can draw the identical stream without per-point
// allocation. Writes p coordinates to out.
void sample_unit_ball_point(CounterRng& rng, int p, double* out);
}  // namespace detail

// Uniform samples in the unit intrinsic_p-cube, zero-padded to ambient_d
// and passed through a seeded random rotation (identity when rotate=false).
PointCloud generate_embedded_cube(int n_points, int intrinsic_p, int ambient_d,
                                  std::uint64_t seed, bool rotate = true);

}  // namespace texdim
