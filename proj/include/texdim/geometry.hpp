#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace texdim {

// Order statistics of distances from the origin for n points uniform in the
// unit p-ball (radial CDF x^p). Fractional p is allowed in the closed forms;
// Monte Carlo verification is integer-dimension only.

// Mean distance to the nearest point: prod_{xi=1..n} (1 + 1/(p xi))^{-1},
// evaluated in log space.
double mean_min_distance(std::int64_t n, double p);

// Farthest-point formula under test: 1 - np/((np+p-1)(np+p)). Kept verbatim;
// the Monte Carlo oracle disagrees with it (see mean_max_distance).
double mean_max_distance_claimed(std::int64_t n, double p);

// Farthest-point mean recomputed from the radial CDF: np/(np+1).
double mean_max_distance(std::int64_t n, double p);

enum class RcVariant { kClaimed, kCorrected };

// (E[max] - E[min]) / E[min] with the chosen farthest-point mean.
double relative_contrast(std::int64_t n, double p, RcVariant variant);

// C/sqrt(p) * sqrt(1/(2 xi + 1)) minus the claimed-variant relative
// contrast; for n=2 both terms vanish as p grows.
double rc_gap_vs_sqrt_bound(std::int64_t n, double p, double c, double xi);

// Observed decay exponent of the relative contrast between two dimensions
// (log-log slope); reported, never asserted against any stated rate.
double rc_loglog_slope(std::int64_t n, double p_lo, double p_hi, RcVariant variant);

struct OrderStatsMc {
    double mean_min = 0.0;
    double se_min = 0.0;
    double mean_max = 0.0;
    double se_max = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
};

// Empirical means with standard errors of the min/max origin distance over
// `trials` draws of n uniform points in the integer-dimensional unit ball.
// Deterministic given the seed, independent of thread count.
OrderStatsMc monte_carlo_order_stats(int n, int p, std::int64_t trials,
                                     std::uint64_t seed);

struct NearestDistanceRow {
    std::string name;
    double p = 0.0;           // intrinsic dimension
    std::int64_t count = 0;   // sample count
    double mean_min = 0.0;
    std::string display;      // mean_min to 2 decimals
};

struct DatasetSpec {
    std::string name;
    double p = 0.0;
    std::int64_t count = 0;
};

std::vector<NearestDistanceRow> nearest_distance_table(
    const std::vector<DatasetSpec>& datasets);

}  // namespace texdim
