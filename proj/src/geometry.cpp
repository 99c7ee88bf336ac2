#include "texdim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "texdim/idim.hpp"
#include "texdim/parallel.hpp"
#include "texdim/rng.hpp"

namespace texdim {

namespace {

void validate_geometry(std::int64_t n, double p) {
    if (n < 1) throw std::domain_error("geometry: n must be >= 1");
    if (!(p > 0.0)) throw std::domain_error("geometry: p must be > 0");
}

}  // namespace

double mean_min_distance(std::int64_t n, double p) {
    validate_geometry(n, p);
    double log_acc = 0.0;
    for (std::int64_t xi = 1; xi <= n; ++xi)
        log_acc -= std::log1p(1.0 / (p * static_cast<double>(xi)));
    return std::exp(log_acc);
}

double mean_max_distance_claimed(std::int64_t n, double p) {
    validate_geometry(n, p);
    const double np = static_cast<double>(n) * p;
    return 1.0 - np / ((np + p - 1.0) * (np + p));
}

double mean_max_distance(std::int64_t n, double p) {
    validate_geometry(n, p);
    const double np = static_cast<double>(n) * p;
    return np / (np + 1.0);
}

double relative_contrast(std::int64_t n, double p, RcVariant variant) {
    const double mean_min = mean_min_distance(n, p);
    const double mean_max = variant == RcVariant::kClaimed
                                ? mean_max_distance_claimed(n, p)
                                : mean_max_distance(n, p);
    return (mean_max - mean_min) / mean_min;
}

double rc_gap_vs_sqrt_bound(std::int64_t n, double p, double c, double xi) {
    if (!(c > 0.0)) throw std::domain_error("rc_gap_vs_sqrt_bound: C must be > 0");
    if (!(xi >= 1.0)) throw std::domain_error("rc_gap_vs_sqrt_bound: xi must be >= 1");
    return c / std::sqrt(p) * std::sqrt(1.0 / (2.0 * xi + 1.0)) -
           relative_contrast(n, p, RcVariant::kClaimed);
}

double rc_loglog_slope(std::int64_t n, double p_lo, double p_hi, RcVariant variant) {
    if (!(0.0 < p_lo && p_lo < p_hi))
        throw std::domain_error("rc_loglog_slope: require 0 < p_lo < p_hi");
    const double rc_lo = relative_contrast(n, p_lo, variant);
    const double rc_hi = relative_contrast(n, p_hi, variant);
    return (std::log(rc_hi) - std::log(rc_lo)) / (std::log(p_hi) - std::log(p_lo));
}

OrderStatsMc monte_carlo_order_stats(int n, int p, std::int64_t trials,
                                     std::uint64_t seed) {
    validate_geometry(n, p);
    if (trials < 1) throw std::domain_error("monte_carlo_order_stats: trials >= 1");

    constexpr std::size_t kChunk = 8192;
    const std::size_t count = static_cast<std::size_t>(trials);
    const std::size_t n_chunks = (count + kChunk - 1) / kChunk;

    struct Partial {
        double min_sum = 0.0, min_sq = 0.0, max_sum = 0.0, max_sq = 0.0;
    };
    std::vector<Partial> partials(n_chunks);

    parallel_chunks(count, kChunk, [&](std::size_t first, std::size_t last) {
        Partial acc;
        std::vector<double> point(static_cast<std::size_t>(p));
        for (std::size_t t = first; t < last; ++t) {
            // Same per-point construction as generate_uniform_ball, on a
            // per-trial derived seed.
            const std::uint64_t trial_seed =
                CounterRng(seed, 0x5452494131ULL + t).next_u64();
            double lo = std::numeric_limits<double>::infinity();
            double hi = 0.0;
            for (int j = 0; j < n; ++j) {
                CounterRng rng(trial_seed, static_cast<std::uint64_t>(j));
                detail::sample_unit_ball_point(rng, p, point.data());
                double norm_sq = 0.0;
                for (int d = 0; d < p; ++d) norm_sq += point[static_cast<std::size_t>(d)] * point[static_cast<std::size_t>(d)];
                const double norm = std::sqrt(norm_sq);
                lo = std::min(lo, norm);
                hi = std::max(hi, norm);
            }
            acc.min_sum += lo;
            acc.min_sq += lo * lo;
            acc.max_sum += hi;
            acc.max_sq += hi * hi;
        }
        partials[first / kChunk] = acc;
    });

    Partial total;
    for (const Partial& part : partials) {
        total.min_sum += part.min_sum;
        total.min_sq += part.min_sq;
        total.max_sum += part.max_sum;
        total.max_sq += part.max_sq;
    }

    OrderStatsMc out;
    out.trials = trials;
    out.seed = seed;
    const double t = static_cast<double>(trials);
    out.mean_min = total.min_sum / t;
    out.mean_max = total.max_sum / t;
    if (trials > 1) {
        const double var_min =
            std::max(0.0, (total.min_sq - t * out.mean_min * out.mean_min) / (t - 1.0));
        const double var_max =
            std::max(0.0, (total.max_sq - t * out.mean_max * out.mean_max) / (t - 1.0));
        out.se_min = std::sqrt(var_min / t);
        out.se_max = std::sqrt(var_max / t);
    }
    return out;
}

std::vector<NearestDistanceRow> nearest_distance_table(
    const std::vector<DatasetSpec>& datasets) {
    std::vector<NearestDistanceRow> rows;
    rows.reserve(datasets.size());
    for (const DatasetSpec& spec : datasets) {
        NearestDistanceRow row;
        row.name = spec.name;
        row.p = spec.p;
        row.count = spec.count;
        row.mean_min = mean_min_distance(spec.count, spec.p);
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", row.mean_min);
        row.display = buf;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace texdim
