#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "texdim/bigint.hpp"

namespace texdim {

struct CountingParams {
    int n = 1;       // image side length
    int kappa = 2;   // gray levels
};

void validate(const CountingParams& params);  // n >= 1, kappa >= 2

// Exact value with denominator 1 or 2; the correlation count formula is the
// only one that needs the halves.
struct HalfInteger {
    BigInt doubled;  // 2 * value

    bool is_integral() const { return doubled.is_even(); }
    BigInt integral_value() const;  // requires is_integral()
    std::string to_string() const;
    double to_double() const { return doubled.to_double() / 2.0; }
};

// Closed-form feature-space cardinalities, evaluated verbatim in exact
// arithmetic. Several disagree with exhaustive enumeration (see the oracle
// below); values are reported as written, never corrected.
BigInt distinct_matrix_count(const CountingParams& params);        // C(n^2+k^2-1, k^2-1)
BigInt distinct_asm_count(const CountingParams& params);           // may be negative
HalfInteger distinct_correlation_count(const CountingParams& params);
BigInt distinct_sum_average_count(const CountingParams& params);   // 2n^2 k - 2n^2 + 1
BigInt distinct_contrast_count(const CountingParams& params);      // n^2 k^2 + n^2 - 2n^2 k + 1

enum class CountStatistic { kMatrixCount, kAsm, kContrast, kSumAverage, kCorrelation };

std::string to_string(CountStatistic statistic);

inline constexpr std::int64_t kDefaultEnumerationCap = 10'000'000;

// Enumerates every nonnegative integer kappa^2-cell matrix with entry sum
// n^2 and counts distinct unnormalized statistic values. Correlation uses
// exact arithmetic; matrices with a zero marginal variance are excluded
// from its distinct-value set. Throws std::runtime_error when the matrix
// count exceeds `cap` (the message names the cap).
BigInt brute_force_distinct_values(const CountingParams& params,
                                   CountStatistic statistic,
                                   std::int64_t cap = kDefaultEnumerationCap);

// Formula value next to its enumeration, when the cap permits.
struct CountComparison {
    std::string statistic;
    std::string formula_value;               // exact text (may be negative or n/2)
    std::optional<BigInt> oracle_value;
    std::optional<bool> agrees;
};

CountComparison compare_with_oracle(const CountingParams& params,
                                    CountStatistic statistic,
                                    bool run_oracle,
                                    std::int64_t cap = kDefaultEnumerationCap);

// Size of the co-occurrence feature space (n^2 k^2 + n^4) against the
// capacity scale w^4 of a w-parameter model. Requires w >= max(n, kappa).
struct FeatureSpaceVsCapacity {
    BigInt feature_space_scale;
    BigInt capacity_scale;
    bool within_capacity = false;
};

FeatureSpaceVsCapacity feature_space_vs_capacity(const CountingParams& params,
                                                 std::int64_t w);

}  // namespace texdim
