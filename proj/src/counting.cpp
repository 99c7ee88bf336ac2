#include "texdim/counting.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_set>
#include <vector>

namespace texdim {

void validate(const CountingParams& params) {
    if (params.n < 1) throw std::domain_error("counting: n must be >= 1");
    if (params.kappa < 2) throw std::domain_error("counting: kappa must be >= 2");
}

BigInt HalfInteger::integral_value() const {
    if (!is_integral())
        throw std::domain_error("HalfInteger: value is not integral");
    return doubled.divmod_small(2).quotient;
}

std::string HalfInteger::to_string() const {
    if (is_integral()) return integral_value().to_string();
    return doubled.to_string() + "/2";
}

BigInt distinct_matrix_count(const CountingParams& params) {
    validate(params);
    const std::uint64_t n2 = static_cast<std::uint64_t>(params.n) * params.n;
    const std::uint64_t k2 = static_cast<std::uint64_t>(params.kappa) * params.kappa;
    return BigInt::binomial(n2 + k2 - 1, k2 - 1);
}

BigInt distinct_asm_count(const CountingParams& params) {
    validate(params);
    const BigInt n2(static_cast<long long>(params.n) * params.n);
    const BigInt k2(static_cast<long long>(params.kappa) * params.kappa);
    const long long floor_term =
        (static_cast<long long>(params.n) * params.n) /
        (static_cast<long long>(params.kappa) * params.kappa);
    const BigInt f(floor_term);
    const BigInt n4 = n2 * n2;
    const BigInt bracket = f * f * (k2 - BigInt(1)) +
                           BigInt::pow(n2 - (k2 - BigInt(1)) * f, 2) + BigInt(1);
    return n4 - bracket;
}

HalfInteger distinct_correlation_count(const CountingParams& params) {
    validate(params);
    const BigInt n2(static_cast<long long>(params.n) * params.n);
    const BigInt k2(static_cast<long long>(params.kappa) * params.kappa);
    const BigInt k(params.kappa);
    // 2 * (n^2 k^2 - n^2 - k^2/2 + k/2 + 1)
    return HalfInteger{BigInt(2) * n2 * k2 - BigInt(2) * n2 - k2 + k + BigInt(2)};
}

BigInt distinct_sum_average_count(const CountingParams& params) {
    validate(params);
    const BigInt n2(static_cast<long long>(params.n) * params.n);
    return BigInt(2) * n2 * BigInt(params.kappa) - BigInt(2) * n2 + BigInt(1);
}

BigInt distinct_contrast_count(const CountingParams& params) {
    validate(params);
    const BigInt n2(static_cast<long long>(params.n) * params.n);
    const BigInt k2(static_cast<long long>(params.kappa) * params.kappa);
    const BigInt k(params.kappa);
    return n2 * k2 + n2 - BigInt(2) * n2 * k + BigInt(1);
}

std::string to_string(CountStatistic statistic) {
    switch (statistic) {
        case CountStatistic::kMatrixCount: return "matrix_count";
        case CountStatistic::kAsm: return "asm";
        case CountStatistic::kContrast: return "contrast";
        case CountStatistic::kSumAverage: return "sum_average";
        case CountStatistic::kCorrelation: return "correlation";
    }
    return "unknown";
}

namespace {

// Canonical form of an unnormalized correlation value A / sqrt(B*C):
// sign plus the reduced fraction A^2 / (B*C). Equal values and only equal
// values collide.
struct CorrelationKey {
    int sign;
    std::int64_t num;
    std::int64_t den;

    bool operator==(const CorrelationKey&) const = default;
};

struct CorrelationKeyHash {
    std::size_t operator()(const CorrelationKey& k) const {
        std::size_t h = std::hash<std::int64_t>()(k.num);
        h ^= std::hash<std::int64_t>()(k.den) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<int>()(k.sign) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Visits every composition of `total` into `cells` nonnegative parts.
void for_each_composition(int total, int cells,
                          std::vector<int>& buf,
                          const std::function<void(const std::vector<int>&)>& visit) {
    if (cells == 1) {
        buf.push_back(total);
        visit(buf);
        buf.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        buf.push_back(v);
        for_each_composition(total - v, cells - 1, buf, visit);
        buf.pop_back();
    }
}

}  // namespace

BigInt brute_force_distinct_values(const CountingParams& params,
                                   CountStatistic statistic,
                                   std::int64_t cap) {
    validate(params);
    const BigInt matrix_count = distinct_matrix_count(params);
    if (matrix_count > BigInt(cap))
        throw std::runtime_error(
            "brute_force_distinct_values: enumeration of " + matrix_count.to_string() +
            " matrices exceeds the configured cap of " + std::to_string(cap));
    if (statistic == CountStatistic::kMatrixCount) return matrix_count;

    const int k = params.kappa;
    const int total = params.n * params.n;
    const int cells = k * k;

    std::unordered_set<std::int64_t> scalar_values;
    std::unordered_set<CorrelationKey, CorrelationKeyHash> correlation_values;

    auto visit = [&](const std::vector<int>& x) {
        switch (statistic) {
            case CountStatistic::kAsm: {
                std::int64_t acc = 0;
                for (int v : x) acc += static_cast<std::int64_t>(v) * v;
                scalar_values.insert(acc);
                break;
            }
            case CountStatistic::kContrast: {
                std::int64_t acc = 0;
                for (int c = 0; c < cells; ++c) {
                    const std::int64_t d = c / k - c % k;
                    acc += x[c] * d * d;
                }
                scalar_values.insert(acc);
                break;
            }
            case CountStatistic::kSumAverage: {
                std::int64_t acc = 0;
                for (int c = 0; c < cells; ++c)
                    acc += static_cast<std::int64_t>(x[c]) * (c / k + c % k);
                scalar_values.insert(acc);
                break;
            }
            case CountStatistic::kCorrelation: {
                // Integer-scaled moments: corr = A / sqrt(B*C) with
                // A = T*Sxy - Sx1*Sy1, B = T*Sx2 - Sx1^2, C = T*Sy2 - Sy1^2.
                std::int64_t sx1 = 0, sy1 = 0, sx2 = 0, sy2 = 0, sxy = 0;
                for (int c = 0; c < cells; ++c) {
                    const std::int64_t i = c / k, j = c % k, v = x[c];
                    sx1 += v * i;
                    sy1 += v * j;
                    sx2 += v * i * i;
                    sy2 += v * j * j;
                    sxy += v * i * j;
                }
                const std::int64_t t = total;
                const std::int64_t a = t * sxy - sx1 * sy1;
                const std::int64_t b = t * sx2 - sx1 * sx1;
                const std::int64_t c2 = t * sy2 - sy1 * sy1;
                if (b == 0 || c2 == 0) break;  // degenerate marginal variance
                std::int64_t num = a * a;
                std::int64_t den = b * c2;
                const std::int64_t g = std::gcd(num, den);
                if (g > 1) {
                    num /= g;
                    den /= g;
                }
                correlation_values.insert(
                    CorrelationKey{a > 0 ? 1 : (a < 0 ? -1 : 0), num, den});
                break;
            }
            case CountStatistic::kMatrixCount:
                break;
        }
    };

    std::vector<int> buf;
    buf.reserve(cells);
    for_each_composition(total, cells, buf, visit);

    const std::size_t distinct = statistic == CountStatistic::kCorrelation
                                     ? correlation_values.size()
                                     : scalar_values.size();
    return BigInt(static_cast<unsigned long long>(distinct));
}

CountComparison compare_with_oracle(const CountingParams& params,
                                    CountStatistic statistic,
                                    bool run_oracle,
                                    std::int64_t cap) {
    CountComparison report;
    report.statistic = to_string(statistic);
    switch (statistic) {
        case CountStatistic::kMatrixCount:
            report.formula_value = distinct_matrix_count(params).to_string();
            break;
        case CountStatistic::kAsm:
            report.formula_value = distinct_asm_count(params).to_string();
            break;
        case CountStatistic::kContrast:
            report.formula_value = distinct_contrast_count(params).to_string();
            break;
        case CountStatistic::kSumAverage:
            report.formula_value = distinct_sum_average_count(params).to_string();
            break;
        case CountStatistic::kCorrelation:
            report.formula_value = distinct_correlation_count(params).to_string();
            break;
    }
    if (run_oracle) {
        report.oracle_value = brute_force_distinct_values(params, statistic, cap);
        report.agrees = report.oracle_value->to_string() == report.formula_value;
    }
    return report;
}

FeatureSpaceVsCapacity feature_space_vs_capacity(const CountingParams& params,
                                                 std::int64_t w) {
    validate(params);
    if (w < std::max(params.n, params.kappa))
        throw std::domain_error(
            "feature_space_vs_capacity: requires w >= max(n, kappa)");
    const BigInt n2(static_cast<long long>(params.n) * params.n);
    const BigInt k2(static_cast<long long>(params.kappa) * params.kappa);
    FeatureSpaceVsCapacity out;
    out.feature_space_scale = n2 * k2 + n2 * n2;
    out.capacity_scale = BigInt::pow(BigInt(static_cast<long long>(w)), 4);
    out.within_capacity = !(out.capacity_scale < out.feature_space_scale);
    return out;
}

}  // namespace texdim
