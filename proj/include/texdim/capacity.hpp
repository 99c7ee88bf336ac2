#pragma once

#include <cstdint>
#include <vector>

#include "texdim/bigint.hpp"

namespace texdim {

// Capacity / excess-error calculators. Asymptotic bounds are evaluated with
// the O-constant taken as 1, so every value here is a bound *scale*, not a
// certified bound.

// Adjustable parameter count of a dense net: sum of n_i * n_{i+1}.
std::int64_t weight_count(const std::vector<std::int64_t>& layer_sizes);

// w^4 scale for a dense sigmoidal network.
double vc_bound_dense(double w);

// Number of cells formed by p hyperplanes in d-dimensional space:
// 2^p when p <= d, else sum_{i=0}^{d} C(p, i). Exact.
BigInt cell_count(std::int64_t planes, std::int64_t dim);

// cell_count(p, d)^(1/d): class labels supported per dimension.
double classes_supported(std::int64_t planes, std::int64_t dim);

// Input side length that reduces to 1 after l (conv k, subsample s) stages:
// s^l + k * (s^{l-1} + ... + s + 1).
BigInt cnn_input_size(std::int64_t kernel, std::int64_t subsample, std::int64_t layers);

// Operation count with m/l maps per layer. The closed form (defined for
// s >= 2) and the direct layer sum do not agree in general; both are
// exposed so reports can carry the discrepancy.
double cnn_operation_count_closed_form(double maps, double kernel, double subsample,
                                       std::int64_t layers);
double cnn_operation_count_layer_sum(double maps, double kernel, double subsample,
                                     std::int64_t layers);
// Closed form for s >= 2, layer sum for s = 1.
double cnn_operation_count(double maps, double kernel, double subsample,
                           std::int64_t layers);

// m^4 k^4 s^{2l-2} / l^2 scale for a CNN.
double vc_bound_cnn(double maps, double kernel, double subsample, std::int64_t layers);

// (1-p)^8 w^4 and (1-p)^4 w^4 scales; 0 <= p < 1.
double vc_bound_dropout(double w, double p);
double vc_bound_dropconnect(double w, double p);

// sqrt( (h (ln(2N/h) + 1) - ln(eta/4)) / N ). Natural log. Throws
// std::domain_error (reporting the radicand) when the radicand is not
// positive, which happens for h far above 2N.
double excess_error_bound(double h, double n_samples, double eta);

// Largest h on which the excess-error bound is increasing in h: 2N/e.
double monotone_h_limit(double n_samples);

struct GammaComparison {
    double h_dropout = 0.0;
    double h_dropconnect = 0.0;
    double gamma_dropout = 0.0;
    double gamma_dropconnect = 0.0;
    bool ordered = false;  // gamma_dropout <= gamma_dropconnect
};

GammaComparison gamma_dropout_vs_dropconnect(double w, double p, double n_samples,
                                             double eta);

}  // namespace texdim
