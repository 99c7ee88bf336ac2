#include "texdim/capacity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace texdim {

std::int64_t weight_count(const std::vector<std::int64_t>& layer_sizes) {
    if (layer_sizes.size() < 2)
        throw std::domain_error("weight_count: at least two layers required");
    std::int64_t w = 0;
    for (std::size_t i = 0; i + 1 < layer_sizes.size(); ++i) {
        if (layer_sizes[i] < 1 || layer_sizes[i + 1] < 1)
            throw std::domain_error("weight_count: layer sizes must be positive");
        w += layer_sizes[i] * layer_sizes[i + 1];
    }
    return w;
}

double vc_bound_dense(double w) {
    if (w < 1.0) throw std::domain_error("vc_bound_dense: w must be >= 1");
    return w * w * w * w;
}

BigInt cell_count(std::int64_t planes, std::int64_t dim) {
    if (planes < 0) throw std::domain_error("cell_count: planes must be >= 0");
    if (dim < 1) throw std::domain_error("cell_count: dim must be >= 1");
    if (planes <= dim) return BigInt::pow2(static_cast<std::uint64_t>(planes));
    BigInt acc;
    for (std::int64_t i = 0; i <= dim; ++i)
        acc += BigInt::binomial(static_cast<std::uint64_t>(planes),
                                static_cast<std::uint64_t>(i));
    return acc;
}

double classes_supported(std::int64_t planes, std::int64_t dim) {
    const BigInt cells = cell_count(planes, dim);
    if (cells.is_zero()) return 0.0;
    return std::exp(cells.log_magnitude() / static_cast<double>(dim));
}

BigInt cnn_input_size(std::int64_t kernel, std::int64_t subsample, std::int64_t layers) {
    if (kernel < 1 || subsample < 1 || layers < 0)
        throw std::domain_error("cnn_input_size: requires k >= 1, s >= 1, l >= 0");
    const BigInt s(static_cast<long long>(subsample));
    BigInt size = BigInt::pow(s, static_cast<std::uint32_t>(layers));
    BigInt geom;  // s^{l-1} + ... + s + 1
    BigInt term(1);
    for (std::int64_t j = 0; j < layers; ++j) {
        geom += term;
        term *= s;
    }
    return size + BigInt(static_cast<long long>(kernel)) * geom;
}

double cnn_operation_count_closed_form(double maps, double kernel, double subsample,
                                       std::int64_t layers) {
    if (subsample < 2.0)
        throw std::domain_error("cnn_operation_count_closed_form: requires s >= 2");
    const double l = static_cast<double>(layers);
    const double s = subsample;
    return maps * kernel * s * s * (std::pow(s, l - 1.0) - 1.0) /
               (l * (s - 1.0) * (s - 1.0)) +
           maps * s * (std::pow(s, l) - 1.0) / (l * (s - 1.0));
}

double cnn_operation_count_layer_sum(double maps, double kernel, double subsample,
                                     std::int64_t layers) {
    if (maps < 1.0 || kernel < 1.0 || subsample < 1.0 || layers < 1)
        throw std::domain_error("cnn_operation_count_layer_sum: invalid architecture");
    const double per_layer_maps = maps / static_cast<double>(layers);
    double extent = cnn_input_size(static_cast<std::int64_t>(kernel),
                                   static_cast<std::int64_t>(subsample), layers)
                        .to_double();
    double ops = 0.0;
    for (std::int64_t i = 0; i < layers; ++i) {
        ops += per_layer_maps * (extent - kernel);
        extent = (extent - kernel) / subsample;
    }
    return ops;
}

double cnn_operation_count(double maps, double kernel, double subsample,
                           std::int64_t layers) {
    if (layers < 1)
        throw std::domain_error("cnn_operation_count: layers must be >= 1");
    if (subsample >= 2.0)
        return cnn_operation_count_closed_form(maps, kernel, subsample, layers);
    return cnn_operation_count_layer_sum(maps, kernel, subsample, layers);
}

double vc_bound_cnn(double maps, double kernel, double subsample, std::int64_t layers) {
    if (maps < 1.0 || kernel < 1.0 || subsample < 1.0 || layers < 1)
        throw std::domain_error("vc_bound_cnn: all parameters must be >= 1");
    const double l = static_cast<double>(layers);
    return std::pow(maps, 4.0) * std::pow(kernel, 4.0) *
           std::pow(subsample, 2.0 * l - 2.0) / (l * l);
}

namespace {

void check_drop_probability(double p) {
    if (p < 0.0 || p >= 1.0)
        throw std::domain_error("drop probability must satisfy 0 <= p < 1");
}

}  // namespace

double vc_bound_dropout(double w, double p) {
    check_drop_probability(p);
    return std::pow(1.0 - p, 8.0) * vc_bound_dense(w);
}

double vc_bound_dropconnect(double w, double p) {
    check_drop_probability(p);
    return std::pow(1.0 - p, 4.0) * vc_bound_dense(w);
}

double excess_error_bound(double h, double n_samples, double eta) {
    if (h <= 0.0) throw std::domain_error("excess_error_bound: h must be > 0");
    if (n_samples < 1.0) throw std::domain_error("excess_error_bound: N must be >= 1");
    if (eta <= 0.0 || eta > 1.0)
        throw std::domain_error("excess_error_bound: eta must be in (0, 1]");
    const double radicand =
        (h * (std::log(2.0 * n_samples / h) + 1.0) - std::log(eta / 4.0)) / n_samples;
    if (!(radicand > 0.0))
        throw std::domain_error("excess_error_bound: nonpositive radicand " +
                                std::to_string(radicand));
    return std::sqrt(radicand);
}

double monotone_h_limit(double n_samples) {
    return 2.0 * n_samples / std::exp(1.0);
}

GammaComparison gamma_dropout_vs_dropconnect(double w, double p, double n_samples,
                                             double eta) {
    GammaComparison cmp;
    cmp.h_dropout = vc_bound_dropout(w, p);
    cmp.h_dropconnect = vc_bound_dropconnect(w, p);
    cmp.gamma_dropout = excess_error_bound(cmp.h_dropout, n_samples, eta);
    cmp.gamma_dropconnect = excess_error_bound(cmp.h_dropconnect, n_samples, eta);
    cmp.ordered = cmp.gamma_dropout <= cmp.gamma_dropconnect;
    return cmp;
}

}  // namespace texdim
