#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "texdim/capacity.hpp"

using namespace texdim;

TEST_CASE("weight count") {
    CHECK(weight_count({3, 2}) == 6);
    CHECK(weight_count({4, 3, 2}) == 18);
    CHECK(weight_count({1, 1, 1, 1}) == 3);
    CHECK_THROWS_AS(weight_count({5}), std::domain_error);
    CHECK_THROWS_AS(weight_count({3, 0}), std::domain_error);
}

TEST_CASE("dense bound scale") {
    CHECK(vc_bound_dense(1) == 1.0);
    CHECK(vc_bound_dense(10) == 10000.0);
    CHECK(vc_bound_dense(18) == 104976.0);
    CHECK_THROWS_AS(vc_bound_dense(0.5), std::domain_error);
}

TEST_CASE("cell count") {
    CHECK(cell_count(3, 5).to_string() == "8");
    CHECK(cell_count(5, 3).to_string() == "26");  // 1+5+10+10
    CHECK(cell_count(0, 1).to_string() == "1");
    for (int p = 0; p <= 12; ++p) {
        for (int d = 1; d <= 12; ++d) {
            const BigInt cells = cell_count(p, d);
            if (p <= d) {
                CHECK(cells == BigInt::pow2(static_cast<std::uint64_t>(p)));
            } else {
                CHECK(cells < BigInt::pow2(static_cast<std::uint64_t>(p)));
            }
        }
    }
}

TEST_CASE("classes supported per dimension") {
    CHECK(classes_supported(8, 8) == doctest::Approx(2.0));
    // p=16 > d=8 sits on the binomial-sum branch: cell_count = 39203
    // (not 2^16), so the per-dimension class count is 39203^(1/8).
    CHECK(cell_count(16, 8).to_string() == "39203");
    CHECK(classes_supported(16, 8) == doctest::Approx(std::pow(39203.0, 1.0 / 8.0)));
    CHECK(classes_supported(16, 16) == doctest::Approx(2.0));  // 2^{p/d} branch
    CHECK(classes_supported(5, 3) == doctest::Approx(std::cbrt(26.0)));
}

TEST_CASE("input size collapsing to 1 after l stages") {
    CHECK(cnn_input_size(5, 3, 1).to_string() == "8");    // s + k
    CHECK(cnn_input_size(5, 3, 2).to_string() == "29");   // s^2 + ks + k
    CHECK(cnn_input_size(5, 1, 3).to_string() == "16");   // 1 + k l
    CHECK(cnn_input_size(4, 2, 0).to_string() == "1");

    // One (conv k, subsample s) stage maps size(l) onto size(l-1).
    for (std::int64_t k : {1, 3, 5}) {
        for (std::int64_t s : {1, 2, 3}) {
            for (std::int64_t l = 1; l <= 5; ++l) {
                const std::int64_t size_l = cnn_input_size(k, s, l).to_int64();
                const std::int64_t size_prev = cnn_input_size(k, s, l - 1).to_int64();
                CHECK((size_l - k) % s == 0);
                CHECK((size_l - k) / s == size_prev);
            }
        }
    }
}

TEST_CASE("operation count: closed form and layer sum are both exposed") {
    // Layer sum at m=2, k=5, s=3, l=2: input 29, t = 1*(29-5) + 1*(8-5) = 27.
    CHECK(cnn_operation_count_layer_sum(2, 5, 3, 2) == doctest::Approx(27.0));
    // Closed form evaluates to 22.5 + 12 = 34.5 on the same architecture:
    // the two routes genuinely differ and reports must carry both.
    CHECK(cnn_operation_count_closed_form(2, 5, 3, 2) == doctest::Approx(34.5));
    CHECK(cnn_operation_count(2, 5, 3, 2) == doctest::Approx(34.5));

    // m=l, k=1, s=2, l=1: n = 3, one map per layer, t = n - k = 2.
    CHECK(cnn_operation_count(1, 1, 2, 1) == doctest::Approx(2.0));

    // s=1 is served by the layer sum (closed form divides by s-1).
    CHECK(cnn_operation_count(3, 2, 1, 3) == doctest::Approx(9.0));  // 5+3+1
    CHECK_THROWS_AS(cnn_operation_count_closed_form(3, 2, 1, 3), std::domain_error);
}

TEST_CASE("cnn bound scale") {
    CHECK(vc_bound_cnn(1, 1, 1, 1) == doctest::Approx(1.0));
    CHECK(vc_bound_cnn(2, 3, 2, 2) == doctest::Approx(1296.0));
    CHECK(vc_bound_cnn(4, 5, 2, 3) == doctest::Approx(256.0 * 625.0 * 16.0 / 9.0));
}

TEST_CASE("dropout and dropconnect bound scales") {
    CHECK(vc_bound_dropout(10, 0.0) == doctest::Approx(10000.0));
    CHECK(vc_bound_dropconnect(10, 0.0) == doctest::Approx(10000.0));
    CHECK(vc_bound_dropout(10, 0.5) == doctest::Approx(39.0625));
    CHECK(vc_bound_dropconnect(10, 0.5) == doctest::Approx(625.0));
    CHECK(vc_bound_dropout(100, 0.9) == doctest::Approx(1.0));
    CHECK_THROWS_AS(vc_bound_dropout(10, 1.0), std::domain_error);
    CHECK_THROWS_AS(vc_bound_dropconnect(10, -0.1), std::domain_error);

    // (1-p)^8 <= (1-p)^4 on [0,1): neuron dropping shrinks capacity faster.
    for (double w : {2.0, 10.0, 300.0}) {
        for (double p = 0.0; p < 0.95; p += 0.05) {
            CHECK(vc_bound_dropout(w, p) <= vc_bound_dropconnect(w, p));
        }
        CHECK(vc_bound_dropout(w, 0.0) == vc_bound_dense(w));
        CHECK(vc_bound_dropconnect(w, 0.0) == vc_bound_dense(w));
    }
}

TEST_CASE("excess error bound spot values against a long-double oracle") {
    auto oracle = [](long double h, long double n, long double eta) {
        return static_cast<double>(
            std::sqrt((h * (std::log(2.0L * n / h) + 1.0L) - std::log(eta / 4.0L)) / n));
    };
    CHECK(excess_error_bound(100, 10000, 0.05) ==
          doctest::Approx(oracle(100, 10000, 0.05)).epsilon(1e-12));
    CHECK(excess_error_bound(100, 10000, 0.05) == doctest::Approx(0.2518).epsilon(2e-4));
    CHECK(excess_error_bound(100, 100, 1.0) ==
          doctest::Approx(oracle(100, 100, 1.0)).epsilon(1e-12));
    CHECK(excess_error_bound(100, 100, 1.0) == doctest::Approx(1.30653).epsilon(1e-4));

    // Tightening eta raises the bound.
    CHECK(excess_error_bound(100, 10000, 0.01) > excess_error_bound(100, 10000, 0.05));
}

TEST_CASE("excess error bound increases in h below 2N/e") {
    const double n = 1.0e6;
    const double limit = monotone_h_limit(n);
    CHECK(limit == doctest::Approx(2.0e6 / std::exp(1.0)));
    double prev = 0.0;
    for (double h = 1.0; h < limit; h *= 1.7) {
        const double value = excess_error_bound(h, n, 0.05);
        CHECK(value > prev);
        prev = value;
    }
}

TEST_CASE("nonpositive radicand is a domain error naming the radicand") {
    try {
        excess_error_bound(1.0e12, 1.0e6, 0.05);
        FAIL("expected domain error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("radicand") != std::string::npos);
    }
}

TEST_CASE("gamma ordering where both bounds evaluate") {
    const double n = 1.0e6, eta = 0.05;

    const auto equal_case = gamma_dropout_vs_dropconnect(10, 0.0, n, eta);
    CHECK(equal_case.gamma_dropout == equal_case.gamma_dropconnect);
    CHECK(equal_case.ordered);

    const auto mid = gamma_dropout_vs_dropconnect(10, 0.5, n, eta);
    CHECK(mid.h_dropout == doctest::Approx(39.0625));
    CHECK(mid.h_dropconnect == doctest::Approx(625.0));
    CHECK(mid.ordered);

    // w=10: every grid point evaluates and is ordered.
    for (double p = 0.1; p < 0.95; p += 0.1)
        CHECK(gamma_dropout_vs_dropconnect(10, p, n, eta).ordered);

    // w=100: the dropconnect h leaves the feasible region of the error
    // formula for small p (its radicand turns negative), so the ordering is
    // checkable only from p = 0.6 up. The infeasible points throw.
    for (double p : {0.6, 0.7, 0.8, 0.9})
        CHECK(gamma_dropout_vs_dropconnect(100, p, n, eta).ordered);
    CHECK_THROWS_AS(gamma_dropout_vs_dropconnect(100, 0.1, n, eta), std::domain_error);
}
