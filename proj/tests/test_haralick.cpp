#include "doctest.h"

#include <cmath>

#include "texdim/haralick.hpp"
#include "texdim/rng.hpp"

using namespace texdim;

namespace {

GrayImage random_image(int side, int levels, std::uint64_t seed) {
    CounterRng rng(seed, 7);
    PixelMatrix m(side, side);
    for (Eigen::Index r = 0; r < side; ++r)
        for (Eigen::Index c = 0; c < side; ++c)
            m(r, c) = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(levels));
    return make_gray_image(std::move(m), levels);
}

GrayImage checkerboard(int side, int levels) {
    PixelMatrix m(side, side);
    for (Eigen::Index r = 0; r < side; ++r)
        for (Eigen::Index c = 0; c < side; ++c) m(r, c) = static_cast<int>((r + c) % 2);
    return make_gray_image(std::move(m), levels);
}

}  // namespace

TEST_CASE("deterministic distribution") {
    Eigen::MatrixXd p(2, 2);
    p << 1, 0, 0, 0;
    const HaralickFeatures f = haralick_features(p);
    CHECK(f.angular_second_moment == doctest::Approx(1.0));
    CHECK(f.contrast == doctest::Approx(0.0));
    CHECK(f.entropy == doctest::Approx(0.0));
    CHECK(f.inverse_difference_moment == doctest::Approx(1.0));
    CHECK(f.correlation == 0.0);
    CHECK(f.correlation_degenerate);
    CHECK(f.info_correlation_1_degenerate);
}

TEST_CASE("two-cell antidiagonal distribution") {
    Eigen::MatrixXd p(2, 2);
    p << 0, 0.5, 0.5, 0;
    const HaralickFeatures f = haralick_features(p);
    CHECK(f.angular_second_moment == doctest::Approx(0.5));
    CHECK(f.contrast == doctest::Approx(1.0));
    CHECK(f.sum_average == doctest::Approx(1.0));  // all mass at i+j = 1
    CHECK(!f.correlation_degenerate);
    CHECK(f.correlation == doctest::Approx(-1.0));
}

TEST_CASE("independent uniform marginals") {
    Eigen::MatrixXd p = Eigen::MatrixXd::Constant(2, 2, 0.25);
    const HaralickFeatures f = haralick_features(p);
    CHECK(f.angular_second_moment == doctest::Approx(0.25));
    CHECK(f.contrast == doctest::Approx(0.5));
    CHECK(f.correlation == doctest::Approx(0.0));
    CHECK(f.entropy == doctest::Approx(2.0 * std::log(2.0)));
    // Independent marginals: joint entropy = HX + HY, so both information
    // measures vanish.
    CHECK(f.info_correlation_1 == doctest::Approx(0.0));
    CHECK(f.info_correlation_2 == doctest::Approx(0.0).epsilon(1e-7));
}

TEST_CASE("asm is at most 1 with equality only for a single nonzero cell") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const GrayImage img = random_image(6, 4, seed);
        const HaralickFeatures f =
            haralick_features(normalize(compute_glcm(img, {0, 1, true})));
        CHECK(f.angular_second_moment <= 1.0 + 1e-12);
        CHECK(f.entropy >= -1e-12);
        CHECK(f.contrast >= 0.0);
    }
    Eigen::MatrixXd single = Eigen::MatrixXd::Zero(3, 3);
    single(1, 2) = 1.0;
    CHECK(haralick_features(single).angular_second_moment == doctest::Approx(1.0));
    Eigen::MatrixXd two = Eigen::MatrixXd::Zero(3, 3);
    two(0, 0) = two(2, 2) = 0.5;
    CHECK(haralick_features(two).angular_second_moment < 1.0);
}

TEST_CASE("gray-level reversal leaves |i-j|-based features unchanged") {
    for (int side : {4, 5, 8}) {
        for (int levels : {2, 3, 6}) {
            const GrayImage img = random_image(side, levels, static_cast<std::uint64_t>(side * 31 + levels));
            GrayImage reversed;
            reversed.levels = levels;
            reversed.pixels = (levels - 1 - img.pixels.array()).matrix();
            for (const GlcmOffset& off : standard_offsets(true)) {
                const HaralickFeatures a =
                    haralick_features(normalize(compute_glcm(img, off)));
                const HaralickFeatures b =
                    haralick_features(normalize(compute_glcm(reversed, off)));
                CHECK(a.angular_second_moment ==
                      doctest::Approx(b.angular_second_moment).epsilon(1e-12));
                CHECK(a.contrast == doctest::Approx(b.contrast).epsilon(1e-12));
                CHECK(a.entropy == doctest::Approx(b.entropy).epsilon(1e-12));
                CHECK(a.inverse_difference_moment ==
                      doctest::Approx(b.inverse_difference_moment).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("symmetric co-occurrence has equal marginal moments") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const GrayImage img = random_image(6, 5, seed);
        const GlcmMatrix g = compute_glcm(img, {1, 1, true});
        const Eigen::MatrixXd p = normalize(g);
        const Eigen::VectorXd px = p.rowwise().sum();
        const Eigen::VectorXd py = p.colwise().sum();
        CHECK((px - py).cwiseAbs().maxCoeff() < 1e-14);
        const Eigen::VectorXd idx = Eigen::VectorXd::LinSpaced(5, 0, 4);
        const double mu_x = idx.dot(px), mu_y = idx.dot(py);
        CHECK(mu_x == doctest::Approx(mu_y).epsilon(1e-13));
        const double var_x = (idx.array() - mu_x).square().matrix().dot(px);
        const double var_y = (idx.array() - mu_y).square().matrix().dot(py);
        CHECK(var_x == doctest::Approx(var_y).epsilon(1e-12));
        // Joint-index variance coincides with the marginal variance.
        const HaralickFeatures f = haralick_features(p);
        CHECK(f.variance == doctest::Approx(var_x).epsilon(1e-12));
    }
}

TEST_CASE("patch vector: constant patch") {
    const GrayImage constant = make_gray_image(PixelMatrix::Zero(5, 5), 256);
    const PatchFeatures f =
        patch_feature_vector(constant, {{0, 1, false}}, OffsetAggregation::kConcat);
    REQUIRE(f.values.size() == 13);
    CHECK(f.values(0) == doctest::Approx(1.0));  // asm
    CHECK(f.values(1) == doctest::Approx(0.0));  // contrast
    CHECK(f.correlation_degenerate);
}

TEST_CASE("patch vector: checkerboard contrast is 1 for the unit row offset") {
    const PatchFeatures f = patch_feature_vector(checkerboard(4, 2), {{0, 1, false}},
                                                 OffsetAggregation::kConcat);
    CHECK(f.values(1) == doctest::Approx(1.0));
}

TEST_CASE("average aggregation is the mean of per-offset vectors") {
    const GrayImage img = random_image(8, 7, 2024);
    const std::vector<GlcmOffset> offsets = standard_offsets(true);
    const PatchFeatures avg = patch_feature_vector(img, offsets, OffsetAggregation::kAverage);
    const PatchFeatures cat = patch_feature_vector(img, offsets, OffsetAggregation::kConcat);
    REQUIRE(avg.values.size() == 13);
    REQUIRE(cat.values.size() == 52);
    for (int i = 0; i < 13; ++i) {
        const double mean = (cat.values(i) + cat.values(13 + i) + cat.values(26 + i) +
                             cat.values(39 + i)) / 4.0;
        CHECK(avg.values(i) == doctest::Approx(mean).epsilon(1e-14));
    }
    CHECK_THROWS_AS(patch_feature_vector(img, {}, OffsetAggregation::kAverage),
                    std::domain_error);
}

TEST_CASE("feature labels follow aggregation mode") {
    const auto offsets = standard_offsets(true);
    CHECK(feature_labels(offsets, OffsetAggregation::kAverage).size() == 13);
    const auto concat = feature_labels(offsets, OffsetAggregation::kConcat);
    REQUIRE(concat.size() == 52);
    CHECK(concat[0] == "asm_dr0_dc1");
    CHECK(concat[51] == "info_corr_2_dr1_dc-1");
}
