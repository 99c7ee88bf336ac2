#include "doctest.h"

#include <stdexcept>

#include "texdim/glcm.hpp"
#include "texdim/rng.hpp"

using namespace texdim;

namespace {

GrayImage image_from(std::initializer_list<std::initializer_list<int>> rows, int levels) {
    PixelMatrix m(static_cast<Eigen::Index>(rows.size()),
                  static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index r = 0;
    for (const auto& row : rows) {
        Eigen::Index c = 0;
        for (int v : row) m(r, c++) = v;
        ++r;
    }
    return make_gray_image(std::move(m), levels);
}

GrayImage random_image(int side, int levels, std::uint64_t seed) {
    CounterRng rng(seed, 0);
    PixelMatrix m(side, side);
    for (Eigen::Index r = 0; r < side; ++r)
        for (Eigen::Index c = 0; c < side; ++c)
            m(r, c) = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(levels));
    return make_gray_image(std::move(m), levels);
}

}  // namespace

TEST_CASE("pair counting on tiny images") {
    const GrayImage constant = image_from({{0, 0}, {0, 0}}, 2);
    const GlcmMatrix g1 = compute_glcm(constant, {0, 1, false});
    CHECK(g1.counts(0, 0) == 2);
    CHECK(g1.counts.sum() == g1.counts(0, 0));
    CHECK(g1.total == 2);

    const GrayImage checker = image_from({{0, 1}, {1, 0}}, 2);
    const GlcmMatrix g2 = compute_glcm(checker, {0, 1, false});
    CHECK(g2.counts(0, 1) == 1);
    CHECK(g2.counts(1, 0) == 1);
    CHECK(g2.total == 2);

    const GlcmMatrix g3 = compute_glcm(checker, {0, 1, true});
    CHECK(g3.counts(0, 1) == 2);
    CHECK(g3.counts(1, 0) == 2);
    CHECK(g3.total == 4);
}

TEST_CASE("pair total matches (h-|dr|)(w-|dc|) for every standard offset") {
    const GrayImage img = random_image(7, 4, 11);
    for (const GlcmOffset& off : standard_offsets(false)) {
        const GlcmMatrix g = compute_glcm(img, off);
        CHECK(g.total == (7 - std::abs(off.dr)) * static_cast<std::int64_t>(7 - std::abs(off.dc)));
    }
    for (const GlcmOffset& off : standard_offsets(true)) {
        const GlcmMatrix g = compute_glcm(img, off);
        CHECK(g.total == 2 * (7 - std::abs(off.dr)) * static_cast<std::int64_t>(7 - std::abs(off.dc)));
        CHECK((g.counts - g.counts.transpose()).cwiseAbs().sum() == 0);
    }
}

TEST_CASE("offset and level preconditions") {
    const GrayImage img = random_image(4, 3, 5);
    CHECK_THROWS_AS(compute_glcm(img, {0, 0, false}), std::domain_error);
    CHECK_THROWS_AS(compute_glcm(img, {0, 4, false}), std::domain_error);
    CHECK_THROWS_AS(compute_glcm(img, {-4, 0, false}), std::domain_error);
    CHECK_THROWS_AS(make_gray_image(PixelMatrix::Zero(2, 2), 1), std::domain_error);
    CHECK_THROWS_AS(make_gray_image((PixelMatrix(1, 2) << 0, 3).finished(), 3),
                    std::domain_error);
}

TEST_CASE("gluing: per-row pair sets sum to the whole for a row offset") {
    const GrayImage img = random_image(6, 3, 99);
    const GlcmOffset off{0, 1, false};
    const GlcmMatrix whole = compute_glcm(img, off);
    CountMatrix acc = CountMatrix::Zero(3, 3);
    for (int r = 0; r < 6; ++r) {
        GrayImage row;
        row.levels = img.levels;
        row.pixels = img.pixels.row(r);
        acc += compute_glcm(row, off).counts;
    }
    CHECK((whole.counts - acc).cwiseAbs().sum() == 0);
}

TEST_CASE("translation: identical pair multisets give identical counts") {
    // The same texture embedded at two positions of a larger canvas crops
    // back to rasters with equal pair sets.
    const GrayImage base = random_image(5, 4, 123);
    PixelMatrix canvas = PixelMatrix::Zero(9, 9);
    canvas.block(1, 2, 5, 5) = base.pixels;
    GrayImage moved;
    moved.levels = base.levels;
    moved.pixels = canvas.block(1, 2, 5, 5);
    for (const GlcmOffset& off : standard_offsets(false)) {
        const GlcmMatrix a = compute_glcm(base, off);
        const GlcmMatrix b = compute_glcm(moved, off);
        CHECK((a.counts - b.counts).cwiseAbs().sum() == 0);
    }
}

TEST_CASE("normalization") {
    GlcmMatrix g;
    g.levels = 2;
    g.counts = (CountMatrix(2, 2) << 2, 0, 0, 0).finished();
    g.total = 2;
    Eigen::MatrixXd p = normalize(g);
    CHECK(p(0, 0) == 1.0);
    CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-12));

    g.counts = (CountMatrix(2, 2) << 0, 1, 1, 0).finished();
    p = normalize(g);
    CHECK(p(0, 1) == 0.5);
    CHECK(p(1, 0) == 0.5);

    g.counts = (CountMatrix(2, 2) << 1, 1, 1, 1).finished();
    g.total = 4;
    p = normalize(g);
    CHECK((p.array() == 0.25).all());

    g.counts.setZero();
    g.total = 0;
    CHECK_THROWS_AS(normalize(g), std::domain_error);
}

TEST_CASE("probabilities sum to one on random images") {
    for (int side : {4, 6, 8}) {
        const GrayImage img = random_image(side, 5, static_cast<std::uint64_t>(side));
        for (const GlcmOffset& off : standard_offsets(true)) {
            const Eigen::MatrixXd p = normalize(compute_glcm(img, off));
            CHECK(std::abs(p.sum() - 1.0) < 1e-12);
        }
    }
}
