#include "doctest.h"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "texdim/ingest.hpp"
#include "texdim/io/csv.hpp"
#include "texdim/io/idx.hpp"
#include "texdim/io/pgm.hpp"
#include "texdim/io/png_io.hpp"
#include "texdim/windows.hpp"

using namespace texdim;

namespace {

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "texdim_io_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

PixelMatrix ramp(int rows, int cols, int maxval) {
    PixelMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = (r * cols + c) % (maxval + 1);
    return m;
}

}  // namespace

TEST_CASE("pgm binary round trip, both depths") {
    const auto dir = temp_dir();
    for (int maxval : {255, 65535}) {
        const PixelMatrix original = ramp(9, 7, maxval);
        const std::string path = (dir / ("roundtrip_" + std::to_string(maxval) + ".pgm")).string();
        write_pgm(path, original, maxval);
        const RawGray loaded = read_pgm(path);
        CHECK(loaded.maxval == maxval);
        CHECK((loaded.values - original).cwiseAbs().sum() == 0);
    }
}

TEST_CASE("pgm ascii parsing with comments") {
    const auto path = temp_dir() / "ascii.pgm";
    std::ofstream out(path);
    out << "P2\n# comment line\n3 2\n# another\n15\n0 7 15\n3 0 9\n";
    out.close();
    const RawGray loaded = read_pgm(path.string());
    CHECK(loaded.maxval == 15);
    REQUIRE(loaded.values.rows() == 2);
    REQUIRE(loaded.values.cols() == 3);
    CHECK(loaded.values(0, 1) == 7);
    CHECK(loaded.values(1, 2) == 9);
}

TEST_CASE("pgm error paths") {
    const auto dir = temp_dir();
    {
        std::ofstream out(dir / "bad_magic.pgm");
        out << "P6\n2 2\n255\n";
    }
    CHECK_THROWS(read_pgm((dir / "bad_magic.pgm").string()));
    {
        std::ofstream out(dir / "truncated.pgm", std::ios::binary);
        out << "P5\n4 4\n255\n";
        out << "ab";  // 2 of 16 bytes
    }
    CHECK_THROWS(read_pgm((dir / "truncated.pgm").string()));
    CHECK_THROWS(read_pgm((dir / "missing.pgm").string()));
}

TEST_CASE("png gray and rgb round trips") {
    const auto dir = temp_dir();
    const PixelMatrix gray = ramp(12, 5, 255);
    write_png_gray((dir / "gray.png").string(), gray);
    const RawGray loaded = read_png((dir / "gray.png").string());
    CHECK(loaded.maxval == 255);
    // Luminance of (v, v, v) is v: grayscale survives the RGB path intact.
    CHECK((loaded.values - gray).cwiseAbs().sum() == 0);

    // A pure red / pure green / pure blue stripe maps through the
    // luminance weights.
    PixelMatrix rgb(1, 9);
    rgb << 255, 0, 0, 0, 255, 0, 0, 0, 255;
    write_png_rgb((dir / "stripes.png").string(), rgb);
    const RawGray stripes = read_png((dir / "stripes.png").string());
    CHECK(stripes.values(0, 0) == luminance_level(255, 0, 0));   // 76
    CHECK(stripes.values(0, 1) == luminance_level(0, 255, 0));   // 150
    CHECK(stripes.values(0, 2) == luminance_level(0, 0, 255));   // 29
}

namespace {

void write_be32(std::ostream& out, std::uint32_t v) {
    out.put(static_cast<char>((v >> 24) & 0xFF));
    out.put(static_cast<char>((v >> 16) & 0xFF));
    out.put(static_cast<char>((v >> 8) & 0xFF));
    out.put(static_cast<char>(v & 0xFF));
}

}  // namespace

TEST_CASE("idx reader on synthesized archives") {
    const auto dir = temp_dir();
    const auto path = (dir / "images.idx").string();
    {
        std::ofstream out(path, std::ios::binary);
        write_be32(out, 0x00000803);
        write_be32(out, 2);  // images
        write_be32(out, 3);  // rows
        write_be32(out, 2);  // cols
        for (int v = 0; v < 12; ++v) out.put(static_cast<char>(v * 20));
    }
    const auto images = read_idx_images(path);
    REQUIRE(images.size() == 2);
    CHECK(images[0](0, 0) == 0);
    CHECK(images[0](2, 1) == 100);
    CHECK(images[1](0, 0) == 120);
    CHECK(images[1](2, 1) == 220);

    {
        std::ofstream out(dir / "bad.idx", std::ios::binary);
        write_be32(out, 0x00000801);  // label magic: unsupported here
        write_be32(out, 2);
    }
    CHECK_THROWS(read_idx_images((dir / "bad.idx").string()));

    {
        std::ofstream out(dir / "short.idx", std::ios::binary);
        write_be32(out, 0x00000803);
        write_be32(out, 5);
        write_be32(out, 4);
        write_be32(out, 4);
        out.put(char(1));  // 1 of 80 bytes
    }
    CHECK_THROWS(read_idx_images((dir / "short.idx").string()));
}

TEST_CASE("csv quoting and splitting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    const auto fields = split_csv_line("a,\"b,c\",\"d\"\"e\",f");
    REQUIRE(fields.size() == 4);
    CHECK(fields[0] == "a");
    CHECK(fields[1] == "b,c");
    CHECK(fields[2] == "d\"e");
    CHECK(fields[3] == "f");
}

TEST_CASE("point cloud csv: header detection and bookkeeping columns") {
    std::istringstream with_header(
        "dataset,image,win_row,win_col,asm,contrast,flags\n"
        "a.png,0,0,0,1.0,0.0,\n"
        "a.png,0,0,1,0.5,1.25,corr_degenerate\n");
    const PointCloud cloud = read_point_cloud_csv(with_header);
    REQUIRE(cloud.rows() == 2);
    REQUIRE(cloud.cols() == 2);
    CHECK(cloud(0, 0) == 1.0);
    CHECK(cloud(1, 1) == 1.25);

    std::istringstream headerless("1,2\n3,4\n5,6\n");
    const PointCloud plain = read_point_cloud_csv(headerless);
    REQUIRE(plain.rows() == 3);
    CHECK(plain(2, 1) == 6.0);

    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS(read_point_cloud_csv(ragged));
    std::istringstream empty("");
    CHECK_THROWS(read_point_cloud_csv(empty));
}

TEST_CASE("full-precision doubles survive a csv round trip") {
    const double value = 0.1234567890123456789;
    std::istringstream in("x\n" + format_double(value) + "\n");
    const PointCloud cloud = read_point_cloud_csv(in);
    CHECK(cloud(0, 0) == value);
}

TEST_CASE("window grids") {
    CHECK(window_grid(28, 28, 28, 1).size() == 1);
    CHECK(window_grid(30, 30, 28, 1).size() == 9);
    CHECK(window_grid(28, 56, 28, 28).size() == 2);
    CHECK_THROWS_AS(window_grid(10, 10, 28, 1), std::domain_error);
    CHECK_THROWS_AS(window_grid(10, 10, 4, 0), std::domain_error);

    const GrayImage img = make_gray_image(ramp(6, 6, 9), 10);
    const auto coords = window_grid(img.height(), img.width(), 3, 3);
    REQUIRE(coords.size() == 4);
    const GrayImage w = extract_window(img, coords[3], 3);
    CHECK(w.pixels(0, 0) == img.pixels(3, 3));
    CHECK(w.levels == img.levels);
    CHECK_THROWS_AS(extract_window(img, {5, 5}, 3), std::domain_error);
}

TEST_CASE("ingestion walks directories in sorted order and quantizes") {
    namespace fs = std::filesystem;
    const auto dir = temp_dir() / "ingest";
    fs::remove_all(dir);
    fs::create_directories(dir);

    write_pgm((dir / "b_levels.pgm").string(), ramp(4, 4, 65535), 65535);
    write_png_gray((dir / "a_gray.png").string(), ramp(4, 4, 255));
    {
        std::ofstream out(dir / "c_broken.pgm", std::ios::binary);
        out << "P5\n4 4\n255\nxx";
    }

    IngestOptions options;
    options.kappa = 256;
    const IngestResult result = ingest_images({dir.string()}, options);
    REQUIRE(result.images.size() == 2);
    CHECK(result.images[0].source.find("a_gray.png") != std::string::npos);
    CHECK(result.images[1].source.find("b_levels.pgm") != std::string::npos);
    CHECK(result.errors.size() == 1);

    // 16-bit input binned uniformly onto 256 levels.
    const GrayImage& deep = result.images[1].image;
    CHECK(deep.levels == 256);
    CHECK(deep.pixels.maxCoeff() < 256);
    CHECK(deep.pixels(0, 1) == 0);  // raw value 1 of 65536 collapses to bin 0

    IngestOptions strict = options;
    strict.strict = true;
    CHECK_THROWS(ingest_images({dir.string()}, strict));
}
