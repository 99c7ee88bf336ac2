#include "texdim/io/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace texdim {

RawGray read_png(const std::string& path) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&image, path.c_str()))
        throw std::runtime_error("PNG: cannot read " + path + ": " + image.message);

    image.format = PNG_FORMAT_RGB;  // normalize depth/palette/alpha to 8-bit RGB
    std::vector<unsigned char> buffer(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
        const std::string message = image.message;
        png_image_free(&image);
        throw std::runtime_error("PNG: decode failed for " + path + ": " + message);
    }

    RawGray out;
    out.maxval = 255;
    out.values.resize(image.height, image.width);
    for (png_uint_32 r = 0; r < image.height; ++r) {
        const unsigned char* row = buffer.data() + static_cast<std::size_t>(r) * image.width * 3;
        for (png_uint_32 c = 0; c < image.width; ++c) {
            out.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                luminance_level(row[c * 3], row[c * 3 + 1], row[c * 3 + 2]);
        }
    }
    return out;
}

namespace {

void write_png_buffer(const std::string& path, png_uint_32 width, png_uint_32 height,
                      png_uint_32 format, const unsigned char* pixels) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    image.width = width;
    image.height = height;
    image.format = format;
    if (!png_image_write_to_file(&image, path.c_str(), 0, pixels, 0, nullptr))
        throw std::runtime_error("PNG: write failed for " + path + ": " + image.message);
}

}  // namespace

void write_png_gray(const std::string& path, const PixelMatrix& values) {
    std::vector<unsigned char> buffer(static_cast<std::size_t>(values.size()));
    std::size_t pos = 0;
    for (Eigen::Index r = 0; r < values.rows(); ++r)
        for (Eigen::Index c = 0; c < values.cols(); ++c) {
            const int v = values(r, c);
            if (v < 0 || v > 255)
                throw std::domain_error("write_png_gray: pixel outside [0, 255]");
            buffer[pos++] = static_cast<unsigned char>(v);
        }
    write_png_buffer(path, static_cast<png_uint_32>(values.cols()),
                     static_cast<png_uint_32>(values.rows()), PNG_FORMAT_GRAY,
                     buffer.data());
}

void write_png_rgb(const std::string& path, const PixelMatrix& rgb) {
    if (rgb.cols() % 3 != 0)
        throw std::domain_error("write_png_rgb: cols must be 3 * width");
    std::vector<unsigned char> buffer(static_cast<std::size_t>(rgb.size()));
    std::size_t pos = 0;
    for (Eigen::Index r = 0; r < rgb.rows(); ++r)
        for (Eigen::Index c = 0; c < rgb.cols(); ++c) {
            const int v = rgb(r, c);
            if (v < 0 || v > 255)
                throw std::domain_error("write_png_rgb: channel outside [0, 255]");
            buffer[pos++] = static_cast<unsigned char>(v);
        }
    write_png_buffer(path, static_cast<png_uint_32>(rgb.cols() / 3),
                     static_cast<png_uint_32>(rgb.rows()), PNG_FORMAT_RGB, buffer.data());
}

}  // namespace texdim
