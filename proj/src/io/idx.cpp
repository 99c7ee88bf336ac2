#include "texdim/io/idx.hpp"

#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace texdim {

namespace {

std::uint32_t read_be32(std::istream& in, const std::string& path) {
    unsigned char bytes[4];
    in.read(reinterpret_cast<char*>(bytes), 4);
    if (in.gcount() != 4) throw std::runtime_error("IDX: truncated header in " + path);
    return (static_cast<std::uint32_t>(bytes[0]) << 24) |
           (static_cast<std::uint32_t>(bytes[1]) << 16) |
           (static_cast<std::uint32_t>(bytes[2]) << 8) |
           static_cast<std::uint32_t>(bytes[3]);
}

}  // namespace

std::vector<PixelMatrix> read_idx_images(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open IDX file: " + path);

    const std::uint32_t magic = read_be32(in, path);
    if (magic != 0x00000803u)
        throw std::runtime_error("IDX: unsupported magic (expected 0x00000803, "
                                 "unsigned-byte images) in " + path);
    const std::uint32_t count = read_be32(in, path);
    const std::uint32_t rows = read_be32(in, path);
    const std::uint32_t cols = read_be32(in, path);
    if (rows == 0 || cols == 0 || rows > 1 << 16 || cols > 1 << 16)
        throw std::runtime_error("IDX: implausible dimensions in " + path);

    std::vector<PixelMatrix> images;
    images.reserve(count);
    std::vector<unsigned char> buffer(static_cast<std::size_t>(rows) * cols);
    for (std::uint32_t i = 0; i < count; ++i) {
        in.read(reinterpret_cast<char*>(buffer.data()),
                static_cast<std::streamsize>(buffer.size()));
        if (in.gcount() != static_cast<std::streamsize>(buffer.size()))
            throw std::runtime_error("IDX: truncated image " + std::to_string(i) +
                                     " in " + path);
        PixelMatrix img(rows, cols);
        std::size_t pos = 0;
        for (std::uint32_t r = 0; r < rows; ++r)
            for (std::uint32_t c = 0; c < cols; ++c)
                img(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    buffer[pos++];
        images.push_back(std::move(img));
    }
    return images;
}

}  // namespace texdim
