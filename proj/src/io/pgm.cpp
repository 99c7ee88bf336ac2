#include "texdim/io/pgm.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

namespace texdim {

namespace {

// Next whitespace-delimited token, skipping '#' comment lines.
std::string next_token(std::istream& in) {
    std::string token;
    for (;;) {
        const int c = in.get();
        if (c == EOF) break;
        if (c == '#') {
            std::string comment;
            std::getline(in, comment);
            continue;
        }
        if (std::isspace(c)) {
            if (!token.empty()) break;
            continue;
        }
        token += static_cast<char>(c);
    }
    return token;
}

int parse_int_field(const std::string& token, int min_value, const char* what) {
    try {
        const long v = std::stol(token);
        if (v < min_value || v > 1 << 24) throw std::out_of_range(what);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("PGM: bad ") + what + " field '" + token + "'");
    }
}

}  // namespace

RawGray read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open PGM file: " + path);

    const std::string magic = next_token(in);
    const bool binary = magic == "P5";
    if (!binary && magic != "P2")
        throw std::runtime_error("PGM: unsupported magic '" + magic + "' in " + path);

    const int width = parse_int_field(next_token(in), 1, "width");
    const int height = parse_int_field(next_token(in), 1, "height");
    const int maxval = parse_int_field(next_token(in), 1, "maxval");
    if (maxval > 65535) throw std::runtime_error("PGM: maxval > 65535 in " + path);

    RawGray out;
    out.maxval = maxval;
    out.values.resize(height, width);

    if (binary) {
        // The header's single whitespace byte was already consumed by next_token.
        const int bytes = maxval > 255 ? 2 : 1;
        std::string buf(static_cast<std::size_t>(width) * height * bytes, '\0');
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        if (in.gcount() != static_cast<std::streamsize>(buf.size()))
            throw std::runtime_error("PGM: truncated pixel data in " + path);
        std::size_t pos = 0;
        for (int r = 0; r < height; ++r)
            for (int c = 0; c < width; ++c) {
                int v = static_cast<unsigned char>(buf[pos++]);
                if (bytes == 2) v = (v << 8) | static_cast<unsigned char>(buf[pos++]);
                if (v > maxval)
                    throw std::runtime_error("PGM: pixel above maxval in " + path);
                out.values(r, c) = v;
            }
    } else {
        for (int r = 0; r < height; ++r)
            for (int c = 0; c < width; ++c) {
                const std::string token = next_token(in);
                if (token.empty())
                    throw std::runtime_error("PGM: truncated pixel data in " + path);
                const int v = parse_int_field(token, 0, "pixel");
                if (v > maxval)
                    throw std::runtime_error("PGM: pixel above maxval in " + path);
                out.values(r, c) = v;
            }
    }
    return out;
}

void write_pgm(const std::string& path, const PixelMatrix& values, int maxval) {
    if (maxval < 1 || maxval > 65535)
        throw std::domain_error("write_pgm: maxval must be in [1, 65535]");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot create PGM file: " + path);
    out << "P5\n" << values.cols() << " " << values.rows() << "\n" << maxval << "\n";
    for (Eigen::Index r = 0; r < values.rows(); ++r)
        for (Eigen::Index c = 0; c < values.cols(); ++c) {
            const int v = values(r, c);
            if (v < 0 || v > maxval)
                throw std::domain_error("write_pgm: pixel outside [0, maxval]");
            if (maxval > 255) out.put(static_cast<char>((v >> 8) & 0xFF));
            out.put(static_cast<char>(v & 0xFF));
        }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace texdim
