#include "texdim/ingest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "texdim/io/idx.hpp"
#include "texdim/io/pgm.hpp"
#include "texdim/io/png_io.hpp"

namespace texdim {

namespace {

enum class FileKind { kPgm, kPng, kIdx, kUnknown };

FileKind sniff(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    unsigned char head[4] = {0, 0, 0, 0};
    in.read(reinterpret_cast<char*>(head), 4);
    if (in.gcount() < 2) return FileKind::kUnknown;
    if (head[0] == 'P' && (head[1] == '5' || head[1] == '2')) return FileKind::kPgm;
    if (head[0] == 0x89 && head[1] == 'P' && head[2] == 'N' && head[3] == 'G')
        return FileKind::kPng;
    if (head[0] == 0 && head[1] == 0 && head[2] == 0x08 && head[3] == 0x03)
        return FileKind::kIdx;
    return FileKind::kUnknown;
}

void ingest_file(const std::string& path, const IngestOptions& options,
                 IngestResult& result) {
    switch (sniff(path)) {
        case FileKind::kPgm: {
            const RawGray raw = read_pgm(path);
            result.images.push_back(
                {path, 0, quantize(raw.values, raw.maxval + 1, options.kappa)});
            break;
        }
        case FileKind::kPng: {
            const RawGray raw = read_png(path);
            result.images.push_back(
                {path, 0, quantize(raw.values, raw.maxval + 1, options.kappa)});
            break;
        }
        case FileKind::kIdx: {
            const std::vector<PixelMatrix> rasters = read_idx_images(path);
            int index = 0;
            for (const PixelMatrix& raster : rasters)
                result.images.push_back(
                    {path, index++, quantize(raster, 256, options.kappa)});
            break;
        }
        case FileKind::kUnknown:
            throw std::runtime_error("unrecognized image format: " + path);
    }
}

}  // namespace

IngestResult ingest_images(const std::vector<std::string>& paths,
                           const IngestOptions& options) {
    namespace fs = std::filesystem;
    IngestResult result;

    std::vector<std::string> files;
    for (const std::string& path : paths) {
        if (fs::is_directory(path)) {
            std::vector<std::string> entries;
            for (const auto& entry : fs::directory_iterator(path))
                if (entry.is_regular_file()) entries.push_back(entry.path().string());
            std::sort(entries.begin(), entries.end());
            files.insert(files.end(), entries.begin(), entries.end());
        } else {
            files.push_back(path);
        }
    }

    for (const std::string& file : files) {
        try {
            ingest_file(file, options, result);
        } catch (const std::exception& e) {
            if (options.strict) throw;
            result.errors.push_back(e.what());
        }
    }
    return result;
}

}  // namespace texdim
