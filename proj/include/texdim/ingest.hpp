#pragma once

#include <string>
#include <vector>

#include "texdim/image.hpp"

namespace texdim {

struct IngestOptions {
    int kappa = 256;
    bool strict = false;  // fail the run on the first unreadable file
};

struct IngestedImage {
    std::string source;  // file path
    int index = 0;       // position within multi-image containers
    GrayImage image;
};

struct IngestResult {
    std::vector<IngestedImage> images;
    std::vector<std::string> errors;  // per-file messages collected when not strict
};

// Loads PGM/PNG/IDX inputs (format detected from content), converts color
// to luminance, and quantizes to kappa levels. Directories are walked in
// sorted order for reproducible output.
IngestResult ingest_images(const std::vector<std::string>& paths,
                           const IngestOptions& options);

}  // namespace texdim
