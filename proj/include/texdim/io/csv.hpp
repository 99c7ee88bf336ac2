#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "texdim/idim.hpp"

namespace texdim {

// RFC 4180 field quoting: fields containing comma, quote, or newline are
// quoted with embedded quotes doubled.
std::string csv_field(const std::string& value);

// %.17g: round-trip exact, so re-ingested CSVs reproduce in-memory results.
std::string format_double(double value);

// Parses a CSV of one point per row. A first row with any non-numeric field
// is treated as a header; columns labeled dataset/image/win_row/win_col/flags
// (the feature-export bookkeeping columns) are dropped.
PointCloud read_point_cloud_csv(std::istream& in);
PointCloud read_point_cloud_csv_file(const std::string& path);

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace texdim
