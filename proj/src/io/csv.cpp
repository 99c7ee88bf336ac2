#include "texdim/io/csv.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace texdim {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

namespace {

bool parse_double(const std::string& field, double* out) {
    if (field.empty()) return false;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size()) return false;
    *out = v;
    return true;
}

const std::set<std::string>& bookkeeping_columns() {
    static const std::set<std::string> cols = {"dataset", "image", "win_row",
                                               "win_col", "flags"};
    return cols;
}

}  // namespace

PointCloud read_point_cloud_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::vector<bool> keep;  // per column, decided on the first row
    std::string line;
    bool first = true;
    std::size_t n_cols = 0;

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (first) {
            first = false;
            bool numeric = true;
            std::vector<double> parsed(fields.size());
            for (std::size_t i = 0; i < fields.size(); ++i)
                numeric = numeric && parse_double(fields[i], &parsed[i]);
            keep.assign(fields.size(), true);
            n_cols = fields.size();
            if (numeric) {
                rows.push_back(std::move(parsed));
            } else {
                for (std::size_t i = 0; i < fields.size(); ++i)
                    keep[i] = !bookkeeping_columns().count(fields[i]);
            }
            continue;
        }
        if (fields.size() != n_cols)
            throw std::runtime_error("point cloud CSV: ragged row with " +
                                     std::to_string(fields.size()) + " fields, expected " +
                                     std::to_string(n_cols));
        std::vector<double> parsed;
        parsed.reserve(fields.size());
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (!keep[i]) continue;
            double v = 0.0;
            if (!parse_double(fields[i], &v))
                throw std::runtime_error("point cloud CSV: non-numeric field '" +
                                         fields[i] + "'");
            parsed.push_back(v);
        }
        rows.push_back(std::move(parsed));
    }

    if (rows.empty()) throw std::runtime_error("point cloud CSV: no data rows");
    const std::size_t dim = rows.front().size();
    if (dim == 0) throw std::runtime_error("point cloud CSV: no numeric columns");
    PointCloud cloud(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != dim)
            throw std::runtime_error("point cloud CSV: inconsistent row width");
        for (std::size_t c = 0; c < dim; ++c)
            cloud(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
    return cloud;
}

PointCloud read_point_cloud_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV file: " + path);
    return read_point_cloud_csv(in);
}

}  // namespace texdim
