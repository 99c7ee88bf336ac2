// Command-line front end: every subcommand is a thin, reproducible wrapper
// over the library. JSON output is canonical (sorted keys, 17 significant
// digits); CSV uses RFC 4180 quoting. A run is fully determined by its flags
// plus input files.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "texdim/capacity.hpp"
#include "texdim/counting.hpp"
#include "texdim/geometry.hpp"
#include "texdim/glcm.hpp"
#include "texdim/haralick.hpp"
#include "texdim/idim.hpp"
#include "texdim/ingest.hpp"
#include "texdim/io/csv.hpp"
#include "texdim/parallel.hpp"
#include "texdim/report/json.hpp"
#include "texdim/rng.hpp"
#include "texdim/version.hpp"
#include "texdim/windows.hpp"

namespace {

using namespace texdim;

struct OutputTarget {
    std::string path;  // empty: stdout

    void write(const std::string& payload) const {
        if (path.empty()) {
            std::cout << payload;
            if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << payload;
        if (!payload.empty() && payload.back() != '\n') out << '\n';
    }
};

Json envelope(Json config, Json results, Json flags) {
    Json root = Json::object();
    root.set("tool", Json::string(kToolName));
    root.set("version", Json::string(kToolVersion));
    root.set("config", std::move(config));
    root.set("results", std::move(results));
    root.set("flags", std::move(flags));
    return root;
}

std::vector<GlcmOffset> parse_offsets(const std::string& text, bool symmetric) {
    if (text.empty()) return standard_offsets(symmetric);
    std::vector<GlcmOffset> offsets;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, ';')) {
        const auto comma = part.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("bad --offsets entry '" + part +
                                     "' (expected dr,dc pairs separated by ';')");
        GlcmOffset off;
        off.dr = std::stoi(part.substr(0, comma));
        off.dc = std::stoi(part.substr(comma + 1));
        off.symmetric = symmetric;
        if (off.dr == 0 && off.dc == 0)
            throw std::runtime_error("bad --offsets entry '0,0'");
        offsets.push_back(off);
    }
    if (offsets.empty()) throw std::runtime_error("--offsets parsed to nothing");
    return offsets;
}

Json offsets_json(const std::vector<GlcmOffset>& offsets) {
    Json arr = Json::array();
    for (const GlcmOffset& off : offsets) {
        Json o = Json::object();
        o.set("dr", Json::integer(off.dr));
        o.set("dc", Json::integer(off.dc));
        o.set("symmetric", Json::boolean(off.symmetric));
        arr.push(std::move(o));
    }
    return arr;
}

// ---------------------------------------------------------------- features

struct FeatureOptions {
    std::vector<std::string> inputs;
    std::string output;
    std::string format = "csv";
    int window = 28;
    int stride = 0;  // 0: window size
    int kappa = 256;
    std::string offsets_text;
    bool asymmetric = false;
    std::string aggregation = "avg";
    bool strict = false;
};

int run_features(const FeatureOptions& opt) {
    const std::vector<GlcmOffset> offsets = parse_offsets(opt.offsets_text, !opt.asymmetric);
    const OffsetAggregation agg = opt.aggregation == "concat"
                                      ? OffsetAggregation::kConcat
                                      : OffsetAggregation::kAverage;
    const int stride = opt.stride > 0 ? opt.stride : opt.window;

    IngestOptions ingest_options;
    ingest_options.kappa = opt.kappa;
    ingest_options.strict = opt.strict;
    const IngestResult ingested = ingest_images(opt.inputs, ingest_options);
    if (ingested.images.empty())
        throw std::runtime_error("no readable images among the inputs");

    struct Row {
        const IngestedImage* image;
        WindowCoord at;
    };
    std::vector<Row> rows;
    for (const IngestedImage& img : ingested.images) {
        for (const WindowCoord& at :
             window_grid(img.image.height(), img.image.width(), opt.window, stride))
            rows.push_back({&img, at});
    }

    std::vector<PatchFeatures> features(rows.size());
    parallel_chunks(rows.size(), 16, [&](std::size_t first, std::size_t last) {
        for (std::size_t i = first; i < last; ++i) {
            const GrayImage patch =
                extract_window(rows[i].image->image, rows[i].at, opt.window);
            features[i] = patch_feature_vector(patch, offsets, agg);
        }
    });

    const std::vector<std::string> labels = feature_labels(offsets, agg);
    auto row_flags = [](const PatchFeatures& f) {
        std::string flags;
        if (f.correlation_degenerate) flags += "correlation_degenerate";
        if (f.info_correlation_1_degenerate) {
            if (!flags.empty()) flags += ';';
            flags += "info_corr_1_degenerate";
        }
        return flags;
    };

    if (opt.format == "csv") {
        std::string out = "dataset,image,win_row,win_col";
        for (const std::string& label : labels) out += "," + csv_field(label);
        out += ",flags\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out += csv_field(rows[i].image->source);
            out += ',' + std::to_string(rows[i].image->index);
            out += ',' + std::to_string(rows[i].at.row);
            out += ',' + std::to_string(rows[i].at.col);
            for (Eigen::Index j = 0; j < features[i].values.size(); ++j)
                out += ',' + format_double(features[i].values(j));
            out += ',' + csv_field(row_flags(features[i]));
            out += '\n';
        }
        OutputTarget{opt.output}.write(out);
    } else {
        Json header = Json::array();
        header.push(Json::string("dataset"));
        header.push(Json::string("image"));
        header.push(Json::string("win_row"));
        header.push(Json::string("win_col"));
        for (const std::string& label : labels) header.push(Json::string(label));
        header.push(Json::string("flags"));
        Json data = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Json row = Json::array();
            row.push(Json::string(rows[i].image->source));
            row.push(Json::integer(rows[i].image->index));
            row.push(Json::integer(rows[i].at.row));
            row.push(Json::integer(rows[i].at.col));
            for (Eigen::Index j = 0; j < features[i].values.size(); ++j)
                row.push(Json::number(features[i].values(j)));
            row.push(Json::string(row_flags(features[i])));
            data.push(std::move(row));
        }
        Json results = Json::object();
        results.set("header", std::move(header));
        results.set("rows", std::move(data));
        Json errors = Json::array();
        for (const std::string& message : ingested.errors)
            errors.push(Json::string(message));
        results.set("ingest_errors", std::move(errors));

        Json config = Json::object();
        config.set("window", Json::integer(opt.window));
        config.set("stride", Json::integer(stride));
        config.set("kappa", Json::integer(opt.kappa));
        config.set("aggregation", Json::string(agg == OffsetAggregation::kConcat
                                                   ? "concat"
                                                   : "avg"));
        config.set("offsets", offsets_json(offsets));
        Json flags = Json::array();
        if (!ingested.errors.empty()) flags.push(Json::string("ingest_errors"));
        OutputTarget{opt.output}.write(
            envelope(std::move(config), std::move(results), std::move(flags)).dump());
    }
    if (!ingested.errors.empty())
        for (const std::string& message : ingested.errors)
            std::cerr << "warning: " << message << '\n';
    return 0;
}

// -------------------------------------------------------------------- idim

struct IdimOptions {
    std::vector<std::string> inputs;
    std::string output;
    int k_min = 10;
    int k_max = 20;
    bool harmonic = false;
    std::int64_t sample = 0;  // 0: use everything
    std::uint64_t seed = 0;
    // image-path settings (texture estimate)
    int window = 28;
    int stride = 0;
    int kappa = 256;
    std::string offsets_text;
    bool asymmetric = false;
    std::string aggregation = "avg";
    bool strict = false;
};

PointCloud subsample_rows(const PointCloud& cloud, std::int64_t sample,
                          std::uint64_t seed) {
    if (sample <= 0 || sample >= cloud.rows()) return cloud;
    // Seeded Fisher-Yates prefix over row indices.
    std::vector<Eigen::Index> index(static_cast<std::size_t>(cloud.rows()));
    for (std::size_t i = 0; i < index.size(); ++i)
        index[i] = static_cast<Eigen::Index>(i);
    CounterRng rng(seed, 0x53414D504CULL);
    for (std::int64_t i = 0; i < sample; ++i) {
        const std::uint64_t j = static_cast<std::uint64_t>(i) +
                                rng.next_u64() %
                                    static_cast<std::uint64_t>(cloud.rows() - i);
        std::swap(index[static_cast<std::size_t>(i)], index[static_cast<std::size_t>(j)]);
    }
    PointCloud out(sample, cloud.cols());
    for (std::int64_t i = 0; i < sample; ++i)
        out.row(i) = cloud.row(index[static_cast<std::size_t>(i)]);
    return out;
}

Json estimate_json(const IdimEstimate& estimate) {
    Json obj = Json::object();
    obj.set("global", Json::number(estimate.global_value));
    Json per_k = Json::object();
    for (const auto& [k, value] : estimate.per_k)
        per_k.set(std::to_string(k), Json::number(value));
    obj.set("per_k", std::move(per_k));
    obj.set("merged_duplicates", Json::integer(estimate.merged_duplicates));
    obj.set("points_used", Json::integer(estimate.points_used));
    return obj;
}

bool looks_like_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    unsigned char head[4] = {0, 0, 0, 0};
    in.read(reinterpret_cast<char*>(head), 4);
    if (in.gcount() < 2) return false;
    if (head[0] == 'P' && (head[1] == '5' || head[1] == '2')) return false;
    if (head[0] == 0x89 && head[1] == 'P') return false;
    if (head[0] == 0 && head[1] == 0) return false;
    return true;
}

int run_idim(const IdimOptions& opt) {
    IdimConfig config{opt.k_min, opt.k_max};
    config.harmonic_average = opt.harmonic;

    Json results = Json::object();
    Json config_echo = Json::object();
    config_echo.set("k_min", Json::integer(opt.k_min));
    config_echo.set("k_max", Json::integer(opt.k_max));
    config_echo.set("harmonic", Json::boolean(opt.harmonic));
    config_echo.set("sample", Json::integer(opt.sample));
    config_echo.set("seed", Json::integer(static_cast<std::int64_t>(opt.seed)));

    if (opt.inputs.size() == 1 && std::filesystem::is_regular_file(opt.inputs[0]) &&
        looks_like_csv(opt.inputs[0])) {
        const PointCloud cloud = subsample_rows(
            read_point_cloud_csv_file(opt.inputs[0]), opt.sample, opt.seed);
        results.set("cloud", estimate_json(mle_intrinsic_dimension(cloud, config)));
        config_echo.set("input", Json::string(opt.inputs[0]));
    } else {
        IngestOptions ingest_options;
        ingest_options.kappa = opt.kappa;
        ingest_options.strict = opt.strict;
        const IngestResult ingested = ingest_images(opt.inputs, ingest_options);
        if (ingested.images.empty())
            throw std::runtime_error("no readable images among the inputs");
        const int stride = opt.stride > 0 ? opt.stride : opt.window;
        const std::vector<GlcmOffset> offsets =
            parse_offsets(opt.offsets_text, !opt.asymmetric);
        const OffsetAggregation agg = opt.aggregation == "concat"
                                          ? OffsetAggregation::kConcat
                                          : OffsetAggregation::kAverage;

        std::vector<std::pair<const GrayImage*, WindowCoord>> windows;
        for (const IngestedImage& img : ingested.images)
            for (const WindowCoord& at :
                 window_grid(img.image.height(), img.image.width(), opt.window, stride))
                windows.push_back({&img.image, at});

        // Raw vectors: flattened window pixels. Texture vectors: the
        // co-occurrence features of the same windows.
        PointCloud raw(static_cast<Eigen::Index>(windows.size()),
                       static_cast<Eigen::Index>(opt.window) * opt.window);
        const std::size_t dim = feature_labels(offsets, agg).size();
        PointCloud texture(static_cast<Eigen::Index>(windows.size()),
                           static_cast<Eigen::Index>(dim));
        parallel_chunks(windows.size(), 16, [&](std::size_t first, std::size_t last) {
            for (std::size_t i = first; i < last; ++i) {
                const GrayImage patch =
                    extract_window(*windows[i].first, windows[i].second, opt.window);
                Eigen::Index col = 0;
                for (int r = 0; r < opt.window; ++r)
                    for (int c = 0; c < opt.window; ++c)
                        raw(static_cast<Eigen::Index>(i), col++) =
                            static_cast<double>(patch.pixels(r, c));
                texture.row(static_cast<Eigen::Index>(i)) =
                    patch_feature_vector(patch, offsets, agg).values;
            }
        });

        results.set("raw", estimate_json(mle_intrinsic_dimension(
                               subsample_rows(raw, opt.sample, opt.seed), config)));
        results.set("texture",
                    estimate_json(mle_intrinsic_dimension(
                        subsample_rows(texture, opt.sample, opt.seed), config)));
        config_echo.set("window", Json::integer(opt.window));
        config_echo.set("kappa", Json::integer(opt.kappa));
        config_echo.set("offsets", offsets_json(offsets));
    }

    OutputTarget{opt.output}.write(
        envelope(std::move(config_echo), std::move(results), Json::array()).dump());
    return 0;
}

// ---------------------------------------------------------------- geometry

struct GeometryOptions {
    std::string output;
    std::string format = "json";
    std::int64_t n = 0;
    double p = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    bool table3 = false;
    std::int64_t mnist_n = 60000;
    std::int64_t cifar_n = 50000;
    std::int64_t det_n = 0;
    std::string extra_rows;  // "name,p,N;..."
};

int run_geometry(const GeometryOptions& opt) {
    Json config = Json::object();
    Json results = Json::object();
    Json flags = Json::array();

    if (opt.table3) {
        std::vector<DatasetSpec> specs = {{"MNIST", 9.96, opt.mnist_n},
                                          {"CIFAR-10", 15.9, opt.cifar_n}};
        if (opt.det_n > 0) specs.push_back({"DET", 17.01, opt.det_n});
        if (!opt.extra_rows.empty()) {
            std::stringstream stream(opt.extra_rows);
            std::string part;
            while (std::getline(stream, part, ';')) {
                const auto fields = split_csv_line(part);
                if (fields.size() != 3)
                    throw std::runtime_error("bad --rows entry '" + part +
                                             "' (expected name,p,N)");
                specs.push_back({fields[0], std::stod(fields[1]), std::stoll(fields[2])});
            }
        }
        const auto rows = nearest_distance_table(specs);
        if (opt.format == "csv") {
            std::string out = "name,p,n,mean_min,display\n";
            for (const auto& row : rows) {
                out += csv_field(row.name) + ',' + format_double(row.p) + ',' +
                       std::to_string(row.count) + ',' + format_double(row.mean_min) +
                       ',' + row.display + '\n';
            }
            OutputTarget{opt.output}.write(out);
            return 0;
        }
        Json table = Json::array();
        for (const auto& row : rows) {
            Json r = Json::object();
            r.set("name", Json::string(row.name));
            r.set("p", Json::number(row.p));
            r.set("n", Json::integer(row.count));
            r.set("mean_min", Json::number(row.mean_min));
            r.set("display", Json::string(row.display));
            table.push(std::move(r));
        }
        results.set("nearest_distance_table", std::move(table));
        config.set("mode", Json::string("table3"));
        OutputTarget{opt.output}.write(
            envelope(std::move(config), std::move(results), std::move(flags)).dump());
        return 0;
    }

    if (opt.n < 1 || !(opt.p > 0.0))
        throw std::runtime_error("geometry needs --n >= 1 and --p > 0 (or --table3)");
    if (opt.format == "csv")
        throw std::runtime_error("geometry supports csv only with --table3");

    config.set("n", Json::integer(opt.n));
    config.set("p", Json::number(opt.p));
    results.set("mean_min", Json::number(mean_min_distance(opt.n, opt.p)));
    results.set("mean_max_claimed",
                Json::number(mean_max_distance_claimed(opt.n, opt.p)));
    results.set("mean_max", Json::number(mean_max_distance(opt.n, opt.p)));
    results.set("rc_claimed",
                Json::number(relative_contrast(opt.n, opt.p, RcVariant::kClaimed)));
    results.set("rc_corrected",
                Json::number(relative_contrast(opt.n, opt.p, RcVariant::kCorrected)));

    if (opt.trials > 0) {
        const double rounded = std::round(opt.p);
        if (std::abs(opt.p - rounded) > 0.0)
            throw std::runtime_error("Monte Carlo requires an integer dimension p");
        const OrderStatsMc mc = monte_carlo_order_stats(
            static_cast<int>(opt.n), static_cast<int>(rounded), opt.trials, opt.seed);
        Json mc_json = Json::object();
        mc_json.set("mean_min", Json::number(mc.mean_min));
        mc_json.set("se_min", Json::number(mc.se_min));
        mc_json.set("mean_max", Json::number(mc.mean_max));
        mc_json.set("se_max", Json::number(mc.se_max));
        mc_json.set("trials", Json::integer(mc.trials));
        mc_json.set("seed", Json::integer(static_cast<std::int64_t>(mc.seed)));
        results.set("monte_carlo", std::move(mc_json));

        const bool min_ok =
            std::abs(mc.mean_min - mean_min_distance(opt.n, opt.p)) <= 4.0 * mc.se_min;
        const bool max_ok =
            std::abs(mc.mean_max - mean_max_distance(opt.n, opt.p)) <= 4.0 * mc.se_max;
        const bool claimed_ok =
            std::abs(mc.mean_max - mean_max_distance_claimed(opt.n, opt.p)) <=
            4.0 * mc.se_max;
        results.set("mc_agrees_mean_min", Json::boolean(min_ok));
        results.set("mc_agrees_mean_max", Json::boolean(max_ok));
        results.set("mc_agrees_mean_max_claimed", Json::boolean(claimed_ok));
        if (!min_ok) flags.push(Json::string("mean_min_outside_4se"));
        if (!max_ok) flags.push(Json::string("mean_max_outside_4se"));
        if (!claimed_ok) flags.push(Json::string("claimed_max_disagrees_with_mc"));
    }

    OutputTarget{opt.output}.write(
        envelope(std::move(config), std::move(results), std::move(flags)).dump());
    return 0;
}

// ---------------------------------------------------------------------- vc

struct VcOptions {
    std::string output;
    bool dense = false, cnn = false, dropout = false, dropconnect = false;
    double w = 0.0;
    std::vector<std::int64_t> layers;
    double p = 0.0;
    double maps = 0.0, kernel = 0.0, subsample = 0.0;
    std::int64_t cnn_layers = 0;
    double samples = 0.0;
    double eta = 0.05;
    std::int64_t planes = -1, dim = 0;
};

int run_vc(const VcOptions& opt) {
    const int variants =
        int(opt.dense) + int(opt.cnn) + int(opt.dropout) + int(opt.dropconnect);
    if (variants != 1)
        throw std::runtime_error(
            "choose exactly one of --dense / --cnn / --dropout / --dropconnect");

    Json config = Json::object();
    Json results = Json::object();
    Json flags = Json::array();

    double w = opt.w;
    if (!opt.layers.empty()) {
        w = static_cast<double>(weight_count(opt.layers));
        results.set("w", Json::number(w));
        Json sizes = Json::array();
        for (std::int64_t s : opt.layers) sizes.push(Json::integer(s));
        config.set("layers", std::move(sizes));
    } else if (w > 0.0) {
        results.set("w", Json::number(w));
    }

    if (opt.cnn) {
        if (opt.maps < 1 || opt.kernel < 1 || opt.subsample < 1 || opt.cnn_layers < 1)
            throw std::runtime_error("--cnn requires -m, -k, -s, -l all >= 1");
        config.set("variant", Json::string("cnn"));
        config.set("m", Json::number(opt.maps));
        config.set("k", Json::number(opt.kernel));
        config.set("s", Json::number(opt.subsample));
        config.set("l", Json::integer(opt.cnn_layers));
        results.set("vc_upper_scale",
                    Json::number(vc_bound_cnn(opt.maps, opt.kernel, opt.subsample,
                                              opt.cnn_layers)));
        results.set("input_size",
                    Json::big_integer(
                        cnn_input_size(static_cast<std::int64_t>(opt.kernel),
                                       static_cast<std::int64_t>(opt.subsample),
                                       opt.cnn_layers)
                            .to_string()));
        const double ops_sum = cnn_operation_count_layer_sum(
            opt.maps, opt.kernel, opt.subsample, opt.cnn_layers);
        results.set("operation_count_layer_sum", Json::number(ops_sum));
        if (opt.subsample >= 2) {
            const double ops_closed = cnn_operation_count_closed_form(
                opt.maps, opt.kernel, opt.subsample, opt.cnn_layers);
            results.set("operation_count_closed_form", Json::number(ops_closed));
            if (std::abs(ops_closed - ops_sum) > 1e-9 * std::max(1.0, std::abs(ops_sum)))
                flags.push(Json::string("operation_count_routes_disagree"));
        }
    } else {
        if (w < 1.0)
            throw std::runtime_error("need -w >= 1 or --layers for this variant");
        double h = 0.0;
        if (opt.dense) {
            config.set("variant", Json::string("dense"));
            h = vc_bound_dense(w);
            results.set("vc_upper_scale", Json::number(h));
        } else {
            config.set("variant", Json::string(opt.dropout ? "dropout" : "dropconnect"));
            config.set("p", Json::number(opt.p));
            h = opt.dropout ? vc_bound_dropout(w, opt.p)
                            : vc_bound_dropconnect(w, opt.p);
            results.set("vc_upper_scale", Json::number(h));
            results.set("vc_upper_scale_dropout", Json::number(vc_bound_dropout(w, opt.p)));
            results.set("vc_upper_scale_dropconnect",
                        Json::number(vc_bound_dropconnect(w, opt.p)));
        }
        if (opt.samples >= 1.0) {
            config.set("N", Json::number(opt.samples));
            config.set("eta", Json::number(opt.eta));
            results.set("gamma",
                        Json::number(excess_error_bound(h, opt.samples, opt.eta)));
            if (opt.dropout || opt.dropconnect) {
                const GammaComparison cmp =
                    gamma_dropout_vs_dropconnect(w, opt.p, opt.samples, opt.eta);
                Json comparison = Json::object();
                comparison.set("gamma_dropout", Json::number(cmp.gamma_dropout));
                comparison.set("gamma_dropconnect", Json::number(cmp.gamma_dropconnect));
                comparison.set("ordered", Json::boolean(cmp.ordered));
                results.set("gamma_comparison", std::move(comparison));
                if (!cmp.ordered) flags.push(Json::string("gamma_ordering_violated"));
            }
        }
    }

    if (opt.planes >= 0) {
        if (opt.dim < 1) throw std::runtime_error("--planes needs --dim >= 1");
        results.set("cell_count",
                    Json::big_integer(cell_count(opt.planes, opt.dim).to_string()));
        results.set("classes_supported",
                    Json::number(classes_supported(opt.planes, opt.dim)));
        config.set("planes", Json::integer(opt.planes));
        config.set("dim", Json::integer(opt.dim));
    }

    OutputTarget{opt.output}.write(
        envelope(std::move(config), std::move(results), std::move(flags)).dump());
    return 0;
}

// ------------------------------------------------------------------ counts

struct CountsOptions {
    std::string output;
    std::string format = "json";
    int n = 2;
    int kappa = 2;
    bool brute_force = false;
    std::int64_t cap = kDefaultEnumerationCap;
    std::int64_t w = 0;
};

int run_counts(const CountsOptions& opt) {
    const CountingParams params{opt.n, opt.kappa};
    const std::vector<CountStatistic> statistics = {
        CountStatistic::kMatrixCount, CountStatistic::kAsm, CountStatistic::kContrast,
        CountStatistic::kSumAverage, CountStatistic::kCorrelation};

    std::vector<CountComparison> reports;
    for (CountStatistic statistic : statistics)
        reports.push_back(compare_with_oracle(params, statistic, opt.brute_force, opt.cap));

    Json flags = Json::array();
    for (const CountComparison& report : reports)
        if (report.agrees.has_value() && !*report.agrees)
            flags.push(Json::string(report.statistic + "_formula_oracle_mismatch"));

    if (opt.format == "csv") {
        std::string out = "statistic,formula_value,oracle_value,agrees\n";
        for (const CountComparison& report : reports) {
            out += report.statistic + ',' + report.formula_value + ',';
            out += report.oracle_value ? report.oracle_value->to_string() : "";
            out += ',';
            out += report.agrees ? (*report.agrees ? "true" : "false") : "";
            out += '\n';
        }
        OutputTarget{opt.output}.write(out);
        return 0;
    }

    Json rows = Json::array();
    for (const CountComparison& report : reports) {
        Json row = Json::object();
        row.set("statistic", Json::string(report.statistic));
        // The correlation formula may be fractional; everything integral is
        // emitted as an exact number token.
        if (report.formula_value.find('/') == std::string::npos)
            row.set("formula_value", Json::big_integer(report.formula_value));
        else
            row.set("formula_value", Json::string(report.formula_value));
        row.set("oracle_value",
                report.oracle_value
                    ? Json::big_integer(report.oracle_value->to_string())
                    : Json::null());
        row.set("agrees", report.agrees ? Json::boolean(*report.agrees) : Json::null());
        rows.push(std::move(row));
    }
    Json results = Json::object();
    results.set("counts", std::move(rows));

    if (opt.w > 0) {
        const FeatureSpaceVsCapacity cmp = feature_space_vs_capacity(params, opt.w);
        Json c = Json::object();
        c.set("feature_space_scale",
              Json::big_integer(cmp.feature_space_scale.to_string()));
        c.set("capacity_scale", Json::big_integer(cmp.capacity_scale.to_string()));
        c.set("within_capacity", Json::boolean(cmp.within_capacity));
        results.set("feature_space_vs_capacity", std::move(c));
    }

    Json config = Json::object();
    config.set("n", Json::integer(opt.n));
    config.set("kappa", Json::integer(opt.kappa));
    config.set("brute_force", Json::boolean(opt.brute_force));
    config.set("cap", Json::integer(opt.cap));
    if (opt.w > 0) config.set("w", Json::integer(opt.w));

    OutputTarget{opt.output}.write(
        envelope(std::move(config), std::move(results), std::move(flags)).dump());
    return 0;
}

// ------------------------------------------------------------------ report

struct ReportOptions {
    std::string output;
    std::int64_t trials = 100000;
    std::uint64_t seed = 2024;
};

int run_report(const ReportOptions& opt) {
    Json results = Json::object();
    Json flags = Json::array();

    // Feature-space counts with the enumeration oracle on a small grid.
    Json counts = Json::array();
    for (const auto& [n, kappa] :
         std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        for (CountStatistic statistic :
             {CountStatistic::kMatrixCount, CountStatistic::kAsm,
              CountStatistic::kContrast, CountStatistic::kSumAverage,
              CountStatistic::kCorrelation}) {
            const CountComparison report = compare_with_oracle({n, kappa}, statistic, true);
            Json row = Json::object();
            row.set("n", Json::integer(n));
            row.set("kappa", Json::integer(kappa));
            row.set("statistic", Json::string(report.statistic));
            row.set("formula_value", Json::string(report.formula_value));
            row.set("oracle_value", Json::string(report.oracle_value->to_string()));
            row.set("agrees", Json::boolean(*report.agrees));
            if (!*report.agrees)
                flags.push(Json::string("counts_" + std::to_string(n) + "_" +
                                        std::to_string(kappa) + "_" + report.statistic +
                                        "_mismatch"));
            counts.push(std::move(row));
        }
    }
    results.set("counts", std::move(counts));

    // Capacity-bound sample grid; gamma columns only where the error
    // formula is feasible.
    Json capacity = Json::array();
    for (double w : {10.0, 100.0}) {
        for (double p : {0.0, 0.5, 0.9}) {
            Json row = Json::object();
            row.set("w", Json::number(w));
            row.set("p", Json::number(p));
            row.set("vc_dropout", Json::number(vc_bound_dropout(w, p)));
            row.set("vc_dropconnect", Json::number(vc_bound_dropconnect(w, p)));
            if (vc_bound_dropconnect(w, p) < monotone_h_limit(1e6)) {
                const GammaComparison cmp = gamma_dropout_vs_dropconnect(w, p, 1e6, 0.05);
                row.set("gamma_dropout", Json::number(cmp.gamma_dropout));
                row.set("gamma_dropconnect", Json::number(cmp.gamma_dropconnect));
                row.set("ordered", Json::boolean(cmp.ordered));
            } else {
                row.set("gamma_dropout", Json::null());
                row.set("gamma_dropconnect", Json::null());
                row.set("ordered", Json::null());
            }
            capacity.push(std::move(row));
        }
    }
    results.set("capacity", std::move(capacity));

    // Nearest-distance table plus one Monte Carlo verification row.
    Json table = Json::array();
    for (const auto& row :
         nearest_distance_table({{"MNIST", 9.96, 60000}, {"CIFAR-10", 15.9, 50000}})) {
        Json r = Json::object();
        r.set("name", Json::string(row.name));
        r.set("mean_min", Json::number(row.mean_min));
        r.set("display", Json::string(row.display));
        table.push(std::move(r));
    }
    results.set("nearest_distance_table", std::move(table));

    const OrderStatsMc mc = monte_carlo_order_stats(3, 2, opt.trials, opt.seed);
    Json geometry = Json::object();
    geometry.set("n", Json::integer(3));
    geometry.set("p", Json::integer(2));
    geometry.set("mean_min_formula", Json::number(mean_min_distance(3, 2)));
    geometry.set("mean_max_formula", Json::number(mean_max_distance(3, 2)));
    geometry.set("mean_max_claimed", Json::number(mean_max_distance_claimed(3, 2)));
    geometry.set("mc_mean_min", Json::number(mc.mean_min));
    geometry.set("mc_mean_max", Json::number(mc.mean_max));
    geometry.set("mc_se_min", Json::number(mc.se_min));
    geometry.set("mc_se_max", Json::number(mc.se_max));
    const bool claimed_ok =
        std::abs(mc.mean_max - mean_max_distance_claimed(3, 2)) <= 4.0 * mc.se_max;
    geometry.set("mc_agrees_mean_max_claimed", Json::boolean(claimed_ok));
    if (!claimed_ok) flags.push(Json::string("claimed_max_disagrees_with_mc"));
    results.set("geometry", std::move(geometry));

    Json config = Json::object();
    config.set("trials", Json::integer(opt.trials));
    config.set("seed", Json::integer(static_cast<std::int64_t>(opt.seed)));

    OutputTarget{opt.output}.write(
        envelope(std::move(config), std::move(results), std::move(flags)).dump());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GLCM texture features, feature-space counting, capacity bounds, "
                 "intrinsic dimension, and distance-concentration diagnostics"};
    app.require_subcommand(1);

    FeatureOptions feature_opt;
    CLI::App* features =
        app.add_subcommand("features", "Extract co-occurrence feature vectors to CSV/JSON");
    features->add_option("--input", feature_opt.inputs, "Image files or directories")
        ->required();
    features->add_option("--output", feature_opt.output, "Output path (default stdout)");
    features->add_option("--format", feature_opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    features->add_option("--n", feature_opt.window, "Window side length");
    features->add_option("--stride", feature_opt.stride, "Window stride (default: n)");
    features->add_option("--kappa", feature_opt.kappa, "Gray levels");
    features->add_option("--offsets", feature_opt.offsets_text,
                         "Offsets as 'dr,dc;dr,dc;...' (default four unit offsets)");
    features->add_flag("--asymmetric", feature_opt.asymmetric,
                       "Do not accumulate transposed pairs");
    features->add_option("--agg", feature_opt.aggregation, "avg or concat")
        ->check(CLI::IsMember({"avg", "concat"}));
    features->add_flag("--strict", feature_opt.strict, "Fail on the first unreadable file");

    IdimOptions idim_opt;
    CLI::App* idim = app.add_subcommand(
        "idim", "Maximum-likelihood intrinsic dimension of a CSV cloud or image set");
    idim->add_option("--input", idim_opt.inputs, "CSV point cloud, images, or directories")
        ->required();
    idim->add_option("--output", idim_opt.output, "Output path (default stdout)");
    idim->add_option("--kmin", idim_opt.k_min, "Smallest neighbor count");
    idim->add_option("--kmax", idim_opt.k_max, "Largest neighbor count");
    idim->add_flag("--harmonic", idim_opt.harmonic, "Average inverse estimates");
    idim->add_option("--sample", idim_opt.sample, "Seeded row subsample size (0: all)");
    idim->add_option("--seed", idim_opt.seed, "Subsample seed");
    idim->add_option("--n", idim_opt.window, "Window side length for image input");
    idim->add_option("--stride", idim_opt.stride, "Window stride (default: n)");
    idim->add_option("--kappa", idim_opt.kappa, "Gray levels for image input");
    idim->add_option("--offsets", idim_opt.offsets_text, "Offsets for the texture path");
    idim->add_flag("--asymmetric", idim_opt.asymmetric, "Asymmetric co-occurrence");
    idim->add_option("--agg", idim_opt.aggregation, "avg or concat")
        ->check(CLI::IsMember({"avg", "concat"}));
    idim->add_flag("--strict", idim_opt.strict, "Fail on the first unreadable file");

    GeometryOptions geometry_opt;
    CLI::App* geometry = app.add_subcommand(
        "geometry", "Nearest/farthest distance means and relative contrast");
    geometry->add_option("--output", geometry_opt.output, "Output path (default stdout)");
    geometry->add_option("--format", geometry_opt.format, "json or csv")
        ->check(CLI::IsMember({"csv", "json"}));
    geometry->add_option("--n", geometry_opt.n, "Sample count");
    geometry->add_option("--p", geometry_opt.p, "Dimension (fractional allowed)");
    geometry->add_option("--trials", geometry_opt.trials,
                         "Monte Carlo trials (0: closed forms only)");
    geometry->add_option("--seed", geometry_opt.seed, "Monte Carlo seed");
    geometry->add_flag("--table3", geometry_opt.table3,
                       "Emit the nearest-distance dataset table");
    geometry->add_option("--mnist-n", geometry_opt.mnist_n, "MNIST sample count");
    geometry->add_option("--cifar-n", geometry_opt.cifar_n, "CIFAR-10 sample count");
    geometry->add_option("--det-n", geometry_opt.det_n, "DET sample count (0: omit row)");
    geometry->add_option("--rows", geometry_opt.extra_rows,
                         "Extra table rows as 'name,p,N;...'");

    VcOptions vc_opt;
    CLI::App* vc = app.add_subcommand("vc", "Capacity bound scales and excess error");
    vc->add_flag("--dense", vc_opt.dense, "Dense sigmoidal network");
    vc->add_flag("--cnn", vc_opt.cnn, "Convolutional network");
    vc->add_flag("--dropout", vc_opt.dropout, "Dropout network");
    vc->add_flag("--dropconnect", vc_opt.dropconnect, "DropConnect network");
    vc->add_option("-w,--w", vc_opt.w, "Adjustable parameter count");
    vc->add_option("--layers", vc_opt.layers, "Layer sizes (w derived)")->delimiter(',');
    vc->add_option("-p,--p", vc_opt.p, "Drop probability");
    vc->add_option("-m,--maps", vc_opt.maps, "CNN: total maps");
    vc->add_option("-k,--kernel", vc_opt.kernel, "CNN: kernel size");
    vc->add_option("-s,--subsample", vc_opt.subsample, "CNN: subsampling factor");
    vc->add_option("-l,--cnn-layers", vc_opt.cnn_layers, "CNN: layer count");
    vc->add_option("-N,--samples", vc_opt.samples, "Training samples for excess error");
    vc->add_option("--eta", vc_opt.eta, "Confidence parameter in (0, 1]");
    vc->add_option("--planes", vc_opt.planes, "Cell count: hyperplane count");
    vc->add_option("--dim", vc_opt.dim, "Cell count: space dimension");
    vc->add_option("--output", vc_opt.output, "Output path (default stdout)");

    CountsOptions counts_opt;
    CLI::App* counts = app.add_subcommand(
        "counts", "Feature-space cardinality formulas with enumeration oracle");
    counts->add_option("-n,--n", counts_opt.n, "Image side length")->required();
    counts->add_option("-k,--kappa", counts_opt.kappa, "Gray levels")->required();
    counts->add_flag("--brute-force", counts_opt.brute_force, "Run the enumeration oracle");
    counts->add_option("--cap", counts_opt.cap, "Enumeration cap");
    counts->add_option("-w,--w", counts_opt.w,
                       "Also compare against the w^4 capacity scale");
    counts->add_option("--output", counts_opt.output, "Output path (default stdout)");
    counts->add_option("--format", counts_opt.format, "json or csv")
        ->check(CLI::IsMember({"csv", "json"}));

    ReportOptions report_opt;
    CLI::App* report = app.add_subcommand(
        "report", "Bundle: counts, capacity grid, and geometry verification");
    report->add_option("--trials", report_opt.trials, "Monte Carlo trials");
    report->add_option("--seed", report_opt.seed, "Monte Carlo seed");
    report->add_option("--output", report_opt.output, "Output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (features->parsed()) return run_features(feature_opt);
        if (idim->parsed()) return run_idim(idim_opt);
        if (geometry->parsed()) return run_geometry(geometry_opt);
        if (vc->parsed()) return run_vc(vc_opt);
        if (counts->parsed()) return run_counts(counts_opt);
        if (report->parsed()) return run_report(report_opt);
    } catch (const std::domain_error& e) {
        Json error = Json::object();
        Json detail = Json::object();
        detail.set("type", Json::string("domain_error"));
        detail.set("message", Json::string(e.what()));
        error.set("error", std::move(detail));
        std::cerr << error.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        Json error = Json::object();
        Json detail = Json::object();
        detail.set("type", Json::string("runtime_error"));
        detail.set("message", Json::string(e.what()));
        error.set("error", std::move(detail));
        std::cerr << error.dump() << '\n';
        return 1;
    }
    return 0;
}
