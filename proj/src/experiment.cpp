#include "gotcent/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gotcent/centrality.hpp"
#include "gotcent/generators.hpp"
#include "gotcent/graph_io.hpp"
#include "gotcent/rng.hpp"
#include "gotcent/stats.hpp"

namespace gotcent {

namespace {

constexpr const char* kMeasureNames[4] = {"degree", "betweenness", "closeness", "clustering"};

// Seed streams for derive_seed: one per consumer of randomness.
constexpr std::uint64_t kGraphStream = 0;
constexpr std::uint64_t kGotStream = 1;

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

template <typename T>
T parse_number(const std::string& value, std::size_t line) {
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw std::runtime_error("config line " + std::to_string(line) + ": bad number '" +
                                 value + "'");
    }
    return out;
}

std::string format_coefficient(const std::optional<double>& c) {
    if (!c) {
        return "undefined";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", *c);
    return buf;
}

std::string file_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct CellSpec {
    std::string model;
    std::size_t model_idx = 0;
    std::size_t size_idx = 0;  // index into sizes, or into files for model=file
    std::size_t rep = 0;
    std::size_t size = 0;      // 0 for file cells until loaded
    std::string file;
    std::string network_id;
};

struct CellResult {
    bool ok = false;
    std::string error;
    std::size_t size = 0;
    CoefficientSet coefficients[4];
    std::vector<std::pair<std::string, double>> phase_seconds;
};

Graph build_cell_graph(const ExperimentSpec& spec, const CellSpec& cell,
                       std::uint64_t graph_seed) {
    if (cell.model == "er") {
        return gen_er(cell.size, spec.er_p, graph_seed);
    }
    if (cell.model == "nws") {
        return gen_nws(cell.size, spec.nws_k, spec.nws_p, graph_seed);
    }
    if (cell.model == "ba_tf") {
        return gen_ba_tf(cell.size, spec.ba_tf_e, spec.ba_tf_p, graph_seed);
    }
    if (cell.model == "file") {
        return load_graph(cell.file);
    }
    throw std::runtime_error("unknown model '" + cell.model + "'");
}

CellResult run_cell(const ExperimentSpec& spec, const CellSpec& cell) {
    CellResult result;
    const auto timed = [&result](const char* phase, auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        auto value = fn();
        result.phase_seconds.emplace_back(phase, seconds_since(start));
        return value;
    };

    const Graph graph = timed("build", [&] {
        return build_cell_graph(spec, cell,
                                derive_seed(spec.seed, kGraphStream, cell.model_idx,
                                            cell.size_idx, cell.rep));
    });
    result.size = graph.vertex_count();

    const CentralityVector degree = timed("degree", [&] { return degree_centrality(graph); });
    const CentralityVector betweenness =
        timed("betweenness", [&] { return betweenness_centrality(graph); });
    const CentralityVector closeness =
        timed("closeness", [&] { return closeness_centrality(graph); });
    const CentralityVector clustering =
        timed("clustering", [&] { return clustering_coefficient(graph); });

    GotConfig got_cfg;
    got_cfg.thieves_per_vertex = spec.got_thieves_per_vertex;
    got_cfg.vdiamonds_per_vertex = spec.got_vdiamonds;
    got_cfg.epochs = spec.got_epochs;
    got_cfg.seed = derive_seed(spec.seed, kGotStream, cell.model_idx, cell.size_idx, cell.rep);
    const GotResult got = timed("got", [&] {
        if (spec.weighted_mode == WeightedMode::binarize) {
            const Graph unit = graph.binarized();
            return run_got(unit, got_cfg);
        }
        return run_got(graph, got_cfg);
    });

    const CentralityVector* classical[4] = {&degree, &betweenness, &closeness, &clustering};
    for (int m = 0; m < 4; ++m) {
        result.coefficients[m] = correlate_scores(got.vertex_scores.scores, classical[m]->scores);
    }

    const auto start_write = std::chrono::steady_clock::now();
    const std::filesystem::path csv_path =
        std::filesystem::path(spec.out_dir) /
        (cell.network_id + "_rep" + std::to_string(cell.rep) + ".centrality.csv");
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) {
        throw std::runtime_error("cannot write '" + csv_path.string() + "'");
    }
    write_centrality_csv(graph, {got.vertex_scores, degree, betweenness, closeness, clustering},
                         csv);
    result.phase_seconds.emplace_back("write", seconds_since(start_write));

    result.ok = true;
    return result;
}

std::optional<double> mean_of_defined(const std::vector<std::optional<double>>& values) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& v : values) {
        if (v) {
            sum += *v;
            ++count;
        }
    }
    if (count == 0) {
        return std::nullopt;
    }
    return sum / static_cast<double>(count);
}

}  // namespace

ExperimentSpec parse_experiment_config(std::istream& in) {
    ExperimentSpec spec;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "models") {
            spec.models = split_list(value);
        } else if (key == "sizes") {
            spec.sizes.clear();
            for (const std::string& s : split_list(value)) {
                spec.sizes.push_back(parse_number<std::size_t>(s, line_no));
            }
        } else if (key == "repetitions") {
            spec.repetitions = parse_number<std::uint32_t>(value, line_no);
        } else if (key == "seed") {
            spec.seed = parse_number<std::uint64_t>(value, line_no);
        } else if (key == "er.p") {
            spec.er_p = parse_number<double>(value, line_no);
        } else if (key == "nws.k") {
            spec.nws_k = parse_number<std::uint32_t>(value, line_no);
        } else if (key == "nws.p") {
            spec.nws_p = parse_number<double>(value, line_no);
        } else if (key == "ba_tf.e") {
            spec.ba_tf_e = parse_number<std::uint32_t>(value, line_no);
        } else if (key == "ba_tf.p") {
            spec.ba_tf_p = parse_number<double>(value, line_no);
        } else if (key == "files") {
            spec.files = split_list(value);
        } else if (key == "got.thieves_per_vertex") {
            spec.got_thieves_per_vertex = parse_number<std::uint32_t>(value, line_no);
        } else if (key == "got.vdiamonds") {
            spec.got_vdiamonds = parse_number<std::uint64_t>(value, line_no);
        } else if (key == "got.epochs") {
            spec.got_epochs = parse_number<std::uint32_t>(value, line_no);
        } else if (key == "weighted_mode") {
            if (value == "use_weights") {
                spec.weighted_mode = WeightedMode::use_weights;
            } else if (value == "binarize") {
                spec.weighted_mode = WeightedMode::binarize;
            } else {
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": weighted_mode must be use_weights or binarize");
            }
        } else if (key == "out_dir") {
            spec.out_dir = value;
        } else if (key == "jobs") {
            spec.jobs = parse_number<std::uint32_t>(value, line_no);
        } else {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": unknown key '" + key + "'");
        }
    }
    if (spec.repetitions < 1) {
        throw std::runtime_error("config: repetitions must be >= 1");
    }
    return spec;
}

CoefficientSet correlate_scores(std::span<const double> a, std::span<const double> b) {
    CoefficientSet out;
    out.pearson = stats::pearson(a, b);
    out.spearman = stats::spearman(a, b);
    out.kendall_b = stats::kendall(a, b, stats::KendallVariant::tau_b);
    out.kendall_a = stats::kendall(a, b, stats::KendallVariant::tau_a);
    return out;
}

void write_correlation_rows_csv(const std::vector<CorrelationRow>& rows, std::ostream& out) {
    out << "network,size,model,measure,pearson,spearman,kendall_b,kendall_a\n";
    for (const CorrelationRow& row : rows) {
        out << row.network << ',' << row.size << ',' << row.model << ',' << row.measure << ','
            << format_coefficient(row.coefficients.pearson) << ','
            << format_coefficient(row.coefficients.spearman) << ','
            << format_coefficient(row.coefficients.kendall_b) << ','
            << format_coefficient(row.coefficients.kendall_a) << '\n';
    }
}

std::vector<CorrelationReport> run_experiment(const ExperimentSpec& spec, std::ostream& log) {
    if (spec.repetitions < 1) {
        throw std::invalid_argument("experiment: repetitions must be >= 1");
    }
    std::filesystem::create_directories(spec.out_dir);

    // Lay out the cell grid: one network per (model, size-or-file), one cell
    // per repetition.
    struct NetworkSpec {
        std::string model;
        std::size_t model_idx;
        std::size_t size_idx;
        std::size_t size;
        std::string file;
        std::string network_id;
    };
    std::vector<NetworkSpec> networks;
    for (std::size_t mi = 0; mi < spec.models.size(); ++mi) {
        const std::string& model = spec.models[mi];
        if (model == "file") {
            if (spec.files.empty()) {
                throw std::invalid_argument("experiment: model 'file' needs files = ...");
            }
            for (std::size_t fi = 0; fi < spec.files.size(); ++fi) {
                networks.push_back(
                    {model, mi, fi, 0, spec.files[fi], file_stem(spec.files[fi])});
            }
        } else if (model == "er" || model == "nws" || model == "ba_tf") {
            for (std::size_t si = 0; si < spec.sizes.size(); ++si) {
                networks.push_back({model, mi, si, spec.sizes[si], "",
                                    model + "_v" + std::to_string(spec.sizes[si])});
            }
        } else {
            throw std::invalid_argument("experiment: unknown model '" + model + "'");
        }
    }

    std::vector<CellSpec> cells;
    cells.reserve(networks.size() * spec.repetitions);
    for (const NetworkSpec& net : networks) {
        for (std::uint32_t rep = 0; rep < spec.repetitions; ++rep) {
            CellSpec cell;
            cell.model = net.model;
            cell.model_idx = net.model_idx;
            cell.size_idx = net.size_idx;
            cell.rep = rep;
            cell.size = net.size;
            cell.file = net.file;
            cell.network_id = net.network_id;
            cells.push_back(std::move(cell));
        }
    }

    // Independent jobs on a small worker pool; every cell owns its RNG
    // streams and its own output file, so the worker count cannot change any
    // result.
    std::vector<CellResult> results(cells.size());
    const std::uint32_t workers =
        std::max<std::uint32_t>(1, std::min<std::uint32_t>(spec.jobs, cells.size()));
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) {
                return;
            }
            try {
                results[i] = run_cell(spec, cells[i]);
            } catch (const std::exception& e) {
                results[i].ok = false;
                results[i].error = e.what();
            }
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint32_t w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    // Timing log, in cell order.
    std::ofstream timings(std::filesystem::path(spec.out_dir) / "timings.txt");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::ostringstream line;
        line << cells[i].network_id << " rep " << cells[i].rep << ":";
        if (!results[i].ok) {
            line << " FAILED: " << results[i].error;
        } else {
            char buf[64];
            for (const auto& [phase, secs] : results[i].phase_seconds) {
                std::snprintf(buf, sizeof(buf), " %s=%.3fs", phase.c_str(), secs);
                line << buf;
            }
        }
        log << line.str() << '\n';
        timings << line.str() << '\n';
    }

    // Aggregate over repetitions.
    std::vector<CorrelationReport> reports;
    std::vector<CorrelationRow> long_rows;
    for (std::size_t ni = 0; ni < networks.size(); ++ni) {
        const NetworkSpec& net = networks[ni];
        CorrelationReport report;
        report.network_id = net.network_id;
        report.model = net.model;
        report.size = net.size;
        for (int m = 0; m < 4; ++m) {
            std::vector<std::optional<double>> pearson, spearman, kendall_b, kendall_a;
            for (std::uint32_t rep = 0; rep < spec.repetitions; ++rep) {
                const CellResult& r = results[ni * spec.repetitions + rep];
                if (!r.ok) {
                    continue;
                }
                if (report.size == 0) {
                    report.size = r.size;  // file cells learn their size on load
                }
                pearson.push_back(r.coefficients[m].pearson);
                spearman.push_back(r.coefficients[m].spearman);
                kendall_b.push_back(r.coefficients[m].kendall_b);
                kendall_a.push_back(r.coefficients[m].kendall_a);
            }
            CoefficientSet mean;
            mean.pearson = mean_of_defined(pearson);
            mean.spearman = mean_of_defined(spearman);
            mean.kendall_b = mean_of_defined(kendall_b);
            mean.kendall_a = mean_of_defined(kendall_a);
            report.measures.emplace_back(kMeasureNames[m], mean);
            long_rows.push_back(
                {report.network_id, report.size, report.model, kMeasureNames[m], mean});
        }
        reports.push_back(std::move(report));
    }

    // Wide aggregate: one row per network, 16 coefficient columns.
    {
        std::ofstream wide(std::filesystem::path(spec.out_dir) / "correlations.csv",
                           std::ios::binary);
        wide << "network,size,model";
        for (const char* m : kMeasureNames) {
            wide << ',' << m << "_pearson," << m << "_spearman," << m << "_kendall_b," << m
                 << "_kendall_a";
        }
        wide << '\n';
        for (const CorrelationReport& r : reports) {
            wide << r.network_id << ',' << r.size << ',' << r.model;
            for (const auto& [name, c] : r.measures) {
                wide << ',' << format_coefficient(c.pearson) << ','
                     << format_coefficient(c.spearman) << ',' << format_coefficient(c.kendall_b)
                     << ',' << format_coefficient(c.kendall_a);
            }
            wide << '\n';
        }
    }
    {
        std::ofstream longf(std::filesystem::path(spec.out_dir) / "correlations_long.csv",
                            std::ios::binary);
        write_correlation_rows_csv(long_rows, longf);
    }

    // Run conventions, for the record (no volatile content: re-runs must be
    // byte-identical).
    {
        std::ofstream meta(std::filesystem::path(spec.out_dir) / "experiment_meta.txt");
        meta << "kendall_default = tau_b (tau_a also emitted)\n";
        meta << "correlation_orientation = raw phi_bar vs raw classical scores (no sign flip)\n";
        meta << "seed = " << spec.seed << "\n";
        meta << "repetitions = " << spec.repetitions << "\n";
        meta << "seed_scheme = derive_seed(seed, stream, model_idx, size_idx, rep); "
                "stream 0 = graph, 1 = got\n";
        meta << "weighted_mode = "
             << (spec.weighted_mode == WeightedMode::binarize ? "binarize" : "use_weights")
             << "\n";
    }

    return reports;
}

std::vector<BenchRow> bench_measures(const Graph& g, const GotConfig& got_cfg) {
    std::vector<BenchRow> rows;
    const auto timed = [&rows](const char* name, auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        rows.push_back({name, seconds_since(start), 0});
    };
    timed("degree", [&] { degree_centrality(g); });
    timed("betweenness", [&] { betweenness_centrality(g); });
    timed("closeness", [&] { closeness_centrality(g); });
    timed("clustering", [&] { clustering_coefficient(g); });

    const auto start = std::chrono::steady_clock::now();
    const GotResult got = run_got(g, got_cfg);
    rows.push_back({"got", seconds_since(start), got.thief_steps});
    return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << "measure,seconds,thief_steps\n";
    char buf[32];
    for (const BenchRow& row : rows) {
        std::snprintf(buf, sizeof(buf), "%.6f", row.seconds);
        out << row.measure << ',' << buf << ',';
        if (row.thief_steps > 0) {
            out << row.thief_steps;
        }
        out << '\n';
    }
}

}  // namespace gotcent
