// Command-line front end: generate / centrality / got / correlate /
// experiment / bench. Exit codes: 0 ok, 1 usage error, 2 data error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gotcent/centrality.hpp"
#include "gotcent/experiment.hpp"
#include "gotcent/generators.hpp"
#include "gotcent/got.hpp"
#include "gotcent/graph.hpp"
#include "gotcent/graph_io.hpp"

namespace {

using namespace gotcent;

Graph load_with_warnings(const std::string& path) {
    std::vector<std::string> warnings;
    Graph g = load_graph(path, &warnings);
    for (const std::string& w : warnings) {
        std::cerr << "warning: " << path << ": " << w << "\n";
    }
    return g;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    return out;
}

int cmd_generate(const std::string& model, std::size_t v, double p, std::uint32_t k,
                 std::uint32_t e, std::uint64_t seed, const std::string& out_path) {
    Graph g(0);
    if (model == "er") {
        g = gen_er(v, p, seed);
    } else if (model == "nws") {
        g = gen_nws(v, k, p, seed);
    } else if (model == "ba_tf") {
        g = gen_ba_tf(v, e, p, seed);
    } else {
        throw CLI::ValidationError("--model must be er, nws or ba_tf");
    }
    auto out = open_out(out_path);
    write_edge_list(g, out);
    std::cout << model << ": " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges -> " << out_path << "\n";
    return 0;
}

int cmd_centrality(const std::string& in_path, const std::string& measures_arg,
                   const std::string& out_path) {
    const Graph g = load_with_warnings(in_path);
    std::vector<CentralityVector> columns;
    std::stringstream ss(measures_arg);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name == "degree") {
            columns.push_back(degree_centrality(g));
        } else if (name == "betweenness") {
            columns.push_back(betweenness_centrality(g));
        } else if (name == "closeness") {
            columns.push_back(closeness_centrality(g));
        } else if (name == "clustering") {
            columns.push_back(clustering_coefficient(g));
        } else {
            throw CLI::ValidationError("unknown measure '" + name + "'");
        }
    }
    auto out = open_out(out_path);
    write_centrality_csv(g, columns, out);
    return 0;
}

int cmd_got(const std::string& in_path, std::uint32_t thieves,
            std::optional<std::uint64_t> vdiamonds, std::optional<std::uint32_t> epochs,
            std::uint64_t seed, bool binarize, const std::string& out_path,
            const std::string& edges_out_path) {
    Graph g = load_with_warnings(in_path);
    if (binarize) {
        g = g.binarized();
    }
    GotConfig cfg;
    cfg.thieves_per_vertex = thieves;
    cfg.vdiamonds_per_vertex = vdiamonds;
    cfg.epochs = epochs;
    cfg.seed = seed;
    const GotResult result = run_got(g, cfg);
    auto out = open_out(out_path);
    write_centrality_csv(g, {result.vertex_scores}, out);
    if (!edges_out_path.empty()) {
        auto eout = open_out(edges_out_path);
        write_edge_scores_csv(g, result.edge_scores, eout);
    }
    std::cout << "got: " << result.epochs << " epochs, " << result.thief_steps
              << " thief-steps -> " << out_path << "\n";
    return 0;
}

int cmd_correlate(const std::string& in_a, const std::string& in_b,
                  const std::string& out_path) {
    std::ifstream fa(in_a, std::ios::binary), fb(in_b, std::ios::binary);
    if (!fa) {
        throw std::runtime_error("cannot open '" + in_a + "'");
    }
    if (!fb) {
        throw std::runtime_error("cannot open '" + in_b + "'");
    }
    const CentralityTable a = read_centrality_csv(fa);
    const CentralityTable b = read_centrality_csv(fb);
    if (a.columns.empty() || b.columns.empty()) {
        throw std::runtime_error("correlate: both CSVs need at least one score column");
    }
    if (a.labels != b.labels) {
        throw std::runtime_error("correlate: vertex columns do not match");
    }
    std::vector<CorrelationRow> rows;
    for (const CentralityVector& col : b.columns) {
        CorrelationRow row;
        row.network = std::filesystem::path(in_a).stem().string();
        row.size = a.labels.size();
        row.model = "file";
        row.measure = col.measure;
        row.coefficients = correlate_scores(a.columns[0].scores, col.scores);
        rows.push_back(std::move(row));
    }
    if (out_path.empty()) {
        write_correlation_rows_csv(rows, std::cout);
    } else {
        auto out = open_out(out_path);
        write_correlation_rows_csv(rows, out);
    }
    return 0;
}

int cmd_experiment(const std::string& config_path, const std::string& out_dir,
                   std::uint32_t jobs) {
    std::ifstream in(config_path);
    if (!in) {
        throw std::runtime_error("cannot open '" + config_path + "'");
    }
    ExperimentSpec spec = parse_experiment_config(in);
    if (!out_dir.empty()) {
        spec.out_dir = out_dir;
    }
    if (jobs > 0) {
        spec.jobs = jobs;
    }
    const auto reports = run_experiment(spec, std::cout);
    std::cout << "experiment: " << reports.size() << " networks -> " << spec.out_dir << "\n";
    return 0;
}

int cmd_bench(const std::string& in_path, std::uint32_t thieves,
              std::optional<std::uint64_t> vdiamonds, std::optional<std::uint32_t> epochs,
              std::uint64_t seed, const std::string& out_path) {
    const Graph g = load_with_warnings(in_path);
    GotConfig cfg;
    cfg.thieves_per_vertex = thieves;
    cfg.vdiamonds_per_vertex = vdiamonds;
    cfg.epochs = epochs;
    cfg.seed = seed;
    const auto rows = bench_measures(g, cfg);
    if (out_path.empty()) {
        write_bench_csv(rows, std::cout);
    } else {
        auto out = open_out(out_path);
        write_bench_csv(rows, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Game of Thieves centrality toolkit"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "Generate a random network as an edge list");
    std::string gen_model;
    std::size_t gen_v = 0;
    double gen_p = 0.0;
    std::uint32_t gen_k = 6, gen_e = 5;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    generate->add_option("--model", gen_model, "er | nws | ba_tf")->required();
    generate->add_option("--v", gen_v, "vertex count")->required();
    generate->add_option("--p", gen_p, "model probability")->required();
    generate->add_option("--k", gen_k, "ring neighbors (nws)")->capture_default_str();
    generate->add_option("--e", gen_e, "edges per new vertex (ba_tf)")->capture_default_str();
    generate->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
    generate->add_option("--out", gen_out, "output edge-list path")->required();

    // centrality
    auto* centrality = app.add_subcommand("centrality", "Classical centrality measures to CSV");
    std::string cen_in, cen_measures = "degree,betweenness,closeness,clustering", cen_out;
    centrality->add_option("--in", cen_in, "input graph (.gml or edge list)")->required();
    centrality->add_option("--measures", cen_measures, "comma list of measures")->capture_default_str();
    centrality->add_option("--out", cen_out, "output CSV path")->required();

    // got
    auto* got = app.add_subcommand("got", "Run Game of Thieves and write its scores");
    std::string got_in, got_out, got_edges_out;
    std::uint32_t got_thieves = 1;
    std::uint64_t got_vdiamonds = 0;
    std::uint32_t got_epochs = 0;
    std::uint64_t got_seed = 0;
    bool got_binarize = false;
    got->add_option("--in", got_in, "input graph (.gml or edge list)")->required();
    got->add_option("--thieves", got_thieves, "thieves per vertex")->capture_default_str();
    got->add_option("--vdiamonds", got_vdiamonds, "initial vdiamonds per vertex (default |V|)");
    got->add_option("--epochs", got_epochs, "epoch count (default floor(ln^3 |V|))");
    got->add_option("--seed", got_seed, "RNG seed")->capture_default_str();
    got->add_flag("--binarize", got_binarize, "ignore edge weights");
    got->add_option("--out", got_out, "vertex score CSV path")->required();
    got->add_option("--edges-out", got_edges_out, "edge score CSV path (u,v,psi_bar)");

    // correlate
    auto* correlate = app.add_subcommand("correlate", "Correlate two centrality CSVs");
    std::string cor_a, cor_b, cor_out;
    correlate->add_option("--in-a", cor_a, "first CSV (first score column is used)")->required();
    correlate->add_option("--in-b", cor_b, "second CSV (every column is correlated)")->required();
    correlate->add_option("--out", cor_out, "output CSV path (default stdout)");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Run a full correlation experiment");
    std::string exp_config, exp_out_dir;
    std::uint32_t exp_jobs = 0;
    experiment->add_option("--config", exp_config, "key=value config file")->required();
    experiment->add_option("--out-dir", exp_out_dir, "output directory (overrides config)");
    experiment->add_option("--jobs", exp_jobs, "worker count (overrides config)");

    // bench
    auto* bench = app.add_subcommand("bench", "Time every measure on one graph");
    std::string bench_in, bench_out;
    std::uint32_t bench_thieves = 1;
    std::uint64_t bench_vdiamonds = 0;
    std::uint32_t bench_epochs = 0;
    std::uint64_t bench_seed = 0;
    bench->add_option("--in", bench_in, "input graph")->required();
    bench->add_option("--thieves", bench_thieves, "thieves per vertex")->capture_default_str();
    bench->add_option("--vdiamonds", bench_vdiamonds, "initial vdiamonds per vertex (default |V|)");
    bench->add_option("--epochs", bench_epochs, "epoch count (default floor(ln^3 |V|))");
    bench->add_option("--seed", bench_seed, "RNG seed")->capture_default_str();
    bench->add_option("--out", bench_out, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (generate->parsed()) {
            return cmd_generate(gen_model, gen_v, gen_p, gen_k, gen_e, gen_seed, gen_out);
        }
        if (centrality->parsed()) {
            return cmd_centrality(cen_in, cen_measures, cen_out);
        }
        if (got->parsed()) {
            return cmd_got(got_in, got_thieves,
                           got->count("--vdiamonds") ? std::optional(got_vdiamonds)
                                                     : std::nullopt,
                           got->count("--epochs") ? std::optional(got_epochs) : std::nullopt,
                           got_seed, got_binarize, got_out, got_edges_out);
        }
        if (correlate->parsed()) {
            return cmd_correlate(cor_a, cor_b, cor_out);
        }
        if (experiment->parsed()) {
            return cmd_experiment(exp_config, exp_out_dir, exp_jobs);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_in, bench_thieves,
                             bench->count("--vdiamonds") ? std::optional(bench_vdiamonds)
                                                         : std::nullopt,
                             bench->count("--epochs") ? std::optional(bench_epochs)
                                                      : std::nullopt,
                             bench_seed, bench_out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
