#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gotcent/got.hpp"
#include "gotcent/graph.hpp"

namespace gotcent {

enum class WeightedMode { use_weights, binarize };

/// One experiment: a grid of (model, size, repetition) cells. The defaults
/// reproduce the standard protocol: three generator families at the stated
/// parameters, five sizes from 1000 to 15000, five repetitions, one thief and
/// |V| vdiamonds per vertex.
struct ExperimentSpec {
    std::vector<std::string> models{"er", "nws", "ba_tf"};
    std::vector<std::size_t> sizes{1000, 2000, 5000, 10000, 15000};
    double er_p = 0.01;
    std::uint32_t nws_k = 6;
    double nws_p = 0.6;
    std::uint32_t ba_tf_e = 5;
    double ba_tf_p = 0.3;
    std::vector<std::string> files;  // inputs when models contains "file"
    std::uint32_t repetitions = 5;
    std::uint32_t got_thieves_per_vertex = 1;
    std::optional<std::uint64_t> got_vdiamonds;  // default: |V|
    std::optional<std::uint32_t> got_epochs;     // default: floor(ln^3 |V|)
    std::uint64_t seed = 0;
    std::string out_dir = "results";
    WeightedMode weighted_mode = WeightedMode::use_weights;
    std::uint32_t jobs = 1;
};

/// Flat `key = value` text with `#` comments; keys mirror ExperimentSpec
/// (models, sizes, repetitions, seed, er.p, nws.k, nws.p, ba_tf.e, ba_tf.p,
/// files, got.thieves_per_vertex, got.vdiamonds, got.epochs, weighted_mode,
/// out_dir, jobs). Unknown keys are errors.
ExperimentSpec parse_experiment_config(std::istream& in);

struct CoefficientSet {
    std::optional<double> pearson;
    std::optional<double> spearman;
    std::optional<double> kendall_b;
    std::optional<double> kendall_a;
};

/// All four coefficients between two score vectors.
CoefficientSet correlate_scores(std::span<const double> a, std::span<const double> b);

/// Aggregated correlations of the GoT vertex score against each classical
/// measure for one network cell (averaged over repetitions).
struct CorrelationReport {
    std::string network_id;
    std::string model;
    std::size_t size = 0;
    std::vector<std::pair<std::string, CoefficientSet>> measures;
};

/// One row of the long-format correlation CSV
/// (`network,size,model,measure,pearson,spearman,kendall_b,kendall_a`).
struct CorrelationRow {
    std::string network;
    std::size_t size = 0;
    std::string model;
    std::string measure;
    CoefficientSet coefficients;
};

/// Coefficients at 6 decimal places; undefined ones as the string "undefined".
void write_correlation_rows_csv(const std::vector<CorrelationRow>& rows, std::ostream& out);

/// Runs every cell (on `jobs` workers; results do not depend on the worker
/// count), writes per-cell centrality CSVs, the wide aggregate
/// `correlations.csv` (one row per network), the plot-ready
/// `correlations_long.csv`, `experiment_meta.txt` and `timings.txt` under
/// out_dir, and returns the aggregated reports. Per-phase timings go to
/// `log`. A failing cell is logged and skipped; the other cells proceed.
std::vector<CorrelationReport> run_experiment(const ExperimentSpec& spec, std::ostream& log);

struct BenchRow {
    std::string measure;
    double seconds = 0.0;
    std::uint64_t thief_steps = 0;  // nonzero only for the got row
};

/// Wall-clock time of each measure on g, in a fixed row order
/// (degree, betweenness, closeness, clustering, got).
std::vector<BenchRow> bench_measures(const Graph& g, const GotConfig& got_cfg);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace gotcent
