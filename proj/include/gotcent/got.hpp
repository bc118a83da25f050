#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gotcent/centrality.hpp"
#include "gotcent/graph.hpp"
#include "gotcent/rng.hpp"

namespace gotcent {

/// Default epoch count: max(1, floor(ln(n)^3)).
std::uint32_t default_epochs(std::size_t vertex_count);

struct GotConfig {
    std::uint32_t thieves_per_vertex = 1;
    std::optional<std::uint64_t> vdiamonds_per_vertex;  // default: |V|
    std::optional<std::uint32_t> epochs;                // default: default_epochs(|V|)
    std::uint64_t seed = 0;
};

/// A wandering agent. `path` records the visited vertices: path[0] is the
/// home vertex, consecutive entries are adjacent in the graph, and no vertex
/// repeats: revisiting a vertex truncates everything recorded after it.
/// A loaded thief carries exactly one vdiamond and walks `path` backwards.
struct Thief {
    struct Step {
        VertexId vertex;
        EdgeId from_edge;  // edge used to reach this vertex; unused for path[0]
    };
    VertexId home = 0;
    bool loaded = false;
    std::vector<Step> path;
};

struct GotResult {
    CentralityVector vertex_scores;   // time-averaged vdiamond counts; low = central
    std::vector<double> edge_scores;  // loaded traversals per epoch, by edge id; high = central
    std::uint32_t epochs = 0;
    std::uint64_t thief_steps = 0;    // epochs * thief count
};

/// One Game of Thieves run, advanced epoch by epoch. The full state is
/// exposed so callers can watch the invariants (vdiamond conservation,
/// simple thief paths) while the game progresses.
///
/// Every vertex starts with the same number of vdiamonds and hosts the same
/// number of thieves. Each epoch every thief acts once, in ascending thief-id
/// order: an empty thief samples a neighbor u of its location with
/// probability weight(v,u)/sum of weights at v, moves there (erasing any loop
/// this closes), and picks up a vdiamond if one is present; a loaded thief
/// retreats one step along its path, counts the traversal on that edge, and
/// unloads when it reaches home. A vdiamond found at the thief's own home is
/// banked on the spot: the count and state are unchanged, which is what keeps
/// a loaded thief's path always at least two entries long.
class GotSimulation {
public:
    GotSimulation(const Graph& g, const GotConfig& cfg);

    void run_epoch();
    void step_empty_thief(Thief& t);
    void step_loaded_thief(Thief& t);

    std::uint32_t epochs_run() const noexcept { return epochs_run_; }
    std::uint32_t total_epochs() const noexcept { return total_epochs_; }
    std::uint64_t vdiamonds_per_vertex() const noexcept { return phi0_; }
    std::uint64_t loaded_count() const noexcept { return loaded_count_; }

    /// Current vdiamond count per vertex.
    const std::vector<std::uint64_t>& phi() const noexcept { return phi_; }
    /// Loaded traversals per edge during the epoch most recently run.
    const std::vector<std::uint32_t>& psi_epoch() const noexcept { return psi_epoch_; }

    const std::vector<Thief>& thieves() const noexcept { return thieves_; }
    Thief& thief(std::size_t i) { return thieves_[i]; }

    /// Scores once all epochs have run: vertex score (1/T) * sum of phi over
    /// epochs 0..T, edge score (1/T) * total loaded traversals.
    GotResult result() const;

private:
    std::size_t sample_neighbor_index(VertexId v);

    const Graph& graph_;
    std::uint64_t phi0_;
    std::uint32_t total_epochs_;
    std::uint32_t epochs_run_ = 0;
    std::uint64_t loaded_count_ = 0;
    Rng rng_;
    std::vector<Thief> thieves_;
    std::vector<std::uint64_t> phi_;
    std::vector<std::uint32_t> psi_epoch_;
    std::vector<std::uint64_t> phi_sum_;  // includes the epoch-0 term
    std::vector<std::uint64_t> psi_sum_;
    // Flattened per-vertex cumulative neighbor weights for O(log deg) sampling.
    std::vector<double> cumulative_weight_;
    std::vector<std::size_t> weight_offset_;
};

/// Runs the full game and returns both centrality outputs.
GotResult run_got(const Graph& g, const GotConfig& cfg);

}  // namespace gotcent
