#include "gotcent/got.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gotcent {

std::uint32_t default_epochs(std::size_t vertex_count) {
    if (vertex_count < 2) {
        return 1;
    }
    const double l = std::log(static_cast<double>(vertex_count));
    const double t = std::floor(l * l * l);
    return t < 1.0 ? 1u : static_cast<std::uint32_t>(t);
}

GotSimulation::GotSimulation(const Graph& g, const GotConfig& cfg)
    : graph_(g),
      phi0_(cfg.vdiamonds_per_vertex.value_or(g.vertex_count())),
      total_epochs_(cfg.epochs.value_or(default_epochs(g.vertex_count()))),
      rng_(cfg.seed) {
    const std::size_t n = g.vertex_count();
    if (n < 1) {
        throw std::invalid_argument("got: need at least one vertex");
    }
    if (cfg.thieves_per_vertex < 1) {
        throw std::invalid_argument("got: need at least one thief per vertex");
    }
    if (total_epochs_ < 1) {
        throw std::invalid_argument("got: need at least one epoch");
    }

    phi_.assign(n, phi0_);
    phi_sum_ = phi_;  // the epoch-0 term of the running sum
    psi_epoch_.assign(g.edge_count(), 0);
    psi_sum_.assign(g.edge_count(), 0);

    thieves_.reserve(n * cfg.thieves_per_vertex);
    for (VertexId v = 0; v < n; ++v) {
        for (std::uint32_t j = 0; j < cfg.thieves_per_vertex; ++j) {
            Thief t;
            t.home = v;
            t.path.push_back({v, 0});
            thieves_.push_back(std::move(t));
        }
    }

    weight_offset_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) {
        weight_offset_[v + 1] = weight_offset_[v] + g.degree(v);
    }
    cumulative_weight_.resize(weight_offset_[n]);
    for (VertexId v = 0; v < n; ++v) {
        double total = 0.0;
        std::size_t off = weight_offset_[v];
        for (const Neighbor& nb : g.adjacency(v)) {
            total += nb.weight;
            cumulative_weight_[off++] = total;
        }
    }
}

std::size_t GotSimulation::sample_neighbor_index(VertexId v) {
    const std::size_t begin = weight_offset_[v];
    const std::size_t end = weight_offset_[v + 1];
    const double total = cumulative_weight_[end - 1];
    const double x = rng_.next_unit() * total;
    const auto it = std::upper_bound(cumulative_weight_.begin() + begin,
                                     cumulative_weight_.begin() + end, x);
    std::size_t idx = static_cast<std::size_t>(it - (cumulative_weight_.begin() + begin));
    if (idx >= end - begin) {
        idx = end - begin - 1;
    }
    return idx;
}

void GotSimulation::step_empty_thief(Thief& t) {
    const VertexId v = t.path.back().vertex;
    const auto adj = graph_.adjacency(v);
    if (adj.empty()) {
        return;  // stranded on an isolated vertex
    }
    const std::size_t pick = sample_neighbor_index(v);
    const Neighbor& chosen = adj[pick];
    const VertexId u = chosen.vertex;

    // Loop erasure: returning to a visited vertex drops everything after it.
    bool revisit = false;
    for (std::size_t i = 0; i < t.path.size(); ++i) {
        if (t.path[i].vertex == u) {
            t.path.resize(i + 1);
            revisit = true;
            break;
        }
    }
    if (!revisit) {
        t.path.push_back({u, chosen.edge});
    }

    // Pick up a vdiamond if one is present. At the thief's own home it is
    // banked in place, leaving count and state unchanged.
    if (u != t.home && phi_[u] > 0) {
        --phi_[u];
        t.loaded = true;
        ++loaded_count_;
    }
}

void GotSimulation::step_loaded_thief(Thief& t) {
    if (t.path.size() < 2) {
        throw std::logic_error("got: loaded thief with a single-entry path");
    }
    const EdgeId edge = t.path.back().from_edge;
    t.path.pop_back();
    ++psi_epoch_[edge];
    if (t.path.size() == 1) {
        ++phi_[t.home];
        t.loaded = false;
        --loaded_count_;
    }
}

void GotSimulation::run_epoch() {
    if (epochs_run_ >= total_epochs_) {
        throw std::logic_error("got: all epochs already run");
    }
    std::fill(psi_epoch_.begin(), psi_epoch_.end(), 0);
    for (Thief& t : thieves_) {
        if (t.loaded) {
            step_loaded_thief(t);
        } else {
            step_empty_thief(t);
        }
    }
    ++epochs_run_;
    for (std::size_t v = 0; v < phi_.size(); ++v) {
        phi_sum_[v] += phi_[v];
    }
    for (std::size_t e = 0; e < psi_epoch_.size(); ++e) {
        psi_sum_[e] += psi_epoch_[e];
    }
}

GotResult GotSimulation::result() const {
    if (epochs_run_ != total_epochs_) {
        throw std::logic_error("got: result requested before the game finished");
    }
    const double t = static_cast<double>(total_epochs_);
    GotResult out;
    out.epochs = total_epochs_;
    out.thief_steps = static_cast<std::uint64_t>(total_epochs_) * thieves_.size();
    out.vertex_scores.measure = "got_vertex";
    out.vertex_scores.scores.resize(phi_sum_.size());
    for (std::size_t v = 0; v < phi_sum_.size(); ++v) {
        out.vertex_scores.scores[v] = static_cast<double>(phi_sum_[v]) / t;
    }
    out.edge_scores.resize(psi_sum_.size());
    for (std::size_t e = 0; e < psi_sum_.size(); ++e) {
        out.edge_scores[e] = static_cast<double>(psi_sum_[e]) / t;
    }
    return out;
}

GotResult run_got(const Graph& g, const GotConfig& cfg) {
    GotSimulation sim(g, cfg);
    for (std::uint32_t ep = 0; ep < sim.total_epochs(); ++ep) {
        sim.run_epoch();
    }
    return sim.result();
}

}  // namespace gotcent
