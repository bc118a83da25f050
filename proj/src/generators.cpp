#include "gotcent/generators.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gotcent/rng.hpp"

namespace gotcent {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability must lie in [0, 1]");
    }
}

// Unordered pairs (a, b), a < b, in row-major order: (0,1),(0,2),...,(1,2),...
// Number of pairs before row a.
std::uint64_t row_offset(std::uint64_t a, std::uint64_t v) {
    return a * (v - 1) - a * (a - 1) / 2;
}

void pair_from_index(std::uint64_t idx, std::uint64_t v, VertexId& a, VertexId& b) {
    const double vd = static_cast<double>(v);
    double guess = std::floor((2.0 * vd - 1.0 -
                               std::sqrt((2.0 * vd - 1.0) * (2.0 * vd - 1.0) -
                                         8.0 * static_cast<double>(idx))) /
                              2.0);
    std::uint64_t row = guess > 0.0 ? static_cast<std::uint64_t>(guess) : 0;
    while (row + 1 < v && row_offset(row + 1, v) <= idx) {
        ++row;
    }
    while (row > 0 && row_offset(row, v) > idx) {
        --row;
    }
    a = static_cast<VertexId>(row);
    b = static_cast<VertexId>(row + 1 + (idx - row_offset(row, v)));
}

}  // namespace

Graph gen_er(std::size_t v, double p, std::uint64_t seed) {
    if (v < 1) {
        throw std::invalid_argument("gen_er: need at least one vertex");
    }
    check_probability(p);
    Graph g(v);
    if (v < 2 || p <= 0.0) {
        return g;
    }
    const std::uint64_t total_pairs = static_cast<std::uint64_t>(v) * (v - 1) / 2;
    if (p >= 1.0) {
        for (VertexId a = 0; a + 1 < v; ++a) {
            for (VertexId b = a + 1; b < v; ++b) {
                g.add_edge(a, b, 1.0);
            }
        }
        return g;
    }

    Rng rng(seed);
    const double log_q = std::log1p(-p);
    std::uint64_t idx = 0;
    // First gap, then repeat: skip ~ Geometric(p) pairs between edges.
    for (;;) {
        const double u = rng.next_unit();
        const double skip = std::floor(std::log1p(-u) / log_q);
        if (!(skip >= 0.0) || skip >= static_cast<double>(total_pairs - idx)) {
            break;  // the next edge falls past the last pair
        }
        idx += static_cast<std::uint64_t>(skip);
        VertexId a, b;
        pair_from_index(idx, v, a, b);
        g.add_edge(a, b, 1.0);
        ++idx;
        if (idx >= total_pairs) {
            break;
        }
    }
    return g;
}

Graph gen_nws(std::size_t v, std::uint32_t k, double p, std::uint64_t seed) {
    if (!(v > k && k >= 2)) {
        throw std::invalid_argument("gen_nws: need v > k >= 2");
    }
    check_probability(p);
    const std::uint32_t half = k / 2;  // odd k joins the nearest k-1 neighbors

    Graph g(v);
    for (VertexId u = 0; u < v; ++u) {
        for (std::uint32_t j = 1; j <= half; ++j) {
            g.add_edge(u, static_cast<VertexId>((u + j) % v), 1.0);
        }
    }

    // One shortcut attempt per ring edge, in the ring construction order.
    Rng rng(seed);
    for (VertexId u = 0; u < v; ++u) {
        for (std::uint32_t j = 1; j <= half; ++j) {
            if (!rng.bernoulli(p)) {
                continue;
            }
            const VertexId w = static_cast<VertexId>(rng.next_below(v));
            if (w != u && !g.has_edge(u, w)) {
                g.add_edge(u, w, 1.0);
            }
        }
    }
    return g;
}

Graph gen_ba_tf(std::size_t v, std::uint32_t e, double p, std::uint64_t seed) {
    if (!(v > e && e >= 1)) {
        throw std::invalid_argument("gen_ba_tf: need v > e >= 1");
    }
    check_probability(p);

    Graph g(v);
    Rng rng(seed);
    std::vector<VertexId> endpoints;  // both ends of every edge, in add order
    endpoints.reserve(2 * e * (v - e));

    const auto connect = [&](VertexId u, VertexId t) {
        g.add_edge(u, t, 1.0);
        endpoints.push_back(u);
        endpoints.push_back(t);
    };

    // Degree-proportional target for u, fresh by resampling. While the first
    // vertex attaches (all degrees zero) targets are uniform over the seeds.
    const auto sample_pa = [&](VertexId u) {
        for (;;) {
            const VertexId t = u == e ? static_cast<VertexId>(rng.next_below(u))
                                      : endpoints[rng.next_below(endpoints.size())];
            if (t != u && !g.has_edge(u, t)) {
                return t;
            }
        }
    };

    for (VertexId u = e; u < v; ++u) {
        VertexId last_pa_target = sample_pa(u);
        connect(u, last_pa_target);
        for (std::uint32_t slot = 1; slot < e; ++slot) {
            if (rng.bernoulli(p)) {
                // Triad formation: a random neighbor of the last PA target
                // that is not yet connected to u.
                std::vector<VertexId> candidates;
                for (const Neighbor& nb : g.adjacency(last_pa_target)) {
                    if (nb.vertex != u && !g.has_edge(u, nb.vertex)) {
                        candidates.push_back(nb.vertex);
                    }
                }
                if (!candidates.empty()) {
                    connect(u, candidates[rng.next_below(candidates.size())]);
                    continue;
                }
            }
            last_pa_target = sample_pa(u);
            connect(u, last_pa_target);
        }
    }
    return g;
}

}  // namespace gotcent
