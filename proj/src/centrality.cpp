#include "gotcent/centrality.hpp"

#include <cstdint>
#include <vector>

namespace gotcent {

CentralityVector degree_centrality(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> scores(n);
    for (VertexId v = 0; v < n; ++v) {
        scores[v] = static_cast<double>(g.degree(v));
    }
    return {"degree", std::move(scores)};
}

CentralityVector betweenness_centrality(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> bc(n, 0.0);

    std::vector<std::int32_t> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<VertexId> queue(n);   // BFS queue, doubles as the visit order
    std::vector<VertexId>& stack = queue;

    for (VertexId source = 0; source < n; ++source) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);

        dist[source] = 0;
        sigma[source] = 1.0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = source;
        while (head < tail) {
            const VertexId v = queue[head++];
            for (const Neighbor& nb : g.adjacency(v)) {
                const VertexId w = nb.vertex;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                }
            }
        }

        // Vertices leave the queue in non-decreasing distance; walk them in
        // reverse to accumulate dependencies.
        for (std::size_t i = tail; i-- > 0;) {
            const VertexId w = stack[i];
            for (const Neighbor& nb : g.adjacency(w)) {
                const VertexId v = nb.vertex;
                if (dist[v] == dist[w] - 1) {
                    delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
                }
            }
            if (w != source) {
                bc[w] += delta[w];
            }
        }
    }

    // Directed accumulation counts each unordered pair twice.
    for (double& s : bc) {
        s *= 0.5;
    }
    return {"betweenness", std::move(bc)};
}

CentralityVector closeness_centrality(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> scores(n, 0.0);
    if (n < 2) {
        return {"closeness", std::move(scores)};
    }

    std::vector<std::int32_t> dist(n);
    std::vector<VertexId> queue(n);
    for (VertexId source = 0; source < n; ++source) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[source] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = source;
        std::uint64_t dist_sum = 0;
        std::size_t reachable = 1;
        while (head < tail) {
            const VertexId v = queue[head++];
            for (const Neighbor& nb : g.adjacency(v)) {
                if (dist[nb.vertex] < 0) {
                    dist[nb.vertex] = dist[v] + 1;
                    dist_sum += static_cast<std::uint64_t>(dist[nb.vertex]);
                    ++reachable;
                    queue[tail++] = nb.vertex;
                }
            }
        }
        if (reachable < 2) {
            continue;  // isolated vertex
        }
        const double r_minus_1 = static_cast<double>(reachable - 1);
        scores[source] = (r_minus_1 / static_cast<double>(dist_sum)) *
                         (r_minus_1 / static_cast<double>(n - 1));
    }
    return {"closeness", std::move(scores)};
}

CentralityVector clustering_coefficient(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> scores(n, 0.0);
    std::vector<bool> is_neighbor(n, false);
    for (VertexId u = 0; u < n; ++u) {
        const auto adj = g.adjacency(u);
        const std::size_t d = adj.size();
        if (d < 2) {
            continue;
        }
        for (const Neighbor& nb : adj) {
            is_neighbor[nb.vertex] = true;
        }
        std::uint64_t links = 0;  // ordered neighbor pairs that are connected
        for (const Neighbor& nb : adj) {
            for (const Neighbor& nn : g.adjacency(nb.vertex)) {
                if (is_neighbor[nn.vertex]) {
                    ++links;
                }
            }
        }
        for (const Neighbor& nb : adj) {
            is_neighbor[nb.vertex] = false;
        }
        // links counts each triangle edge twice: triangles T(u) = links / 2,
        // and CC(u) = 2*T(u) / (d*(d-1)) = links / (d*(d-1)).
        scores[u] = static_cast<double>(links) /
                    (static_cast<double>(d) * static_cast<double>(d - 1));
    }
    return {"clustering", std::move(scores)};
}

}  // namespace gotcent
