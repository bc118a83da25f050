#include "gotcent/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gotcent {

namespace {

std::vector<Neighbor>::iterator find_slot(std::vector<Neighbor>& adj, VertexId target) {
    return std::lower_bound(adj.begin(), adj.end(), target,
                            [](const Neighbor& n, VertexId t) { return n.vertex < t; });
}

}  // namespace

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count), labels_(vertex_count) {
    for (std::size_t v = 0; v < vertex_count; ++v) {
        labels_[v] = std::to_string(v);
    }
}

void Graph::add_edge(VertexId u, VertexId v, double weight) {
    if (u == v) {
        throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
    }
    if (u >= vertex_count() || v >= vertex_count()) {
        throw std::out_of_range("edge endpoint out of range");
    }
    if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw std::invalid_argument("edge weight must be a positive finite real");
    }

    auto fwd = find_slot(adjacency_[u], v);
    if (fwd != adjacency_[u].end() && fwd->vertex == v) {
        // Existing edge: keep its id, replace the weight on both sides.
        fwd->weight = weight;
        find_slot(adjacency_[v], u)->weight = weight;
        edges_[fwd->edge].weight = weight;
        return;
    }
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    adjacency_[u].insert(fwd, Neighbor{v, id, weight});
    adjacency_[v].insert(find_slot(adjacency_[v], u), Neighbor{u, id, weight});
    edges_.push_back(Edge{std::min(u, v), std::max(u, v), weight});
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u >= vertex_count() || v >= vertex_count()) {
        return false;
    }
    const auto& adj = adjacency_[u];
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const Neighbor& n, VertexId t) { return n.vertex < t; });
    return it != adj.end() && it->vertex == v;
}

std::span<const Neighbor> Graph::adjacency(VertexId v) const {
    if (v >= vertex_count()) {
        throw std::out_of_range("vertex index out of range");
    }
    return adjacency_[v];
}

std::size_t Graph::degree(VertexId v) const {
    return adjacency(v).size();
}

const std::string& Graph::label(VertexId v) const {
    if (v >= vertex_count()) {
        throw std::out_of_range("vertex index out of range");
    }
    return labels_[v];
}

void Graph::set_label(VertexId v, std::string label) {
    if (v >= vertex_count()) {
        throw std::out_of_range("vertex index out of range");
    }
    labels_[v] = std::move(label);
}

Graph Graph::binarized() const {
    Graph out(vertex_count());
    for (const Edge& e : edges_) {
        out.add_edge(e.u, e.v, 1.0);
    }
    out.labels_ = labels_;
    return out;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<VertexId>> components;
    std::vector<bool> seen(n, false);
    std::vector<VertexId> queue;
    for (VertexId start = 0; start < n; ++start) {
        if (seen[start]) {
            continue;
        }
        std::vector<VertexId> component;
        seen[start] = true;
        queue.assign(1, start);
        while (!queue.empty()) {
            const VertexId v = queue.back();
            queue.pop_back();
            component.push_back(v);
            for (const Neighbor& nb : g.adjacency(v)) {
                if (!seen[nb.vertex]) {
                    seen[nb.vertex] = true;
                    queue.push_back(nb.vertex);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

}  // namespace gotcent
