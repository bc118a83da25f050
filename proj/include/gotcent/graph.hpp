#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gotcent {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// One adjacency entry: the neighbor, the id of the connecting edge, its weight.
struct Neighbor {
    VertexId vertex;
    EdgeId edge;
    double weight;
};

struct Edge {
    VertexId u;  // u < v
    VertexId v;
    double weight;
};

/// Undirected graph over dense vertex indices 0..n-1 with optional positive
/// edge weights (1.0 for unweighted input). External identifiers live in the
/// label map only. No self-loops, no duplicate edges: re-adding an existing
/// edge replaces its weight. Construction is single-threaded; a fully built
/// graph is safe for concurrent readers.
class Graph {
public:
    explicit Graph(std::size_t vertex_count);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    void add_edge(VertexId u, VertexId v, double weight = 1.0);
    bool has_edge(VertexId u, VertexId v) const;

    /// Neighbors of v in ascending vertex order.
    std::span<const Neighbor> adjacency(VertexId v) const;
    std::size_t degree(VertexId v) const;

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const std::string& label(VertexId v) const;
    void set_label(VertexId v, std::string label);

    /// Copy of this graph with every weight set to 1.0.
    Graph binarized() const;

private:
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

/// Maximal connected vertex sets; together they partition 0..n-1.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

}  // namespace gotcent
