#pragma once

#include <string>
#include <vector>

#include "gotcent/graph.hpp"

namespace gotcent {

/// Per-vertex scores for one named measure. All entries are finite reals.
struct CentralityVector {
    std::string measure;
    std::vector<double> scores;
};

/// Unweighted degree of each vertex.
CentralityVector degree_centrality(const Graph& g);

/// Exact shortest-path betweenness (Brandes dependency accumulation on
/// unweighted BFS distances), summed over unordered pairs with the endpoints
/// excluded. Pairs in different components contribute 0. The classical
/// measures deliberately ignore edge weights.
CentralityVector betweenness_centrality(const Graph& g);

/// Component-scaled closeness: with r vertices reachable from u (u included),
/// score = (r-1)/sum(d) * (r-1)/(n-1). On a connected graph this reduces to
/// (n-1)/sum(d); isolated vertices score 0. Always in [0, 1].
CentralityVector closeness_centrality(const Graph& g);

/// Fraction of possible triangles through each vertex:
/// 2*T(u) / (D(u)*(D(u)-1)), with score 0 when D(u) <= 1.
CentralityVector clustering_coefficient(const Graph& g);

}  // namespace gotcent
