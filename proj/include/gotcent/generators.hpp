#pragma once

#include <cstdint>

#include "gotcent/graph.hpp"

namespace gotcent {

/// G(v, p): each of the C(v,2) unordered pairs becomes an edge independently
/// with probability p. Runs in expected O(v + |E|) via geometric gap
/// sampling. Deterministic for a fixed seed within one build.
Graph gen_er(std::size_t v, double p, std::uint64_t seed);

/// Newman-Watts-Strogatz small world: a ring where every vertex is joined to
/// its k nearest neighbors (k odd uses k-1), then for each ring edge, with
/// probability p, one shortcut from its first endpoint to a uniformly random
/// vertex. No edges are removed; a shortcut that would be a self-loop or a
/// duplicate is dropped, not resampled.
Graph gen_nws(std::size_t v, std::uint32_t k, double p, std::uint64_t seed);

/// Holme-Kim scale-free growth: e isolated seed vertices, then every new
/// vertex attaches exactly e edges. The first edge of a vertex is always a
/// preferential attachment (uniform over the flat endpoint list; the very
/// first vertex samples the seeds uniformly while all degrees are zero). Each
/// later slot performs a triad-formation step with probability p (an edge to
/// a random neighbor of the last PA target not yet connected to the new
/// vertex), falling back to PA when no such neighbor exists. Collisions are
/// resampled, so the result has exactly e*(v-e) edges.
Graph gen_ba_tf(std::size_t v, std::uint32_t e, double p, std::uint64_t seed);

}  // namespace gotcent
