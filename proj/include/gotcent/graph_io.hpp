#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gotcent/centrality.hpp"
#include "gotcent/graph.hpp"

namespace gotcent {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Edge-list text: whitespace-separated `u v` or `u v w` lines, `#` starting
/// a comment line, CR/LF tolerant. Tokens are arbitrary strings (commas
/// rejected) used as vertex labels, indexed in first-appearance order; a
/// missing weight is 1.0 and a duplicate pair keeps the last weight. The
/// writer's `# vertices: N` header is recognized as a directive pre-declaring
/// N vertices labelled "0".."N-1", so isolated vertices survive a round trip.
Graph parse_edge_list(std::istream& in);

/// GML subset: a `graph [ ... ]` block of `node [ id N (label "S")? ]` and
/// `edge [ source N target N (value X)? ]` entries. Unknown keys, scalar or
/// bracketed, are skipped. `directed 1` is stored undirected with a warning
/// appended to `warnings` (when given).
Graph parse_gml(std::istream& in, std::vector<std::string>* warnings = nullptr);

/// Loads a graph file, picking the parser from the extension
/// (".gml" -> GML, anything else -> edge list).
Graph load_graph(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// Canonical edge list: `# vertices: N` directive, then one `u v [w]` line
/// per edge in ascending (u, v) index order; the weight is omitted when 1.0.
void write_edge_list(const Graph& g, std::ostream& out);

/// CSV with header `vertex,<name1>,...` and one row per vertex: label, then
/// each score at 10 significant digits. Every column must have |V| finite
/// entries.
void write_centrality_csv(const Graph& g, const std::vector<CentralityVector>& columns,
                          std::ostream& out);

/// CSV with header `u,v,psi_bar`: one row per edge (endpoint labels) with its
/// edge score, in ascending (u, v) index order.
void write_edge_scores_csv(const Graph& g, const std::vector<double>& edge_scores,
                           std::ostream& out);

/// Reads a centrality CSV back (labels plus one named column per score
/// field); the inverse of write_centrality_csv.
struct CentralityTable {
    std::vector<std::string> labels;
    std::vector<CentralityVector> columns;
};
CentralityTable read_centrality_csv(std::istream& in);

}  // namespace gotcent
