"""Game of Thieves centrality toolkit.

Thin re-export of the compiled core: graph construction and file parsing,
the three network generators, the four classical centrality measures, the
Game of Thieves swarm centrality, and the correlation statistics.
"""

from ._core import (
    Graph,
    betweenness_centrality,
    closeness_centrality,
    clustering_coefficient,
    connected_components,
    default_epochs,
    degree_centrality,
    gen_ba_tf,
    gen_er,
    gen_nws,
    kendall,
    load_graph,
    parse_edge_list,
    parse_gml,
    pearson,
    rank,
    run_got,
    spearman,
    to_edge_list,
)

__all__ = [
    "Graph",
    "betweenness_centrality",
    "closeness_centrality",
    "clustering_coefficient",
    "connected_components",
    "default_epochs",
    "degree_centrality",
    "gen_ba_tf",
    "gen_er",
    "gen_nws",
    "kendall",
    "load_graph",
    "parse_edge_list",
    "parse_gml",
    "pearson",
    "rank",
    "run_got",
    "spearman",
    "to_edge_list",
]
