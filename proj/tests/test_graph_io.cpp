#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gotcent/generators.hpp"
#include "gotcent/graph_io.hpp"
#include "gotcent/rng.hpp"

using namespace gotcent;

namespace {

Graph parse_el(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph parse_g(const std::string& text, std::vector<std::string>* warnings = nullptr) {
    std::istringstream in(text);
    return parse_gml(in, warnings);
}

}  // namespace

TEST_CASE("edge list parsing") {
    const Graph g = parse_el("a b\nb c\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.label(0) == "a");
    CHECK(g.label(2) == "c");

    const Graph w = parse_el("a b 2.5\n# comment\n");
    CHECK(w.edge_count() == 1);
    CHECK(w.edges()[0].weight == 2.5);

    // Duplicate pairs collapse, last weight wins, either orientation.
    const Graph dup = parse_el("a b 2.0\nb a 7.0\n");
    CHECK(dup.edge_count() == 1);
    CHECK(dup.edges()[0].weight == 7.0);
}

TEST_CASE("edge list errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_el("a b -1\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_AS(parse_el("a b 0\n"), ParseError);
    CHECK_THROWS_AS(parse_el("a b xyz\n"), ParseError);
    CHECK_THROWS_AS(parse_el("a\n"), ParseError);
    CHECK_THROWS_AS(parse_el("a b 1 extra\n"), ParseError);
    CHECK_THROWS_AS(parse_el("a a\n"), ParseError);       // self-loop
    CHECK_THROWS_AS(parse_el("a,x b\n"), ParseError);     // comma in label
    try {
        parse_el("a b\nc\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("vertex directive copes with label collisions and odd placement") {
    // A numeric label interned before the directive must not stall or shift
    // the declared count.
    const Graph g = parse_el("a 2\n# vertices: 5\n");
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 1);
    CHECK(g.label(0) == "a");
    CHECK(g.label(1) == "2");

    // Unparseable or absent counts leave it an ordinary comment.
    CHECK(parse_el("# vertices: many\na b\n").vertex_count() == 2);
    CHECK(parse_el("#vertices: 9\na b\n").vertex_count() == 2);
}

TEST_CASE("edge list is whitespace and line-ending tolerant") {
    const Graph g = parse_el("  a\t  b   2.5\r\n\r\n b\tc\r\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges()[0].weight == 2.5);
}

TEST_CASE("edge list round-trips through the writer, isolated vertices included") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = gen_er(30, 0.05, seed);  // sparse: isolated vertices likely
        g.add_edge(0, 1, 0.125);           // one non-unit weight
        std::ostringstream out;
        write_edge_list(g, out);
        const Graph back = parse_el(out.str());
        REQUIRE(back.vertex_count() == g.vertex_count());
        REQUIRE(back.edge_count() == g.edge_count());
        for (const Edge& e : g.edges()) {
            CHECK(back.has_edge(e.u, e.v));
        }
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const Edge& e = g.edges()[i];
            for (const Neighbor& nb : back.adjacency(e.u)) {
                if (nb.vertex == e.v) {
                    CHECK(nb.weight == doctest::Approx(e.weight).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("gml minimal graph") {
    const Graph g = parse_g("graph [ node [ id 0 ] node [ id 1 ] edge [ source 0 target 1 ] ]");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("gml labels, values, sparse ids, unknown keys") {
    const std::string text = R"(
Creator "test fixture"
graph [
  comment "tolerated and ignored"
  node [ id 10 label "alpha" pos [ x 1 y 2 ] ]
  node [ id 20 label "beta" ]
  node [ id 30 ]
  edge [ source 10 target 20 value 2.5 extra [ nested [ deep 1 ] ] ]
  edge [ source 20 target 30 ]
]
)";
    const Graph g = parse_g(text);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.label(0) == "alpha");
    CHECK(g.label(1) == "beta");
    CHECK(g.label(2) == "30");  // unlabelled nodes fall back to their id
    CHECK(g.edges()[0].weight == 2.5);
    CHECK(g.edges()[1].weight == 1.0);
}

TEST_CASE("gml directed flag warns but loads undirected") {
    std::vector<std::string> warnings;
    const Graph g = parse_g(
        "graph [ directed 1 node [ id 0 ] node [ id 1 ] edge [ source 0 target 1 ] ]",
        &warnings);
    CHECK(g.edge_count() == 1);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("undirected") != std::string::npos);
}

TEST_CASE("gml errors") {
    CHECK_THROWS_AS(parse_g("graph [ node [ id 0 ] edge [ source 0 target 9 ] ]"), ParseError);
    CHECK_THROWS_AS(parse_g("graph [ node [ id 0 ]"), ParseError);  // unbalanced
    CHECK_THROWS_AS(parse_g("graph [ node [ ] ]"), ParseError);     // node without id
    CHECK_THROWS_AS(parse_g("nothing here"), ParseError);
    CHECK_THROWS_AS(parse_g("graph [ node [ id 0 ] node [ id 0 ] ]"), ParseError);
    CHECK_THROWS_AS(
        parse_g("graph [ node [ id 0 ] node [ id 1 ] "
                "edge [ source 0 target 1 value -3 ] ]"),
        ParseError);
}

TEST_CASE("parsers reject garbage with exceptions, never crash") {
    Rng rng(1234);
    const char alphabet[] = "ab01 .-#[]\"\n\r\tgraph node edge id source target value";
    for (int trial = 0; trial < 300; ++trial) {
        std::string text;
        const std::size_t len = rng.next_below(120);
        for (std::size_t i = 0; i < len; ++i) {
            text.push_back(alphabet[rng.next_below(sizeof(alphabet) - 1)]);
        }
        try {
            parse_el(text);
        } catch (const ParseError&) {
        }
        try {
            parse_g(text);
        } catch (const ParseError&) {
        }
    }
    CHECK(true);  // reaching here without UB/abort is the assertion
}

TEST_CASE("load_graph dispatches on the extension") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "gotcent_io_test";
    fs::create_directories(dir);

    {
        std::ofstream gml(dir / "net.gml");
        gml << "graph [ node [ id 0 ] node [ id 1 ] edge [ source 0 target 1 ] ]\n";
    }
    {
        std::ofstream el(dir / "net.edges");
        el << "a b\nb c\n";
    }
    CHECK(load_graph((dir / "net.gml").string()).vertex_count() == 2);
    CHECK(load_graph((dir / "net.edges").string()).vertex_count() == 3);
    CHECK_THROWS(load_graph((dir / "missing.edges").string()));
    fs::remove_all(dir);
}

TEST_CASE("centrality csv writer") {
    Graph g(2);
    g.add_edge(0, 1);

    std::ostringstream out;
    write_centrality_csv(g, {{"degree", {1.0, 1.0}}}, out);
    CHECK(out.str() == "vertex,degree\n0,1\n1,1\n");

    std::ostringstream bare;
    write_centrality_csv(g, {}, bare);
    CHECK(bare.str() == "vertex\n0\n1\n");

    std::ostringstream sig;
    write_centrality_csv(g, {{"x", {1.0 / 3.0, 2.0 / 3.0}}}, sig);
    CHECK(sig.str() == "vertex,x\n0,0.3333333333\n1,0.6666666667\n");

    std::ostringstream sink;
    CHECK_THROWS_AS(write_centrality_csv(g, {{"bad", {1.0}}}, sink), std::invalid_argument);
    CHECK_THROWS_AS(write_centrality_csv(g, {{"bad", {1.0, std::nan("")}}}, sink),
                    std::invalid_argument);
}

TEST_CASE("centrality csv round-trips through the reader") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.set_label(0, "x");
    std::ostringstream out;
    write_centrality_csv(g, {{"degree", {1.0, 2.0, 1.0}}, {"other", {0.5, 0.25, 0.125}}}, out);

    std::istringstream in(out.str());
    const CentralityTable table = read_centrality_csv(in);
    REQUIRE(table.columns.size() == 2);
    CHECK(table.labels == std::vector<std::string>{"x", "1", "2"});
    CHECK(table.columns[0].measure == "degree");
    CHECK(table.columns[0].scores == std::vector{1.0, 2.0, 1.0});
    CHECK(table.columns[1].scores == std::vector{0.5, 0.25, 0.125});
}

TEST_CASE("edge score csv") {
    Graph g(3);
    g.add_edge(1, 2);
    g.add_edge(0, 1);
    std::ostringstream out;
    write_edge_scores_csv(g, {3.5, 1.25}, out);  // scores by edge id, rows by (u,v)
    CHECK(out.str() == "u,v,psi_bar\n0,1,1.25\n1,2,3.5\n");
}
