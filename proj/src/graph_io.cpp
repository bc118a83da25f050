#include "gotcent/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace gotcent {

namespace {

std::string format_double(double value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
    return buf;
}

bool parse_double_token(const std::string& token, double& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
            ++j;
        }
        if (j > i) {
            tokens.emplace_back(line.substr(i, j - i));
        }
        i = j;
    }
    return tokens;
}

void check_label(const std::string& label, std::size_t line) {
    if (label.find(',') != std::string::npos) {
        throw ParseError(line, "label '" + label + "' contains a comma");
    }
}

struct PendingEdge {
    VertexId u;
    VertexId v;
    double w;
};

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph parse_edge_list(std::istream& in) {
    std::unordered_map<std::string, VertexId> index_of;
    std::vector<std::string> labels;
    std::vector<PendingEdge> edges;
    std::size_t declared_vertices = 0;

    const auto intern = [&](const std::string& token, std::size_t line) {
        check_label(token, line);
        const auto [it, inserted] =
            index_of.emplace(token, static_cast<VertexId>(labels.size()));
        if (inserted) {
            labels.push_back(token);
        }
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto tokens = split_ws(line);
        if (tokens.empty()) {
            continue;
        }
        if (tokens[0][0] == '#') {
            // Writer directive: "# vertices: N" pre-declares indices 0..N-1.
            if (tokens.size() >= 3 && tokens[0] == "#" && tokens[1] == "vertices:") {
                std::size_t n = 0;
                const auto [ptr, ec] = std::from_chars(
                    tokens[2].data(), tokens[2].data() + tokens[2].size(), n);
                if (ec == std::errc() && ptr == tokens[2].data() + tokens[2].size()) {
                    for (std::size_t i = labels.size(); i < n; ++i) {
                        intern(std::to_string(i), line_no);
                    }
                    declared_vertices = std::max(declared_vertices, n);
                }
            }
            continue;
        }
        if (tokens.size() < 2 || tokens.size() > 3) {
            throw ParseError(line_no, "expected 'u v' or 'u v w'");
        }
        const VertexId u = intern(tokens[0], line_no);
        const VertexId v = intern(tokens[1], line_no);
        if (u == v) {
            throw ParseError(line_no, "self-loop on '" + tokens[0] + "'");
        }
        double w = 1.0;
        if (tokens.size() == 3) {
            if (!parse_double_token(tokens[2], w)) {
                throw ParseError(line_no, "weight '" + tokens[2] + "' is not a number");
            }
            if (!(w > 0.0) || !std::isfinite(w)) {
                throw ParseError(line_no, "weight must be a positive finite real");
            }
        }
        edges.push_back({u, v, w});
    }

    Graph g(std::max(labels.size(), declared_vertices));
    for (std::size_t v = 0; v < labels.size(); ++v) {
        g.set_label(static_cast<VertexId>(v), labels[v]);
    }
    for (const PendingEdge& e : edges) {
        g.add_edge(e.u, e.v, e.w);  // duplicates collapse, last weight wins
    }
    return g;
}

namespace {

// GML tokens: '[', ']', quoted strings, bare words. Tracks line numbers for
// error reporting.
class GmlLexer {
public:
    explicit GmlLexer(std::istream& in) : in_(in) {}

    struct Token {
        enum class Kind { open, close, string, word, eof } kind;
        std::string text;
        std::size_t line;
    };

    Token next() {
        if (pushed_) {
            pushed_ = false;
            return buffered_;
        }
        skip_space();
        int c = in_.get();
        if (c == EOF) {
            return {Token::Kind::eof, "", line_};
        }
        if (c == '[') {
            return {Token::Kind::open, "[", line_};
        }
        if (c == ']') {
            return {Token::Kind::close, "]", line_};
        }
        if (c == '"') {
            std::string text;
            const std::size_t start = line_;
            for (;;) {
                c = in_.get();
                if (c == EOF) {
                    throw ParseError(start, "unterminated string");
                }
                if (c == '"') {
                    break;
                }
                if (c == '\n') {
                    ++line_;
                }
                text.push_back(static_cast<char>(c));
            }
            return {Token::Kind::string, text, start};
        }
        std::string text(1, static_cast<char>(c));
        while (in_.peek() != EOF) {
            const int p = in_.peek();
            if (std::isspace(p) || p == '[' || p == ']' || p == '"') {
                break;
            }
            text.push_back(static_cast<char>(in_.get()));
        }
        return {Token::Kind::word, text, line_};
    }

    void push_back(const Token& t) {
        buffered_ = t;
        pushed_ = true;
    }

    std::size_t line() const noexcept { return line_; }

private:
    void skip_space() {
        while (in_.peek() != EOF) {
            const int p = in_.peek();
            if (p == '\n') {
                ++line_;
            } else if (!std::isspace(p)) {
                break;
            }
            in_.get();
        }
    }

    std::istream& in_;
    std::size_t line_ = 1;
    Token buffered_{};
    bool pushed_ = false;
};

// Consumes the value following a key: a scalar token or a balanced [...] block.
void gml_skip_value(GmlLexer& lex) {
    auto t = lex.next();
    using Kind = GmlLexer::Token::Kind;
    if (t.kind == Kind::string || t.kind == Kind::word) {
        return;
    }
    if (t.kind != Kind::open) {
        throw ParseError(t.line, "expected a value");
    }
    std::size_t depth = 1;
    while (depth > 0) {
        t = lex.next();
        if (t.kind == Kind::eof) {
            throw ParseError(t.line, "unbalanced brackets");
        }
        if (t.kind == Kind::open) {
            ++depth;
        } else if (t.kind == Kind::close) {
            --depth;
        }
    }
}

struct GmlNode {
    long long id = 0;
    std::optional<std::string> label;
};

struct GmlEdge {
    std::optional<long long> source;
    std::optional<long long> target;
    std::optional<double> value;
    std::size_t line = 0;
};

long long gml_int(const GmlLexer::Token& t) {
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), out);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw ParseError(t.line, "expected an integer, got '" + t.text + "'");
    }
    return out;
}

double gml_real(const GmlLexer::Token& t) {
    double out = 0.0;
    if (!parse_double_token(t.text, out)) {
        throw ParseError(t.line, "expected a number, got '" + t.text + "'");
    }
    return out;
}

}  // namespace

Graph parse_gml(std::istream& in, std::vector<std::string>* warnings) {
    using Kind = GmlLexer::Token::Kind;
    GmlLexer lex(in);

    // Skip top-level keys until the graph block.
    for (;;) {
        auto t = lex.next();
        if (t.kind == Kind::eof) {
            throw ParseError(t.line, "no 'graph' block found");
        }
        if (t.kind == Kind::word && t.text == "graph") {
            break;
        }
        if (t.kind == Kind::word) {
            gml_skip_value(lex);
            continue;
        }
        throw ParseError(t.line, "unexpected token '" + t.text + "' before 'graph'");
    }
    {
        const auto t = lex.next();
        if (t.kind != Kind::open) {
            throw ParseError(t.line, "expected '[' after 'graph'");
        }
    }

    std::vector<GmlNode> nodes;
    std::vector<GmlEdge> edges;
    bool directed = false;

    for (;;) {
        auto t = lex.next();
        if (t.kind == Kind::close) {
            break;
        }
        if (t.kind == Kind::eof) {
            throw ParseError(t.line, "unterminated 'graph' block");
        }
        if (t.kind != Kind::word) {
            throw ParseError(t.line, "expected a key inside 'graph'");
        }

        if (t.text == "node") {
            auto open = lex.next();
            if (open.kind != Kind::open) {
                throw ParseError(open.line, "expected '[' after 'node'");
            }
            GmlNode node;
            bool has_id = false;
            for (;;) {
                auto k = lex.next();
                if (k.kind == Kind::close) {
                    break;
                }
                if (k.kind != Kind::word) {
                    throw ParseError(k.line, "expected a key inside 'node'");
                }
                if (k.text == "id") {
                    node.id = gml_int(lex.next());
                    has_id = true;
                } else if (k.text == "label") {
                    auto v = lex.next();
                    if (v.kind != Kind::string && v.kind != Kind::word) {
                        throw ParseError(v.line, "expected a label value");
                    }
                    check_label(v.text, v.line);
                    node.label = v.text;
                } else {
                    gml_skip_value(lex);
                }
            }
            if (!has_id) {
                throw ParseError(t.line, "node without an id");
            }
            nodes.push_back(std::move(node));
        } else if (t.text == "edge") {
            auto open = lex.next();
            if (open.kind != Kind::open) {
                throw ParseError(open.line, "expected '[' after 'edge'");
            }
            GmlEdge edge;
            edge.line = t.line;
            for (;;) {
                auto k = lex.next();
                if (k.kind == Kind::close) {
                    break;
                }
                if (k.kind != Kind::word) {
                    throw ParseError(k.line, "expected a key inside 'edge'");
                }
                if (k.text == "source") {
                    edge.source = gml_int(lex.next());
                } else if (k.text == "target") {
                    edge.target = gml_int(lex.next());
                } else if (k.text == "value") {
                    edge.value = gml_real(lex.next());
                } else {
                    gml_skip_value(lex);
                }
            }
            if (!edge.source || !edge.target) {
                throw ParseError(edge.line, "edge without source/target");
            }
            edges.push_back(edge);
        } else if (t.text == "directed") {
            directed = gml_int(lex.next()) != 0;
        } else {
            gml_skip_value(lex);
        }
    }

    if (directed && warnings != nullptr) {
        warnings->push_back("GML declares 'directed 1'; edges are stored undirected");
    }

    std::map<long long, VertexId> index_of;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!index_of.emplace(nodes[i].id, static_cast<VertexId>(i)).second) {
            throw ParseError(1, "duplicate node id " + std::to_string(nodes[i].id));
        }
    }
    Graph g(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        g.set_label(static_cast<VertexId>(i),
                    nodes[i].label ? *nodes[i].label : std::to_string(nodes[i].id));
    }
    for (const GmlEdge& e : edges) {
        const auto su = index_of.find(*e.source);
        const auto sv = index_of.find(*e.target);
        if (su == index_of.end() || sv == index_of.end()) {
            throw ParseError(e.line, "edge references an undeclared node id");
        }
        if (su->second == sv->second) {
            throw ParseError(e.line, "self-loop on node id " + std::to_string(*e.source));
        }
        double w = 1.0;
        if (e.value) {
            if (!(*e.value > 0.0) || !std::isfinite(*e.value)) {
                throw ParseError(e.line, "edge value must be a positive finite real");
            }
            w = *e.value;
        }
        g.add_edge(su->second, sv->second, w);
    }
    return g;
}

Graph load_graph(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    const bool gml = path.size() >= 4 && path.compare(path.size() - 4, 4, ".gml") == 0;
    return gml ? parse_gml(in, warnings) : parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# vertices: " << g.vertex_count() << "\n";
    std::vector<Edge> sorted = g.edges();
    std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (const Edge& e : sorted) {
        out << e.u << ' ' << e.v;
        if (e.weight != 1.0) {
            out << ' ' << format_double(e.weight, 17);
        }
        out << '\n';
    }
}

void write_centrality_csv(const Graph& g, const std::vector<CentralityVector>& columns,
                          std::ostream& out) {
    const std::size_t n = g.vertex_count();
    for (const CentralityVector& col : columns) {
        if (col.scores.size() != n) {
            throw std::invalid_argument("column '" + col.measure +
                                        "' length does not match the vertex count");
        }
        for (double s : col.scores) {
            if (!std::isfinite(s)) {
                throw std::invalid_argument("column '" + col.measure +
                                            "' contains a non-finite score");
            }
        }
    }
    out << "vertex";
    for (const CentralityVector& col : columns) {
        out << ',' << col.measure;
    }
    out << '\n';
    for (VertexId v = 0; v < n; ++v) {
        out << g.label(v);
        for (const CentralityVector& col : columns) {
            out << ',' << format_double(col.scores[v], 10);
        }
        out << '\n';
    }
}

void write_edge_scores_csv(const Graph& g, const std::vector<double>& edge_scores,
                           std::ostream& out) {
    if (edge_scores.size() != g.edge_count()) {
        throw std::invalid_argument("edge score vector length does not match the edge count");
    }
    std::vector<std::size_t> order(g.edge_count());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    const auto& edges = g.edges();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return edges[a].u != edges[b].u ? edges[a].u < edges[b].u : edges[a].v < edges[b].v;
    });
    out << "u,v,psi_bar\n";
    for (std::size_t i : order) {
        out << g.label(edges[i].u) << ',' << g.label(edges[i].v) << ','
            << format_double(edge_scores[i], 10) << '\n';
    }
}

CentralityTable read_centrality_csv(std::istream& in) {
    CentralityTable table;
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw ParseError(1, "empty CSV");
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            header.push_back(field);
        }
    }
    if (header.empty() || header[0] != "vertex") {
        throw ParseError(1, "expected a 'vertex,...' header");
    }
    table.columns.resize(header.size() - 1);
    for (std::size_t c = 1; c < header.size(); ++c) {
        table.columns[c - 1].measure = header[c];
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != header.size()) {
            throw ParseError(line_no, "row width does not match the header");
        }
        table.labels.push_back(fields[0]);
        for (std::size_t c = 1; c < fields.size(); ++c) {
            double v = 0.0;
            if (!parse_double_token(fields[c], v)) {
                throw ParseError(line_no, "score '" + fields[c] + "' is not a number");
            }
            table.columns[c - 1].scores.push_back(v);
        }
    }
    return table;
}

}  // namespace gotcent
