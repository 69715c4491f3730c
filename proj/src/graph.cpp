#include "graphalg/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace graphalg {

namespace {

bool is_ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

struct Token {
    std::string text;
    size_t column;  // 1-based
};

// Splits a line into identifier tokens, rejecting anything else.
std::vector<Token> tokenize_line(const std::string& line, size_t lineno) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (!is_ident_start(c))
            throw ParseError(lineno, i + 1, std::string("unexpected character '") + c + "'");
        size_t start = i;
        while (i < line.size() && is_ident_char(line[i])) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

}  // namespace

Graph::Graph(std::string name, std::vector<std::string> vertices, std::vector<Edge> edges)
    : name_(std::move(name)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::set<std::string> seen;
    for (const auto& v : vertices_)
        if (!seen.insert(v).second)
            throw std::invalid_argument("Graph: duplicate vertex id " + v);
    seen.clear();
    out_.resize(vertices_.size());
    for (uint32_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (!seen.insert(ed.name).second)
            throw std::invalid_argument("Graph: duplicate edge id " + ed.name);
        if (ed.src >= vertices_.size() || ed.dst >= vertices_.size())
            throw std::invalid_argument("Graph: edge endpoint out of range");
        out_[ed.src].push_back(e);
    }
}

Graph Graph::parse(std::string_view dsl) {
    std::string text(dsl);
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;

    std::optional<std::string> graph_name;
    std::vector<std::string> vertices;
    std::map<std::string, uint32_t, std::less<>> vertex_index;
    std::vector<Edge> edges;
    std::set<std::string> edge_names;
    bool edges_started = false;

    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        auto toks = tokenize_line(line, lineno);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;

        if (!graph_name) {
            if (kw != "graph")
                throw ParseError(lineno, toks[0].column, "expected 'graph <id>' as first declaration");
            if (toks.size() != 2)
                throw ParseError(lineno, toks[0].column, "'graph' takes exactly one identifier");
            graph_name = toks[1].text;
            continue;
        }
        if (kw == "graph")
            throw ParseError(lineno, toks[0].column, "duplicate 'graph' declaration");
        if (kw == "vertex") {
            if (edges_started)
                throw ParseError(lineno, toks[0].column, "vertex declared after edges");
            if (toks.size() != 2)
                throw ParseError(lineno, toks[0].column, "'vertex' takes exactly one identifier");
            const std::string& v = toks[1].text;
            if (vertex_index.count(v))
                throw ParseError(lineno, toks[1].column, "duplicate vertex id " + v);
            vertex_index.emplace(v, static_cast<uint32_t>(vertices.size()));
            vertices.push_back(v);
            continue;
        }
        if (kw == "edge") {
            edges_started = true;
            if (toks.size() != 4)
                throw ParseError(lineno, toks[0].column, "'edge' takes <id> <src> <dst>");
            const std::string& e = toks[1].text;
            if (edge_names.count(e))
                throw ParseError(lineno, toks[1].column, "duplicate edge id " + e);
            auto s = vertex_index.find(toks[2].text);
            if (s == vertex_index.end())
                throw ParseError(lineno, toks[2].column, "undeclared vertex " + toks[2].text);
            auto r = vertex_index.find(toks[3].text);
            if (r == vertex_index.end())
                throw ParseError(lineno, toks[3].column, "undeclared vertex " + toks[3].text);
            edge_names.insert(e);
            edges.push_back({e, s->second, r->second});
            continue;
        }
        throw ParseError(lineno, toks[0].column, "unknown declaration '" + kw + "'");
    }
    if (!graph_name) throw ParseError(lineno ? lineno : 1, 1, "empty input: expected 'graph <id>'");
    return Graph(*graph_name, std::move(vertices), std::move(edges));
}

std::string Graph::to_dsl() const {
    std::ostringstream os;
    os << "graph " << name_ << "\n";
    for (const auto& v : vertices_) os << "vertex " << v << "\n";
    for (const auto& e : edges_)
        os << "edge " << e.name << " " << vertices_[e.src] << " " << vertices_[e.dst] << "\n";
    return os.str();
}

std::optional<uint32_t> Graph::find_vertex(std::string_view name) const {
    for (uint32_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == name) return i;
    return std::nullopt;
}

std::optional<uint32_t> Graph::find_edge(std::string_view name) const {
    for (uint32_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].name == name) return i;
    return std::nullopt;
}

std::vector<uint32_t> Graph::sinks() const {
    std::vector<uint32_t> out;
    for (uint32_t v = 0; v < vertices_.size(); ++v)
        if (out_[v].empty()) out.push_back(v);
    return out;
}

std::vector<uint32_t> Graph::regular_vertices() const {
    std::vector<uint32_t> out;
    for (uint32_t v = 0; v < vertices_.size(); ++v)
        if (!out_[v].empty()) out.push_back(v);
    return out;
}

std::vector<uint32_t> Graph::sources() const {
    std::vector<bool> receives(vertices_.size(), false);
    for (const auto& e : edges_) receives[e.dst] = true;
    std::vector<uint32_t> out;
    for (uint32_t v = 0; v < vertices_.size(); ++v)
        if (!receives[v]) out.push_back(v);
    return out;
}

IntMatrix Graph::vertex_matrix() const {
    IntMatrix m(vertices_.size(), vertices_.size());
    for (const auto& e : edges_) m.at(e.src, e.dst) += BigInt(1);
    return m;
}

std::vector<std::vector<bool>> Graph::reachability() const {
    size_t n = vertices_.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (size_t v = 0; v < n; ++v) r[v][v] = true;
    for (const auto& e : edges_) r[e.src][e.dst] = true;
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    return r;
}

std::vector<Cycle> Graph::simple_cycles() const {
    // DFS over vertex-distinct paths; duplicates under rotation are avoided by
    // only closing cycles at their minimum-index vertex.
    std::vector<Cycle> cycles;
    size_t n = vertices_.size();
    std::vector<uint32_t> path_edges;
    std::vector<bool> on_path(n, false);

    auto dfs = [&](auto&& self, uint32_t start, uint32_t v) -> void {
        for (uint32_t e : out_[v]) {
            uint32_t w = edges_[e].dst;
            if (w == start) {
                path_edges.push_back(e);
                cycles.push_back(Cycle{path_edges});
                path_edges.pop_back();
            } else if (w > start && !on_path[w]) {
                on_path[w] = true;
                path_edges.push_back(e);
                self(self, start, w);
                path_edges.pop_back();
                on_path[w] = false;
            }
        }
    };
    for (uint32_t s = 0; s < n; ++s) {
        on_path[s] = true;
        dfs(dfs, s, s);
        on_path[s] = false;
    }

    // canonical rotation: start at the lexicographically least vertex name
    for (auto& c : cycles) {
        size_t best = 0;
        for (size_t i = 1; i < c.edges.size(); ++i)
            if (vertices_[edges_[c.edges[i]].src] < vertices_[edges_[c.edges[best]].src]) best = i;
        std::rotate(c.edges.begin(), c.edges.begin() + static_cast<std::ptrdiff_t>(best), c.edges.end());
    }
    std::sort(cycles.begin(), cycles.end(), [&](const Cycle& a, const Cycle& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        for (size_t i = 0; i < a.edges.size(); ++i) {
            const std::string& x = edges_[a.edges[i]].name;
            const std::string& y = edges_[b.edges[i]].name;
            if (x != y) return x < y;
        }
        return false;
    });
    return cycles;
}

bool Graph::condition_L() const {
    for (const Cycle& c : simple_cycles()) {
        bool has_exit = false;
        for (uint32_t e : c.edges)
            if (out_[edges_[e].src].size() >= 2) {
                has_exit = true;
                break;
            }
        if (!has_exit) return false;
    }
    return true;
}

bool Graph::is_cofinal() const {
    auto cycles = simple_cycles();
    if (cycles.empty()) return true;
    auto reach = reachability();
    for (size_t v = 0; v < vertices_.size(); ++v)
        for (const Cycle& c : cycles) {
            bool hits = false;
            for (uint32_t e : c.edges)
                if (reach[v][edges_[e].src]) {
                    hits = true;
                    break;
                }
            if (!hits) return false;
        }
    return true;
}

bool Graph::reaches_all_sinks() const {
    auto ts = sinks();
    if (ts.empty()) return true;
    auto reach = reachability();
    for (size_t v = 0; v < vertices_.size(); ++v)
        for (uint32_t t : ts)
            if (!reach[v][t]) return false;
    return true;
}

std::string Graph::fresh_name(std::string base, std::vector<std::string>& taken) const {
    while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "_";
    taken.push_back(base);
    return base;
}

Graph Graph::mat_n(size_t n) const {
    if (n == 0) throw std::invalid_argument("mat_n: n must be >= 1");
    if (n == 1) return *this;

    std::vector<std::string> vnames = vertices_;
    std::vector<std::string> enames;
    enames.reserve(edges_.size());
    for (const auto& e : edges_) enames.push_back(e.name);

    std::vector<Edge> edges = edges_;
    std::vector<std::string> head_names;  // per (orig vertex, level)
    // original block first, then heads grouped by vertex
    for (uint32_t v = 0; v < vertices_.size(); ++v)
        for (size_t k = 1; k < n; ++k)
            head_names.push_back(fresh_name(vertices_[v] + "_" + std::to_string(k), vnames));

    size_t idx = 0;
    for (uint32_t v = 0; v < vertices_.size(); ++v) {
        uint32_t prev = v;
        for (size_t k = 1; k < n; ++k, ++idx) {
            uint32_t vk = static_cast<uint32_t>(vertices_.size() + idx);
            edges.push_back({fresh_name(vertices_[v] + "_h" + std::to_string(k), enames), vk, prev});
            prev = vk;
        }
    }
    return Graph(name_ + "_mat" + std::to_string(n),
                 std::vector<std::string>(vnames.begin(), vnames.end()), std::move(edges));
}

GraphInput parse_graph_input(std::string_view dsl) {
    // a "# stabilized" comment ahead of the graph declaration marks SE
    std::string text(dsl);
    std::istringstream in(text);
    std::string line;
    bool stabilized = false;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] != '#') break;
        size_t p = line.find_first_not_of(" \t\r", first + 1);
        if (p != std::string::npos && line.compare(p, 10, "stabilized") == 0) {
            stabilized = true;
            break;
        }
    }
    Graph g = Graph::parse(dsl);
    if (stabilized) return StabilizedGraph{std::move(g)};
    return g;
}

std::string to_dsl(const GraphInput& input) {
    if (std::holds_alternative<Graph>(input)) return std::get<Graph>(input).to_dsl();
    return "# stabilized\n" + std::get<StabilizedGraph>(input).base.to_dsl();
}

}  // namespace graphalg
