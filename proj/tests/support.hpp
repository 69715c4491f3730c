#pragma once

// Shared helpers and independent reference oracles for the test suites.
// Everything here is deliberately written against the definitions, not the
// library's algorithms, so the two can check each other.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graphalg/graph.hpp"

namespace testsupport {

using graphalg::Graph;

inline Graph rose(int n) {
    std::vector<Graph::Edge> edges;
    for (int i = 1; i <= n; ++i) edges.push_back({"e" + std::to_string(i), 0, 0});
    return Graph("R" + std::to_string(n), {"v"}, std::move(edges));
}

inline Graph single_edge() { return Graph("E", {"v", "w"}, {{"e", 0, 1}}); }

inline Graph single_loop() { return Graph("L", {"v"}, {{"e", 0, 0}}); }

inline Graph from_matrix(const std::vector<std::vector<int>>& m, const std::string& name = "E") {
    size_t n = m.size();
    std::vector<std::string> vs;
    for (size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<Graph::Edge> edges;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (int k = 0; k < m[i][j]; ++k) {
                std::string e = "e" + std::to_string(i) + "_" + std::to_string(j);
                if (m[i][j] > 1) e += "_" + std::to_string(k);
                edges.push_back({e, static_cast<uint32_t>(i), static_cast<uint32_t>(j)});
            }
    return Graph(name, std::move(vs), std::move(edges));
}

// --- cofinality oracle ------------------------------------------------------
// Directly from the definition restricted to eventually periodic infinite
// paths gamma = prefix . (closed walk)^inf: for every vertex v and every such
// gamma there must be a vertex on gamma with a finite path from v. Only the
// vertex set of gamma matters, so walks and prefixes are deduplicated by
// (endpoint, vertex set); every failure of the definition is witnessed by a
// purely periodic path over a simple cycle, so the bounded enumeration is
// exhaustive on small graphs.
inline bool cofinal_oracle(const Graph& g, size_t max_walk_len = 0, size_t max_prefix_len = 0) {
    size_t n = g.vertex_count();
    if (max_walk_len == 0) max_walk_len = n + 1;
    if (max_prefix_len == 0) max_prefix_len = n;
    auto reach = g.reachability();

    using VSet = std::set<uint32_t>;
    // closed-walk vertex sets, keyed by the walk's base vertex
    std::set<std::pair<uint32_t, VSet>> walk_sets;
    std::set<std::tuple<uint32_t, uint32_t, VSet, size_t>> visited;
    auto extend = [&](auto&& self, uint32_t start, uint32_t v, VSet verts, size_t budget) -> void {
        if (!visited.insert({start, v, verts, budget}).second) return;
        for (uint32_t e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).src != v) continue;
            uint32_t w = g.edge(e).dst;
            if (w == start) walk_sets.insert({start, verts});
            if (budget > 1) {
                VSet v2 = verts;
                v2.insert(w);
                self(self, start, w, std::move(v2), budget - 1);
            }
        }
    };
    for (uint32_t s = 0; s < n; ++s) extend(extend, s, s, {s}, max_walk_len);
    if (walk_sets.empty()) return true;  // no infinite paths at all

    // prefix-path vertex sets, keyed by terminal vertex
    std::set<std::pair<uint32_t, VSet>> prefix_sets;
    std::set<std::tuple<uint32_t, VSet, size_t>> pvisited;
    auto walk_prefix = [&](auto&& self, uint32_t v, VSet seen, size_t budget) -> void {
        prefix_sets.insert({v, seen});
        if (budget == 0) return;
        if (!pvisited.insert({v, seen, budget}).second) return;
        for (uint32_t e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).src != v) continue;
            VSet s2 = seen;
            s2.insert(g.edge(e).dst);
            self(self, g.edge(e).dst, std::move(s2), budget - 1);
        }
    };
    for (uint32_t v = 0; v < n; ++v) walk_prefix(walk_prefix, v, {v}, max_prefix_len);

    for (const auto& [wstart, walk_verts] : walk_sets) {
        for (const auto& [pend, pre] : prefix_sets) {
            if (pend != wstart) continue;
            VSet gamma = walk_verts;
            gamma.insert(pre.begin(), pre.end());
            for (uint32_t v = 0; v < n; ++v) {
                bool ok = false;
                for (uint32_t u : gamma)
                    if (reach[v][u]) {
                        ok = true;
                        break;
                    }
                if (!ok) return false;
            }
        }
    }
    return true;
}

// --- simple cycle oracle ----------------------------------------------------
// Exhaustive depth-first enumeration over edge tuples with pairwise distinct
// sources, counting rotation classes once.
inline size_t count_simple_cycles_oracle(const Graph& g) {
    std::set<std::set<uint32_t>> seen;  // edge sets identify rotation classes
    size_t n = g.vertex_count();
    std::vector<uint32_t> path;
    std::vector<bool> used_vertex(n, false);
    size_t count = 0;
    auto dfs = [&](auto&& self, uint32_t start, uint32_t v) -> void {
        for (uint32_t e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).src != v) continue;
            uint32_t w = g.edge(e).dst;
            if (w == start) {
                path.push_back(e);
                std::set<uint32_t> key(path.begin(), path.end());
                if (seen.insert(key).second) ++count;
                path.pop_back();
            } else if (!used_vertex[w]) {
                used_vertex[w] = true;
                path.push_back(e);
                self(self, start, w);
                path.pop_back();
                used_vertex[w] = false;
            }
        }
    };
    for (uint32_t s = 0; s < n; ++s) {
        std::fill(used_vertex.begin(), used_vertex.end(), false);
        used_vertex[s] = true;
        dfs(dfs, s, s);
    }
    return count;
}

// Random multigraph with bounded size; edge count geometric-ish.
inline Graph random_graph(std::mt19937& rng, size_t max_vertices = 4, size_t max_edges = 8) {
    std::uniform_int_distribution<size_t> nv(1, max_vertices);
    size_t n = nv(rng);
    std::uniform_int_distribution<size_t> ne(0, max_edges);
    size_t m = ne(rng);
    std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(n - 1));
    std::vector<Graph::Edge> edges;
    for (size_t e = 0; e < m; ++e)
        edges.push_back({"e" + std::to_string(e), pick(rng), pick(rng)});
    std::vector<std::string> vs;
    for (size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    return Graph("G", std::move(vs), std::move(edges));
}

// Random DAG: edges only from lower to strictly higher vertex index.
inline Graph random_dag(std::mt19937& rng, size_t max_vertices = 6, size_t max_edges = 10) {
    std::uniform_int_distribution<size_t> nv(1, max_vertices);
    size_t n = nv(rng);
    std::uniform_int_distribution<size_t> ne(0, n == 1 ? 0 : max_edges);
    size_t m = ne(rng);
    std::vector<Graph::Edge> edges;
    std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(n - 1));
    for (size_t e = 0; e < m; ++e) {
        uint32_t a = pick(rng), b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        edges.push_back({"e" + std::to_string(edges.size()), a, b});
    }
    std::vector<std::string> vs;
    for (size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    return Graph("D", std::move(vs), std::move(edges));
}

}  // namespace testsupport
