#include "graphalg/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "graphalg/classify.hpp"
#include "graphalg/ktheory.hpp"

namespace graphalg {

namespace {

std::vector<long long> multiplicity_rowmajor(const Graph& g) {
    size_t n = g.vertex_count();
    std::vector<long long> m(n * n, 0);
    for (const auto& e : g.edges()) ++m[e.src * n + e.dst];
    return m;
}

std::vector<long long> min_over_permutations(const std::vector<long long>& m, size_t n) {
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<long long> best = m, cur(n * n);
    do {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) cur[i * n + j] = m[perm[i] * n + perm[j]];
        if (cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// m is canonical iff no permutation produces a lexicographically smaller
// matrix; compared lazily so most permutations abandon after a few cells
bool is_canonical(const std::vector<long long>& m, size_t n) {
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (size_t cell = 0; cell < n * n; ++cell) {
            long long p = m[perm[cell / n] * n + perm[cell % n]];
            if (p != m[cell]) {
                if (p < m[cell]) return false;
                break;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

Graph graph_from_multiplicities(const std::vector<long long>& m, size_t n) {
    std::vector<std::string> vs;
    for (size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<Graph::Edge> edges;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (long long k = 0; k < m[i * n + j]; ++k) {
                std::string name = "e" + std::to_string(i) + "_" + std::to_string(j);
                if (m[i * n + j] > 1) name += "_" + std::to_string(k);
                edges.push_back({name, static_cast<uint32_t>(i), static_cast<uint32_t>(j)});
            }
    return Graph("E" + std::to_string(n), std::move(vs), std::move(edges));
}

}  // namespace

std::vector<long long> canonical_adjacency(const Graph& g) {
    return min_over_permutations(multiplicity_rowmajor(g), g.vertex_count());
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_adjacency(a) == canonical_adjacency(b);
}

std::vector<Graph> enumerate_graphs(size_t vertex_count, bool allow_parallel,
                                    const std::function<bool(const Graph&)>& predicate) {
    if (vertex_count == 0 || vertex_count > 4)
        throw std::invalid_argument("enumerate_graphs: vertex count must be in 1..4");
    size_t cells = vertex_count * vertex_count;
    long long cap = allow_parallel ? 2 : 1;

    std::vector<Graph> out;
    std::vector<long long> m(cells, 0);
    for (;;) {
        // only canonical representatives survive, so each class appears once
        if (is_canonical(m, vertex_count)) {
            Graph g = graph_from_multiplicities(m, vertex_count);
            if (!predicate || predicate(g)) out.push_back(std::move(g));
        }
        size_t i = 0;
        while (i < cells && m[i] == cap) m[i++] = 0;
        if (i == cells) break;
        ++m[i];
    }
    // counter order is not canonical-lexicographic; normalize the output order
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
        return multiplicity_rowmajor(a) < multiplicity_rowmajor(b);
    });
    return out;
}

CensusReport run_census() {
    CensusReport report;
    auto predicate = [](const Graph& g) {
        return g.has_cycle() && g.condition_L() && g.is_cofinal();
    };
    for (size_t n = 1; n <= 3; ++n) {
        auto graphs = enumerate_graphs(n, false, predicate);
        report.by_vertices[n] = graphs.size();
        for (auto& g : graphs) {
            DetSign d = det_sign(g);
            // cofinal cyclic graphs have no sinks, so the determinant exists
            report.dets.push_back(*d.det);
            if (d.value != DetSignValue::negative) report.all_det_negative = false;
            report.graphs.push_back(std::move(g));
        }
    }
    return report;
}

HarnessReport conjecture_harness(const std::vector<Graph>& corpus) {
    HarnessReport r;
    r.graph_count = corpus.size();
    for (const Graph& E : corpus)
        for (const Graph& F : corpus) {
            ++r.pair_count;
            Verdict v[2][2];
            for (int rel = 0; rel < 2; ++rel)
                for (int alg = 0; alg < 2; ++alg) {
                    v[rel][alg] = compare(E, F, static_cast<Relation>(rel),
                                          static_cast<AlgebraKind>(alg));
                    ++r.cells[rel][alg][static_cast<int>(v[rel][alg].answer)];
                }
            for (int rel = 0; rel < 2; ++rel)
                if (v[rel][0].answer == Answer::YES && v[rel][1].answer == Answer::NO)
                    ++r.guard_violations;
            for (int alg = 0; alg < 2; ++alg)
                if (v[0][alg].answer == Answer::YES && v[1][alg].answer != Answer::YES)
                    ++r.monotonicity_violations;
        }
    return r;
}

}  // namespace graphalg
