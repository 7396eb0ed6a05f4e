#include "cfc/hypergraph.hpp"

#include <algorithm>
#include <sstream>

#include "cfc/errors.hpp"

namespace cfc {

Hypergraph make_hypergraph(int n, std::vector<std::vector<int>> edges) {
    if (n < 0) throw precondition_error("hypergraph: vertex count must be nonnegative");
    for (auto& e : edges) {
        if (e.empty()) throw precondition_error("hypergraph: empty hyperedge");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw precondition_error("hypergraph: duplicate vertex within a hyperedge");
        if (e.front() < 0 || e.back() >= n)
            throw precondition_error("hypergraph: edge vertex out of range");
    }
    return Hypergraph{n, std::move(edges)};
}

int vertex_degree_max(const Hypergraph& h) {
    std::vector<int> deg(h.n, 0);
    for (const auto& e : h.edges)
        for (int v : e) ++deg[v];
    int best = 0;
    for (int d : deg) best = std::max(best, d);
    return best;
}

bool edges_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return true;
    }
    return false;
}

int max_edge_intersection_count(const Hypergraph& h) {
    const int m = static_cast<int>(h.edges.size());
    std::vector<int> count(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (edges_intersect(h.edges[i], h.edges[j])) {
                ++count[i];
                ++count[j];
            }
    int best = 0;
    for (int c : count) best = std::max(best, c);
    return best;
}

NeighborhoodHypergraph neighborhood_hypergraph(const Graph& g, const std::vector<int>& sources,
                                               const std::vector<int>& targets) {
    std::vector<int> dense(g.vertex_count(), -1);
    for (size_t i = 0; i < targets.size(); ++i) dense[targets[i]] = static_cast<int>(i);
    NeighborhoodHypergraph out;
    out.target_vertex = targets;
    std::vector<std::vector<int>> edges;
    edges.reserve(sources.size());
    for (int s : sources) {
        std::vector<int> e;
        for (int u : g.neighbors(s))
            if (dense[u] != -1) e.push_back(dense[u]);
        if (e.empty())
            throw precondition_error("neighborhood_hypergraph: source vertex " +
                                     std::to_string(s) + " has no neighbor in targets");
        edges.push_back(std::move(e));
        out.edge_source.push_back(s);
    }
    out.h = make_hypergraph(static_cast<int>(targets.size()), std::move(edges));
    return out;
}

std::string dump_edges(const Hypergraph& h) {
    std::ostringstream out;
    for (const auto& e : h.edges) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace cfc
