#ifndef CFC_HYPERGRAPH_HPP
#define CFC_HYPERGRAPH_HPP

#include <string>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

/// Vertex set 0..n-1 plus a list of nonempty, duplicate-free hyperedges.
/// Edges are stored sorted so pairwise intersection tests are linear merges.
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;
};

// Validates ranges, sorts edges, rejects empty edges and in-edge duplicates.
Hypergraph make_hypergraph(int n, std::vector<std::vector<int>> edges);

// Max number of hyperedges any single vertex belongs to.
int vertex_degree_max(const Hypergraph& h);

// Max over edges E of the number of *other* edges (by index) meeting E.
int max_edge_intersection_count(const Hypergraph& h);

bool edges_intersect(const std::vector<int>& a, const std::vector<int>& b);

// One edge per source vertex: its graph neighbors inside `targets`, reindexed
// densely over targets. Bookkeeping maps edges back to their source and dense
// vertices back to the original graph.
struct NeighborhoodHypergraph {
    Hypergraph h;
    std::vector<int> target_vertex;  // dense index -> graph vertex
    std::vector<int> edge_source;    // edge index -> source graph vertex
};

// Throws precondition_error when a source has no neighbor in targets.
NeighborhoodHypergraph neighborhood_hypergraph(const Graph& g, const std::vector<int>& sources,
                                               const std::vector<int>& targets);

std::string dump_edges(const Hypergraph& h);  // one edge per line, debug aid

}  // namespace cfc

#endif
