#ifndef CFC_DEGREE_CF_COLORER_HPP
#define CFC_DEGREE_CF_COLORER_HPP

#include <vector>

#include "cfc/coloring.hpp"
#include "cfc/graph.hpp"
#include "cfc/hypergraph.hpp"

namespace cfc {

// True iff some vertex of the edge has a color unique within the edge.
bool edge_has_unique_color(const std::vector<int>& edge, const std::vector<int>& color);

// Indices of edges without a uniquely colored vertex.
std::vector<int> conflicted_edges(const Hypergraph& h, const std::vector<int>& color);

/// Conflict-free colors every hyperedge with at most vertex_degree_max(h)+1
/// colors: a greedy pass ordered by descending vertex degree first, then an
/// exhaustive backtracking fallback over the same palette. A conflict-free
/// coloring within that budget always exists, so the fallback cannot fail;
/// exhaustion raises logic_error.
PartialColoring cf_color_by_degree(const Hypergraph& h);

/// Colors Y with at most t_x+1 colors (t_x = measured max number of
/// X-neighbors of a Y-vertex) so every vertex of X sees some color exactly
/// once among its neighbors in Y. Throws precondition_error when some
/// X-vertex has no neighbor in Y.
PartialColoring neighborhood_cf_color(const Graph& g, const std::vector<int>& x,
                                      const std::vector<int>& y);

}  // namespace cfc

#endif
