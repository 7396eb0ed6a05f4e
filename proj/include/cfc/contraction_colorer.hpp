#ifndef CFC_CONTRACTION_COLORER_HPP
#define CFC_CONTRACTION_COLORER_HPP

#include <vector>

#include "cfc/coloring.hpp"
#include "cfc/graph.hpp"

namespace cfc {

/// Colors X with at most d_x*d_y + d_x - d_y + 1 colors so that every vertex
/// of Y sees some color exactly once among its neighbors in X. Each y gets a
/// representative rep(y) = its smallest-index X-neighbor; a conflict graph on
/// X joins rep(y) to every other X-neighbor of y, plus the original X-X
/// edges, and is greedy-colored. Only vertices in X ∪ Y are considered.
///
/// Preconditions, validated (precondition_error names the failing one):
///   (i)   x and y disjoint and nonempty,
///   (ii)  every vertex of X ∪ Y has at most d_x neighbors in X,
///   (iii) every vertex of Y has at least one neighbor in X,
///   (iv)  every vertex of X has at most d_y neighbors in Y.
PartialColoring contraction_color(const Graph& g, const std::vector<int>& x,
                                  const std::vector<int>& y, int d_x, int d_y);

// rep(y) for each y in order: the smallest-index X-neighbor.
std::vector<int> representative_map(const Graph& g, const std::vector<int>& x,
                                    const std::vector<int>& y);

// Color budget of the construction at the given degree bounds.
long long contraction_palette_bound(long long d_x, long long d_y);

}  // namespace cfc

#endif
