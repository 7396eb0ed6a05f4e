#ifndef CFC_DECOMPOSITION_HPP
#define CFC_DECOMPOSITION_HPP

#include <cstdint>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

/// Ordered classes of a proper coloring. Class indices are 0-based; the
/// normalization property says every vertex in classes[i] has a neighbor
/// in every classes[j], j < i. No class is empty.
struct LayeredColoring {
    std::vector<std::vector<int>> classes;  // each sorted
    std::vector<int> class_of;              // vertex -> class index
};

// Smallest-free-class greedy in the given vertex order; uses at most
// max_degree+1 classes.
LayeredColoring greedy_proper_coloring(const Graph& g);
LayeredColoring greedy_proper_coloring(const Graph& g, const std::vector<int>& order);

std::vector<int> shuffled_order(int n, uint64_t seed);

// Moves vertices down to the smallest earlier class where they have no
// neighbor, until none can move; compacts empty classes. Properness is
// preserved and the class count never grows.
LayeredColoring normalize(const Graph& g, const LayeredColoring& lc);

bool is_proper(const Graph& g, const LayeredColoring& lc);
bool is_normalized(const Graph& g, const LayeredColoring& lc);

// Max over vertices v and classes C of |N(v) ∩ C|. At most k-1 on a
// normalized coloring of a K_{1,k}-free graph.
int class_degree_max(const Graph& g, const LayeredColoring& lc);

/// v1 is the first class. When more than r classes follow it, v2 takes the
/// next r classes and v3 the rest; otherwise v2 takes everything after v1
/// and v3 is empty. Keyed on the actual class count, not on max degree.
struct TriPartition {
    std::vector<int> v1, v2, v3;  // sorted, disjoint, covering all vertices
    int r = 0;
};

TriPartition partition_v123(const LayeredColoring& lc, int r);

}  // namespace cfc

#endif
