#ifndef CFC_COLORING_HPP
#define CFC_COLORING_HPP

#include <vector>

namespace cfc {

/// A coloring of one side of a vertex partition. `color` is indexed by
/// vertex id over the full ambient vertex set; vertices outside `domain`
/// carry 0. Used colors lie in 1..palette_size.
struct PartialColoring {
    std::vector<int> domain;  // sorted
    std::vector<int> color;
    int palette_size = 0;
};

}  // namespace cfc

#endif
