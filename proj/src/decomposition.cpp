#include "cfc/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "cfc/errors.hpp"
#include "cfc/rng.hpp"

namespace cfc {

namespace {

LayeredColoring from_class_of(int n, std::vector<int> class_of) {
    LayeredColoring lc;
    lc.class_of = std::move(class_of);
    int m = 0;
    for (int c : lc.class_of) m = std::max(m, c + 1);
    lc.classes.resize(m);
    for (int v = 0; v < n; ++v) lc.classes[lc.class_of[v]].push_back(v);
    return lc;  // classes sorted because vertices are visited in order
}

}  // namespace

LayeredColoring greedy_proper_coloring(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    return greedy_proper_coloring(g, order);
}

LayeredColoring greedy_proper_coloring(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw precondition_error("greedy_proper_coloring: order must list every vertex once");
    std::vector<int> class_of(n, -1);
    std::vector<int> taken(max_degree(g) + 2, -1);
    for (int v : order) {
        for (int u : g.neighbors(v))
            if (class_of[u] >= 0) taken[class_of[u]] = v;
        int c = 0;
        while (taken[c] == v) ++c;
        class_of[v] = c;
    }
    return from_class_of(n, std::move(class_of));
}

std::vector<int> shuffled_order(int n, uint64_t seed) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    shuffle_vec(order, rng);
    return order;
}

LayeredColoring normalize(const Graph& g, const LayeredColoring& lc) {
    const int n = g.vertex_count();
    if (static_cast<int>(lc.class_of.size()) != n || !is_proper(g, lc))
        throw precondition_error("normalize: input is not a proper coloring of g");
    std::vector<int> class_of = lc.class_of;
    int m = static_cast<int>(lc.classes.size());
    std::vector<char> seen(m, 0);
    bool moved = true;
    while (moved) {
        moved = false;
        // scan in increasing class order
        for (int i = 1; i < m && !moved; ++i) {
            for (int v = 0; v < n && !moved; ++v) {
                if (class_of[v] != i) continue;
                std::fill(seen.begin(), seen.begin() + i, 0);
                for (int u : g.neighbors(v))
                    if (class_of[u] < i) seen[class_of[u]] = 1;
                for (int j = 0; j < i; ++j) {
                    if (!seen[j]) {
                        class_of[v] = j;
                        moved = true;
                        break;
                    }
                }
            }
        }
    }
    // compact away empty classes
    std::vector<int> size(m, 0);
    for (int v = 0; v < n; ++v) ++size[class_of[v]];
    std::vector<int> remap(m, -1);
    int next = 0;
    for (int c = 0; c < m; ++c)
        if (size[c] > 0) remap[c] = next++;
    for (int v = 0; v < n; ++v) class_of[v] = remap[class_of[v]];
    return from_class_of(n, std::move(class_of));
}

bool is_proper(const Graph& g, const LayeredColoring& lc) {
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v))
            if (lc.class_of[u] == lc.class_of[v]) return false;
    return true;
}

bool is_normalized(const Graph& g, const LayeredColoring& lc) {
    const int m = static_cast<int>(lc.classes.size());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int i = lc.class_of[v];
        std::vector<char> seen(m, 0);
        for (int u : g.neighbors(v)) seen[lc.class_of[u]] = 1;
        for (int j = 0; j < i; ++j)
            if (!seen[j]) return false;
    }
    return true;
}

int class_degree_max(const Graph& g, const LayeredColoring& lc) {
    const int m = static_cast<int>(lc.classes.size());
    std::vector<int> count(m, 0);
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::fill(count.begin(), count.end(), 0);
        for (int u : g.neighbors(v)) best = std::max(best, ++count[lc.class_of[u]]);
    }
    return best;
}

TriPartition partition_v123(const LayeredColoring& lc, int r) {
    if (r < 1) throw precondition_error("partition_v123: need r >= 1");
    const int m = static_cast<int>(lc.classes.size());
    TriPartition p;
    p.r = r;
    if (m == 0) return p;
    p.v1 = lc.classes[0];
    const int mid_end = std::min(m, r + 1);  // classes [1, mid_end) go to v2
    for (int c = 1; c < mid_end; ++c)
        p.v2.insert(p.v2.end(), lc.classes[c].begin(), lc.classes[c].end());
    for (int c = mid_end; c < m; ++c)
        p.v3.insert(p.v3.end(), lc.classes[c].begin(), lc.classes[c].end());
    std::sort(p.v2.begin(), p.v2.end());
    std::sort(p.v3.begin(), p.v3.end());
    return p;
}

}  // namespace cfc
