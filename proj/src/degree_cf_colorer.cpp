#include "cfc/degree_cf_colorer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cfc/errors.hpp"

namespace cfc {

bool edge_has_unique_color(const std::vector<int>& edge, const std::vector<int>& color) {
    std::vector<int> cols;
    cols.reserve(edge.size());
    for (int v : edge) cols.push_back(color[v]);
    std::sort(cols.begin(), cols.end());
    const size_t s = cols.size();
    for (size_t i = 0; i < s;) {
        size_t j = i + 1;
        while (j < s && cols[j] == cols[i]) ++j;
        if (j - i == 1) return true;
        i = j;
    }
    return false;
}

std::vector<int> conflicted_edges(const Hypergraph& h, const std::vector<int>& color) {
    std::vector<int> out;
    for (size_t e = 0; e < h.edges.size(); ++e)
        if (!edge_has_unique_color(h.edges[e], color)) out.push_back(static_cast<int>(e));
    return out;
}

namespace {

// Per-edge bookkeeping over the colored prefix: color multiplicities, the
// number of colors with multiplicity exactly 1, and how many vertices of the
// edge are colored so far.
struct EdgeState {
    std::vector<int> count;  // palette+1 entries
    int unique = 0;
    int colored = 0;

    void place(int c) {
        int after = ++count[c];
        if (after == 1)
            ++unique;
        else if (after == 2)
            --unique;
        ++colored;
    }
    void remove(int c) {
        int after = --count[c];
        if (after == 1)
            ++unique;
        else if (after == 0)
            --unique;
        --colored;
    }
};

struct Search {
    const Hypergraph& h;
    int palette;
    std::vector<std::vector<int>> incident;  // vertex -> edge indices
    std::vector<EdgeState> state;
    std::vector<int> edge_size;
    std::vector<int> color;

    explicit Search(const Hypergraph& hg, int pal) : h(hg), palette(pal) {
        incident.resize(h.n);
        for (size_t e = 0; e < h.edges.size(); ++e) {
            for (int v : h.edges[e]) incident[v].push_back(static_cast<int>(e));
            edge_size.push_back(static_cast<int>(h.edges[e].size()));
        }
        state.assign(h.edges.size(), EdgeState{std::vector<int>(palette + 1, 0), 0, 0});
        color.assign(h.n, 0);
    }

    void place(int v, int c) {
        color[v] = c;
        for (int e : incident[v]) state[e].place(c);
    }
    void remove(int v) {
        for (int e : incident[v]) state[e].remove(color[v]);
        color[v] = 0;
    }
    bool edge_dead(int e) const {
        return state[e].colored == edge_size[e] && state[e].unique == 0;
    }
    // count of incident edges that are conflict-free-so-far before v is
    // colored, but not after v takes color c
    int newly_conflicted(int v, int c) {
        int bad = 0;
        for (int e : incident[v]) {
            const EdgeState& st = state[e];
            bool before = st.colored > 0 && st.unique == 0;
            int after_unique = st.unique;
            int cnt = st.count[c];
            if (cnt == 0)
                ++after_unique;
            else if (cnt == 1)
                --after_unique;
            if (after_unique == 0 && !before) ++bad;
        }
        return bad;
    }

    bool backtrack(const std::vector<int>& order, size_t pos) {
        if (pos == order.size()) return true;
        int v = order[pos];
        for (int c = 1; c <= palette; ++c) {
            place(v, c);
            bool dead = false;
            for (int e : incident[v])
                if (edge_dead(e)) {
                    dead = true;
                    break;
                }
            if (!dead && backtrack(order, pos + 1)) return true;
            remove(v);
        }
        return false;
    }
};

}  // namespace

PartialColoring cf_color_by_degree(const Hypergraph& h) {
    std::vector<int> deg(h.n, 0);
    for (const auto& e : h.edges)
        for (int v : e) ++deg[v];
    const int t = h.n == 0 ? 0 : *std::max_element(deg.begin(), deg.end());
    const int palette = t + 1;

    std::vector<int> order(h.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });

    Search s(h, palette);
    for (int v : order) {
        int best_c = 1, best_bad = s.newly_conflicted(v, 1);
        for (int c = 2; c <= palette && best_bad > 0; ++c) {
            int bad = s.newly_conflicted(v, c);
            if (bad < best_bad) {
                best_bad = bad;
                best_c = c;
            }
        }
        s.place(v, best_c);
    }

    if (!conflicted_edges(h, s.color).empty()) {
        // exhaustive fallback over the same palette, covered vertices only
        Search bt(h, palette);
        std::vector<int> covered;
        for (int v : order)
            if (deg[v] > 0) covered.push_back(v);
        if (!bt.backtrack(covered, 0))
            throw std::logic_error(
                "cf_color_by_degree: backtracking exhausted a degree+1 palette");
        for (int v = 0; v < h.n; ++v)
            if (deg[v] == 0) bt.color[v] = 1;
        s.color = bt.color;
    }

    PartialColoring pc;
    pc.domain.resize(h.n);
    std::iota(pc.domain.begin(), pc.domain.end(), 0);
    pc.color = s.color;
    pc.palette_size = h.n == 0 ? 0 : *std::max_element(pc.color.begin(), pc.color.end());
    return pc;
}

PartialColoring neighborhood_cf_color(const Graph& g, const std::vector<int>& x,
                                      const std::vector<int>& y) {
    if (x.empty() || y.empty())
        throw precondition_error("neighborhood_cf_color: X and Y must be nonempty");
    NeighborhoodHypergraph nh;
    try {
        nh = neighborhood_hypergraph(g, x, y);
    } catch (const precondition_error& e) {
        throw precondition_error(std::string("neighborhood_cf_color precondition: ") + e.what());
    }
    PartialColoring on_h = cf_color_by_degree(nh.h);
    PartialColoring pc;
    pc.domain = y;
    pc.color.assign(g.vertex_count(), 0);
    for (int i = 0; i < nh.h.n; ++i) pc.color[nh.target_vertex[i]] = on_h.color[i];
    pc.palette_size = on_h.palette_size;
    const int t_x = vertex_degree_max(nh.h);
    if (pc.palette_size > t_x + 1)
        throw std::logic_error("neighborhood_cf_color: palette exceeds t_x + 1");
    return pc;
}

}  // namespace cfc
