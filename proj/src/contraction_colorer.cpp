#include "cfc/contraction_colorer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cfc/errors.hpp"

namespace cfc {

namespace {

bool in_sorted(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

std::vector<int> neighbors_in(const Graph& g, int v, const std::vector<int>& side) {
    std::vector<int> out;
    for (int u : g.neighbors(v))
        if (in_sorted(side, u)) out.push_back(u);
    return out;
}

}  // namespace

long long contraction_palette_bound(long long d_x, long long d_y) {
    return d_x * d_y + d_x - d_y + 1;
}

std::vector<int> representative_map(const Graph& g, const std::vector<int>& x,
                                    const std::vector<int>& y) {
    std::vector<int> rep;
    rep.reserve(y.size());
    for (int v : y) {
        auto nb = neighbors_in(g, v, x);
        if (nb.empty())
            throw precondition_error("contraction_color precondition (iii): vertex " +
                                     std::to_string(v) + " in Y has no neighbor in X");
        rep.push_back(nb.front());
    }
    return rep;
}

PartialColoring contraction_color(const Graph& g, const std::vector<int>& x,
                                  const std::vector<int>& y, int d_x, int d_y) {
    if (x.empty() || y.empty())
        throw precondition_error("contraction_color precondition (i): X and Y must be nonempty");
    for (int v : y)
        if (in_sorted(x, v))
            throw precondition_error("contraction_color precondition (i): vertex " +
                                     std::to_string(v) + " lies in both X and Y");
    auto check_dx = [&](int v) {
        int cnt = static_cast<int>(neighbors_in(g, v, x).size());
        if (cnt > d_x)
            throw precondition_error("contraction_color precondition (ii): vertex " +
                                     std::to_string(v) + " has " + std::to_string(cnt) +
                                     " neighbors in X > d_x = " + std::to_string(d_x));
    };
    for (int v : x) check_dx(v);
    for (int v : y) check_dx(v);
    for (int v : x) {
        int cnt = static_cast<int>(neighbors_in(g, v, y).size());
        if (cnt > d_y)
            throw precondition_error("contraction_color precondition (iv): vertex " +
                                     std::to_string(v) + " has " + std::to_string(cnt) +
                                     " neighbors in Y > d_y = " + std::to_string(d_y));
    }

    const auto rep = representative_map(g, x, y);

    // conflict graph over dense X indices
    const int nx = static_cast<int>(x.size());
    std::vector<int> dense(g.vertex_count(), -1);
    for (int i = 0; i < nx; ++i) dense[x[i]] = i;
    std::vector<std::vector<int>> conflict(nx);
    auto add_conflict = [&](int a, int b) {
        if (a == b) return;
        conflict[a].push_back(b);
        conflict[b].push_back(a);
    };
    for (int i = 0; i < nx; ++i)
        for (int u : g.neighbors(x[i]))
            if (dense[u] > i) add_conflict(i, dense[u]);
    for (size_t yi = 0; yi < y.size(); ++yi) {
        int r = dense[rep[yi]];
        for (int u : g.neighbors(y[yi]))
            if (dense[u] != -1 && u != rep[yi]) add_conflict(r, dense[u]);
    }
    int conflict_deg = 0;
    for (auto& nb : conflict) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        conflict_deg = std::max(conflict_deg, static_cast<int>(nb.size()));
    }
    const long long deg_bound =
        static_cast<long long>(d_x - 1) * d_y + d_x;  // construction invariant
    if (conflict_deg > deg_bound)
        throw std::logic_error("contraction_color: conflict degree " +
                               std::to_string(conflict_deg) + " exceeds bound " +
                               std::to_string(deg_bound));

    // greedy proper coloring of the conflict graph, colors 1-based
    PartialColoring pc;
    pc.domain = x;
    pc.color.assign(g.vertex_count(), 0);
    std::vector<int> xcolor(nx, 0);
    std::vector<int> taken(conflict_deg + 2, -1);
    for (int i = 0; i < nx; ++i) {
        for (int u : conflict[i])
            if (xcolor[u] > 0) taken[xcolor[u]] = i;
        int c = 1;
        while (taken[c] == i) ++c;
        xcolor[i] = c;
        pc.color[x[i]] = c;
        pc.palette_size = std::max(pc.palette_size, c);
    }
    if (pc.palette_size > contraction_palette_bound(d_x, d_y))
        throw std::logic_error("contraction_color: palette exceeds stated bound");
    return pc;
}

}  // namespace cfc
