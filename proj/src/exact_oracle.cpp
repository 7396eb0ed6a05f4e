#include "cfc/exact_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cfc/errors.hpp"
#include "cfc/pipeline.hpp"

namespace cfc {

namespace {

template <class Verify>
bool search(const Graph& g, int q, std::vector<int>& color, int v, int max_used,
            const Verify& ok_at_leaf) {
    const int n = g.vertex_count();
    if (v == n) return ok_at_leaf(color);
    const int top = std::min(max_used + 1, q);
    for (int c = 1; c <= top; ++c) {
        color[v] = c;
        if (search(g, q, color, v + 1, std::max(max_used, c), ok_at_leaf)) return true;
    }
    color[v] = 0;
    return false;
}

template <class Verify>
std::optional<std::vector<int>> find_coloring(const Graph& g, int q, const Verify& ok) {
    if (q < 1) throw precondition_error("oracle: need at least one color");
    std::vector<int> color(g.vertex_count(), 0);
    if (search(g, q, color, 0, 0, ok)) return color;
    return std::nullopt;
}

void check_size(const Graph& g, int size_limit) {
    if (g.vertex_count() == 0) throw precondition_error("oracle: empty graph");
    if (g.vertex_count() > size_limit)
        throw precondition_error("oracle: graph has " + std::to_string(g.vertex_count()) +
                                 " vertices, above the size limit " +
                                 std::to_string(size_limit));
}

}  // namespace

std::optional<std::vector<int>> find_cfon_coloring(const Graph& g, int q) {
    return find_coloring(g, q,
                         [&](const std::vector<int>& c) { return verify_cfon(g, c).empty(); });
}

std::optional<std::vector<int>> find_cfcn_coloring(const Graph& g, int q) {
    return find_coloring(g, q,
                         [&](const std::vector<int>& c) { return verify_cfcn(g, c).empty(); });
}

std::optional<int> exact_cfon_number(const Graph& g, int max_colors, int size_limit) {
    check_size(g, size_limit);
    if (auto iso = isolated_vertices(g); !iso.empty())
        throw precondition_error("oracle: CFON undefined with isolated vertex " +
                                 std::to_string(iso.front()));
    for (int q = 1; q <= max_colors; ++q)
        if (find_cfon_coloring(g, q)) return q;
    return std::nullopt;
}

std::optional<int> exact_cfcn_number(const Graph& g, int max_colors, int size_limit) {
    check_size(g, size_limit);
    for (int q = 1; q <= max_colors; ++q)
        if (find_cfcn_coloring(g, q)) return q;
    return std::nullopt;
}

namespace {

int pair_index(int n, int i, int j) {  // i < j, upper triangle row-major
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Graph graph_from_mask(int n, uint64_t mask) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((mask >> pair_index(n, i, j)) & 1) g.add_edge(i, j);
    return g;
}

bool mask_connected(int n, uint64_t mask) {
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u) {
            if (u == v || seen[u]) continue;
            int i = std::min(u, v), j = std::max(u, v);
            if ((mask >> pair_index(n, i, j)) & 1) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

}  // namespace

uint64_t canonical_mask(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw precondition_error("canonical_mask: brute force limited to n <= 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t mask = 0;
        for (int i = 0; i < n; ++i)
            for (int j : g.neighbors(i)) {
                if (j <= i) continue;
                int a = perm[i], b = perm[j];
                if (a > b) std::swap(a, b);
                mask |= uint64_t{1} << pair_index(n, a, b);
            }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> connected_graph_corpus(int max_n, bool dedup) {
    if (max_n < 2) return {};
    if (max_n > 6)
        throw precondition_error("connected_graph_corpus: exhaustive enumeration limited to n <= 6");
    std::vector<Graph> corpus;
    for (int n = 2; n <= max_n; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::unordered_set<uint64_t> seen;
        std::vector<uint64_t> keep;
        for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
            if (!mask_connected(n, mask)) continue;
            if (dedup) {
                uint64_t canon = canonical_mask(graph_from_mask(n, mask));
                if (!seen.insert(canon).second) continue;
                keep.push_back(canon);
            } else {
                keep.push_back(mask);
            }
        }
        std::sort(keep.begin(), keep.end());
        for (uint64_t mask : keep) corpus.push_back(graph_from_mask(n, mask));
    }
    return corpus;
}

InequalityReport sweep_inequality(const std::vector<Graph>& corpus) {
    InequalityReport report;
    for (size_t idx = 0; idx < corpus.size(); ++idx) {
        const Graph& g = corpus[idx];
        InequalityRow row;
        row.n = g.vertex_count();
        row.m = g.edge_count();
        {
            std::ostringstream id;
            id << "g" << row.n << "_" << idx;
            row.id = id.str();
        }
        // all-distinct colors are always valid, so n colors suffice
        row.cfon = exact_cfon_number(g, row.n).value();
        row.cfcn = exact_cfcn_number(g, row.n).value();
        row.ratio = static_cast<double>(row.cfcn) / row.cfon;
        if (row.cfcn > 2 * row.cfon) report.violations.push_back(row.id);
        report.max_ratio = std::max(report.max_ratio, row.ratio);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string format_report(const InequalityReport& report) {
    std::ostringstream out;
    out << "id\tn\tm\tcfon\tcfcn\tratio\n";
    out.setf(std::ios::fixed);
    out.precision(3);
    for (const auto& r : report.rows)
        out << r.id << '\t' << r.n << '\t' << r.m << '\t' << r.cfon << '\t' << r.cfcn << '\t'
            << r.ratio << '\n';
    out << "max_ratio\t" << report.max_ratio << '\n';
    out << "violations\t" << report.violations.size() << '\n';
    return out.str();
}

}  // namespace cfc
