#include "cfc/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cfc/errors.hpp"
#include "cfc/rng.hpp"

namespace cfc {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw precondition_error("graph: vertex count must be nonnegative");
    adj_.resize(n_);
    if (n_ > 0 && n_ <= kBitRowLimit) {
        words_ = (n_ + 63) / 64;
        bits_.assign(static_cast<size_t>(n_) * words_, 0);
    }
}

int Graph::check(int v) const {
    if (v < 0 || v >= n_)
        throw precondition_error("graph: vertex " + std::to_string(v) + " out of range [0," +
                                 std::to_string(n_) + ")");
    return v;
}

void Graph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw precondition_error("graph: self-loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        throw precondition_error("graph: duplicate edge " + std::to_string(u) + " " +
                                 std::to_string(v));
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    if (!bits_.empty()) {
        bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t{1} << (v % 64);
        bits_[static_cast<size_t>(v) * words_ + u / 64] |= uint64_t{1} << (u % 64);
    }
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check(u);
    check(v);
    if (!bits_.empty())
        return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

std::vector<int> open_neighborhood(const Graph& g, int v) { return g.neighbors(v); }

std::vector<int> closed_neighborhood(const Graph& g, int v) {
    std::vector<int> nb = g.neighbors(v);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
    return nb;
}

int max_neighbors_within(const Graph& g, const std::vector<int>& verts,
                         const std::vector<int>& targets) {
    int best = 0;
    for (int v : verts) {
        const auto& nb = g.neighbors(v);
        int cnt = 0;
        // sorted-merge intersection count
        auto it = targets.begin();
        for (int u : nb) {
            it = std::lower_bound(it, targets.end(), u);
            if (it == targets.end()) break;
            if (*it == u) ++cnt;
        }
        best = std::max(best, cnt);
    }
    return best;
}

std::vector<int> isolated_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out.push_back(v);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> index(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        int v = verts[i];
        if (v < 0 || v >= g.vertex_count())
            throw precondition_error("induced_subgraph: vertex out of range");
        if (index[v] != -1) throw precondition_error("induced_subgraph: duplicate vertex");
        index[v] = static_cast<int>(i);
    }
    Graph sub(static_cast<int>(verts.size()));
    for (int v : verts)
        for (int u : g.neighbors(v))
            if (u > v && index[u] != -1) sub.add_edge(index[v], index[u]);
    return sub;
}

namespace detail {

namespace {

// Extends a partial independent set inside N(center) using a word-packed
// candidate mask. Candidates are always non-adjacent to every chosen leaf.
bool extend_star_bitset(const Graph& g, int k, std::vector<int>& leaves,
                        std::vector<uint64_t>& cand, int words) {
    if (static_cast<int>(leaves.size()) == k) return true;
    int remaining = 0;
    for (int w = 0; w < words; ++w) remaining += __builtin_popcountll(cand[w]);
    if (static_cast<int>(leaves.size()) + remaining < k) return false;
    for (int w = 0; w < words; ++w) {
        uint64_t bitsw = cand[w];
        while (bitsw) {
            int b = __builtin_ctzll(bitsw);
            bitsw &= bitsw - 1;
            int u = w * 64 + b;
            std::vector<uint64_t> next(cand);
            // drop u and everything below it, then everything adjacent to u
            next[w] &= ~((b == 63) ? ~uint64_t{0} : ((uint64_t{1} << (b + 1)) - 1));
            for (int ww = 0; ww < w; ++ww) next[ww] = 0;
            const uint64_t* row = g.bit_row(u);
            for (int ww = 0; ww < words; ++ww) next[ww] &= ~row[ww];
            leaves.push_back(u);
            if (extend_star_bitset(g, k, leaves, next, words)) return true;
            leaves.pop_back();
        }
    }
    return false;
}

bool extend_star_generic(const Graph& g, int k, std::vector<int>& leaves,
                         const std::vector<int>& cand) {
    if (static_cast<int>(leaves.size()) == k) return true;
    if (static_cast<int>(leaves.size() + cand.size()) < k) return false;
    for (size_t i = 0; i < cand.size(); ++i) {
        int u = cand[i];
        std::vector<int> next;
        for (size_t j = i + 1; j < cand.size(); ++j)
            if (!g.has_edge(u, cand[j])) next.push_back(cand[j]);
        leaves.push_back(u);
        if (extend_star_generic(g, k, leaves, next)) return true;
        leaves.pop_back();
    }
    return false;
}

}  // namespace

std::optional<StarWitness> find_star_bitset(const Graph& g, int k) {
    const int words = g.bit_words();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < k) continue;
        std::vector<uint64_t> cand(g.bit_row(v), g.bit_row(v) + words);
        std::vector<int> leaves;
        if (extend_star_bitset(g, k, leaves, cand, words)) return StarWitness{v, leaves};
    }
    return std::nullopt;
}

std::optional<StarWitness> find_star_generic(const Graph& g, int k) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < k) continue;
        std::vector<int> leaves;
        if (extend_star_generic(g, k, leaves, g.neighbors(v)))
            return StarWitness{v, leaves};
    }
    return std::nullopt;
}

}  // namespace detail

std::optional<StarWitness> find_induced_star(const Graph& g, int k) {
    if (k < 2) throw precondition_error("find_induced_star: k must be >= 2");
    if (g.has_bit_rows()) return detail::find_star_bitset(g, k);
    return detail::find_star_generic(g, k);
}

Graph line_graph(const Graph& g) {
    if (g.edge_count() == 0) throw precondition_error("line_graph: input graph has no edges");
    // edge ids in lexicographic (u,v) order, u < v
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    std::vector<std::vector<int>> incident(g.vertex_count());
    for (size_t e = 0; e < edges.size(); ++e) {
        incident[edges[e].first].push_back(static_cast<int>(e));
        incident[edges[e].second].push_back(static_cast<int>(e));
    }
    Graph lg(static_cast<int>(edges.size()));
    // two distinct edges of a simple graph share at most one endpoint, so
    // every adjacent pair is generated exactly once
    for (int v = 0; v < g.vertex_count(); ++v)
        for (size_t i = 0; i < incident[v].size(); ++i)
            for (size_t j = i + 1; j < incident[v].size(); ++j)
                lg.add_edge(incident[v][i], incident[v][j]);
    return lg;
}

Graph complete(int n) {
    if (n < 1) throw precondition_error("complete: need n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    if (n < 1) throw precondition_error("path: need n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw precondition_error("cycle: need n >= 3");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star(int k) {
    if (k < 1) throw precondition_error("star: need k >= 1");
    Graph g(k + 1);
    for (int v = 1; v <= k; ++v) g.add_edge(0, v);
    return g;
}

Graph gnp_random(int n, double p, uint64_t seed) {
    if (n < 1) throw precondition_error("gnp_random: need n >= 1");
    if (p < 0.0 || p > 1.0) throw precondition_error("gnp_random: p outside [0,1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform_real01(rng) < p) g.add_edge(u, v);
    return g;
}

Graph random_line_graph(int n, double p, uint64_t seed) {
    if (n < 2 || p <= 0.0)
        throw precondition_error("random_line_graph: need n >= 2 and p > 0");
    std::mt19937_64 rng(seed);
    for (;;) {
        Graph base(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (uniform_real01(rng) < p) base.add_edge(u, v);
        if (base.edge_count() > 0) return line_graph(base);
    }
}

namespace {

Graph from_labeled_edges(const std::vector<std::pair<long long, long long>>& raw,
                         std::vector<long long>& labels) {
    labels.clear();
    for (auto [u, v] : raw) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto dense = [&](long long x) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), x) -
                                labels.begin());
    };
    Graph g(static_cast<int>(labels.size()));
    for (auto [u, v] : raw) g.add_edge(dense(u), dense(v));
    return g;
}

}  // namespace

ParsedGraph parse_edge_list(const std::string& text) {
    std::vector<std::pair<long long, long long>> raw;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v))
            throw input_error("edge list line " + std::to_string(lineno) +
                              ": expected two vertex labels");
        std::string extra;
        if (ls >> extra)
            throw input_error("edge list line " + std::to_string(lineno) + ": trailing token '" +
                              extra + "'");
        if (u < 0 || v < 0)
            throw input_error("edge list line " + std::to_string(lineno) +
                              ": negative vertex label");
        if (u == v)
            throw input_error("edge list line " + std::to_string(lineno) + ": self-loop at " +
                              std::to_string(u));
        raw.emplace_back(u, v);
    }
    ParsedGraph out;
    try {
        out.graph = from_labeled_edges(raw, out.labels);
    } catch (const precondition_error& e) {
        throw input_error(std::string("edge list: ") + e.what());
    }
    return out;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
    return out.str();
}

ParsedGraph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    ParsedGraph out;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long nn, mm;
            if (!(ls >> kind >> nn >> mm) || (kind != "edge" && kind != "col"))
                throw input_error("dimacs line " + std::to_string(lineno) +
                                  ": malformed problem line");
            if (n != -1)
                throw input_error("dimacs line " + std::to_string(lineno) +
                                  ": duplicate problem line");
            if (nn < 0 || nn > 50'000'000)
                throw input_error("dimacs: vertex count out of range");
            n = static_cast<int>(nn);
            out.graph = Graph(n);
        } else if (tag == "e") {
            if (n == -1)
                throw input_error("dimacs line " + std::to_string(lineno) +
                                  ": edge before problem line");
            long long u, v;
            if (!(ls >> u >> v))
                throw input_error("dimacs line " + std::to_string(lineno) +
                                  ": malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw input_error("dimacs line " + std::to_string(lineno) +
                                  ": vertex index out of range 1.." + std::to_string(n));
            try {
                out.graph.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
            } catch (const precondition_error& e) {
                throw input_error("dimacs line " + std::to_string(lineno) + ": " + e.what());
            }
        } else {
            throw input_error("dimacs line " + std::to_string(lineno) + ": unknown tag '" + tag +
                              "'");
        }
    }
    if (n == -1) throw input_error("dimacs: missing problem line");
    out.labels.resize(n);
    for (int v = 0; v < n; ++v) out.labels[v] = v + 1;
    return out;
}

std::string emit_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

}  // namespace cfc
