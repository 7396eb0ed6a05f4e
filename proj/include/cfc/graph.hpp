#ifndef CFC_GRAPH_HPP
#define CFC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cfc {

/// Simple undirected graph on dense vertices 0..n-1. No self-loops, no
/// multi-edges; adjacency lists are kept sorted and symmetric. Once built,
/// a Graph is treated as immutable and may be shared across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Throws precondition_error on self-loop, out-of-range or duplicate edge.
    void add_edge(int u, int v);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }
    bool has_edge(int u, int v) const;

    // Word-packed adjacency rows, available when vertex_count() is small
    // enough that the n*n bit matrix is cheap (see kBitRowLimit).
    bool has_bit_rows() const { return !bits_.empty(); }
    const uint64_t* bit_row(int v) const { return bits_.data() + static_cast<size_t>(check(v)) * words_; }
    int bit_words() const { return words_; }

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

    static constexpr int kBitRowLimit = 8192;

private:
    int check(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> bits_;  // n_ rows of words_ words each; empty above kBitRowLimit
    int words_ = 0;
};

struct StarWitness {
    int center = -1;
    std::vector<int> leaves;  // sorted; pairwise non-adjacent, all adjacent to center
};

int max_degree(const Graph& g);
std::vector<int> open_neighborhood(const Graph& g, int v);
std::vector<int> closed_neighborhood(const Graph& g, int v);

// Largest |N(v) ∩ targets| over v in verts. Both sets are sorted vertex lists.
int max_neighbors_within(const Graph& g, const std::vector<int>& verts,
                         const std::vector<int>& targets);

std::vector<int> isolated_vertices(const Graph& g);

// Subgraph induced on the given (sorted, duplicate-free) vertex set; vertices
// are renumbered densely in the given order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

// Searches for an induced K_{1,k}: a vertex with k pairwise non-adjacent
// neighbors. Returns the first witness in vertex order, or nullopt when the
// graph is K_{1,k}-free. Requires k >= 2.
std::optional<StarWitness> find_induced_star(const Graph& g, int k);

// One vertex per edge of g, adjacent iff the edges share an endpoint.
// Throws precondition_error on an edgeless graph.
Graph line_graph(const Graph& g);

// Generators.
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int k);  // K_{1,k}: hub is vertex 0
Graph gnp_random(int n, double p, uint64_t seed);
Graph random_line_graph(int n, double p, uint64_t seed);

// File formats. Parsers remap arbitrary integer labels to dense indices
// in increasing label order and keep the label table.
struct ParsedGraph {
    Graph graph;
    std::vector<long long> labels;  // dense index -> original label
};

ParsedGraph parse_edge_list(const std::string& text);
ParsedGraph parse_dimacs(const std::string& text);
std::string emit_edge_list(const Graph& g);
std::string emit_dimacs(const Graph& g);

namespace detail {
// Both star searches are exposed for cross-checking; find_induced_star
// dispatches on has_bit_rows().
std::optional<StarWitness> find_star_bitset(const Graph& g, int k);
std::optional<StarWitness> find_star_generic(const Graph& g, int k);
}  // namespace detail

}  // namespace cfc

#endif
