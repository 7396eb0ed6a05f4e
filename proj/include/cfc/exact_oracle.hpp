#ifndef CFC_EXACT_ORACLE_HPP
#define CFC_EXACT_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

inline constexpr int kOracleSizeLimit = 12;

// A CFON (resp. CFCN) coloring of g using colors 1..q, or nullopt when none
// exists. Backtracking with canonical color order: a vertex may only use
// colors up to one past the largest color used before it.
std::optional<std::vector<int>> find_cfon_coloring(const Graph& g, int q);
std::optional<std::vector<int>> find_cfcn_coloring(const Graph& g, int q);

// Smallest q <= max_colors admitting a valid coloring; nullopt when every
// q <= max_colors fails ("exceeds max"). Size-limited brute force; throws
// precondition_error above the limit, and for CFON on graphs with isolated
// vertices (they can never see a unique neighbor color).
std::optional<int> exact_cfon_number(const Graph& g, int max_colors,
                                     int size_limit = kOracleSizeLimit);
std::optional<int> exact_cfcn_number(const Graph& g, int max_colors,
                                     int size_limit = kOracleSizeLimit);

// All connected graphs on 2..max_n vertices. With dedup (max_n <= 8), one
// representative per isomorphism class via brute-force canonical forms;
// otherwise every labeled graph.
std::vector<Graph> connected_graph_corpus(int max_n, bool dedup = true);

// Lexicographically smallest upper-triangle adjacency mask over all vertex
// relabelings. Brute force, n <= 8.
uint64_t canonical_mask(const Graph& g);

struct InequalityRow {
    std::string id;
    int n = 0;
    int m = 0;
    int cfon = 0;
    int cfcn = 0;
    double ratio = 0.0;  // cfcn / cfon
};

/// Checks cfcn <= 2*cfon on every corpus graph via both oracles.
struct InequalityReport {
    std::vector<InequalityRow> rows;
    double max_ratio = 0.0;
    std::vector<std::string> violations;  // ids where the inequality failed
};

InequalityReport sweep_inequality(const std::vector<Graph>& corpus);

std::string format_report(const InequalityReport& report);

}  // namespace cfc

#endif
