#ifndef CFC_LLL_COLORER_HPP
#define CFC_LLL_COLORER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cfc/coloring.hpp"
#include "cfc/hypergraph.hpp"

namespace cfc {

// Size floor r = max(2^12, ceil(136*ln(16*gamma))) for a hypergraph whose
// edges each meet at most gamma others. gamma = 0 degenerates to 2^12.
int compute_size_floor(long long gamma);

/// Parameters of the resampling colorer. In theorem mode r comes from
/// compute_size_floor and the 32*c*r palette carries the conflict-free
/// guarantee; scaled mode takes a user-supplied r and is flagged so nobody
/// mistakes an empirical success for the guarantee.
struct ResampleParams {
    int r = 0;
    int c = 1;              // edge sizes must lie in [r, c*r]
    long long gamma = 0;    // max edge-intersection count
    int palette = 0;        // 32*c*r unless overridden in tests
    bool theorem_mode = false;

    static ResampleParams theorem(long long gamma, int c);
    static ResampleParams scaled(int r, int c, long long gamma);
};

// True iff every color present in the edge appears at least twice there.
bool is_bad_edge(const std::vector<int>& edge, const std::vector<int>& color);

struct TimeoutReport {
    long long resamples = 0;
    int residual_bad_edges = 0;
};

struct MoserTardosResult {
    std::optional<PartialColoring> coloring;  // present on success
    long long resamples = 0;
    int residual_bad_edges = 0;
    bool success() const { return coloring.has_value(); }
    TimeoutReport timeout() const { return {resamples, residual_bad_edges}; }
};

// Called after every resample with the index of the resampled edge and the
// full color vector; used by tests to audit the transcript.
using ResampleObserver = std::function<void(int edge_index, const std::vector<int>& color)>;

/// Uniformly colors all vertices from the palette, then repeatedly picks the
/// lowest-index bad edge and redraws the colors of exactly its vertices,
/// until no edge is bad or max_rounds resamples have been spent. Edge sizes
/// outside [r, c*r] are a precondition_error. Identical inputs and seed give
/// an identical transcript.
MoserTardosResult moser_tardos_cf(const Hypergraph& h, const ResampleParams& params,
                                  uint64_t seed, long long max_rounds = 1'000'000,
                                  const ResampleObserver& observer = nullptr);

/// Monte-Carlo profile of a single uniformly colored edge: X is the number
/// of vertices whose color repeats inside the edge.
struct CollisionStats {
    int edge_size = 0;
    int palette = 0;
    long long trials = 0;
    double mean_x = 0.0;        // empirical E[X]
    double stderr_x = 0.0;      // standard error of mean_x
    double p_all_collide = 0.0; // fraction of trials with X = edge_size
};

CollisionStats collision_statistics(int edge_size, int palette, long long trials, uint64_t seed);

// Exact E[X] for a uniformly colored edge: s * (1 - (1 - 1/q)^(s-1)).
double expected_collisions(int edge_size, int palette);

std::string stats_record(const CollisionStats& cs, uint64_t seed);

}  // namespace cfc

#endif
