#ifndef CFC_PIPELINE_HPP
#define CFC_PIPELINE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cfc/decomposition.hpp"
#include "cfc/graph.hpp"
#include "cfc/lll_colorer.hpp"

namespace cfc {

enum class Mode { tight, theorem };

/// Disjoint consecutive color ranges for the three component colorings:
/// N1 = 1..r1, N2 = r1+1..r1+r2, N3 = r1+r2+1..r1+r2+r3.
struct PaletteLayout {
    long long r1 = 0, r2 = 0, r3 = 0;
    long long n2_first() const { return r1 + 1; }
    long long n3_first() const { return r1 + r2 + 1; }
};

using PairColor = std::pair<long long, long long>;

struct ProductColoring {
    std::vector<PairColor> color;  // per vertex
    PaletteLayout layout;
};

/// Per-vertex witness: a neighbor whose pair color appears exactly once in
/// the vertex's open neighborhood.
struct CfonCertificate {
    std::vector<int> neighbor;
    std::vector<PairColor> color;
};

struct ResampleInfo {
    int r = 0;
    int c = 0;
    long long gamma = 0;
    int palette = 0;
    long long resamples = 0;
    int edge_count = 0;
};

struct CfonResult {
    ProductColoring coloring;
    CfonCertificate certificate;
    int k = 0;
    Mode mode = Mode::tight;
    bool theorem_compliant = false;
    int r = 0;      // partition threshold used
    int delta = 0;
    size_t v1_size = 0, v2_size = 0, v3_size = 0;
    std::optional<ResampleInfo> resample;  // present when the resampler ran
};

/// Full coloring pipeline for a K_{1,k}-free graph without isolated
/// vertices: layered proper coloring, a unique-representative coloring of
/// the first layer, a resampled coloring of the middle layers when deep
/// layers exist, and a degree-bounded conflict-free coloring seen by the
/// first layer; assembled as pair colors over disjoint ranges and verified
/// before returning. r_test overrides the partition threshold for scaled
/// runs, which are never flagged theorem-compliant.
CfonResult cfon_color(const Graph& g, int k, Mode mode, uint64_t seed,
                      std::optional<int> r_test = std::nullopt,
                      long long max_rounds = 1'000'000);

// Number of distinct pair colors actually used.
long long total_colors(const ProductColoring& pc);

// Closed-form worst-case palette of the construction at parameters k, r.
long long worst_case_color_bound(long long k, long long r);

namespace detail {
template <class Color>
bool has_singleton(std::vector<Color>& sorted) {
    const size_t s = sorted.size();
    for (size_t i = 0; i < s;) {
        size_t j = i + 1;
        while (j < s && sorted[j] == sorted[i]) ++j;
        if (j - i == 1) return true;
        i = j;
    }
    return false;
}
}  // namespace detail

/// Vertices with no color appearing exactly once in their open neighborhood.
/// Empty result = valid CFON coloring. Works over any ordered color type.
template <class Color>
std::vector<int> verify_cfon(const Graph& g, const std::vector<Color>& color) {
    std::vector<int> bad;
    std::vector<Color> seen;
    for (int v = 0; v < g.vertex_count(); ++v) {
        seen.clear();
        for (int u : g.neighbors(v)) seen.push_back(color[u]);
        std::sort(seen.begin(), seen.end());
        if (!detail::has_singleton(seen)) bad.push_back(v);
    }
    return bad;
}

/// Same over closed neighborhoods (the vertex's own color participates).
template <class Color>
std::vector<int> verify_cfcn(const Graph& g, const std::vector<Color>& color) {
    std::vector<int> bad;
    std::vector<Color> seen;
    for (int v = 0; v < g.vertex_count(); ++v) {
        seen.clear();
        seen.push_back(color[v]);
        for (int u : g.neighbors(v)) seen.push_back(color[u]);
        std::sort(seen.begin(), seen.end());
        if (!detail::has_singleton(seen)) bad.push_back(v);
    }
    return bad;
}

// Builds the per-vertex witness table; requires a valid CFON coloring.
CfonCertificate build_certificate(const Graph& g, const ProductColoring& pc);

// Vertices where the certificate fails to check out (wrong neighbor, wrong
// color, or the color is not uniquely seen). Empty = certificate valid.
std::vector<int> check_certificate(const Graph& g, const ProductColoring& pc,
                                   const CfonCertificate& cert);

/// Pair colors mapped to consecutive integers 1..P (pairs sorted
/// lexicographically), with the pair retained per flat value.
struct FlatColoring {
    std::vector<long long> flat;       // per vertex
    std::vector<PairColor> pair_of;    // flat value v -> pair_of[v-1]
};

FlatColoring flatten_colors(const ProductColoring& pc);

}  // namespace cfc

#endif
