#include "cfc/lll_colorer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cfc/errors.hpp"
#include "cfc/rng.hpp"

namespace cfc {

int compute_size_floor(long long gamma) {
    if (gamma < 0) throw precondition_error("compute_size_floor: gamma must be nonnegative");
    if (gamma == 0) return 4096;
    // long double keeps ~1e-16 relative error; the nearest integer boundary
    // sits ~1e-11 away at the crossover, so the ceiling is computed safely
    long double v = 136.0L * std::log(16.0L * static_cast<long double>(gamma));
    long long ceilv = static_cast<long long>(std::ceil(v));
    return static_cast<int>(std::max<long long>(4096, ceilv));
}

ResampleParams ResampleParams::theorem(long long gamma, int c) {
    if (c < 1) throw precondition_error("resample params: need c >= 1");
    ResampleParams p;
    p.r = compute_size_floor(gamma);
    p.c = c;
    p.gamma = gamma;
    p.palette = 32 * c * p.r;
    p.theorem_mode = true;
    return p;
}

ResampleParams ResampleParams::scaled(int r, int c, long long gamma) {
    if (r < 1 || c < 1) throw precondition_error("resample params: need r >= 1 and c >= 1");
    ResampleParams p;
    p.r = r;
    p.c = c;
    p.gamma = gamma;
    p.palette = 32 * c * r;
    p.theorem_mode = false;
    return p;
}

bool is_bad_edge(const std::vector<int>& edge, const std::vector<int>& color) {
    std::vector<int> cols;
    cols.reserve(edge.size());
    for (int v : edge) cols.push_back(color[v]);
    std::sort(cols.begin(), cols.end());
    const size_t s = cols.size();
    for (size_t i = 0; i < s;) {
        size_t j = i + 1;
        while (j < s && cols[j] == cols[i]) ++j;
        if (j - i == 1) return false;
        i = j;
    }
    return true;
}

MoserTardosResult moser_tardos_cf(const Hypergraph& h, const ResampleParams& params,
                                  uint64_t seed, long long max_rounds,
                                  const ResampleObserver& observer) {
    if (params.palette < 1) throw precondition_error("moser_tardos_cf: palette must be >= 1");
    if (max_rounds < 1) throw precondition_error("moser_tardos_cf: max_rounds must be >= 1");
    const long long lo = params.r;
    const long long hi = static_cast<long long>(params.c) * params.r;
    for (size_t e = 0; e < h.edges.size(); ++e) {
        long long s = static_cast<long long>(h.edges[e].size());
        if (s < lo || s > hi)
            throw precondition_error("moser_tardos_cf: edge " + std::to_string(e) + " has size " +
                                     std::to_string(s) + " outside [r, c*r] = [" +
                                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }

    const int m = static_cast<int>(h.edges.size());
    // edges touching each edge, for incremental bad-set maintenance
    std::vector<std::vector<int>> touching(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (edges_intersect(h.edges[i], h.edges[j])) {
                touching[i].push_back(j);
                touching[j].push_back(i);
            }

    std::mt19937_64 rng(seed);
    std::vector<int> color(h.n);
    for (int v = 0; v < h.n; ++v) color[v] = uniform_int(rng, params.palette);

    std::set<int> bad;
    for (int e = 0; e < m; ++e)
        if (is_bad_edge(h.edges[e], color)) bad.insert(e);

    long long resamples = 0;
    while (!bad.empty() && resamples < max_rounds) {
        const int e = *bad.begin();
        for (int v : h.edges[e]) color[v] = uniform_int(rng, params.palette);  // ascending vertex order
        ++resamples;
        auto refresh = [&](int idx) {
            if (is_bad_edge(h.edges[idx], color))
                bad.insert(idx);
            else
                bad.erase(idx);
        };
        refresh(e);
        for (int nb : touching[e]) refresh(nb);
        if (observer) observer(e, color);
    }

    MoserTardosResult res;
    res.resamples = resamples;
    res.residual_bad_edges = static_cast<int>(bad.size());
    if (bad.empty()) {
        PartialColoring pc;
        pc.domain.resize(h.n);
        std::iota(pc.domain.begin(), pc.domain.end(), 0);
        pc.color = std::move(color);
        pc.palette_size = params.palette;
        res.coloring = std::move(pc);
    }
    return res;
}

CollisionStats collision_statistics(int edge_size, int palette, long long trials,
                                    uint64_t seed) {
    if (edge_size < 1 || palette < 1)
        throw precondition_error("collision_statistics: edge_size and palette must be >= 1");
    if (trials < 1) throw precondition_error("collision_statistics: trials must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<int> count(palette + 1, 0);
    std::vector<int> drawn(edge_size);
    long double sum = 0, sumsq = 0;
    long long all = 0;
    for (long long t = 0; t < trials; ++t) {
        for (int i = 0; i < edge_size; ++i) {
            drawn[i] = uniform_int(rng, palette);
            ++count[drawn[i]];
        }
        int x = 0;
        for (int i = 0; i < edge_size; ++i)
            if (count[drawn[i]] >= 2) ++x;
        for (int i = 0; i < edge_size; ++i) count[drawn[i]] = 0;
        sum += x;
        sumsq += static_cast<long double>(x) * x;
        if (x == edge_size) ++all;
    }
    CollisionStats cs;
    cs.edge_size = edge_size;
    cs.palette = palette;
    cs.trials = trials;
    cs.mean_x = static_cast<double>(sum / trials);
    if (trials > 1) {
        long double var = (sumsq - sum * sum / trials) / (trials - 1);
        if (var < 0) var = 0;
        cs.stderr_x = static_cast<double>(std::sqrt(var / trials));
    }
    cs.p_all_collide = static_cast<double>(all) / static_cast<double>(trials);
    return cs;
}

double expected_collisions(int edge_size, int palette) {
    double q = palette;
    return edge_size * (1.0 - std::pow(1.0 - 1.0 / q, edge_size - 1));
}

std::string stats_record(const CollisionStats& cs, uint64_t seed) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(6);
    out << "edge_size=" << cs.edge_size << " palette=" << cs.palette << " trials=" << cs.trials
        << " mean_x=" << cs.mean_x << " stderr_x=" << cs.stderr_x
        << " p_all_collide=" << cs.p_all_collide << " seed=" << seed;
    return out.str();
}

}  // namespace cfc
