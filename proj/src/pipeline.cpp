#include "cfc/pipeline.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cfc/contraction_colorer.hpp"
#include "cfc/degree_cf_colorer.hpp"
#include "cfc/errors.hpp"
#include "cfc/hypergraph.hpp"

namespace cfc {

long long worst_case_color_bound(long long k, long long r) {
    return (k - 1) * (k - 2) * r + k + 32 * (k - 1) * k * r + k;
}

long long total_colors(const ProductColoring& pc) {
    std::vector<PairColor> pairs = pc.color;
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return static_cast<long long>(pairs.size());
}

FlatColoring flatten_colors(const ProductColoring& pc) {
    FlatColoring fc;
    fc.pair_of = pc.color;
    std::sort(fc.pair_of.begin(), fc.pair_of.end());
    fc.pair_of.erase(std::unique(fc.pair_of.begin(), fc.pair_of.end()), fc.pair_of.end());
    fc.flat.reserve(pc.color.size());
    for (const auto& p : pc.color) {
        auto it = std::lower_bound(fc.pair_of.begin(), fc.pair_of.end(), p);
        fc.flat.push_back(static_cast<long long>(it - fc.pair_of.begin()) + 1);
    }
    return fc;
}

CfonCertificate build_certificate(const Graph& g, const ProductColoring& pc) {
    CfonCertificate cert;
    const int n = g.vertex_count();
    cert.neighbor.assign(n, -1);
    cert.color.assign(n, PairColor{0, 0});
    std::vector<std::pair<PairColor, int>> seen;
    for (int v = 0; v < n; ++v) {
        seen.clear();
        for (int u : g.neighbors(v)) seen.emplace_back(pc.color[u], u);
        std::sort(seen.begin(), seen.end());
        bool found = false;
        for (size_t i = 0; i < seen.size() && !found;) {
            size_t j = i + 1;
            while (j < seen.size() && seen[j].first == seen[i].first) ++j;
            if (j - i == 1) {
                cert.neighbor[v] = seen[i].second;
                cert.color[v] = seen[i].first;
                found = true;
            }
            i = j;
        }
        if (!found)
            throw std::logic_error("build_certificate: vertex " + std::to_string(v) +
                                   " sees no unique color");
    }
    return cert;
}

std::vector<int> check_certificate(const Graph& g, const ProductColoring& pc,
                                   const CfonCertificate& cert) {
    std::vector<int> bad;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int u = cert.neighbor[v];
        if (u < 0 || u >= g.vertex_count() || !g.has_edge(v, u) ||
            pc.color[u] != cert.color[v]) {
            bad.push_back(v);
            continue;
        }
        int count = 0;
        for (int w : g.neighbors(v))
            if (pc.color[w] == cert.color[v]) ++count;
        if (count != 1) bad.push_back(v);
    }
    return bad;
}

namespace {

std::string join_some(const std::vector<int>& v, size_t limit = 8) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size() && i < limit; ++i) out << (i ? " " : "") << v[i];
    if (v.size() > limit) out << " ...";
    return out.str();
}

}  // namespace

CfonResult cfon_color(const Graph& g, int k, Mode mode, uint64_t seed,
                      std::optional<int> r_test, long long max_rounds) {
    if (k < 3) throw precondition_error("cfon_color: need k >= 3");
    if (g.vertex_count() == 0) throw precondition_error("cfon_color: empty graph");
    if (auto iso = isolated_vertices(g); !iso.empty())
        throw precondition_error("cfon_color: isolated vertices present: " + join_some(iso));
    if (auto star = find_induced_star(g, k)) {
        std::ostringstream msg;
        msg << "cfon_color: graph is not K_{1," << k << "}-free; induced star at center "
            << star->center << " with leaves " << join_some(star->leaves);
        throw precondition_error(msg.str());
    }
    if (r_test && *r_test < 1) throw precondition_error("cfon_color: r_test must be >= 1");

    const int n = g.vertex_count();
    const int delta = max_degree(g);
    LayeredColoring lc = normalize(g, greedy_proper_coloring(g));
    if (class_degree_max(g, lc) > k - 1)
        throw std::logic_error("cfon_color: class degree exceeds k-1 on a K_{1,k}-free graph");

    const int r =
        r_test ? *r_test
               : compute_size_floor(static_cast<long long>(delta) * static_cast<long long>(delta));
    const bool compliant = (mode == Mode::theorem) && !r_test;
    TriPartition part = partition_v123(lc, r);

    // first-layer coloring: every middle-layer vertex must see a unique color
    std::vector<int> v12;
    std::merge(part.v1.begin(), part.v1.end(), part.v2.begin(), part.v2.end(),
               std::back_inserter(v12));
    int d_x, d_y;
    if (mode == Mode::theorem) {
        d_x = k - 1;
        d_y = r * (k - 1);
    } else {
        d_x = max_neighbors_within(g, v12, part.v1);
        d_y = max_neighbors_within(g, part.v1, part.v2);
    }
    PartialColoring f1 = contraction_color(g, part.v1, part.v2, d_x, d_y);

    PaletteLayout layout;
    layout.r1 = (mode == Mode::theorem)
                    ? (static_cast<long long>(k - 1) * (k - 2) * r + k)
                    : f1.palette_size;
    if (f1.palette_size > layout.r1)
        throw std::logic_error("cfon_color: first-layer palette exceeds its range");

    // middle-layer coloring: constant when no deep layer exists, otherwise
    // resampled so every deep vertex sees a unique middle color
    std::vector<int> f2raw(n, 0);
    int palette2 = 1;
    std::optional<ResampleInfo> rsinfo;
    if (part.v3.empty()) {
        for (int v : part.v2) f2raw[v] = 1;
    } else {
        NeighborhoodHypergraph nh = neighborhood_hypergraph(g, part.v3, part.v2);
        ResampleParams params;
        params.r = r;
        params.c = k - 1;
        params.gamma = (mode == Mode::theorem)
                           ? static_cast<long long>(delta) * delta
                           : max_edge_intersection_count(nh.h);
        params.palette = 32 * (k - 1) * r;
        params.theorem_mode = compliant;
        MoserTardosResult mt = moser_tardos_cf(nh.h, params, seed, max_rounds);
        rsinfo = ResampleInfo{params.r,         params.c,     params.gamma,
                              params.palette,   mt.resamples, static_cast<int>(nh.h.edges.size())};
        if (!mt.success()) {
            std::ostringstream msg;
            msg << "cfon_color: resampling did not converge within " << max_rounds
                << " rounds (" << mt.residual_bad_edges << " bad edges remain; r=" << params.r
                << " c=" << params.c << " palette=" << params.palette
                << " gamma=" << params.gamma << ")";
            throw resample_timeout(msg.str(), mt.resamples, mt.residual_bad_edges);
        }
        std::vector<char> covered(nh.h.n, 0);
        for (const auto& e : nh.h.edges)
            for (int u : e) covered[u] = 1;
        for (int i = 0; i < nh.h.n; ++i)
            f2raw[nh.target_vertex[i]] = covered[i] ? mt.coloring->color[i] : 1;
        palette2 = params.palette;
    }
    layout.r2 = (mode == Mode::theorem) ? 32LL * (k - 1) * r : palette2;

    // colors of the middle and deep layers as seen by the first layer
    std::vector<int> y23;
    std::merge(part.v2.begin(), part.v2.end(), part.v3.begin(), part.v3.end(),
               std::back_inserter(y23));
    PartialColoring f3 = neighborhood_cf_color(g, part.v1, y23);
    layout.r3 = (mode == Mode::theorem) ? k : f3.palette_size;
    if (f3.palette_size > layout.r3)
        throw std::logic_error("cfon_color: third coloring exceeds its range");

    ProductColoring pc;
    pc.layout = layout;
    pc.color.assign(n, PairColor{0, 0});
    for (int v : part.v1) pc.color[v] = {1, f1.color[v]};
    for (int v : part.v2)
        pc.color[v] = {layout.r1 + f2raw[v], layout.n3_first() - 1 + f3.color[v]};
    for (int v : part.v3) pc.color[v] = {1, layout.n3_first() - 1 + f3.color[v]};

    if (auto bad = verify_cfon(g, pc.color); !bad.empty())
        throw std::logic_error("cfon_color: output failed verification at vertices " +
                               join_some(bad));
    if (mode == Mode::theorem && total_colors(pc) > worst_case_color_bound(k, r))
        throw std::logic_error("cfon_color: color count exceeds the closed-form bound");

    CfonResult res;
    res.coloring = std::move(pc);
    res.certificate = build_certificate(g, res.coloring);
    res.k = k;
    res.mode = mode;
    res.theorem_compliant = compliant;
    res.r = r;
    res.delta = delta;
    res.v1_size = part.v1.size();
    res.v2_size = part.v2.size();
    res.v3_size = part.v3.size();
    res.resample = rsinfo;
    return res;
}

}  // namespace cfc
