#include "cfc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cfc/errors.hpp"
#include "cfc/exact_oracle.hpp"
#include "cfc/graph.hpp"
#include "cfc/hypergraph.hpp"
#include "cfc/lll_colorer.hpp"
#include "cfc/pipeline.hpp"
#include "cfc/rng.hpp"

namespace cfc::bench {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Palette growth of the pipeline on line graphs of complete graphs, the
// family where log-in-degree growth is expected; exact values where the
// oracle can reach them.
std::string suite_lkn(uint64_t seed, bool with_times) {
    std::ostringstream out;
    out << "suite=lkn seed=" << seed << "\n";
    out << "instance\tn\tm\tdelta\tpalette\texact" << (with_times ? "\tms" : "") << "\n";
    for (int base = 4; base <= 8; ++base) {
        Graph g = line_graph(complete(base));
        auto t0 = std::chrono::steady_clock::now();
        CfonResult res = cfon_color(g, 3, Mode::tight, seed);
        double ms = ms_since(t0);
        if (!verify_cfon(g, res.coloring.color).empty() ||
            !check_certificate(g, res.coloring, res.certificate).empty())
            throw std::logic_error("bench lkn: coloring failed re-verification");
        std::string exact = "-";
        if (g.vertex_count() <= kOracleSizeLimit) {
            auto val = exact_cfon_number(g, 8);
            exact = val ? std::to_string(*val) : ">8";
        }
        out << "L(K_" << base << ")\t" << g.vertex_count() << '\t' << g.edge_count() << '\t'
            << max_degree(g) << '\t' << total_colors(res.coloring) << '\t' << exact;
        if (with_times) {
            out.setf(std::ios::fixed);
            out.precision(1);
            out << '\t' << ms;
        }
        out << '\n';
    }
    return out.str();
}

std::string suite_inequality(bool with_times) {
    auto t0 = std::chrono::steady_clock::now();
    InequalityReport report = sweep_inequality(connected_graph_corpus(6));
    std::ostringstream out;
    out << "suite=inequality corpus=connected_n<=6\n";
    out << format_report(report);
    if (with_times) {
        out.setf(std::ios::fixed);
        out.precision(1);
        out << "total_ms\t" << ms_since(t0) << '\n';
    }
    return out.str();
}

// Resample counts of the scaled-mode colorer on banded random hypergraphs:
// edge i draws its vertices from a window of 2.5*r consecutive vertices
// starting at stride*i, which caps the intersection count.
std::string suite_mt_scaled(uint64_t seed, bool with_times) {
    const int r = 64, c = 2, edges = 50;
    const int window = 160, stride = 40;
    const int n = stride * (edges - 1) + window;
    std::ostringstream out;
    out << "suite=mt-scaled seed=" << seed << " r=" << r << " c=" << c << " edges=" << edges
        << "\n";
    out << "run\tgamma\tresamples\tok" << (with_times ? "\tms" : "") << "\n";
    for (int run = 0; run < 10; ++run) {
        std::mt19937_64 rng(seed + run);

        std::vector<std::vector<int>> es;
        for (int e = 0; e < edges; ++e) {
            int size = r - 1 + uniform_int(rng, (c - 1) * r + 1);
            std::vector<int> pool(window);
            for (int i = 0; i < window; ++i) pool[i] = stride * e + i;
            shuffle_vec(pool, rng);
            es.emplace_back(pool.begin(), pool.begin() + size);
        }
        Hypergraph h = make_hypergraph(n, std::move(es));
        ResampleParams params = ResampleParams::scaled(r, c, max_edge_intersection_count(h));
        auto t0 = std::chrono::steady_clock::now();
        MoserTardosResult res = moser_tardos_cf(h, params, seed + run, 100000);
        double ms = ms_since(t0);
        out << run << '\t' << params.gamma << '\t' << res.resamples << '\t'
            << (res.success() ? "yes" : "TIMEOUT");
        if (with_times) {
            out.setf(std::ios::fixed);
            out.precision(1);
            out << '\t' << ms;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::vector<std::string> suite_names() { return {"lkn", "inequality", "mt-scaled"}; }

std::string run_suite(const std::string& name, uint64_t seed, bool with_times) {
    if (name == "lkn") return suite_lkn(seed, with_times);
    if (name == "inequality") return suite_inequality(with_times);
    if (name == "mt-scaled") return suite_mt_scaled(seed, with_times);
    throw input_error("unknown suite '" + name + "'; available: lkn, inequality, mt-scaled");
}

}  // namespace cfc::bench
