// Command-line surface for conflict-free neighborhood coloring: generators,
// star detection, the coloring pipeline with certificates, verification,
// exact small-graph numbers, and resampling demos.
//
// Exit codes: 0 success/valid, 1 invalid coloring, 2 input error,
// 3 precondition violation, 4 resampling timeout.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cfc/degree_cf_colorer.hpp"
#include "cfc/errors.hpp"
#include "cfc/exact_oracle.hpp"
#include "cfc/graph.hpp"
#include "cfc/hypergraph.hpp"
#include "cfc/lll_colorer.hpp"
#include "cfc/pipeline.hpp"
#include "cfc/rng.hpp"

namespace {

constexpr uint64_t kDefaultSeed = 1;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cfc::input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cfc::input_error("cannot write '" + path + "'");
    out << content;
}

bool looks_like_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("p ", 0) == 0) return true;
        if (line.rfind("e ", 0) == 0) return true;
    }
    return false;
}

cfc::Graph load_graph(const std::string& path) {
    std::string text = read_file(path);
    return looks_like_dimacs(text) ? cfc::parse_dimacs(text).graph
                                   : cfc::parse_edge_list(text).graph;
}

struct ColorRecord {
    int n = 0;
    long long palette = 0;  // distinct flat colors
    std::vector<std::string> meta;
    std::vector<long long> flat;
    std::vector<cfc::PairColor> pair;
    std::vector<int> witness;
};

std::string format_record(const ColorRecord& rec) {
    std::ostringstream out;
    out << "cfcolor v1 " << rec.n << ' ' << rec.palette << '\n';
    for (const auto& m : rec.meta) out << "# " << m << '\n';
    for (int v = 0; v < rec.n; ++v)
        out << "v " << v << ' ' << rec.flat[v] << ' ' << rec.pair[v].first << ' '
            << rec.pair[v].second << ' ' << rec.witness[v] << '\n';
    return out.str();
}

ColorRecord parse_record(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw cfc::input_error("coloring file: empty");
    {
        std::istringstream hs(line);
        std::string magic, version;
        ColorRecord rec;
        if (!(hs >> magic >> version >> rec.n >> rec.palette) || magic != "cfcolor" ||
            version != "v1")
            throw cfc::input_error("coloring file: bad header '" + line + "'");
        rec.flat.assign(rec.n, -1);
        rec.pair.assign(rec.n, {0, 0});
        rec.witness.assign(rec.n, -1);
        int lineno = 1;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string tag;
            int v, w;
            long long flat, pf, ps;
            if (!(ls >> tag >> v >> flat >> pf >> ps >> w) || tag != "v")
                throw cfc::input_error("coloring file line " + std::to_string(lineno) +
                                       ": malformed vertex line");
            if (v < 0 || v >= rec.n)
                throw cfc::input_error("coloring file line " + std::to_string(lineno) +
                                       ": vertex out of range");
            if (rec.flat[v] != -1)
                throw cfc::input_error("coloring file line " + std::to_string(lineno) +
                                       ": duplicate vertex " + std::to_string(v));
            rec.flat[v] = flat;
            rec.pair[v] = {pf, ps};
            rec.witness[v] = w;
        }
        for (int v = 0; v < rec.n; ++v)
            if (rec.flat[v] == -1)
                throw cfc::input_error("coloring file: vertex " + std::to_string(v) +
                                       " missing");
        return rec;
    }
}

int cmd_gen(const std::string& family, int n, double p, uint64_t seed,
            const std::string& out_path, const std::string& format) {
    cfc::Graph g;
    if (family == "complete")
        g = cfc::complete(n);
    else if (family == "path")
        g = cfc::path(n);
    else if (family == "cycle")
        g = cfc::cycle(n);
    else if (family == "star")
        g = cfc::star(n);
    else if (family == "gnp")
        g = cfc::gnp_random(n, p, seed);
    else if (family == "line-gnp")
        g = cfc::random_line_graph(n, p, seed);
    else
        throw cfc::input_error("unknown family '" + family +
                               "'; expected complete|path|cycle|star|gnp|line-gnp");
    std::ostringstream meta;
    meta << "cfcolor gen family=" << family << " n=" << n << " p=" << p << " seed=" << seed;
    std::string body;
    if (format == "edgelist")
        body = "# " + meta.str() + "\n" + cfc::emit_edge_list(g);
    else if (format == "dimacs")
        body = "c " + meta.str() + "\n" + cfc::emit_dimacs(g);
    else
        throw cfc::input_error("unknown format '" + format + "'");
    write_file(out_path, body);
    std::cout << "wrote " << out_path << " (n=" << g.vertex_count() << " m=" << g.edge_count()
              << ")\n";
    return 0;
}

int cmd_detect(const std::string& graph_path, int k) {
    cfc::Graph g = load_graph(graph_path);
    std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
    auto star = cfc::find_induced_star(g, k);
    std::cout << "K_{1," << k << "}-free: " << (star ? "no" : "yes") << '\n';
    if (star) {
        std::cout << "star center=" << star->center << " leaves=";
        for (size_t i = 0; i < star->leaves.size(); ++i)
            std::cout << (i ? " " : "") << star->leaves[i];
        std::cout << '\n';
    }
    return 0;
}

int cmd_color(const std::string& graph_path, int k, const std::string& mode_name,
              std::optional<int> r_test, uint64_t seed, long long max_rounds,
              const std::string& out_path, bool cfcn_isolated) {
    cfc::Graph g = load_graph(graph_path);
    cfc::Mode mode;
    if (mode_name == "tight")
        mode = cfc::Mode::tight;
    else if (mode_name == "theorem")
        mode = cfc::Mode::theorem;
    else
        throw cfc::input_error("unknown mode '" + mode_name + "'; expected tight|theorem");

    // Optionally set aside isolated vertices and give them one fresh color;
    // valid for closed neighborhoods only.
    std::vector<int> live;
    auto iso = cfc::isolated_vertices(g);
    cfc::Graph work;
    if (cfcn_isolated && !iso.empty()) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 0) live.push_back(v);
        if (live.empty())
            throw cfc::precondition_error(
                "color: graph has no edges; nothing to color beyond isolated vertices");
        work = cfc::induced_subgraph(g, live);
    } else {
        for (int v = 0; v < g.vertex_count(); ++v) live.push_back(v);
        work = g;
    }

    cfc::CfonResult res = cfc::cfon_color(work, k, mode, seed, r_test, max_rounds);

    // map back to the original vertex ids
    const int n = g.vertex_count();
    const auto& layout = res.coloring.layout;
    const cfc::PairColor fresh{1, layout.r1 + layout.r2 + layout.r3 + 1};
    cfc::ProductColoring full;
    full.layout = layout;
    full.color.assign(n, fresh);
    std::vector<int> witness(n, -1);
    for (size_t i = 0; i < live.size(); ++i) {
        full.color[live[i]] = res.coloring.color[i];
        int w = res.certificate.neighbor[i];
        witness[live[i]] = live[w];
    }

    cfc::FlatColoring fc = cfc::flatten_colors(full);
    ColorRecord rec;
    rec.n = n;
    rec.palette = static_cast<long long>(fc.pair_of.size());
    rec.flat = fc.flat;
    rec.pair = full.color;
    rec.witness = witness;
    {
        std::ostringstream m;
        m << "k=" << k << " mode=" << mode_name << " seed=" << seed
          << " theorem_compliant=" << (res.theorem_compliant ? 1 : 0);
        if (r_test) m << " r_test=" << *r_test;
        rec.meta.push_back(m.str());
    }
    {
        std::ostringstream m;
        m << "r=" << res.r << " delta=" << res.delta << " layout r1=" << layout.r1
          << " r2=" << layout.r2 << " r3=" << layout.r3;
        rec.meta.push_back(m.str());
    }
    {
        std::ostringstream m;
        m << "partition v1=" << res.v1_size << " v2=" << res.v2_size << " v3=" << res.v3_size;
        rec.meta.push_back(m.str());
    }
    if (res.resample) {
        std::ostringstream m;
        m << "resamples=" << res.resample->resamples << " resample_palette="
          << res.resample->palette << " resample_edges=" << res.resample->edge_count
          << " gamma=" << res.resample->gamma;
        rec.meta.push_back(m.str());
    }
    if (cfcn_isolated && !iso.empty()) {
        std::ostringstream m;
        m << "cfcn_isolated=" << iso.size() << " (closed-neighborhood validity only)";
        rec.meta.push_back(m.str());
    }
    std::string body = format_record(rec);
    if (out_path.empty())
        std::cout << body;
    else {
        write_file(out_path, body);
        std::cout << "wrote " << out_path << " (colors=" << rec.palette << ")\n";
    }
    return 0;
}

int cmd_check(const std::string& graph_path, const std::string& coloring_path,
              const std::string& neighborhood) {
    cfc::Graph g = load_graph(graph_path);
    ColorRecord rec = parse_record(read_file(coloring_path));
    if (rec.n != g.vertex_count())
        throw cfc::input_error("check: coloring has " + std::to_string(rec.n) +
                               " vertices but graph has " +
                               std::to_string(g.vertex_count()));
    std::vector<int> bad;
    if (neighborhood == "open")
        bad = cfc::verify_cfon(g, rec.flat);
    else if (neighborhood == "closed")
        bad = cfc::verify_cfcn(g, rec.flat);
    else
        throw cfc::input_error("unknown neighborhood '" + neighborhood +
                               "'; expected open|closed");
    if (bad.empty()) {
        std::cout << "valid " << neighborhood << "-neighborhood conflict-free coloring\n";
        return 0;
    }
    std::cout << "INVALID: " << bad.size() << " violating vertices:";
    for (size_t i = 0; i < bad.size() && i < 32; ++i) std::cout << ' ' << bad[i];
    if (bad.size() > 32) std::cout << " ...";
    std::cout << '\n';
    return 1;
}

int cmd_exact(const std::string& graph_path, const std::string& neighborhood, int max_colors,
              int size_limit) {
    cfc::Graph g = load_graph(graph_path);
    std::optional<int> val;
    if (neighborhood == "open")
        val = cfc::exact_cfon_number(g, max_colors, size_limit);
    else if (neighborhood == "closed")
        val = cfc::exact_cfcn_number(g, max_colors, size_limit);
    else
        throw cfc::input_error("unknown neighborhood '" + neighborhood +
                               "'; expected open|closed");
    if (val)
        std::cout << *val << '\n';
    else
        std::cout << "exceeds max\n";
    return 0;
}

int cmd_lll_demo(int r, int c, int edges, int palette_override, uint64_t seed,
                 long long max_rounds) {
    if (r < 1 || c < 1 || edges < 1)
        throw cfc::input_error("lll-demo: r, c and edges must be positive");
    // banded instance: edge i draws from a window starting at stride*i,
    // keeping the intersection count small and measurable
    const int window = r * 5 / 2;
    const int stride = std::max(1, window / 4);
    const int n = stride * (edges - 1) + window;
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> es;
    for (int e = 0; e < edges; ++e) {
        int size = r - 1 + cfc::uniform_int(rng, (c - 1) * r + 1);
        std::vector<int> pool(window);
        for (int i = 0; i < window; ++i) pool[i] = stride * e + i;
        cfc::shuffle_vec(pool, rng);
        es.emplace_back(pool.begin(), pool.begin() + size);
    }
    cfc::Hypergraph h = cfc::make_hypergraph(n, std::move(es));
    cfc::ResampleParams params =
        cfc::ResampleParams::scaled(r, c, cfc::max_edge_intersection_count(h));
    if (palette_override > 0) params.palette = palette_override;
    std::cout << "lll-demo r=" << params.r << " c=" << params.c << " edges=" << edges
              << " n=" << n << " gamma=" << params.gamma << " palette=" << params.palette
              << " seed=" << seed << " max_rounds=" << max_rounds << '\n';
    cfc::MoserTardosResult res = cfc::moser_tardos_cf(h, params, seed, max_rounds);
    std::cout << "outcome=" << (res.success() ? "success" : "timeout")
              << " resamples=" << res.resamples << " residual_bad=" << res.residual_bad_edges
              << " theorem_compliant=0\n";
    if (!res.success()) return 4;
    // independent re-check before reporting success
    auto bad = cfc::conflicted_edges(h, res.coloring->color);
    if (!bad.empty()) {
        std::cerr << "internal error: reported coloring fails verification\n";
        return 1;
    }
    return 0;
}

int cmd_stats(int edge_size, int palette, long long trials, uint64_t seed) {
    cfc::CollisionStats cs = cfc::collision_statistics(edge_size, palette, trials, seed);
    std::cout << cfc::stats_record(cs, seed) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conflict-free open/closed neighborhood coloring toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    std::string gen_family, gen_out, gen_format = "edgelist";
    int gen_n = 10;
    double gen_p = 0.5;
    uint64_t gen_seed = kDefaultSeed;
    gen->add_option("--family", gen_family, "complete|path|cycle|star|gnp|line-gnp")
        ->required();
    gen->add_option("--n", gen_n, "size parameter (leaf count for star)");
    gen->add_option("--p", gen_p, "edge probability for gnp/line-gnp");
    gen->add_option("--seed", gen_seed, "RNG seed (default 1)");
    gen->add_option("--out", gen_out, "output path")->required();
    gen->add_option("--format", gen_format, "edgelist|dimacs");

    // detect
    auto* detect = app.add_subcommand("detect", "report whether a graph is K_{1,k}-free");
    std::string detect_graph;
    int detect_k = 3;
    detect->add_option("graph", detect_graph, "graph file")->required();
    detect->add_option("--k", detect_k, "star size (default 3)");

    // color
    auto* color = app.add_subcommand("color", "run the coloring pipeline with a certificate");
    std::string color_graph, color_mode = "tight", color_out;
    int color_k = 3, color_rtest = 0;
    uint64_t color_seed = kDefaultSeed;
    long long color_rounds = 1'000'000;
    bool color_cfcn_isolated = false;
    color->add_option("graph", color_graph, "graph file")->required();
    color->add_option("--k", color_k, "forbidden star size (default 3)");
    color->add_option("--mode", color_mode, "tight|theorem (default tight)");
    color->add_option("--r-test", color_rtest,
                      "scaled partition threshold override (output flagged non-compliant)");
    color->add_option("--seed", color_seed, "RNG seed (default 1)");
    color->add_option("--max-rounds", color_rounds, "resampling budget (default 1e6)");
    color->add_option("--out", color_out, "output path (stdout when omitted)");
    color->add_flag("--cfcn-isolated", color_cfcn_isolated,
                    "give isolated vertices one fresh color; output is valid for closed "
                    "neighborhoods only");

    // check
    auto* check = app.add_subcommand("check", "verify a coloring file against a graph");
    std::string check_graph, check_coloring, check_nbhd = "open";
    check->add_option("graph", check_graph, "graph file")->required();
    check->add_option("coloring", check_coloring, "coloring file")->required();
    check->add_option("--neighborhood", check_nbhd, "open|closed (default open)");

    // exact
    auto* exact = app.add_subcommand("exact", "exact chromatic number by brute force");
    std::string exact_graph, exact_nbhd = "open";
    int exact_max = 8, exact_limit = cfc::kOracleSizeLimit;
    exact->add_option("graph", exact_graph, "graph file")->required();
    exact->add_option("--neighborhood", exact_nbhd, "open|closed (default open)");
    exact->add_option("--max-colors", exact_max, "largest palette to try (default 8)");
    exact->add_option("--size-limit", exact_limit, "largest instance accepted (default 12)");

    // lll-demo
    auto* lll = app.add_subcommand("lll-demo", "resampling run on a banded random hypergraph");
    int lll_r = 64, lll_c = 2, lll_edges = 50, lll_palette = 0;
    uint64_t lll_seed = kDefaultSeed;
    long long lll_rounds = 100'000;
    lll->add_option("--r", lll_r, "edge size floor (default 64)");
    lll->add_option("--c", lll_c, "edge size ratio (default 2)");
    lll->add_option("--edges", lll_edges, "number of hyperedges (default 50)");
    lll->add_option("--palette", lll_palette, "palette override (default 32*c*r)");
    lll->add_option("--seed", lll_seed, "RNG seed (default 1)");
    lll->add_option("--max-rounds", lll_rounds, "resample budget (default 1e5)");

    // stats
    auto* stats = app.add_subcommand("stats", "Monte-Carlo collision profile of one edge");
    int stats_size = 128, stats_palette = 4096;
    long long stats_trials = 100'000;
    uint64_t stats_seed = kDefaultSeed;
    stats->add_option("--edge-size", stats_size, "edge size (default 128)");
    stats->add_option("--palette", stats_palette, "palette size (default 4096)");
    stats->add_option("--trials", stats_trials, "trial count (default 1e5)");
    stats->add_option("--seed", stats_seed, "RNG seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_family, gen_n, gen_p, gen_seed, gen_out, gen_format);
        if (detect->parsed()) return cmd_detect(detect_graph, detect_k);
        if (color->parsed())
            return cmd_color(color_graph, color_k, color_mode,
                             color_rtest > 0 ? std::optional<int>(color_rtest) : std::nullopt,
                             color_seed, color_rounds, color_out, color_cfcn_isolated);
        if (check->parsed()) return cmd_check(check_graph, check_coloring, check_nbhd);
        if (exact->parsed()) return cmd_exact(exact_graph, exact_nbhd, exact_max, exact_limit);
        if (lll->parsed())
            return cmd_lll_demo(lll_r, lll_c, lll_edges, lll_palette, lll_seed, lll_rounds);
        if (stats->parsed()) return cmd_stats(stats_size, stats_palette, stats_trials, stats_seed);
    } catch (const cfc::resample_timeout& e) {
        std::cerr << "timeout: " << e.what() << '\n';
        return 4;
    } catch (const cfc::precondition_error& e) {
        std::cerr << "precondition violation: " << e.what() << '\n';
        return 3;
    } catch (const cfc::input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
