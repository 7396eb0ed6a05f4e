#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <random>

#include "cfc/decomposition.hpp"
#include "cfc/errors.hpp"
#include "cfc/graph.hpp"
#include "doctest.h"

using namespace cfc;

namespace {

// reference greedy: smallest color absent among already-colored neighbors
std::vector<int> greedy_reference(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<char> used(g.vertex_count() + 1, 0);
        for (int u : g.neighbors(v))
            if (color[u] >= 0) used[color[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

void check_classes_consistent(const Graph& g, const LayeredColoring& lc) {
    std::vector<char> covered(g.vertex_count(), 0);
    for (size_t c = 0; c < lc.classes.size(); ++c) {
        CHECK(!lc.classes[c].empty());
        for (int v : lc.classes[c]) {
            CHECK(lc.class_of[v] == static_cast<int>(c));
            CHECK(!covered[v]);
            covered[v] = 1;
        }
    }
    for (char f : covered) CHECK(f);
}

}  // namespace

TEST_CASE("greedy on small graphs") {
    LayeredColoring k3 = greedy_proper_coloring(complete(3));
    CHECK(k3.classes.size() == 3);
    for (const auto& cls : k3.classes) CHECK(cls.size() == 1);

    Graph edgeless(5);
    CHECK(greedy_proper_coloring(edgeless).classes.size() == 1);

    // odd cycle is not 2-colorable; index-order greedy settles at 3
    LayeredColoring c5 = greedy_proper_coloring(cycle(5));
    CHECK(c5.classes.size() == 3);
    std::vector<int> ref = greedy_reference(cycle(5));
    for (int v = 0; v < 5; ++v) CHECK(c5.class_of[v] == ref[v]);
}

TEST_CASE("greedy matches reference and stays within max degree + 1") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = gnp_random(4 + static_cast<int>(seed % 10), 0.45, seed);
        LayeredColoring lc = greedy_proper_coloring(g);
        CHECK(is_proper(g, lc));
        CHECK(static_cast<int>(lc.classes.size()) <= max_degree(g) + 1);
        check_classes_consistent(g, lc);
        std::vector<int> ref = greedy_reference(g);
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(lc.class_of[v] == ref[v]);
    }
}

TEST_CASE("greedy colorings are already normalized") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = gnp_random(9, 0.4, seed);
        LayeredColoring lc = greedy_proper_coloring(g);
        CHECK(is_normalized(g, lc));
        LayeredColoring nl = normalize(g, lc);
        CHECK(nl.class_of == lc.class_of);
    }
}

TEST_CASE("normalize repairs a denormalized coloring") {
    // hub of K_{1,4} forced high, leaves split across classes
    Graph s4 = star(4);
    LayeredColoring lc;
    lc.class_of = {2, 0, 0, 1, 1};  // proper, but leaves in class 1 see nothing in class 0? they do not
    lc.classes = {{1, 2}, {3, 4}, {0}};
    CHECK(is_proper(s4, lc));
    CHECK(!is_normalized(s4, lc));  // leaf 3 has no neighbor in class 0
    LayeredColoring nl = normalize(s4, lc);
    CHECK(is_proper(s4, nl));
    CHECK(is_normalized(s4, nl));
    CHECK(nl.classes.size() <= lc.classes.size());
    check_classes_consistent(s4, nl);
    // all leaves collapse into the first class, hub follows into the second
    CHECK(nl.classes.size() == 2);
    CHECK(nl.classes[0] == std::vector<int>{1, 2, 3, 4});
    CHECK(nl.classes[1] == std::vector<int>{0});
}

TEST_CASE("normalize is idempotent and preserves properness") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 40; ++it) {
        Graph g = gnp_random(10, 0.35, rng());
        // scramble: random proper coloring via shuffled greedy, then inflate
        LayeredColoring lc = greedy_proper_coloring(g, shuffled_order(10, rng()));
        const size_t before = lc.classes.size();
        LayeredColoring n1 = normalize(g, lc);
        LayeredColoring n2 = normalize(g, n1);
        CHECK(is_proper(g, n1));
        CHECK(is_normalized(g, n1));
        CHECK(n1.classes.size() <= before);
        CHECK(n2.class_of == n1.class_of);
        check_classes_consistent(g, n1);
    }
}

TEST_CASE("single edge normalizes as two singleton classes") {
    Graph p2 = complete(2);
    LayeredColoring lc = normalize(p2, greedy_proper_coloring(p2));
    CHECK(lc.classes.size() == 2);
    CHECK(lc.classes[0] == std::vector<int>{0});
    CHECK(lc.classes[1] == std::vector<int>{1});
}

TEST_CASE("normalize rejects improper input") {
    LayeredColoring bad;
    bad.class_of = {0, 0};
    bad.classes = {{0, 1}};
    Graph k2 = complete(2);
    CHECK_THROWS_AS(normalize(k2, bad), precondition_error);
}

TEST_CASE("class_degree_max") {
    // all leaves of the claw in one class: the hub sees 3 of them
    Graph s3 = star(3);
    LayeredColoring lc;
    lc.class_of = {1, 0, 0, 0};
    lc.classes = {{1, 2, 3}, {0}};
    CHECK(class_degree_max(s3, lc) == 3);

    Graph edgeless(4);
    CHECK(class_degree_max(edgeless, greedy_proper_coloring(edgeless)) == 0);
}

TEST_CASE("claw-free graphs have class degree at most 2") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        Graph lg = random_line_graph(7, 0.45, seed);
        LayeredColoring lc = normalize(lg, greedy_proper_coloring(lg));
        CHECK(class_degree_max(lg, lc) <= 2);
    }
}

TEST_CASE("partition_v123") {
    // complete graphs greedy into singleton classes, giving full control of m
    LayeredColoring k3 = greedy_proper_coloring(complete(3));
    TriPartition p = partition_v123(k3, 4096);
    CHECK(p.v1 == std::vector<int>{0});
    CHECK(p.v2 == std::vector<int>{1, 2});
    CHECK(p.v3.empty());

    // m = r + 3 classes: v3 takes the last two
    LayeredColoring k5 = greedy_proper_coloring(complete(5));
    TriPartition q = partition_v123(k5, 2);
    CHECK(q.v1 == std::vector<int>{0});
    CHECK(q.v2 == std::vector<int>{1, 2});
    CHECK(q.v3 == std::vector<int>{3, 4});

    LayeredColoring single = greedy_proper_coloring(Graph(3));
    TriPartition s = partition_v123(single, 5);
    CHECK(s.v1 == std::vector<int>{0, 1, 2});
    CHECK(s.v2.empty());
    CHECK(s.v3.empty());

    CHECK_THROWS_AS(partition_v123(k3, 0), precondition_error);
}

TEST_CASE("partition covers and is disjoint") {
    std::mt19937_64 rng(123);
    for (int it = 0; it < 30; ++it) {
        Graph g = gnp_random(11, 0.5, rng());
        LayeredColoring lc = normalize(g, greedy_proper_coloring(g));
        for (int r : {1, 2, 3, 10}) {
            TriPartition p = partition_v123(lc, r);
            std::vector<int> all;
            all.insert(all.end(), p.v1.begin(), p.v1.end());
            all.insert(all.end(), p.v2.begin(), p.v2.end());
            all.insert(all.end(), p.v3.begin(), p.v3.end());
            std::sort(all.begin(), all.end());
            std::vector<int> expect(g.vertex_count());
            std::iota(expect.begin(), expect.end(), 0);
            CHECK(all == expect);
        }
    }
}
