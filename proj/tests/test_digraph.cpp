#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xnlplab/bandwidth.hpp"
#include "xnlplab/generate.hpp"

using namespace xnlplab;

namespace {

Digraph path(int n) {
    Digraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_arc(i, i + 1);
    return g;
}

Digraph star(int leaves) {
    Digraph g(leaves + 1);
    for (int l = 1; l <= leaves; ++l) g.add_arc(0, l);
    return g;
}

// path p0 -> p1 -> p2 -> p3 plus p0 -> v and v -> p3 (vertex 4 = v)
Digraph width_two_family() {
    Digraph g(5);
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    g.add_arc(2, 3);
    g.add_arc(0, 4);
    g.add_arc(4, 3);
    return g;
}

TopOrdering natural(int n) {
    TopOrdering f;
    f.position.resize(n);
    for (int i = 0; i < n; ++i) f.position[i] = i;
    return f;
}

}  // namespace

TEST_CASE("digraph basics") {
    Digraph g(3);
    g.add_arc(0, 1);
    g.add_arc(0, 1);  // deduplicated
    CHECK(g.arc_count() == 1);
    CHECK_THROWS_AS(g.add_arc(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_arc(0, 3), std::invalid_argument);
    CHECK(g.is_acyclic());
    g.add_arc(1, 0);
    CHECK_FALSE(g.is_acyclic());
}

TEST_CASE("bandwidth_of examples") {
    CHECK(bandwidth_of(path(5), natural(5)) == 1);

    Digraph s = star(3);
    CHECK(bandwidth_of(s, natural(4)) == 3);

    Digraph arcless(4);
    CHECK(bandwidth_of(arcless, natural(4)) == 0);

    TopOrdering backwards;
    backwards.position = {1, 0, 2, 3, 4};
    CHECK_THROWS_AS(bandwidth_of(path(5), backwards), std::invalid_argument);
}

TEST_CASE("brute_bandwidth examples") {
    CHECK(brute_bandwidth(path(4)) == 1);
    CHECK(brute_bandwidth(width_two_family()) == 2);

    Digraph k22(4);  // complete bipartite orientation 2 -> 2
    for (int u = 0; u < 2; ++u)
        for (int v = 2; v < 4; ++v) k22.add_arc(u, v);
    CHECK(brute_bandwidth(k22) == 2);

    CHECK_THROWS_AS(brute_bandwidth(path(11), 10), std::invalid_argument);
}

TEST_CASE("exact_bandwidth certificates and refutations") {
    auto d = exact_bandwidth(path(5), 1);
    REQUIRE(d.feasible());
    CHECK(bandwidth_of(path(5), *d.witness) <= 1);

    CHECK(exact_bandwidth(star(3), 2).infeasible());

    auto w2 = exact_bandwidth(width_two_family(), 2);
    REQUIRE(w2.feasible());
    CHECK(bandwidth_of(width_two_family(), *w2.witness) <= 2);

    Digraph cyclic(2);
    cyclic.add_arc(0, 1);
    cyclic.add_arc(1, 0);
    CHECK_THROWS_AS(exact_bandwidth(cyclic, 1), std::invalid_argument);

    auto t = exact_bandwidth(width_two_family(), 2, 1);
    CHECK(t.timed_out());
}

TEST_CASE("exact_bandwidth agrees with the brute oracle") {
    Rng rng(7);
    for (int i = 0; i < 120; ++i) {
        std::uniform_int_distribution<int> size(1, 8);
        std::uniform_real_distribution<double> dens(0.1, 0.7);
        Digraph g = gen_random_dag(size(rng), dens(rng), rng);
        int bw = brute_bandwidth(g);
        auto at = exact_bandwidth(g, bw);
        REQUIRE(at.feasible());
        CHECK(bandwidth_of(g, *at.witness) <= bw);
        if (bw > 0) CHECK(exact_bandwidth(g, bw - 1).infeasible());
    }
}

TEST_CASE("width duality") {
    Digraph arcless(5);
    CHECK(width(arcless) == 5);
    CHECK(width(width_two_family()) == 2);
    CHECK(width(path(3)) == 1);
    CHECK(brute_width(Digraph(3)) == 3);
    CHECK(brute_width(path(3)) == 1);

    Rng rng(11);
    for (int i = 0; i < 120; ++i) {
        std::uniform_int_distribution<int> size(1, 12);
        std::uniform_real_distribution<double> dens(0.1, 0.7);
        Digraph g = gen_random_dag(size(rng), dens(rng), rng);
        CHECK(width(g) == brute_width(g));
    }
}

TEST_CASE("reversal preserves directed bandwidth") {
    Rng rng(13);
    for (int i = 0; i < 60; ++i) {
        std::uniform_int_distribution<int> size(1, 8);
        std::uniform_real_distribution<double> dens(0.1, 0.6);
        Digraph g = gen_random_dag(size(rng), dens(rng), rng);
        CHECK(brute_bandwidth(g) == brute_bandwidth(g.reversed()));
    }
}

TEST_CASE("depth layout meets the width bound") {
    auto bw = [](const Digraph& t) { return bandwidth_of(t, depth_layout(t)); };
    CHECK(bw(path(4)) == 1);

    Digraph binary(7);  // complete binary tree with four leaves
    binary.add_arc(0, 1);
    binary.add_arc(0, 2);
    binary.add_arc(1, 3);
    binary.add_arc(1, 4);
    binary.add_arc(2, 5);
    binary.add_arc(2, 6);
    CHECK(brute_width(binary) == 4);
    CHECK(bw(binary) <= 2 * 4 - 1);

    CHECK(bw(star(5)) == 5);

    CHECK_THROWS_AS(depth_layout(width_two_family()), std::invalid_argument);
    CHECK_THROWS_AS(depth_layout(Digraph(3)), std::invalid_argument);

    Rng rng(17);
    for (int i = 0; i < 40; ++i) {
        std::uniform_int_distribution<int> size(1, 40);
        Digraph t = gen_random_tree(size(rng), rng);
        CHECK(bandwidth_of(t, depth_layout(t)) <= 2 * width(t) - 1);
    }
}

TEST_CASE("caterpillars separate width from bandwidth") {
    Digraph c31 = gen_caterpillar(3, 1);
    CHECK(c31.vertex_count() == 6);
    CHECK(brute_width(c31) == 3);

    Digraph c11 = gen_caterpillar(1, 1);
    CHECK(c11.vertex_count() == 2);
    CHECK(brute_bandwidth(c11) == 1);

    Digraph c52 = gen_caterpillar(5, 2);
    CHECK(width(c52) == 5);
    CHECK(exact_bandwidth(c52, 3).feasible());

    for (int spine = 6; spine <= 9; ++spine) {
        Digraph c = gen_caterpillar(spine, 1);
        CHECK(width(c) == spine);
        CHECK(exact_bandwidth(c, 2).feasible());
    }
}
