#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "xnlplab/nnccm.hpp"

using namespace xnlplab;

namespace {

NnccmInstance make(int k, int n, std::vector<NnccmCheck> checks) {
    NnccmInstance m;
    m.counters = k;
    m.max_value = n;
    m.checks = std::move(checks);
    return m;
}

// Test-only oracle: depth-first search over all nondecreasing value
// matrices, no frontier machinery.
bool naive_accepts(const NnccmInstance& m) {
    const int k = m.counters, n = m.max_value;
    std::function<bool(int, const std::vector<int>&)> go =
        [&](int round, const std::vector<int>& prev) {
            if (round == m.rounds()) return true;
            std::vector<int> v = prev;
            while (true) {
                const NnccmCheck& c = m.checks[round];
                if (!(v[c.c1 - 1] == c.n1 && v[c.c2 - 1] == c.n2))
                    if (go(round + 1, v)) return true;
                int i = k - 1;
                while (i >= 0 && v[i] == n) {
                    v[i] = prev[i];
                    --i;
                }
                if (i < 0) return false;
                ++v[i];
            }
        };
    return go(0, std::vector<int>(k, 0));
}

const NnccmInstance fig3 = make(3, 2, {{1, 0, 2, 0}, {1, 1, 3, 0}});

}  // namespace

TEST_CASE("accepts on the spec'd examples") {
    CHECK(accepts(make(1, 1, {})));
    CHECK_FALSE(accepts(make(1, 0, {{1, 0, 1, 0}})));
    CHECK(accepts(fig3));
}

TEST_CASE("find_run produces validating witnesses") {
    auto run = find_run(make(1, 1, {{1, 0, 1, 0}}));
    REQUIRE(run.has_value());
    CHECK(run->values[0][0] == 1);

    CHECK_FALSE(find_run(make(1, 0, {{1, 0, 1, 0}})).has_value());

    auto r3 = find_run(fig3);
    REQUIRE(r3.has_value());
    CHECK(validate_run(fig3, *r3));
}

TEST_CASE("validate_run semantics") {
    NnccmInstance empty = make(2, 1, {});
    CHECK(validate_run(empty, Run{}));

    Run good{{{1, 0, 0}, {1, 0, 1}}};
    CHECK(validate_run(fig3, good));
    Run fires{{{0, 0, 0}, {1, 0, 1}}};
    CHECK_FALSE(validate_run(fig3, fires));
    Run decreasing{{{1, 0, 1}, {1, 0, 0}}};
    CHECK_FALSE(validate_run(fig3, decreasing));
    Run out_of_range{{{3, 0, 0}, {3, 0, 1}}};
    CHECK_FALSE(validate_run(fig3, out_of_range));

    Run misshaped{{{1, 0}}};
    CHECK_THROWS_AS(validate_run(fig3, misshaped), std::invalid_argument);
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(make(0, 1, {}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make(1, 1, {{2, 0, 1, 0}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make(1, 1, {{1, 2, 1, 0}}).validate(), std::invalid_argument);
}

TEST_CASE("enumerate_instances counts and determinism") {
    CHECK(enumerate_instances(1, 0, 0).size() == 1);

    auto single = enumerate_instances(1, 0, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].checks[0] == NnccmCheck{1, 0, 1, 0});

    CHECK(enumerate_instances(2, 1, 1).size() == 16);  // (k*(n+1))^2 per check
    CHECK(enumerate_instances(2, 1, 1) == enumerate_instances(2, 1, 1));
}

TEST_CASE("witness and acceptance agree across the small sweep") {
    for (int k = 1; k <= 2; ++k)
        for (int r = 0; r <= 2; ++r)
            for (const NnccmInstance& m : enumerate_instances(k, 1, r)) {
                bool a = accepts(m);
                auto run = find_run(m);
                CHECK(a == run.has_value());
                if (run) CHECK(validate_run(m, *run));
            }
}

TEST_CASE("deleting a check never turns acceptance off") {
    for (int k = 1; k <= 2; ++k)
        for (int r = 1; r <= 2; ++r)
            for (const NnccmInstance& m : enumerate_instances(k, 1, r)) {
                if (!accepts(m)) continue;
                for (int drop = 0; drop < r; ++drop) {
                    NnccmInstance smaller = m;
                    smaller.checks.erase(smaller.checks.begin() + drop);
                    CHECK(accepts(smaller));
                }
            }
}

TEST_CASE("frontier agrees with naive DFS on every small instance") {
    for (int k = 1; k <= 2; ++k)
        for (int n = 0; n <= 2; ++n)
            for (int r = 0; r <= 3; ++r)
                for (const NnccmInstance& m : enumerate_instances(k, n, r))
                    CHECK(accepts(m) == naive_accepts(m));
}
