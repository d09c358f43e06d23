#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "xnlplab/binpack.hpp"

using namespace xnlplab;

namespace {

BinPackingInstance make(int capacity, int bins, std::vector<int> items) {
    return BinPackingInstance{capacity, bins, std::move(items)};
}

}  // namespace

TEST_CASE("binpack_feasible examples") {
    auto one = binpack_feasible(make(1, 1, {1}));
    REQUIRE(one.has_value());
    CHECK(one->assign == std::vector<int>{1});

    CHECK_FALSE(binpack_feasible(make(3, 2, {2, 2, 2})).has_value());

    auto split = binpack_feasible(make(3, 2, {2, 1, 2, 1}));
    REQUIRE(split.has_value());
    CHECK(verify_packing(make(3, 2, {2, 1, 2, 1}), *split));
}

TEST_CASE("packings respect the bin-interchange symmetry break") {
    auto p = binpack_feasible(make(4, 3, {2, 2, 1, 3, 1}));
    REQUIRE(p.has_value());
    std::map<int, int> first_item;  // bin -> smallest item index
    for (int i = static_cast<int>(p->assign.size()) - 1; i >= 0; --i)
        first_item[p->assign[i]] = i;
    int prev = -1;
    for (auto [bin, item] : first_item) {
        (void)bin;
        CHECK(item > prev);  // opening order follows item order
        prev = item;
    }
}

TEST_CASE("binpack_to_chains shapes") {
    SchedInstance two = binpack_to_chains(make(2, 2, {2, 2}));
    CHECK(two.machines == 1);
    CHECK(two.deadline == 4);
    CHECK(two.jobs.size() == 4);
    REQUIRE(two.prec.size() == 2);
    CHECK(two.prec[0].kind == DelayKind::exact);
    CHECK(two.prec[0].delay == 1);
    CHECK(feasible(two).feasible());

    SchedInstance solo = binpack_to_chains(make(1, 1, {1}));
    CHECK(solo.jobs.size() == 1);
    CHECK(solo.deadline == 1);
    CHECK(feasible(solo).feasible());

    SchedInstance nope = binpack_to_chains(make(3, 2, {2, 2, 2}));
    CHECK(feasible(nope).infeasible());

    SchedInstance oversized = binpack_to_chains(make(2, 3, {3}));
    CHECK(feasible(oversized).infeasible());
}

TEST_CASE("chains_to_binpack follows the fill-item formulas") {
    // one chain of length two, exact delay 1, deadline 5
    SchedInstance inst;
    inst.machines = 1;
    inst.deadline = 5;
    inst.structure = PrecStructure::chains;
    inst.jobs.assign(2, SchedJob{1, 1});
    inst.prec.push_back({0, 1, DelayKind::exact, 1});

    BinPackingInstance bp = chains_to_binpack(inst);
    CHECK(bp.bins == 2);
    CHECK(bp.capacity == 7);  // 2*ceil(5/2) + 1
    REQUIRE(bp.items.size() == 3);
    CHECK(bp.items[0] == 2);  // the chain
    CHECK(bp.items[1] == 5);  // one fill of B' + 2
    CHECK(bp.items[2] == 4);  // one fill of B' + 1
}

TEST_CASE("chains_to_binpack single-residue case") {
    SchedInstance inst;
    inst.machines = 1;
    inst.deadline = 4;
    inst.jobs.assign(3, SchedJob{1, 1});
    inst.prec.push_back({0, 1, DelayKind::exact, 0});
    inst.prec.push_back({1, 2, DelayKind::exact, 0});

    BinPackingInstance bp = chains_to_binpack(inst);
    CHECK(bp.bins == 1);
    CHECK(bp.capacity == 2 * 4 + 1);
    CHECK(bp.items == std::vector<int>{3, 5});  // chain + one fill of B' + 1
    CHECK(binpack_feasible(bp).has_value() == feasible(inst).feasible());
}

TEST_CASE("chains_to_binpack rejects out-of-fragment instances") {
    SchedInstance branching;
    branching.machines = 1;
    branching.deadline = 3;
    branching.jobs.assign(3, SchedJob{1, 1});
    branching.prec.push_back({0, 1, DelayKind::exact, 1});
    branching.prec.push_back({0, 2, DelayKind::exact, 1});
    CHECK_THROWS_AS(chains_to_binpack(branching), std::invalid_argument);

    SchedInstance mixed;
    mixed.machines = 1;
    mixed.deadline = 4;
    mixed.jobs.assign(3, SchedJob{1, 1});
    mixed.prec.push_back({0, 1, DelayKind::exact, 1});
    mixed.prec.push_back({1, 2, DelayKind::exact, 2});
    CHECK_THROWS_AS(chains_to_binpack(mixed), std::invalid_argument);

    SchedInstance min_kind;
    min_kind.machines = 1;
    min_kind.deadline = 2;
    min_kind.jobs.assign(2, SchedJob{1, 1});
    min_kind.prec.push_back({0, 1, DelayKind::min, 1});
    CHECK_THROWS_AS(chains_to_binpack(min_kind), std::invalid_argument);
}

TEST_CASE("forward equivalence on a small exhaustive block") {
    for (int bins = 1; bins <= 2; ++bins)
        for (int cap = 1; cap <= 3; ++cap)
            for (int count = 0; count <= 3; ++count) {
                std::vector<int> items(count, 1);
                while (true) {
                    BinPackingInstance bp = make(cap, bins, items);
                    bool left = binpack_feasible(bp).has_value();
                    bool right = feasible(binpack_to_chains(bp)).feasible();
                    CHECK(left == right);
                    int i = count - 1;
                    while (i >= 0 && items[i] == cap + 1) items[i--] = 1;
                    if (i < 0) break;
                    ++items[i];
                }
            }
}

TEST_CASE("reverse equivalence on a small exhaustive block") {
    for (int d = 1; d <= 5; ++d)
        for (int l = 0; l <= 2; ++l)
            for (int chains = 0; chains <= 3; ++chains) {
                std::vector<int> lengths(chains, 1);
                while (true) {
                    SchedInstance inst;
                    inst.machines = 1;
                    inst.deadline = d;
                    inst.structure = PrecStructure::chains;
                    for (int len : lengths) {
                        int first = inst.job_count();
                        for (int q = 0; q < len; ++q) inst.jobs.push_back({1, 1});
                        for (int q = 1; q < len; ++q)
                            inst.prec.push_back({first + q - 1, first + q,
                                                 DelayKind::exact, l});
                    }
                    bool left = feasible(inst).feasible();
                    BinPackingInstance bp = chains_to_binpack(inst);
                    auto packing = binpack_feasible(bp);
                    CHECK(left == packing.has_value());
                    if (packing) {
                        // exactly one fill item lands in every bin
                        std::vector<int> fills(bp.bins, 0);
                        for (std::size_t i = bp.items.size() - bp.bins;
                             i < bp.items.size(); ++i)
                            ++fills[packing->assign[i] - 1];
                        for (int f : fills) CHECK(f == 1);
                    }
                    int i = chains - 1;
                    while (i >= 0 && lengths[i] == d) lengths[i--] = 1;
                    if (i < 0) break;
                    ++lengths[i];
                }
            }
}
