#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookbias/hooks.hpp"
#include "hookbias/partition.hpp"

using namespace hookbias;

TEST_CASE("hook grid of (5,3,2,2)")
{
    HookGrid g = hook_grid(make_partition({5, 3, 2, 2}));
    std::vector<std::vector<int>> expect{{8, 7, 4, 2, 1}, {5, 4, 1}, {3, 2}, {2, 1}};
    CHECK(g.rows == expect);
}

TEST_CASE("hook grid corner cases")
{
    CHECK(hook_grid(make_partition({1})).rows == std::vector<std::vector<int>>{{1}});
    CHECK(hook_grid(make_partition({3, 1})).rows ==
          std::vector<std::vector<int>>{{4, 2, 1}, {1}});
    CHECK(hook_grid(Partition()).rows.empty());
}

TEST_CASE("cell counts")
{
    Partition fig = make_partition({5, 3, 2, 2});
    CHECK(count_k_hooks_cells(fig, 2) == 3);
    CHECK(count_k_hooks_cells(fig, 9) == 0);
    CHECK(count_k_hooks_cells(Partition(), 4) == 0);
    CHECK_THROWS_AS(count_k_hooks_cells(fig, 0), std::invalid_argument);
}

TEST_CASE("beta-set counts")
{
    CHECK(count_k_hooks_beta(make_partition({5, 3, 2, 2}), 2) == 3);
    CHECK(count_k_hooks_beta(make_partition({1}), 1) == 1);
    CHECK(count_k_hooks_beta(Partition(), 3) == 0);
}

TEST_CASE("domino counts")
{
    CHECK(count_2_hooks_domino(make_partition({5, 3, 2, 2})) == 3);
    CHECK(count_2_hooks_domino(make_partition({2})) == 1);
    CHECK(count_2_hooks_domino(make_partition({1, 1})) == 1);
    // runs longer than two equal parts admit a single removable domino
    CHECK(count_2_hooks_domino(make_partition({1, 1, 1})) == 1);
    CHECK(count_2_hooks_domino(make_partition({2, 2, 2})) == 2);
}

TEST_CASE("three-way agreement on all partitions of n <= 14")
{
    for (int n = 0; n <= 14; ++n)
        for_each_partition(n, [&](const std::vector<int>& parts) {
            Partition p = Partition::from_sorted(parts);
            for (int k = 1; k <= 6; ++k)
                CHECK(count_k_hooks_cells(p, k) == count_k_hooks_beta(p, k));
            CHECK(count_k_hooks_cells(p, 2) == count_2_hooks_domino(p));
        });
}

TEST_CASE("total cell count equals n")
{
    for (int n = 0; n <= 12; ++n)
        for_each_partition(n, [&](const std::vector<int>& parts) {
            Partition p = Partition::from_sorted(parts);
            std::size_t cells = 0;
            for (const auto& row : hook_grid(p).rows)
                cells += row.size();
            CHECK(cells == static_cast<std::size_t>(n));
        });
}

TEST_CASE("b_{t,k} basics")
{
    CHECK(b_tk(0, 3, 2) == 0);
    CHECK(b_tk(0, 4, 1) == 0);
    CHECK(b_tk(4, 4, 2) >= b_tk(4, 3, 2));
    CHECK(b_tk(4, 4, 2) == 5);
    CHECK(b_tk(4, 3, 2) == 5);
    for (int n = 4; n <= 30; ++n)
        CHECK(b_tk(n, 3, 2) >= b_tk(n, 2, 2));
}

TEST_CASE("bias tables")
{
    BiasTable zero = bias_table(3, 2, 0);
    CHECK(zero.values == std::map<int, std::int64_t>{{0, 0}});

    BiasTable b22 = bias_table(2, 2, 10);
    BiasTable b21 = bias_table(2, 1, 10);
    BiasTable b23 = bias_table(2, 3, 10);
    for (int n = 5; n <= 10; ++n)
        CHECK(b22.values.at(n) >= b21.values.at(n));
    for (int n = 0; n <= 10; ++n)
        CHECK(b22.values.at(n) >= b23.values.at(n));

    // parallel sweep merges deterministically
    CHECK(bias_table(3, 2, 16, 4).values == bias_table(3, 2, 16, 1).values);
}
