#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookbias/blocks.hpp"
#include "hookbias/hooks.hpp"
#include "hookbias/partition.hpp"

using namespace hookbias;

TEST_CASE("residue grouping")
{
    CHECK(block_of_part(2) == BlockId{1, 0});
    CHECK(block_of_part(4) == BlockId{1, 0});
    CHECK(block_of_part(5) == BlockId{2, 0});
    CHECK(block_of_part(8) == BlockId{2, 0});
    CHECK(block_of_part(10) == BlockId{3, 0});
    CHECK(block_of_part(11) == BlockId{3, 0});
    CHECK(block_of_part(17) == BlockId{2, 1});
    // transformed residues slide into the same blocks
    CHECK(block_of_part(3) == BlockId{1, 0});
    CHECK(block_of_part(6) == BlockId{2, 0});
    CHECK(block_of_part(9) == BlockId{3, 0});
    CHECK(block_of_part(21) == BlockId{3, 1});
    CHECK_THROWS_AS(block_of_part(12), std::invalid_argument);
    CHECK_THROWS_AS(block_of_part(0), std::invalid_argument);
}

TEST_CASE("decompose")
{
    BlockTable bt = decompose(make_partition({10, 10, 8, 8, 8, 5, 4, 2, 1, 1}));
    CHECK(bt.alpha_at(0, 10) == 2);
    CHECK(bt.alpha_at(0, 8) == 3);
    CHECK(bt.alpha_at(0, 5) == 1);
    CHECK(bt.alpha_at(0, 4) == 1);
    CHECK(bt.alpha_at(0, 2) == 1);
    CHECK(bt.alpha_at(0, 1) == 2);
    CHECK(bt.alpha_at(1, 1) == 0);

    CHECK(decompose(Partition()).alpha.empty());

    BlockTable high = decompose(make_partition({17, 17, 14}));
    CHECK(high.alpha_at(1, 5) == 2);
    CHECK(high.alpha_at(1, 2) == 1);

    CHECK_THROWS_AS(decompose(make_partition({6, 1})), std::invalid_argument);
}

TEST_CASE("recompose inverts decompose")
{
    CHECK(recompose(decompose(make_partition({10, 10, 8, 8, 8, 5, 4, 2, 1, 1}))) ==
          make_partition({10, 10, 8, 8, 8, 5, 4, 2, 1, 1}));
    CHECK(recompose(BlockTable{}) == Partition());
    BlockTable bt;
    bt.alpha[{1, 5}] = 2;
    bt.alpha[{1, 2}] = 1;
    CHECK(recompose(bt) == make_partition({17, 17, 14}));

    for (int n = 0; n <= 30; ++n)
        for_each_t_regular(n, 3, [&](const std::vector<int>& parts) {
            Partition p = Partition::from_sorted(parts);
            CHECK(recompose(decompose(p)) == p);
        });
}

TEST_CASE("block-attributed 2-hook counts")
{
    BlockHookProfile single = block_two_hooks(make_partition({2}));
    CHECK(single.blocks.at(BlockId{1, 0}).count == 1);
    CHECK(single.total() == 1);

    BlockHookProfile pair = block_two_hooks(make_partition({11, 10}));
    CHECK(pair.blocks.at(BlockId{3, 0}).count == 1);
    CHECK(pair.blocks.at(BlockId{3, 0}).boundary); // its hook looks past the block
    CHECK(pair.total() == 1);

    Partition paper = make_partition({10, 10, 8, 8, 8, 5, 4, 2, 1, 1});
    CHECK(block_two_hooks(paper).total() == count_k_hooks_cells(paper, 2));

    CHECK_THROWS_AS(block_two_hooks(make_partition({3})), std::invalid_argument);
}

TEST_CASE("attributed counts partition the total")
{
    for (int n = 0; n <= 30; ++n)
        for_each_t_regular(n, 3, [&](const std::vector<int>& parts) {
            Partition p = Partition::from_sorted(parts);
            BlockHookProfile profile = block_two_hooks(p);
            CHECK(profile.total() == count_k_hooks_cells(p, 2));
            for (const auto& [id, hooks] : profile.blocks)
                CHECK(hooks.count >= 0);
        });
}

TEST_CASE("isolated block scores")
{
    // (5,4,2): the 5 has no 2-hook in context but one standalone
    auto iso = block_two_hooks_isolated(make_partition({5, 4, 2}));
    CHECK(iso.at(BlockId{2, 0}) == 1);
    CHECK(iso.at(BlockId{1, 0}) == 2);

    auto mixed = block_two_hooks_isolated(make_partition({9, 6, 2, 1, 1}));
    CHECK(mixed.at(BlockId{3, 0}) == 1); // (9) alone
    CHECK(mixed.at(BlockId{2, 0}) == 1); // (6) alone
    CHECK(mixed.at(BlockId{1, 0}) == 1); // (2,1,1): the vertical pair
}
