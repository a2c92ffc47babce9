#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hookbias/hooks.hpp"
#include "hookbias/phi.hpp"

using namespace hookbias;

TEST_CASE("phi on the worked example")
{
    Partition pre = make_partition({10, 10, 8, 8, 8, 5, 4, 2, 1, 1});
    Partition expect = make_partition({10, 10, 6, 6, 6, 5, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(phi(pre) == expect);
    CHECK(phi(Partition()) == Partition());
    CHECK(phi(make_partition({17, 17, 14})) == make_partition({17, 17, 14}));
    CHECK_THROWS_AS(phi(make_partition({9})), std::invalid_argument);
}

TEST_CASE("case classification")
{
    CHECK(phi_case(make_partition({17, 17, 14})) == PhiCase::Case1);
    CHECK(phi_case(make_partition({8, 7})) == PhiCase::Case2);
    CHECK(phi_case(make_partition({10, 10, 8, 8, 8, 5, 4, 2, 1, 1})) == PhiCase::Case3);
}

TEST_CASE("two-hook deltas on pinned examples")
{
    // Case 1 is the identity: all deltas vanish
    for (const auto& [id, delta] : two_hook_delta(make_partition({17, 17, 14})))
        CHECK(delta == 0);

    // losing two 2-hooks: 1_0-block (4,2^3) with a single contributing part
    auto lose2 = two_hook_delta(make_partition({10, 4, 2, 2, 2}));
    CHECK(lose2.at(BlockId{1, 0}) == -2);

    // Case 2 with alpha01=0 and two new 1s gains one in the 1_0-block
    auto gain = two_hook_delta(make_partition({8, 7}));
    CHECK(gain.at(BlockId{1, 0}) == 1);
    CHECK(gain.at(BlockId{2, 0}) == 0);

    // the refined branch: a lone 8 with bare 2s below loses nothing
    auto lone8 = two_hook_delta(make_partition({8, 5, 2}));
    CHECK(lone8.at(BlockId{1, 0}) == 0);
    CHECK(lone8.at(BlockId{2, 0}) == -1);
    // while a lone high 4 does lose the 2-row hook
    auto lone16 = two_hook_delta(make_partition({16, 5, 2}));
    CHECK(lone16.at(BlockId{1, 0}) == -1);
}

TEST_CASE("measured deltas satisfy the case formulas for n <= 20")
{
    for (int n = 0; n <= 20; ++n)
        for_each_t_regular(n, 3, [&](const std::vector<int>& parts) {
            Partition p = Partition::from_sorted(parts);
            for (const auto& [id, measured] : two_hook_delta(p)) {
                auto allowed = case_formula_delta(p, id);
                CHECK_MESSAGE(allowed.count(measured), p.to_string(), " ", block_name(id));
            }
        });
}

TEST_CASE("only Case 3 partitions lose 2-hooks (n <= 20)")
{
    for (int n = 0; n <= 20; ++n)
        for_each_t_regular(n, 3, [&](const std::vector<int>& parts) {
            Partition p = Partition::from_sorted(parts);
            if (count_k_hooks_cells(phi(p), 2) < count_k_hooks_cells(p, 2))
                CHECK(phi_case(p) == PhiCase::Case3);
        });
}

TEST_CASE("injectivity")
{
    CHECK(verify_injective(0).status == VerificationReport::Status::pass);
    for (int n = 0; n <= 20; ++n)
        CHECK(verify_injective(n).ok());

    // deterministic sample of B_3(57) containing the paper's example
    std::vector<Partition> sample;
    for_each_t_regular(57, 3, [&](const std::vector<int>& parts) {
        if (sample.size() < 2000)
            sample.push_back(Partition::from_sorted(parts));
    });
    sample.push_back(make_partition({10, 10, 8, 8, 8, 5, 4, 2, 1, 1}));
    std::set<Partition> images;
    for (const Partition& p : sample) {
        Partition img = phi(p);
        CHECK(is_t_regular(img, 4));
        CHECK(img.n() == 57);
        images.insert(img);
    }
    CHECK(images.size() == sample.size());
}

TEST_CASE("image characterization oracle")
{
    // second route to C_4(n): a 4-regular partition is outside the image
    // of phi iff it has a part congruent to 9 mod 12 or too few 1s
    for (int n = 0; n <= 18; ++n) {
        std::set<Partition> characterized;
        for_each_t_regular(n, 4, [&](const std::vector<int>& parts) {
            Partition p = Partition::from_sorted(parts);
            if (residue_mult_sum(p, 9) != 0 || alpha(p, 0, 1) < weighted_63(p))
                characterized.insert(p);
        });
        CHECK(characterized == c4_set(n));
    }
}

TEST_CASE("compensation sets at n = 4")
{
    CompensationSets s = build_sets(4);
    CHECK(s.c3.empty());
    CHECK(s.c3_1.empty());
    CHECK(s.c3_2.empty());
    CHECK(s.c4.empty());
    CHECK(s.q1.empty());
    CHECK(s.q2.empty());
    CHECK(s.q3.empty());
    CHECK(s.q.empty());
    CHECK_THROWS_AS(build_sets(1), std::invalid_argument);
}

TEST_CASE("compensation set structure for 4 <= n <= 16")
{
    for (int n = 4; n <= 16; ++n) {
        CompensationSets s = build_sets(n);
        // C3 splits into the alpha01 <= 1 part and the rest
        for (const Partition& p : s.c3) {
            CHECK(phi_case(p) == PhiCase::Case3);
            CHECK((s.c3_1.count(p) + s.c3_2.count(p)) == 1);
        }
        for (const Partition& p : s.c3_1)
            CHECK(alpha(p, 0, 1) <= 1);
        for (const Partition& p : s.c3_2)
            CHECK(alpha(p, 0, 1) >= 2);
        // Q1/Q2/Q3 dissect C_4(n-2)
        std::set<Partition> lower = c4_set(n - 2);
        CHECK(s.q1.size() + s.q2.size() + s.q3.size() == lower.size());
        for (const Partition& p : s.q2) {
            CHECK(alpha(p, 0, 1) >= 1);
            CHECK(residue_mult_sum(p, 9) == 0);
            CHECK(alpha(p, 0, 1) < weighted_63(p));
        }
        // the adjoined sets live in C_4(n) and are pairwise disjoint
        for (const Partition& p : s.q)
            CHECK(s.c4.count(p));
        for (const Partition& p : s.q1p) {
            CHECK_FALSE(s.q2p.count(p));
            CHECK_FALSE(s.q3p.count(p));
        }
        for (const Partition& p : s.q2p)
            CHECK_FALSE(s.q3p.count(p));
    }
}
