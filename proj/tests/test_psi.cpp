#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hookbias/phi.hpp"
#include "hookbias/psi.hpp"

using namespace hookbias;

TEST_CASE("r values")
{
    BlockTable bt;
    bt.alpha[{0, 8}] = 3;
    CHECK(r_value(bt) == 3);

    BlockTable single;
    single.alpha[{0, 8}] = 1;
    CHECK(r_value(single) == -1);

    CHECK(r_value(decompose(make_partition({47, 44, 32, 20, 16, 16, 14, 8, 4, 2}))) == -2);
}

TEST_CASE("xi split")
{
    XiSplit a = xi_split(make_partition({16, 5, 1}));
    CHECK(a.xi_block == make_partition({5, 1}));
    CHECK(a.xi == 6);
    CHECK(a.xi_complement == make_partition({16}));

    XiSplit b = xi_split(make_partition({20, 2}));
    CHECK(b.xi_block == make_partition({2}));
    CHECK(b.xi == 2);
    CHECK(b.xi_complement == make_partition({20}));

    XiSplit c = xi_split(make_partition({7, 5, 4, 2, 1}));
    CHECK(c.xi_complement.empty());
    CHECK(c.xi == 19);
}

TEST_CASE("case labels")
{
    CHECK(psi_case_of(make_partition({16, 4, 2})).tag == PsiCaseTag::B2a);
    CHECK(psi_case_of(make_partition({10, 4, 2, 2, 2})).tag == PsiCaseTag::B1);
    CHECK(psi_case_of(make_partition({47, 44, 32, 20, 16, 16, 14, 8, 4, 2})).tag ==
          PsiCaseTag::A3);
    CHECK(psi_case_of(make_partition({20, 17, 17})).tag == PsiCaseTag::A1a);
    CHECK(psi_case_of(make_partition({44, 32, 28, 20, 20, 14, 8})).tag == PsiCaseTag::A1b);
    CHECK(psi_case_of(make_partition({8, 8, 14, 2})).tag == PsiCaseTag::A2);
    CHECK(psi_case_of(make_partition({28, 26, 16})).tag == PsiCaseTag::B2b);
    CHECK(psi_case_of(make_partition({28, 16, 16, 2})).tag == PsiCaseTag::B2c);
    CHECK(psi_case_of(make_partition({28, 28, 16, 16, 2})).tag == PsiCaseTag::B2d);
    // rejects partitions outside D_3
    CHECK_THROWS_AS(psi_case_of(make_partition({2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(psi_case_of(make_partition({8, 5, 2, 1, 1})), std::invalid_argument);
}

TEST_CASE("generic high-part transformation")
{
    auto [a, ra] = psi_high(make_partition({8, 8}));
    CHECK(a == make_partition({9, 6}));
    CHECK(ra == 1);

    auto [b, rb] = psi_high(make_partition({16}));
    CHECK(b == make_partition({15}));
    CHECK(rb == 1);

    auto [c, rc] = psi_high(make_partition({14, 8}));
    CHECK(c == make_partition({14, 9}));
    CHECK(rc == -1);
}

TEST_CASE("the (4,2^m) block rule")
{
    CHECK(psi_xi_42a(3, 0) == make_partition({3, 3, 3, 1}));
    CHECK(psi_xi_42a(1, 1) == make_partition({3, 3, 1}));
    CHECK(psi_xi_42a(1, 7) == make_partition({3, 3, 3, 3, 1}));
    for (int m = 1; m <= 6; ++m)
        for (int r = -1; r <= 9; ++r)
            CHECK(psi_xi_42a(m, r).n() == 4 + 2 * m + r);
    CHECK_THROWS_AS(psi_xi_42a(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(psi_xi_42a(2, -2), std::domain_error);
}

TEST_CASE("special rules reproduce the worked transformations")
{
    CHECK(psi_special_xi0_A1a(make_partition({20, 17, 17})) ==
          make_partition({21, 17, 9, 7}));
    CHECK(psi_special_xi0_A1a(make_partition({32, 20, 17, 8, 8})) ==
          make_partition({33, 21, 9, 9, 7, 6}));
    CHECK_THROWS_AS(psi_special_xi0_A1a(make_partition({14, 8})), std::invalid_argument);

    CHECK(psi_special_xi0_A1b(make_partition({44, 32, 28, 20, 20, 14, 8})) ==
          make_partition({45, 33, 27, 21, 18, 9, 9, 3, 1}));
    CHECK(psi_special_xi0_A1b(make_partition({56, 44, 32, 28, 20, 20, 14})) ==
          make_partition({57, 45, 33, 27, 21, 18, 9, 3, 1}));
    CHECK(psi_special_xi0_A1b(make_partition({44, 32, 28, 28, 26, 26, 20})) ==
          make_partition({45, 33, 27, 27, 26, 21, 11, 9, 3, 1, 1}));

    Partition a3 = make_partition({47, 44, 32, 20, 16, 16, 14, 8, 4, 2});
    Partition a3_img = psi_special_A3(a3);
    CHECK(a3_img == make_partition({47, 33, 21, 15, 15, 14, 9, 9, 9, 9, 9, 3, 3, 3, 3, 1}));
    CHECK(a3_img.n() == a3.n());
    CHECK(residue_mult_sum(a3_img, 9) >= 3);
    CHECK_THROWS_AS(psi_special_A3(make_partition({20, 17, 17})), std::invalid_argument);

    CHECK(psi_special_B2a(make_partition({16, 14, 14, 14, 14, 14})) ==
          make_partition({15, 15, 14, 14, 14, 14}));
    CHECK(psi_special_B2b(make_partition({28, 26, 16})) == make_partition({27, 27, 15, 1}));
    CHECK(psi_special_B2b(make_partition({28, 16, 14, 14, 14, 14, 14, 14, 14, 14, 14})) ==
          make_partition({27, 15, 15, 14, 14, 14, 14, 14, 14, 14, 14, 1}));
}

TEST_CASE("psi is partial, never guessing")
{
    CHECK_FALSE(psi(make_partition({14, 8})).has_value());
    // Xi-blocks outside the pinned-down branches stay unmapped
    CHECK_FALSE(psi(make_partition({16, 5, 1})).has_value());
    CHECK_FALSE(psi(make_partition({11, 5, 4, 2})).has_value());
    // determined images
    CHECK(psi(make_partition({10, 4, 2, 2, 2})) == make_partition({10, 3, 3, 3, 1}));
    CHECK(psi(make_partition({16, 4, 2})) == make_partition({15, 3, 3, 1}));
    CHECK(psi(make_partition({10, 4, 2, 2, 2, 2})) == make_partition({10, 3, 3, 3, 3}));
    CHECK_THROWS_AS(psi(make_partition({17, 17, 14})), std::invalid_argument);
    // D_3 is empty at n = 0 and 1
    for (int n = 0; n <= 1; ++n)
        for_each_t_regular(n, 3, [&](const std::vector<int>& parts) {
            CHECK_FALSE(in_d3(Partition::from_sorted(parts)));
        });
}

TEST_CASE("determined images behave for n <= 20")
{
    for (int n = 0; n <= 20; ++n) {
        std::set<Partition> c4 = c4_set(n);
        std::set<Partition> images;
        for_each_t_regular(n, 3, [&](const std::vector<int>& parts) {
            Partition p = Partition::from_sorted(parts);
            if (!in_d3(p))
                return;
            auto img = psi(p);
            if (!img)
                return;
            CHECK(img->n() == n);
            CHECK(is_t_regular(*img, 4));
            CHECK(c4.count(*img));
            CHECK(images.insert(*img).second);
        });
    }
}

TEST_CASE("class labels")
{
    CHECK(class_of(make_partition({11, 9, 1, 1})) == ClassLabel::CL1);
    CHECK(class_of(make_partition({10, 6, 6})) == ClassLabel::CL2);
    CHECK(class_of(make_partition({19, 3})) == ClassLabel::CL2);
    CHECK(class_of(make_partition({27, 27, 15, 1})) == ClassLabel::CL3);
    CHECK_FALSE(class_of(make_partition({9, 1, 1, 1})).has_value());
    for (int n = 0; n <= 18; ++n)
        for (const Partition& p : c4_set(n))
            CHECK(classes_matching(p).size() <= 1);
}

TEST_CASE("table 1 matches the golden copy")
{
    Table1 got = generate_table1();
    const Table1& want = golden_table1();
    REQUIRE(got.rows.size() == want.rows.size());
    for (std::size_t i = 0; i < got.rows.size(); ++i) {
        CHECK(got.rows[i].complement == want.rows[i].complement);
        CHECK(got.rows[i].preimages == want.rows[i].preimages);
        CHECK(got.rows[i].psi_complement == want.rows[i].psi_complement);
        CHECK(got.rows[i].images == want.rows[i].images);
    }
    CHECK(got.extras == want.extras);

    // pinned rows
    const Table1Row& r16 = got.rows[1];
    CHECK(r16.complement == make_partition({16}));
    CHECK(r16.preimages == std::vector<Partition>{make_partition({16, 5, 1}),
                                                  make_partition({16, 4, 2}),
                                                  make_partition({16, 2, 2, 2})});
    CHECK(r16.images == std::vector<Partition>{make_partition({15, 7}),
                                               make_partition({15, 6, 1}),
                                               make_partition({15, 3, 3, 1})});
    CHECK(got.rows[0].preimages == std::vector<Partition>{make_partition({20, 2})});
    CHECK(got.rows[0].images == std::vector<Partition>{make_partition({21, 1})});
}

TEST_CASE("table 1 rendering matches the fixture")
{
    std::ifstream fixture(std::string(FIXTURES_DIR) + "/table1.txt");
    REQUIRE(fixture.good());
    std::stringstream want;
    want << fixture.rdbuf();
    CHECK(render_table1(generate_table1()) == want.str());
}
