#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padictk/regions_signs.hpp"

using namespace padictk;

TEST_CASE("classify3 examples") {
    CHECK(classify3({2, 3, 3}).region == Region3::Balanced);
    CHECK(classify3({6, 2, 2}).region == Region3::F);
    auto c = classify3({2, 1, 1});
    CHECK(c.region == Region3::F);
    CHECK(c.central == 1);
    CHECK_THROWS_AS(classify3({2, 2, 1}), ParityViolation);
}

TEST_CASE("classify3 partitions the even-sum grid") {
    for (long k = 1; k <= 40; ++k)
        for (long l = 1; l <= 40; ++l)
            for (long m = 1; m <= 40; ++m) {
                if ((k + l + m) % 2 != 0) continue;
                auto c = classify3({k, l, m});
                long sum = k + l + m;
                long mx = std::max({k, l, m});
                bool bal = sum > 2 * mx;
                bool fd = sum <= 2 * k;
                bool gd = sum <= 2 * l;
                bool hd = sum <= 2 * m;
                int regions = (int)bal + (int)fd + (int)gd + (int)hd;
                // ties only at the boundary with two equal maxima
                if (regions != 1) {
                    CHECK(c.tie);
                    CHECK(sum == 2 * mx);
                } else {
                    switch (c.region) {
                        case Region3::Balanced: CHECK(bal); break;
                        case Region3::F: CHECK(fd); break;
                        case Region3::G: CHECK(gd); break;
                        case Region3::H: CHECK(hd); break;
                    }
                }
            }
}

TEST_CASE("classify2") {
    CHECK(classify2(6, 2) == Region2::F);
    CHECK(classify2(2, 2) == Region2::Ad);
    CHECK(classify2(4, 2) == Region2::F);  // boundary 2l = k goes to f
}

TEST_CASE("global sign") {
    CHECK(global_sign(Region3::Balanced, +1) == -1);
    CHECK(global_sign(Region3::F, +1) == +1);
    CHECK(global_sign(Region3::Balanced, -1) == +1);
    CHECK(global_sign(Region3::G, -1) == -1);
    for (int x : {+1, -1})
        CHECK(global_sign(Region3::Balanced, x) == -global_sign(Region3::F, x));
}

TEST_CASE("forced vanishing") {
    auto v1 = forced_vanishing(+1);
    CHECK(v1 == std::set<Region3>{Region3::Balanced});
    auto v2 = forced_vanishing(-1);
    CHECK(v2 == std::set<Region3>({Region3::F, Region3::G, Region3::H}));
    // sign forces odd order at the center on the balanced branch
    CHECK(global_sign(Region3::Balanced, +1) == -1);
}

TEST_CASE("self-dual sign table, all four cells") {
    auto c1 = selfdual_table(Region2::Ad, +1);
    CHECK(c1.eps_triple == -1);
    CHECK(c1.eps_adjoint == -1);
    auto c2 = selfdual_table(Region2::Ad, -1);
    CHECK(c2.eps_triple == -1);
    CHECK(c2.eps_adjoint == +1);
    auto c3 = selfdual_table(Region2::F, +1);
    CHECK(c3.eps_triple == +1);
    CHECK(c3.eps_adjoint == +1);
    auto c4 = selfdual_table(Region2::F, -1);
    CHECK(c4.eps_triple == +1);
    CHECK(c4.eps_adjoint == -1);
    // factorization eps(f x g x g^c) = eps(f x ad0 g) * eps(f)
    for (auto r : {Region2::Ad, Region2::F})
        for (int e : {+1, -1}) {
            auto s = selfdual_table(r, e);
            CHECK(s.eps_triple == s.eps_adjoint * e);
        }
}

TEST_CASE("panchishkin defect") {
    CHECK(panchishkin_defect(4, 4) == 0);
    CHECK(panchishkin_defect(3, 4) == 1);
    CHECK(panchishkin_defect(0, 0) == 0);
    // symmetry and triangle inequality
    for (long a = 0; a <= 6; ++a)
        for (long b = 0; b <= 6; ++b) {
            CHECK(panchishkin_defect(a, b) == panchishkin_defect(b, a));
            for (long c = 0; c <= 6; ++c)
                CHECK(panchishkin_defect(a, c) <=
                      panchishkin_defect(a, b) + panchishkin_defect(b, c));
        }
}
