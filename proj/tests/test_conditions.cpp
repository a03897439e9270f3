#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chm/conditions.hpp"
#include "chm/constructions.hpp"
#include "oracle.hpp"

using namespace chm;

TEST_CASE("check_pair on the landmark pairs") {
    CHECK(check_pair(16, 2).admissible);   // the (16,1) excluded pair survives the filters
    CHECK(check_pair(28, 6).admissible);
    CHECK(check_pair(36, 2).admissible);
    CHECK(check_pair(40, 10).admissible);

    auto rep = check_pair(6, 0);
    CHECK_FALSE(rep.admissible);
    CHECK(rep.find("thm-d-even")->status == Status::fail);

    CHECK(check_pair(3, 1).admissible);   // half-integer d = 1/2, n = 2(d+1)
    CHECK(check_pair(10, 8).admissible);  // d = 4 = n/2-1, n == 2 (mod 4)
}

TEST_CASE("check_pair verdicts are unique and consistent with admissible") {
    for (long long n = 2; n <= 40; ++n)
        for (long long d2 = 0; d2 <= n; ++d2) {
            auto rep = check_pair(n, d2);
            std::set<std::string> ids;
            bool any_fail = false;
            for (const auto& v : rep.verdicts) {
                CHECK(ids.insert(v.id).second);
                any_fail = any_fail || v.status == Status::fail;
            }
            CHECK(rep.admissible == !any_fail);
        }
}

TEST_CASE("k_candidates") {
    auto c36 = k_candidates(36);
    REQUIRE(c36.size() == 2);
    CHECK(c36[0].k == 1);
    CHECK(c36[0].d2 == 34);
    CHECK(c36[1].k == 5);
    CHECK(c36[1].d2 == 2);

    auto c40 = k_candidates(40);
    REQUIRE(c40.size() == 2);
    CHECK(c40[0].k == 1);
    CHECK(c40[0].d2 == 38);
    CHECK(c40[1].k == 3);
    CHECK(c40[1].d2 == 10);

    auto c4 = k_candidates(4);
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].k == 1);
    CHECK(c4[0].d2 == 2);

    CHECK_THROWS_AS(k_candidates(7), Error);
}

TEST_CASE("property: k_candidates satisfy and exhaust n = k(2d+k)+1") {
    for (long long n = 2; n <= 200; n += 2) {
        auto cands = k_candidates(n);
        for (const auto& c : cands) CHECK(c.k * (c.d2 + c.k) + 1 == n);
        // every admissible divisor pair is present
        long long expected = 0;
        for (long long k = 1; k * k <= n - 1; ++k)
            if ((n - 1) % k == 0) ++expected;
        CHECK(static_cast<long long>(cands.size()) == expected);
    }
}

TEST_CASE("check_generator") {
    auto rep = check_generator(family_generator(Family::g1, 10));
    CHECK(rep.admissible);

    rep = check_generator(family_generator(Family::g4a, 8));
    CHECK(rep.admissible);
    CHECK(rep.find("nonsym-d-odd")->status == Status::pass);
    CHECK(rep.find("prop-sym")->status == Status::not_applicable);

    // n == 2 (mod 4) but asymmetric: symmetry check must fail
    rep = check_generator(make_generator(6, 4, {+1, -1, -1, -1, -1}));
    CHECK(rep.find("prop-sym")->status == Status::fail);
}

TEST_CASE("every orthogonal generator found by search passes the necessity checks") {
    for (int n = 2; n <= 14; ++n)
        for (long long d2 = 0; d2 <= n - 2; ++d2)
            for (const auto& g : chm::test::brute_enumerate(n, d2)) {
                CHECK(check_pair(n, d2).admissible);
                CHECK(check_generator(g).admissible);
            }
}

TEST_CASE("symmetric_divisibility") {
    CHECK(symmetric_divisibility(8, 6));
    CHECK(symmetric_divisibility(120, 10));
    CHECK_FALSE(symmetric_divisibility(16, 6));  // 24 is not a perfect square
    CHECK_THROWS_AS(symmetric_divisibility(8, 4), Error);
}

TEST_CASE("scan 2 <= n <= 50 reproduces the excluded-pair list") {
    std::set<std::pair<long long, long long>> nonmax;
    for (long long n = 2; n <= 50; ++n)
        for (long long d2 = 0; d2 <= n - 2; ++d2)
            if (check_pair(n, d2).admissible && n != d2 + 2) nonmax.insert({n, d2 / 2});
    CHECK(nonmax == std::set<std::pair<long long, long long>>{{16, 1}, {28, 3}, {36, 1}, {40, 5}});
}
