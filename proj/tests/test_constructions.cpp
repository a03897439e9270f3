#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "chm/constructions.hpp"
#include "oracle.hpp"

using namespace chm;

TEST_CASE("family generators") {
    CHECK(family_generator(Family::g1, 4) == make_generator(4, 2, {-1, -1, -1}));
    CHECK(family_generator(Family::g4a, 4) == make_generator(4, 2, {+1, +1, -1}));
    CHECK(family_generator(Family::g2, 6) == make_generator(6, 4, {+1, -1, +1, -1, +1}));
    CHECK(family_generator(Family::g4b, 8) == make_generator(8, 6, {-1, +1, +1, -1, -1, +1, +1}));

    CHECK_THROWS_AS(family_generator(Family::g2, 5), Error);
    CHECK_THROWS_AS(family_generator(Family::g4a, 6), Error);
}

TEST_CASE("families are orthogonal for n <= 64") {
    for (int n = 2; n <= 64; ++n) {
        CHECK(is_orthogonal(family_generator(Family::g1, n)));
        if (n % 2 == 0) CHECK(is_orthogonal(family_generator(Family::g2, n)));
        if (n % 4 == 0) {
            CHECK(is_orthogonal(family_generator(Family::g4a, n)));
            CHECK(is_orthogonal(family_generator(Family::g4b, n)));
        }
    }
}

TEST_CASE("enumerate_max_d counts") {
    CHECK(enumerate_max_d(3).size() == 1);
    CHECK(enumerate_max_d(6).size() == 2);
    CHECK(enumerate_max_d(8).size() == 4);
}

TEST_CASE("completeness at maximal d against the brute-force oracle, n <= 20") {
    for (int n = 2; n <= 20; ++n) {
        auto expected = chm::test::brute_enumerate(n, n - 2);
        auto got = enumerate_max_d(n);
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        CHECK(got == expected);
    }
}

TEST_CASE("transpose duality") {
    for (int n = 4; n <= 64; n += 4) {
        CHECK(family_generator(Family::g4a, n).reversed() == family_generator(Family::g4b, n));
        CHECK(family_generator(Family::g4b, n).reversed() == family_generator(Family::g4a, n));
    }
    for (int n = 2; n <= 64; n += 2) {
        CHECK(family_generator(Family::g1, n).reversed() == family_generator(Family::g1, n));
        CHECK(family_generator(Family::g2, n).reversed() == family_generator(Family::g2, n));
    }
}

TEST_CASE("block composition reproduces the families") {
    CHECK(block_compose(BaseBlock::minus_one, 6) == family_generator(Family::g1, 6));
    CHECK(block_compose(BaseBlock::c2, 3) == family_generator(Family::g2, 6));
    CHECK(block_compose(BaseBlock::c4a, 2) == family_generator(Family::g4a, 8));

    for (int n = 2; n <= 64; ++n) {
        CHECK(block_compose(BaseBlock::minus_one, n) == family_generator(Family::g1, n));
        if (n % 2 == 0) CHECK(block_compose(BaseBlock::c2, n / 2) == family_generator(Family::g2, n));
        if (n % 4 == 0) {
            CHECK(block_compose(BaseBlock::c4a, n / 4) == family_generator(Family::g4a, n));
            CHECK(block_compose(BaseBlock::c4b, n / 4) == family_generator(Family::g4b, n));
        }
    }
    CHECK_THROWS_AS(block_compose(BaseBlock::minus_one, 0), Error);
}

TEST_CASE("classification") {
    CHECK(classify(family_generator(Family::g4a, 12)) == Family::g4a);
    CHECK(classify(make_generator(4, 2, {+1, -1, +1})) == Family::g2);
    CHECK(classify(make_generator(4, 2, {+1, -1, -1})) == Family::unclassified);
    CHECK(classify(make_generator(16, 2, {+1, +1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1, +1, +1, -1})) ==
          Family::unclassified);  // right pattern, wrong d
}
