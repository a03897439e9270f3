#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "chm/constructions.hpp"
#include "chm/symmetric.hpp"

using namespace chm;

TEST_CASE("enumerate_tuwz on the small odd k cases") {
    CHECK(enumerate_tuwz(3) == std::vector<TuwzTuple>{{2, 1, 1, 1}});
    CHECK(enumerate_tuwz(5) == std::vector<TuwzTuple>{{3, 1, 2, 1}, {3, 1, 1, 2}});
    CHECK(enumerate_tuwz(7) ==
          std::vector<TuwzTuple>{{4, 1, 3, 1}, {4, 1, 1, 3}, {2, 2, 1, 3}});
    CHECK_THROWS_AS(enumerate_tuwz(4), Error);
}

TEST_CASE("candidate_order") {
    CHECK(candidate_order({2, 1, 1, 1}) == 16);
    CHECK(candidate_order({2, 2, 1, 3}) == 120);
    CHECK(candidate_order({7, 1, 2, 3}) == 924);
}

TEST_CASE("k_audit reproduces the known rows") {
    auto audit = k_audit(127);
    std::set<std::pair<long long, long long>> exceptions;
    for (const auto& row : audit.exceptions) exceptions.insert({row.k, row.n});
    CHECK(exceptions == std::set<std::pair<long long, long long>>{{7, 120}, {13, 924}});
    for (const auto& row : audit.exceptions) {
        if (row.n == 120) CHECK(row.d2 == 10);
        if (row.n == 924) CHECK(row.d2 == 58);
    }

    auto orders_for = [&](long long k) {
        std::vector<long long> ns;
        for (const auto& row : audit.rows)
            if (row.k == k) ns.push_back(row.n);
        return ns;
    };
    CHECK(orders_for(3) == std::vector<long long>{16});
    CHECK(orders_for(5) == std::vector<long long>{36, 96});
    CHECK(orders_for(7) == std::vector<long long>{64, 288, 120});
    auto k9 = orders_for(9);
    CHECK(std::set<long long>(k9.begin(), k9.end()) == std::set<long long>{100, 280, 640});

    // n via the tuple formula always matches n = k(2d+k)+1 with the row's d
    for (const auto& row : audit.rows) CHECK(row.k * (row.d2 + row.k) + 1 == row.n);

    auto small = k_audit(3);
    REQUIRE(small.rows.size() == 1);
    CHECK(small.rows[0].n == 16);
    CHECK(small.rows[0].r == 1);
    CHECK(small.rows[0].passes);
}

TEST_CASE("k_large_check") {
    CHECK(k_large_check(8, 8));
    CHECK(k_large_check(8, 12));
    CHECK(k_large_check(8, 20));
    CHECK_THROWS_AS(k_large_check(7, 8), Error);
}

TEST_CASE("solve_s") {
    auto res = solve_s(120, 10);
    CHECK(res.k == 7);
    CHECK(res.r == 3);
    CHECK(res.s_cap == 7);
    CHECK(res.feasible == std::vector<long long>{0});

    res = solve_s(924, 58);
    CHECK(res.k == 13);
    CHECK(res.r == 4);
    CHECK(res.feasible == std::vector<long long>{1});

    res = solve_s(8, 6);
    CHECK(res.k == 1);
    CHECK(res.r == 1);
    CHECK(res.feasible == std::vector<long long>{0});

    CHECK_THROWS_AS(solve_s(100, 10), Error);  // no k for (100, d=5)
    CHECK_THROWS_AS(solve_s(120, 8), Error);   // d must be an odd integer
}

TEST_CASE("constraint tables pin the known divisor assignments") {
    auto tables = build_constraint_table(120, 10, 0);
    REQUIRE(tables.size() == 1);
    const auto& t = tables[0];
    CHECK(t.free_divisors == std::vector<long long>{1, 2, 3, 5, 6, 10, 15, 30});
    CHECK(t.fixed.at(4) == -1);
    CHECK(t.fixed.at(8) == +1);
    CHECK(t.fixed.at(12) == +1);
    CHECK(t.fixed.at(20) == +1);
    CHECK(t.fixed.at(24) == -1);
    CHECK(t.fixed.at(40) == -1);
    CHECK(t.fixed.at(60) == -1);

    auto tables924 = build_constraint_table(924, 58, 1);
    CHECK(tables924.size() == 15);
    for (const auto& table : tables924) {
        CHECK(table.free_divisors == std::vector<long long>{1, 3, 7, 11, 21, 33, 77, 231});
        CHECK(table.b_positions.size() == 15);
    }
    // the b = -1 placement flips exactly one fixed sign relative to s=0
    auto base = build_constraint_table(924, 58, 0)[0];
    for (const auto& table : tables924) {
        int flips = 0;
        for (const auto& [m, v] : table.fixed)
            if (v != base.fixed.at(m)) ++flips;
        CHECK(flips == 1);
        CHECK(table.fixed.at(table.b_minus_at) == -base.fixed.at(table.b_minus_at));
    }

    auto tables8 = build_constraint_table(8, 6, 0);
    REQUIRE(tables8.size() == 1);
    CHECK(tables8[0].free_divisors == std::vector<long long>{1, 2});
    CHECK(tables8[0].fixed == std::map<long long, int>{{4, -1}});

    CHECK_THROWS_AS(build_constraint_table(120, 10, 2), Error);
}

TEST_CASE("expanded assignments are symmetric and constant on gcd classes") {
    auto tables = build_constraint_table(120, 10, 0);
    std::map<long long, int> assignment;
    int v = 1;
    for (long long m : tables[0].free_divisors) assignment[m] = (v = -v);
    Generator g = expand_assignment(tables[0], assignment, 10);
    CHECK(g.is_symmetric());
    for (int j = 1; j < g.n; ++j) CHECK(g.sign(j) == g.sign(static_cast<int>(std::gcd<long long>(j, g.n))));
}

TEST_CASE("eliminate_case on the desk-scale (8, d=3) pair") {
    auto rep = eliminate_case(8, 6);
    CHECK(rep.cases_tried == 4);
    REQUIRE(rep.survivors.size() == 2);
    // survivors are exactly the symmetric maximal-d families g1 and g2
    std::vector<Generator> expected{family_generator(Family::g1, 8), family_generator(Family::g2, 8)};
    std::sort(expected.begin(), expected.end());
    CHECK(rep.survivors == expected);
    for (const auto& g : rep.survivors) CHECK(is_orthogonal(g));
}

TEST_CASE("eliminate_case kills (120, 5) and (924, 29)") {
    auto rep120 = eliminate_case(120, 10);
    CHECK(rep120.cases_tried == 256);
    CHECK(rep120.survivors.empty());

    auto rep924 = eliminate_case(924, 58);
    CHECK(rep924.cases_tried == 3840);
    CHECK(rep924.survivors.empty());
}
