#include "chm/symmetric.hpp"

#include <algorithm>
#include <numeric>

namespace chm {

std::vector<TuwzTuple> enumerate_tuwz(long long k) {
    if (k < 3 || k % 2 == 0) throw Error(Errc::even_k, "enumerate_tuwz requires odd k >= 3");
    const long long tu = (k + 1) / 2;
    const long long wz = (k - 1) / 2;
    std::vector<long long> ts = divisors(tu);
    std::vector<long long> ws = divisors(wz);
    std::sort(ts.rbegin(), ts.rend());
    std::sort(ws.rbegin(), ws.rend());
    std::vector<TuwzTuple> out;
    for (long long t : ts)
        for (long long w : ws)
            if (w < t) out.push_back({t, tu / t, w, wz / w});
    return out;
}

long long candidate_order(const TuwzTuple& tuple) {
    return 4 * tuple.t * tuple.z * (2 * tuple.t * tuple.u - 1 - tuple.u * tuple.w);
}

KAudit k_audit(long long k_max) {
    if (k_max < 3 || k_max % 2 == 0)
        throw Error(Errc::out_of_range, "k_audit requires odd k_max >= 3");
    KAudit audit;
    for (long long k = 3; k <= k_max; k += 2) {
        for (const TuwzTuple& tuple : enumerate_tuwz(k)) {
            KAuditRow row;
            row.k = k;
            row.tuple = tuple;
            row.n = candidate_order(tuple);
            row.factorization = factorize(row.n);
            row.r = row.factorization.r();
            row.passes = k + 1 > (1LL << row.r);
            row.d2 = (row.n - 1) / k - k;
            if (!row.passes) audit.exceptions.push_back(row);
            audit.rows.push_back(std::move(row));
        }
    }
    return audit;
}

bool k_large_check(int r_min, int r_max) {
    if (r_min < 8 || r_max > 20 || r_min > r_max)
        throw Error(Errc::out_of_range, "k_large_check requires 8 <= r_min <= r_max <= 20");
    for (int r = r_min; r <= r_max; ++r) {
        int128 lhs = int128{1} << (3 * r);  // (2^r)^3 = 8^r
        if (!(lhs < 2 * primorial(r))) return false;
    }
    return true;
}

SolveSResult solve_s(long long n, long long d2) {
    if (d2 % 4 != 2) throw Error(Errc::not_odd_integer, "solve_s requires an odd integer d");
    const long long d = d2 / 2;
    const long long q = d * d + n - 1;
    const long long root = isqrt_floor(q);
    if (root * root != q || root <= d || n != (root - d) * (2 * d + (root - d)) + 1)
        throw Error(Errc::no_k, "no k with n = k(2d+k)+1 for this (n, d)");
    SolveSResult res;
    res.k = root - d;
    res.r = factorize(n).r();

    long long cap = 0;
    for (long long m : divisors(n))
        if (m < n && mobius(n / m) != 0) ++cap;
    res.s_cap = cap;  // equals 2^r - 1

    // d+k = |d-1+2^r-2s|  ->  s = (d-1+2^r -/+ (d+k)) / 2
    const long long base = d - 1 + (1LL << res.r);
    for (long long num : {base - (d + res.k), base + (d + res.k)}) {
        if (num % 2 != 0) {
            res.rejected.emplace_back(num, "non-integer s");
            continue;
        }
        long long s = num / 2;
        if (s < 0)
            res.rejected.emplace_back(s, "negative s");
        else if (s > cap)
            res.rejected.emplace_back(s, "exceeds the " + std::to_string(cap) +
                                             " proper divisors with mu(n/m) != 0");
        else
            res.feasible.push_back(s);
    }
    std::sort(res.feasible.begin(), res.feasible.end());
    res.feasible.erase(std::unique(res.feasible.begin(), res.feasible.end()), res.feasible.end());
    return res;
}

std::vector<ConstraintTable> build_constraint_table(long long n, long long d2, long long s) {
    if (s != 0 && s != 1)
        throw Error(Errc::unsupported_s,
                    "s = " + std::to_string(s) + " regimes are not derived; only s in {0, 1}");
    ConstraintTable base;
    base.n = n;
    for (long long m : divisors(n)) {
        if (m == n) continue;
        int mu = mobius(n / m);
        if (mu == 0)
            base.free_divisors.push_back(m);
        else {
            base.fixed[m] = mu;
            base.b_positions.push_back(m);
        }
    }
    if (s == 0) {
        base.b_positions.clear();
        return {base};
    }
    std::vector<ConstraintTable> tables;
    for (long long pos : base.b_positions) {
        ConstraintTable t = base;
        t.b_minus_at = pos;
        t.fixed[pos] = -t.fixed[pos];
        tables.push_back(std::move(t));
    }
    return tables;
}

Generator expand_assignment(const ConstraintTable& table, const std::map<long long, int>& free_values,
                            long long d2) {
    const long long n = table.n;
    std::map<long long, int> by_divisor = table.fixed;
    for (const auto& [m, v] : free_values) by_divisor[m] = v;
    SignVector signs(static_cast<std::size_t>(n) - 1);
    for (long long j = 1; j < n; ++j)
        signs.set(static_cast<std::size_t>(j) - 1, by_divisor.at(std::gcd(j, n)));
    return make_generator(static_cast<int>(n), d2, std::move(signs));
}

EliminationReport eliminate_case(long long n, long long d2) {
    SolveSResult sres = solve_s(n, d2);
    EliminationReport rep;
    rep.n = n;
    rep.d2 = d2;
    rep.s_values = sres.feasible;
    for (long long s : sres.feasible) {
        if (s > 1)
            throw Error(Errc::unsupported_s, "feasible s = " + std::to_string(s) + " not supported");
        for (const ConstraintTable& table : build_constraint_table(n, d2, s)) {
            const auto& free = table.free_divisors;
            const std::size_t count = free.size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
                std::map<long long, int> assignment;
                for (std::size_t i = 0; i < count; ++i)
                    assignment[free[i]] = (mask >> i) & 1 ? -1 : +1;
                Generator g = expand_assignment(table, assignment, d2);
                ++rep.cases_tried;
                if (is_orthogonal(g)) rep.survivors.push_back(std::move(g));
            }
        }
    }
    std::sort(rep.survivors.begin(), rep.survivors.end());
    return rep;
}

}  // namespace chm
