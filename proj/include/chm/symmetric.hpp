#pragma once

#include <map>
#include <vector>

#include "chm/core.hpp"
#include "chm/numtheory.hpp"

namespace chm {

struct TuwzTuple {
    long long t = 0, u = 0, w = 0, z = 0;

    bool operator==(const TuwzTuple&) const = default;
};

/// All factorizations (k+1)/2 = t*u, (k-1)/2 = w*z with w < t,
/// ordered by t descending, then w descending.
std::vector<TuwzTuple> enumerate_tuwz(long long k);

/// n = 4tz(2tu - 1 - uw).
long long candidate_order(const TuwzTuple& tuple);

struct KAuditRow {
    long long k = 0;
    TuwzTuple tuple;
    long long n = 0;
    Factorization factorization;
    int r = 0;
    bool passes = false;  // k+1 > 2^r
    long long d2 = 0;     // (n-1)/k - k
};

struct KAudit {
    std::vector<KAuditRow> rows;
    std::vector<KAuditRow> exceptions;  // rows with passes == false
};

/// One row per odd k in [3, k_max] and per (t,u,w,z) tuple.
KAudit k_audit(long long k_max);

/// Exact form of the primorial bound: (2^r)^3 < 2 * p_r# for all r in range.
bool k_large_check(int r_min, int r_max);

struct SolveSResult {
    long long k = 0;
    int r = 0;
    long long s_cap = 0;  // proper divisors m of n with mu(n/m) != 0
    std::vector<long long> feasible;
    std::vector<std::pair<long long, std::string>> rejected;  // (s, reason)
};

/// Integer solutions s >= 0 of d+k = |d-1+2^r-2s| within the divisor cap.
SolveSResult solve_s(long long n, long long d2);

struct ConstraintTable {
    long long n = 0;
    std::map<long long, int> fixed;         // divisor m -> forced sign c_m
    std::vector<long long> free_divisors;   // mu(n/m) == 0, ascending
    std::vector<long long> b_positions;     // divisors carrying the b-vector (s=1)
    long long b_minus_at = 0;               // divisor with b = -1, 0 in the s=0 regime
};

/// s=0: one table fixing c_m = mu(n/m) at every mu != 0 proper divisor.
/// s=1: one table per placement of the single -1 in the b-vector.
std::vector<ConstraintTable> build_constraint_table(long long n, long long d2, long long s);

struct EliminationReport {
    long long n = 0;
    long long d2 = 0;
    std::vector<long long> s_values;
    long long cases_tried = 0;
    std::vector<Generator> survivors;
};

/// Enumerates every free-parameter assignment in every constraint table,
/// expands to a symmetric generator via gcd classes, and tests orthogonality.
EliminationReport eliminate_case(long long n, long long d2);

/// Expand a table plus free-parameter assignment to the full symmetric generator.
Generator expand_assignment(const ConstraintTable& table, const std::map<long long, int>& free_values,
                            long long d2);

}  // namespace chm
