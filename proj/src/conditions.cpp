#include "chm/conditions.hpp"

#include <sstream>

#include "chm/numtheory.hpp"

namespace chm {

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::not_applicable: return "not-applicable";
    }
    return "?";
}

const Verdict* ConditionReport::find(const std::string& id) const {
    for (const auto& v : verdicts)
        if (v.id == id) return &v;
    return nullptr;
}

namespace {

bool is_prime(long long v) {
    if (v < 2) return false;
    auto f = factorize(v);
    return f.r() == 1 && f.factors[0].second == 1;
}

void add(ConditionReport& rep, std::string id, Status st, std::string detail) {
    if (st == Status::fail) rep.admissible = false;
    rep.verdicts.push_back({std::move(id), st, std::move(detail)});
}

}  // namespace

ConditionReport check_pair(long long n, long long d2) {
    if (n < 2) throw Error(Errc::order_too_small, "n must be at least 2");
    if (d2 < 0) throw Error(Errc::negative_diagonal, "d2 must be non-negative");
    ConditionReport rep{n, d2, {}, true};

    const bool n_even = n % 2 == 0;
    const bool d_int = d2 % 2 == 0;
    const long long d = d2 / 2;  // only meaningful when d_int

    // (a) parity linkage: d integer <=> n even
    add(rep, "corol-d-parity", d_int == n_even ? Status::pass : Status::fail,
        d_int == n_even ? "d integer matches n parity" : "d integer iff n even violated");

    // half-integer d forces n odd and n = 2(d+1) = d2+2; same relation for odd n
    if (!n_even || !d_int) {
        bool ok = !n_even && !d_int && n == d2 + 2;
        add(rep, "prop-d-odd-order", ok ? Status::pass : Status::fail,
            ok ? "n = 2(d+1) for half-integer d" : "odd order requires half-integer d with n = 2(d+1)");
    } else {
        add(rep, "prop-d-odd-order", Status::not_applicable, "n even");
    }

    // (b) d <= n/2-1 and d parity, even n with integer d
    if (n_even && d_int) {
        add(rep, "prop-d-bound", d2 <= n - 2 ? Status::pass : Status::fail,
            "d <= n/2-1 requires d2 <= " + std::to_string(n - 2));
        bool parity = (d - (n / 2 - 1)) % 2 == 0;
        add(rep, "prop-d-parity", parity ? Status::pass : Status::fail,
            "d = " + std::to_string(d) + " vs n/2-1 = " + std::to_string(n / 2 - 1) + " (mod 2)");
    } else {
        add(rep, "prop-d-bound", Status::not_applicable, "integer-d regime only");
        add(rep, "prop-d-parity", Status::not_applicable, "integer-d regime only");
    }

    // (d) existence of k with n = k(2d+k)+1
    if (n_even && d_int) {
        bool found = false;
        long long found_k = 0;
        for (const auto& cand : k_candidates(n))
            if (cand.d2 == d2) {
                found = true;
                found_k = cand.k;
                break;
            }
        add(rep, "prop-nd-k", found ? Status::pass : Status::fail,
            found ? "n = k(2d+k)+1 with k = " + std::to_string(found_k)
                  : "no k with n = k(2d+k)+1 for this d");
    } else {
        add(rep, "prop-nd-k", Status::not_applicable, "integer-d regime only");
    }

    // (e) n-1 prime forces maximal d
    if (is_prime(n - 1)) {
        add(rep, "n1-prime-max-d", d2 == n - 2 ? Status::pass : Status::fail,
            "n-1 prime requires d = n/2-1");
    } else {
        add(rep, "n1-prime-max-d", Status::not_applicable, "n-1 not prime");
    }

    // (f) n == 2 (mod 4): d == n/2-1 (mod 4)
    if (n % 4 == 2 && d_int) {
        bool ok = ((d - (n / 2 - 1)) % 4 + 4) % 4 == 0;
        add(rep, "prop-d-equiv-mod4", ok ? Status::pass : Status::fail,
            "d = " + std::to_string(d) + " vs n/2-1 = " + std::to_string(n / 2 - 1) + " (mod 4)");
    } else {
        add(rep, "prop-d-equiv-mod4", Status::not_applicable, "requires n == 2 (mod 4), integer d");
    }

    // (g) even integer d forces n = 2(d+1)
    if (d_int && d % 2 == 0 && n_even) {
        add(rep, "thm-d-even", n == d2 + 2 ? Status::pass : Status::fail,
            "even d requires n = 2(d+1) = " + std::to_string(d2 + 2));
    } else {
        add(rep, "thm-d-even", Status::not_applicable, "requires even integer d");
    }

    // (h) odd integer d forces n == 0 (mod 4)
    if (d_int && d % 2 == 1 && n_even) {
        add(rep, "corol-d-odd-mod4", n % 4 == 0 ? Status::pass : Status::fail,
            "odd d requires n/2 even");
    } else {
        add(rep, "corol-d-odd-mod4", Status::not_applicable, "requires odd integer d");
    }

    return rep;
}

std::vector<KCandidate> k_candidates(long long n) {
    if (n % 2 != 0) throw Error(Errc::odd_order, "k_candidates requires even n");
    std::vector<KCandidate> out;
    for (long long k : divisors(n - 1)) {
        long long d2 = (n - 1) / k - k;
        if (d2 < 0) break;  // divisors ascend, d only decreases
        out.push_back({k, d2});
    }
    return out;
}

ConditionReport check_generator(const Generator& g) {
    ConditionReport rep{g.n, g.d2, {}, true};
    const long long n = g.n;
    const long long target = g.d2 * g.d2 + 4 * (n - 1);  // (2 sqrt(d^2+n-1))^2
    RowSums rs = row_sums(g);

    add(rep, "sum-same", rs.same2 * rs.same2 == target ? Status::pass : Status::fail,
        "|sum c_j| = sqrt(d^2+n-1); same2 = " + std::to_string(rs.same2));

    if (rs.alternating2) {
        long long a = *rs.alternating2;
        add(rep, "sum-alternating", a * a == target ? Status::pass : Status::fail,
            "|sum (-1)^j c_j| = sqrt(d^2+n-1); alternating2 = " + std::to_string(a));
    } else {
        add(rep, "sum-alternating", Status::not_applicable, "n odd");
    }

    const bool sym = g.is_symmetric();

    if (n % 4 == 2) {
        add(rep, "prop-sym", sym ? Status::pass : Status::fail,
            sym ? "c_j = c_{n-j} for all j" : "n == 2 (mod 4) requires a symmetric generator");
        // odd-index sum: (sum_{j=1}^{n/2} c_{2j-1})^2 = d^2+n-1
        long long b = 0;
        for (long long j = 1; j < n; j += 2) b += g.sign(static_cast<int>(j));
        add(rep, "prop-sum-odd", 4 * b * b == target ? Status::pass : Status::fail,
            "odd-index sum = " + std::to_string(b));
    } else {
        add(rep, "prop-sym", Status::not_applicable, "requires n == 2 (mod 4)");
        add(rep, "prop-sum-odd", Status::not_applicable, "requires n == 2 (mod 4)");
    }

    if (!sym) {
        bool ok = g.d2 % 4 == 2 && n % 4 == 0;
        add(rep, "nonsym-d-odd", ok ? Status::pass : Status::fail,
            "non-symmetric generators require odd d and 4 | n");
    } else {
        add(rep, "nonsym-d-odd", Status::not_applicable, "generator is symmetric");
    }

    return rep;
}

bool symmetric_divisibility(long long n, long long d2) {
    if (d2 % 4 != 2)
        throw Error(Errc::not_odd_integer, "symmetric_divisibility requires an odd integer d");
    long long d = d2 / 2;
    long long q = d * d + n - 1;
    long long s = isqrt_floor(q);
    if (s * s != q) return false;
    return (d * d - 1) % (2 * s) == 0;
}

}  // namespace chm
