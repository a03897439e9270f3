#include "chm/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "chm/conditions.hpp"
#include "chm/numtheory.hpp"

namespace chm {

namespace {

struct Incidence {
    int shift;     // 1..n/2
    int other;     // paired variable index, 0 for a diagonal term
    long long w;   // 2 for sign pairs, d2 for diagonal terms
};

// Immutable per-search structure shared by all workers.
struct Problem {
    int n;
    long long d2;
    std::vector<std::vector<int>> groups;       // assignment units, in search order
    std::vector<std::vector<Incidence>> inc;    // per variable 1..n-1
    int shifts;                                 // n/2
    std::vector<long long> cap0;                // initial max remaining magnitude per shift
    std::vector<int> pend2_0, pendD_0;          // initial undetermined term counts
    long long root = 0;                         // |same2| target; root^2 = d2^2 + 4(n-1)
    bool feasible = true;

    Problem(int n_, long long d2_, bool symmetric) : n(n_), d2(d2_) {
        if (n < 2) throw Error(Errc::order_too_small, "search requires n >= 2");
        if (d2 < 0) throw Error(Errc::negative_diagonal, "search requires d2 >= 0");
        if (symmetric && n % 2 != 0)
            throw Error(Errc::odd_order, "symmetric enumeration requires even n");

        long long q = d2 * d2 + 4LL * (n - 1);
        root = isqrt_floor(q);
        if (root * root != q) {
            feasible = false;  // row-sum identity unsatisfiable
            return;
        }

        if (symmetric) {
            for (int j = 1; 2 * j <= n; ++j) {
                if (j < n - j)
                    groups.push_back({j, n - j});
                else
                    groups.push_back({j});
            }
        } else {
            for (int j = 1; j < n - j; ++j) {
                groups.push_back({j});
                groups.push_back({n - j});
            }
            if (n % 2 == 0) groups.push_back({n / 2});
        }

        shifts = n / 2;
        inc.resize(static_cast<std::size_t>(n));
        cap0.assign(static_cast<std::size_t>(shifts) + 1, 0);
        pend2_0.assign(static_cast<std::size_t>(shifts) + 1, 0);
        pendD_0.assign(static_cast<std::size_t>(shifts) + 1, 0);
        for (int m = 1; m <= shifts; ++m) {
            for (int k = 0; k < n; ++k) {
                int a = k, b = (k + m) % n;
                if (a == 0 || b == 0) {
                    if (d2 == 0) continue;  // zero-weight diagonal terms drop out
                    int var = a == 0 ? b : a;
                    inc[var].push_back({m, 0, d2});
                    cap0[m] += d2;
                    ++pendD_0[m];
                } else {
                    inc[a].push_back({m, b, 2});
                    inc[b].push_back({m, a, 2});
                    cap0[m] += 2;
                    ++pend2_0[m];
                }
            }
        }
    }
};

struct Shared {
    std::atomic<unsigned long long> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    std::optional<unsigned long long> budget;
    bool collect_all = true;
};

class Runner {
public:
    Runner(const Problem& p, Shared& shared) : p_(p), shared_(shared) {
        sgn_.assign(static_cast<std::size_t>(p.n), 0);
        sum_.assign(static_cast<std::size_t>(p.shifts) + 1, 0);
        cap_ = p.cap0;
        pend2_ = p.pend2_0;
        pendD_ = p.pendD_0;
        sum_same_ = p.d2;
        sum_alt_ = p.d2;
        rem_vars_ = p.n - 1;
    }

    std::vector<SignVector> solutions;
    unsigned long long local_nodes = 0;

    // Assign the prefix groups from the bits of `prefix`; on a prune, undo and
    // return false (the whole subtree is dead).
    bool enter_prefix(std::uint64_t prefix, std::size_t depth) {
        for (std::size_t i = 0; i < depth; ++i) {
            int s = (prefix >> i) & 1 ? -1 : +1;
            count_node();
            assign_group(i, s);
            if (!consistent()) {
                for (std::size_t j = i + 1; j-- > 0;)
                    undo_group(j, (prefix >> j) & 1 ? -1 : +1);
                return false;
            }
        }
        return true;
    }

    void leave_prefix(std::uint64_t prefix, std::size_t depth) {
        for (std::size_t j = depth; j-- > 0;) undo_group(j, (prefix >> j) & 1 ? -1 : +1);
    }

    void dfs(std::size_t depth) {
        if (shared_.stop.load(std::memory_order_relaxed)) return;
        if (depth == p_.groups.size()) {
            record();
            return;
        }
        for (int s : {+1, -1}) {
            count_node();
            assign_group(depth, s);
            if (consistent()) dfs(depth + 1);
            undo_group(depth, s);
            if (shared_.stop.load(std::memory_order_relaxed)) return;
        }
    }

private:
    void count_node() {
        if (++local_nodes % 4096 == 0) flush_nodes();
    }

    void flush_nodes() {
        unsigned long long total = shared_.nodes.fetch_add(4096) + 4096;
        if (shared_.budget && total > *shared_.budget) {
            shared_.budget_hit.store(true);
            shared_.stop.store(true);
        }
    }

    void assign_group(std::size_t gi, int s) {
        for (int j : p_.groups[gi]) assign_var(j, s);
    }

    void undo_group(std::size_t gi, int s) {
        for (std::size_t i = p_.groups[gi].size(); i-- > 0;) undo_var(p_.groups[gi][i], s);
    }

    void assign_var(int j, int s) {
        sgn_[j] = s;
        for (const Incidence& e : p_.inc[j]) {
            if (e.other == 0) {
                sum_[e.shift] += e.w * s;
                cap_[e.shift] -= e.w;
                --pendD_[e.shift];
            } else if (sgn_[e.other] != 0) {
                sum_[e.shift] += e.w * s * sgn_[e.other];
                cap_[e.shift] -= e.w;
                --pend2_[e.shift];
            }
        }
        sum_same_ += 2 * s;
        sum_alt_ += (j % 2 == 0 ? 2 : -2) * s;
        --rem_vars_;
    }

    void undo_var(int j, int s) {
        for (const Incidence& e : p_.inc[j]) {
            if (e.other == 0) {
                sum_[e.shift] -= e.w * s;
                cap_[e.shift] += e.w;
                ++pendD_[e.shift];
            } else if (e.other != j && sgn_[e.other] != 0) {
                sum_[e.shift] -= e.w * s * sgn_[e.other];
                cap_[e.shift] += e.w;
                ++pend2_[e.shift];
            }
        }
        sgn_[j] = 0;
        sum_same_ -= 2 * s;
        sum_alt_ -= (j % 2 == 0 ? 2 : -2) * s;
        ++rem_vars_;
    }

    static bool mod4_zero(long long v) { return ((v % 4) + 4) % 4 == 0; }

    // Can the remaining +-2 contributions drive `cur` to +-root?
    bool sum_reachable(long long cur) const {
        for (long long target : {p_.root, -p_.root}) {
            long long need = target - cur;
            if (std::llabs(need) <= 2 * rem_vars_ && mod4_zero(need + 2 * rem_vars_)) return true;
        }
        return false;
    }

    bool consistent() const {
        for (int m = 1; m <= p_.shifts; ++m) {
            long long v = sum_[m];
            if (std::llabs(v) > cap_[m]) return false;
            if (pendD_[m] == 0 && !mod4_zero(v + 2 * pend2_[m])) return false;
        }
        if (!sum_reachable(sum_same_)) return false;
        if (p_.n % 2 == 0 && !sum_reachable(sum_alt_)) return false;
        return true;
    }

    void record() {
        SignVector s(static_cast<std::size_t>(p_.n) - 1);
        for (int j = 1; j < p_.n; ++j) s.set(static_cast<std::size_t>(j) - 1, sgn_[j]);
        solutions.push_back(std::move(s));
        if (!shared_.collect_all) shared_.stop.store(true);
    }

    const Problem& p_;
    Shared& shared_;
    std::vector<int> sgn_;
    std::vector<long long> sum_, cap_;
    std::vector<int> pend2_, pendD_;
    long long sum_same_, sum_alt_;
    int rem_vars_;
};

SearchResult run_search(int n, long long d2, const SearchOptions& opts, bool symmetric) {
    Problem p(n, d2, symmetric);
    SearchResult result;
    if (!p.feasible) return result;

    Shared shared;
    shared.budget = opts.node_budget;
    shared.collect_all = opts.collect_all;

    int workers = std::max(1, opts.worker_count);
    std::size_t prefix_depth = 0;
    if (workers > 1) {
        while ((std::size_t{1} << prefix_depth) < static_cast<std::size_t>(4 * workers) &&
               prefix_depth + 4 < p.groups.size())
            ++prefix_depth;
    }
    const std::uint64_t prefix_count = std::uint64_t{1} << prefix_depth;

    std::vector<std::vector<SignVector>> slots(prefix_count);
    std::atomic<std::uint64_t> next{0};

    auto work = [&]() {
        Runner runner(p, shared);
        for (;;) {
            std::uint64_t prefix = next.fetch_add(1);
            if (prefix >= prefix_count || shared.stop.load(std::memory_order_relaxed)) break;
            runner.solutions.clear();
            if (runner.enter_prefix(prefix, prefix_depth)) {
                runner.dfs(prefix_depth);
                runner.leave_prefix(prefix, prefix_depth);
            }
            slots[prefix] = std::move(runner.solutions);
        }
        shared.nodes.fetch_add(runner.local_nodes % 4096);
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    result.nodes = shared.nodes.load();
    result.complete = !shared.budget_hit.load();

    std::vector<SignVector> all;
    for (auto& slot : slots)
        for (auto& s : slot) all.push_back(std::move(s));
    std::sort(all.begin(), all.end());
    for (auto& s : all) {
        Generator g = make_generator(n, d2, std::move(s));
        SolutionRecord rec{g, classify(g), Source::search, is_orthogonal(g)};
        result.solutions.push_back(std::move(rec));
    }
    if (opts.progress)
        std::fprintf(stderr, "search n=%d d2=%lld%s: %zu solutions, %llu nodes%s\n", n, d2,
                     symmetric ? " (symmetric)" : "", result.solutions.size(), result.nodes,
                     result.complete ? "" : " [budget exceeded]");
    return result;
}

}  // namespace

SearchResult dfs_enumerate(int n, long long d2, const SearchOptions& opts) {
    return run_search(n, d2, opts, false);
}

SearchResult symmetric_enumerate(int n, long long d2, const SearchOptions& opts) {
    return run_search(n, d2, opts, true);
}

ConjectureReport verify_conjecture(int n_max, const SearchOptions& opts) {
    if (n_max < 2) throw Error(Errc::order_too_small, "verify_conjecture requires n_max >= 2");
    ConjectureReport report;
    report.n_max = n_max;
    for (int n = 2; n <= n_max; ++n) {
        for (long long d2 = 0; d2 <= n - 2; ++d2) {
            if (!check_pair(n, d2).admissible) continue;
            PairOutcome outcome;
            outcome.n = n;
            outcome.d2 = d2;
            outcome.maximal = n == d2 + 2;
            if (outcome.maximal) {
                outcome.count = static_cast<long long>(enumerate_max_d(n).size());
            } else {
                SearchResult res = dfs_enumerate(n, d2, opts);
                outcome.count = static_cast<long long>(res.solutions.size());
                outcome.resolved = res.complete;
                outcome.nodes = res.nodes;
                if (!res.complete) report.all_resolved = false;
                if (res.complete && outcome.count != 0) report.holds = false;
            }
            report.pairs.push_back(outcome);
        }
    }
    return report;
}

std::vector<std::vector<int>> barker_enumerate(int len_max) {
    if (len_max < 2) throw Error(Errc::out_of_range, "barker_enumerate requires len_max >= 2");
    std::vector<std::vector<int>> out;
    for (int n = 2; n <= len_max; ++n) {
        std::vector<int> c(static_cast<std::size_t>(n), 1);
        const std::uint64_t combos = n > 2 ? std::uint64_t{1} << (n - 2) : 1;
        for (std::uint64_t bits = 0; bits < combos; ++bits) {
            for (int j = 2; j < n; ++j) c[static_cast<std::size_t>(j)] = (bits >> (j - 2)) & 1 ? -1 : 1;
            bool barker = true;
            for (int m = 1; m < n && barker; ++m) {
                long long acc = 0;
                for (int k = 0; k + m < n; ++k) acc += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(k + m)];
                if (std::llabs(acc) > 1) barker = false;
            }
            if (barker) out.push_back(c);
        }
    }
    return out;
}

}  // namespace chm
