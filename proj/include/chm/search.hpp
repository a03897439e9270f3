#pragma once

#include <optional>
#include <vector>

#include "chm/constructions.hpp"
#include "chm/core.hpp"

namespace chm {

struct SearchOptions {
    bool symmetric_only = false;
    int worker_count = 1;
    std::optional<unsigned long long> node_budget;
    bool collect_all = true;
    bool progress = false;  // summary line per search to stderr
};

enum class Source { constructed, search };

struct SolutionRecord {
    Generator generator;
    Family family = Family::unclassified;
    Source source = Source::search;
    bool verified = false;
};

struct SearchResult {
    std::vector<SolutionRecord> solutions;  // sorted lexicographically, +1 < -1
    unsigned long long nodes = 0;
    bool complete = true;  // false iff the node budget was exhausted
};

/// Complete pruned enumeration of orthogonal sign vectors for (n, d2).
SearchResult dfs_enumerate(int n, long long d2, const SearchOptions& opts = {});

/// Same restricted to symmetric generators (c_j = c_{n-j}); n must be even.
SearchResult symmetric_enumerate(int n, long long d2, const SearchOptions& opts = {});

struct PairOutcome {
    int n = 0;
    long long d2 = 0;
    bool maximal = false;  // n == 2(d+1)
    long long count = 0;
    bool resolved = true;
    unsigned long long nodes = 0;
};

struct ConjectureReport {
    int n_max = 0;
    std::vector<PairOutcome> pairs;
    bool holds = true;         // every resolved non-maximal pair is empty
    bool all_resolved = true;  // no pair hit the node budget
};

ConjectureReport verify_conjecture(int n_max, const SearchOptions& opts = {});

/// All +-1 sequences of length 2..len_max with c_0 = c_1 = +1 and all
/// aperiodic autocorrelation magnitudes <= 1.
std::vector<std::vector<int>> barker_enumerate(int len_max);

}  // namespace chm
