#pragma once

#include <string>
#include <vector>

#include "chm/core.hpp"

namespace chm {

enum class Status { pass, fail, not_applicable };

const char* to_string(Status s);

struct Verdict {
    std::string id;
    Status status = Status::not_applicable;
    std::string detail;
};

struct ConditionReport {
    long long n = 0;
    long long d2 = 0;
    std::vector<Verdict> verdicts;
    bool admissible = true;  // no verdict failed

    const Verdict* find(const std::string& id) const;
};

/// Necessary conditions on an (n, d) pair, with applicability guards.
/// Condition ids are stable strings used in reports and golden files.
ConditionReport check_pair(long long n, long long d2);

struct KCandidate {
    long long k = 0;
    long long d2 = 0;  // implied by n = k(2d+k)+1
};

/// All k >= 1 with k | n-1 and d = ((n-1)/k - k)/2 >= 0; n must be even.
std::vector<KCandidate> k_candidates(long long n);

/// Necessary conditions evaluated on a concrete generator.
ConditionReport check_generator(const Generator& g);

/// For odd integer d: d^2+n-1 is a perfect square and 2*sqrt(d^2+n-1) | d^2-1.
bool symmetric_divisibility(long long n, long long d2);

}  // namespace chm
