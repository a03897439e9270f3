#pragma once

// Test-only oracles, independent of the pruned search path.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "chm/core.hpp"

namespace chm::test {

// Unpruned scan over all 2^{n-1} sign vectors.
inline std::vector<Generator> brute_enumerate(int n, long long d2) {
    std::vector<Generator> out;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        SignVector s(static_cast<std::size_t>(n) - 1);
        for (int j = 0; j < n - 1; ++j) s.set(static_cast<std::size_t>(j), (mask >> j) & 1 ? -1 : +1);
        Generator g = make_generator(n, d2, std::move(s));
        if (is_orthogonal(g)) out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace chm::test
