#pragma once

#include <vector>

#include "chm/core.hpp"

namespace chm {

enum class Family { g1, g2, g4a, g4b, unclassified };

const char* to_string(Family f);
Family family_from_string(const std::string& name);

/// The maximal-d generator families (d2 = n-2).
/// g2 requires even n; g4a/g4b require 4 | n.
Generator family_generator(Family f, int n);

/// Complete solution set at d = n/2 - 1:
/// odd n -> {g1}; n == 2 (mod 4) -> {g1, g2}; n == 0 (mod 4) -> {g1, g2, g4a, g4b}.
std::vector<Generator> enumerate_max_d(int n);

/// The four admissible block-circulant base blocks.
enum class BaseBlock { minus_one, c2, c4a, c4b };

/// Period-m extension of the base block's off-diagonal pattern, -1 at
/// multiples of m; produces the order m*copies generator at maximal d.
Generator block_compose(BaseBlock b, int copies);

/// Matches g against the four families at its (n, d2); unclassified otherwise.
Family classify(const Generator& g);

}  // namespace chm
