#pragma once

#include <map>
#include <utility>
#include <vector>

#include "chm/error.hpp"

namespace chm {

using int128 = __int128;

struct Factorization {
    long long value = 1;
    std::vector<std::pair<long long, int>> factors;  // (prime, exponent), primes ascending

    int r() const { return static_cast<int>(factors.size()); }
};

/// Trial-division factorization; values in scope stay well below 2^40.
Factorization factorize(long long v);

int mobius(long long v);

std::vector<long long> divisors(long long v);

/// Product of the first r primes. 128-bit: p_16# already exceeds 2^64.
int128 primorial(int r);

/// Partition of {1..n-1} keyed by gcd(j, n).
std::map<long long, std::vector<long long>> gcd_classes(long long n);

long long isqrt_floor(long long v);

std::string int128_to_string(int128 v);

}  // namespace chm
