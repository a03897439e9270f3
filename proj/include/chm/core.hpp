#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chm/error.hpp"

namespace chm {

/// Packed ±1 sequence (+1 stored as bit 0, -1 as bit 1).
/// Lexicographic order treats +1 < -1.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::size_t count) : count_(count), words_((count + 63) / 64, 0) {}

    static SignVector from_ints(const std::vector<int>& values);

    std::size_t size() const { return count_; }

    int get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1 ? -1 : +1;
    }

    void set(std::size_t i, int value) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value < 0)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    std::vector<int> to_ints() const;

    bool operator==(const SignVector& other) const = default;
    std::strong_ordering operator<=>(const SignVector& other) const;

private:
    std::size_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

/// First row of a circulant matrix: diagonal d (kept exact as d2 = 2d)
/// and n-1 off-diagonal signs c_1..c_{n-1}.
struct Generator {
    int n = 0;
    long long d2 = 0;
    SignVector signs;  // position j-1 holds c_j

    int sign(int j) const { return signs.get(static_cast<std::size_t>(j) - 1); }

    bool is_symmetric() const;
    Generator reversed() const;  // c_j -> c_{n-j}

    bool operator==(const Generator& other) const = default;
    std::strong_ordering operator<=>(const Generator& other) const;
};

Generator make_generator(int n, long long d2, const std::vector<int>& signs);
Generator make_generator(int n, long long d2, SignVector signs);

/// Periodic autocorrelation, scaled by 4 so every entry is an exact integer
/// even for half-integer d: values4[m] = 4 * sum_k c_k c_{(k+m) mod n}.
struct AutocorrelationProfile {
    int n = 0;
    std::vector<long long> values4;

    /// x2-scaled value, exact whenever 2*sum is an integer.
    long long values2(int m) const;
};

AutocorrelationProfile autocorrelation(const Generator& g);

/// True iff every off-peak shift of the periodic autocorrelation vanishes,
/// i.e. C C^T = (d^2 + n - 1) I.
bool is_orthogonal(const Generator& g);

struct RowSums {
    long long same2 = 0;                    // 2 * sum_j c_j
    std::optional<long long> alternating2;  // 2 * sum_j (-1)^j c_j, n even only
};

RowSums row_sums(const Generator& g);

/// Floating-point cross-check: all DFT eigenvalue moduli satisfy
/// | |lambda_k|^2 - (d^2 + n - 1) | <= tol.
bool eigenvalue_moduli(const Generator& g, double tol);

constexpr double kDefaultEigenTol = 1e-9;

/// Text format: "n d2 s", s a string of '+'/'-' of length n-1.
Generator parse_generator(const std::string& line);
std::string format_generator(const Generator& g);

}  // namespace chm
