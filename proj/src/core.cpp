#include "chm/core.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace chm {

SignVector SignVector::from_ints(const std::vector<int>& values) {
    SignVector s(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 1 && values[i] != -1)
            throw Error(Errc::bad_sign_value,
                        "sign at position " + std::to_string(i + 1) + " is not +1 or -1");
        s.set(i, values[i]);
    }
    return s;
}

std::vector<int> SignVector::to_ints() const {
    std::vector<int> out(count_);
    for (std::size_t i = 0; i < count_; ++i) out[i] = get(i);
    return out;
}

std::strong_ordering SignVector::operator<=>(const SignVector& other) const {
    if (auto c = count_ <=> other.count_; c != 0) return c;
    for (std::size_t i = 0; i < count_; ++i) {
        // bit 0 (+1) sorts before bit 1 (-1)
        int a = get(i) < 0, b = other.get(i) < 0;
        if (auto c = a <=> b; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

bool Generator::is_symmetric() const {
    for (int j = 1; j < n - j; ++j)
        if (sign(j) != sign(n - j)) return false;
    return true;
}

Generator Generator::reversed() const {
    Generator r = *this;
    for (int j = 1; j < n; ++j) r.signs.set(static_cast<std::size_t>(j) - 1, sign(n - j));
    return r;
}

std::strong_ordering Generator::operator<=>(const Generator& other) const {
    if (auto c = n <=> other.n; c != 0) return c;
    if (auto c = d2 <=> other.d2; c != 0) return c;
    return signs <=> other.signs;
}

Generator make_generator(int n, long long d2, SignVector signs) {
    if (n < 2) throw Error(Errc::order_too_small, "order n must be at least 2, got " + std::to_string(n));
    if (d2 < 0) throw Error(Errc::negative_diagonal, "d2 must be non-negative, got " + std::to_string(d2));
    if (signs.size() != static_cast<std::size_t>(n) - 1)
        throw Error(Errc::bad_sign_length, "expected " + std::to_string(n - 1) + " signs, got " +
                                               std::to_string(signs.size()));
    return Generator{n, d2, std::move(signs)};
}

Generator make_generator(int n, long long d2, const std::vector<int>& signs) {
    return make_generator(n, d2, SignVector::from_ints(signs));
}

AutocorrelationProfile autocorrelation(const Generator& g) {
    const int n = g.n;
    AutocorrelationProfile p{n, std::vector<long long>(n, 0)};
    p.values4[0] = g.d2 * g.d2 + 4LL * (n - 1);
    for (int m = 1; m < n; ++m) {
        long long v = 0;
        for (int k = 0; k < n; ++k) {
            int k2 = (k + m) % n;
            if (k == 0)
                v += 2 * g.d2 * g.sign(k2);
            else if (k2 == 0)
                v += 2 * g.d2 * g.sign(k);
            else
                v += 4LL * g.sign(k) * g.sign(k2);
        }
        p.values4[m] = v;
    }
    return p;
}

long long AutocorrelationProfile::values2(int m) const {
    long long v = values4[m];
    if (v % 2 != 0)
        throw Error(Errc::out_of_range,
                    "autocorrelation at shift " + std::to_string(m) + " is half-integral in x2 scale");
    return v / 2;
}

bool is_orthogonal(const Generator& g) {
    const int n = g.n;
    // shift m and n-m agree, so checking m <= n/2 suffices
    for (int m = 1; 2 * m <= n; ++m) {
        long long v = 0;
        for (int k = 0; k < n; ++k) {
            int k2 = (k + m) % n;
            if (k == 0)
                v += 2 * g.d2 * g.sign(k2);
            else if (k2 == 0)
                v += 2 * g.d2 * g.sign(k);
            else
                v += 4LL * g.sign(k) * g.sign(k2);
        }
        if (v != 0) return false;
    }
    return true;
}

RowSums row_sums(const Generator& g) {
    RowSums r;
    long long same = g.d2, alt = g.d2;
    for (int j = 1; j < g.n; ++j) {
        same += 2 * g.sign(j);
        alt += (j % 2 == 0 ? 2 : -2) * g.sign(j);
    }
    r.same2 = same;
    if (g.n % 2 == 0) r.alternating2 = alt;
    return r;
}

bool eigenvalue_moduli(const Generator& g, double tol) {
    const int n = g.n;
    const double target = (static_cast<double>(g.d2) * g.d2) / 4.0 + (n - 1);
    for (int k = 0; k < n; ++k) {
        std::complex<double> lambda(g.d2 / 2.0, 0.0);
        for (int j = 1; j < n; ++j) {
            double phi = 2.0 * std::numbers::pi * j * k / n;
            lambda += std::complex<double>(std::cos(phi), std::sin(phi)) * static_cast<double>(g.sign(j));
        }
        if (std::abs(std::norm(lambda) - target) > tol) return false;
    }
    return true;
}

namespace {

long long parse_number(const std::string& line, std::size_t& pos, const char* what) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size() || !std::isdigit(static_cast<unsigned char>(line[pos])))
        throw ParseError(pos + 1, std::string("expected ") + what);
    long long v = 0;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
        v = v * 10 + (line[pos] - '0');
        if (v > (1LL << 40)) throw ParseError(pos + 1, std::string(what) + " out of range");
        ++pos;
    }
    return v;
}

}  // namespace

Generator parse_generator(const std::string& line) {
    std::size_t pos = 0;
    long long n = parse_number(line, pos, "order n");
    if (n < 2) throw ParseError(pos, "order n must be at least 2");
    long long d2 = parse_number(line, pos, "twice-diagonal d2");
    while (pos < line.size() && line[pos] == ' ') ++pos;
    SignVector signs(static_cast<std::size_t>(n) - 1);
    for (long long j = 0; j < n - 1; ++j, ++pos) {
        if (pos >= line.size()) throw ParseError(pos + 1, "sign string too short");
        char c = line[pos];
        if (c == '+')
            signs.set(static_cast<std::size_t>(j), +1);
        else if (c == '-')
            signs.set(static_cast<std::size_t>(j), -1);
        else
            throw ParseError(pos + 1, std::string("invalid sign character '") + c + "'");
    }
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos != line.size()) throw ParseError(pos + 1, "trailing characters after sign string");
    return make_generator(static_cast<int>(n), d2, std::move(signs));
}

std::string format_generator(const Generator& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.d2 << ' ';
    for (int j = 1; j < g.n; ++j) out << (g.sign(j) > 0 ? '+' : '-');
    return out.str();
}

}  // namespace chm
