#include "chm/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace chm {

Factorization factorize(long long v) {
    if (v < 1) throw Error(Errc::not_positive, "factorize requires v >= 1, got " + std::to_string(v));
    Factorization f;
    f.value = v;
    for (long long p : {2LL, 3LL, 5LL}) {
        int e = 0;
        while (v % p == 0) v /= p, ++e;
        if (e) f.factors.emplace_back(p, e);
    }
    // 2,3,5-wheel
    static constexpr int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    long long p = 7;
    int wi = 0;
    while (p * p <= v) {
        int e = 0;
        while (v % p == 0) v /= p, ++e;
        if (e) f.factors.emplace_back(p, e);
        p += wheel[wi];
        wi = (wi + 1) & 7;
    }
    if (v > 1) f.factors.emplace_back(v, 1);
    return f;
}

int mobius(long long v) {
    Factorization f = factorize(v);
    for (auto& [p, e] : f.factors)
        if (e > 1) return 0;
    return f.r() % 2 == 0 ? 1 : -1;
}

std::vector<long long> divisors(long long v) {
    Factorization f = factorize(v);
    std::vector<long long> divs{1};
    for (auto& [p, e] : f.factors) {
        std::size_t count = divs.size();
        long long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

int128 primorial(int r) {
    if (r < 1 || r > 20)
        throw Error(Errc::out_of_range, "primorial supports 1 <= r <= 20, got " + std::to_string(r));
    int128 product = 1;
    int count = 0;
    for (long long p = 2; count < r; ++p) {
        bool prime = p >= 2;
        for (long long q = 2; q * q <= p; ++q)
            if (p % q == 0) { prime = false; break; }
        if (prime) {
            product *= p;
            ++count;
        }
    }
    return product;
}

std::map<long long, std::vector<long long>> gcd_classes(long long n) {
    if (n < 2) throw Error(Errc::order_too_small, "gcd_classes requires n >= 2");
    std::map<long long, std::vector<long long>> classes;
    for (long long j = 1; j < n; ++j) classes[std::gcd(j, n)].push_back(j);
    return classes;
}

long long isqrt_floor(long long v) {
    if (v < 0) throw Error(Errc::out_of_range, "isqrt of negative value");
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace chm
