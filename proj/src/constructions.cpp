#include "chm/constructions.hpp"

#include <array>
#include <cassert>

namespace chm {

const char* to_string(Family f) {
    switch (f) {
        case Family::g1: return "g1";
        case Family::g2: return "g2";
        case Family::g4a: return "g4a";
        case Family::g4b: return "g4b";
        case Family::unclassified: return "unclassified";
    }
    return "?";
}

Family family_from_string(const std::string& name) {
    if (name == "g1") return Family::g1;
    if (name == "g2") return Family::g2;
    if (name == "g4a") return Family::g4a;
    if (name == "g4b") return Family::g4b;
    throw Error(Errc::family_order_mismatch, "unknown family '" + name + "'");
}

namespace {

int family_sign(Family f, int j) {
    switch (f) {
        case Family::g1:
            return -1;
        case Family::g2:
            return j % 2 == 1 ? +1 : -1;
        case Family::g4a:
            // 1,1,-1,-1 repeating from j=1, ending -1 at j=n-1
            return j % 4 == 1 || j % 4 == 2 ? +1 : -1;
        case Family::g4b:
            // -1,1,1,-1 repeating from j=1
            return j % 4 == 2 || j % 4 == 3 ? +1 : -1;
        default:
            break;
    }
    assert(false);
    return 0;
}

}  // namespace

Generator family_generator(Family f, int n) {
    if (n < 2) throw Error(Errc::order_too_small, "family_generator requires n >= 2");
    if (f == Family::g2 && n % 2 != 0)
        throw Error(Errc::family_order_mismatch, "g2 requires even n");
    if ((f == Family::g4a || f == Family::g4b) && n % 4 != 0)
        throw Error(Errc::family_order_mismatch, "g4a/g4b require 4 | n");
    if (f == Family::unclassified)
        throw Error(Errc::family_order_mismatch, "unclassified is not a constructible family");
    SignVector signs(static_cast<std::size_t>(n) - 1);
    for (int j = 1; j < n; ++j) signs.set(static_cast<std::size_t>(j) - 1, family_sign(f, j));
    return make_generator(n, n - 2, std::move(signs));
}

std::vector<Generator> enumerate_max_d(int n) {
    if (n < 2) throw Error(Errc::order_too_small, "enumerate_max_d requires n >= 2");
    std::vector<Generator> out;
    out.push_back(family_generator(Family::g1, n));
    if (n % 2 == 0) out.push_back(family_generator(Family::g2, n));
    if (n % 4 == 0) {
        out.push_back(family_generator(Family::g4a, n));
        out.push_back(family_generator(Family::g4b, n));
    }
    return out;
}

Generator block_compose(BaseBlock b, int copies) {
    if (copies < 1) throw Error(Errc::bad_block, "copies must be positive");
    int m;
    Family f;
    switch (b) {
        case BaseBlock::minus_one: m = 1; f = Family::g1; break;
        case BaseBlock::c2: m = 2; f = Family::g2; break;
        case BaseBlock::c4a: m = 4; f = Family::g4a; break;
        case BaseBlock::c4b: m = 4; f = Family::g4b; break;
        default: throw Error(Errc::bad_block, "unknown base block");
    }
    int n = m * copies;
    if (n < 2) throw Error(Errc::bad_block, "composed order must be at least 2");
    SignVector signs(static_cast<std::size_t>(n) - 1);
    for (int j = 1; j < n; ++j) {
        int s = j % m == 0 ? -1 : family_sign(f, j % m);
        signs.set(static_cast<std::size_t>(j) - 1, s);
    }
    return make_generator(n, n - 2, std::move(signs));
}

Family classify(const Generator& g) {
    if (g.d2 != g.n - 2) return Family::unclassified;
    for (Family f : {Family::g1, Family::g2, Family::g4a, Family::g4b}) {
        if (f == Family::g2 && g.n % 2 != 0) continue;
        if ((f == Family::g4a || f == Family::g4b) && g.n % 4 != 0) continue;
        if (family_generator(f, g.n) == g) return f;
    }
    return Family::unclassified;
}

}  // namespace chm
