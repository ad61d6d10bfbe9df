#pragma once

// Shared generators and brute-force oracles for the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "ssg/arith.hpp"
#include "ssg/genus2.hpp"
#include "ssg/mobius.hpp"

namespace ssg::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(0x5eed5eedULL);
    return engine;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

inline Fp2 random_element(const Field& f) { return f.element(uniform(0, f.size() - 1)); }

inline Fp2 random_nonzero(const Field& f) {
    for (;;) {
        Fp2 x = random_element(f);
        if (!x.is_zero()) return x;
    }
}

inline MobiusMap random_mobius(const Field& f) {
    for (;;) {
        Fp2 a = random_element(f), b = random_element(f), c = random_element(f), d = random_element(f);
        if (!(a * d - b * c).is_zero()) return MobiusMap(a, b, c, d);
    }
}

inline std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = lo; q <= hi; ++q)
        if (is_prime(q)) out.push_back(q);
    return out;
}

/// A genus-2 curve with six random distinct branch points in F_{p^2}.
inline Genus2Curve random_curve(const Field& f) {
    std::vector<Fp2> roots;
    while (roots.size() < 6) {
        Fp2 r = random_element(f);
        bool dup = false;
        for (const auto& q : roots) dup = dup || q == r;
        if (!dup) roots.push_back(r);
    }
    return Genus2Curve::from_poly(Poly::from_roots(f, roots) * random_nonzero(f));
}

/// Quadratic character on F_{p^2}.
inline int chi(const Fp2& x) {
    if (x.is_zero()) return 0;
    const std::uint64_t q = x.field().size();
    return x.pow((q - 1) / 2).is_one() ? 1 : -1;
}

/// #E(F_{p^2}) - (p^2 + 1) for y^2 = x(x-1)(x-l), by summing the character.
inline std::int64_t frobenius_trace(const Fp2& l) {
    const Field& f = l.field();
    std::int64_t s = 0;
    for (std::uint64_t i = 0; i < f.size(); ++i) {
        Fp2 x = f.element(i);
        s += chi(x * (x - f.one()) * (x - l));
    }
    return -s;
}

}  // namespace ssg::testing
