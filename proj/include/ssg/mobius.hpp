#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssg/arith.hpp"

namespace ssg {

/// A point of P^1(F_{p^2}): either a finite coordinate or infinity.
struct P1Point {
    Fp2 x;  // unused (zero) at infinity
    bool infinity = false;

    static P1Point finite(const Fp2& v) { return {v, false}; }
    static P1Point at_infinity(const Field& f) { return {f.zero(), true}; }

    friend bool operator==(const P1Point& a, const P1Point& b) {
        return a.infinity == b.infinity && (a.infinity || a.x == b.x);
    }
    /// Finite points by coordinate, infinity last.
    friend std::strong_ordering operator<=>(const P1Point& a, const P1Point& b) {
        if (a.infinity != b.infinity) return a.infinity ? std::strong_ordering::greater : std::strong_ordering::less;
        if (a.infinity) return std::strong_ordering::equal;
        return a.x <=> b.x;
    }
    std::string to_string() const { return infinity ? "inf" : x.to_string(); }
};

/// x -> (a x + b) / (c x + d) in PGL_2(F_{p^2}), scaled so the first nonzero
/// entry in row-major order is 1.
class MobiusMap {
public:
    MobiusMap(const Fp2& a, const Fp2& b, const Fp2& c, const Fp2& d);
    static MobiusMap identity(const Field& f);
    /// The unique map sending src[i] to dst[i] for three distinct points each.
    static MobiusMap from_three_points(std::span<const P1Point, 3> src, std::span<const P1Point, 3> dst);

    const Fp2& a() const { return m_[0]; }
    const Fp2& b() const { return m_[1]; }
    const Fp2& c() const { return m_[2]; }
    const Fp2& d() const { return m_[3]; }
    Fp2 determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

    P1Point operator()(const P1Point& p) const;
    /// (*this)(other(x))
    MobiusMap compose(const MobiusMap& other) const;
    MobiusMap inverse() const;
    bool is_identity() const;
    /// Order in PGL_2; throws if larger than max_order.
    int order(int max_order = 64) const;

    friend bool operator==(const MobiusMap&, const MobiusMap&) = default;
    friend auto operator<=>(const MobiusMap& x, const MobiusMap& y) { return x.m_ <=> y.m_; }
    std::string to_string() const;

private:
    void normalize();
    std::array<Fp2, 4> m_;
};

/// y^2 = f(x) rewritten in the coordinate x' with x = M(x'): the result is
/// (c x' + d)^6 f(M(x')), read as a binary sextic. Branch points transform by M^{-1}.
Poly transform_sextic(const Poly& f, const MobiusMap& m);

/// Position of each M(points[i]) inside points, or nullopt if M does not
/// permute the set.
std::optional<std::vector<int>> induced_permutation(const MobiusMap& m, std::span<const P1Point> points);

/// Every Mobius map carrying the set `from` onto the set `to` (same size, at
/// least 3 points). Tries all images of the first three points of `from`.
std::vector<MobiusMap> maps_between(std::span<const P1Point> from, std::span<const P1Point> to);

}  // namespace ssg
