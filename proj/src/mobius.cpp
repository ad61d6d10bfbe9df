#include "ssg/mobius.hpp"

#include <algorithm>
#include <sstream>

namespace ssg {

MobiusMap::MobiusMap(const Fp2& a, const Fp2& b, const Fp2& c, const Fp2& d) : m_{a, b, c, d} {
    if (determinant().is_zero()) throw DomainError("singular Mobius matrix");
    normalize();
}

MobiusMap MobiusMap::identity(const Field& f) { return MobiusMap(f.one(), f.zero(), f.zero(), f.one()); }

void MobiusMap::normalize() {
    for (const auto& e : m_) {
        if (e.is_zero()) continue;
        Fp2 s = e.inv();
        for (auto& x : m_) x *= s;
        return;
    }
}

namespace {

// Homogeneous coordinates (x : z) of a P1 point.
std::array<Fp2, 2> homog(const P1Point& p) {
    const Field& f = p.x.field();
    if (p.infinity) return {f.one(), f.zero()};
    return {p.x, f.one()};
}

// Columns alpha*v1, beta*v2 with alpha*v1 + beta*v2 = v3: sends inf -> p1, 0 -> p2, 1 -> p3.
std::array<Fp2, 4> standard_frame(const P1Point& p1, const P1Point& p2, const P1Point& p3) {
    auto v1 = homog(p1), v2 = homog(p2), v3 = homog(p3);
    Fp2 det = v1[0] * v2[1] - v2[0] * v1[1];
    if (det.is_zero()) throw DomainError("frame points not distinct");
    Fp2 alpha = (v3[0] * v2[1] - v2[0] * v3[1]) / det;
    Fp2 beta = (v1[0] * v3[1] - v3[0] * v1[1]) / det;
    if (alpha.is_zero() || beta.is_zero()) throw DomainError("frame points not distinct");
    return {alpha * v1[0], beta * v2[0], alpha * v1[1], beta * v2[1]};
}

}  // namespace

MobiusMap MobiusMap::from_three_points(std::span<const P1Point, 3> src, std::span<const P1Point, 3> dst) {
    auto s = standard_frame(src[0], src[1], src[2]);
    auto d = standard_frame(dst[0], dst[1], dst[2]);
    MobiusMap ms(s[0], s[1], s[2], s[3]);
    MobiusMap md(d[0], d[1], d[2], d[3]);
    return md.compose(ms.inverse());
}

P1Point MobiusMap::operator()(const P1Point& p) const {
    auto v = homog(p);
    Fp2 x = m_[0] * v[0] + m_[1] * v[1];
    Fp2 z = m_[2] * v[0] + m_[3] * v[1];
    if (z.is_zero()) return P1Point::at_infinity(x.field());
    return P1Point::finite(x / z);
}

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
    return MobiusMap(m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
                     m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]);
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(m_[3], -m_[1], -m_[2], m_[0]); }

bool MobiusMap::is_identity() const { return m_[1].is_zero() && m_[2].is_zero() && m_[0] == m_[3]; }

int MobiusMap::order(int max_order) const {
    MobiusMap acc = *this;
    for (int k = 1; k <= max_order; ++k) {
        if (acc.is_identity()) return k;
        acc = acc.compose(*this);
    }
    throw DomainError("Mobius map order exceeds " + std::to_string(max_order));
}

std::string MobiusMap::to_string() const {
    std::ostringstream os;
    os << "(" << m_[0].to_string() << "*x+" << m_[1].to_string() << ")/(" << m_[2].to_string() << "*x+"
       << m_[3].to_string() << ")";
    return os.str();
}

Poly transform_sextic(const Poly& f, const MobiusMap& m) {
    const Field& fld = f.field();
    if (f.degree() > 6) throw DomainError("transform_sextic expects degree <= 6");
    Poly num(fld, {m.b(), m.a()});
    Poly den(fld, {m.d(), m.c()});
    Poly out(fld);
    for (int i = 0; i <= 6; ++i) {
        Fp2 ci = f.coeff(static_cast<std::size_t>(i));
        if (ci.is_zero()) continue;
        out += num.pow(static_cast<std::uint64_t>(i)) * den.pow(static_cast<std::uint64_t>(6 - i)) * ci;
    }
    return out;
}

std::optional<std::vector<int>> induced_permutation(const MobiusMap& m, std::span<const P1Point> points) {
    std::vector<int> perm(points.size());
    std::vector<bool> hit(points.size(), false);
    for (std::size_t i = 0; i < points.size(); ++i) {
        P1Point img = m(points[i]);
        auto it = std::find(points.begin(), points.end(), img);
        if (it == points.end()) return std::nullopt;
        auto k = static_cast<std::size_t>(it - points.begin());
        if (hit[k]) return std::nullopt;
        hit[k] = true;
        perm[i] = static_cast<int>(k);
    }
    return perm;
}

std::vector<MobiusMap> maps_between(std::span<const P1Point> from, std::span<const P1Point> to) {
    std::vector<MobiusMap> out;
    if (from.size() != to.size() || from.size() < 3) return out;
    std::array<P1Point, 3> src{from[0], from[1], from[2]};
    const std::size_t n = to.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                std::array<P1Point, 3> dst{to[i], to[j], to[k]};
                MobiusMap m = MobiusMap::from_three_points(src, dst);
                bool ok = true;
                for (const auto& p : from) {
                    if (std::find(to.begin(), to.end(), m(p)) == to.end()) {
                        ok = false;
                        break;
                    }
                }
                if (ok) out.push_back(m);
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ssg
