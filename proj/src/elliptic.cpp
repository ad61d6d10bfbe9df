#include "ssg/elliptic.hpp"

#include <algorithm>
#include <map>

#include <boost/rational.hpp>

#include "ssg/mobius.hpp"

namespace ssg {

Fp2 j_invariant(const Fp2& lambda) {
    const Field& f = lambda.field();
    if (lambda.is_zero() || lambda.is_one()) throw DomainError("Legendre parameter must avoid {0, 1}");
    Fp2 s = lambda * lambda - lambda + f.one();
    Fp2 den = lambda * lambda * (lambda - f.one()) * (lambda - f.one());
    return f.from_int(256) * s * s * s / den;
}

Fp2 j_invariant_of_roots(const std::array<Fp2, 3>& e) {
    Fp2 d = e[1] - e[0];
    if (d.is_zero()) throw DomainError("repeated 2-torsion root");
    return j_invariant((e[2] - e[0]) / d);
}

int aut_order_of_j(const Fp2& j) {
    if (j.is_zero()) return 6;
    if (j == j.field().from_int(1728)) return 4;
    return 2;
}

Fp2 canonical_lambda(const Fp2& l) {
    const Fp2 one = l.field().one();
    if (l.is_zero() || l.is_one()) throw DomainError("Legendre parameter must avoid {0, 1}");
    std::array<Fp2, 6> orbit{l, one - l, l.inv(), (one - l).inv(), l / (l - one), (l - one) / l};
    return *std::min_element(orbit.begin(), orbit.end());
}

EllipticCurve::EllipticCurve(const Fp2& lambda) : lambda_(lambda), j_(j_invariant(lambda)) {}

int EllipticCurve::aut_order() const { return aut_order_of_j(j_); }

std::array<Fp2, 3> EllipticCurve::two_torsion() const { return {field().zero(), field().one(), lambda_}; }

Poly legendre_polynomial(const PrimeModulus& pm) {
    const Field& f = Field::of(pm);
    const std::uint64_t p = pm.value(), n = (p - 1) / 2;
    std::vector<Fp2> c;
    for (std::uint64_t l = 0; l <= n; ++l) {
        std::uint64_t b = binomial_mod(n, l, p);
        c.push_back(f.make(b * b % p, 0));
    }
    return Poly(f, std::move(c));
}

bool is_supersingular(const Fp2& lambda) {
    if (lambda.is_zero() || lambda.is_one()) throw DomainError("Legendre parameter must avoid {0, 1}");
    return legendre_polynomial(PrimeModulus(lambda.field().p()))(lambda).is_zero();
}

bool is_supersingular(const EllipticCurve& e) { return is_supersingular(e.lambda()); }

std::vector<Fp2> supersingular_lambdas(const PrimeModulus& p) {
    auto roots = poly_roots_in_fp2(legendre_polynomial(p));
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const auto& r : roots)
        if (r.is_zero() || r.is_one()) throw DomainError("Legendre polynomial vanishes at 0 or 1");
    return roots;
}

std::vector<SupersingularClass> supersingular_classes(const PrimeModulus& p) {
    std::map<Fp2, SupersingularClass> by_j;
    for (const auto& lam : supersingular_lambdas(p)) {
        Fp2 j = j_invariant(lam);
        auto& cls = by_j[j];
        cls.j = j;
        cls.aut_order = aut_order_of_j(j);
        cls.lambdas.push_back(lam);
    }
    std::vector<SupersingularClass> out;
    for (auto& [j, cls] : by_j) out.push_back(std::move(cls));
    return out;
}

ClassNumbers class_numbers(const PrimeModulus& pm) {
    using Q = boost::rational<std::int64_t>;
    const auto p = static_cast<std::int64_t>(pm.value());
    const std::int64_t e1 = 1 - legendre_symbol(-1, pm.value());
    const std::int64_t e3 = 1 - legendre_symbol(-3, pm.value());
    Q h = Q(p - 1, 12) + Q(e3, 3) + Q(e1, 4);
    Q h2 = Q(e1, 2), h3 = Q(e3, 2);
    if (h.denominator() != 1 || h2.denominator() != 1 || h3.denominator() != 1)
        throw DomainError("class number formula is not integral at p = " + std::to_string(p));
    ClassNumbers c;
    c.h = h.numerator();
    c.h2 = h2.numerator();
    c.h3 = h3.numerator();
    c.h1 = c.h - c.h2 - c.h3;
    return c;
}

namespace {

std::array<P1Point, 4> with_infinity(const std::array<Fp2, 3>& r) {
    return {P1Point::finite(r[0]), P1Point::finite(r[1]), P1Point::finite(r[2]), P1Point::at_infinity(r[0].field())};
}

}  // namespace

std::vector<Perm3> two_torsion_isomorphisms(const std::array<Fp2, 3>& from, const std::array<Fp2, 3>& to) {
    auto src = with_infinity(from), dst = with_infinity(to);
    std::vector<Perm3> out;
    for (const auto& m : maps_between(src, dst)) {
        if (!m(src[3]).infinity) continue;
        Perm3 perm{};
        for (std::size_t i = 0; i < 3; ++i)
            perm[i] = static_cast<int>(std::find(dst.begin(), dst.end(), m(src[i])) - dst.begin());
        out.push_back(perm);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm3> two_torsion_symmetries(const std::array<Fp2, 3>& roots) {
    return two_torsion_isomorphisms(roots, roots);
}

std::vector<Perm3> two_torsion_symmetries(const EllipticCurve& e) { return two_torsion_symmetries(e.two_torsion()); }

Fp2 two_isogenous_j(const std::array<Fp2, 3>& roots, int k) {
    const Fp2& base = roots[static_cast<std::size_t>(k)];
    Fp2 di = roots[static_cast<std::size_t>((k + 1) % 3)] - base;
    Fp2 dj = roots[static_cast<std::size_t>((k + 2) % 3)] - base;
    // y^2 = x(x^2 + a x + b) has 2-isogenous Y^2 = X(X^2 - 2a X + a^2 - 4b).
    Fp2 a = -(di + dj), b = di * dj;
    Fp2 A = -(a * 2), B = a * a - b * 4;
    Fp2 num = A * A - B * 3;
    return num * num * num * 256 / (B * B * (A * A - B * 4));
}

}  // namespace ssg
