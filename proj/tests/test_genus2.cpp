#include <gtest/gtest.h>

#include <set>

#include "ssg/elliptic.hpp"
#include "ssg/genus2.hpp"
#include "support.hpp"

using namespace ssg;
using namespace ssg::testing;

namespace {

// (x^2 - 1)(x^2 - u)(x^2 - v)
Genus2Curve even_sextic(const Fp2& u, const Fp2& v) {
    const Field& f = u.field();
    return Genus2Curve::from_poly(Poly::from_ints(f, {-1, 0, 1}) * Poly(f, {-u, f.zero(), f.one()}) *
                                  Poly(f, {-v, f.zero(), f.one()}));
}

// All of PGL_2(F_{p^2}) with entries normalized so the first nonzero one is 1.
std::vector<MobiusMap> brute_force_automorphisms(const Genus2Curve& c) {
    const Field& f = c.field();
    std::vector<MobiusMap> out;
    auto consider = [&](const Fp2& a, const Fp2& b, const Fp2& cc, const Fp2& d) {
        if ((a * d - b * cc).is_zero()) return;
        MobiusMap m(a, b, cc, d);
        for (const auto& q : c.branch())
            if (std::find(c.branch().begin(), c.branch().end(), m(q)) == c.branch().end()) return;
        out.push_back(m);
    };
    for (std::uint64_t i = 0; i < f.size(); ++i)
        for (std::uint64_t j = 0; j < f.size(); ++j)
            for (std::uint64_t k = 0; k < f.size(); ++k) consider(f.one(), f.element(i), f.element(j), f.element(k));
    for (std::uint64_t j = 1; j < f.size(); ++j)
        for (std::uint64_t k = 0; k < f.size(); ++k) consider(f.zero(), f.one(), f.element(j), f.element(k));
    std::sort(out.begin(), out.end());
    return out;
}

// For an involution m with matrix M, M^2 = s I. The lift (x, y) -> (m(x), k y / (cx + d)^3)
// with k^2 = kappa squares to y -> (kappa / s^3) y, where f(m x)(cx + d)^6 = kappa f(x).
Fp2 lift_square(const Genus2Curve& c, const MobiusMap& m) {
    Poly moved = transform_sextic(c.f(), m);
    Fp2 kappa = moved.leading() / c.f().leading();
    EXPECT_EQ(moved, c.f() * kappa);
    Fp2 s = m.a() * m.a() + m.b() * m.c();
    return kappa / s.pow(3);
}

}  // namespace

TEST(Genus2Curve, RejectsBadModels) {
    const Field& f = Field::of(13);
    EXPECT_THROW(Genus2Curve::from_poly(Poly::from_ints(f, {1, 0, 0, 0, 1})), DomainError);
    EXPECT_THROW(Genus2Curve::from_poly(Poly::from_ints(f, {0, 0, 1, 0, 0, 1})), DomainError);
    EXPECT_THROW(Genus2Curve::parse(f, "1,2,x"), std::invalid_argument);
    Genus2Curve c = Genus2Curve::parse(f, "0,-1,0,0,0,1");
    EXPECT_TRUE(c.branch_at_infinity());
    EXPECT_EQ(Genus2Curve::parse(f, c.serialize()).f(), c.f());
    EXPECT_FALSE(c.sextic_model().branch_at_infinity());
    EXPECT_EQ(c.sextic_model().f().degree(), 6);
}

TEST(WorkedExamples, Characteristic13) {
    const Field& f = Field::of(13);
    const Fp2 s2 = f.gen();                      // t^2 = 2
    const Fp2 s6 = *sqrt_in_fp2(f.from_int(6));  // = 4t
    EXPECT_EQ(s6, f.make(0, 4));
    EXPECT_EQ(h_polynomial(PrimeModulus(13)), Poly::from_ints(f, {7, 12, 12, 7}));
    EXPECT_EQ(g_polynomial(PrimeModulus(13)), Poly::from_ints(f, {2, 3, 4, 3, 2}));
    const Fp2 alpha = f.from_int(-4) + s2, beta = f.from_int(-5) - s6 * 2;
    EXPECT_TRUE(g_polynomial(PrimeModulus(13))(alpha).is_zero());
    EXPECT_TRUE(h_polynomial(PrimeModulus(13))(-f.one()).is_zero());
    EXPECT_TRUE(h_polynomial(PrimeModulus(13))(beta).is_zero());

    Genus2Curve c1 = Genus2Curve::from_poly(s3_family_poly(alpha));
    Genus2Curve c2 = Genus2Curve::from_poly(v4_family_poly(beta));
    Genus2Curve c3 = Genus2Curve::from_poly(s4_poly(f));
    EXPECT_EQ(ra_type(c1), RAType::S3);
    EXPECT_EQ(ra_type(c2), RAType::V4);
    EXPECT_EQ(ra_type(c3), RAType::S4);
    for (const auto* c : {&c1, &c2, &c3}) EXPECT_TRUE(is_superspecial(*c));
    EXPECT_FALSE(is_isomorphic(c1, c2));
    EXPECT_FALSE(is_isomorphic(c2, c3));

    auto sq = [&](std::int64_t a, std::int64_t b) { return f.from_int(a) + s2 * b; };
    Genus2Curve ca = even_sextic(sq(4, -7), sq(6, -6));
    Genus2Curve cb = even_sextic(sq(-3, 2), sq(4, 1));
    Genus2Curve cc = even_sextic(sq(-3, 4), sq(-1, -3));
    Genus2Curve cd = even_sextic(f.from_int(3), sq(-3, 4));
    Genus2Curve ce = even_sextic(sq(6, 6), sq(2, -2));
    EXPECT_TRUE(is_isomorphic(ca, c2));
    EXPECT_TRUE(is_isomorphic(ce, c2));
    EXPECT_TRUE(is_isomorphic(cc, c1));
    EXPECT_TRUE(is_isomorphic(cd, c1));
    EXPECT_TRUE(is_isomorphic(cb, c3));
    EXPECT_EQ(ra_type(ca), RAType::V4);
    EXPECT_EQ(ra_type(cb), RAType::S4);
    EXPECT_EQ(ra_type(cc), RAType::S3);
}

TEST(WorkedExamples, Characteristic11) {
    const Field& f = Field::of(11);
    EXPECT_EQ(g_polynomial(PrimeModulus(11)), Poly::from_ints(f, {1, 5, 5, 1}) * f.from_int(10));
    auto roots = poly_roots_in_fp2(g_polynomial(PrimeModulus(11)));
    EXPECT_EQ(roots, (std::vector<Fp2>{f.from_int(3), f.from_int(4), f.from_int(-1)}));
    Genus2Curve c1 = Genus2Curve::from_poly(s3_family_poly(f.from_int(3)));
    Genus2Curve c2 = Genus2Curve::from_poly(d12_poly(f));
    EXPECT_EQ(ra_type(c1), RAType::S3);
    EXPECT_EQ(ra_type(c2), RAType::D12);
    EXPECT_TRUE(is_superspecial(c1));
    EXPECT_TRUE(is_superspecial(c2));
    EXPECT_EQ(long_involutions(c2).size(), 4u);
}

TEST(WorkedExamples, Characteristic7) {
    const Field& f = Field::of(7);
    Genus2Curve c = Genus2Curve::from_poly(s4_poly(f));
    EXPECT_EQ(ra_type(c), RAType::S4);
    EXPECT_TRUE(is_superspecial(c));
    EXPECT_EQ(long_involutions(c).size(), 6u);
    EXPECT_EQ(short_involutions(c).size(), 3u);
}

TEST(ReducedAutomorphisms, MatchBruteForceOverPGL2) {
    const Field& f = Field::of(7);
    std::vector<Genus2Curve> curves{Genus2Curve::from_poly(s4_poly(f)), Genus2Curve::from_poly(d12_poly(f)),
                                    Genus2Curve::from_poly(v4_family_poly(f.from_int(3)))};
    for (int i = 0; i < 3; ++i) curves.push_back(random_curve(f));
    for (const auto& c : curves) {
        auto fast = reduced_automorphisms(c);
        EXPECT_EQ(fast, brute_force_automorphisms(c)) << c.serialize();
        EXPECT_NO_THROW(classify_group(fast));
    }
}

TEST(ReducedAutomorphisms, CyclicFiveAppearsWhenPIsFourModFive) {
    const Field& f = Field::of(19);
    Genus2Curve c = Genus2Curve::from_poly(Poly::from_ints(f, {0, -1, 0, 0, 0, 0, 1}));  // x^6 - x = x(x^5 - 1)
    EXPECT_EQ(ra_type(c), RAType::Z5);
    EXPECT_TRUE(long_involutions(c).empty());
}

TEST(Involutions, LongnessMatchesExplicitLift) {
    for (auto p : primes_between(7, 31)) {
        const Field& f = Field::of(p);
        std::vector<Genus2Curve> curves;
        for (const auto& fc : superspecial_family_curves(PrimeModulus(p))) curves.push_back(fc.curve);
        for (int i = 0; i < 5; ++i) curves.push_back(random_curve(f));
        for (const auto& c : curves) {
            std::set<MobiusMap> longs, shorts;
            for (const auto& g : reduced_automorphisms(c)) {
                if (g.order() != 2) continue;
                Fp2 sq = lift_square(c, g);
                if (sq.is_one())
                    longs.insert(g);
                else if (sq == -f.one())
                    shorts.insert(g);
                else
                    ADD_FAILURE() << "lift of an involution squares to " << sq.to_string();
            }
            auto l = long_involutions(c), s = short_involutions(c);
            EXPECT_EQ(std::set<MobiusMap>(l.begin(), l.end()), longs);
            EXPECT_EQ(std::set<MobiusMap>(s.begin(), s.end()), shorts);
        }
    }
}

TEST(CartierManin, OrdinaryAndSuperspecialExamples) {
    const Field& f = Field::of(13);
    EXPECT_FALSE(is_superspecial(Poly::from_ints(f, {1, 1, 0, 0, 0, 1})));
    EXPECT_TRUE(is_superspecial(s4_poly(f)));
    EXPECT_FALSE(is_superspecial(d12_poly(f)));  // 13 is 1 mod 6
    EXPECT_TRUE(is_superspecial(d12_poly(Field::of(11))));
}

TEST(CartierManin, VerdictStableUnderMobiusMoves) {
    for (std::uint64_t p : {11u, 13u, 17u}) {
        const Field& f = Field::of(p);
        std::vector<Genus2Curve> curves;
        for (const auto& fc : superspecial_family_curves(PrimeModulus(p))) curves.push_back(fc.curve);
        for (int i = 0; i < 4; ++i) curves.push_back(random_curve(f));
        for (const auto& c : curves)
            for (int k = 0; k < 5; ++k) EXPECT_EQ(is_superspecial(c), is_superspecial(c.transformed(random_mobius(f))));
    }
}

TEST(IgusaKey, InvariantUnderMovesAndScaling) {
    for (std::uint64_t p : {7u, 13u, 31u, 97u}) {
        const Field& f = Field::of(p);
        for (int i = 0; i < 40; ++i) {
            Genus2Curve c = random_curve(f);
            IgusaKey k = igusa_key(c);
            Genus2Curve moved = c.transformed(random_mobius(f));
            EXPECT_EQ(igusa_key(moved), k);
            Genus2Curve scaled = Genus2Curve::with_branch_points(
                c.f() * random_nonzero(f), std::vector<P1Point>(c.branch().begin(), c.branch().end()));
            EXPECT_EQ(igusa_key(scaled), k);
            EXPECT_EQ(IgusaKey::parse(f, k.to_string()), k);
        }
    }
}

TEST(IgusaKey, AgreesWithMobiusSearchOnRandomPairs) {
    const Field& f = Field::of(7);
    for (int i = 0; i < 200; ++i) {
        Genus2Curve a = random_curve(f);
        Genus2Curve b = uniform(0, 1) ? a.transformed(random_mobius(f)) : random_curve(f);
        EXPECT_NO_THROW(is_isomorphic(a, b));
        EXPECT_EQ(is_isomorphic_mobius(a, b), igusa_key(a) == igusa_key(b));
    }
}

TEST(Families, FloorOffsetsMatchDefinition) {
    for (auto p : primes_between(7, 97)) {
        const PrimeModulus pm(p);
        Poly g = g_polynomial(pm), h = h_polynomial(pm);
        const std::uint64_t n = (p - 1) / 2;
        for (std::uint64_t l = 0; l <= p / 3; ++l)
            EXPECT_EQ(g.coeff(l), Field::of(p).make(binomial_mod(n, (p + 1) / 6 + l, p) * binomial_mod(n, l, p) % p, 0));
        for (std::uint64_t l = 0; l <= p / 4; ++l)
            EXPECT_EQ(h.coeff(l), Field::of(p).make(binomial_mod(n, (p + 1) / 4 + l, p) * binomial_mod(n, l, p) % p, 0));
    }
}

TEST(Families, SuperspecialAcrossPrimes) {
    for (auto p : primes_between(7, 61)) {
        auto fams = superspecial_family_curves(PrimeModulus(p));
        for (const auto& fc : fams) {
            EXPECT_TRUE(is_superspecial(fc.curve)) << p << " " << name(fc.form) << " " << fc.parameter.to_string();
            auto t = ra_type(fc.curve);
            if (fc.form == NormalForm::D12) EXPECT_EQ(t, RAType::D12);
            if (fc.form == NormalForm::S4) EXPECT_EQ(t, RAType::S4);
        }
    }
}

TEST(PairSeeds, LambdaMuRoundTripAndSuperspecial) {
    for (std::uint64_t p : {13u, 17u, 19u, 23u}) {
        const Field& f = Field::of(p);
        auto seeds = curves_from_supersingular_pairs(PrimeModulus(p));
        EXPECT_TRUE(seeds.skipped.empty());
        for (const auto& c : seeds.curves) EXPECT_TRUE(is_superspecial(c));
        for (int i = 0; i < 100; ++i) {
            Fp2 a = random_element(f), b = random_element(f);
            if (a.is_zero() || a.is_one() || b.is_zero() || b.is_one() || a == b) continue;
            if (!sqrt_in_fp2(a) || !sqrt_in_fp2(b)) continue;  // branch points must lie in F_{p^2}
            auto [l, m] = ab_to_lambda_mu(a, b);
            auto [a2, b2] = lambda_mu_to_ab(l, m);
            EXPECT_EQ(a2, a);
            EXPECT_EQ(b2, b);
            EXPECT_EQ(igusa_key(curve_ab(a, b)), igusa_key(even_sextic(a, b)));
        }
    }
}
