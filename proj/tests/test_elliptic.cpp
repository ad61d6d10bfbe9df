#include <gtest/gtest.h>

#include <set>

#include "ssg/elliptic.hpp"
#include "support.hpp"

using namespace ssg;
using namespace ssg::testing;

TEST(JInvariant, SpecialValues) {
    const Field& f = Field::of(13);
    EXPECT_EQ(j_invariant(-f.one()), f.from_int(1728));
    EXPECT_EQ(j_invariant(f.from_int(2)), f.from_int(1728));
    for (const auto& r : poly_roots_in_fp2(Poly::from_ints(f, {1, -1, 1}))) EXPECT_TRUE(j_invariant(r).is_zero());
    EXPECT_THROW(j_invariant(f.zero()), DomainError);
    EXPECT_THROW(j_invariant(f.one()), DomainError);
}

TEST(JInvariant, InvariantUnderLambdaSubstitutions) {
    const Field& f = Field::of(101);
    for (int i = 0; i < 300; ++i) {
        Fp2 l = random_element(f);
        if (l.is_zero() || l.is_one()) continue;
        const Fp2 one = f.one(), j = j_invariant(l);
        for (const Fp2& m : {one - l, l.inv(), (one - l).inv(), l / (l - one), (l - one) / l}) {
            EXPECT_EQ(j_invariant(m), j);
            EXPECT_EQ(canonical_lambda(m), canonical_lambda(l));
        }
    }
}

TEST(Supersingular, WorkedExampleP13) {
    const Field& f = Field::of(13);
    EXPECT_EQ(legendre_polynomial(PrimeModulus(13)), Poly::from_ints(f, {1, 10, 4, 10, 4, 10, 1}));
    Fp2 l = f.from_int(3) - f.gen() * 2;  // 3 - 2 sqrt 2
    EXPECT_TRUE(is_supersingular(l));
    auto classes = supersingular_classes(PrimeModulus(13));
    ASSERT_EQ(classes.size(), 1u);
    EXPECT_EQ(classes[0].aut_order, 2);
    EXPECT_EQ(classes[0].j, j_invariant(l));
}

TEST(Supersingular, AgreesWithPointCounting) {
    // E is supersingular iff p divides the trace of Frobenius over F_{p^2}.
    for (auto p : primes_between(7, 23)) {
        const Field& f = Field::of(p);
        auto ss = supersingular_lambdas(PrimeModulus(p));
        std::set<Fp2> ss_set(ss.begin(), ss.end());
        for (std::uint64_t i = 2; i < f.size(); ++i) {
            Fp2 l = f.element(i);
            if (l.is_one()) continue;
            bool by_count = frobenius_trace(l) % static_cast<std::int64_t>(p) == 0;
            EXPECT_EQ(is_supersingular(l), by_count) << "p=" << p << " l=" << l.to_string();
            EXPECT_EQ(ss_set.contains(l), by_count);
        }
    }
}

TEST(Supersingular, ClassNumbersMatchEnumeration) {
    for (auto p : primes_between(7, 199)) {
        auto cls = supersingular_classes(PrimeModulus(p));
        auto h = class_numbers(PrimeModulus(p));
        std::int64_t h2 = 0, h3 = 0;
        for (const auto& c : cls) {
            h2 += c.aut_order == 4;
            h3 += c.aut_order == 6;
            EXPECT_EQ(c.representative().lambda(), canonical_lambda(c.lambdas.back()));
            EXPECT_EQ(static_cast<int>(two_torsion_symmetries(c.representative()).size()), c.aut_order / 2);
        }
        EXPECT_EQ(static_cast<std::int64_t>(cls.size()), h.h) << p;
        EXPECT_EQ(h2, h.h2);
        EXPECT_EQ(h3, h.h3);
        EXPECT_EQ(h.h1, h.h - h.h2 - h.h3);
    }
}

TEST(TwoTorsion, IsomorphismsTransportRoots) {
    const Field& f = Field::of(31);
    for (int i = 0; i < 100; ++i) {
        Fp2 l = random_element(f);
        if (l.is_zero() || l.is_one()) continue;
        Fp2 u = random_nonzero(f), r = random_element(f);
        std::array<Fp2, 3> from{f.zero(), f.one(), l};
        std::array<Fp2, 3> to{r + u * l, r, r + u};  // x -> u x + r, then shuffled
        auto isos = two_torsion_isomorphisms(from, to);
        ASSERT_FALSE(isos.empty());
        bool found = false;
        for (const auto& s : isos) found = found || s == Perm3{1, 2, 0};
        EXPECT_TRUE(found);
    }
}

TEST(TwoTorsion, IsogenousCurveIsSupersingularAndDualReturns) {
    int checked = 0;
    for (auto p : primes_between(7, 97)) {
        const Field& f = Field::of(p);
        std::set<Fp2> js;
        for (const auto& c : supersingular_classes(PrimeModulus(p))) js.insert(c.j);
        for (const auto& c : supersingular_classes(PrimeModulus(p))) {
            auto roots = c.representative().two_torsion();
            for (int k = 0; k < 3; ++k) {
                Fp2 j2 = two_isogenous_j(roots, k);
                EXPECT_TRUE(js.contains(j2));
                // Codomain of y^2 = x(x^2 + a x + b) is X(X^2 - 2a X + a^2 - 4b) with roots 0, a +- 2 sqrt b.
                Fp2 di = roots[static_cast<std::size_t>((k + 1) % 3)] - roots[static_cast<std::size_t>(k)];
                Fp2 dj = roots[static_cast<std::size_t>((k + 2) % 3)] - roots[static_cast<std::size_t>(k)];
                Fp2 a = -(di + dj), b = di * dj;
                auto sb = sqrt_in_fp2(b);
                if (!sb) continue;
                std::array<Fp2, 3> image{f.zero(), a + *sb * 2, a - *sb * 2};
                EXPECT_EQ(j_invariant_of_roots(image), j2);
                EXPECT_EQ(two_isogenous_j(image, 0), c.j);
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 100);
}
