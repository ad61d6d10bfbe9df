#pragma once

// Supersingular elliptic curves in Legendre form y^2 = x(x-1)(x-lambda).

#include <array>
#include <cstdint>
#include <vector>

#include "ssg/arith.hpp"

namespace ssg {

/// j = 2^8 (l^2 - l + 1)^3 / (l^2 (l - 1)^2); lambda in {0, 1} is a domain error.
Fp2 j_invariant(const Fp2& lambda);

/// j-invariant of y^2 = (x - e1)(x - e2)(x - e3) for distinct e_i.
Fp2 j_invariant_of_roots(const std::array<Fp2, 3>& e);

class EllipticCurve {
public:
    explicit EllipticCurve(const Fp2& lambda);

    const Fp2& lambda() const { return lambda_; }
    const Fp2& j() const { return j_; }
    const Field& field() const { return lambda_.field(); }
    /// |Aut(E)|: 6 for j = 0, 4 for j = 1728, 2 otherwise.
    int aut_order() const;
    /// x-coordinates of the nonzero 2-torsion points, labelled 0, 1, 2: (0, 1, lambda).
    std::array<Fp2, 3> two_torsion() const;

    friend bool operator==(const EllipticCurve& a, const EllipticCurve& b) { return a.lambda_ == b.lambda_; }

private:
    Fp2 lambda_;
    Fp2 j_;
};

int aut_order_of_j(const Fp2& j);

/// Smallest element of {l, 1-l, 1/l, 1/(1-l), l/(l-1), (l-1)/l}; equal iff same j.
Fp2 canonical_lambda(const Fp2& lambda);

/// Phi(z) = sum_{l=0}^{(p-1)/2} C((p-1)/2, l)^2 z^l mod p.
Poly legendre_polynomial(const PrimeModulus& p);

bool is_supersingular(const EllipticCurve& e);
bool is_supersingular(const Fp2& lambda);

/// All roots of Phi in F_{p^2}, ascending.
std::vector<Fp2> supersingular_lambdas(const PrimeModulus& p);

/// One isomorphism class of supersingular curves.
struct SupersingularClass {
    Fp2 j;
    std::vector<Fp2> lambdas;  // the j-fiber of Phi's roots, ascending
    int aut_order = 2;
    /// Canonical model: the smallest lambda of the fiber.
    EllipticCurve representative() const { return EllipticCurve(lambdas.front()); }
};

/// Supersingular classes ordered by j.
std::vector<SupersingularClass> supersingular_classes(const PrimeModulus& p);

struct ClassNumbers {
    std::int64_t h = 0, h1 = 0, h2 = 0, h3 = 0;
    friend bool operator==(const ClassNumbers&, const ClassNumbers&) = default;
};

/// h from the class-number formula, h2 = {1 - (-1/p)}/2, h3 = {1 - (-3/p)}/2, h1 = h - h2 - h3.
ClassNumbers class_numbers(const PrimeModulus& p);

/// A permutation of the three 2-torsion labels.
using Perm3 = std::array<int, 3>;

/// Label permutations sigma induced by isomorphisms E -> E' on 2-torsion: root i of
/// `from` goes to root sigma[i] of `to`. Found as the affine maps of the x-line.
std::vector<Perm3> two_torsion_isomorphisms(const std::array<Fp2, 3>& from, const std::array<Fp2, 3>& to);

/// The group induced by Aut(E)/{+-1} on the 2-torsion of y^2 = (x-e0)(x-e1)(x-e2). Identity first.
std::vector<Perm3> two_torsion_symmetries(const std::array<Fp2, 3>& roots);
std::vector<Perm3> two_torsion_symmetries(const EllipticCurve& e);

/// j-invariant of E / <(e_k, 0)> for y^2 = (x-e0)(x-e1)(x-e2).
Fp2 two_isogenous_j(const std::array<Fp2, 3>& roots, int k);

}  // namespace ssg
