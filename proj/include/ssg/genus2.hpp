#pragma once

// Genus-2 curves y^2 = f(x), their branch points on P^1, reduced automorphism
// groups, superspeciality and isomorphism classes.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/arith.hpp"
#include "ssg/mobius.hpp"

namespace ssg {

class Genus2Curve {
public:
    /// Finds the branch points by exhaustive root search. Throws DomainError if f
    /// is not squarefree of degree 5 or 6, or if a branch point lies outside F_{p^2}.
    static Genus2Curve from_poly(const Poly& f);
    /// Uses a known branch set (validated against f).
    static Genus2Curve with_branch_points(const Poly& f, std::vector<P1Point> branch);

    const Poly& f() const { return f_; }
    const Field& field() const { return f_.field(); }
    /// Sorted ascending, infinity last.
    const std::array<P1Point, 6>& branch() const { return branch_; }
    bool branch_at_infinity() const { return branch_[5].infinity; }

    /// The same curve in the coordinate x' where x = m(x').
    Genus2Curve transformed(const MobiusMap& m) const;
    /// A degree-6 model: infinity is moved onto the smallest non-branch point of F_p.
    Genus2Curve sextic_model() const;

    /// Coefficients of f, low degree first, comma-separated ("a0" or "a0+a1*t").
    std::string serialize() const { return f_.to_string(); }
    static Genus2Curve parse(const Field& field, std::string_view text);
    static Poly parse_poly(const Field& field, std::string_view text);

private:
    Genus2Curve(Poly f, std::array<P1Point, 6> branch) : f_(std::move(f)), branch_(std::move(branch)) {}
    Poly f_;
    std::array<P1Point, 6> branch_;
};

/// The seven possible reduced automorphism groups, indexed like n_0..n_6.
enum class RAType { Trivial = 0, Z2 = 1, S3 = 2, V4 = 3, D12 = 4, S4 = 5, Z5 = 6 };

inline constexpr std::array<RAType, 7> kAllRATypes{RAType::Trivial, RAType::Z2, RAType::S3, RAType::V4,
                                                   RAType::D12,     RAType::S4, RAType::Z5};

int group_order(RAType t);
std::string_view name(RAType t);
std::optional<RAType> parse_ra_type(std::string_view s);

/// All Mobius maps permuting the branch set, identity included.
std::vector<MobiusMap> reduced_automorphisms(const Genus2Curve& c);
RAType ra_type(const Genus2Curve& c);
RAType classify_group(const std::vector<MobiusMap>& group);

/// Order-2 reduced automorphisms acting freely on the branch points. Throws if
/// some order-2 element fixes a number of branch points other than 0 or 2.
std::vector<MobiusMap> long_involutions(const Genus2Curve& c);
std::vector<MobiusMap> short_involutions(const Genus2Curve& c);

using Matrix2 = std::array<std::array<Fp2, 2>, 2>;

/// f itself if of degree 6; a degree-5 f is moved by x = c + 1/x' with the
/// smallest c in F_p where f(c) != 0.
Poly sextic_form(const Poly& f);

/// M[i-1][j-1] = coefficient of x^{i p - j} in f^{(p-1)/2}, i, j in {1, 2},
/// computed on the degree-6 form of f.
Matrix2 cartier_manin(const Poly& f);
Matrix2 cartier_manin(const Genus2Curve& c);
bool is_zero(const Matrix2& m);
bool is_superspecial(const Poly& f);
bool is_superspecial(const Genus2Curve& c);

/// Igusa-Clebsch invariants (I2, I4, I6, I10) of the degree-6 model, from the
/// root-difference formulas.
std::array<Fp2, 4> igusa_clebsch(const Genus2Curve& c);

/// Normalized point of the weighted projective plane P(1,2,3,5) of (I2:I4:I6:I10);
/// equal keys iff the curves are isomorphic over the algebraic closure.
struct IgusaKey {
    int shape = 0;  // 0: I2 != 0, 1: I2 = 0 != I4, 2: I2 = I4 = 0 != I6, 3: I2 = I4 = I6 = 0
    std::array<Fp2, 3> values;
    friend bool operator==(const IgusaKey& a, const IgusaKey& b) { return a.shape == b.shape && a.values == b.values; }
    friend std::strong_ordering operator<=>(const IgusaKey& a, const IgusaKey& b) {
        if (auto c = a.shape <=> b.shape; c != 0) return c;
        return a.values <=> b.values;
    }
    std::string to_string() const;
    static IgusaKey parse(const Field& f, std::string_view text);
};

IgusaKey igusa_key(const Genus2Curve& c);

/// Mobius maps m with m(branch(a)) = branch(b).
std::vector<MobiusMap> isomorphisms(const Genus2Curve& a, const Genus2Curve& b);
bool is_isomorphic_mobius(const Genus2Curve& a, const Genus2Curve& b);
/// Mobius search and Igusa keys together; throws std::logic_error if they disagree.
bool is_isomorphic(const Genus2Curve& a, const Genus2Curve& b);

/// g(z) = sum_l C(n, floor((p+1)/6) + l) C(n, l) z^l, n = (p-1)/2, l <= p/3.
Poly g_polynomial(const PrimeModulus& p);
/// h(z) = sum_l C(n, floor((p+1)/4) + l) C(n, l) z^l, n = (p-1)/2, l <= p/4.
Poly h_polynomial(const PrimeModulus& p);

enum class NormalForm { S3Family, V4Family, D12, S4 };
std::string_view name(NormalForm n);

Poly s3_family_poly(const Fp2& alpha);  // (x^3 - 1)(x^3 - alpha)
Poly v4_family_poly(const Fp2& beta);   // x (x^2 - 1)(x^2 - beta)
Poly d12_poly(const Field& f);          // x^6 - 1
Poly s4_poly(const Field& f);           // x (x^4 - 1)

struct FamilyCurve {
    NormalForm form;
    Fp2 parameter;  // alpha, beta, or 0 for the two isolated forms
    Genus2Curve curve;
};

/// The normal-form curves singled out as superspecial by g, h and the
/// congruence conditions on p.
std::vector<FamilyCurve> superspecial_family_curves(const PrimeModulus& p);

/// y^2 = (x^2 - 1)(x^2 - a)(x^2 - b).
Genus2Curve curve_ab(const Fp2& a, const Fp2& b);

struct PairSeeds {
    std::vector<Genus2Curve> curves;
    std::vector<std::string> skipped;  // degenerate (lambda, mu) pairs
};

/// C_{a,b} for each unordered pair lambda != mu of supersingular Legendre parameters,
/// with b = lambda/mu and a = lambda(mu - 1)/(mu(lambda - 1)).
PairSeeds curves_from_supersingular_pairs(const PrimeModulus& p);

/// (a, b) -> (lambda, mu) = ((b - a)/(1 - a), (b - a)/(b(1 - a))).
std::pair<Fp2, Fp2> ab_to_lambda_mu(const Fp2& a, const Fp2& b);
/// Inverse of ab_to_lambda_mu.
std::pair<Fp2, Fp2> lambda_mu_to_ab(const Fp2& lambda, const Fp2& mu);

}  // namespace ssg
