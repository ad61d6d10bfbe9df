#pragma once

// Exact arithmetic in F_p, F_{p^2} = F_p[t]/(t^2 - r) and univariate
// polynomials over F_{p^2}.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ssg {

/// Raised when an operation leaves its mathematical domain (inverse of zero,
/// roots of the zero polynomial, a value escaping F_{p^2}, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A prime p with 5 < p < 10^6, checked by trial division.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);
    std::uint64_t value() const noexcept { return p_; }
    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Euler's criterion, mapped to {-1, 0, 1}.
int legendre_symbol(std::int64_t a, std::uint64_t q);

/// Square root in F_q (q an odd prime) by Tonelli-Shanks, smallest of the two roots.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t q);

/// Binomial coefficient C(n, k) reduced mod p, for n < p.
std::uint64_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p);

class Fp2;

/// Shared context of F_{p^2}. Instances are interned and live for the whole
/// process, so elements can hold a plain pointer to their field.
class Field {
public:
    static const Field& of(const PrimeModulus& p);
    static const Field& of(std::uint64_t p) { return of(PrimeModulus(p)); }

    std::uint64_t p() const noexcept { return p_; }
    /// The smallest positive quadratic non-residue mod p; t^2 = r.
    std::uint64_t nonresidue() const noexcept { return r_; }
    std::uint64_t size() const noexcept { return p_ * p_; }

    Fp2 zero() const;
    Fp2 one() const;
    Fp2 gen() const;  // t
    Fp2 from_int(std::int64_t v) const;
    Fp2 make(std::uint64_t a0, std::uint64_t a1) const;
    /// Enumerates F_{p^2}: index i maps to (i mod p) + (i div p) t.
    Fp2 element(std::uint64_t index) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t reduce(std::int64_t v) const noexcept;

    /// Context line printed by the CLI, "t^2 = r, r = <value>".
    std::string context_line() const;

private:
    explicit Field(std::uint64_t p);
    std::uint64_t p_;
    std::uint64_t r_;
};

/// An element a0 + a1 t of F_{p^2}. A default-constructed element has no field
/// and must be assigned before use.
class Fp2 {
public:
    Fp2() = default;
    Fp2(const Field& f, std::uint64_t a0, std::uint64_t a1) : field_(&f), a0_(a0), a1_(a1) {}

    const Field& field() const { return *field_; }
    bool bound() const noexcept { return field_ != nullptr; }
    std::uint64_t a0() const noexcept { return a0_; }
    std::uint64_t a1() const noexcept { return a1_; }

    bool is_zero() const noexcept { return a0_ == 0 && a1_ == 0; }
    bool is_one() const noexcept { return a0_ == 1 && a1_ == 0; }
    bool in_base_field() const noexcept { return a1_ == 0; }
    std::uint64_t index() const noexcept;

    Fp2 operator-() const;
    Fp2& operator+=(const Fp2& o);
    Fp2& operator-=(const Fp2& o);
    Fp2& operator*=(const Fp2& o);
    Fp2& operator/=(const Fp2& o) { return *this *= o.inv(); }
    friend Fp2 operator+(Fp2 a, const Fp2& b) { return a += b; }
    friend Fp2 operator-(Fp2 a, const Fp2& b) { return a -= b; }
    friend Fp2 operator*(Fp2 a, const Fp2& b) { return a *= b; }
    friend Fp2 operator/(Fp2 a, const Fp2& b) { return a /= b; }
    Fp2 operator*(std::int64_t k) const;

    Fp2 inv() const;
    Fp2 pow(std::uint64_t e) const;
    Fp2 square() const { return *this * *this; }
    Fp2 conj() const;
    /// Norm to F_p, a0^2 - r a1^2.
    std::uint64_t norm() const;

    friend bool operator==(const Fp2& a, const Fp2& b) noexcept { return a.a0_ == b.a0_ && a.a1_ == b.a1_; }
    /// Lexicographic on (a0, a1); the canonical order used for deterministic output.
    friend std::strong_ordering operator<=>(const Fp2& a, const Fp2& b) noexcept {
        if (auto c = a.a0_ <=> b.a0_; c != 0) return c;
        return a.a1_ <=> b.a1_;
    }

    /// "a0" or "a0+a1*t".
    std::string to_string() const;
    static Fp2 parse(const Field& f, std::string_view text);

private:
    const Field* field_ = nullptr;
    std::uint64_t a0_ = 0;
    std::uint64_t a1_ = 0;
};

/// Square root in F_{p^2}; of the two roots the lexicographically smaller is returned.
std::optional<Fp2> sqrt_in_fp2(const Fp2& x);

/// Dense univariate polynomial with trimmed trailing zeros.
class Poly {
public:
    explicit Poly(const Field& f) : field_(&f) {}
    Poly(const Field& f, std::vector<Fp2> coeffs);
    static Poly monomial(const Fp2& c, std::size_t degree);
    static Poly from_ints(const Field& f, std::initializer_list<std::int64_t> low_first);
    /// (x - r1)(x - r2)...
    static Poly from_roots(const Field& f, std::span<const Fp2> roots);

    const Field& field() const { return *field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Fp2 coeff(std::size_t i) const;
    Fp2 leading() const;
    std::span<const Fp2> coeffs() const noexcept { return coeffs_; }

    Fp2 operator()(const Fp2& x) const;
    Poly derivative() const;
    Poly monic() const;
    Poly pow(std::uint64_t e) const;
    /// f^e mod x^bound.
    Poly pow_truncated(std::uint64_t e, std::size_t bound) const;
    /// Quotient by (x - c), assuming c is a root.
    Poly deflate(const Fp2& c) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Fp2& c);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void trim();
    static Poly mul_truncated(const Poly& a, const Poly& b, std::size_t bound);
    const Field* field_;
    std::vector<Fp2> coeffs_;
};

/// All roots of f in F_{p^2}, with multiplicity and in ascending order, by
/// exhaustive evaluation over the p^2 field elements.
std::vector<Fp2> poly_roots_in_fp2(const Poly& f);

/// Roots of a polynomial of degree 1 or 2 by the quadratic formula; nullopt if
/// they do not lie in F_{p^2}.
std::optional<std::vector<Fp2>> small_degree_roots(const Poly& f);

}  // namespace ssg
