#pragma once

// Closed-form counts of superspecial curves and of Richelot isogenies up to
// isomorphism, and the expected orbit signatures per automorphism type.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "ssg/arith.hpp"
#include "ssg/elliptic.hpp"
#include "ssg/genus2.hpp"

namespace ssg {

/// n_0..n_6: superspecial curves with reduced automorphism group of each RAType.
std::array<std::int64_t, 7> n_counts(const PrimeModulus& p);
/// Total number of superspecial curves from its own closed form.
std::int64_t n_total(const PrimeModulus& p);

struct IsogenyTotals {
    std::int64_t first = 0, second = 0;
    friend bool operator==(const IsogenyTotals&, const IsogenyTotals&) = default;
};

/// (total, decomposed) Richelot isogenies up to isomorphism out of Jacobians.
/// Throws std::logic_error if the closed forms disagree with the n_i sums.
IsogenyTotals jacobian_isogeny_totals(const PrimeModulus& p);
/// (non-decomposed, decomposed) out of products, cross-checked against the h_i sums.
IsogenyTotals product_isogeny_totals(const PrimeModulus& p);

struct CountReport {
    std::array<std::int64_t, 7> n{};
    std::int64_t n_total = 0;
    std::int64_t jacobian_total = 0, jacobian_decomposed = 0;
    std::int64_t product_nondecomposed = 0, product_decomposed = 0;
    ClassNumbers classes;
    std::int64_t products() const { return classes.h * (classes.h + 1) / 2; }
};

CountReport count_report(const PrimeModulus& p);

/// Orbit sizes with their multiplicities, split by decomposed flag.
/// Printed like "(1×6, 2×4)(1×1)"; an empty side prints as "(0)".
struct OrbitSignature {
    std::map<int, int> nondecomposed, decomposed;
    friend bool operator==(const OrbitSignature&, const OrbitSignature&) = default;
    int total() const;
    int classes_nondecomposed() const;
    int classes_decomposed() const;
    std::string to_string() const;
};

/// The seven shapes E1 x E2 of a product, by the automorphism groups of the factors.
enum class ProductShape { Generic, SelfGeneric, WithE2, WithE3, E2E2, E3E3, E2E3 };
std::string_view name(ProductShape s);
/// |Aut| of the product with its product polarization.
int aut_order(ProductShape s);
ProductShape product_shape(int aut_a, int aut_b, bool isomorphic);

OrbitSignature orbit_signature_table(RAType ra);
OrbitSignature product_signature_table(ProductShape shape);

}  // namespace ssg
