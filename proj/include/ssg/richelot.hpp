#pragma once

// Richelot isogenies: quadratic splittings of a genus-2 curve, their codomains,
// the analogous partitions on products of elliptic curves, and orbit
// decompositions under automorphisms.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <variant>
#include <vector>

#include "ssg/elliptic.hpp"
#include "ssg/genus2.hpp"

namespace ssg {

/// A partition of the labels 0..5 into three pairs. Canonical form: each pair
/// ascending, pairs ordered by first element.
using Pairing = std::array<std::array<int, 2>, 3>;

/// The 15 canonical pairings in lexicographic order.
const std::array<Pairing, 15>& all_pairings();
Pairing canonical(Pairing p);
/// Index into all_pairings() of canonical(p).
int pairing_index(const Pairing& p);
/// Relabels by i -> perm[i].
Pairing relabel(std::span<const int> perm, const Pairing& p);

struct QuadraticSplitting {
    Pairing pairs;  // indices into the curve's branch()
    /// Monic; degree 1 for a pair containing infinity.
    std::array<Poly, 3> quadratics;
};

/// The 15 splittings, in all_pairings() order.
std::vector<QuadraticSplitting> splittings(const Genus2Curve& c);

/// Determinant of the 3x3 matrix of coefficient rows (x^0, x^1, x^2).
Fp2 delta(const QuadraticSplitting& s);

/// E_first x E_second. Labels 0..2 are first.two_torsion(), 3..5 are second's.
struct ProductSurface {
    EllipticCurve first, second;
    /// The unordered j-pair, ascending.
    std::array<Fp2, 2> j_pair() const;
    bool self_product() const { return first.j() == second.j(); }
};

using PPAS = std::variant<Genus2Curve, ProductSurface>;

/// Codomain of J(C) -> J(C)/G for the kernel G given by s. For delta != 0 the
/// image is a Jacobian; otherwise a product whose labels line up with the
/// pairs of s as (pairs[0], pairs[2], pairs[1]) on both factors, so that the
/// dual kernel is the diagonal pairing {0,3},{1,4},{2,5}.
PPAS codomain(const Genus2Curve& c, const QuadraticSplitting& s);

inline constexpr Pairing kDiagonalPairing{{{0, 3}, {1, 4}, {2, 5}}};

/// Index (in splittings(image)) of the splitting whose codomain is isomorphic
/// to c. Throws std::logic_error if none exists.
int dual_splitting(const Genus2Curve& c, const Genus2Curve& image);

/// True when every pair of p joins a label of the first factor to one of the second.
bool is_all_mixed(const Pairing& p);
/// Label permutation of E_first x E_second induced by automorphisms, as
/// maps label -> label. Includes the factor swap for a self-product.
std::vector<std::array<int, 6>> product_symmetries(const ProductSurface& e);

/// Decomposed iff one pair lies in each factor, or the partition is the graph
/// of a 2-torsion isomorphism between isomorphic factors.
bool product_is_decomposed(const ProductSurface& e, const Pairing& s);
/// j-pair (ascending) of the product codomain of a decomposed partition.
std::array<Fp2, 2> product_decomposed_target(const ProductSurface& e, const Pairing& s);

/// Canonical product models: each j is represented by its smallest Legendre parameter.
class ProductCatalog {
public:
    explicit ProductCatalog(const PrimeModulus& p);
    const EllipticCurve& curve(const Fp2& j) const;
    /// The canonical product with factors ordered by j.
    ProductSurface product(const Fp2& j1, const Fp2& j2) const;
    /// All h(h+1)/2 products, ordered by j-pair.
    std::vector<ProductSurface> all_products() const;

private:
    std::map<Fp2, EllipticCurve> by_j_;
};

/// Reverse-search gluing: records, for each registered Jacobian, which
/// partitions of the canonical products it is reached from.
class GlueTable {
public:
    explicit GlueTable(const ProductCatalog& catalog) : catalog_(&catalog) {}

    /// Registers every delta = 0 splitting of c. Throws std::logic_error if a
    /// partition is already claimed by a non-isomorphic curve.
    void add(const Genus2Curve& c);
    /// The Jacobian glued from the canonical product along s, if registered.
    std::optional<Genus2Curve> find(const ProductSurface& e, const Pairing& s) const;
    std::size_t size() const { return table_.size(); }

private:
    using Key = std::tuple<Fp2, Fp2, int>;
    const ProductCatalog* catalog_;
    std::map<Key, std::pair<IgusaKey, Genus2Curve>> table_;
};

/// Codomain of a non-decomposed partition; throws DomainError if s is decomposed
/// and std::logic_error if the table has no entry.
Genus2Curve glue(const GlueTable& table, const ProductSurface& e, const Pairing& s);

struct SplittingOrbit {
    std::vector<int> members;  // pairing indices, ascending
    bool decomposed = false;
};

/// Orbits of the 15 splittings under RA(C), ordered by smallest member.
std::vector<SplittingOrbit> orbit_decomposition(const Genus2Curve& c);
/// Orbits of the 15 partitions under product_symmetries(e).
std::vector<SplittingOrbit> orbit_decomposition(const ProductSurface& e);

}  // namespace ssg
