#pragma once

// The superspecial Richelot isogeny graph for one prime: vertices are the
// superspecial Jacobians and products of supersingular curves up to
// isomorphism, edges are Richelot isogenies counted raw and up to isomorphism.

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssg/counting.hpp"
#include "ssg/genus2.hpp"
#include "ssg/richelot.hpp"

namespace ssg {

inline constexpr const char* kLibraryVersion = "1.0.0";

struct VertexKey {
    bool product = false;
    IgusaKey igusa;            // Jacobians
    std::array<Fp2, 2> j{};    // products, ascending

    static VertexKey of(const Genus2Curve& c);
    static VertexKey of(const ProductSurface& e);
    static VertexKey of_j(const std::array<Fp2, 2>& j);

    friend bool operator==(const VertexKey& a, const VertexKey& b) {
        return a.product == b.product && (a.product ? a.j == b.j : a.igusa == b.igusa);
    }
    /// Jacobians first, then products.
    friend std::strong_ordering operator<=>(const VertexKey& a, const VertexKey& b) {
        if (auto c = a.product <=> b.product; c != 0) return c;
        return a.product ? a.j <=> b.j : a.igusa <=> b.igusa;
    }
    /// "J:<igusa key>" or "P:[j1,j2]".
    std::string to_string() const;
    static VertexKey parse(const Field& f, std::string_view text);
};

struct Vertex {
    VertexKey key;
    std::optional<Genus2Curve> curve;     // Jacobians
    std::optional<ProductSurface> product;  // products, canonical model
    RAType ra = RAType::Trivial;
    ProductShape shape = ProductShape::Generic;
    int aut_order = 0;
    OrbitSignature signature;
    int long_involutions = 0;       // Jacobians only
    int decomposed_splittings = 0;  // raw decomposed out-edges

    bool is_product() const { return key.product; }
    /// "J(C): S4" or "E2×E3".
    std::string type_label() const;
    /// Curve coefficients, or the two Legendre parameters "[l1,l2]".
    std::string model() const;
};

struct Edge {
    VertexKey from, to;
    int raw_multiplicity = 0;
    int reduced_count = 0;
    bool decomposed = false;
    std::vector<int> class_sizes;  // one entry per isomorphism class, ascending
};

struct IsogenyGraph {
    std::uint64_t p = 0;
    std::map<VertexKey, Vertex> vertices;
    std::map<std::pair<VertexKey, VertexKey>, Edge> edges;

    const Field& field() const { return Field::of(p); }
    const Vertex& vertex(const VertexKey& k) const;
    std::vector<const Edge*> out_edges(const VertexKey& k) const;
    const Edge* edge(const VertexKey& from, const VertexKey& to) const;
    std::size_t jacobian_count() const;
    std::size_t product_count() const;
};

/// All superspecial vertices: products from the supersingular classes, and
/// Jacobians closed under non-decomposed Richelot codomains starting from the
/// seed families. Throws std::logic_error if the per-type counts fall short of
/// the closed-form n_i.
struct VertexSet {
    std::map<IgusaKey, Genus2Curve> jacobians;
    std::vector<ProductSurface> products;
};
VertexSet enumerate_vertices(const PrimeModulus& p);

IsogenyGraph build_graph(const PrimeModulus& p);

struct CheckLine {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyReport {
    std::uint64_t p = 0;
    std::vector<CheckLine> lines;
    bool all_pass() const;
};

VerifyReport verify_counts(const IsogenyGraph& g);

std::string export_dot(const IsogenyGraph& g);
std::string export_json(const IsogenyGraph& g);
IsogenyGraph import_json(std::string_view text);

/// Reads graph_p<p>_v<version>.json from dir when present, otherwise builds
/// and writes it.
IsogenyGraph load_or_build(const PrimeModulus& p, const std::filesystem::path& cache_dir);

}  // namespace ssg
