#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>

#include <unistd.h>

#include "ssg/graph.hpp"
#include "support.hpp"

using namespace ssg;
using namespace ssg::testing;

namespace {

struct Totals {
    int jac_reduced = 0, jac_decomposed = 0, prod_nondecomposed = 0, prod_decomposed = 0;
};

Totals reduced_totals(const IsogenyGraph& g) {
    Totals t;
    for (const auto& [k, e] : g.edges) {
        if (!e.from.product) {
            t.jac_reduced += e.reduced_count;
            if (e.decomposed) t.jac_decomposed += e.reduced_count;
        } else {
            (e.decomposed ? t.prod_decomposed : t.prod_nondecomposed) += e.reduced_count;
        }
    }
    return t;
}

std::map<RAType, VertexKey> jacobians_by_type(const IsogenyGraph& g) {
    std::map<RAType, VertexKey> out;
    for (const auto& [k, v] : g.vertices)
        if (!v.is_product()) out.emplace(v.ra, k);
    return out;
}

}  // namespace

TEST(GoldenGraph, Characteristic13) {
    auto g = build_graph(PrimeModulus(13));
    ASSERT_EQ(g.product_count(), 1u);
    ASSERT_EQ(g.jacobian_count(), 3u);
    auto by_type = jacobians_by_type(g);
    ASSERT_EQ(by_type.size(), 3u);
    EXPECT_TRUE(by_type.contains(RAType::S3) && by_type.contains(RAType::V4) && by_type.contains(RAType::S4));

    const VertexKey product = g.vertices.rbegin()->first;
    ASSERT_TRUE(product.product);
    std::map<RAType, int> raw;
    int reduced = 0;
    for (const Edge* e : g.out_edges(product)) {
        if (e->decomposed) continue;
        raw[g.vertex(e->to).ra] += e->raw_multiplicity;
        reduced += e->reduced_count;
    }
    EXPECT_EQ(raw, (std::map<RAType, int>{{RAType::S3, 2}, {RAType::V4, 2}, {RAType::S4, 1}}));
    EXPECT_EQ(reduced, 4);

    auto t = reduced_totals(g);
    EXPECT_EQ(t.jac_reduced, 19);
    EXPECT_EQ(t.jac_decomposed, 4);
    EXPECT_EQ(t.prod_nondecomposed, 4);
}

TEST(GoldenGraph, Characteristic11) {
    auto g = build_graph(PrimeModulus(11));
    ASSERT_EQ(g.product_count(), 3u);
    ASSERT_EQ(g.jacobian_count(), 2u);
    auto by_type = jacobians_by_type(g);
    const VertexKey c1 = by_type.at(RAType::S3), c2 = by_type.at(RAType::D12);
    for (const auto& [k, v] : g.vertices) {
        if (!v.is_product()) continue;
        std::vector<const Edge*> nondec;
        for (const Edge* e : g.out_edges(k))
            if (!e->decomposed) nondec.push_back(e);
        ASSERT_EQ(nondec.size(), 1u) << v.type_label();
        EXPECT_EQ(nondec[0]->reduced_count, 1);
        EXPECT_EQ(nondec[0]->to, v.shape == ProductShape::E2E3 ? c1 : c2) << v.type_label();
    }
    auto t = reduced_totals(g);
    EXPECT_EQ(t.jac_decomposed, 3);
    EXPECT_EQ(t.prod_nondecomposed, 3);
}

TEST(GoldenGraph, Characteristic7) {
    auto g = build_graph(PrimeModulus(7));
    ASSERT_EQ(g.product_count(), 1u);
    ASSERT_EQ(g.jacobian_count(), 1u);
    const auto& [jk, jv] = *g.vertices.begin();
    EXPECT_EQ(jv.ra, RAType::S4);
    EXPECT_TRUE(is_isomorphic(*jv.curve, Genus2Curve::from_poly(s4_poly(Field::of(7)))));
    auto t = reduced_totals(g);
    EXPECT_EQ(t.jac_decomposed, 1);
    EXPECT_EQ(t.prod_nondecomposed, 1);
    const VertexKey product = g.vertices.rbegin()->first;
    const Edge* e = g.edge(product, jk);
    ASSERT_NE(e, nullptr);
    EXPECT_FALSE(e->decomposed);
}

TEST(Graph, OutDegreeFifteenAndReverseEdges) {
    for (auto p : primes_between(7, 41)) {
        auto g = build_graph(PrimeModulus(p));
        for (const auto& [k, v] : g.vertices) {
            int raw = 0, reduced = 0;
            for (const Edge* e : g.out_edges(k)) {
                raw += e->raw_multiplicity;
                reduced += e->reduced_count;
                EXPECT_EQ(e->decomposed, e->to.product);
                int sum = 0;
                for (int s : e->class_sizes) sum += s;
                EXPECT_EQ(sum, e->raw_multiplicity);
                EXPECT_EQ(static_cast<int>(e->class_sizes.size()), e->reduced_count);
                const Edge* back = g.edge(e->to, k);
                ASSERT_NE(back, nullptr) << p;
                EXPECT_EQ(back->reduced_count, e->reduced_count);
                EXPECT_EQ(e->raw_multiplicity * g.vertex(e->to).aut_order,
                          back->raw_multiplicity * v.aut_order);
            }
            EXPECT_EQ(raw, 15);
            EXPECT_EQ(reduced, v.signature.classes_decomposed() + v.signature.classes_nondecomposed());
        }
    }
}

TEST(Graph, VerifyPassesOnSmallPrimes) {
    for (auto p : primes_between(7, 31)) {
        auto report = verify_counts(build_graph(PrimeModulus(p)));
        EXPECT_TRUE(report.all_pass()) << p;
        EXPECT_GT(report.lines.size(), 10u);
    }
}

TEST(VertexKey, TextRoundTrip) {
    auto g = build_graph(PrimeModulus(17));
    for (const auto& [k, v] : g.vertices) {
        EXPECT_EQ(VertexKey::parse(g.field(), k.to_string()), k);
        if (v.curve) EXPECT_EQ(VertexKey::of(*v.curve), k);
        if (v.product) EXPECT_EQ(VertexKey::of(*v.product), k);
    }
    EXPECT_THROW(VertexKey::parse(g.field(), "Q[1,2]"), std::invalid_argument);
}

TEST(Export, JsonRoundTripIsExact) {
    for (std::uint64_t p : {7u, 13u, 29u}) {
        auto g = build_graph(PrimeModulus(p));
        const std::string text = export_json(g);
        auto back = import_json(text);
        EXPECT_EQ(back.p, g.p);
        EXPECT_EQ(back.vertices.size(), g.vertices.size());
        EXPECT_EQ(back.edges.size(), g.edges.size());
        EXPECT_EQ(export_json(back), text);
        EXPECT_EQ(export_dot(back), export_dot(g));
        EXPECT_TRUE(verify_counts(back).all_pass());
    }
}

TEST(Export, DotIsDeterministicAndLabelled) {
    auto a = export_dot(build_graph(PrimeModulus(13)));
    auto b = export_dot(build_graph(PrimeModulus(13)));
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("t^2 = r, r = 2 (p = 13)"), std::string::npos);
    EXPECT_NE(a.find("style=dashed"), std::string::npos);
    EXPECT_EQ(a.rfind("digraph", 0), 0u);
}

TEST(Export, CacheIsReusedAcrossCalls) {
    auto dir = std::filesystem::temp_directory_path() / ("ssg_cache_test_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    auto first = load_or_build(PrimeModulus(11), dir);
    auto file = dir / (std::string("graph_p11_v") + kLibraryVersion + ".json");
    ASSERT_TRUE(std::filesystem::exists(file));
    auto second = load_or_build(PrimeModulus(11), dir);
    EXPECT_EQ(export_json(first), export_json(second));
    std::filesystem::remove_all(dir);
}
