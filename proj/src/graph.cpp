#include "ssg/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ssg {

using nlohmann::json;

// ---------------------------------------------------------------- keys and vertices

VertexKey VertexKey::of(const Genus2Curve& c) {
    VertexKey k;
    k.igusa = igusa_key(c);
    return k;
}

VertexKey VertexKey::of(const ProductSurface& e) { return of_j(e.j_pair()); }

VertexKey VertexKey::of_j(const std::array<Fp2, 2>& j) {
    VertexKey k;
    k.product = true;
    k.j = j;
    if (k.j[1] < k.j[0]) std::swap(k.j[0], k.j[1]);
    return k;
}

std::string VertexKey::to_string() const {
    if (!product) return igusa.to_string();
    return "P[" + j[0].to_string() + "," + j[1].to_string() + "]";
}

VertexKey VertexKey::parse(const Field& f, std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty vertex key");
    if (text[0] == 'J') {
        VertexKey k;
        k.igusa = IgusaKey::parse(f, text);
        return k;
    }
    if (text.size() < 4 || text.substr(0, 2) != "P[" || text.back() != ']')
        throw std::invalid_argument("malformed vertex key: " + std::string(text));
    auto body = text.substr(2, text.size() - 3);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("malformed vertex key: " + std::string(text));
    return of_j({Fp2::parse(f, body.substr(0, comma)), Fp2::parse(f, body.substr(comma + 1))});
}

std::string Vertex::type_label() const {
    if (is_product()) return std::string(name(shape));
    return "J(C): " + std::string(name(ra));
}

std::string Vertex::model() const {
    if (curve) return curve->serialize();
    return "[" + product->first.lambda().to_string() + "," + product->second.lambda().to_string() + "]";
}

const Vertex& IsogenyGraph::vertex(const VertexKey& k) const {
    auto it = vertices.find(k);
    if (it == vertices.end()) throw std::out_of_range("unknown vertex " + k.to_string());
    return it->second;
}

std::vector<const Edge*> IsogenyGraph::out_edges(const VertexKey& k) const {
    std::vector<const Edge*> out;
    for (auto it = edges.lower_bound({k, VertexKey{}}); it != edges.end() && it->first.first == k; ++it)
        out.push_back(&it->second);
    return out;
}

const Edge* IsogenyGraph::edge(const VertexKey& from, const VertexKey& to) const {
    auto it = edges.find({from, to});
    return it == edges.end() ? nullptr : &it->second;
}

std::size_t IsogenyGraph::jacobian_count() const {
    return static_cast<std::size_t>(
        std::count_if(vertices.begin(), vertices.end(), [](const auto& kv) { return !kv.first.product; }));
}

std::size_t IsogenyGraph::product_count() const { return vertices.size() - jacobian_count(); }

// ---------------------------------------------------------------- enumeration

VertexSet enumerate_vertices(const PrimeModulus& p) {
    VertexSet vs;
    vs.products = ProductCatalog(p).all_products();
    std::deque<const Genus2Curve*> queue;
    auto add = [&](const Genus2Curve& c) {
        auto [it, fresh] = vs.jacobians.try_emplace(igusa_key(c), c);
        if (fresh) queue.push_back(&it->second);
    };
    for (const auto& c : curves_from_supersingular_pairs(p).curves) add(c);
    for (const auto& fc : superspecial_family_curves(p)) add(fc.curve);
    while (!queue.empty()) {
        const Genus2Curve& c = *queue.front();
        queue.pop_front();
        for (const auto& s : splittings(c))
            if (!delta(s).is_zero()) add(std::get<Genus2Curve>(codomain(c, s)));
    }

    const auto expected = n_counts(p);
    std::array<std::int64_t, 7> found{};
    for (const auto& [k, c] : vs.jacobians) {
        if (!is_superspecial(c)) throw std::logic_error("enumerated curve " + c.serialize() + " is not superspecial");
        ++found[static_cast<std::size_t>(ra_type(c))];
    }
    for (auto t : kAllRATypes) {
        auto i = static_cast<std::size_t>(t);
        if (found[i] != expected[i])
            throw std::logic_error("enumeration at p = " + std::to_string(p.value()) + ": RA type " +
                                   std::string(name(t)) + " has " + std::to_string(found[i]) + " curves, expected " +
                                   std::to_string(expected[i]));
    }
    auto h = class_numbers(p).h;
    if (static_cast<std::int64_t>(vs.products.size()) != h * (h + 1) / 2)
        throw std::logic_error("product count differs from h(h+1)/2");
    return vs;
}

// ---------------------------------------------------------------- graph

namespace {

void add_edges(IsogenyGraph& g, Vertex& v, const std::vector<SplittingOrbit>& orbits,
               const std::array<VertexKey, 15>& targets) {
    for (const auto& orb : orbits) {
        const VertexKey& to = targets[static_cast<std::size_t>(orb.members.front())];
        for (int m : orb.members)
            if (!(targets[static_cast<std::size_t>(m)] == to))
                throw std::logic_error("isomorphic splittings reach different vertices");
        if (!g.vertices.contains(to)) throw std::logic_error("edge leaves the vertex set: " + to.to_string());
        const int size = static_cast<int>(orb.members.size());
        (orb.decomposed ? v.signature.decomposed : v.signature.nondecomposed)[size]++;
        if (orb.decomposed) v.decomposed_splittings += size;
        Edge& e = g.edges[{v.key, to}];
        e.from = v.key;
        e.to = to;
        e.decomposed = orb.decomposed;
        e.raw_multiplicity += size;
        e.reduced_count += 1;
        e.class_sizes.push_back(size);
    }
}

}  // namespace

IsogenyGraph build_graph(const PrimeModulus& p) {
    VertexSet vs = enumerate_vertices(p);
    ProductCatalog catalog(p);
    GlueTable table(catalog);
    IsogenyGraph g;
    g.p = p.value();

    for (const auto& [k, c] : vs.jacobians) {
        table.add(c);
        Vertex v;
        v.key = VertexKey::of(c);
        v.curve = c;
        auto ra = reduced_automorphisms(c);
        v.ra = classify_group(ra);
        v.aut_order = 2 * static_cast<int>(ra.size());
        v.long_involutions = static_cast<int>(long_involutions(c).size());
        g.vertices.emplace(v.key, std::move(v));
    }
    for (const auto& e : vs.products) {
        Vertex v;
        v.key = VertexKey::of(e);
        v.product = e;
        v.shape = product_shape(e.first.aut_order(), e.second.aut_order(), e.self_product());
        v.aut_order = aut_order(v.shape);
        g.vertices.emplace(v.key, std::move(v));
    }

    std::size_t glued = 0;
    for (auto& [key, v] : g.vertices) {
        std::array<VertexKey, 15> targets;
        if (v.curve) {
            auto ss = splittings(*v.curve);
            for (std::size_t i = 0; i < 15; ++i) {
                auto image = codomain(*v.curve, ss[i]);
                targets[i] = std::holds_alternative<Genus2Curve>(image)
                                 ? VertexKey::of(std::get<Genus2Curve>(image))
                                 : VertexKey::of(std::get<ProductSurface>(image));
            }
            add_edges(g, v, orbit_decomposition(*v.curve), targets);
        } else {
            const auto& all = all_pairings();
            for (std::size_t i = 0; i < 15; ++i) {
                if (product_is_decomposed(*v.product, all[i])) {
                    targets[i] = VertexKey::of_j(product_decomposed_target(*v.product, all[i]));
                } else {
                    targets[i] = VertexKey::of(glue(table, *v.product, all[i]));
                    ++glued;
                }
            }
            add_edges(g, v, orbit_decomposition(*v.product), targets);
        }
    }
    if (glued != table.size())
        throw std::logic_error("glue table covers " + std::to_string(table.size()) +
                               " partitions but products have " + std::to_string(glued) + " non-decomposed ones");
    for (auto& [k, e] : g.edges) std::sort(e.class_sizes.begin(), e.class_sizes.end());
    return g;
}

// ---------------------------------------------------------------- verification

bool VerifyReport::all_pass() const {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

VerifyReport verify_counts(const IsogenyGraph& g) {
    const PrimeModulus pm(g.p);
    const CountReport counts = count_report(pm);
    VerifyReport r;
    r.p = g.p;
    auto check = [&](std::string name, std::int64_t expected, std::int64_t actual) {
        r.lines.push_back({std::move(name), std::to_string(expected), std::to_string(actual), expected == actual});
    };

    std::array<std::int64_t, 7> by_type{};
    std::int64_t jac_total = 0, jac_dec = 0, prod_nondec = 0, prod_dec = 0;
    std::int64_t bad_degree = 0, bad_prop44 = 0, bad_signature = 0;
    for (const auto& [k, v] : g.vertices) {
        int raw = 0;
        for (const Edge* e : g.out_edges(k)) {
            raw += e->raw_multiplicity;
            if (!v.is_product()) {
                jac_total += e->reduced_count;
                if (e->decomposed) jac_dec += e->reduced_count;
            } else {
                (e->decomposed ? prod_dec : prod_nondec) += e->reduced_count;
            }
        }
        if (raw != 15) ++bad_degree;
        if (v.is_product()) {
            if (!(v.signature == product_signature_table(v.shape))) ++bad_signature;
        } else {
            ++by_type[static_cast<std::size_t>(v.ra)];
            if (!(v.signature == orbit_signature_table(v.ra))) ++bad_signature;
            if (v.long_involutions != v.decomposed_splittings) ++bad_prop44;
        }
    }
    for (auto t : kAllRATypes)
        check("curves with RA = " + std::string(name(t)), counts.n[static_cast<std::size_t>(t)],
              by_type[static_cast<std::size_t>(t)]);
    check("superspecial curves", counts.n_total, static_cast<std::int64_t>(g.jacobian_count()));
    check("products of supersingular curves", counts.products(), static_cast<std::int64_t>(g.product_count()));
    check("vertices with raw out-degree != 15", 0, bad_degree);
    check("isogeny classes from Jacobians", counts.jacobian_total, jac_total);
    check("decomposed classes from Jacobians", counts.jacobian_decomposed, jac_dec);
    check("non-decomposed classes from products", counts.product_nondecomposed, prod_nondec);
    check("decomposed classes from products", counts.product_decomposed, prod_dec);
    check("decomposed from Jacobians minus non-decomposed from products", 0, jac_dec - prod_nondec);
    check("curves with long involutions != decomposed splittings", 0, bad_prop44);
    check("vertices with unexpected orbit signature", 0, bad_signature);

    std::int64_t one_way = 0, class_asym = 0, weight_asym = 0;
    for (const auto& [ft, e] : g.edges) {
        const Edge* back = g.edge(e.to, e.from);
        if (!back) {
            ++one_way;
            continue;
        }
        if (back->reduced_count != e.reduced_count) ++class_asym;
        if (e.raw_multiplicity * g.vertex(e.to).aut_order != back->raw_multiplicity * g.vertex(e.from).aut_order)
            ++weight_asym;
    }
    check("edges without a reverse edge", 0, one_way);
    check("edges whose reverse has a different class count", 0, class_asym);
    check("edges violating m(A,B)|Aut B| = m(B,A)|Aut A|", 0, weight_asym);
    return r;
}

// ---------------------------------------------------------------- export

std::string export_dot(const IsogenyGraph& g) {
    std::map<VertexKey, std::string> ids;
    for (const auto& [k, v] : g.vertices) ids.emplace(k, "v" + std::to_string(ids.size()));
    std::ostringstream os;
    os << "digraph superspecial_p" << g.p << " {\n";
    os << "  label=\"" << g.field().context_line() << "\";\n";
    for (const auto& [k, v] : g.vertices)
        os << "  " << ids.at(k) << " [label=\"" << v.type_label() << "\", tooltip=\"" << k.to_string()
           << "\", shape=" << (v.is_product() ? "box" : "ellipse") << "];\n";
    for (const auto& [ft, e] : g.edges)
        for (int size : e.class_sizes)
            os << "  " << ids.at(e.from) << " -> " << ids.at(e.to) << " [label=\"" << size << "\""
               << (e.decomposed ? ", style=dashed" : "") << "];\n";
    os << "}\n";
    return os.str();
}

namespace {

json signature_json(const std::map<int, int>& m) {
    json a = json::array();
    for (const auto& [size, count] : m) a.push_back({size, count});
    return a;
}

std::map<int, int> signature_from(const json& a) {
    std::map<int, int> m;
    for (const auto& e : a) m[e.at(0).get<int>()] = e.at(1).get<int>();
    return m;
}

}  // namespace

std::string export_json(const IsogenyGraph& g) {
    json root;
    root["p"] = g.p;
    root["version"] = kLibraryVersion;
    root["context"] = g.field().context_line();
    json vs = json::array();
    for (const auto& [k, v] : g.vertices) {
        json o;
        o["key"] = k.to_string();
        o["kind"] = v.is_product() ? "product" : "jacobian";
        o["model"] = v.model();
        o["aut_order"] = v.aut_order;
        if (v.is_product()) {
            o["aut_pair"] = {v.product->first.aut_order(), v.product->second.aut_order()};
            o["shape"] = std::string(name(v.shape));
        } else {
            o["ra_type"] = std::string(name(v.ra));
            o["long_involutions"] = v.long_involutions;
        }
        o["decomposed_splittings"] = v.decomposed_splittings;
        o["signature"] = {{"nondecomposed", signature_json(v.signature.nondecomposed)},
                          {"decomposed", signature_json(v.signature.decomposed)}};
        vs.push_back(std::move(o));
    }
    root["vertices"] = std::move(vs);
    json es = json::array();
    for (const auto& [ft, e] : g.edges)
        es.push_back({{"from", e.from.to_string()},
                      {"to", e.to.to_string()},
                      {"raw_multiplicity", e.raw_multiplicity},
                      {"reduced_count", e.reduced_count},
                      {"decomposed", e.decomposed},
                      {"class_sizes", e.class_sizes}});
    root["edges"] = std::move(es);
    return root.dump(2) + "\n";
}

IsogenyGraph import_json(std::string_view text) {
    json root = json::parse(text);
    IsogenyGraph g;
    g.p = root.at("p").get<std::uint64_t>();
    const Field& f = Field::of(g.p);
    for (const auto& o : root.at("vertices")) {
        Vertex v;
        v.key = VertexKey::parse(f, o.at("key").get<std::string>());
        v.aut_order = o.at("aut_order").get<int>();
        v.decomposed_splittings = o.at("decomposed_splittings").get<int>();
        v.signature.nondecomposed = signature_from(o.at("signature").at("nondecomposed"));
        v.signature.decomposed = signature_from(o.at("signature").at("decomposed"));
        const auto model = o.at("model").get<std::string>();
        if (v.key.product) {
            auto lambdas = Genus2Curve::parse_poly(f, std::string_view(model).substr(1, model.size() - 2));
            v.product = ProductSurface{EllipticCurve(lambdas.coeff(0)), EllipticCurve(lambdas.coeff(1))};
            const auto shape = o.at("shape").get<std::string>();
            bool found = false;
            for (auto s : {ProductShape::Generic, ProductShape::SelfGeneric, ProductShape::WithE2,
                           ProductShape::WithE3, ProductShape::E2E2, ProductShape::E3E3, ProductShape::E2E3})
                if (name(s) == shape) {
                    v.shape = s;
                    found = true;
                }
            if (!found) throw std::invalid_argument("unknown product shape " + shape);
        } else {
            v.curve = Genus2Curve::parse(f, model);
            auto ra = parse_ra_type(o.at("ra_type").get<std::string>());
            if (!ra) throw std::invalid_argument("unknown RA type in graph file");
            v.ra = *ra;
            v.long_involutions = o.at("long_involutions").get<int>();
        }
        g.vertices.emplace(v.key, std::move(v));
    }
    for (const auto& o : root.at("edges")) {
        Edge e;
        e.from = VertexKey::parse(f, o.at("from").get<std::string>());
        e.to = VertexKey::parse(f, o.at("to").get<std::string>());
        e.raw_multiplicity = o.at("raw_multiplicity").get<int>();
        e.reduced_count = o.at("reduced_count").get<int>();
        e.decomposed = o.at("decomposed").get<bool>();
        e.class_sizes = o.at("class_sizes").get<std::vector<int>>();
        g.edges.emplace(std::pair{e.from, e.to}, std::move(e));
    }
    return g;
}

IsogenyGraph load_or_build(const PrimeModulus& p, const std::filesystem::path& cache_dir) {
    const auto file =
        cache_dir / ("graph_p" + std::to_string(p.value()) + "_v" + std::string(kLibraryVersion) + ".json");
    if (std::ifstream in(file); in) {
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            IsogenyGraph g = import_json(buf.str());
            if (g.p == p.value()) return g;
        } catch (const std::exception&) {
            // fall through and rebuild a stale or corrupt cache entry
        }
    }
    IsogenyGraph g = build_graph(p);
    std::filesystem::create_directories(cache_dir);
    std::ofstream(file) << export_json(g);
    return g;
}

}  // namespace ssg
