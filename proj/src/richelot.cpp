#include "ssg/richelot.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ssg {

// ---------------------------------------------------------------- pairings

namespace {

std::array<Pairing, 15> make_pairings() {
    std::array<Pairing, 15> out{};
    std::size_t n = 0;
    for (int a = 1; a < 6; ++a) {
        std::vector<int> rest;
        for (int k = 1; k < 6; ++k)
            if (k != a) rest.push_back(k);
        for (std::size_t b = 1; b < 4; ++b) {
            std::vector<int> last;
            for (std::size_t k = 1; k < 4; ++k)
                if (k != b) last.push_back(rest[k]);
            out[n++] = canonical({{{0, a}, {rest[0], rest[b]}, {last[0], last[1]}}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const std::array<Pairing, 15>& all_pairings() {
    static const std::array<Pairing, 15> pairings = make_pairings();
    return pairings;
}

Pairing canonical(Pairing p) {
    for (auto& pr : p)
        if (pr[0] > pr[1]) std::swap(pr[0], pr[1]);
    std::sort(p.begin(), p.end());
    return p;
}

int pairing_index(const Pairing& p) {
    const auto& all = all_pairings();
    auto c = canonical(p);
    auto it = std::lower_bound(all.begin(), all.end(), c);
    if (it == all.end() || *it != c) throw std::invalid_argument("not a partition of 0..5 into pairs");
    return static_cast<int>(it - all.begin());
}

Pairing relabel(std::span<const int> perm, const Pairing& p) {
    Pairing q;
    for (std::size_t i = 0; i < 3; ++i)
        q[i] = {perm[static_cast<std::size_t>(p[i][0])], perm[static_cast<std::size_t>(p[i][1])]};
    return canonical(q);
}

// ---------------------------------------------------------------- Jacobian side

std::vector<QuadraticSplitting> splittings(const Genus2Curve& c) {
    const Field& f = c.field();
    auto quadratic = [&](std::array<int, 2> pr) {
        const P1Point& u = c.branch()[static_cast<std::size_t>(pr[0])];
        const P1Point& v = c.branch()[static_cast<std::size_t>(pr[1])];
        if (u.infinity) return Poly(f, {-v.x, f.one()});
        if (v.infinity) return Poly(f, {-u.x, f.one()});
        return Poly(f, {u.x * v.x, -(u.x + v.x), f.one()});
    };
    std::vector<QuadraticSplitting> out;
    for (const auto& p : all_pairings()) out.push_back({p, {quadratic(p[0]), quadratic(p[1]), quadratic(p[2])}});
    return out;
}

namespace {

Fp2 det3(const std::array<Poly, 3>& g) {
    auto m = [&](std::size_t r, std::size_t c) { return g[r].coeff(c); };
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::vector<P1Point> quadratic_branch(const Poly& h) {
    if (h.degree() < 1) throw std::logic_error("degenerate Richelot factor " + h.to_string());
    auto roots = small_degree_roots(h);
    if (!roots) throw DomainError("codomain branch points escape F_p^2");
    std::vector<P1Point> out;
    for (const auto& r : *roots) out.push_back(P1Point::finite(r));
    if (h.degree() == 1) out.push_back(P1Point::at_infinity(h.field()));
    return out;
}

}  // namespace

Fp2 delta(const QuadraticSplitting& s) { return det3(s.quadratics); }

std::array<Fp2, 2> ProductSurface::j_pair() const {
    std::array<Fp2, 2> j{first.j(), second.j()};
    if (j[1] < j[0]) std::swap(j[0], j[1]);
    return j;
}

PPAS codomain(const Genus2Curve& c, const QuadraticSplitting& s) {
    const Field& f = c.field();
    std::array<Poly, 3> g = s.quadratics;
    if (!delta(s).is_zero()) {
        g[0] = g[0] * c.f().leading();
        const Fp2 d = det3(g);
        std::array<Poly, 3> h{Poly(f), Poly(f), Poly(f)};
        for (std::size_t i = 0; i < 3; ++i) {
            const Poly& gj = g[(i + 1) % 3];
            const Poly& gk = g[(i + 2) % 3];
            h[i] = gj.derivative() * gk - gj * gk.derivative();
        }
        std::vector<P1Point> branch;
        for (const auto& hi : h) {
            auto b = quadratic_branch(hi);
            branch.insert(branch.end(), b.begin(), b.end());
        }
        Poly image = h[0] * h[1] * h[2] * d.inv();
        try {
            return Genus2Curve::with_branch_points(image, std::move(branch));
        } catch (const DomainError& e) {
            throw std::logic_error(std::string("Richelot codomain is singular: ") + e.what());
        }
    }
    // The quadratics span a pencil; G3 is proportional to G1 - t3 G2. The
    // elliptic factors are the double covers of the pencil line branched over
    // 0 (G1), infinity (G2), t3 (G3) and one of the two values where G1 - c G2
    // becomes a square.
    const P1Point& r = c.branch()[static_cast<std::size_t>(s.pairs[2][0])];
    const Fp2 root = r.infinity ? c.branch()[static_cast<std::size_t>(s.pairs[2][1])].x : r.x;
    const Fp2 t3 = g[0](root) / g[1](root);
    auto coef = [&](std::size_t i, std::size_t k) { return g[i].coeff(k); };
    const Fp2 a1 = coef(0, 2), b1 = coef(0, 1), c1 = coef(0, 0);
    const Fp2 a2 = coef(1, 2), b2 = coef(1, 1), c2 = coef(1, 0);
    Poly disc(f, {b1 * b1 - a1 * c1 * 4, (a1 * c2 + a2 * c1) * 4 - b1 * b2 * 2, b2 * b2 - a2 * c2 * 4});
    auto crit = small_degree_roots(disc);
    if (!crit || crit->size() != 2 || (*crit)[0] == (*crit)[1])
        throw DomainError("decomposed codomain has no rational critical values");
    const Fp2 l1 = f.one() - (*crit)[0] / t3, l2 = f.one() - (*crit)[1] / t3;
    return ProductSurface{EllipticCurve(l1), EllipticCurve(l2)};
}

int dual_splitting(const Genus2Curve& c, const Genus2Curve& image) {
    const IgusaKey target = igusa_key(c);
    auto ss = splittings(image);
    for (std::size_t i = 0; i < ss.size(); ++i) {
        if (delta(ss[i]).is_zero()) continue;
        auto back = std::get<Genus2Curve>(codomain(image, ss[i]));
        if (igusa_key(back) == target && is_isomorphic_mobius(back, c)) return static_cast<int>(i);
    }
    throw std::logic_error("no dual splitting found");
}

// ---------------------------------------------------------------- product side

bool is_all_mixed(const Pairing& p) {
    return std::all_of(p.begin(), p.end(), [](const auto& pr) { return (pr[0] < 3) != (pr[1] < 3); });
}

std::vector<std::array<int, 6>> product_symmetries(const ProductSurface& e) {
    std::vector<std::array<int, 6>> out;
    const auto ta = e.first.two_torsion(), tb = e.second.two_torsion();
    for (const auto& sa : two_torsion_symmetries(ta))
        for (const auto& sb : two_torsion_symmetries(tb))
            out.push_back({sa[0], sa[1], sa[2], 3 + sb[0], 3 + sb[1], 3 + sb[2]});
    if (e.self_product())
        for (const auto& u : two_torsion_isomorphisms(ta, tb))
            for (const auto& v : two_torsion_isomorphisms(tb, ta))
                out.push_back({3 + u[0], 3 + u[1], 3 + u[2], v[0], v[1], v[2]});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// For an all-mixed pairing, psi[i] = partner of label i, shifted into 0..2.
Perm3 mixed_bijection(const Pairing& p) {
    Perm3 psi{};
    for (const auto& pr : p) psi[static_cast<std::size_t>(pr[0])] = pr[1] - 3;
    return psi;
}

}  // namespace

bool product_is_decomposed(const ProductSurface& e, const Pairing& s) {
    auto c = canonical(s);
    if (!is_all_mixed(c)) return true;
    if (!e.self_product()) return false;
    auto isos = two_torsion_isomorphisms(e.first.two_torsion(), e.second.two_torsion());
    return std::find(isos.begin(), isos.end(), mixed_bijection(c)) != isos.end();
}

std::array<Fp2, 2> product_decomposed_target(const ProductSurface& e, const Pairing& s) {
    if (!product_is_decomposed(e, s)) throw DomainError("partition is not decomposed");
    auto c = canonical(s);
    if (is_all_mixed(c)) return e.j_pair();
    for (const auto& pr : c) {
        if ((pr[0] < 3) == (pr[1] < 3)) continue;
        std::array<Fp2, 2> j{two_isogenous_j(e.first.two_torsion(), pr[0]),
                             two_isogenous_j(e.second.two_torsion(), pr[1] - 3)};
        if (j[1] < j[0]) std::swap(j[0], j[1]);
        return j;
    }
    throw std::logic_error("unreachable: decomposed partition without a mixed pair");
}

ProductCatalog::ProductCatalog(const PrimeModulus& p) {
    for (const auto& cls : supersingular_classes(p)) by_j_.emplace(cls.j, cls.representative());
}

const EllipticCurve& ProductCatalog::curve(const Fp2& j) const {
    auto it = by_j_.find(j);
    if (it == by_j_.end()) throw std::logic_error("j = " + j.to_string() + " is not supersingular");
    return it->second;
}

ProductSurface ProductCatalog::product(const Fp2& j1, const Fp2& j2) const {
    if (j2 < j1) return ProductSurface{curve(j2), curve(j1)};
    return ProductSurface{curve(j1), curve(j2)};
}

std::vector<ProductSurface> ProductCatalog::all_products() const {
    std::vector<ProductSurface> out;
    for (auto a = by_j_.begin(); a != by_j_.end(); ++a)
        for (auto b = a; b != by_j_.end(); ++b) out.push_back(ProductSurface{a->second, b->second});
    return out;
}

void GlueTable::add(const Genus2Curve& c) {
    const IgusaKey key = igusa_key(c);
    for (const auto& s : splittings(c)) {
        if (!delta(s).is_zero()) continue;
        const auto image = std::get<ProductSurface>(codomain(c, s));
        const ProductSurface canon = catalog_->product(image.first.j(), image.second.j());
        const std::array<const EllipticCurve*, 2> slots{&canon.first, &canon.second};
        for (int first_slot = 0; first_slot < 2; ++first_slot) {
            const EllipticCurve& to_first = *slots[static_cast<std::size_t>(first_slot)];
            const EllipticCurve& to_second = *slots[static_cast<std::size_t>(1 - first_slot)];
            if (to_first.j() != image.first.j() || to_second.j() != image.second.j()) continue;
            const int off1 = 3 * first_slot, off2 = 3 * (1 - first_slot);
            for (const auto& u : two_torsion_isomorphisms(image.first.two_torsion(), to_first.two_torsion()))
                for (const auto& v : two_torsion_isomorphisms(image.second.two_torsion(), to_second.two_torsion())) {
                    Pairing p;
                    for (std::size_t i = 0; i < 3; ++i) p[i] = {off1 + u[i], off2 + v[i]};
                    Key k{canon.first.j(), canon.second.j(), pairing_index(p)};
                    auto [it, fresh] = table_.try_emplace(k, key, c);
                    if (!fresh && !(it->second.first == key))
                        throw std::logic_error("two non-isomorphic curves glue along the same partition");
                }
        }
    }
}

std::optional<Genus2Curve> GlueTable::find(const ProductSurface& e, const Pairing& s) const {
    auto it = table_.find(Key{e.first.j(), e.second.j(), pairing_index(s)});
    if (it == table_.end()) return std::nullopt;
    return it->second.second;
}

Genus2Curve glue(const GlueTable& table, const ProductSurface& e, const Pairing& s) {
    if (product_is_decomposed(e, s)) throw DomainError("cannot glue along a decomposed partition");
    auto c = table.find(e, s);
    if (!c) throw std::logic_error("no registered Jacobian glues along this partition");
    return *c;
}

// ---------------------------------------------------------------- orbits

namespace {

template <class Perms, class Decomposed>
std::vector<SplittingOrbit> orbits(const Perms& group, Decomposed decomposed) {
    std::vector<SplittingOrbit> out;
    std::array<bool, 15> seen{};
    const auto& all = all_pairings();
    for (int i = 0; i < 15; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::set<int> members;
        for (const auto& g : group) members.insert(pairing_index(relabel(g, all[static_cast<std::size_t>(i)])));
        for (int m : members) seen[static_cast<std::size_t>(m)] = true;
        out.push_back({std::vector<int>(members.begin(), members.end()), decomposed(i)});
    }
    return out;
}

}  // namespace

std::vector<SplittingOrbit> orbit_decomposition(const Genus2Curve& c) {
    std::vector<std::vector<int>> perms;
    for (const auto& g : reduced_automorphisms(c)) perms.push_back(*induced_permutation(g, c.branch()));
    auto ss = splittings(c);
    return orbits(perms, [&](int i) { return delta(ss[static_cast<std::size_t>(i)]).is_zero(); });
}

std::vector<SplittingOrbit> orbit_decomposition(const ProductSurface& e) {
    const auto& all = all_pairings();
    return orbits(product_symmetries(e),
                  [&](int i) { return product_is_decomposed(e, all[static_cast<std::size_t>(i)]); });
}

}  // namespace ssg
