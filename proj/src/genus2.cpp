#include "ssg/genus2.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ssg/elliptic.hpp"

namespace ssg {

// ---------------------------------------------------------------- curves

Genus2Curve Genus2Curve::from_poly(const Poly& f) {
    if (f.degree() != 5 && f.degree() != 6)
        throw DomainError("genus-2 model needs degree 5 or 6, got " + std::to_string(f.degree()));
    auto roots = poly_roots_in_fp2(f);
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) throw DomainError("f is not squarefree");
    if (static_cast<int>(roots.size()) != f.degree())
        throw DomainError("branch points of " + f.to_string() + " escape F_p^2");
    std::vector<P1Point> branch;
    for (const auto& r : roots) branch.push_back(P1Point::finite(r));
    if (f.degree() == 5) branch.push_back(P1Point::at_infinity(f.field()));
    return with_branch_points(f, std::move(branch));
}

Genus2Curve Genus2Curve::with_branch_points(const Poly& f, std::vector<P1Point> branch) {
    if (branch.size() != 6) throw DomainError("a genus-2 curve has exactly 6 branch points");
    std::sort(branch.begin(), branch.end());
    if (std::adjacent_find(branch.begin(), branch.end()) != branch.end()) throw DomainError("f is not squarefree");
    const bool inf = branch[5].infinity;
    if (f.degree() != (inf ? 5 : 6)) throw DomainError("branch set does not match deg f");
    for (const auto& b : branch)
        if (!b.infinity && !f(b.x).is_zero()) throw DomainError("branch point " + b.to_string() + " is not a root of f");
    std::array<P1Point, 6> arr;
    std::copy(branch.begin(), branch.end(), arr.begin());
    return Genus2Curve(f, arr);
}

Genus2Curve Genus2Curve::transformed(const MobiusMap& m) const {
    MobiusMap inv = m.inverse();
    std::vector<P1Point> b;
    for (const auto& q : branch_) b.push_back(inv(q));
    return with_branch_points(transform_sextic(f_, m), std::move(b));
}

Genus2Curve Genus2Curve::sextic_model() const {
    if (!branch_at_infinity()) return *this;
    const Field& fld = field();
    for (std::uint64_t c = 0; c < fld.p(); ++c) {
        P1Point cand = P1Point::finite(fld.from_int(static_cast<std::int64_t>(c)));
        if (std::find(branch_.begin(), branch_.end(), cand) != branch_.end()) continue;
        return transformed(MobiusMap(cand.x, fld.one(), fld.one(), fld.zero()));
    }
    throw DomainError("no finite non-branch point in F_p");
}

Poly Genus2Curve::parse_poly(const Field& field, std::string_view text) {
    std::vector<Fp2> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        coeffs.push_back(Fp2::parse(field, piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Poly(field, std::move(coeffs));
}

Genus2Curve Genus2Curve::parse(const Field& field, std::string_view text) {
    return from_poly(parse_poly(field, text));
}

// ---------------------------------------------------------------- automorphisms

int group_order(RAType t) {
    switch (t) {
        case RAType::Trivial: return 1;
        case RAType::Z2: return 2;
        case RAType::S3: return 6;
        case RAType::V4: return 4;
        case RAType::D12: return 12;
        case RAType::S4: return 24;
        case RAType::Z5: return 5;
    }
    return 0;
}

std::string_view name(RAType t) {
    switch (t) {
        case RAType::Trivial: return "0";
        case RAType::Z2: return "Z2";
        case RAType::S3: return "S3";
        case RAType::V4: return "V4";
        case RAType::D12: return "D12";
        case RAType::S4: return "S4";
        case RAType::Z5: return "Z5";
    }
    return "?";
}

std::optional<RAType> parse_ra_type(std::string_view s) {
    for (auto t : kAllRATypes)
        if (name(t) == s) return t;
    return std::nullopt;
}

std::vector<MobiusMap> reduced_automorphisms(const Genus2Curve& c) { return maps_between(c.branch(), c.branch()); }

namespace {

bool commutative(const std::vector<MobiusMap>& g) {
    for (const auto& a : g)
        for (const auto& b : g)
            if (!(a.compose(b) == b.compose(a))) return false;
    return true;
}

}  // namespace

RAType classify_group(const std::vector<MobiusMap>& group) {
    switch (group.size()) {
        case 1: return RAType::Trivial;
        case 2: return RAType::Z2;
        case 4:
            for (const auto& g : group)
                if (g.order() == 4) throw std::logic_error("reduced automorphism group is cyclic of order 4");
            return RAType::V4;
        case 5: return RAType::Z5;
        case 6:
            if (commutative(group)) throw std::logic_error("reduced automorphism group is cyclic of order 6");
            return RAType::S3;
        case 12:
            if (commutative(group)) throw std::logic_error("reduced automorphism group of order 12 is abelian");
            return RAType::D12;
        case 24: return RAType::S4;
        default:
            throw std::logic_error("unexpected reduced automorphism group order " + std::to_string(group.size()));
    }
}

RAType ra_type(const Genus2Curve& c) { return classify_group(reduced_automorphisms(c)); }

namespace {

std::pair<std::vector<MobiusMap>, std::vector<MobiusMap>> split_involutions(const Genus2Curve& c) {
    std::vector<MobiusMap> longs, shorts;
    for (const auto& g : reduced_automorphisms(c)) {
        if (g.order() != 2) continue;
        int fixed = 0;
        for (const auto& b : c.branch())
            if (g(b) == b) ++fixed;
        if (fixed == 0)
            longs.push_back(g);
        else if (fixed == 2)
            shorts.push_back(g);
        else
            throw std::logic_error("involution " + g.to_string() + " fixes " + std::to_string(fixed) +
                                   " branch points");
    }
    return {longs, shorts};
}

}  // namespace

std::vector<MobiusMap> long_involutions(const Genus2Curve& c) { return split_involutions(c).first; }
std::vector<MobiusMap> short_involutions(const Genus2Curve& c) { return split_involutions(c).second; }

// ---------------------------------------------------------------- Cartier-Manin

Poly sextic_form(const Poly& f) {
    if (f.degree() == 6) return f;
    if (f.degree() != 5) throw DomainError("expected a quintic or sextic");
    const Field& fld = f.field();
    for (std::uint64_t c = 0; c < fld.p(); ++c) {
        Fp2 cc = fld.from_int(static_cast<std::int64_t>(c));
        if (f(cc).is_zero()) continue;
        return transform_sextic(f, MobiusMap(cc, fld.one(), fld.one(), fld.zero()));
    }
    throw DomainError("quintic vanishes on all of F_p");
}

Matrix2 cartier_manin(const Poly& f) {
    Poly g = sextic_form(f);
    const std::uint64_t p = g.field().p();
    Poly power = g.pow_truncated((p - 1) / 2, 2 * p);
    Matrix2 m;
    for (std::uint64_t i = 1; i <= 2; ++i)
        for (std::uint64_t j = 1; j <= 2; ++j) m[i - 1][j - 1] = power.coeff(i * p - j);
    return m;
}

Matrix2 cartier_manin(const Genus2Curve& c) { return cartier_manin(c.sextic_model().f()); }

bool is_zero(const Matrix2& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

bool is_superspecial(const Poly& f) { return is_zero(cartier_manin(f)); }
bool is_superspecial(const Genus2Curve& c) { return is_zero(cartier_manin(c)); }

// ---------------------------------------------------------------- invariants

namespace {

using Pairing = std::array<std::array<int, 2>, 3>;

std::vector<Pairing> all_pairings() {
    std::vector<Pairing> out;
    for (int a = 1; a < 6; ++a) {
        std::vector<int> rest;
        for (int k = 1; k < 6; ++k)
            if (k != a) rest.push_back(k);
        for (int b = 1; b < 4; ++b) {
            std::vector<int> last;
            for (int k = 1; k < 4; ++k)
                if (k != b) last.push_back(rest[static_cast<std::size_t>(k)]);
            out.push_back({{{0, a}, {rest[0], rest[static_cast<std::size_t>(b)]}, {last[0], last[1]}}});
        }
    }
    return out;
}

// Splits of {0..5} into two triples, the first containing 0.
std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> triple_splits() {
    std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> out;
    for (int i = 1; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            std::array<int, 3> a{0, i, j}, b{};
            int n = 0;
            for (int k = 1; k < 6; ++k)
                if (k != i && k != j) b[static_cast<std::size_t>(n++)] = k;
            out.push_back({a, b});
        }
    return out;
}

}  // namespace

std::array<Fp2, 4> igusa_clebsch(const Genus2Curve& curve) {
    Genus2Curve c = curve.sextic_model();
    const Field& fld = c.field();
    std::array<Fp2, 6> r;
    for (std::size_t i = 0; i < 6; ++i) r[i] = c.branch()[i].x;
    std::array<std::array<Fp2, 6>, 6> d2;  // squared differences
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) d2[i][j] = (r[i] - r[j]).square();
    auto D = [&](int i, int j) { return d2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };

    Fp2 s2 = fld.zero(), s4 = fld.zero(), s6 = fld.zero(), s10 = fld.one();
    for (const auto& pr : all_pairings()) s2 += D(pr[0][0], pr[0][1]) * D(pr[1][0], pr[1][1]) * D(pr[2][0], pr[2][1]);
    for (const auto& [a, b] : triple_splits()) {
        Fp2 tri = D(a[0], a[1]) * D(a[1], a[2]) * D(a[2], a[0]) * D(b[0], b[1]) * D(b[1], b[2]) * D(b[2], b[0]);
        s4 += tri;
        std::array<int, 3> perm{0, 1, 2};
        do {
            s6 += tri * D(a[0], b[static_cast<std::size_t>(perm[0])]) * D(a[1], b[static_cast<std::size_t>(perm[1])]) *
                  D(a[2], b[static_cast<std::size_t>(perm[2])]);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) s10 *= D(i, j);
    Fp2 a0 = c.f().leading(), a2 = a0 * a0;
    return {a2 * s2, a2 * a2 * s4, a2 * a2 * a2 * s6, a2.pow(5) * s10};
}

IgusaKey igusa_key(const Genus2Curve& c) {
    auto [i2, i4, i6, i10] = igusa_clebsch(c);
    const Field& f = c.field();
    if (i10.is_zero()) throw DomainError("vanishing discriminant invariant: curve is singular");
    IgusaKey k;
    k.values = {f.zero(), f.zero(), f.zero()};
    if (!i2.is_zero()) {
        Fp2 u = i2.inv();
        k.shape = 0;
        k.values = {i4 * u * u, i6 * u.pow(3), i10 * u.pow(5)};
    } else if (!i4.is_zero()) {
        Fp2 u = i4.inv();
        k.shape = 1;
        k.values = {i6 * i6 * u.pow(3), i10 * i10 * u.pow(5), i6 * i10 * u.pow(4)};
    } else if (!i6.is_zero()) {
        k.shape = 2;
        k.values[0] = i10.pow(3) * i6.inv().pow(5);
    } else {
        k.shape = 3;
    }
    return k;
}

std::string IgusaKey::to_string() const {
    std::ostringstream os;
    os << "J" << shape << "[" << values[0].to_string() << "," << values[1].to_string() << ","
       << values[2].to_string() << "]";
    return os.str();
}

IgusaKey IgusaKey::parse(const Field& f, std::string_view text) {
    if (text.size() < 5 || text[0] != 'J' || text[2] != '[' || text.back() != ']')
        throw std::invalid_argument("malformed Igusa key: " + std::string(text));
    IgusaKey k;
    k.shape = text[1] - '0';
    auto body = text.substr(3, text.size() - 4);
    auto p = Genus2Curve::parse_poly(f, body);
    for (std::size_t i = 0; i < 3; ++i) k.values[i] = p.coeff(i);
    return k;
}

std::vector<MobiusMap> isomorphisms(const Genus2Curve& a, const Genus2Curve& b) {
    return maps_between(a.branch(), b.branch());
}

bool is_isomorphic_mobius(const Genus2Curve& a, const Genus2Curve& b) { return !isomorphisms(a, b).empty(); }

bool is_isomorphic(const Genus2Curve& a, const Genus2Curve& b) {
    bool by_maps = is_isomorphic_mobius(a, b);
    bool by_keys = igusa_key(a) == igusa_key(b);
    if (by_maps != by_keys) throw std::logic_error("Igusa keys disagree with Mobius search");
    return by_maps;
}

// ---------------------------------------------------------------- families

namespace {

Poly offset_binomial_poly(const PrimeModulus& pm, std::uint64_t offset, std::uint64_t last) {
    const Field& f = Field::of(pm);
    const std::uint64_t p = pm.value(), n = (p - 1) / 2;
    std::vector<Fp2> c;
    for (std::uint64_t l = 0; l <= last; ++l)
        c.push_back(f.make(binomial_mod(n, offset + l, p) * binomial_mod(n, l, p) % p, 0));
    return Poly(f, std::move(c));
}

}  // namespace

Poly g_polynomial(const PrimeModulus& p) { return offset_binomial_poly(p, (p.value() + 1) / 6, p.value() / 3); }
Poly h_polynomial(const PrimeModulus& p) { return offset_binomial_poly(p, (p.value() + 1) / 4, p.value() / 4); }

std::string_view name(NormalForm n) {
    switch (n) {
        case NormalForm::S3Family: return "(x^3-1)(x^3-alpha)";
        case NormalForm::V4Family: return "x(x^2-1)(x^2-beta)";
        case NormalForm::D12: return "x^6-1";
        case NormalForm::S4: return "x(x^4-1)";
    }
    return "?";
}

Poly s3_family_poly(const Fp2& alpha) {
    const Field& f = alpha.field();
    return Poly(f, {alpha, f.zero(), f.zero(), -(alpha + f.one()), f.zero(), f.zero(), f.one()});
}

Poly v4_family_poly(const Fp2& beta) {
    const Field& f = beta.field();
    return Poly(f, {f.zero(), beta, f.zero(), -(beta + f.one()), f.zero(), f.one()});
}

Poly d12_poly(const Field& f) { return Poly::from_ints(f, {-1, 0, 0, 0, 0, 0, 1}); }
Poly s4_poly(const Field& f) { return Poly::from_ints(f, {0, -1, 0, 0, 0, 1}); }

std::vector<FamilyCurve> superspecial_family_curves(const PrimeModulus& pm) {
    const Field& f = Field::of(pm);
    std::vector<FamilyCurve> out;
    auto distinct_roots = [](const Poly& g) {
        auto r = g.is_zero() ? std::vector<Fp2>{} : poly_roots_in_fp2(g);
        r.erase(std::unique(r.begin(), r.end()), r.end());
        return r;
    };
    for (const auto& alpha : distinct_roots(g_polynomial(pm))) {
        if (alpha.is_zero() || alpha.is_one()) continue;
        out.push_back({NormalForm::S3Family, alpha, Genus2Curve::from_poly(s3_family_poly(alpha))});
    }
    for (const auto& beta : distinct_roots(h_polynomial(pm))) {
        if (beta.is_zero() || beta.is_one()) continue;
        out.push_back({NormalForm::V4Family, beta, Genus2Curve::from_poly(v4_family_poly(beta))});
    }
    const std::uint64_t p = pm.value();
    if (p % 6 == 5) out.push_back({NormalForm::D12, f.zero(), Genus2Curve::from_poly(d12_poly(f))});
    if (p % 8 == 5 || p % 8 == 7) out.push_back({NormalForm::S4, f.zero(), Genus2Curve::from_poly(s4_poly(f))});
    return out;
}

Genus2Curve curve_ab(const Fp2& a, const Fp2& b) {
    const Field& f = a.field();
    Poly poly = Poly(f, {-f.one(), f.zero(), f.one()}) * Poly(f, {-a, f.zero(), f.one()}) *
                Poly(f, {-b, f.zero(), f.one()});
    auto sa = sqrt_in_fp2(a), sb = sqrt_in_fp2(b);
    if (!sa || !sb) return Genus2Curve::from_poly(poly);
    std::vector<P1Point> branch{P1Point::finite(f.one()), P1Point::finite(-f.one()), P1Point::finite(*sa),
                                P1Point::finite(-*sa),    P1Point::finite(*sb),     P1Point::finite(-*sb)};
    return Genus2Curve::with_branch_points(poly, std::move(branch));
}

std::pair<Fp2, Fp2> ab_to_lambda_mu(const Fp2& a, const Fp2& b) {
    const Field& f = a.field();
    Fp2 lambda = (b - a) / (f.one() - a);
    Fp2 mu = (b - a) / (b * (f.one() - a));
    return {lambda, mu};
}

std::pair<Fp2, Fp2> lambda_mu_to_ab(const Fp2& lambda, const Fp2& mu) {
    const Field& f = lambda.field();
    Fp2 b = lambda / mu;
    Fp2 a = lambda * (mu - f.one()) / (mu * (lambda - f.one()));
    return {a, b};
}

PairSeeds curves_from_supersingular_pairs(const PrimeModulus& p) {
    PairSeeds seeds;
    auto lambdas = supersingular_lambdas(p);
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        for (std::size_t k = i + 1; k < lambdas.size(); ++k) {
            auto [a, b] = lambda_mu_to_ab(lambdas[i], lambdas[k]);
            if (a.is_zero() || a.is_one() || b.is_zero() || b.is_one() || a == b) {
                seeds.skipped.push_back("lambda=" + lambdas[i].to_string() + " mu=" + lambdas[k].to_string());
                continue;
            }
            seeds.curves.push_back(curve_ab(a, b));
        }
    return seeds;
}

}  // namespace ssg
