#include "ssg/counting.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/rational.hpp>

namespace ssg {

namespace {

using Q = boost::rational<std::int64_t>;

struct Symbols {
    std::int64_t p, e1, e2, e3;
    bool four_mod_five;
};

Symbols symbols(const PrimeModulus& pm) {
    const std::uint64_t p = pm.value();
    return {static_cast<std::int64_t>(p), 1 - legendre_symbol(-1, p), 1 - legendre_symbol(-2, p),
            1 - legendre_symbol(-3, p), p % 5 == 4};
}

std::int64_t integral(const Q& q, const char* what, std::int64_t p) {
    if (q.denominator() != 1 || q.numerator() < 0)
        throw std::logic_error(std::string(what) + " is not a non-negative integer at p = " + std::to_string(p));
    return q.numerator();
}

}  // namespace

std::array<std::int64_t, 7> n_counts(const PrimeModulus& pm) {
    auto [p, e1, e2, e3, five] = symbols(pm);
    std::array<Q, 7> q{
        Q((p - 1) * (p * p - 35 * p + 346), 2880) - Q(e1, 32) - Q(e2, 8) - Q(e3, 9) - (five ? Q(1, 5) : Q(0)),
        Q((p - 1) * (p - 17), 48) + Q(e1, 8) + Q(e2, 2) + Q(e3, 2),
        Q(p - 1, 6) - Q(e2, 2) - Q(e3, 3),
        Q(p - 1, 8) - Q(e1, 8) - Q(e2, 4) - Q(e3, 2),
        Q(e3, 2),
        Q(e2, 2),
        Q(five ? 1 : 0),
    };
    std::array<std::int64_t, 7> n{};
    for (std::size_t i = 0; i < 7; ++i) n[i] = integral(q[i], ("n_" + std::to_string(i)).c_str(), p);
    return n;
}

std::int64_t n_total(const PrimeModulus& pm) {
    auto [p, e1, e2, e3, five] = symbols(pm);
    Q n = Q((p - 1) * (p * p + 25 * p + 166), 2880) - Q(e1, 32) + Q(e2, 8) + Q(e3, 18) + (five ? Q(4, 5) : Q(0));
    return integral(n, "n", p);
}

IsogenyTotals jacobian_isogeny_totals(const PrimeModulus& pm) {
    auto [p, e1, e2, e3, five] = symbols(pm);
    (void)five;
    auto n = n_counts(pm);
    std::int64_t total = integral(Q((p - 1) * (p + 2) * (p + 7), 192) - Q(3 * e1, 32) + Q(e2, 8), "total", p);
    std::int64_t dec = integral(Q((p - 1) * (p + 3), 48) - Q(e1, 8) + Q(e3, 6), "decomposed", p);
    std::int64_t total_sum = 15 * n[0] + 11 * n[1] + 7 * n[2] + 8 * n[3] + 5 * n[4] + 4 * n[5] + 3 * n[6];
    std::int64_t dec_sum = n[1] + n[2] + 2 * n[3] + 2 * n[4] + n[5];
    if (total != total_sum || dec != dec_sum)
        throw std::logic_error("isogeny totals from Jacobians disagree with n_i sums at p = " + std::to_string(p));
    return {total, dec};
}

IsogenyTotals product_isogeny_totals(const PrimeModulus& pm) {
    auto [p, e1, e2, e3, five] = symbols(pm);
    (void)e2;
    (void)five;
    auto c = class_numbers(pm);
    std::int64_t nondec = integral(Q((p - 1) * (p + 3), 48) - Q(e1, 8) + Q(e3, 6), "non-decomposed", p);
    std::int64_t dec = integral(Q((p - 1) * (3 * p + 17), 96) + Q((p + 6) * e1, 16) + Q(e3, 3), "decomposed", p);
    const std::int64_t h1 = c.h1, h2 = c.h2, h3 = c.h3, pairs = h1 * (h1 - 1) / 2;
    std::int64_t nondec_sum = 6 * pairs + 4 * h1 + 3 * h2 * h1 + 2 * h3 * h1 + h2 + h3 + h2 * h3;
    std::int64_t dec_sum = 9 * pairs + 7 * h1 + 6 * h2 * h1 + 3 * h3 * h1 + 4 * h2 + 2 * h3 + 2 * h2 * h3;
    if (nondec != nondec_sum || dec != dec_sum)
        throw std::logic_error("isogeny totals from products disagree with class-number sums at p = " +
                               std::to_string(p));
    return {nondec, dec};
}

CountReport count_report(const PrimeModulus& p) {
    CountReport r;
    r.n = n_counts(p);
    r.n_total = n_total(p);
    std::int64_t sum = 0;
    for (auto v : r.n) sum += v;
    if (sum != r.n_total) throw std::logic_error("sum of n_i differs from n at p = " + std::to_string(p.value()));
    auto jt = jacobian_isogeny_totals(p);
    auto pt = product_isogeny_totals(p);
    r.jacobian_total = jt.first;
    r.jacobian_decomposed = jt.second;
    r.product_nondecomposed = pt.first;
    r.product_decomposed = pt.second;
    r.classes = class_numbers(p);
    return r;
}

// ---------------------------------------------------------------- signatures

int OrbitSignature::total() const {
    int t = 0;
    for (const auto& [size, count] : nondecomposed) t += size * count;
    for (const auto& [size, count] : decomposed) t += size * count;
    return t;
}

int OrbitSignature::classes_nondecomposed() const {
    int t = 0;
    for (const auto& kv : nondecomposed) t += kv.second;
    return t;
}

int OrbitSignature::classes_decomposed() const {
    int t = 0;
    for (const auto& kv : decomposed) t += kv.second;
    return t;
}

std::string OrbitSignature::to_string() const {
    auto side = [](const std::map<int, int>& m) {
        if (m.empty()) return std::string("(0)");
        std::string s = "(";
        bool first = true;
        for (const auto& [size, count] : m) {
            if (!first) s += ", ";
            first = false;
            s += std::to_string(size) + "×" + std::to_string(count);
        }
        return s + ")";
    };
    return side(nondecomposed) + side(decomposed);
}

std::string_view name(ProductShape s) {
    switch (s) {
        case ProductShape::Generic: return "E×E'";
        case ProductShape::SelfGeneric: return "E×E";
        case ProductShape::WithE2: return "E×E2";
        case ProductShape::WithE3: return "E×E3";
        case ProductShape::E2E2: return "E2×E2";
        case ProductShape::E3E3: return "E3×E3";
        case ProductShape::E2E3: return "E2×E3";
    }
    return "?";
}

int aut_order(ProductShape s) {
    switch (s) {
        case ProductShape::Generic: return 4;
        case ProductShape::SelfGeneric: return 8;
        case ProductShape::WithE2: return 8;
        case ProductShape::WithE3: return 12;
        case ProductShape::E2E2: return 32;
        case ProductShape::E3E3: return 72;
        case ProductShape::E2E3: return 24;
    }
    return 0;
}

ProductShape product_shape(int aut_a, int aut_b, bool isomorphic) {
    if (aut_a > aut_b) std::swap(aut_a, aut_b);
    if (aut_a == 2 && aut_b == 2) return isomorphic ? ProductShape::SelfGeneric : ProductShape::Generic;
    if (aut_a == 2 && aut_b == 4) return ProductShape::WithE2;
    if (aut_a == 2 && aut_b == 6) return ProductShape::WithE3;
    if (aut_a == 4 && aut_b == 4) return ProductShape::E2E2;
    if (aut_a == 6 && aut_b == 6) return ProductShape::E3E3;
    if (aut_a == 4 && aut_b == 6) return ProductShape::E2E3;
    throw DomainError("no product shape for automorphism orders " + std::to_string(aut_a) + ", " +
                      std::to_string(aut_b));
}

OrbitSignature orbit_signature_table(RAType ra) {
    switch (ra) {
        case RAType::Trivial: return {{{1, 15}}, {}};
        case RAType::Z2: return {{{1, 6}, {2, 4}}, {{1, 1}}};
        case RAType::S3: return {{{1, 3}, {3, 3}}, {{3, 1}}};
        case RAType::V4: return {{{1, 1}, {2, 4}, {4, 1}}, {{1, 2}}};
        case RAType::D12: return {{{2, 1}, {3, 1}, {6, 1}}, {{1, 1}, {3, 1}}};
        case RAType::S4: return {{{1, 1}, {4, 2}}, {{6, 1}}};
        case RAType::Z5: return {{{5, 3}}, {}};
    }
    throw DomainError("unknown reduced automorphism type");
}

OrbitSignature product_signature_table(ProductShape shape) {
    switch (shape) {
        case ProductShape::Generic: return {{{1, 6}}, {{1, 9}}};
        case ProductShape::SelfGeneric: return {{{1, 3}, {2, 1}}, {{1, 4}, {2, 3}}};
        case ProductShape::WithE2: return {{{2, 3}}, {{1, 3}, {2, 3}}};
        case ProductShape::WithE3: return {{{3, 2}}, {{3, 3}}};
        case ProductShape::E2E2: return {{{4, 1}}, {{1, 1}, {2, 1}, {4, 2}}};
        case ProductShape::E3E3: return {{{3, 1}}, {{3, 1}, {9, 1}}};
        case ProductShape::E2E3: return {{{6, 1}}, {{3, 1}, {6, 1}}};
    }
    throw DomainError("unknown product shape");
}

}  // namespace ssg
