#include "ssg/arith.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace ssg {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
    if (p <= 5) throw DomainError("characteristic must exceed 5, got " + std::to_string(p));
    if (p >= 1'000'000) throw DomainError("prime too large for desk-scale arithmetic: " + std::to_string(p));
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

int legendre_symbol(std::int64_t a, std::uint64_t q) {
    auto m = static_cast<std::int64_t>(q);
    auto r = static_cast<std::uint64_t>(((a % m) + m) % m);
    if (r == 0) return 0;
    if (q == 2) return 1;
    return pow_mod(r, (q - 1) / 2, q) == 1 ? 1 : -1;
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t q) {
    a %= q;
    if (a == 0) return 0;
    if (legendre_symbol(static_cast<std::int64_t>(a), q) != 1) return std::nullopt;
    std::uint64_t s = 0, odd = q - 1;
    while (odd % 2 == 0) {
        odd /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (legendre_symbol(static_cast<std::int64_t>(z), q) != -1) ++z;
    std::uint64_t m = s, c = pow_mod(z, odd, q), t = pow_mod(a, odd, q), r = pow_mod(a, (odd + 1) / 2, q);
    while (t != 1) {
        std::uint64_t i = 0, t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % q;
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = b * b % q;
        m = i;
        c = b * b % q;
        t = t * c % q;
        r = r * b % q;
    }
    return std::min(r, q - r);
}

std::uint64_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    if (k > n) return 0;
    if (n >= p) throw DomainError("binomial_mod requires n < p");
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    return num * pow_mod(den, p - 2, p) % p;
}

// ---------------------------------------------------------------- Field

Field::Field(std::uint64_t p) : p_(p), r_(2) {
    while (legendre_symbol(static_cast<std::int64_t>(r_), p_) != -1) ++r_;
}

const Field& Field::of(const PrimeModulus& pm) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::unique_ptr<Field>> registry;
    std::lock_guard lock(mu);
    auto& slot = registry[pm.value()];
    if (!slot) slot.reset(new Field(pm.value()));
    return *slot;
}

Fp2 Field::zero() const { return Fp2(*this, 0, 0); }
Fp2 Field::one() const { return Fp2(*this, 1, 0); }
Fp2 Field::gen() const { return Fp2(*this, 0, 1); }
Fp2 Field::from_int(std::int64_t v) const { return Fp2(*this, reduce(v), 0); }
Fp2 Field::make(std::uint64_t a0, std::uint64_t a1) const { return Fp2(*this, a0 % p_, a1 % p_); }
Fp2 Field::element(std::uint64_t index) const { return Fp2(*this, index % p_, (index / p_) % p_); }

std::uint64_t Field::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw DomainError("inverse of zero");
    return pow_mod(a, p_ - 2, p_);
}

std::uint64_t Field::reduce(std::int64_t v) const noexcept {
    auto m = static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(((v % m) + m) % m);
}

std::string Field::context_line() const {
    return "t^2 = r, r = " + std::to_string(r_) + " (p = " + std::to_string(p_) + ")";
}

// ---------------------------------------------------------------- Fp2

std::uint64_t Fp2::index() const noexcept { return a0_ + a1_ * field_->p(); }

Fp2 Fp2::operator-() const { return Fp2(*field_, field_->sub(0, a0_), field_->sub(0, a1_)); }

Fp2& Fp2::operator+=(const Fp2& o) {
    if (!field_) field_ = o.field_;
    a0_ = field_->add(a0_, o.a0_);
    a1_ = field_->add(a1_, o.a1_);
    return *this;
}

Fp2& Fp2::operator-=(const Fp2& o) {
    if (!field_) field_ = o.field_;
    a0_ = field_->sub(a0_, o.a0_);
    a1_ = field_->sub(a1_, o.a1_);
    return *this;
}

Fp2& Fp2::operator*=(const Fp2& o) {
    if (!field_) field_ = o.field_;
    const auto& f = *field_;
    std::uint64_t p = f.p();
    std::uint64_t c0 = (a0_ * o.a0_ + (a1_ * o.a1_ % p) * f.nonresidue()) % p;
    std::uint64_t c1 = (a0_ * o.a1_ + a1_ * o.a0_) % p;
    a0_ = c0;
    a1_ = c1;
    return *this;
}

Fp2 Fp2::operator*(std::int64_t k) const { return *this * field_->from_int(k); }

std::uint64_t Fp2::norm() const {
    const auto& f = *field_;
    return f.sub(f.mul(a0_, a0_), f.mul(f.nonresidue(), f.mul(a1_, a1_)));
}

Fp2 Fp2::conj() const { return Fp2(*field_, a0_, field_->sub(0, a1_)); }

Fp2 Fp2::inv() const {
    if (is_zero()) throw DomainError("inverse of zero in F_p^2");
    std::uint64_t n_inv = field_->inv(norm());
    Fp2 c = conj();
    return Fp2(*field_, field_->mul(c.a0_, n_inv), field_->mul(c.a1_, n_inv));
}

Fp2 Fp2::pow(std::uint64_t e) const {
    Fp2 r = field_->one(), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string Fp2::to_string() const {
    if (a1_ == 0) return std::to_string(a0_);
    return std::to_string(a0_) + "+" + std::to_string(a1_) + "*t";
}

Fp2 Fp2::parse(const Field& f, std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto to_int = [&](std::string_view s) -> std::int64_t {
        s = trim(s);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw std::invalid_argument("malformed field element: '" + std::string(text) + "'");
        return v;
    };
    text = trim(text);
    auto star = text.find("*t");
    if (star == std::string_view::npos) return f.from_int(to_int(text));
    if (star + 2 != text.size()) throw std::invalid_argument("malformed field element: '" + std::string(text) + "'");
    // a0+a1*t, with a0 optional
    auto head = text.substr(0, star);
    auto plus = head.rfind('+');
    std::int64_t a0 = 0, a1 = 0;
    if (plus == std::string_view::npos || plus == 0) {
        a1 = to_int(plus == 0 ? head.substr(1) : head);
    } else {
        a0 = to_int(head.substr(0, plus));
        a1 = to_int(head.substr(plus + 1));
    }
    return Fp2(f, f.reduce(a0), f.reduce(a1));
}

std::optional<Fp2> sqrt_in_fp2(const Fp2& x) {
    const Field& f = x.field();
    const std::uint64_t p = f.p();
    if (x.is_zero()) return x;
    std::optional<Fp2> root;
    if (x.a1() == 0) {
        if (auto s = sqrt_mod(x.a0(), p)) {
            root = f.make(*s, 0);
        } else {
            auto s2 = sqrt_mod(f.mul(x.a0(), f.inv(f.nonresidue())), p);
            root = f.make(0, *s2);
        }
    } else {
        auto n = sqrt_mod(x.norm(), p);
        if (!n) return std::nullopt;
        const std::uint64_t half = f.inv(2);
        for (std::uint64_t signed_n : {*n, f.sub(0, *n)}) {
            auto c0 = sqrt_mod(f.mul(f.add(x.a0(), signed_n), half), p);
            if (!c0 || *c0 == 0) continue;
            std::uint64_t c1 = f.mul(x.a1(), f.inv(f.mul(2, *c0)));
            Fp2 cand = f.make(*c0, c1);
            if (cand * cand == x) {
                root = cand;
                break;
            }
        }
        if (!root) return std::nullopt;
    }
    Fp2 neg = -*root;
    return std::min(*root, neg);
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Field& f, std::vector<Fp2> coeffs) : field_(&f), coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Fp2& c, std::size_t degree) {
    std::vector<Fp2> v(degree + 1, c.field().zero());
    v[degree] = c;
    return Poly(c.field(), std::move(v));
}

Poly Poly::from_ints(const Field& f, std::initializer_list<std::int64_t> low_first) {
    std::vector<Fp2> v;
    for (auto c : low_first) v.push_back(f.from_int(c));
    return Poly(f, std::move(v));
}

Poly Poly::from_roots(const Field& f, std::span<const Fp2> roots) {
    Poly r(f, {f.one()});
    for (const auto& c : roots) r = r * Poly(f, {-c, f.one()});
    return r;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    for (auto& c : coeffs_)
        if (!c.bound()) c = field_->zero();
}

Fp2 Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }

Fp2 Poly::leading() const { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }

Fp2 Poly::operator()(const Fp2& x) const {
    Fp2 acc = field_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Fp2> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<std::int64_t>(i));
    return Poly(*field_, std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) throw DomainError("monic of the zero polynomial");
    return *this * leading().inv();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly Poly::mul_truncated(const Poly& a, const Poly& b, std::size_t bound) {
    if (a.is_zero() || b.is_zero()) return Poly(*a.field_);
    std::size_t n = std::min(bound, a.coeffs_.size() + b.coeffs_.size() - 1);
    std::vector<Fp2> out(n, a.field_->zero());
    for (std::size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(*a.field_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) { return Poly::mul_truncated(a, b, static_cast<std::size_t>(-1)); }

Poly operator*(Poly a, const Fp2& c) {
    for (auto& x : a.coeffs_) x *= c;
    a.trim();
    return a;
}

Poly Poly::pow(std::uint64_t e) const { return pow_truncated(e, static_cast<std::size_t>(-1)); }

Poly Poly::pow_truncated(std::uint64_t e, std::size_t bound) const {
    Poly r(*field_, {field_->one()}), b = *this;
    if (bound == 0) return Poly(*field_);
    while (e) {
        if (e & 1) r = mul_truncated(r, b, bound);
        e >>= 1;
        if (e) b = mul_truncated(b, b, bound);
    }
    return r;
}

Poly Poly::deflate(const Fp2& c) const {
    if (coeffs_.size() < 2) return Poly(*field_);
    std::vector<Fp2> q(coeffs_.size() - 1, field_->zero());
    Fp2 carry = field_->zero();
    for (std::size_t i = coeffs_.size() - 1; i >= 1; --i) {
        carry = carry * c + coeffs_[i];
        q[i - 1] = carry;
    }
    return Poly(*field_, std::move(q));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i].to_string();
    }
    return os.str();
}

std::vector<Fp2> poly_roots_in_fp2(const Poly& f) {
    if (f.is_zero()) throw DomainError("roots of the zero polynomial");
    const Field& field = f.field();
    std::vector<Fp2> roots;
    for (std::uint64_t i = 0; i < field.size(); ++i) {
        Fp2 c = field.element(i);
        if (!f(c).is_zero()) continue;
        Poly g = f;
        while (g.degree() >= 1 && g(c).is_zero()) {
            roots.push_back(c);
            g = g.deflate(c);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<std::vector<Fp2>> small_degree_roots(const Poly& f) {
    if (f.degree() == 1) return std::vector<Fp2>{-f.coeff(0) / f.coeff(1)};
    if (f.degree() != 2) throw DomainError("small_degree_roots expects degree 1 or 2");
    Fp2 a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    auto s = sqrt_in_fp2(b * b - a * c * 4);
    if (!s) return std::nullopt;
    Fp2 two_a_inv = (a * 2).inv();
    std::vector<Fp2> r{(-b + *s) * two_a_inv, (-b - *s) * two_a_inv};
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace ssg
