#include "kinertia/polynomial.hpp"

#include <stdexcept>

namespace kinertia {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(size_t deg, const Rational& c) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return Polynomial(std::move(v));
}

Rational Polynomial::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
}

Rational Polynomial::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return Polynomial();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x *= s;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num,
                                                     const Polynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> rem(num.c_);
    int dr = static_cast<int>(rem.size()) - 1;
    const int dd = den.degree();
    if (dr < dd) return {Polynomial(), num};
    std::vector<Rational> quot(dr - dd + 1, Rational(0));
    const Rational lead = den.leading();
    while (dr >= dd) {
        if (rem[dr] != 0) {
            Rational f = rem[dr] / lead;
            quot[dr - dd] = f;
            for (int i = 0; i <= dd; ++i) rem[dr - dd + i] -= f * den.c_[i];
        }
        --dr;
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::divexact(const Polynomial& den) const {
    auto [q, r] = divmod(*this, den);
    if (!r.is_zero()) throw std::logic_error("divexact: nonzero remainder");
    return q;
}

PolyExtGcd poly_ext_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(1), s1;
    Polynomial t0, t1 = Polynomial::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = Polynomial::divmod(r0, r1);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (!r0.is_zero()) {
        Rational inv = Rational(1) / r0.leading();
        r0 = r0 * inv;
        s0 = s0 * inv;
        t0 = t0 * inv;
    }
    return {r0, s0, t0};
}

}  // namespace kinertia
