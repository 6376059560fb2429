#pragma once

#include <utility>
#include <vector>

#include "kinertia/rational.hpp"

namespace kinertia {

// Dense univariate polynomial over Q. Coefficient i belongs to x^i; the
// representation is canonical (no trailing zeros, zero polynomial = empty).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(size_t deg, const Rational& c = Rational(1));

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    bool is_zero() const { return c_.empty(); }
    Rational coeff(size_t i) const;  // 0 beyond the degree
    Rational leading() const;        // requires nonzero
    Rational eval(const Rational& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    // Euclidean division by a nonzero divisor: num = q*den + r, deg r < deg den.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num,
                                                    const Polynomial& den);
    // Division known to be exact; throws std::logic_error on a remainder.
    Polynomial divexact(const Polynomial& den) const;

private:
    std::vector<Rational> c_;
    void normalize();
};

// g = gcd (monic unless zero), with s*a + t*b = g.
struct PolyExtGcd {
    Polynomial g, s, t;
};
PolyExtGcd poly_ext_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace kinertia
