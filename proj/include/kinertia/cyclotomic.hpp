#pragma once

#include <map>
#include <vector>

#include "kinertia/polynomial.hpp"
#include "kinertia/ratmat.hpp"

namespace kinertia {

// d-th cyclotomic polynomial, exact and monic. Memoized internally (the
// cache is behind a mutex; observationally pure and thread-safe).
const Polynomial& cyclotomic_poly(long d);

// Element of Q[t]/(t^n - 1): exactly n coefficients for exponents 0..n-1.
// This is the representation ring of the cyclic group of order n with t the
// tautological character of the chosen generator.
struct CycModN {
    long n = 1;
    std::vector<Rational> c;  // size n

    static CycModN zero(long n);
    static CycModN one(long n);
    static CycModN monomial(long n, long exp, const Rational& coeff = Rational(1));

    CycModN operator+(const CycModN& o) const;
    CycModN operator-(const CycModN& o) const;
    CycModN operator*(const CycModN& o) const;
    CycModN operator*(const Rational& s) const;
    bool operator==(const CycModN& o) const { return n == o.n && c == o.c; }
    bool is_zero() const;
};

// Element of Q(zeta_d) on the power basis 1, zeta, ..., zeta^{phi(d)-1}
// modulo the d-th cyclotomic polynomial.
struct CycFieldElem {
    long d = 1;
    std::vector<Rational> c;  // size phi(d)

    static CycFieldElem zero(long d);
    static CycFieldElem one(long d);
    static CycFieldElem from_rational(long d, const Rational& x);
    static CycFieldElem zeta_pow(long d, long k);  // zeta_d^k reduced

    CycFieldElem operator+(const CycFieldElem& o) const;
    CycFieldElem operator-(const CycFieldElem& o) const;
    CycFieldElem operator*(const CycFieldElem& o) const;
    CycFieldElem operator*(const Rational& s) const;
    bool operator==(const CycFieldElem& o) const { return d == o.d && c == o.c; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()
    CycFieldElem inverse() const;     // requires nonzero
};

// One Q(zeta_d) component for every divisor d of n; the target of crt_split.
struct CrtVector {
    long n = 1;
    std::map<long, CycFieldElem> comp;  // keyed by divisor d | n
};

Polynomial to_poly(const CycModN& e);
Polynomial to_poly(const CycFieldElem& x);
CycModN to_modn(const Polynomial& p, long n);                  // reduce mod t^n - 1
CycFieldElem reduce_mod_cyclotomic(const Polynomial& p, long d);

// Ring isomorphism Q[t]/(t^n-1) = prod over d|n of Q(zeta_d) and its inverse.
CrtVector crt_split(const CycModN& e);
CycModN crt_join(const CrtVector& v);

// Section of the projection onto the conductor-d component: embeds
// x in Q(zeta_d) as the element of Q[t]/(t^r-1) supported on that single
// component, via p_x * psi_d with psi_d = (t^r-1)/Phi_d and
// p_x(zeta_d) = x * psi_d(zeta_d)^{-1}. Requires d = x.d to divide r.
CycModN embed_i(const CycFieldElem& x, long r);

// Galois conjugate zeta_d -> zeta_d^u (gcd(u, d) = 1).
CycFieldElem galois_conj(const CycFieldElem& x, long u);

// Field trace from Q(zeta_n) down to Q(zeta_r) for r | n (sum over the
// relative Galois group), expressed on the conductor-r power basis.
CycFieldElem trace(const CycFieldElem& x, long r);

// (r/n) * trace: the map induced on identity-component localizations by the
// invariants push-forward Q[t]/(t^n-1) -> Q[s]/(s^r-1).
CycFieldElem mu_localized_pushforward(const CycFieldElem& x, long r);

// Character induction R(mu_d) -> R(mu_n) along mu_d < mu_n (d = e.n | n):
// s^j maps to the sum of t^i over i = j (mod d).
CycModN induction(const CycModN& e, long n);

// Character restriction R(mu_n) -> R(mu_d) for d | n: t^i maps to s^{i mod d}.
CycModN restriction(const CycModN& e, long d);

// Ring automorphism t -> t^u of Q[t]/(t^n-1); requires gcd(u, n) = 1.
CycModN galois_act(long u, const CycModN& e);

// Push-forward along the multiplication twist: the basis tensor t^i (x) s^j
// of R(mu_n) (x) R(mu_d) maps to t^i when i = j (mod d) and to 0 otherwise.
// m is the n x d coefficient matrix (m[i][j] multiplies t^i (x) s^j).
CycModN alpha_push(const std::vector<std::vector<Rational>>& m, long n, long d);

// Inclusion Q(zeta_r) -> Q(zeta_N) for r | N (zeta_r = zeta_N^{N/r}).
CycFieldElem lift_to_conductor(const CycFieldElem& x, long N);

}  // namespace kinertia
