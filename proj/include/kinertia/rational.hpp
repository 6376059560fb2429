#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kinertia {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is the invariant all
// serialization and equality tests rely on.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" (optional leading '-'); throws std::invalid_argument
// on malformed input or q = 0.
Rational rational_from_string(const std::string& s);

// Canonical form: "p/q" in lowest terms with q > 0, plain "p" when q = 1.
std::string rational_to_string(const Rational& x);

// Small number-theory helpers on machine integers (moduli stay tiny here).
long gcd_long(long a, long b);
long lcm_long(long a, long b);
long euler_phi(long n);
std::vector<long> divisors(long n);   // ascending, includes 1 and n
std::vector<long> units_mod(long n);  // residues u in [0,n) with gcd(u,n)=1
long mod_pow(long base, long exp, long mod);
long inv_mod(long a, long n);  // inverse of a modulo n; requires gcd(a,n)=1

}  // namespace kinertia
