#include "kinertia/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace kinertia {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("malformed rational literal: " + s);
    Int p(num), q(den);
    if (q == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors(long n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

std::vector<long> units_mod(long n) {
    if (n <= 0) throw std::invalid_argument("units_mod: n must be positive");
    std::vector<long> us;
    for (long u = 0; u < n; ++u)
        if (std::gcd(u, n) == 1) us.push_back(u);
    if (n == 1) us = {0};  // the single residue mod 1
    return us;
}

long mod_pow(long base, long exp, long mod) {
    if (mod <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    long b = ((base % mod) + mod) % mod, r = 1 % mod;
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) r = (r * b) % mod;
        b = (b * b) % mod;
    }
    return r;
}

long inv_mod(long a, long n) {
    if (n <= 0) throw std::invalid_argument("inv_mod: modulus must be positive");
    if (n == 1) return 0;
    long r0 = n, r1 = ((a % n) + n) % n, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long s2 = s0 - q * s1;
        r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("inv_mod: not a unit");
    return ((s0 % n) + n) % n;
}

}  // namespace kinertia
