#include "kinertia/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace kinertia {

const Polynomial& cyclotomic_poly(long d) {
    if (d <= 0) throw std::invalid_argument("cyclotomic_poly: d must be positive");
    static std::mutex mu;
    static std::unordered_map<long, Polynomial> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d.
    std::vector<Rational> xd(d + 1, Rational(0));
    xd[0] = -1;
    xd[d] = 1;
    Polynomial num{std::vector<Rational>(xd)};
    Polynomial den = Polynomial::constant(1);
    for (long e : divisors(d)) {
        if (e == d) continue;
        // Reuse cached entries without re-locking: compute recursively inline.
        auto sub = cache.find(e);
        if (sub == cache.end()) {
            // Build Phi_e with the same recurrence; divisors come in
            // ascending order so all proper divisors of e are cached.
            std::vector<Rational> xe(e + 1, Rational(0));
            xe[0] = -1;
            xe[e] = 1;
            Polynomial n2{std::move(xe)};
            Polynomial d2 = Polynomial::constant(1);
            for (long f : divisors(e))
                if (f != e) d2 = d2 * cache.at(f);
            cache.emplace(e, n2.divexact(d2));
            sub = cache.find(e);
        }
        den = den * sub->second;
    }
    auto [where, inserted] = cache.emplace(d, num.divexact(den));
    (void)inserted;
    return where->second;
}

CycModN CycModN::zero(long n) {
    if (n <= 0) throw std::invalid_argument("CycModN: n must be positive");
    CycModN e;
    e.n = n;
    e.c.assign(static_cast<size_t>(n), Rational(0));
    return e;
}

CycModN CycModN::one(long n) {
    CycModN e = zero(n);
    e.c[0] = 1;
    return e;
}

CycModN CycModN::monomial(long n, long exp, const Rational& coeff) {
    CycModN e = zero(n);
    long k = ((exp % n) + n) % n;
    e.c[static_cast<size_t>(k)] = coeff;
    return e;
}

CycModN CycModN::operator+(const CycModN& o) const {
    if (n != o.n) throw std::invalid_argument("CycModN: mixed moduli");
    CycModN r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

CycModN CycModN::operator-(const CycModN& o) const {
    if (n != o.n) throw std::invalid_argument("CycModN: mixed moduli");
    CycModN r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

CycModN CycModN::operator*(const CycModN& o) const {
    if (n != o.n) throw std::invalid_argument("CycModN: mixed moduli");
    CycModN r = zero(n);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j] == 0) continue;
            r.c[(i + j) % static_cast<size_t>(n)] += c[i] * o.c[j];
        }
    }
    return r;
}

CycModN CycModN::operator*(const Rational& s) const {
    CycModN r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

bool CycModN::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

CycFieldElem CycFieldElem::zero(long d) {
    if (d <= 0) throw std::invalid_argument("CycFieldElem: d must be positive");
    CycFieldElem x;
    x.d = d;
    x.c.assign(static_cast<size_t>(euler_phi(d)), Rational(0));
    return x;
}

CycFieldElem CycFieldElem::one(long d) { return from_rational(d, Rational(1)); }

CycFieldElem CycFieldElem::from_rational(long d, const Rational& v) {
    CycFieldElem x = zero(d);
    x.c[0] = v;
    return x;
}

CycFieldElem CycFieldElem::zeta_pow(long d, long k) {
    long e = ((k % d) + d) % d;
    return reduce_mod_cyclotomic(Polynomial::monomial(static_cast<size_t>(e)), d);
}

CycFieldElem CycFieldElem::operator+(const CycFieldElem& o) const {
    if (d != o.d) throw std::invalid_argument("CycFieldElem: mixed conductors");
    CycFieldElem r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

CycFieldElem CycFieldElem::operator-(const CycFieldElem& o) const {
    if (d != o.d) throw std::invalid_argument("CycFieldElem: mixed conductors");
    CycFieldElem r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

CycFieldElem CycFieldElem::operator*(const CycFieldElem& o) const {
    if (d != o.d) throw std::invalid_argument("CycFieldElem: mixed conductors");
    return reduce_mod_cyclotomic(to_poly(*this) * to_poly(o), d);
}

CycFieldElem CycFieldElem::operator*(const Rational& s) const {
    CycFieldElem r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

bool CycFieldElem::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

bool CycFieldElem::is_rational() const {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

Rational CycFieldElem::rational_value() const {
    if (!is_rational()) throw std::logic_error("CycFieldElem: not rational");
    return c.empty() ? Rational(0) : c[0];
}

CycFieldElem CycFieldElem::inverse() const {
    if (is_zero()) throw std::invalid_argument("CycFieldElem: inverse of zero");
    auto g = poly_ext_gcd(to_poly(*this), cyclotomic_poly(d));
    if (g.g.degree() != 0)
        throw std::logic_error("CycFieldElem: cyclotomic polynomial not coprime");
    return reduce_mod_cyclotomic(g.s * (Rational(1) / g.g.coeff(0)), d);
}

Polynomial to_poly(const CycModN& e) { return Polynomial(e.c); }

Polynomial to_poly(const CycFieldElem& x) { return Polynomial(x.c); }

CycModN to_modn(const Polynomial& p, long n) {
    CycModN e = CycModN::zero(n);
    const auto& c = p.coeffs();
    for (size_t i = 0; i < c.size(); ++i) e.c[i % static_cast<size_t>(n)] += c[i];
    return e;
}

CycFieldElem reduce_mod_cyclotomic(const Polynomial& p, long d) {
    auto [q, r] = Polynomial::divmod(p, cyclotomic_poly(d));
    (void)q;
    CycFieldElem x = CycFieldElem::zero(d);
    const auto& c = r.coeffs();
    for (size_t i = 0; i < c.size(); ++i) x.c[i] = c[i];
    return x;
}

CrtVector crt_split(const CycModN& e) {
    CrtVector v;
    v.n = e.n;
    Polynomial p = to_poly(e);
    for (long d : divisors(e.n)) v.comp.emplace(d, reduce_mod_cyclotomic(p, d));
    return v;
}

CycModN crt_join(const CrtVector& v) {
    CycModN out = CycModN::zero(v.n);
    if (v.comp.size() != divisors(v.n).size())
        throw std::invalid_argument("crt_join: missing components");
    for (const auto& [d, x] : v.comp) {
        if (v.n % d != 0) throw std::invalid_argument("crt_join: bad divisor key");
        if (x.d != d) throw std::invalid_argument("crt_join: conductor mismatch");
        out = out + embed_i(x, v.n);
    }
    return out;
}

CycModN embed_i(const CycFieldElem& x, long r) {
    if (r <= 0 || r % x.d != 0)
        throw std::invalid_argument("embed_i: conductor must divide the modulus");
    // psi_d = (t^r - 1) / Phi_d
    std::vector<Rational> tr(r + 1, Rational(0));
    tr[0] = -1;
    tr[static_cast<size_t>(r)] = 1;
    Polynomial psi = Polynomial(std::move(tr)).divexact(cyclotomic_poly(x.d));
    CycFieldElem psi_at_zeta = reduce_mod_cyclotomic(psi, x.d);
    CycFieldElem px = x * psi_at_zeta.inverse();
    return to_modn(to_poly(px) * psi, r);
}

CycFieldElem galois_conj(const CycFieldElem& x, long u) {
    long uu = ((u % x.d) + x.d) % x.d;
    if (gcd_long(uu, x.d) != 1)
        throw std::invalid_argument("galois_conj: u must be a unit mod d");
    Polynomial acc;
    for (size_t k = 0; k < x.c.size(); ++k) {
        if (x.c[k] == 0) continue;
        long e = (static_cast<long>(k) * uu) % x.d;
        acc = acc + Polynomial::monomial(static_cast<size_t>(e), x.c[k]);
    }
    return reduce_mod_cyclotomic(acc, x.d);
}

CycFieldElem trace(const CycFieldElem& x, long r) {
    const long n = x.d;
    if (r <= 0 || n % r != 0)
        throw std::invalid_argument("trace: target conductor must divide source");
    if (r == n) return x;
    CycFieldElem sum = CycFieldElem::zero(n);
    for (long u : units_mod(n))
        if (u % r == 1 % r) sum = sum + galois_conj(x, u);
    // The sum lies in Q(zeta_r); express it on the conductor-r power basis by
    // solving against the coordinates of zeta_r^j = zeta_n^{j n / r}.
    const long phi_n = euler_phi(n), phi_r = euler_phi(r);
    RatMat basis(static_cast<size_t>(phi_n), static_cast<size_t>(phi_r));
    for (long j = 0; j < phi_r; ++j) {
        CycFieldElem bj = CycFieldElem::zeta_pow(n, j * (n / r));
        for (long i = 0; i < phi_n; ++i) basis.at(i, j) = bj.c[static_cast<size_t>(i)];
    }
    RatMat rhs(static_cast<size_t>(phi_n), 1);
    for (long i = 0; i < phi_n; ++i) rhs.at(i, 0) = sum.c[static_cast<size_t>(i)];
    auto sol = basis.solve(rhs);
    if (!sol) throw std::logic_error("trace: value escaped the subfield");
    CycFieldElem out = CycFieldElem::zero(r);
    for (long j = 0; j < phi_r; ++j) out.c[static_cast<size_t>(j)] = sol->at(j, 0);
    return out;
}

CycFieldElem mu_localized_pushforward(const CycFieldElem& x, long r) {
    return trace(x, r) * rat(r, x.d);
}

CycModN induction(const CycModN& e, long n) {
    const long d = e.n;
    if (n <= 0 || n % d != 0)
        throw std::invalid_argument("induction: source modulus must divide target");
    CycModN out = CycModN::zero(n);
    for (long i = 0; i < n; ++i) out.c[static_cast<size_t>(i)] = e.c[static_cast<size_t>(i % d)];
    return out;
}

CycModN restriction(const CycModN& e, long d) {
    if (d <= 0 || e.n % d != 0)
        throw std::invalid_argument("restriction: target modulus must divide source");
    CycModN out = CycModN::zero(d);
    for (long i = 0; i < e.n; ++i) out.c[static_cast<size_t>(i % d)] += e.c[static_cast<size_t>(i)];
    return out;
}

CycModN galois_act(long u, const CycModN& e) {
    long uu = ((u % e.n) + e.n) % e.n;
    if (gcd_long(uu, e.n) != 1)
        throw std::invalid_argument("galois_act: u must be a unit mod n");
    CycModN out = CycModN::zero(e.n);
    for (long i = 0; i < e.n; ++i)
        out.c[static_cast<size_t>((i * uu) % e.n)] = e.c[static_cast<size_t>(i)];
    return out;
}

CycModN alpha_push(const std::vector<std::vector<Rational>>& m, long n, long d) {
    if (n <= 0 || d <= 0 || n % d != 0)
        throw std::invalid_argument("alpha_push: d must divide n");
    if (m.size() != static_cast<size_t>(n))
        throw std::invalid_argument("alpha_push: matrix must have n rows");
    CycModN out = CycModN::zero(n);
    for (long i = 0; i < n; ++i) {
        if (m[static_cast<size_t>(i)].size() != static_cast<size_t>(d))
            throw std::invalid_argument("alpha_push: matrix must have d columns");
        out.c[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(i % d)];
    }
    return out;
}

CycFieldElem lift_to_conductor(const CycFieldElem& x, long N) {
    if (N <= 0 || N % x.d != 0)
        throw std::invalid_argument("lift_to_conductor: conductor must divide target");
    Polynomial acc;
    for (size_t k = 0; k < x.c.size(); ++k) {
        if (x.c[k] == 0) continue;
        acc = acc + Polynomial::monomial(k * static_cast<size_t>(N / x.d), x.c[k]);
    }
    return reduce_mod_cyclotomic(acc, N);
}

}  // namespace kinertia
