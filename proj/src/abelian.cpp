#include "kinertia/abelian.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "kinertia/ratmat.hpp"

namespace kinertia {

long FinAbGroup::size() const {
    long s = 1;
    for (long n : cyclic_factors) s *= n;
    return s;
}

long FinAbGroup::exponent() const {
    long e = 1;
    for (long n : cyclic_factors) e = lcm_long(e, n);
    return e;
}

std::vector<long> FinAbGroup::vec_of(long idx) const {
    std::vector<long> v(cyclic_factors.size());
    for (size_t i = cyclic_factors.size(); i-- > 0;) {
        v[i] = idx % cyclic_factors[i];
        idx /= cyclic_factors[i];
    }
    return v;
}

long FinAbGroup::index_of(const std::vector<long>& residues) const {
    if (residues.size() != cyclic_factors.size())
        throw std::invalid_argument("residue tuple has wrong length");
    long idx = 0;
    for (size_t i = 0; i < cyclic_factors.size(); ++i) {
        long n = cyclic_factors[i];
        long r = ((residues[i] % n) + n) % n;
        idx = idx * n + r;
    }
    return idx;
}

long FinAbGroup::add(long a, long b) const {
    auto va = vec_of(a), vb = vec_of(b);
    for (size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
    return index_of(va);
}

long FinAbGroup::neg(long a) const {
    auto v = vec_of(a);
    for (auto& r : v) r = -r;
    return index_of(v);
}

long FinAbGroup::mul(long k, long a) const {
    auto v = vec_of(a);
    for (size_t i = 0; i < v.size(); ++i) {
        long n = cyclic_factors[i];
        v[i] = ((v[i] * (k % n)) % n + n) % n;
    }
    return index_of(v);
}

long FinAbGroup::order_of(long a) const {
    auto v = vec_of(a);
    long o = 1;
    for (size_t i = 0; i < v.size(); ++i) {
        long n = cyclic_factors[i];
        o = lcm_long(o, n / gcd_long(n, v[i]));
    }
    return o;
}

long FinAbGroup::pairing(long chi, long h) const {
    const long N = exponent();
    auto vc = vec_of(chi), vh = vec_of(h);
    long p = 0;
    for (size_t i = 0; i < vc.size(); ++i)
        p = (p + vc[i] * vh[i] % N * (N / cyclic_factors[i])) % N;
    return p;
}

std::vector<long> elements(const FinAbGroup& A) {
    std::vector<long> out(static_cast<size_t>(A.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<long>(i);
    return out;
}

AbHom::AbHom(FinAbGroup dom_, FinAbGroup cod_, std::vector<long> images)
    : dom(std::move(dom_)), cod(std::move(cod_)), gen_images(std::move(images)) {
    if (gen_images.size() != dom.cyclic_factors.size())
        throw std::invalid_argument("one generator image per factor required");
    for (size_t i = 0; i < gen_images.size(); ++i)
        if (cod.mul(dom.cyclic_factors[i], gen_images[i]) != 0)
            throw std::invalid_argument("generator image violates its order relation");
}

long AbHom::apply(long a) const {
    auto v = dom.vec_of(a);
    long out = 0;
    for (size_t i = 0; i < v.size(); ++i)
        out = cod.add(out, cod.mul(v[i], gen_images[i]));
    return out;
}

long AbHom::dual(long chi_cod) const {
    const long N = cod.exponent();
    std::vector<long> res(dom.cyclic_factors.size());
    for (size_t i = 0; i < res.size(); ++i) {
        long n = dom.cyclic_factors[i];
        long p = cod.pairing(chi_cod, gen_images[i]);
        if ((p * n) % N != 0)
            throw std::logic_error("character pullback exponent not integral");
        res[i] = (p * n / N) % n;
    }
    return dom.index_of(res);
}

bool AbHom::is_injective() const {
    std::set<long> image;
    for (long a = 0; a < dom.size(); ++a) image.insert(apply(a));
    return static_cast<long>(image.size()) == dom.size();
}

AbHom compose(const AbHom& g, const AbHom& f) {
    if (!(f.cod == g.dom)) throw std::invalid_argument("composition mismatch");
    std::vector<long> images(f.gen_images.size());
    for (size_t i = 0; i < images.size(); ++i) images[i] = g.apply(f.gen_images[i]);
    return AbHom(f.dom, g.cod, images);
}

bool Subgroup::contains(long e) const {
    return std::binary_search(elems.begin(), elems.end(), e);
}

FinAbGroup Subgroup::abstract_group() const { return FinAbGroup{basis_orders}; }

AbHom Subgroup::inclusion() const { return AbHom(abstract_group(), parent, basis); }

long Subgroup::coord_index_of(long elem) const {
    auto it = std::lower_bound(coord_.begin(), coord_.end(),
                               std::make_pair(elem, static_cast<long>(-1)));
    if (it == coord_.end() || it->first != elem)
        throw std::invalid_argument("element not in the subgroup");
    return it->second;
}

namespace {

std::vector<long> closure_of(const FinAbGroup& A, const std::vector<long>& gens) {
    std::set<long> s = {0};
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<long> cur(s.begin(), s.end());
        for (long g : gens)
            for (long e : cur)
                if (s.insert(A.add(e, g)).second) changed = true;
    }
    return {s.begin(), s.end()};
}

}  // namespace

Subgroup subgroup_from_generators(const FinAbGroup& A, const std::vector<long>& gens) {
    Subgroup S;
    S.parent = A;
    S.elems = closure_of(A, gens);

    // Extract an independent basis: repeatedly take an element of maximal
    // order relative to the span T of the basis found so far; its offending
    // multiple lands in T with coefficients divisible by that order, so it
    // can be corrected to an element meeting T only in 0.
    std::vector<long> basis, orders;
    std::map<long, std::vector<long>> rep;  // span element -> basis coefficients
    rep[0] = {};
    while (rep.size() < S.elems.size()) {
        long best = -1, best_k = 0;
        for (long s : S.elems) {
            if (rep.count(s)) continue;
            long k = 1, cur = s;
            while (!rep.count(cur)) {
                ++k;
                cur = A.add(cur, s);
            }
            if (k > best_k) {
                best_k = k;
                best = s;
            }
        }
        const long k = best_k;
        std::vector<long> c = rep.at(A.mul(k, best));
        long adjusted = best;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (c[i] % k != 0)
                throw std::logic_error("basis extraction: divisibility failed");
            adjusted = A.add(adjusted, A.neg(A.mul(c[i] / k, basis[i])));
        }
        std::map<long, std::vector<long>> next;
        for (const auto& [t, tc] : rep)
            for (long j = 0; j < k; ++j) {
                auto v = tc;
                v.push_back(j);
                next.emplace(A.add(t, A.mul(j, adjusted)), std::move(v));
            }
        if (next.size() != rep.size() * static_cast<size_t>(k))
            throw std::logic_error("basis extraction: span collision");
        rep = std::move(next);
        basis.push_back(adjusted);
        orders.push_back(k);
    }
    if (basis.empty()) {
        basis = {0};
        orders = {1};
        rep[0] = {0};
    }
    S.basis = basis;
    S.basis_orders = orders;

    const FinAbGroup B{orders};
    for (const auto& [e, coeffs] : rep) S.coord_.emplace_back(e, B.index_of(coeffs));
    std::sort(S.coord_.begin(), S.coord_.end());
    return S;
}

std::vector<Subgroup> all_subgroups(const FinAbGroup& A) {
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> queue = {closure_of(A, {})};
    seen.insert(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head) {
        std::vector<long> cur = queue[head];
        for (long g = 0; g < A.size(); ++g) {
            if (std::binary_search(cur.begin(), cur.end(), g)) continue;
            auto ext = cur;
            ext.push_back(g);
            auto closed = closure_of(A, ext);
            if (seen.insert(closed).second) queue.push_back(closed);
        }
    }
    std::vector<Subgroup> out;
    out.reserve(queue.size());
    for (const auto& elems : queue) out.push_back(subgroup_from_generators(A, elems));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elems < b.elems;
    });
    return out;
}

AbHom hom_between(const Subgroup& H, const Subgroup& K) {
    if (!(H.parent == K.parent))
        throw std::invalid_argument("subgroups of different parents");
    std::vector<long> images(H.basis.size());
    for (size_t i = 0; i < H.basis.size(); ++i) {
        if (!K.contains(H.basis[i]))
            throw std::invalid_argument("subgroup is not contained in the target");
        images[i] = K.coord_index_of(H.basis[i]);
    }
    return AbHom(H.abstract_group(), K.abstract_group(), images);
}

GroupAlgebraElem GroupAlgebraElem::zero(const FinAbGroup& A) {
    return {A, std::vector<Rational>(static_cast<size_t>(A.size()))};
}

GroupAlgebraElem GroupAlgebraElem::one(const FinAbGroup& A) {
    return character(A, 0);
}

GroupAlgebraElem GroupAlgebraElem::character(const FinAbGroup& A, long chi) {
    auto e = zero(A);
    e.coeffs.at(static_cast<size_t>(chi)) = 1;
    return e;
}

bool GroupAlgebraElem::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

GroupAlgebraElem GroupAlgebraElem::operator+(const GroupAlgebraElem& o) const {
    if (!(group == o.group)) throw std::invalid_argument("group mismatch");
    auto out = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += o.coeffs[i];
    return out;
}

GroupAlgebraElem GroupAlgebraElem::operator-(const GroupAlgebraElem& o) const {
    if (!(group == o.group)) throw std::invalid_argument("group mismatch");
    auto out = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] -= o.coeffs[i];
    return out;
}

GroupAlgebraElem GroupAlgebraElem::operator*(const GroupAlgebraElem& o) const {
    if (!(group == o.group)) throw std::invalid_argument("group mismatch");
    auto out = zero(group);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs.size(); ++j) {
            if (o.coeffs[j] == 0) continue;
            size_t k = static_cast<size_t>(
                group.add(static_cast<long>(i), static_cast<long>(j)));
            out.coeffs[k] += coeffs[i] * o.coeffs[j];
        }
    }
    return out;
}

GroupAlgebraElem GroupAlgebraElem::operator*(const Rational& s) const {
    auto out = *this;
    for (auto& c : out.coeffs) c *= s;
    return out;
}

CycFieldElem evaluate(const GroupAlgebraElem& a, long h) {
    const FinAbGroup& A = a.group;
    const long N = A.exponent();
    const long r = A.order_of(h);
    CycFieldElem out = CycFieldElem::zero(r);
    for (size_t chi = 0; chi < a.coeffs.size(); ++chi) {
        if (a.coeffs[chi] == 0) continue;
        long p = A.pairing(static_cast<long>(chi), h);
        if ((p * r) % N != 0) throw std::logic_error("pairing exponent not integral");
        out = out + CycFieldElem::zeta_pow(r, (p * r / N) % r) * a.coeffs[chi];
    }
    return out;
}

std::vector<long> embeddings_of_mu(const FinAbGroup& A, long r) {
    std::vector<long> out;
    for (long h = 0; h < A.size(); ++h)
        if (A.order_of(h) == r) out.push_back(h);
    return out;
}

std::vector<DualCyclicSubgroup> dual_cyclic_subgroups(const FinAbGroup& A) {
    std::vector<DualCyclicSubgroup> out;
    std::vector<bool> visited(static_cast<size_t>(A.size()), false);
    for (long h = 0; h < A.size(); ++h) {
        if (visited[static_cast<size_t>(h)]) continue;
        DualCyclicSubgroup s;
        s.r = A.order_of(h);
        s.generator = h;
        for (long u : units_mod(s.r)) s.generators.push_back(A.mul(u, h));
        std::sort(s.generators.begin(), s.generators.end());
        for (long k = 0; k < s.r; ++k) s.elements.push_back(A.mul(k, h));
        std::sort(s.elements.begin(), s.elements.end());
        for (long g : s.generators) visited[static_cast<size_t>(g)] = true;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<AlgebraFactor> factorize_group_algebra(const FinAbGroup& A) {
    const long N = A.exponent();
    const long sz = A.size();
    std::vector<AlgebraFactor> out;
    for (auto& sigma : dual_cyclic_subgroups(A)) {
        AlgebraFactor f;
        f.conductor = sigma.r;
        f.idempotent = GroupAlgebraElem::zero(A);
        for (long chi = 0; chi < sz; ++chi) {
            // Sum of chi(-g) over the generators g of sigma: a Galois-stable
            // sum of roots of unity, hence rational.
            CycFieldElem sum = CycFieldElem::zero(N);
            for (long g : sigma.generators)
                sum = sum + CycFieldElem::zeta_pow(N, A.pairing(chi, A.neg(g)));
            if (!sum.is_rational())
                throw std::logic_error("idempotent coefficient is not rational");
            f.idempotent.coeffs[static_cast<size_t>(chi)] = sum.rational_value() / sz;
        }
        f.sigma = std::move(sigma);
        out.push_back(std::move(f));
    }
    return out;
}

bool maximal_ideal_check(const FinAbGroup& A, const DualCyclicSubgroup& sigma) {
    const long r = sigma.r;
    const long phi = euler_phi(r);
    RatMat m(static_cast<size_t>(phi), static_cast<size_t>(A.size()));
    for (long chi = 0; chi < A.size(); ++chi) {
        CycFieldElem v = evaluate(GroupAlgebraElem::character(A, chi), sigma.generator);
        for (long j = 0; j < phi; ++j)
            m.at(static_cast<size_t>(j), static_cast<size_t>(chi)) =
                v.c[static_cast<size_t>(j)];
    }
    return m.rank() == static_cast<size_t>(phi);
}

GroupAlgebraElem restriction_ab(const AbHom& f, const GroupAlgebraElem& a) {
    if (!(a.group == f.cod)) throw std::invalid_argument("element not over the target");
    auto out = GroupAlgebraElem::zero(f.dom);
    for (size_t chi = 0; chi < a.coeffs.size(); ++chi)
        out.coeffs[static_cast<size_t>(f.dual(static_cast<long>(chi)))] += a.coeffs[chi];
    return out;
}

GroupAlgebraElem induction_ab(const AbHom& f, const GroupAlgebraElem& a) {
    if (!(a.group == f.dom)) throw std::invalid_argument("element not over the source");
    auto out = GroupAlgebraElem::zero(f.cod);
    for (long chi = 0; chi < f.cod.size(); ++chi)
        out.coeffs[static_cast<size_t>(chi)] =
            a.coeffs[static_cast<size_t>(f.dual(chi))];
    return out;
}

}  // namespace kinertia
