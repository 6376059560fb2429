#include "kinertia/mackey.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kinertia {

Perm perm_identity(long m) {
    Perm p(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) p[static_cast<size_t>(i)] = i;
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm p(b.size());
    for (size_t i = 0; i < b.size(); ++i) p[i] = a[static_cast<size_t>(b[i])];
    return p;
}

Perm perm_inverse(const Perm& a) {
    Perm p(a.size());
    for (size_t i = 0; i < a.size(); ++i) p[static_cast<size_t>(a[i])] = static_cast<long>(i);
    return p;
}

long perm_order(const Perm& a) {
    long o = 1;
    Perm cur = a;
    const Perm id = perm_identity(static_cast<long>(a.size()));
    while (cur != id) {
        cur = perm_compose(cur, a);
        ++o;
    }
    return o;
}

PermGroup PermGroup::from_generators(long degree, std::vector<Perm> gens) {
    for (const Perm& g : gens) {
        if (static_cast<long>(g.size()) != degree)
            throw std::invalid_argument("generator degree mismatch");
        Perm sorted = g;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != perm_identity(degree))
            throw std::invalid_argument("generator is not a permutation");
    }
    std::set<Perm> closed = {perm_identity(degree)};
    std::vector<Perm> queue = {perm_identity(degree)};
    for (size_t head = 0; head < queue.size(); ++head) {
        Perm cur = queue[head];
        for (const Perm& g : gens) {
            Perm next = perm_compose(g, cur);
            if (closed.insert(next).second) queue.push_back(next);
        }
    }
    PermGroup G;
    G.degree = degree;
    G.generators = std::move(gens);
    G.elements.assign(closed.begin(), closed.end());
    return G;
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

CyclicSubgroupNA CyclicSubgroupNA::from_generator(Perm g) {
    CyclicSubgroupNA s;
    s.r = perm_order(g);
    s.generator = std::move(g);
    return s;
}

std::vector<Perm> CyclicSubgroupNA::elements() const {
    std::vector<Perm> out;
    Perm cur = perm_identity(static_cast<long>(generator.size()));
    for (long i = 0; i < r; ++i) {
        out.push_back(cur);
        cur = perm_compose(cur, generator);
    }
    return out;
}

PermGroup centralizer(const PermGroup& G, const CyclicSubgroupNA& sigma) {
    if (!G.contains(sigma.generator))
        throw std::invalid_argument("generator not in the group");
    std::vector<Perm> elems;
    for (const Perm& g : G.elements)
        if (perm_compose(g, sigma.generator) == perm_compose(sigma.generator, g))
            elems.push_back(g);
    PermGroup C;
    C.degree = G.degree;
    C.generators = elems;
    C.elements = std::move(elems);
    std::sort(C.elements.begin(), C.elements.end());
    return C;
}

PermGroup normalizer(const PermGroup& G, const CyclicSubgroupNA& sigma) {
    if (!G.contains(sigma.generator))
        throw std::invalid_argument("generator not in the group");
    std::vector<Perm> subgroup = sigma.elements();
    std::sort(subgroup.begin(), subgroup.end());
    std::vector<Perm> elems;
    for (const Perm& g : G.elements) {
        Perm conj = perm_compose(perm_compose(g, sigma.generator), perm_inverse(g));
        if (std::binary_search(subgroup.begin(), subgroup.end(), conj))
            elems.push_back(g);
    }
    PermGroup N;
    N.degree = G.degree;
    N.generators = elems;
    N.elements = std::move(elems);
    std::sort(N.elements.begin(), N.elements.end());
    return N;
}

long w_order(const PermGroup& G, const CyclicSubgroupNA& sigma) {
    return normalizer(G, sigma).order() / centralizer(G, sigma).order();
}

std::vector<DoubleCoset> double_cosets(const PermGroup& G,
                                       const std::vector<Perm>& H,
                                       const std::vector<Perm>& K) {
    std::set<Perm> assigned;
    std::vector<DoubleCoset> out;
    for (const Perm& g : G.elements) {
        if (assigned.count(g)) continue;
        std::set<Perm> coset;
        for (const Perm& h : H)
            for (const Perm& k : K)
                coset.insert(perm_compose(perm_compose(h, g), k));
        out.push_back({g, static_cast<long>(coset.size())});
        assigned.insert(coset.begin(), coset.end());
    }
    return out;
}

RatMat res_ind_endo(const PermGroup& G, const CyclicSubgroupNA& H) {
    const long r = H.r;
    std::vector<Perm> h_elems = H.elements();  // h_elems[j] = generator^j
    std::map<Perm, long> exponent_of;
    for (long j = 0; j < r; ++j) exponent_of.emplace(h_elems[j], j);
    if (!G.contains(H.generator))
        throw std::invalid_argument("generator not in the group");

    RatMat m(static_cast<size_t>(r), static_cast<size_t>(r));
    for (const DoubleCoset& dc : double_cosets(G, h_elems, h_elems)) {
        const Perm& g = dc.representative;
        const Perm ginv = perm_inverse(g);
        // D = H cap g^{-1} H g, the unique subgroup of H of its order.
        long dsize = 0;
        for (const Perm& x : h_elems)
            if (exponent_of.count(perm_compose(perm_compose(g, x), ginv))) ++dsize;
        const long step = r / dsize;
        // Twist unit e: conjugating the canonical generator delta = h^step
        // by g lands back in D as delta^e.
        const Perm& delta = h_elems[static_cast<size_t>(step % r)];
        long k = exponent_of.at(perm_compose(perm_compose(g, delta), ginv));
        if (k % step != 0) throw std::logic_error("conjugate left the subgroup");
        long e = (k / step) % dsize;
        if (dsize == 1) e = 1;
        if (gcd_long(e, dsize) != 1) throw std::logic_error("twist is not a unit");

        for (long a = 0; a < r; ++a) {
            CycModN basis = CycModN::monomial(r, a);
            CycModN term = induction(galois_act(e, restriction(basis, dsize)), r);
            for (long i = 0; i < r; ++i)
                m.at(static_cast<size_t>(i), static_cast<size_t>(a)) +=
                    term.c[static_cast<size_t>(i)];
        }
    }
    return m;
}

}  // namespace kinertia
