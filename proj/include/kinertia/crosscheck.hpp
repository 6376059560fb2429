#pragma once

// Independent re-derivations used to cross-check library results. Everything
// here is deliberately built from different primitives than the code under
// test (linear-system adjoints, class functions, brute-force enumeration).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "kinertia/cyclotomic.hpp"
#include "kinertia/glhom.hpp"
#include "kinertia/mackey.hpp"
#include "kinertia/ratmat.hpp"

namespace kinertia::crosscheck {

// Matrix (r x n, acting on coefficient columns) of the invariants
// push-forward Q[t]/(t^n-1) -> Q[s]/(s^r-1), recovered *only* from the
// adjointness <F x, y>_r = <x, res y>_n where res is the pullback
// s -> t^{n/r} and <a, b> is the trivial-isotypic coefficient of a*b.
// The projection formula F(x * res(y)) = F(x) * y is asserted as well.
inline RatMat invariants_pushforward_matrix(long n, long r) {
    if (n <= 0 || r <= 0 || n % r != 0)
        throw std::invalid_argument("invariants_pushforward_matrix: r must divide n");
    const size_t un = static_cast<size_t>(n), ur = static_cast<size_t>(r);
    // Gram matrix of the pairing on the target: G[a][j] = <s^a, s^j>.
    RatMat gram(ur, ur);
    for (size_t a = 0; a < ur; ++a)
        for (size_t j = 0; j < ur; ++j)
            gram.at(a, j) = ((a + j) % ur == 0) ? 1 : 0;
    // RHS[i][j] = <t^i, t^{j n/r}>_n.
    RatMat rhs(un, ur);
    for (size_t i = 0; i < un; ++i)
        for (size_t j = 0; j < ur; ++j)
            rhs.at(i, j) = ((i + j * static_cast<size_t>(n / r)) % un == 0) ? 1 : 0;
    // Solve F * G = RHS for the n x r table F (row i = image of t^i) via the
    // transposed system G F^T = RHS^T (G is symmetric).
    auto ft = gram.solve(rhs.transpose());
    if (!ft) throw std::logic_error("adjoint system inconsistent");
    RatMat f = ft->transpose();
    // Action matrix on coefficient columns: M[a][i] = F[i][a].
    RatMat m(ur, un);
    for (size_t i = 0; i < un; ++i)
        for (size_t a = 0; a < ur; ++a) m.at(a, i) = f.at(i, a);

    auto push = [&](const CycModN& e) {
        CycModN out = CycModN::zero(r);
        for (size_t a = 0; a < ur; ++a)
            for (size_t i = 0; i < un; ++i)
                if (m.at(a, i) != 0 && e.c[i] != 0) out.c[a] += m.at(a, i) * e.c[i];
        return out;
    };
    // Projection formula check on monomial pairs.
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < r; ++j) {
            CycModN lhs = push(CycModN::monomial(n, i + j * (n / r)));
            CycModN rhsv = push(CycModN::monomial(n, i)) * CycModN::monomial(r, j);
            if (!(lhs == rhsv))
                throw std::logic_error("adjoint push-forward violates projection formula");
        }
    }
    return m;
}

// The localized push-forward Q(zeta_n) -> Q(zeta_r) obtained by embedding
// into the conductor-n component, applying the adjoint-derived push-forward,
// and projecting to the conductor-r component.
inline CycFieldElem localized_pushforward_via_adjoint(const CycFieldElem& x, long r) {
    const long n = x.d;
    RatMat m = invariants_pushforward_matrix(n, r);
    CycModN e = embed_i(x, n);
    CycModN pushed = CycModN::zero(r);
    for (long a = 0; a < r; ++a)
        for (long i = 0; i < n; ++i) {
            const Rational& w = m.at(static_cast<size_t>(a), static_cast<size_t>(i));
            if (w != 0 && e.c[static_cast<size_t>(i)] != 0)
                pushed.c[static_cast<size_t>(a)] += w * e.c[static_cast<size_t>(i)];
        }
    return crt_split(pushed).comp.at(r);
}

// Res∘Ind on the representation ring of a cyclic subgroup, computed through
// class functions alone: induce each character of H to G by the averaging
// formula, restrict the result back to H, and expand it again in the
// character basis by the orthogonality inner product. No double cosets.
inline RatMat res_ind_via_class_functions(const PermGroup& G,
                                          const CyclicSubgroupNA& H) {
    const long r = H.r;
    std::vector<Perm> h_elems = H.elements();
    std::map<Perm, long> expo;
    for (long j = 0; j < r; ++j) expo.emplace(h_elems[static_cast<size_t>(j)], j);

    RatMat m(static_cast<size_t>(r), static_cast<size_t>(r));
    for (long k = 0; k < r; ++k) {
        // Values of Res Ind chi_k at the powers of the generator.
        std::vector<CycFieldElem> vals;
        for (long j = 0; j < r; ++j) {
            CycFieldElem v = CycFieldElem::zero(r);
            for (const Perm& x : G.elements) {
                Perm conj = perm_compose(
                    perm_compose(x, h_elems[static_cast<size_t>(j)]),
                    perm_inverse(x));
                auto it = expo.find(conj);
                if (it != expo.end())
                    v = v + CycFieldElem::zeta_pow(r, k * it->second % r);
            }
            vals.push_back(v * rat(1, r));
        }
        for (long i = 0; i < r; ++i) {
            CycFieldElem coef = CycFieldElem::zero(r);
            for (long j = 0; j < r; ++j)
                coef = coef + vals[static_cast<size_t>(j)] *
                                  CycFieldElem::zeta_pow(r, (r - i * j % r) % r);
            coef = coef * rat(1, r);
            if (!coef.is_rational())
                throw std::logic_error("character multiplicity is not rational");
            m.at(static_cast<size_t>(i), static_cast<size_t>(k)) =
                coef.rational_value();
        }
    }
    return m;
}

// Order of the symmetry group of a mono eigenvalue-rank function, by brute
// force over labeled eigen-slots: count the permutations pi of the n slots
// for which some unit u rescales every slot label consistently,
// lab(pi(s)) = u * lab(s).
inline Int gl_gamma_order_bruteforce(const HomComponent& c) {
    std::vector<long> lab;
    for (long chi = 0; chi < c.r; ++chi)
        for (long i = 0; i < c.d[static_cast<size_t>(chi)]; ++i) lab.push_back(chi);
    std::vector<long> pi(lab.size());
    for (size_t s = 0; s < pi.size(); ++s) pi[s] = static_cast<long>(s);
    Int count = 0;
    do {
        for (long u : units_mod(c.r)) {
            if (c.r == 1) u = 1;
            bool ok = true;
            for (size_t s = 0; s < lab.size() && ok; ++s)
                ok = lab[static_cast<size_t>(pi[s])] == u * lab[s] % c.r;
            if (ok) {
                ++count;
                break;
            }
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return count;
}

}  // namespace kinertia::crosscheck
