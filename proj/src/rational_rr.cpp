#include "kinertia/rational_rr.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kinertia/ratmat.hpp"

namespace kinertia {

namespace {

std::vector<long> divisors_of(long n) {
    std::vector<long> divs;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    return divs;
}

// The averaging coefficients conj_u(r * x_r) / phi(r), one per unit mod r,
// in the order of units_mod(r).
std::vector<CycFieldElem> averaging_terms(long r, const NormalBasisFamily& fam) {
    auto it = fam.x.find(r);
    if (it == fam.x.end())
        throw std::invalid_argument("family does not cover the component order " +
                                    std::to_string(r));
    const CycFieldElem scaled = it->second * rat(r, euler_phi(r));
    std::vector<CycFieldElem> terms;
    for (long u : units_mod(r)) terms.push_back(galois_conj(scaled, u));
    return terms;
}

void check_geometric_shape(const CyclotomicInertia& ix, const GeometricClass& m) {
    if (m.size() != ix.components.size())
        throw std::invalid_argument("geometric class has the wrong component count");
    for (size_t c = 0; c < m.size(); ++c)
        if (m[c].size() != ix.components[c].orbit_ids.size())
            throw std::invalid_argument("geometric class has the wrong orbit count");
}

}  // namespace

bool is_normal_basis(const CycFieldElem& x) {
    const long d = x.d;
    const std::vector<long> units = units_mod(d);
    const size_t phi = units.size();
    RatMat a(phi, phi);
    for (size_t col = 0; col < phi; ++col) {
        const CycFieldElem conj = galois_conj(x, units[col]);
        for (size_t row = 0; row < phi; ++row) a.at(row, col) = conj.c[row];
    }
    return a.rank() == phi;
}

NormalBasisFamily build_family(long N, long candidate_limit) {
    if (N < 1) throw std::invalid_argument("modulus must be positive");
    if (candidate_limit < 1)
        throw std::invalid_argument("candidate limit must be positive");
    const std::vector<long> divs = divisors_of(N);
    for (long k = 0; k < candidate_limit; ++k) {
        // Candidate 0 is zeta_N; candidate k >= 1 is 1 + zeta_N + ... + zeta_N^k.
        CycModN cand = CycModN::zero(N);
        if (k == 0) {
            cand.c[static_cast<size_t>(1 % N)] = rat(1);
        } else {
            for (long i = 0; i <= k; ++i)
                cand.c[static_cast<size_t>(i % N)] =
                    cand.c[static_cast<size_t>(i % N)] + rat(1);
        }
        const CycFieldElem top = crt_split(cand).comp.at(N);
        NormalBasisFamily fam;
        fam.modulus = N;
        bool ok = true;
        for (long m : divs) {
            CycFieldElem xm = trace(top, m);
            if (!is_normal_basis(xm)) {
                ok = false;
                break;
            }
            fam.x.emplace(m, std::move(xm));
        }
        if (!ok) continue;
        const Rational inv_x1 = rat(1) / fam.x.at(1).c[0];
        for (auto& [m, xm] : fam.x) xm = xm * inv_x1;
        return fam;
    }
    throw std::runtime_error("normal-basis search exhausted after " +
                             std::to_string(candidate_limit) + " candidates");
}

bool family_invariants_hold(const NormalBasisFamily& fam) {
    const std::vector<long> divs = divisors_of(fam.modulus);
    if (fam.x.size() != divs.size()) return false;
    for (long n : divs) {
        auto it = fam.x.find(n);
        if (it == fam.x.end() || it->second.d != n) return false;
        if (!is_normal_basis(it->second)) return false;
        for (long m : divs)
            if (n % m == 0 && !(trace(it->second, m) == fam.x.at(m))) return false;
    }
    return fam.x.at(1).c[0] == rat(1);
}

GeometricClass geometric_zero(const CyclotomicInertia& ix) {
    GeometricClass m(ix.components.size());
    for (size_t c = 0; c < m.size(); ++c)
        m[c].assign(ix.components[c].orbit_ids.size(), rat(0));
    return m;
}

TwistedClass phi_map(const CyclotomicInertia& ix, const GeometricClass& m,
                     const NormalBasisFamily& fam) {
    check_geometric_shape(ix, m);
    const FinAbGroup& group = ix.base.set.group;
    TwistedClass w = twisted_zero(ix);
    for (size_t c = 0; c < ix.components.size(); ++c) {
        const InertiaComponent& comp = ix.components[c];
        const std::vector<long> units = units_mod(comp.r);
        const std::vector<CycFieldElem> terms = averaging_terms(comp.r, fam);
        for (size_t ui = 0; ui < units.size(); ++ui) {
            // The u-th conjugate term reads the entry at the component of
            // u^{-1} h and multiplies it by conj_u(r x_r) / phi(r).
            const long g = group.mul(inv_mod(units[ui], comp.r), comp.h);
            const long src = ix.component_of_element[static_cast<size_t>(g)];
            for (size_t k = 0; k < m[c].size(); ++k) {
                const Rational& entry = m[static_cast<size_t>(src)][k];
                if (entry == rat(0)) continue;
                w.entries[c][k] = w.entries[c][k] + terms[ui] * entry;
            }
        }
    }
    return w;
}

GeometricClass phi_inverse(const CyclotomicInertia& ix, const TwistedClass& w,
                           const NormalBasisFamily& fam) {
    if (w.entries.size() != ix.components.size())
        throw std::invalid_argument("twisted class has the wrong component count");
    GeometricClass m = geometric_zero(ix);
    for (size_t s = 0; s < ix.sigmas.size(); ++s) {
        const DualCyclicSubgroup& sigma = ix.sigmas[s];
        const long r = sigma.r;
        const size_t phi = static_cast<size_t>(euler_phi(r));
        const std::vector<long>& comps = ix.components_of_sigma[s];
        if (comps.size() != phi)
            throw std::logic_error("subgroup component count differs from phi(r)");
        const long rep = ix.component_of_element[static_cast<size_t>(sigma.generator)];
        const size_t slots = ix.components[static_cast<size_t>(rep)].orbit_ids.size();
        const std::vector<long> units = units_mod(r);
        const std::vector<CycFieldElem> terms = averaging_terms(r, fam);
        const FinAbGroup& group = ix.base.set.group;
        // Column ci: the coefficient of the unknown at component comps[ci]
        // inside phi(m) at the representative, i.e. conj_{u^{-1}}(r x_r)/phi(r)
        // for the unit u carrying the generator to that component's element.
        RatMat a(phi, phi);
        for (size_t ci = 0; ci < phi; ++ci) {
            const long hc = ix.components[static_cast<size_t>(comps[ci])].h;
            long unit = -1;
            for (long u : units)
                if (group.mul(u, sigma.generator) == hc) {
                    unit = u;
                    break;
                }
            if (unit < 0) throw std::logic_error("component is not a conjugate of the generator");
            const long uinv = inv_mod(unit, r);
            const size_t ui = static_cast<size_t>(
                std::find(units.begin(), units.end(), uinv) - units.begin());
            const CycFieldElem& col = terms[ui];
            for (size_t row = 0; row < phi; ++row) a.at(row, ci) = col.c[row];
        }
        if (a.rank() != phi)
            throw std::logic_error("family conjugates do not span: singular system");
        RatMat rhs(phi, slots);
        for (size_t k = 0; k < slots; ++k) {
            const CycFieldElem& e = w.entries[static_cast<size_t>(rep)][k];
            for (size_t row = 0; row < phi; ++row) rhs.at(row, k) = e.c[row];
        }
        const auto sol = a.solve(rhs);
        if (!sol) throw std::logic_error("normal-basis system is inconsistent");
        for (size_t ci = 0; ci < phi; ++ci)
            for (size_t k = 0; k < slots; ++k)
                m[static_cast<size_t>(comps[ci])][k] = sol->at(ci, k);
    }
    if (!(phi_map(ix, m, fam) == w))
        throw std::logic_error("class is not in the image of the averaging map");
    return m;
}

GeometricClass geometric_pushforward(const EquivariantMap& f,
                                     const CyclotomicInertia& iy,
                                     const CyclotomicInertia& ix,
                                     const GeometricClass& m) {
    check_geometric_shape(iy, m);
    GeometricClass out = geometric_zero(ix);
    for (size_t c = 0; c < iy.components.size(); ++c) {
        const InertiaComponent& comp = iy.components[c];
        const long ct = ix.component_of_element[static_cast<size_t>(comp.h)];
        if (ct < 0) throw std::logic_error("image component left the fixed locus");
        for (size_t k = 0; k < m[c].size(); ++k) {
            if (m[c][k] == rat(0)) continue;
            const size_t oi = static_cast<size_t>(comp.orbit_ids[k]);
            const long rep = iy.base.orbits[oi].points[0];
            const long oj = f.target.orbit_of[static_cast<size_t>(
                f.point_map[static_cast<size_t>(rep)])];
            const long slot = ix.slot_of(ct, oj);
            if (slot < 0) throw std::logic_error("image orbit left the fixed locus");
            const Rational weight =
                rat(ix.base.orbits[static_cast<size_t>(oj)].stabilizer.order(),
                    iy.base.orbits[oi].stabilizer.order());
            out[static_cast<size_t>(ct)][static_cast<size_t>(slot)] =
                out[static_cast<size_t>(ct)][static_cast<size_t>(slot)] +
                m[c][k] * weight;
        }
    }
    return out;
}

bool phi_covariance_check(const EquivariantMap& f, const NormalBasisFamily& fam) {
    const CyclotomicInertia iy = cyclotomic_inertia(f.source);
    const CyclotomicInertia ix = cyclotomic_inertia(f.target);
    for (size_t c = 0; c < iy.components.size(); ++c)
        for (size_t k = 0; k < iy.components[c].orbit_ids.size(); ++k) {
            GeometricClass e = geometric_zero(iy);
            e[c][k] = rat(1);
            const TwistedClass lhs =
                phi_map(ix, geometric_pushforward(f, iy, ix, e), fam);
            const TwistedClass rhs =
                inertia_pushforward(f, iy, ix, phi_map(iy, e, fam));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

bool tracedown_check(const NormalBasisFamily& fam, long n, long r) {
    if (n % r != 0 || fam.modulus % n != 0)
        throw std::invalid_argument("orders must nest inside the family modulus");
    const CycFieldElem top = fam.x.at(n) * rat(n);
    const CycFieldElem bottom = fam.x.at(r) * rat(r);
    // Per conjugate: pushing conj_u(n x_n) down the coefficient rings lands
    // exactly on conj_{u mod r}(r x_r).
    for (long u : units_mod(n)) {
        const CycFieldElem lhs = mu_localized_pushforward(galois_conj(top, u), r);
        if (!(lhs == galois_conj(bottom, u % r))) return false;
    }
    // Aggregate form, as the naturality proof groups it: averaging over the
    // units above a fixed unit mod r reproduces the r-level average term.
    for (long u0 : units_mod(r)) {
        CycFieldElem sum = CycFieldElem::zero(r);
        for (long u : units_mod(n))
            if (u % r == u0) sum = sum + mu_localized_pushforward(galois_conj(top, u), r);
        sum = sum * rat(1, euler_phi(n));
        if (!(sum == galois_conj(bottom, u0) * rat(1, euler_phi(r)))) return false;
    }
    return true;
}

std::vector<Rational> rational_rr(const GSpace& x, const KClass& a,
                                  const NormalBasisFamily& fam) {
    const CyclotomicInertia ix = cyclotomic_inertia(x);
    const GeometricClass m = phi_inverse(ix, lrr_forward(ix, a), fam);
    std::vector<Rational> out;
    for (const std::vector<Rational>& row : m)
        out.insert(out.end(), row.begin(), row.end());
    return out;
}

bool rational_rr_bijective(const GSpace& x, const NormalBasisFamily& fam) {
    const size_t dim = static_cast<size_t>(k_dim(x));
    RatMat a(dim, dim);
    for (size_t i = 0; i < dim; ++i) {
        std::vector<Rational> e(dim, rat(0));
        e[i] = rat(1);
        const std::vector<Rational> col = rational_rr(x, k_from_coords(x, e), fam);
        if (col.size() != dim) return false;  // orbit count of the inertia
        for (size_t row = 0; row < dim; ++row) a.at(row, i) = col[row];
    }
    return a.rank() == dim;
}

}  // namespace kinertia
