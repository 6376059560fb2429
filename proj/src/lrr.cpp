#include "kinertia/lrr.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "kinertia/ratmat.hpp"

namespace kinertia {

namespace {

// The embeddings of the power basis of Q(zeta_r) into Q[s]/(s^r - 1),
// memoized: splitting_embed is linear, so any element is a combination.
const CycModN& embedded_basis(long r, long j) {
    static std::map<std::pair<long, long>, CycModN> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(r, j);
    auto it = memo.find(key);
    if (it == memo.end()) {
        CycFieldElem z = CycFieldElem::zero(r);
        z.c[static_cast<size_t>(j)] = rat(1);
        it = memo.emplace(key, embed_i(z, r)).first;
    }
    return it->second;
}

// Idempotent of the factor cut out by a cyclic subgroup of the stabilizer,
// given by its sorted element set in stabilizer coordinates.
const GroupAlgebraElem& subgroup_idempotent(const FinAbGroup& habs,
                                            const std::vector<long>& elems) {
    for (const AlgebraFactor& f : cached_algebra_factors(habs))
        if (f.sigma.elements == elems) return f.idempotent;
    throw std::logic_error("cyclic subgroup missing from the factorization");
}

// Elements of sigma rewritten in the coordinates of an orbit stabilizer.
std::vector<long> sigma_in_stabilizer(const Subgroup& H,
                                      const DualCyclicSubgroup& sigma) {
    std::vector<long> image;
    image.reserve(sigma.elements.size());
    for (long e : sigma.elements) image.push_back(H.coord_index_of(e));
    std::sort(image.begin(), image.end());
    return image;
}

void check_twisted_shape(const CyclotomicInertia& ix, const TwistedClass& w) {
    if (w.entries.size() != ix.components.size())
        throw std::invalid_argument("twisted class has the wrong component count");
    for (size_t c = 0; c < w.entries.size(); ++c)
        if (w.entries[c].size() != ix.components[c].orbit_ids.size())
            throw std::invalid_argument("twisted class has the wrong orbit count");
}

void check_taut_shape(const CyclotomicInertia& ix, const TautClass& t) {
    if (t.entries.size() != ix.components.size())
        throw std::invalid_argument("component family has the wrong component count");
    for (size_t c = 0; c < t.entries.size(); ++c)
        if (t.entries[c].size() != ix.components[c].orbit_ids.size())
            throw std::invalid_argument("component family has the wrong orbit count");
}

}  // namespace

long CyclotomicInertia::slot_of(long comp, long orbit_id) const {
    const std::vector<long>& ids =
        components[static_cast<size_t>(comp)].orbit_ids;
    auto it = std::lower_bound(ids.begin(), ids.end(), orbit_id);
    if (it == ids.end() || *it != orbit_id) return -1;
    return static_cast<long>(it - ids.begin());
}

CyclotomicInertia cyclotomic_inertia(GSpace x) {
    CyclotomicInertia ix;
    const FinAbGroup& G = x.set.group;
    ix.component_of_element.assign(static_cast<size_t>(G.size()), -1);
    for (const DualCyclicSubgroup& sigma : dual_cyclic_subgroups(G)) {
        std::vector<long> ids = fixed_orbit_indices(x, sigma.generator);
        if (ids.empty()) continue;
        const long s = static_cast<long>(ix.sigmas.size());
        ix.sigmas.push_back(sigma);
        ix.components_of_sigma.emplace_back();
        for (long h : sigma.generators) {
            ix.components.push_back(InertiaComponent{h, sigma.r, ids});
            ix.sigma_of_component.push_back(s);
        }
    }
    // Sort by (order, element) and rebuild the lookups.
    std::vector<size_t> perm(ix.components.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        const InertiaComponent& ca = ix.components[a];
        const InertiaComponent& cb = ix.components[b];
        return std::tie(ca.r, ca.h) < std::tie(cb.r, cb.h);
    });
    std::vector<InertiaComponent> comps;
    std::vector<long> sigma_of;
    for (size_t i : perm) {
        comps.push_back(std::move(ix.components[i]));
        sigma_of.push_back(ix.sigma_of_component[i]);
    }
    ix.components = std::move(comps);
    ix.sigma_of_component = std::move(sigma_of);
    for (size_t c = 0; c < ix.components.size(); ++c) {
        ix.component_of_element[static_cast<size_t>(ix.components[c].h)] =
            static_cast<long>(c);
        ix.components_of_sigma[static_cast<size_t>(ix.sigma_of_component[c])]
            .push_back(static_cast<long>(c));
    }
    ix.base = std::move(x);
    return ix;
}

bool TwistedClass::is_zero() const {
    for (const auto& comp : entries)
        for (const CycFieldElem& e : comp)
            if (!e.is_zero()) return false;
    return true;
}

TwistedClass twisted_zero(const CyclotomicInertia& ix) {
    TwistedClass w;
    for (const InertiaComponent& c : ix.components)
        w.entries.emplace_back(c.orbit_ids.size(), CycFieldElem::zero(c.r));
    return w;
}

bool aut_invariant(const CyclotomicInertia& ix, const TwistedClass& w) {
    check_twisted_shape(ix, w);
    for (size_t s = 0; s < ix.sigmas.size(); ++s) {
        const DualCyclicSubgroup& sigma = ix.sigmas[s];
        const long rep_comp = ix.component_of_element[static_cast<size_t>(
            sigma.generator)];
        for (long c : ix.components_of_sigma[s]) {
            // The unit carrying the canonical generator to this component.
            long u = 1;
            for (long k : units_mod(sigma.r))
                if (ix.base.set.group.mul(k, sigma.generator) ==
                    ix.components[static_cast<size_t>(c)].h) {
                    u = k;
                    break;
                }
            for (size_t k = 0; k < w.entries[static_cast<size_t>(c)].size(); ++k)
                if (w.entries[static_cast<size_t>(c)][k] !=
                    galois_conj(w.entries[static_cast<size_t>(rep_comp)][k], u))
                    return false;
        }
    }
    return true;
}

TwistedClass aut_average(const CyclotomicInertia& ix, const TwistedClass& w) {
    check_twisted_shape(ix, w);
    TwistedClass out = twisted_zero(ix);
    for (size_t s = 0; s < ix.sigmas.size(); ++s) {
        const DualCyclicSubgroup& sigma = ix.sigmas[s];
        const long r = sigma.r;
        const std::vector<long> units = units_mod(r);
        const size_t slots = ix.components[static_cast<size_t>(
            ix.components_of_sigma[s].front())].orbit_ids.size();
        // Average at the canonical generator, pulling each component back.
        std::vector<CycFieldElem> avg(slots, CycFieldElem::zero(r));
        for (long u : units) {
            long inv = 1;
            for (long k : units) if ((k * u) % r == 1 % r) { inv = k; break; }
            const long c = ix.component_of_element[static_cast<size_t>(
                ix.base.set.group.mul(u, sigma.generator))];
            for (size_t k = 0; k < slots; ++k)
                avg[k] = avg[k] +
                         galois_conj(w.entries[static_cast<size_t>(c)][k], inv);
        }
        const Rational scale = rat(1, static_cast<long>(units.size()));
        for (size_t k = 0; k < slots; ++k) avg[k] = avg[k] * scale;
        // Transport back out to every component of the subgroup.
        for (long c : ix.components_of_sigma[s]) {
            long u = 1;
            for (long k : units)
                if (ix.base.set.group.mul(k, sigma.generator) ==
                    ix.components[static_cast<size_t>(c)].h) {
                    u = k;
                    break;
                }
            for (size_t k = 0; k < slots; ++k)
                out.entries[static_cast<size_t>(c)][k] = galois_conj(avg[k], u);
        }
    }
    return out;
}

TautClass taut_zero(const CyclotomicInertia& ix) {
    TautClass t;
    for (const InertiaComponent& c : ix.components) {
        t.entries.emplace_back();
        for (long o : c.orbit_ids)
            t.entries.back().push_back(GroupAlgebraElem::zero(
                ix.base.orbits[static_cast<size_t>(o)].stabilizer.abstract_group()));
    }
    return t;
}

TautClass taut_project(const CyclotomicInertia& ix, const TautClass& raw) {
    check_taut_shape(ix, raw);
    TautClass out = raw;
    for (size_t c = 0; c < ix.components.size(); ++c) {
        const DualCyclicSubgroup& sigma =
            ix.sigmas[static_cast<size_t>(ix.sigma_of_component[c])];
        for (size_t k = 0; k < out.entries[c].size(); ++k) {
            const Subgroup& H =
                ix.base.orbits[static_cast<size_t>(ix.components[c].orbit_ids[k])]
                    .stabilizer;
            out.entries[c][k] =
                out.entries[c][k] *
                subgroup_idempotent(H.abstract_group(), sigma_in_stabilizer(H, sigma));
        }
    }
    return out;
}

bool taut_is_local(const CyclotomicInertia& ix, const TautClass& t) {
    check_taut_shape(ix, t);
    return taut_project(ix, t) == t;
}

KClass rho_star(const CyclotomicInertia& ix, const TautClass& t) {
    check_taut_shape(ix, t);
    KClass out = k_zero(ix.base);
    for (size_t c = 0; c < ix.components.size(); ++c)
        for (size_t k = 0; k < t.entries[c].size(); ++k) {
            const size_t o = static_cast<size_t>(ix.components[c].orbit_ids[k]);
            out.entries[o] = out.entries[o] + t.entries[c][k];
        }
    return out;
}

CycModN splitting_embed(const CycFieldElem& x) {
    CycModN out = CycModN::zero(x.d);
    for (size_t j = 0; j < x.c.size(); ++j) {
        if (x.c[j] == rat(0)) continue;
        const CycModN& base = embedded_basis(x.d, static_cast<long>(j));
        for (long i = 0; i < out.n; ++i)
            out.c[static_cast<size_t>(i)] =
                out.c[static_cast<size_t>(i)] + base.c[static_cast<size_t>(i)] * x.c[j];
    }
    return out;
}

GroupAlgebraElem untwist_orbit(const FinAbGroup& stab, long h_coord,
                               const CycModN& m) {
    const long r = stab.order_of(h_coord);
    if (m.n != r)
        throw std::invalid_argument("ring element conductor must equal the order of h");
    const long N = stab.exponent();
    GroupAlgebraElem out = GroupAlgebraElem::zero(stab);
    const Rational scale = rat(1, stab.size());
    for (long chi = 0; chi < stab.size(); ++chi) {
        // chi(h) = zeta_N^p = zeta_r^j with j = p r / N (an integer since h
        // has order r).
        const long p = stab.pairing(chi, h_coord);
        if ((p * r) % N != 0) throw std::logic_error("pairing exponent not divisible");
        const long j = (p * r / N) % r;
        out.coeffs[static_cast<size_t>(chi)] = m.c[static_cast<size_t>(j)] * scale;
    }
    return out;
}

TautClass beta(const CyclotomicInertia& ix, const TwistedClass& w) {
    check_twisted_shape(ix, w);
    TautClass out = taut_zero(ix);
    for (size_t c = 0; c < ix.components.size(); ++c) {
        const InertiaComponent& comp = ix.components[c];
        for (size_t k = 0; k < w.entries[c].size(); ++k) {
            if (w.entries[c][k].d != comp.r)
                throw std::invalid_argument("entry conductor must match the component");
            if (w.entries[c][k].is_zero()) continue;
            const Subgroup& H =
                ix.base.orbits[static_cast<size_t>(comp.orbit_ids[k])].stabilizer;
            out.entries[c][k] =
                untwist_orbit(H.abstract_group(), H.coord_index_of(comp.h),
                              splitting_embed(w.entries[c][k]));
        }
    }
    return out;
}

KClass lrr_inverse(const CyclotomicInertia& ix, const TwistedClass& w) {
    return rho_star(ix, beta(ix, w));
}

namespace {

// Forward coordinates without the round-trip verification.
TwistedClass forward_raw(const CyclotomicInertia& ix, const KClass& a) {
    if (a.entries.size() != ix.base.orbits.size())
        throw std::invalid_argument("class does not live on the inertia base");
    TwistedClass w = twisted_zero(ix);
    for (size_t c = 0; c < ix.components.size(); ++c) {
        const InertiaComponent& comp = ix.components[c];
        const Rational scale = rat(comp.r, euler_phi(comp.r));
        for (size_t k = 0; k < comp.orbit_ids.size(); ++k) {
            const size_t o = static_cast<size_t>(comp.orbit_ids[k]);
            const Subgroup& H = ix.base.orbits[o].stabilizer;
            w.entries[c][k] =
                evaluate(a.entries[o], H.coord_index_of(comp.h)) * scale;
        }
    }
    return w;
}

}  // namespace

TwistedClass lrr_forward(const CyclotomicInertia& ix, const KClass& a) {
    TwistedClass w = forward_raw(ix, a);
    if (!(lrr_inverse(ix, w) == a))
        throw std::logic_error("forward coordinates fail to invert back");
    return w;
}

std::vector<std::array<long, 3>> invariant_slots(const CyclotomicInertia& ix) {
    std::vector<std::array<long, 3>> slots;
    for (size_t s = 0; s < ix.sigmas.size(); ++s) {
        const long rep = ix.component_of_element[static_cast<size_t>(
            ix.sigmas[s].generator)];
        const InertiaComponent& comp = ix.components[static_cast<size_t>(rep)];
        for (long k = 0; k < static_cast<long>(comp.orbit_ids.size()); ++k)
            for (long j = 0; j < euler_phi(comp.r); ++j)
                slots.push_back({rep, k, j});
    }
    return slots;
}

TwistedClass invariant_expand(const CyclotomicInertia& ix,
                              const std::vector<Rational>& coords) {
    const std::vector<std::array<long, 3>> slots = invariant_slots(ix);
    if (coords.size() != slots.size())
        throw std::invalid_argument("invariant coordinate vector has the wrong length");
    TwistedClass w = twisted_zero(ix);
    for (size_t i = 0; i < slots.size(); ++i)
        w.entries[static_cast<size_t>(slots[i][0])][static_cast<size_t>(slots[i][1])]
            .c[static_cast<size_t>(slots[i][2])] = coords[i];
    // Transport the representative entries across each subgroup's components.
    for (size_t s = 0; s < ix.sigmas.size(); ++s) {
        const DualCyclicSubgroup& sigma = ix.sigmas[s];
        const long rep = ix.component_of_element[static_cast<size_t>(sigma.generator)];
        for (long c : ix.components_of_sigma[s]) {
            if (c == rep) continue;
            long u = 1;
            for (long k : units_mod(sigma.r))
                if (ix.base.set.group.mul(k, sigma.generator) ==
                    ix.components[static_cast<size_t>(c)].h) {
                    u = k;
                    break;
                }
            for (size_t k = 0; k < w.entries[static_cast<size_t>(c)].size(); ++k)
                w.entries[static_cast<size_t>(c)][k] =
                    galois_conj(w.entries[static_cast<size_t>(rep)][k], u);
        }
    }
    return w;
}

std::vector<Rational> invariant_coords(const CyclotomicInertia& ix,
                                       const TwistedClass& w) {
    if (!aut_invariant(ix, w))
        throw std::invalid_argument("class is not conjugation invariant");
    std::vector<Rational> coords;
    for (const std::array<long, 3>& s : invariant_slots(ix))
        coords.push_back(w.entries[static_cast<size_t>(s[0])][static_cast<size_t>(
            s[1])].c[static_cast<size_t>(s[2])]);
    return coords;
}

TwistedClass lrr_forward_via_inversion(const CyclotomicInertia& ix,
                                       const KClass& a) {
    const std::vector<std::array<long, 3>> slots = invariant_slots(ix);
    const size_t dim = static_cast<size_t>(k_dim(ix.base));
    if (slots.size() != dim)
        throw std::logic_error("invariant coordinate count differs from the dimension");
    RatMat m(dim, dim);
    std::vector<Rational> e(dim, rat(0));
    for (size_t j = 0; j < dim; ++j) {
        e[j] = rat(1);
        std::vector<Rational> col =
            k_coords(ix.base, lrr_inverse(ix, invariant_expand(ix, e)));
        for (size_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
        e[j] = rat(0);
    }
    if (m.rank() != dim)
        throw std::logic_error("inverse decomposition matrix is singular");
    RatMat rhs(dim, 1);
    std::vector<Rational> av = k_coords(ix.base, a);
    for (size_t i = 0; i < dim; ++i) rhs.at(i, 0) = av[i];
    auto sol = m.solve(rhs);
    if (!sol) throw std::logic_error("inverse decomposition system is inconsistent");
    std::vector<Rational> coords(dim);
    for (size_t i = 0; i < dim; ++i) coords[i] = sol->at(i, 0);
    return invariant_expand(ix, coords);
}

bool comp_check(const CyclotomicInertia& ix) {
    const std::vector<std::array<long, 3>> slots = invariant_slots(ix);
    std::vector<Rational> coords(slots.size(), rat(0));
    for (size_t i = 0; i < slots.size(); ++i) {
        coords[i] = rat(1);
        TwistedClass w = invariant_expand(ix, coords);
        coords[i] = rat(0);
        // w is supported on the components of a single cyclic subgroup.
        const long rep = slots[i][0];
        const long s = ix.sigma_of_component[static_cast<size_t>(rep)];
        const long r = ix.sigmas[static_cast<size_t>(s)].r;
        const KClass pushed = lrr_inverse(ix, w);
        // Read the coordinates back off at every component of the subgroup.
        const Rational expected_scale = rat(euler_phi(r), r);
        for (long c : ix.components_of_sigma[static_cast<size_t>(s)]) {
            const InertiaComponent& comp = ix.components[static_cast<size_t>(c)];
            for (size_t k = 0; k < comp.orbit_ids.size(); ++k) {
                const size_t o = static_cast<size_t>(comp.orbit_ids[k]);
                const Subgroup& H = ix.base.orbits[o].stabilizer;
                CycFieldElem readback =
                    evaluate(pushed.entries[o], H.coord_index_of(comp.h));
                if (!(readback ==
                      w.entries[static_cast<size_t>(c)][k] * expected_scale))
                    return false;
            }
        }
    }
    return true;
}

TwistedClass toen_map(const CyclotomicInertia& ix, const TwistedClass& w) {
    check_twisted_shape(ix, w);
    const long N = ix.base.set.group.exponent();
    TwistedClass out;
    for (size_t c = 0; c < ix.components.size(); ++c) {
        const long r = ix.components[c].r;
        const Rational scale = rat(euler_phi(r), r);
        out.entries.emplace_back();
        for (const CycFieldElem& x : w.entries[c])
            out.entries.back().push_back(lift_to_conductor(x, N) * scale);
    }
    return out;
}

TwistedClass inertia_pushforward(const EquivariantMap& f,
                                 const CyclotomicInertia& iy,
                                 const CyclotomicInertia& ix,
                                 const TwistedClass& w,
                                 bool lifted_to_exponent) {
    check_twisted_shape(iy, w);
    const long N = ix.base.set.group.exponent();
    TwistedClass out;
    for (const InertiaComponent& c : ix.components)
        out.entries.emplace_back(
            c.orbit_ids.size(),
            CycFieldElem::zero(lifted_to_exponent ? N : c.r));
    for (size_t c = 0; c < iy.components.size(); ++c) {
        const InertiaComponent& comp = iy.components[c];
        const long ct = ix.component_of_element[static_cast<size_t>(comp.h)];
        if (ct < 0)
            throw std::logic_error("image fixed locus vanished under the map");
        for (size_t k = 0; k < comp.orbit_ids.size(); ++k) {
            const size_t oi = static_cast<size_t>(comp.orbit_ids[k]);
            const long rep = f.source.orbits[oi].points.front();
            const long oj = f.target.orbit_of[static_cast<size_t>(
                f.point_map[static_cast<size_t>(rep)])];
            const long slot = ix.slot_of(ct, oj);
            if (slot < 0) throw std::logic_error("image orbit left the fixed locus");
            const Rational weight =
                rat(ix.base.orbits[static_cast<size_t>(oj)].stabilizer.order(),
                    iy.base.orbits[oi].stabilizer.order());
            auto& target = out.entries[static_cast<size_t>(ct)][static_cast<size_t>(slot)];
            target = target + w.entries[c][k] * weight;
        }
    }
    return out;
}

bool covariance_check(const EquivariantMap& f) {
    const CyclotomicInertia iy = cyclotomic_inertia(f.source);
    const CyclotomicInertia ix = cyclotomic_inertia(f.target);
    const long dim = k_dim(f.source);
    std::vector<Rational> e(static_cast<size_t>(dim), rat(0));
    for (long j = 0; j < dim; ++j) {
        e[static_cast<size_t>(j)] = rat(1);
        const KClass a = k_from_coords(f.source, e);
        e[static_cast<size_t>(j)] = rat(0);

        const TwistedClass la = lrr_forward(iy, a);
        const TwistedClass lhs = lrr_forward(ix, pushforward(f, a));
        const TwistedClass rhs = inertia_pushforward(f, iy, ix, la, false);
        if (!(lhs == rhs)) return false;

        const TwistedClass tl_lhs = toen_map(ix, lhs);
        const TwistedClass tl_rhs =
            inertia_pushforward(f, iy, ix, toen_map(iy, la), true);
        if (!(tl_lhs == tl_rhs)) return false;
    }
    return true;
}

bool rho_star_invariants_bijective(const CyclotomicInertia& ix) {
    const size_t dim = static_cast<size_t>(k_dim(ix.base));
    std::vector<long> orders;
    for (const DualCyclicSubgroup& s : ix.sigmas) orders.push_back(s.r);
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());

    for (long r : orders) {
        // Columns of rho_star on the invariant localized families of order r.
        std::vector<std::vector<Rational>> cols;
        for (size_t s = 0; s < ix.sigmas.size(); ++s) {
            const DualCyclicSubgroup& sigma = ix.sigmas[s];
            if (sigma.r != r) continue;
            const std::vector<long>& comps = ix.components_of_sigma[s];
            const InertiaComponent& rep =
                ix.components[static_cast<size_t>(comps.front())];
            for (size_t k = 0; k < rep.orbit_ids.size(); ++k) {
                const size_t o = static_cast<size_t>(rep.orbit_ids[k]);
                const Subgroup& H = ix.base.orbits[o].stabilizer;
                const FinAbGroup habs = H.abstract_group();
                const long h_coord = H.coord_index_of(sigma.generator);
                const long nh = habs.exponent();
                // A character with chi(h) = zeta_r exactly.
                long chi1 = -1;
                for (long chi = 0; chi < habs.size(); ++chi)
                    if ((habs.pairing(chi, h_coord) * r) % nh == 0 &&
                        ((habs.pairing(chi, h_coord) * r / nh) % r) == 1 % r) {
                        chi1 = chi;
                        break;
                    }
                if (chi1 < 0) return false;  // evaluation not onto the field
                const GroupAlgebraElem es = subgroup_idempotent(
                    habs, sigma_in_stabilizer(H, sigma));
                GroupAlgebraElem pow = es;
                for (long j = 0; j < euler_phi(r); ++j) {
                    // Invariant family: the same class at every component.
                    TautClass t = taut_zero(ix);
                    for (long c : comps)
                        t.entries[static_cast<size_t>(c)][k] = pow;
                    cols.push_back(k_coords(ix.base, rho_star(ix, t)));
                    pow = pow * GroupAlgebraElem::character(habs, chi1);
                }
            }
        }

        // The order-r part of the decomposition: projection of the basis.
        RatMat proj(dim, dim);
        std::vector<Rational> e(dim, rat(0));
        std::vector<DualCyclicSubgroup> order_r;
        for (const DualCyclicSubgroup& s : ix.sigmas)
            if (s.r == r) order_r.push_back(s);
        for (size_t j = 0; j < dim; ++j) {
            e[j] = rat(1);
            const KClass b = k_from_coords(ix.base, e);
            e[j] = rat(0);
            KClass loc = k_zero(ix.base);
            for (const DualCyclicSubgroup& s : order_r)
                loc = k_add(loc, localize(ix.base, b, s));
            const std::vector<Rational> v = k_coords(ix.base, loc);
            for (size_t i = 0; i < dim; ++i) proj.at(i, j) = v[i];
        }
        const size_t local_dim = proj.rank();
        if (local_dim != cols.size()) return false;

        RatMat m(dim, cols.size());
        for (size_t j = 0; j < cols.size(); ++j)
            for (size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
        if (m.rank() != cols.size()) return false;  // injective
        // Each column already lies in the order-r part: projecting it there
        // must not move it.
        for (size_t j = 0; j < cols.size(); ++j) {
            std::vector<Rational> pv = proj.apply(cols[j]);
            if (pv != cols[j]) return false;
        }
    }
    return true;
}

}  // namespace kinertia
