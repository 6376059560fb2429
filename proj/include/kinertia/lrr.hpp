#pragma once

#include <array>
#include <vector>

#include "kinertia/gset.hpp"

namespace kinertia {

// One inertia component: a group element h of order r whose fixed locus is
// nonempty, together with the orbits it fixes (whole orbits, the group being
// abelian). Components of conjugate embeddings h^u share the orbit list.
struct InertiaComponent {
    long h = 0;
    long r = 1;
    std::vector<long> orbit_ids;  // ascending indices into the base orbit list
};

// The cyclotomic inertia of a G-set: one component per group element with
// nonempty fixed locus, sorted by (order, element), grouped into classes by
// the cyclic subgroup the element generates.
struct CyclotomicInertia {
    GSpace base;
    std::vector<InertiaComponent> components;
    std::vector<long> component_of_element;        // |G| entries, -1 if empty
    std::vector<DualCyclicSubgroup> sigmas;        // subgroups with fixed points
    std::vector<long> sigma_of_component;          // index into sigmas
    std::vector<std::vector<long>> components_of_sigma;

    long slot_of(long comp, long orbit_id) const;  // -1 when the orbit is absent
};

CyclotomicInertia cyclotomic_inertia(GSpace x);

// Twisted class: for each component (h, r) one element of Q(zeta_r) per
// fixed orbit, recorded in evaluation coordinates (the coefficient on the
// orbit's geometric unit after evaluating characters at h).
struct TwistedClass {
    std::vector<std::vector<CycFieldElem>> entries;

    bool operator==(const TwistedClass&) const = default;
    bool is_zero() const;
};

TwistedClass twisted_zero(const CyclotomicInertia& ix);

// Conjugation-equivariance across the components of one cyclic subgroup:
// the entry at h^u must be the u-th Galois conjugate of the entry at h.
bool aut_invariant(const CyclotomicInertia& ix, const TwistedClass& w);
TwistedClass aut_average(const CyclotomicInertia& ix, const TwistedClass& w);

// Family of ordinary classes over the inertia components, one stabilizer
// algebra element per fixed orbit of each component.
struct TautClass {
    std::vector<std::vector<GroupAlgebraElem>> entries;

    bool operator==(const TautClass&) const = default;
};

TautClass taut_zero(const CyclotomicInertia& ix);
// Cut every entry of the family down to the factor of the subgroup its
// component generates (the tautological localization).
TautClass taut_project(const CyclotomicInertia& ix, const TautClass& raw);
bool taut_is_local(const CyclotomicInertia& ix, const TautClass& t);

// Sum the component classes back onto the base orbits (the stabilizer of a
// fixed orbit is unchanged, so this is extension by zero plus addition).
KClass rho_star(const CyclotomicInertia& ix, const TautClass& t);

// The unique element of Q[s]/(s^r - 1) projecting to x on the conductor
// component and to zero on every other one.
CycModN splitting_embed(const CycFieldElem& x);

// One orbit of the untwisting: distribute an element of the mu_r ring over
// the characters of the stabilizer through the geometric unit, then collapse
// chi (x) s^j along evaluation at h (chi survives with the coefficient of
// s^j exactly when chi(h) = zeta_r^j). h_coord indexes h in the stabilizer.
GroupAlgebraElem untwist_orbit(const FinAbGroup& stab, long h_coord,
                               const CycModN& m);

// Componentwise untwisting of a twisted class into a localized family.
TautClass beta(const CyclotomicInertia& ix, const TwistedClass& w);

// The inverse direction of the decomposition: untwist and sum.
KClass lrr_inverse(const CyclotomicInertia& ix, const TwistedClass& w);

// The forward direction: on component (h, r) and fixed orbit O the entry is
// (r/phi(r)) * evaluate(a_O, h). Every call verifies the round trip
// lrr_inverse(result) == a exactly and throws if it fails.
TwistedClass lrr_forward(const CyclotomicInertia& ix, const KClass& a);

// Same map computed by exact linear inversion: assemble the matrix of
// lrr_inverse on the invariant coordinates, solve, and expand. Agrees with
// lrr_forward on the nose; exists to cross-check it.
TwistedClass lrr_forward_via_inversion(const CyclotomicInertia& ix, const KClass& a);

// Rational coordinates on the conjugation-invariant twisted classes: one
// block per cyclic subgroup, phi(r) power-basis coordinates per fixed orbit,
// read at the component of the subgroup's canonical generator.
std::vector<std::array<long, 3>> invariant_slots(const CyclotomicInertia& ix);
TwistedClass invariant_expand(const CyclotomicInertia& ix,
                              const std::vector<Rational>& coords);
std::vector<Rational> invariant_coords(const CyclotomicInertia& ix,
                                       const TwistedClass& w);

// For every cyclic subgroup sigma: reading the forward coordinates back off
// the image of the sigma-block of an invariant class returns phi(r)/r times
// the class. Exact check over a basis of the invariant coordinates.
bool comp_check(const CyclotomicInertia& ix);

// Scale each component by phi(r)/r and lift the coefficients to the common
// conductor (the exponent of the group).
TwistedClass toen_map(const CyclotomicInertia& ix, const TwistedClass& w);

// Push-forward on twisted classes: the component of h maps to the component
// of the same h, each fixed orbit to its image orbit with multiplicity the
// stabilizer index. (Orders never drop for maps over a fixed group, so no
// trace-down of coefficients occurs here.) Entries sit at each component's
// own conductor, or all at the group exponent when lifted_to_exponent is
// set (the shape produced by toen_map).
TwistedClass inertia_pushforward(const EquivariantMap& f,
                                 const CyclotomicInertia& iy,
                                 const CyclotomicInertia& ix,
                                 const TwistedClass& w,
                                 bool lifted_to_exponent = false);

// Both naturality squares for a map of G-sets: the forward map and its
// conductor-lifted rescaling each commute with push-forward. Checked on a
// full basis of the source decomposition.
bool covariance_check(const EquivariantMap& f);

// The summing map rho_star restricted to invariant localized families is a
// bijection onto the order-r part of the decomposition, for every r. Exact
// rank computation.
bool rho_star_invariants_bijective(const CyclotomicInertia& ix);

}  // namespace kinertia
