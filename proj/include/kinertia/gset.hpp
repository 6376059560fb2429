#pragma once

#include <vector>

#include "kinertia/abelian.hpp"
#include "kinertia/mackey.hpp"

namespace kinertia {

// Finite set with an action of a finite abelian group, one commuting
// permutation per cyclic factor (its order divides the factor).
struct GSet {
    FinAbGroup group;
    long points = 0;
    std::vector<Perm> action;  // one permutation per cyclic factor

    long act(long g, long p) const;  // apply the group element of index g
};

// Validating constructor: checks permutation shape, generator orders, and
// commutativity. Throws std::invalid_argument with the offending field.
GSet make_gset(FinAbGroup group, long points, std::vector<Perm> action);

// Disjoint union of the coset spaces A/H_i. Every finite action of the
// abelian group is isomorphic to exactly one such union (up to reordering),
// so these are the universal supply of examples.
GSet coset_gset(const FinAbGroup& A, const std::vector<Subgroup>& stabilizers);

// Canonical coset representatives (the least element of each coset g + H),
// in increasing order — the point labels used by coset_gset, block by block.
std::vector<long> coset_reps(const FinAbGroup& A, const Subgroup& H);

struct Orbit {
    std::vector<long> points;  // sorted
    Subgroup stabilizer;       // common stabilizer (the group is abelian)
};

// A G-set together with its orbit decomposition.
struct GSpace {
    GSet set;
    std::vector<Orbit> orbits;
    std::vector<long> orbit_of;  // point -> orbit index

    static GSpace analyze(GSet x);
};

// Class in the rational equivariant K-theory of the G-set: one element of
// the stabilizer's character group algebra per orbit.
struct KClass {
    std::vector<GroupAlgebraElem> entries;

    bool is_zero() const;
    bool operator==(const KClass&) const = default;
};

long k_dim(const GSpace& x);  // sum of stabilizer orders over orbits
KClass k_zero(const GSpace& x);
KClass k_one(const GSpace& x);
KClass k_add(const KClass& a, const KClass& b);
KClass k_sub(const KClass& a, const KClass& b);
KClass k_mul(const KClass& a, const KClass& b);  // orbitwise product
KClass k_scale(const KClass& a, const Rational& s);

// Canonical (orbit, character) coordinates used by all exact matrix checks.
std::vector<Rational> k_coords(const GSpace& x, const KClass& a);
KClass k_from_coords(const GSpace& x, const std::vector<Rational>& v);

// Map of G-sets over the same group, commuting with the action.
struct EquivariantMap {
    GSpace source, target;
    std::vector<long> point_map;
};

EquivariantMap make_equivariant_map(GSpace source, GSpace target,
                                    std::vector<long> point_map);

// Orbitwise restriction along the stabilizer inclusion of the image orbit.
KClass pullback(const EquivariantMap& f, const KClass& a);
// Orbitwise induction along the same inclusions, summed over the fibers.
KClass pushforward(const EquivariantMap& f, const KClass& a);

// The subset of points fixed by a group element, with the restricted action
// (a union of full orbits, since the group is abelian).
GSet fixed_locus(const GSet& x, long h);
// Orbit indices of x whose stabilizer contains h.
std::vector<long> fixed_orbit_indices(const GSpace& x, long h);

// Cut a class down to the factor of each stabilizer algebra belonging to the
// given cyclic subgroup; orbits whose stabilizer does not contain it get 0.
KClass localize(const GSpace& x, const KClass& a, const DualCyclicSubgroup& sigma);
KClass geometric_part(const GSpace& x, const KClass& a);  // trivial-subgroup factor
KClass algebraic_part(const GSpace& x, const KClass& a);  // complement

// Per-orbit rank: evaluation of each entry at the identity. Restricted to
// geometric parts this is a linear bijection onto the orbit vector space.
std::vector<Rational> moduli_pushforward(const GSpace& x, const KClass& a);

// Finite cover with abelian deck group: the deck action is free, commutes
// with the main action, and its orbits are exactly the projection fibers.
struct GaloisCover {
    GSpace total;                 // covering G-set
    GSpace base;                  // covered G-set
    std::vector<long> projection; // equivariant point map, total -> base
    FinAbGroup deck;
    std::vector<Perm> deck_action;
};

GaloisCover make_galois_cover(GSpace total, GSpace base,
                              std::vector<long> projection, FinAbGroup deck,
                              std::vector<Perm> deck_action);

// Checks the two descent isomorphisms of the cover on geometric parts: the
// pullback is a bijection onto the deck-invariants, and the push-forward
// composed with geometric projection is a bijection from the coinvariants.
bool galois_cover_check(const GaloisCover& c);

// Memoized algebra factorizations, keyed by the cyclic factor list. The
// stabilizers occurring in a catalog repeat the same few abstract groups.
const std::vector<AlgebraFactor>& cached_algebra_factors(const FinAbGroup& A);

}  // namespace kinertia
