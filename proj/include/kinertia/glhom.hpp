#pragma once

#include <vector>

#include "kinertia/rational.hpp"

namespace kinertia {

// Connected component of the space of homomorphisms mu_r -> GL_n, recorded
// by its eigenspace rank function d: Z/r -> N with sum n (the rank of the
// chi-eigenspace for each character chi of mu_r).
struct HomComponent {
    long r = 1;
    long n = 0;
    std::vector<long> d;

    bool operator==(const HomComponent&) const = default;
    bool operator<(const HomComponent& o) const;
};

// Group-theoretic profile of a mono component: the centralizer is the
// product of GL_{d(chi)} over the support, Delta its block-permutation Weyl
// part, w the unit twists preserving d, and Gamma the extension of w by
// Delta (so the orders multiply).
struct SubgroupProfile {
    HomComponent component;
    std::vector<long> centralizer_blocks;  // positive ranks, descending
    Int delta_order = 1;                   // product of d(chi)!
    long w_order = 1;                      // units u with d(u*chi) = d(chi)
    Int gamma_order = 1;                   // delta_order * w_order
};

// All rank functions d: Z/r -> N with sum n; there are C(n+r-1, r-1).
std::vector<HomComponent> enumerate_hom_components(long r, long n);

// Whether the component consists of monomorphisms: the support of d must
// generate Z/r, i.e. gcd(support, r) = 1.
bool is_mono(const HomComponent& c);

// The components for mu_r biject with mono components over the divisors
// r' | r, by contracting d onto the subgroup its support generates.
bool quotient_partition_check(long r, long n);

SubgroupProfile profile(const HomComponent& c);  // requires is_mono

// Orbits of the unit action u . d = d(u*) on mono components; each orbit is
// sorted and the orbits are ordered by their least member.
std::vector<std::vector<HomComponent>> aut_orbits_of_types(long r, long n);

}  // namespace kinertia
