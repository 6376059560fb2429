#pragma once

#include <random>
#include <vector>

#include "kinertia/gset.hpp"

namespace kinertia {

// One abelian group per isomorphism class of order <= max_order, presented
// by its invariant-factor chain d_1 | d_2 | ... | d_k (ascending; the
// trivial group is the empty chain), ordered by (order, chain).
std::vector<FinAbGroup> groups_up_to(long max_order);

// Every action of A on at most max_points points, one per isomorphism
// class: the coset spaces of the nonempty subgroup multisets whose total
// index fits the budget, in the deterministic subgroup-list order.
std::vector<GSpace> coset_spaces_up_to(const FinAbGroup& A, long max_points);

// Seeded random action within the point budget: a random subgroup multiset
// realized as a coset space, then relabeled by a random permutation of the
// points, so instances exercise arbitrary labelings rather than coset
// order. Always has at least one orbit.
GSpace random_space(const FinAbGroup& A, long max_points, std::mt19937_64& rng);

// Seeded random equivariant map: a random source within the point budget
// and, per source orbit, a random overgroup of its stabilizer as the image
// orbit, with the canonical coset projection on points. The target point
// count never exceeds the source's.
EquivariantMap random_map(const FinAbGroup& A, long max_points,
                          std::mt19937_64& rng);

}  // namespace kinertia
