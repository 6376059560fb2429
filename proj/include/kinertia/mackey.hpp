#pragma once

#include <vector>

#include "kinertia/cyclotomic.hpp"
#include "kinertia/ratmat.hpp"

namespace kinertia {

// Permutation of {0..m-1}, stored as the image vector.
using Perm = std::vector<long>;

Perm perm_identity(long m);
Perm perm_compose(const Perm& a, const Perm& b);  // x -> a[b[x]]
Perm perm_inverse(const Perm& a);
long perm_order(const Perm& a);

// Finite group of permutations, with the element list materialized.
struct PermGroup {
    long degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> elements;  // sorted, closed

    static PermGroup from_generators(long degree, std::vector<Perm> gens);
    long order() const { return static_cast<long>(elements.size()); }
    bool contains(const Perm& p) const;
};

// Cyclic subgroup of a permutation group, named by a generator.
struct CyclicSubgroupNA {
    Perm generator;
    long r = 1;  // order of the generator

    static CyclicSubgroupNA from_generator(Perm g);
    std::vector<Perm> elements() const;  // powers of the generator
};

PermGroup centralizer(const PermGroup& G, const CyclicSubgroupNA& sigma);
PermGroup normalizer(const PermGroup& G, const CyclicSubgroupNA& sigma);
long w_order(const PermGroup& G, const CyclicSubgroupNA& sigma);  // |N|/|C|

struct DoubleCoset {
    Perm representative;
    long size = 0;
};

// Partition of G into H\G/K double cosets; sizes sum to |G|.
std::vector<DoubleCoset> double_cosets(const PermGroup& G,
                                       const std::vector<Perm>& H,
                                       const std::vector<Perm>& K);

// The endomorphism of the representation ring of a cyclic subgroup H given
// by restriction of the induction to G, assembled one double coset at a
// time: each coset contributes induction from H cap H^g after twisting by
// the conjugation unit. Returned as an r x r rational matrix acting on the
// monomial-basis coefficient column of Q[t]/(t^r - 1).
RatMat res_ind_endo(const PermGroup& G, const CyclicSubgroupNA& H);

}  // namespace kinertia
