#pragma once

#include <vector>

#include "kinertia/cyclotomic.hpp"
#include "kinertia/rational.hpp"

namespace kinertia {

// Finite abelian group presented as a product of cyclic factors Z/n_1 x ... x
// Z/n_k. Elements and characters are both addressed by an index in
// [0, size()): the index is the row-major encoding of the residue tuple
// (r_1, ..., r_k), so index order is lexicographic order on tuples. The same
// index space serves the character group via the pairing below.
struct FinAbGroup {
    std::vector<long> cyclic_factors;

    long size() const;
    long exponent() const;  // lcm of the factors (1 for the trivial group)

    std::vector<long> vec_of(long idx) const;
    long index_of(const std::vector<long>& residues) const;  // reduces mod n_i

    long add(long a, long b) const;
    long neg(long a) const;
    long mul(long k, long a) const;  // k-fold sum, k may be negative
    long order_of(long a) const;

    // <chi, h> = sum chi_i h_i (N/n_i) mod N, N = exponent(). The character
    // chi sends h to zeta_N^<chi,h>.
    long pairing(long chi, long h) const;

    bool operator==(const FinAbGroup&) const = default;
};

std::vector<long> elements(const FinAbGroup& A);

// Group homomorphism dom -> cod, determined by the images of the standard
// generators e_i of dom. Construction validates n_i * gen_images[i] = 0.
struct AbHom {
    FinAbGroup dom, cod;
    std::vector<long> gen_images;

    AbHom(FinAbGroup dom_, FinAbGroup cod_, std::vector<long> images);

    long apply(long a) const;
    // Pullback of a character of cod along the map (the dual homomorphism).
    long dual(long chi_cod) const;
    bool is_injective() const;
};

AbHom compose(const AbHom& g, const AbHom& f);  // g after f

// Subgroup of a parent group, materialized as a closed element set together
// with an independent generating basis (orders form a divisibility chain
// m_1 >= m_2 >= ..., m_{i+1} | m_i), so the subgroup is abstractly the
// product of Z/m_i.
struct Subgroup {
    FinAbGroup parent;
    std::vector<long> elems;         // sorted, closed under the operation
    std::vector<long> basis;         // parent element indices
    std::vector<long> basis_orders;  // basis[i] has exact order basis_orders[i]

    long order() const { return static_cast<long>(elems.size()); }
    bool contains(long e) const;
    FinAbGroup abstract_group() const;
    AbHom inclusion() const;              // abstract_group() -> parent
    long coord_index_of(long elem) const;  // abstract index of a member

    bool operator==(const Subgroup& o) const {
        return parent == o.parent && elems == o.elems;
    }

private:
    friend Subgroup subgroup_from_generators(const FinAbGroup&,
                                             const std::vector<long>&);
    std::vector<std::pair<long, long>> coord_;  // (parent elem, abstract index)
};

Subgroup subgroup_from_generators(const FinAbGroup& A,
                                  const std::vector<long>& gens);
std::vector<Subgroup> all_subgroups(const FinAbGroup& A);
// The inclusion H -> K between the abstract models of nested subgroups.
AbHom hom_between(const Subgroup& H, const Subgroup& K);

// Element of the rational group algebra on the character group of A — the
// representation ring of A with rational coefficients. coeffs is indexed by
// character index; multiplication is convolution of characters.
struct GroupAlgebraElem {
    FinAbGroup group;
    std::vector<Rational> coeffs;

    static GroupAlgebraElem zero(const FinAbGroup& A);
    static GroupAlgebraElem one(const FinAbGroup& A);
    static GroupAlgebraElem character(const FinAbGroup& A, long chi);

    bool is_zero() const;
    GroupAlgebraElem operator+(const GroupAlgebraElem& o) const;
    GroupAlgebraElem operator-(const GroupAlgebraElem& o) const;
    GroupAlgebraElem operator*(const GroupAlgebraElem& o) const;
    GroupAlgebraElem operator*(const Rational& s) const;
    bool operator==(const GroupAlgebraElem& o) const = default;
};

// Evaluation at a group element h of order r: sum of coeffs(chi) *
// zeta_r^(<chi,h> r / N). Ring homomorphism onto Q(zeta_r).
CycFieldElem evaluate(const GroupAlgebraElem& a, long h);

// Cyclic subgroup of A addressed by its canonical generator: the
// lexicographically least element among the generators u*h, gcd(u, r) = 1.
struct DualCyclicSubgroup {
    long r = 1;
    long generator = 0;
    std::vector<long> generators;  // all of them, sorted
    std::vector<long> elements;    // the subgroup itself, sorted

    bool operator==(const DualCyclicSubgroup& o) const {
        return r == o.r && generator == o.generator;
    }
};

// All elements of order exactly r (each one an embedding of mu_r).
std::vector<long> embeddings_of_mu(const FinAbGroup& A, long r);
// One entry per cyclic subgroup, keyed by canonical generator, sorted by it.
std::vector<DualCyclicSubgroup> dual_cyclic_subgroups(const FinAbGroup& A);

// The rational group algebra splits as a product of cyclotomic fields, one
// factor Q(zeta_r) per cyclic subgroup of order r. Each factor is cut out by
// a rational idempotent e_sigma with evaluate(e_sigma, h) = 1 when h
// generates sigma and 0 on generators of every other cyclic subgroup.
struct AlgebraFactor {
    DualCyclicSubgroup sigma;
    GroupAlgebraElem idempotent;
    long conductor = 1;  // r = |sigma|
};

std::vector<AlgebraFactor> factorize_group_algebra(const FinAbGroup& A);

// True when evaluation at the generator of sigma maps the algebra onto all
// of Q(zeta_r), i.e. its kernel is a maximal ideal with quotient the field.
bool maximal_ideal_check(const FinAbGroup& A, const DualCyclicSubgroup& sigma);

// Restriction along f: characters of cod pull back to characters of dom.
GroupAlgebraElem restriction_ab(const AbHom& f, const GroupAlgebraElem& a);
// Induction along injective f: a character of dom goes to the sum of the
// characters of cod restricting to it. Adjoint (transpose) of restriction.
GroupAlgebraElem induction_ab(const AbHom& f, const GroupAlgebraElem& a);

}  // namespace kinertia
