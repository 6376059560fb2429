#pragma once

#include <map>
#include <vector>

#include "kinertia/lrr.hpp"

namespace kinertia {

// A trace-compatible normal-basis family: one element x_n of Q(zeta_n) for
// every divisor n of the modulus, such that the Galois conjugates of each
// x_n form a Q-basis of Q(zeta_n) and the relative trace sends x_n to x_m
// whenever m | n. Normalized so that x_1 = 1.
struct NormalBasisFamily {
    long modulus = 1;
    std::map<long, CycFieldElem> x;  // divisor n -> x_n

    bool operator==(const NormalBasisFamily&) const = default;
};

// Whether the Galois conjugates of x span Q(zeta_d) (exact rank test).
bool is_normal_basis(const CycFieldElem& x);

// Deterministic search for a family: candidates for the top element are
// zeta_N, then the partial sums 1 + zeta_N + ... + zeta_N^k; the rest of
// the family is produced by relative traces (trace transitivity makes the
// compatibility automatic), and the first candidate whose whole family
// passes the normal-basis test wins, scaled so that x_1 = 1. Throws
// std::runtime_error when candidate_limit candidates all fail.
NormalBasisFamily build_family(long N, long candidate_limit = 64);

// Exact validation of the two family invariants (normal bases + trace
// compatibility) over every divisor pair of the modulus.
bool family_invariants_hold(const NormalBasisFamily& fam);

// A geometric class on the inertia components: one rational moduli
// coordinate per fixed orbit of each component (same shape as a twisted
// class, with rational entries).
using GeometricClass = std::vector<std::vector<Rational>>;

GeometricClass geometric_zero(const CyclotomicInertia& ix);

// The averaging isomorphism onto conjugation invariants: on the components
// of order r,
//   phi(m)[h] = (1/phi(r)) * sum_u m[u^{-1} h] * conj_u(r * x_r),
// so that a geometric class goes to the invariant twisted class whose
// coefficients expand in the normal basis of conjugates of r * x_r.
TwistedClass phi_map(const CyclotomicInertia& ix, const GeometricClass& m,
                     const NormalBasisFamily& fam);

// Exact inverse of phi_map: solve the phi(r) x phi(r) normal-basis system
// per cyclic subgroup and orbit, then verify phi_map of the result returns
// the input (throws std::logic_error otherwise).
GeometricClass phi_inverse(const CyclotomicInertia& ix, const TwistedClass& w,
                           const NormalBasisFamily& fam);

// Push-forward of geometric classes along an equivariant map: the component
// of h maps to the component of the same h, each fixed orbit to its image
// orbit with the stabilizer index as multiplicity.
GeometricClass geometric_pushforward(const EquivariantMap& f,
                                     const CyclotomicInertia& iy,
                                     const CyclotomicInertia& ix,
                                     const GeometricClass& m);

// Naturality of phi_map: phi after geometric push-forward equals twisted
// push-forward after phi, over a full basis of the source.
bool phi_covariance_check(const EquivariantMap& f, const NormalBasisFamily& fam);

// The coefficient identity behind the naturality when a component order
// drops from n to r: pushing any conjugate of n * x_n down the coefficient
// rings lands on the matching conjugate of r * x_r,
//   (r/n) * Tr(conj_u(n * x_n)) = conj_{u mod r}(r * x_r),
// together with its phi-shaped aggregate over unit classes.
bool tracedown_check(const NormalBasisFamily& fam, long n, long r);

// The composite rational Riemann-Roch map: decomposition coordinates, then
// phi_inverse, read off as one rational per orbit of the inertia (components
// in their stored order, fixed orbits in slot order). A Q-linear bijection.
std::vector<Rational> rational_rr(const GSpace& x, const KClass& a,
                                  const NormalBasisFamily& fam);

// Exact rank check that rational_rr is bijective on the whole K-group.
bool rational_rr_bijective(const GSpace& x, const NormalBasisFamily& fam);

}  // namespace kinertia
