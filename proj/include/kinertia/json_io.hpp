#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "kinertia/catalog.hpp"
#include "kinertia/glhom.hpp"
#include "kinertia/lrr.hpp"
#include "kinertia/mackey.hpp"
#include "kinertia/rational_rr.hpp"

namespace kinertia {

// All external data crosses this boundary as JSON. Conventions: rationals
// are always "p/q" strings (plain "p" when the denominator is 1), counts
// and indices are JSON integers, and arbitrary-precision integers are
// decimal strings. Object keys that encode tuples (characters, elements)
// are comma-joined residue lists; the empty tuple is the empty string.
using Json = nlohmann::ordered_json;

// Violation of an input schema. `path` points at the offending field in
// JSONPath-like dotted form ("$.group.cyclic_factors[2]").
struct SchemaError : std::runtime_error {
    std::string path;
    SchemaError(std::string where, const std::string& message);
};

// Parses a JSON document; throws SchemaError at "$" on malformed text.
Json parse_json_text(const std::string& text);

Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j, const std::string& path);
Json rational_vector_to_json(const std::vector<Rational>& v);
std::vector<Rational> rational_vector_from_json(const Json& j,
                                                const std::string& path);

// {"cyclic_factors": [n_1, ...]}; factors are integers >= 1.
Json group_to_json(const FinAbGroup& A);
FinAbGroup group_from_json(const Json& j, const std::string& path);

// Elements and characters travel as residue arrays [r_1, ..., r_k] with
// 0 <= r_i < n_i, one entry per cyclic factor.
Json element_to_json(const FinAbGroup& A, long idx);
long element_from_json(const FinAbGroup& A, const Json& j,
                       const std::string& path);

// {"coeffs": {"r_1,...,r_k": "p/q"}} keyed by character residue tuples;
// zero coefficients are omitted on output and optional on input.
Json group_algebra_to_json(const GroupAlgebraElem& a);
GroupAlgebraElem group_algebra_from_json(const FinAbGroup& A, const Json& j,
                                         const std::string& path);

// Coordinates of an element of Q(zeta_d) on the power basis: an array of
// phi(d) rational strings. The conductor d travels separately.
Json cyclotomic_to_json(const CycFieldElem& x);
CycFieldElem cyclotomic_from_json(long d, const Json& j,
                                  const std::string& path);

// {"group": {...}, "points": k, "action": {"0": [perm], ...}} with one
// permutation per cyclic factor, keyed by the factor index.
Json gset_to_json(const GSet& x);
GSet gset_from_json(const Json& j, const std::string& path);

// {"orbit-id": group-algebra-elem} keyed by orbit index; orbits absent
// from the input get the zero entry.
Json kclass_to_json(const GSpace& x, const KClass& a);
KClass kclass_from_json(const GSpace& x, const Json& j,
                        const std::string& path);

// {"components": [{"h": [residues], "entries": {"orbit-id": [coeffs]}}]}
// with one object per inertia component and phi(r) coefficients per fixed
// orbit. Components and orbits absent from the input are zero.
Json twisted_to_json(const CyclotomicInertia& ix, const TwistedClass& w);
TwistedClass twisted_from_json(const CyclotomicInertia& ix, const Json& j,
                               const std::string& path);

// {"degree": m, "generators": [[images], ...]}.
Json permgroup_to_json(const PermGroup& G);
PermGroup permgroup_from_json(const Json& j, const std::string& path,
                              long max_order = 5040);
Perm perm_from_json(long degree, const Json& j, const std::string& path);

// Dense matrix as rows of "p/q" strings.
Json matrix_to_json(const RatMat& m);
RatMat matrix_from_json(const Json& j, const std::string& path);

// {"r": r, "n": n, "d": [d(0), ..., d(r-1)]}.
Json hom_component_to_json(const HomComponent& c);
HomComponent hom_component_from_json(const Json& j, const std::string& path);

// {"N": N, "x": {"n": [coeffs], ...}} with one entry per divisor n of N.
Json family_to_json(const NormalBasisFamily& fam);
NormalBasisFamily family_from_json(const Json& j, const std::string& path);

}  // namespace kinertia
