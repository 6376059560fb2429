#include "kinertia/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "kinertia/ratmat.hpp"

namespace kinertia {

namespace {

bool is_permutation_of(const Perm& p, long n) {
    if (static_cast<long>(p.size()) != n) return false;
    Perm s = p;
    std::sort(s.begin(), s.end());
    for (long i = 0; i < n; ++i)
        if (s[static_cast<size_t>(i)] != i) return false;
    return true;
}

}  // namespace

const std::vector<AlgebraFactor>& cached_algebra_factors(const FinAbGroup& A) {
    static std::map<std::vector<long>, std::vector<AlgebraFactor>> memo;
    auto it = memo.find(A.cyclic_factors);
    if (it == memo.end())
        it = memo.emplace(A.cyclic_factors, factorize_group_algebra(A)).first;
    return it->second;
}

namespace {

const AlgebraFactor& trivial_factor(const FinAbGroup& A) {
    for (const AlgebraFactor& f : cached_algebra_factors(A))
        if (f.conductor == 1) return f;
    throw std::logic_error("algebra factorization lacks the trivial factor");
}

}  // namespace

long GSet::act(long g, long p) const {
    std::vector<long> res = group.vec_of(g);
    long q = p;
    for (size_t i = 0; i < res.size(); ++i)
        for (long k = 0; k < res[i]; ++k)
            q = action[i][static_cast<size_t>(q)];
    return q;
}

GSet make_gset(FinAbGroup group, long points, std::vector<Perm> action) {
    if (points < 0) throw std::invalid_argument("points: negative");
    if (action.size() != group.cyclic_factors.size())
        throw std::invalid_argument("action: need one permutation per cyclic factor");
    for (size_t i = 0; i < action.size(); ++i) {
        if (!is_permutation_of(action[i], points))
            throw std::invalid_argument("action: entry is not a permutation of the points");
        if (points > 0 && perm_order(action[i]) > 0 &&
            group.cyclic_factors[i] % perm_order(action[i]) != 0)
            throw std::invalid_argument("action: generator order does not divide its factor");
    }
    for (size_t i = 0; i < action.size(); ++i)
        for (size_t j = i + 1; j < action.size(); ++j)
            if (perm_compose(action[i], action[j]) != perm_compose(action[j], action[i]))
                throw std::invalid_argument("action: generators do not commute");
    return GSet{std::move(group), points, std::move(action)};
}

std::vector<long> coset_reps(const FinAbGroup& A, const Subgroup& H) {
    if (!(H.parent == A))
        throw std::invalid_argument("stabilizers: subgroup of a different group");
    std::vector<long> reps;
    for (long g : elements(A)) {
        bool least = true;
        for (long h : H.elems)
            if (A.add(g, h) < g) { least = false; break; }
        if (least) reps.push_back(g);
    }
    return reps;
}

GSet coset_gset(const FinAbGroup& A, const std::vector<Subgroup>& stabilizers) {
    std::vector<Perm> action(A.cyclic_factors.size());
    long points = 0;
    for (const Subgroup& H : stabilizers) {
        // Canonical coset representative: the least element of g + H.
        auto coset_rep = [&](long g) {
            long best = -1;
            for (long h : H.elems) {
                long c = A.add(g, h);
                if (best < 0 || c < best) best = c;
            }
            return best;
        };
        const std::vector<long> reps = coset_reps(A, H);
        std::vector<long> local(static_cast<size_t>(A.size()), -1);
        for (size_t i = 0; i < reps.size(); ++i)
            local[static_cast<size_t>(reps[i])] = static_cast<long>(i);
        for (size_t i = 0; i < A.cyclic_factors.size(); ++i) {
            std::vector<long> res(A.cyclic_factors.size(), 0);
            res[i] = 1;
            const long gen = A.index_of(res);
            for (long rep : reps)
                action[i].push_back(points +
                                    local[static_cast<size_t>(coset_rep(A.add(rep, gen)))]);
        }
        points += static_cast<long>(reps.size());
    }
    return make_gset(A, points, std::move(action));
}

GSpace GSpace::analyze(GSet x) {
    GSpace s;
    s.orbit_of.assign(static_cast<size_t>(x.points), -1);
    const std::vector<long> elems = elements(x.group);
    for (long p = 0; p < x.points; ++p) {
        if (s.orbit_of[static_cast<size_t>(p)] >= 0) continue;
        const long id = static_cast<long>(s.orbits.size());
        std::vector<long> pts;
        std::vector<long> stab;
        for (long g : elems) {
            long q = x.act(g, p);
            if (q == p) stab.push_back(g);
            if (s.orbit_of[static_cast<size_t>(q)] < 0) {
                s.orbit_of[static_cast<size_t>(q)] = id;
                pts.push_back(q);
            }
        }
        std::sort(pts.begin(), pts.end());
        Subgroup H = subgroup_from_generators(x.group, stab);
        if (static_cast<long>(pts.size()) * H.order() !=
            static_cast<long>(elems.size()))
            throw std::logic_error("orbit size times stabilizer order is off");
        s.orbits.push_back(Orbit{std::move(pts), std::move(H)});
    }
    s.set = std::move(x);
    return s;
}

bool KClass::is_zero() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const GroupAlgebraElem& e) { return e.is_zero(); });
}

long k_dim(const GSpace& x) {
    long d = 0;
    for (const Orbit& o : x.orbits) d += o.stabilizer.order();
    return d;
}

KClass k_zero(const GSpace& x) {
    KClass a;
    for (const Orbit& o : x.orbits)
        a.entries.push_back(GroupAlgebraElem::zero(o.stabilizer.abstract_group()));
    return a;
}

KClass k_one(const GSpace& x) {
    KClass a;
    for (const Orbit& o : x.orbits)
        a.entries.push_back(GroupAlgebraElem::one(o.stabilizer.abstract_group()));
    return a;
}

namespace {
void check_same_shape(const KClass& a, const KClass& b) {
    if (a.entries.size() != b.entries.size())
        throw std::invalid_argument("classes live on different orbit sets");
}
}  // namespace

KClass k_add(const KClass& a, const KClass& b) {
    check_same_shape(a, b);
    KClass c;
    for (size_t i = 0; i < a.entries.size(); ++i)
        c.entries.push_back(a.entries[i] + b.entries[i]);
    return c;
}

KClass k_sub(const KClass& a, const KClass& b) {
    check_same_shape(a, b);
    KClass c;
    for (size_t i = 0; i < a.entries.size(); ++i)
        c.entries.push_back(a.entries[i] - b.entries[i]);
    return c;
}

KClass k_mul(const KClass& a, const KClass& b) {
    check_same_shape(a, b);
    KClass c;
    for (size_t i = 0; i < a.entries.size(); ++i)
        c.entries.push_back(a.entries[i] * b.entries[i]);
    return c;
}

KClass k_scale(const KClass& a, const Rational& s) {
    KClass c;
    for (const GroupAlgebraElem& e : a.entries) c.entries.push_back(e * s);
    return c;
}

std::vector<Rational> k_coords(const GSpace& x, const KClass& a) {
    if (a.entries.size() != x.orbits.size())
        throw std::invalid_argument("class does not match the orbit set");
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(k_dim(x)));
    for (const GroupAlgebraElem& e : a.entries)
        v.insert(v.end(), e.coeffs.begin(), e.coeffs.end());
    return v;
}

KClass k_from_coords(const GSpace& x, const std::vector<Rational>& v) {
    KClass a = k_zero(x);
    size_t at = 0;
    for (GroupAlgebraElem& e : a.entries)
        for (Rational& c : e.coeffs) {
            if (at >= v.size())
                throw std::invalid_argument("coordinate vector too short");
            c = v[at++];
        }
    if (at != v.size()) throw std::invalid_argument("coordinate vector too long");
    return a;
}

EquivariantMap make_equivariant_map(GSpace source, GSpace target,
                                    std::vector<long> point_map) {
    if (source.set.group != target.set.group)
        throw std::invalid_argument("point_map: the two sets have different groups");
    if (static_cast<long>(point_map.size()) != source.set.points)
        throw std::invalid_argument("point_map: wrong length");
    for (long q : point_map)
        if (q < 0 || q >= target.set.points)
            throw std::invalid_argument("point_map: value out of range");
    for (size_t i = 0; i < source.set.action.size(); ++i)
        for (long p = 0; p < source.set.points; ++p) {
            long lhs = point_map[static_cast<size_t>(
                source.set.action[i][static_cast<size_t>(p)])];
            long rhs = target.set.action[i][static_cast<size_t>(
                point_map[static_cast<size_t>(p)])];
            if (lhs != rhs)
                throw std::invalid_argument("point_map: not equivariant");
        }
    return EquivariantMap{std::move(source), std::move(target), std::move(point_map)};
}

KClass pullback(const EquivariantMap& f, const KClass& a) {
    if (a.entries.size() != f.target.orbits.size())
        throw std::invalid_argument("class does not live on the map target");
    KClass out = k_zero(f.source);
    for (size_t i = 0; i < f.source.orbits.size(); ++i) {
        long rep = f.source.orbits[i].points.front();
        long j = f.target.orbit_of[static_cast<size_t>(
            f.point_map[static_cast<size_t>(rep)])];
        AbHom inc = hom_between(f.source.orbits[i].stabilizer,
                                f.target.orbits[static_cast<size_t>(j)].stabilizer);
        out.entries[i] = restriction_ab(inc, a.entries[static_cast<size_t>(j)]);
    }
    return out;
}

KClass pushforward(const EquivariantMap& f, const KClass& a) {
    if (a.entries.size() != f.source.orbits.size())
        throw std::invalid_argument("class does not live on the map source");
    KClass out = k_zero(f.target);
    for (size_t i = 0; i < f.source.orbits.size(); ++i) {
        long rep = f.source.orbits[i].points.front();
        long j = f.target.orbit_of[static_cast<size_t>(
            f.point_map[static_cast<size_t>(rep)])];
        AbHom inc = hom_between(f.source.orbits[i].stabilizer,
                                f.target.orbits[static_cast<size_t>(j)].stabilizer);
        out.entries[static_cast<size_t>(j)] =
            out.entries[static_cast<size_t>(j)] + induction_ab(inc, a.entries[i]);
    }
    return out;
}

GSet fixed_locus(const GSet& x, long h) {
    std::vector<long> fixed;
    std::vector<long> new_index(static_cast<size_t>(x.points), -1);
    for (long p = 0; p < x.points; ++p)
        if (x.act(h, p) == p) {
            new_index[static_cast<size_t>(p)] = static_cast<long>(fixed.size());
            fixed.push_back(p);
        }
    std::vector<Perm> action;
    for (const Perm& g : x.action) {
        Perm restricted;
        restricted.reserve(fixed.size());
        for (long p : fixed) {
            long q = new_index[static_cast<size_t>(g[static_cast<size_t>(p)])];
            if (q < 0) throw std::logic_error("fixed points not action stable");
            restricted.push_back(q);
        }
        action.push_back(std::move(restricted));
    }
    return GSet{x.group, static_cast<long>(fixed.size()), std::move(action)};
}

std::vector<long> fixed_orbit_indices(const GSpace& x, long h) {
    std::vector<long> out;
    for (size_t i = 0; i < x.orbits.size(); ++i)
        if (x.orbits[i].stabilizer.contains(h)) out.push_back(static_cast<long>(i));
    return out;
}

KClass localize(const GSpace& x, const KClass& a, const DualCyclicSubgroup& sigma) {
    if (a.entries.size() != x.orbits.size())
        throw std::invalid_argument("class does not match the orbit set");
    KClass out = k_zero(x);
    for (size_t i = 0; i < x.orbits.size(); ++i) {
        const Subgroup& H = x.orbits[i].stabilizer;
        bool inside = std::all_of(sigma.elements.begin(), sigma.elements.end(),
                                  [&](long e) { return H.contains(e); });
        if (!inside) continue;
        std::vector<long> image;
        image.reserve(sigma.elements.size());
        for (long e : sigma.elements) image.push_back(H.coord_index_of(e));
        std::sort(image.begin(), image.end());
        const FinAbGroup habs = H.abstract_group();
        bool found = false;
        for (const AlgebraFactor& f : cached_algebra_factors(habs)) {
            if (f.sigma.elements != image) continue;
            out.entries[i] = a.entries[i] * f.idempotent;
            found = true;
            break;
        }
        if (!found)
            throw std::logic_error("cyclic subgroup missing from the factorization");
    }
    return out;
}

KClass geometric_part(const GSpace& x, const KClass& a) {
    if (a.entries.size() != x.orbits.size())
        throw std::invalid_argument("class does not match the orbit set");
    KClass out = k_zero(x);
    for (size_t i = 0; i < x.orbits.size(); ++i) {
        const FinAbGroup habs = x.orbits[i].stabilizer.abstract_group();
        out.entries[i] = a.entries[i] * trivial_factor(habs).idempotent;
    }
    return out;
}

KClass algebraic_part(const GSpace& x, const KClass& a) {
    return k_sub(a, geometric_part(x, a));
}

std::vector<Rational> moduli_pushforward(const GSpace& x, const KClass& a) {
    if (a.entries.size() != x.orbits.size())
        throw std::invalid_argument("class does not match the orbit set");
    std::vector<Rational> out;
    out.reserve(x.orbits.size());
    for (const GroupAlgebraElem& e : a.entries) {
        CycFieldElem v = evaluate(e, 0);
        if (!v.is_rational())
            throw std::logic_error("evaluation at the identity must be rational");
        out.push_back(v.rational_value());
    }
    return out;
}

namespace {

long deck_act(const GaloisCover& c, long d, long p) {
    std::vector<long> res = c.deck.vec_of(d);
    long q = p;
    for (size_t i = 0; i < res.size(); ++i)
        for (long k = 0; k < res[i]; ++k)
            q = c.deck_action[i][static_cast<size_t>(q)];
    return q;
}

}  // namespace

GaloisCover make_galois_cover(GSpace total, GSpace base,
                              std::vector<long> projection, FinAbGroup deck,
                              std::vector<Perm> deck_action) {
    // The deck action must itself be a valid action on the covering points.
    make_gset(deck, total.set.points, deck_action);
    // It must commute with the main action.
    for (const Perm& d : deck_action)
        for (const Perm& g : total.set.action)
            if (perm_compose(d, g) != perm_compose(g, d))
                throw std::invalid_argument("deck_action: does not commute with the action");
    // The projection must be equivariant (checked by the map constructor on
    // the same group) and its fibers must be exactly the deck orbits.
    GaloisCover c{std::move(total), std::move(base), std::move(projection),
                  std::move(deck), std::move(deck_action)};
    make_equivariant_map(c.total, c.base, c.projection);
    const std::vector<long> deck_elems = elements(c.deck);
    for (long d : deck_elems) {
        if (d == 0) continue;
        for (long p = 0; p < c.total.set.points; ++p)
            if (deck_act(c, d, p) == p)
                throw std::invalid_argument("deck_action: not free");
    }
    std::vector<bool> hit(static_cast<size_t>(c.base.set.points), false);
    for (long p = 0; p < c.total.set.points; ++p) {
        hit[static_cast<size_t>(c.projection[static_cast<size_t>(p)])] = true;
        for (long q = 0; q < c.total.set.points; ++q) {
            bool same_fiber = c.projection[static_cast<size_t>(p)] ==
                              c.projection[static_cast<size_t>(q)];
            bool same_orbit = false;
            for (long d : deck_elems)
                if (deck_act(c, d, p) == q) { same_orbit = true; break; }
            if (same_fiber != same_orbit)
                throw std::invalid_argument("projection: fibers are not the deck orbits");
        }
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
        throw std::invalid_argument("projection: not surjective");
    return c;
}

bool galois_cover_check(const GaloisCover& c) {
    const EquivariantMap pi = make_equivariant_map(c.total, c.base, c.projection);
    const size_t nt = c.total.orbits.size();
    const size_t nb = c.base.orbits.size();

    // Deck permutation of the covering orbit set, one permutation per deck
    // generator, and the orbit count of the induced action.
    std::vector<std::vector<long>> deck_on_orbits;
    for (size_t i = 0; i < c.deck.cyclic_factors.size(); ++i) {
        std::vector<long> res(c.deck.cyclic_factors.size(), 0);
        res[i] = 1;
        long d = c.deck.index_of(res);
        std::vector<long> perm(nt);
        for (size_t o = 0; o < nt; ++o) {
            long rep = c.total.orbits[o].points.front();
            perm[o] = c.total.orbit_of[static_cast<size_t>(deck_act(c, d, rep))];
        }
        deck_on_orbits.push_back(std::move(perm));
    }
    std::vector<long> comp(nt, -1);
    long classes = 0;
    for (size_t o = 0; o < nt; ++o) {
        if (comp[o] >= 0) continue;
        std::vector<long> stack{static_cast<long>(o)};
        comp[o] = classes;
        while (!stack.empty()) {
            long cur = stack.back();
            stack.pop_back();
            for (const std::vector<long>& perm : deck_on_orbits) {
                long nxt = perm[static_cast<size_t>(cur)];
                if (comp[static_cast<size_t>(nxt)] < 0) {
                    comp[static_cast<size_t>(nxt)] = classes;
                    stack.push_back(nxt);
                }
            }
        }
        ++classes;
    }
    if (classes != static_cast<long>(nb)) return false;

    // Pullback matrix on geometric parts, in orbit-rank coordinates.
    RatMat up(nt, nb);
    for (size_t j = 0; j < nb; ++j) {
        KClass unit = k_zero(c.base);
        const FinAbGroup kabs = c.base.orbits[j].stabilizer.abstract_group();
        unit.entries[j] = trivial_factor(kabs).idempotent;
        std::vector<Rational> col = moduli_pushforward(c.total, pullback(pi, unit));
        for (size_t i = 0; i < nt; ++i) up.at(i, j) = col[i];
    }
    // Image inside the deck invariants, and full rank onto them.
    for (const std::vector<long>& perm : deck_on_orbits)
        for (size_t i = 0; i < nt; ++i)
            for (size_t j = 0; j < nb; ++j)
                if (up.at(i, j) != up.at(static_cast<size_t>(perm[i]), j))
                    return false;
    if (up.rank() != nb) return false;

    // Push-forward followed by geometric projection, same coordinates.
    RatMat down(nb, nt);
    for (size_t i = 0; i < nt; ++i) {
        KClass unit = k_zero(c.total);
        const FinAbGroup habs = c.total.orbits[i].stabilizer.abstract_group();
        unit.entries[i] = trivial_factor(habs).idempotent;
        std::vector<Rational> col =
            moduli_pushforward(c.base, geometric_part(c.base, pushforward(pi, unit)));
        for (size_t j = 0; j < nb; ++j) down.at(j, i) = col[j];
    }
    // Constant on deck orbit classes (so it factors through the coinvariants)
    // and of full rank, hence a bijection from them.
    for (const std::vector<long>& perm : deck_on_orbits)
        for (size_t i = 0; i < nt; ++i)
            for (size_t j = 0; j < nb; ++j)
                if (down.at(j, i) != down.at(j, static_cast<size_t>(perm[i])))
                    return false;
    return down.rank() == nb;
}

}  // namespace kinertia
