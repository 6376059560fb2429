#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "kinertia/gset.hpp"
#include "kinertia/ratmat.hpp"

using namespace kinertia;

namespace {

// Subgroup generated by a few parent elements.
Subgroup sub(const FinAbGroup& A, std::vector<long> gens) {
    return subgroup_from_generators(A, gens);
}

GSpace space(const FinAbGroup& A, const std::vector<std::vector<long>>& gen_lists) {
    std::vector<Subgroup> stabs;
    for (const auto& gens : gen_lists) stabs.push_back(sub(A, gens));
    return GSpace::analyze(coset_gset(A, stabs));
}

// Equivariant map between coset unions: block i of the source maps onto
// block assign[i] of the target (source stabilizer inside target stabilizer).
EquivariantMap coset_map(const FinAbGroup& A,
                         const std::vector<std::vector<long>>& src_gens,
                         const std::vector<std::vector<long>>& tgt_gens,
                         const std::vector<size_t>& assign) {
    std::vector<Subgroup> src_subs, tgt_subs;
    for (const auto& g : src_gens) src_subs.push_back(sub(A, g));
    for (const auto& g : tgt_gens) tgt_subs.push_back(sub(A, g));
    GSpace src = GSpace::analyze(coset_gset(A, src_subs));
    GSpace tgt = GSpace::analyze(coset_gset(A, tgt_subs));

    // Point labels of a coset union: block by block, the canonical reps.
    std::vector<long> tgt_block_start(tgt_subs.size(), 0);
    std::vector<std::map<long, long>> tgt_local(tgt_subs.size());
    long at = 0;
    for (size_t j = 0; j < tgt_subs.size(); ++j) {
        tgt_block_start[j] = at;
        for (long rep : coset_reps(A, tgt_subs[j])) tgt_local[j][rep] = at++;
    }
    auto coset_rep_in = [&](const Subgroup& H, long g) {
        long best = -1;
        for (long h : H.elems) {
            long c = A.add(g, h);
            if (best < 0 || c < best) best = c;
        }
        return best;
    };
    std::vector<long> pm;
    for (size_t i = 0; i < src_subs.size(); ++i) {
        const size_t j = assign[i];
        for (long rep : coset_reps(A, src_subs[i]))
            pm.push_back(tgt_local[j].at(coset_rep_in(tgt_subs[j], rep)));
    }
    return make_equivariant_map(src, tgt, pm);
}

// Deterministic non-trivial class: entry coefficients 1, 2, 3, ... shifted
// per orbit so no two orbits look alike.
KClass ramp_class(const GSpace& x) {
    KClass a = k_zero(x);
    long c = 1;
    for (GroupAlgebraElem& e : a.entries)
        for (Rational& v : e.coeffs) v = rat(c++, 2);
    return a;
}

}  // namespace

TEST_CASE("action constructor validates shape, orders, commutation") {
    FinAbGroup z4{{4}};
    CHECK_THROWS(make_gset(z4, 3, {{0, 1, 1}}));          // not a permutation
    CHECK_THROWS(make_gset(z4, 3, {{1, 2, 0}}));          // order 3 does not divide 4
    CHECK_NOTHROW(make_gset(z4, 3, {{1, 0, 2}}));         // order 2 divides 4
    FinAbGroup v4{{2, 2}};
    CHECK_THROWS(make_gset(v4, 3, {{1, 0, 2}, {0, 2, 1}}));  // do not commute
    CHECK_NOTHROW(make_gset(v4, 4, {{1, 0, 3, 2}, {2, 3, 0, 1}}));
    CHECK_THROWS(make_gset(v4, 4, {{1, 0, 3, 2}}));       // one perm per factor
}

TEST_CASE("orbit decomposition: points, stabilizers, counting") {
    FinAbGroup z4{{4}};
    // One free orbit and one two-point orbit with stabilizer {0, 2}.
    GSpace x = GSpace::analyze(make_gset(z4, 6, {{1, 2, 3, 0, 5, 4}}));
    REQUIRE(x.orbits.size() == 2);
    CHECK(x.orbits[0].points == std::vector<long>{0, 1, 2, 3});
    CHECK(x.orbits[1].points == std::vector<long>{4, 5});
    CHECK(x.orbits[0].stabilizer.order() == 1);
    CHECK(x.orbits[1].stabilizer.order() == 2);
    CHECK(x.orbits[1].stabilizer.elems == std::vector<long>{0, 2});
    CHECK(x.orbit_of == std::vector<long>{0, 0, 0, 0, 1, 1});
    CHECK(k_dim(x) == 3);

    for (const Orbit& o : x.orbits)
        CHECK(static_cast<long>(o.points.size()) * o.stabilizer.order() == z4.size());
}

TEST_CASE("coset unions realize prescribed stabilizers") {
    const std::vector<FinAbGroup> groups{{{4}}, {{2, 2}}, {{6}}, {{2, 4}}, {{3, 3}}};
    for (const FinAbGroup& A : groups) {
        const std::vector<Subgroup> subs = all_subgroups(A);
        // One orbit per subgroup: the full multiset of cosets.
        GSpace x = GSpace::analyze(coset_gset(A, subs));
        REQUIRE(x.orbits.size() == subs.size());
        long total = 0;
        for (size_t i = 0; i < subs.size(); ++i) {
            CHECK(x.orbits[i].stabilizer.elems == subs[i].elems);
            CHECK(static_cast<long>(x.orbits[i].points.size()) ==
                  A.size() / subs[i].order());
            total += A.size() / subs[i].order();
        }
        CHECK(x.set.points == total);
    }
}

TEST_CASE("fixed locus is a union of whole orbits") {
    FinAbGroup z6{{6}};
    GSpace x = space(z6, {{}, {3}, {2}, {1}});  // orbits of sizes 6, 3, 2, 1
    REQUIRE(x.set.points == 12);

    for (long h = 0; h < 6; ++h) {
        GSet f = fixed_locus(x.set, h);
        std::vector<long> idx = fixed_orbit_indices(x, h);
        long expected = 0;
        for (long i : idx)
            expected += static_cast<long>(x.orbits[static_cast<size_t>(i)].points.size());
        CHECK(f.points == expected);
        // The restriction is again a valid action with the same stabilizers.
        GSpace fs = GSpace::analyze(f);
        REQUIRE(fs.orbits.size() == idx.size());
        for (size_t k = 0; k < idx.size(); ++k) {
            const Orbit& inner = fs.orbits[k];
            const Orbit& outer = x.orbits[static_cast<size_t>(idx[k])];
            CHECK(inner.points.size() == outer.points.size());
            CHECK(inner.stabilizer.elems == outer.stabilizer.elems);
        }
    }
    CHECK(fixed_locus(x.set, 1).points == 1);  // only the fixed point survives
    CHECK(fixed_locus(x.set, 3).points == 4);  // sizes 3 and 1
    CHECK(fixed_locus(x.set, 2).points == 3);  // sizes 2 and 1
    CHECK(fixed_locus(x.set, 0).points == 12);
}

TEST_CASE("dimension of the decomposition matches the inertia count") {
    const std::vector<FinAbGroup> groups{{{2}}, {{4}}, {{6}}, {{2, 2}},
                                         {{12}}, {{2, 4}}, {{3, 3}}, {{2, 6}}};
    for (const FinAbGroup& A : groups) {
        const std::vector<Subgroup> subs = all_subgroups(A);
        std::vector<std::vector<Subgroup>> choices;
        choices.push_back(subs);                       // one orbit per subgroup
        choices.push_back({subs.front()});             // a single free orbit
        choices.push_back({subs.back(), subs.back()}); // two fixed points
        for (const auto& stabs : choices) {
            GSpace x = GSpace::analyze(coset_gset(A, stabs));
            long rhs = 0;
            for (const DualCyclicSubgroup& s : dual_cyclic_subgroups(A))
                rhs += euler_phi(s.r) *
                       static_cast<long>(fixed_orbit_indices(x, s.generator).size());
            CHECK(k_dim(x) == rhs);
        }
    }
}

TEST_CASE("localization: completeness, orthogonality, support") {
    FinAbGroup z6{{6}};
    GSpace x = space(z6, {{}, {3}, {1}});
    const std::vector<DualCyclicSubgroup> sigmas = dual_cyclic_subgroups(z6);
    REQUIRE(sigmas.size() == 4);

    KClass a = ramp_class(x);
    KClass sum = k_zero(x);
    for (const DualCyclicSubgroup& s : sigmas) sum = k_add(sum, localize(x, a, s));
    CHECK(sum == a);

    KClass unit = k_one(x);
    for (const DualCyclicSubgroup& s : sigmas) {
        for (const DualCyclicSubgroup& t : sigmas) {
            KClass st = k_mul(localize(x, unit, s), localize(x, unit, t));
            if (s == t)
                CHECK(st == localize(x, unit, s));  // idempotent
            else
                CHECK(st.is_zero());  // orthogonal
        }
        // Support: the localized unit is nonzero exactly on a nonempty
        // fixed locus of the subgroup generator.
        bool fixed_nonempty = !fixed_orbit_indices(x, s.generator).empty();
        CHECK(localize(x, unit, s).is_zero() == !fixed_nonempty);
    }

    // A subgroup with empty fixed locus kills every class.
    GSpace free_x = space(z6, {{}, {}});
    for (const DualCyclicSubgroup& s : sigmas)
        if (s.r > 1) CHECK(localize(free_x, ramp_class(free_x), s).is_zero());
}

TEST_CASE("algebraic part vanishes exactly for free actions") {
    FinAbGroup z4{{4}};
    GSpace free_x = space(z4, {{}, {}});
    KClass a = ramp_class(free_x);
    CHECK(algebraic_part(free_x, a).is_zero());
    CHECK(geometric_part(free_x, a) == a);

    GSpace non_free = space(z4, {{}, {2}});
    CHECK_FALSE(algebraic_part(non_free, k_one(non_free)).is_zero());

    // Geometric and algebraic parts always decompose the class.
    KClass b = ramp_class(non_free);
    CHECK(k_add(geometric_part(non_free, b), algebraic_part(non_free, b)) == b);
}

TEST_CASE("push-forward and pull-back on a point over a classifying orbit") {
    FinAbGroup z2{{2}};
    // Source: one free orbit; target: one fixed point.
    EquivariantMap f = coset_map(z2, {{}}, {{1}}, {0});
    REQUIRE(f.source.orbits.size() == 1);
    REQUIRE(f.target.orbits.size() == 1);

    // Pushing the unit forward gives the regular class 1 + chi.
    KClass one_src = k_one(f.source);
    KClass reg = pushforward(f, one_src);
    FinAbGroup t = f.target.orbits[0].stabilizer.abstract_group();
    GroupAlgebraElem expected = GroupAlgebraElem::one(t) + GroupAlgebraElem::character(t, 1);
    CHECK(reg.entries[0] == expected);

    // Pulling back either character of the fixed point gives the unit.
    KClass chi = k_zero(f.target);
    chi.entries[0] = GroupAlgebraElem::character(t, 1);
    CHECK(pullback(f, chi) == one_src);
    CHECK(pullback(f, k_one(f.target)) == one_src);
}

TEST_CASE("projection formula and functoriality") {
    FinAbGroup a12{{12}};
    // Chain of subgroups {0} < <6> < <3>, realized as a tower of coset maps.
    EquivariantMap f = coset_map(a12, {{}, {6}}, {{6}, {3}}, {0, 1});
    EquivariantMap g = coset_map(a12, {{6}, {3}}, {{3}}, {0, 0});

    KClass a = ramp_class(f.target);
    KClass b = ramp_class(f.source);
    CHECK(pushforward(f, k_mul(pullback(f, a), b)) == k_mul(a, pushforward(f, b)));

    // Composite of the point maps is again equivariant; compare both routes.
    std::vector<long> pm;
    for (long p = 0; p < f.source.set.points; ++p)
        pm.push_back(g.point_map[static_cast<size_t>(f.point_map[static_cast<size_t>(p)])]);
    EquivariantMap gf = make_equivariant_map(f.source, g.target, pm);
    KClass c = ramp_class(g.target);
    CHECK(pullback(gf, c) == pullback(f, pullback(g, c)));
    CHECK(pushforward(gf, b) == pushforward(g, pushforward(f, b)));
}

TEST_CASE("moduli coordinates are a bijection on geometric parts") {
    const std::vector<FinAbGroup> groups{{{4}}, {{6}}, {{2, 2}}, {{2, 4}}};
    for (const FinAbGroup& A : groups) {
        GSpace x = GSpace::analyze(coset_gset(A, all_subgroups(A)));
        const long n = static_cast<long>(x.orbits.size());
        const long d = k_dim(x);

        // Columns: moduli coordinates of the geometric parts of a basis.
        RatMat m(static_cast<size_t>(n), static_cast<size_t>(d));
        std::vector<Rational> e(static_cast<size_t>(d), rat(0));
        for (long j = 0; j < d; ++j) {
            e[static_cast<size_t>(j)] = rat(1);
            KClass g = geometric_part(x, k_from_coords(x, e));
            std::vector<Rational> col = moduli_pushforward(x, g);
            for (long i = 0; i < n; ++i)
                m.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
                    col[static_cast<size_t>(i)];
            e[static_cast<size_t>(j)] = rat(0);
        }
        // Full rank n: surjective, and injective on the geometric subspace
        // (whose dimension is the orbit count: one trivial factor per orbit).
        CHECK(m.rank() == static_cast<size_t>(n));

        // Rank vector of the unit is all ones; of the regular class, |H_O|.
        std::vector<Rational> ranks = moduli_pushforward(x, k_one(x));
        for (const Rational& v : ranks) CHECK(v == rat(1));
    }
}

TEST_CASE("regular covers over one- and two-orbit bases verify descent") {
    // B G covered by a point, for several deck groups.
    const std::vector<FinAbGroup> groups{{{2}}, {{6}}, {{2, 2}}, {{2, 4}}, {{12}}};
    for (const FinAbGroup& A : groups) {
        std::vector<Subgroup> all = all_subgroups(A);
        GSpace total = GSpace::analyze(coset_gset(A, {all.front()}));  // free orbit
        GSpace base = GSpace::analyze(coset_gset(A, {all.back()}));   // fixed point
        std::vector<long> proj(static_cast<size_t>(total.set.points), 0);
        // Deck group: the group itself, acting by translation on the free orbit.
        GaloisCover c = make_galois_cover(total, base, proj, A, total.set.action);
        CHECK(galois_cover_check(c));
    }

    // An intermediate cover: Z/4 on its regular orbit over the two-point
    // orbit, with deck group Z/2 translating by the order-two element.
    FinAbGroup z4{{4}};
    GSpace total = space(z4, {{}});
    GSpace base = space(z4, {{2}});
    // Point labels of the base are the coset reps {0, 1}; element p lies in
    // the coset of p mod 2.
    std::vector<long> proj{0, 1, 0, 1};
    std::vector<Perm> deck{{2, 3, 0, 1}};  // translation by 2
    GaloisCover c = make_galois_cover(total, base, proj, FinAbGroup{{2}}, deck);
    CHECK(galois_cover_check(c));

    // Faulty covers are rejected by the constructor.
    CHECK_THROWS(make_galois_cover(total, base, proj, FinAbGroup{{2}},
                                   {{0, 1, 2, 3}}));  // not free
    CHECK_THROWS(make_galois_cover(total, base, {0, 0, 1, 1}, FinAbGroup{{2}},
                                   deck));  // not equivariant
    GSpace base4 = space(z4, {{1}});
    CHECK_THROWS(make_galois_cover(total, base4, {0, 0, 0, 0}, FinAbGroup{{2}},
                                   deck));  // fibers are not the deck orbits
}

TEST_CASE("relabeling the points changes nothing intrinsic") {
    FinAbGroup a{{2, 4}};
    std::vector<Subgroup> subs = all_subgroups(a);
    GSpace x = GSpace::analyze(coset_gset(a, {subs[0], subs[2], subs.back()}));

    // Conjugate the action by a fixed shuffle of the points.
    const long n = x.set.points;
    std::vector<long> shuffle(static_cast<size_t>(n));
    std::iota(shuffle.begin(), shuffle.end(), 0);
    for (long i = 0; i < n; ++i) std::swap(shuffle[static_cast<size_t>(i)],
                                           shuffle[static_cast<size_t>((i * 5 + 3) % n)]);
    std::vector<long> inv(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) inv[static_cast<size_t>(shuffle[static_cast<size_t>(i)])] = i;
    std::vector<Perm> conj;
    for (const Perm& g : x.set.action) {
        Perm h(static_cast<size_t>(n));
        for (long p = 0; p < n; ++p)
            h[static_cast<size_t>(p)] = shuffle[static_cast<size_t>(
                g[static_cast<size_t>(inv[static_cast<size_t>(p)])])];
        conj.push_back(std::move(h));
    }
    GSpace y = GSpace::analyze(make_gset(a, n, conj));

    auto signature = [](const GSpace& s) {
        std::vector<std::pair<long, std::vector<long>>> sig;
        for (const Orbit& o : s.orbits)
            sig.emplace_back(static_cast<long>(o.points.size()), o.stabilizer.elems);
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    CHECK(signature(x) == signature(y));
    CHECK(k_dim(x) == k_dim(y));

    std::vector<Rational> mx = moduli_pushforward(x, k_one(x));
    std::vector<Rational> my = moduli_pushforward(y, k_one(y));
    std::sort(mx.begin(), mx.end());
    std::sort(my.begin(), my.end());
    CHECK(mx == my);
}
