#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "kinertia/catalog.hpp"
#include "kinertia/lrr.hpp"

using namespace kinertia;

namespace {

// Isomorphism signature of a G-set over a fixed group: the multiset of
// orbit stabilizers, each as its sorted element set.
std::multiset<std::vector<long>> signature(const GSpace& x) {
    std::multiset<std::vector<long>> sig;
    for (const Orbit& o : x.orbits) sig.insert(o.stabilizer.elems);
    return sig;
}

}  // namespace

TEST_CASE("the group list walks the invariant-factor chains in order") {
    std::vector<FinAbGroup> gs = groups_up_to(16);
    CHECK(gs.size() == 25);

    // Chains are ascending divisibility towers and orders never decrease.
    long last_order = 1;
    std::set<std::vector<long>> seen;
    for (const FinAbGroup& g : gs) {
        CHECK(g.size() >= last_order);
        last_order = g.size();
        for (size_t i = 1; i < g.cyclic_factors.size(); ++i) {
            CHECK(g.cyclic_factors[i] % g.cyclic_factors[i - 1] == 0);
            CHECK(g.cyclic_factors[i - 1] >= 2);
        }
        CHECK(seen.insert(g.cyclic_factors).second);
    }

    // Spot values: the trivial group leads; order 16 contributes five.
    CHECK(gs.front() == FinAbGroup{{}});
    CHECK(std::count_if(gs.begin(), gs.end(),
                        [](const FinAbGroup& g) { return g.size() == 16; }) == 5);
    CHECK(std::find(gs.begin(), gs.end(), FinAbGroup{{2, 8}}) != gs.end());

    CHECK(groups_up_to(36).size() == 62);
}

TEST_CASE("the coset-space catalog enumerates subgroup multisets exactly once") {
    FinAbGroup z4{{4}};
    std::vector<GSpace> spaces = coset_spaces_up_to(z4, 6);
    CHECK(spaces.size() == 19);  // multisets of orbit costs {1, 2, 4} with sum <= 6

    std::set<std::multiset<std::vector<long>>> sigs;
    for (const GSpace& x : spaces) {
        CHECK(x.set.points <= 6);
        CHECK(!x.orbits.empty());
        CHECK(sigs.insert(signature(x)).second);  // pairwise non-isomorphic
    }

    // The trivial group's catalog is the plain finite sets.
    CHECK(coset_spaces_up_to(FinAbGroup{{}}, 6).size() == 6);
}

TEST_CASE("random spaces are valid, budgeted, deterministic, and varied") {
    FinAbGroup z6{{6}};
    std::mt19937_64 a(7), b(7);
    for (int i = 0; i < 20; ++i) {
        GSpace xa = random_space(z6, 6, a);
        GSpace xb = random_space(z6, 6, b);
        CHECK(xa.set.points == xb.set.points);
        CHECK(xa.set.action == xb.set.action);
        CHECK(xa.set.points <= 6);
        CHECK(!xa.orbits.empty());
    }

    std::mt19937_64 c(11);
    std::set<std::multiset<std::vector<long>>> sigs;
    for (int i = 0; i < 50; ++i) sigs.insert(signature(random_space(z6, 6, c)));
    CHECK(sigs.size() >= 3);  // the sampler reaches several isomorphism classes
}

TEST_CASE("random spaces match a coset space up to relabeling") {
    for (const FinAbGroup& g : groups_up_to(8)) {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 10; ++i) {
            GSpace x = random_space(g, 6, rng);
            bool found = false;
            for (const GSpace& y : coset_spaces_up_to(g, 6))
                if (signature(y) == signature(x)) {
                    found = true;
                    break;
                }
            CHECK(found);
        }
    }
}

TEST_CASE("random maps are valid, deterministic, and stabilizer-expanding") {
    for (const FinAbGroup& g : groups_up_to(12)) {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 5; ++i) {
            EquivariantMap f = random_map(g, 6, rng);
            CHECK(f.source.set.points <= 6);
            CHECK(f.target.set.points <= f.source.set.points);
            for (const Orbit& o : f.source.orbits) {
                const long image = f.point_map[static_cast<size_t>(o.points[0])];
                const Orbit& io =
                    f.target.orbits[static_cast<size_t>(f.target.orbit_of[image])];
                CHECK(std::includes(io.stabilizer.elems.begin(),
                                    io.stabilizer.elems.end(),
                                    o.stabilizer.elems.begin(),
                                    o.stabilizer.elems.end()));
            }
        }
    }

    FinAbGroup z12{{12}};
    std::mt19937_64 a(9), b(9);
    for (int i = 0; i < 10; ++i) {
        EquivariantMap fa = random_map(z12, 6, a);
        EquivariantMap fb = random_map(z12, 6, b);
        CHECK(fa.point_map == fb.point_map);
        CHECK(fa.source.set.action == fb.source.set.action);
        CHECK(fa.target.set.action == fb.target.set.action);
    }
}
