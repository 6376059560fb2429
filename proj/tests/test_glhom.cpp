#include "doctest.h"

#include "kinertia/glhom.hpp"
#include "kinertia/crosscheck.hpp"

using namespace kinertia;

namespace {

Int binom(long n, long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

}  // namespace

TEST_CASE("component enumeration counts") {
    auto c22 = enumerate_hom_components(2, 2);
    REQUIRE(c22.size() == 3);
    CHECK(c22[0].d == std::vector<long>{0, 2});
    CHECK(c22[1].d == std::vector<long>{1, 1});
    CHECK(c22[2].d == std::vector<long>{2, 0});

    CHECK(enumerate_hom_components(1, 5).size() == 1);
    CHECK(enumerate_hom_components(3, 2).size() == 6);

    for (long r = 1; r <= 8; ++r)
        for (long n = 1; n <= 8; ++n)
            CHECK(Int(enumerate_hom_components(r, n).size()) ==
                  binom(n + r - 1, r - 1));
}

TEST_CASE("mono detection") {
    CHECK(is_mono({2, 2, {1, 1}}));
    CHECK_FALSE(is_mono({2, 2, {2, 0}}));
    CHECK(is_mono({1, 3, {3}}));
    CHECK_FALSE(is_mono({4, 2, {1, 0, 1, 0}}));  // support {0,2} generates Z/2
    CHECK(is_mono({4, 2, {0, 0, 1, 1}}));        // 3 is a unit mod 4
}

TEST_CASE("hom components partition into monos over divisors") {
    CHECK(quotient_partition_check(2, 2));  // 3 = 1 + 2
    CHECK(quotient_partition_check(4, 1));  // 4 = 1 + 1 + 2
    CHECK(quotient_partition_check(1, 3));
    for (long r = 1; r <= 8; ++r)
        for (long n = 1; n <= 6; ++n) CHECK(quotient_partition_check(r, n));
}

TEST_CASE("profiles of mono components") {
    auto p111 = profile({3, 3, {1, 1, 1}});
    CHECK(p111.centralizer_blocks == std::vector<long>{1, 1, 1});
    CHECK(p111.delta_order == 1);
    CHECK(p111.w_order == 2);
    CHECK(p111.gamma_order == 2);

    auto p11 = profile({2, 2, {1, 1}});
    CHECK(p11.delta_order == 1);
    CHECK(p11.w_order == 1);
    CHECK(p11.gamma_order == 1);

    auto p02 = profile({2, 2, {0, 2}});
    CHECK(p02.centralizer_blocks == std::vector<long>{2});
    CHECK(p02.delta_order == 2);
    CHECK(p02.w_order == 1);
    CHECK(p02.gamma_order == 2);

    CHECK_THROWS_AS(profile({2, 2, {2, 0}}), std::invalid_argument);

    for (long r = 1; r <= 8; ++r)
        for (long n = 1; n <= 6; ++n)
            for (const auto& c : enumerate_hom_components(r, n)) {
                if (!is_mono(c)) continue;
                auto p = profile(c);
                CHECK(p.gamma_order == p.delta_order * p.w_order);
                CHECK(euler_phi(r) % p.w_order == 0);
            }
}

TEST_CASE("profile order matches brute force over labeled slots") {
    for (long r = 1; r <= 8; ++r)
        for (long n = 1; n <= 5; ++n)
            for (const auto& c : enumerate_hom_components(r, n)) {
                if (!is_mono(c)) continue;
                CHECK(profile(c).gamma_order == crosscheck::gl_gamma_order_bruteforce(c));
            }
}

TEST_CASE("orbits of the unit action on types") {
    auto orbits = aut_orbits_of_types(3, 2);
    REQUIRE(orbits.size() == 3);
    // ordered by least member: {(0,0,2),(0,2,0)}, {(0,1,1)}, {(1,0,1),(1,1,0)}
    CHECK(orbits[0].size() == 2);
    CHECK(orbits[0][0].d == std::vector<long>{0, 0, 2});
    CHECK(orbits[0][1].d == std::vector<long>{0, 2, 0});
    CHECK(orbits[1].size() == 1);
    CHECK(orbits[1][0].d == std::vector<long>{0, 1, 1});
    CHECK(orbits[2].size() == 2);
    CHECK(orbits[2][0].d == std::vector<long>{1, 0, 1});
    CHECK(orbits[2][1].d == std::vector<long>{1, 1, 0});

    CHECK(aut_orbits_of_types(1, 4).size() == 1);

    for (const auto& orbit : aut_orbits_of_types(2, 3)) CHECK(orbit.size() == 1);

    // orbit sizes partition the monos, and each orbit is a single w-class:
    // gamma data is constant along it
    for (long r = 1; r <= 6; ++r)
        for (long n = 1; n <= 5; ++n) {
            size_t mono_count = 0;
            for (const auto& c : enumerate_hom_components(r, n))
                if (is_mono(c)) ++mono_count;
            size_t in_orbits = 0;
            for (const auto& orbit : aut_orbits_of_types(r, n)) {
                in_orbits += orbit.size();
                auto p0 = profile(orbit[0]);
                for (const auto& c : orbit) {
                    auto p = profile(c);
                    CHECK(p.w_order == p0.w_order);
                    CHECK(p.delta_order == p0.delta_order);
                }
                CHECK(orbit.size() * static_cast<size_t>(p0.w_order) ==
                      static_cast<size_t>(euler_phi(r)));
            }
            CHECK(in_orbits == mono_count);
        }
}

TEST_CASE("component counts multiply over product groups") {
    // Types of a product GL_{n1} x GL_{n2} are pairs of types.
    for (long r : {2L, 3L, 4L})
        for (long n1 : {1L, 2L, 3L})
            for (long n2 : {1L, 2L}) {
                size_t pairs = 0;
                for (const auto& a : enumerate_hom_components(r, n1))
                    for (const auto& b : enumerate_hom_components(r, n2)) {
                        (void)a;
                        (void)b;
                        ++pairs;
                    }
                CHECK(Int(pairs) ==
                      binom(n1 + r - 1, r - 1) * binom(n2 + r - 1, r - 1));
            }
}
