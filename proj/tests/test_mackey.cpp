#include "doctest.h"

#include "kinertia/glhom.hpp"
#include "kinertia/mackey.hpp"
#include "kinertia/crosscheck.hpp"

using namespace kinertia;

namespace {

Perm cyc(long m, const std::vector<std::vector<long>>& cycles) {
    Perm p = perm_identity(m);
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i)
            p[static_cast<size_t>(c[i])] = c[(i + 1) % c.size()];
    return p;
}

PermGroup symmetric(long n) {
    if (n == 1) return PermGroup::from_generators(1, {perm_identity(1)});
    std::vector<long> full(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) full[static_cast<size_t>(i)] = i;
    return PermGroup::from_generators(n, {cyc(n, {{0, 1}}), cyc(n, {full})});
}

RatMat galois_perm_matrix(long u, long r) {
    RatMat p(static_cast<size_t>(r), static_cast<size_t>(r));
    for (long i = 0; i < r; ++i)
        p.at(static_cast<size_t>(u * i % r), static_cast<size_t>(i)) = 1;
    return p;
}

}  // namespace

TEST_CASE("permutation group plumbing") {
    auto s3 = symmetric(3);
    CHECK(s3.order() == 6);
    CHECK(symmetric(4).order() == 24);
    CHECK(perm_order(cyc(5, {{0, 1, 2, 3, 4}})) == 5);
    CHECK(perm_order(cyc(4, {{0, 1}, {2, 3}})) == 2);
    CHECK(perm_compose(cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})) == cyc(3, {{1, 2}}));
}

TEST_CASE("centralizer, normalizer, and twist counts") {
    auto s3 = symmetric(3);
    auto transposition = CyclicSubgroupNA::from_generator(cyc(3, {{0, 1}}));
    CHECK(centralizer(s3, transposition).order() == 2);
    CHECK(normalizer(s3, transposition).order() == 2);
    CHECK(w_order(s3, transposition) == 1);

    auto rotation = CyclicSubgroupNA::from_generator(cyc(3, {{0, 1, 2}}));
    CHECK(centralizer(s3, rotation).order() == 3);
    CHECK(normalizer(s3, rotation).order() == 6);
    CHECK(w_order(s3, rotation) == 2);

    // abelian ambient group: normalizer = centralizer = everything
    auto z6 = PermGroup::from_generators(6, {cyc(6, {{0, 1, 2, 3, 4, 5}})});
    for (const Perm& g : z6.elements) {
        auto s = CyclicSubgroupNA::from_generator(g);
        CHECK(w_order(z6, s) == 1);
    }
}

TEST_CASE("unit-twist count matches the ambient symmetric group on full cycles") {
    // A full n-cycle acts on n points with multiplicity-free eigenvalues, so
    // its twist group inside S_n agrees with the rank-function profile of the
    // corresponding all-ones type.
    for (long n = 2; n <= 6; ++n) {
        std::vector<long> full(static_cast<size_t>(n));
        for (long i = 0; i < n; ++i) full[static_cast<size_t>(i)] = i;
        auto sigma = CyclicSubgroupNA::from_generator(cyc(n, {full}));
        HomComponent all_ones{n, n, std::vector<long>(static_cast<size_t>(n), 1)};
        CHECK(w_order(symmetric(n), sigma) == profile(all_ones).w_order);
        CHECK(w_order(symmetric(n), sigma) == euler_phi(n));
    }
}

TEST_CASE("double cosets") {
    auto s3 = symmetric(3);
    auto everything = s3.elements;
    CHECK(double_cosets(s3, everything, everything).size() == 1);

    std::vector<Perm> h = {perm_identity(3), cyc(3, {{0, 1}})};
    auto dc = double_cosets(s3, h, h);
    REQUIRE(dc.size() == 2);
    long total = 0;
    bool saw2 = false, saw4 = false;
    for (auto& c : dc) {
        total += c.size;
        saw2 |= c.size == 2;
        saw4 |= c.size == 4;
    }
    CHECK(total == 6);
    CHECK(saw2);
    CHECK(saw4);

    std::vector<Perm> trivial = {perm_identity(3)};
    CHECK(double_cosets(s3, trivial, trivial).size() == 6);
}

TEST_CASE("restriction of induction, worked cases") {
    auto s3 = symmetric(3);
    auto h = CyclicSubgroupNA::from_generator(cyc(3, {{0, 1}}));
    RatMat m = res_ind_endo(s3, h);  // f + f(1)(1 + t)
    RatMat expected = RatMat::from_rows({{rat(2), rat(1)}, {rat(1), rat(2)}});
    CHECK(m == expected);

    // whole group: identity
    auto z5 = PermGroup::from_generators(5, {cyc(5, {{0, 1, 2, 3, 4}})});
    auto h5 = CyclicSubgroupNA::from_generator(cyc(5, {{0, 1, 2, 3, 4}}));
    CHECK(res_ind_endo(z5, h5) == RatMat::identity(5));

    // index-2 subgroup of Z/4: doubling
    auto z4 = PermGroup::from_generators(4, {cyc(4, {{0, 1, 2, 3}})});
    auto half = CyclicSubgroupNA::from_generator(cyc(4, {{0, 2}, {1, 3}}));
    CHECK(res_ind_endo(z4, half) == RatMat::identity(2) * Rational(2));
}

TEST_CASE("restriction of induction matches the class-function oracle") {
    std::vector<std::pair<PermGroup, CyclicSubgroupNA>> cases;

    auto s3 = symmetric(3);
    cases.emplace_back(s3, CyclicSubgroupNA::from_generator(cyc(3, {{0, 1}})));
    cases.emplace_back(s3, CyclicSubgroupNA::from_generator(cyc(3, {{0, 1, 2}})));

    auto s4 = symmetric(4);
    cases.emplace_back(s4, CyclicSubgroupNA::from_generator(cyc(4, {{0, 1, 2, 3}})));
    cases.emplace_back(s4, CyclicSubgroupNA::from_generator(cyc(4, {{0, 1}, {2, 3}})));
    cases.emplace_back(s4, CyclicSubgroupNA::from_generator(cyc(4, {{0, 1, 2}})));
    cases.emplace_back(s4, CyclicSubgroupNA::from_generator(cyc(4, {{0, 1}})));

    // dihedral group of order 8: rotation and a reflection
    auto d4 = PermGroup::from_generators(
        4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
    CHECK(d4.order() == 8);
    cases.emplace_back(d4, CyclicSubgroupNA::from_generator(cyc(4, {{0, 1, 2, 3}})));
    cases.emplace_back(d4, CyclicSubgroupNA::from_generator(cyc(4, {{0, 2}, {1, 3}})));

    // alternating group A4
    auto a4 = PermGroup::from_generators(
        4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1}, {2, 3}})});
    CHECK(a4.order() == 12);
    cases.emplace_back(a4, CyclicSubgroupNA::from_generator(cyc(4, {{0, 1, 2}})));
    cases.emplace_back(a4, CyclicSubgroupNA::from_generator(cyc(4, {{0, 1}, {2, 3}})));

    // Frobenius group of order 21: x -> x+1 and x -> 2x on Z/7; conjugation
    // twists the order-7 subgroup by nontrivial units
    auto f21 = PermGroup::from_generators(
        7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}})});
    CHECK(f21.order() == 21);
    cases.emplace_back(f21,
                       CyclicSubgroupNA::from_generator(cyc(7, {{0, 1, 2, 3, 4, 5, 6}})));
    cases.emplace_back(f21, CyclicSubgroupNA::from_generator(cyc(7, {{1, 2, 4}, {3, 6, 5}})));

    for (const auto& [G, H] : cases) {
        RatMat m = res_ind_endo(G, H);
        CHECK(m == crosscheck::res_ind_via_class_functions(G, H));

        // The endomorphism commutes with every unit twist realized by the
        // normalizer of H.
        std::vector<Perm> h_elems = H.elements();
        std::map<Perm, long> expo;
        for (long j = 0; j < H.r; ++j) expo.emplace(h_elems[static_cast<size_t>(j)], j);
        for (const Perm& g : normalizer(G, H).elements) {
            long u = expo.at(perm_compose(perm_compose(g, H.generator), perm_inverse(g)));
            RatMat p = galois_perm_matrix(u, H.r);
            CHECK(p * m == m * p);
        }
    }
}
