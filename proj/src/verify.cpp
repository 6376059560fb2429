#include "kinertia/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "kinertia/catalog.hpp"
#include "kinertia/crosscheck.hpp"

namespace kinertia {

namespace {

std::string group_tag(const FinAbGroup& A) {
    std::string s = "[";
    for (size_t i = 0; i < A.cyclic_factors.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(A.cyclic_factors[i]);
    }
    return s + "]";
}

std::string pad(long v, int width) {
    std::string s = std::to_string(v);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return s;
}

void add(std::vector<CheckResult>& out, std::string check,
         std::string instance, bool pass, Json lhs, Json rhs) {
    out.push_back({std::move(check), std::move(instance), pass,
                   std::move(lhs), std::move(rhs)});
}

void add_bool(std::vector<CheckResult>& out, std::string check,
              std::string instance, bool ok) {
    add(out, std::move(check), std::move(instance), ok, ok, true);
}

// The abelian G-set instance grid shared by the decomposition-level suites:
// the exhaustive coset-space catalog, optionally followed by seeded random
// relabeled actions in round-robin group order.
struct Instance {
    FinAbGroup group;
    GSpace space;
    std::string key;
};

std::vector<Instance> exhaustive_instances(const VerifyOptions& opt) {
    std::vector<Instance> out;
    for (const FinAbGroup& A : groups_up_to(opt.max_group_order)) {
        std::vector<GSpace> spaces = coset_spaces_up_to(A, opt.max_set_size);
        for (size_t i = 0; i < spaces.size(); ++i)
            out.push_back({A, std::move(spaces[i]),
                           "G=" + group_tag(A) + ";space=" +
                               pad(static_cast<long>(i), 3)});
    }
    return out;
}

std::vector<Instance> random_instances(const VerifyOptions& opt, long count) {
    std::vector<Instance> out;
    std::mt19937_64 rng(opt.seed);
    const std::vector<FinAbGroup> groups = groups_up_to(opt.max_group_order);
    for (long i = 0; i < count; ++i) {
        const FinAbGroup& A = groups[static_cast<size_t>(i) % groups.size()];
        out.push_back({A, random_space(A, opt.max_set_size, rng),
                       "G=" + group_tag(A) + ";random=" + pad(i, 3)});
    }
    return out;
}

std::vector<Instance> all_instances(const VerifyOptions& opt) {
    std::vector<Instance> out = exhaustive_instances(opt);
    for (Instance& inst : random_instances(opt, 200))
        out.push_back(std::move(inst));
    return out;
}

Subgroup full_subgroup(const FinAbGroup& A) {
    std::vector<long> gens;
    for (size_t i = 0; i < A.cyclic_factors.size(); ++i) {
        std::vector<long> v(A.cyclic_factors.size(), 0);
        v[i] = 1;
        gens.push_back(A.index_of(v));
    }
    return subgroup_from_generators(A, gens);
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long b = 1;
    for (long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// ---------------------------------------------------------------- suites

// The push-forward of identity-component localizations agrees with the
// adjoint-derived invariants push-forward: (r/n)*tr against a matrix
// recovered purely from the pairing adjunction.
std::vector<CheckResult> suite_trace_lemma(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (long n = 1; n <= opt.max_n; ++n) {
        for (long r : divisors(n)) {
            const long pn = euler_phi(n), pr = euler_phi(r);
            RatMat lib(static_cast<size_t>(pr), static_cast<size_t>(pn));
            RatMat ind(static_cast<size_t>(pr), static_cast<size_t>(pn));
            const RatMat push = crosscheck::invariants_pushforward_matrix(n, r);
            for (long i = 0; i < pn; ++i) {
                CycFieldElem e = CycFieldElem::zero(n);
                e.c[static_cast<size_t>(i)] = rat(1);
                const CycFieldElem a = mu_localized_pushforward(e, r);
                CycModN em = embed_i(e, n);
                CycModN pushed = CycModN::zero(r);
                for (long x = 0; x < r; ++x)
                    for (long y = 0; y < n; ++y) {
                        const Rational& w = push.at(static_cast<size_t>(x),
                                                    static_cast<size_t>(y));
                        if (w != 0 && em.c[static_cast<size_t>(y)] != 0)
                            pushed.c[static_cast<size_t>(x)] +=
                                w * em.c[static_cast<size_t>(y)];
                    }
                const CycFieldElem b = crt_split(pushed).comp.at(r);
                for (long x = 0; x < pr; ++x) {
                    lib.at(static_cast<size_t>(x), static_cast<size_t>(i)) =
                        a.c[static_cast<size_t>(x)];
                    ind.at(static_cast<size_t>(x), static_cast<size_t>(i)) =
                        b.c[static_cast<size_t>(x)];
                }
            }
            add(out, "trace-lemma", "n=" + pad(n, 2) + ";r=" + pad(r, 2),
                lib == ind, matrix_to_json(ind), matrix_to_json(lib));
        }
    }
    return out;
}

PermGroup cyclic_perm_group(long m) {
    Perm rot(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) rot[static_cast<size_t>(i)] = (i + 1) % m;
    return PermGroup::from_generators(m, {rot});
}

std::vector<CheckResult> suite_mackey(const VerifyOptions&) {
    std::vector<CheckResult> out;
    const PermGroup s3 = PermGroup::from_generators(3, {{1, 0, 2}, {1, 2, 0}});
    const PermGroup z4 = cyclic_perm_group(4);
    const PermGroup z6 = cyclic_perm_group(6);
    const PermGroup d4 =
        PermGroup::from_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});

    const CyclicSubgroupNA transposition =
        CyclicSubgroupNA::from_generator({1, 0, 2});
    const CyclicSubgroupNA threecycle =
        CyclicSubgroupNA::from_generator({1, 2, 0});

    const RatMat worked = res_ind_endo(s3, transposition);
    const RatMat expected =
        RatMat::from_rows({{rat(2), rat(1)}, {rat(1), rat(2)}});
    add(out, "mackey-worked", "S3;H=transposition", worked == expected,
        matrix_to_json(worked), matrix_to_json(expected));

    const RatMat full =
        res_ind_endo(z6, CyclicSubgroupNA::from_generator(z6.generators[0]));
    add(out, "mackey-identity", "Z6;H=G", full == RatMat::identity(6),
        matrix_to_json(full), matrix_to_json(RatMat::identity(6)));

    const Perm square = perm_compose(z4.generators[0], z4.generators[0]);
    const RatMat doubled =
        res_ind_endo(z4, CyclicSubgroupNA::from_generator(square));
    add(out, "mackey-index-two", "Z4;H=Z2",
        doubled == RatMat::identity(2) * rat(2), matrix_to_json(doubled),
        matrix_to_json(RatMat::identity(2) * rat(2)));

    const std::vector<std::pair<std::string,
                                std::pair<const PermGroup*, Perm>>>
        cases = {{"S3;H=transposition", {&s3, {1, 0, 2}}},
                 {"S3;H=threecycle", {&s3, {1, 2, 0}}},
                 {"Z4;H=Z2", {&z4, square}},
                 {"Z6;H=G", {&z6, z6.generators[0]}},
                 {"D4;H=rotation", {&d4, {1, 2, 3, 0}}},
                 {"D4;H=reflection", {&d4, {0, 3, 2, 1}}}};
    for (const auto& [key, gh] : cases) {
        const CyclicSubgroupNA h = CyclicSubgroupNA::from_generator(gh.second);
        const RatMat lib = res_ind_endo(*gh.first, h);
        const RatMat oracle = crosscheck::res_ind_via_class_functions(*gh.first, h);
        add(out, "mackey-class-function-oracle", key, lib == oracle,
            matrix_to_json(lib), matrix_to_json(oracle));
    }

    const std::vector<std::tuple<std::string, const PermGroup*, Perm, long>>
        wcases = {{"S3;H=transposition", &s3, {1, 0, 2}, 1},
                  {"S3;H=threecycle", &s3, {1, 2, 0}, 2},
                  {"Z6;H=G", &z6, z6.generators[0], 1},
                  {"D4;H=rotation", &d4, {1, 2, 3, 0}, 2}};
    for (const auto& [key, G, gen, expect] : wcases) {
        const long w = w_order(*G, CyclicSubgroupNA::from_generator(gen));
        add(out, "mackey-w-order", key, w == expect, w, expect);
    }
    return out;
}

std::vector<CheckResult> suite_decomposition(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const long bound = std::max<long>(36, opt.max_group_order);
    for (const FinAbGroup& A : groups_up_to(bound)) {
        const std::string tag = "A=" + group_tag(A);
        const std::vector<AlgebraFactor> factors = factorize_group_algebra(A);

        long dim_sum = 0;
        for (const AlgebraFactor& f : factors) dim_sum += euler_phi(f.conductor);
        add(out, "decomposition-dims", tag, dim_sum == A.size(), dim_sum,
            A.size());

        bool ortho = true;
        GroupAlgebraElem total = GroupAlgebraElem::zero(A);
        for (size_t i = 0; i < factors.size() && ortho; ++i) {
            total = total + factors[i].idempotent;
            for (size_t j = 0; j < factors.size() && ortho; ++j) {
                const GroupAlgebraElem prod =
                    factors[i].idempotent * factors[j].idempotent;
                ortho = (i == j) ? prod == factors[i].idempotent
                                 : prod.is_zero();
            }
        }
        ortho = ortho && total == GroupAlgebraElem::one(A);
        add_bool(out, "decomposition-idempotents", tag, ortho);

        std::map<long, long> subgroups_of_order;
        for (const DualCyclicSubgroup& sigma : dual_cyclic_subgroups(A))
            ++subgroups_of_order[sigma.r];
        for (long r : divisors(A.exponent())) {
            const long embeddings =
                static_cast<long>(embeddings_of_mu(A, r).size());
            const long expected = euler_phi(r) * subgroups_of_order[r];
            add(out, "decomposition-embeddings", tag + ";r=" + pad(r, 2),
                embeddings == expected, embeddings, expected);
        }

        bool maximal = true;
        for (const DualCyclicSubgroup& sigma : dual_cyclic_subgroups(A))
            maximal = maximal && maximal_ideal_check(A, sigma);
        add_bool(out, "decomposition-maximal-ideals", tag, maximal);
    }
    return out;
}

std::vector<CheckResult> suite_glhom(const VerifyOptions&) {
    std::vector<CheckResult> out;
    for (long r = 1; r <= 8; ++r)
        for (long n = 1; n <= 8; ++n) {
            const long count =
                static_cast<long>(enumerate_hom_components(r, n).size());
            const long expected = binomial(n + r - 1, r - 1);
            add(out, "glhom-count", "r=" + pad(r, 1) + ";n=" + pad(n, 1),
                count == expected, count, expected);
        }
    for (long r = 1; r <= 8; ++r)
        for (long n = 1; n <= 6; ++n)
            add_bool(out, "glhom-partition", "r=" + pad(r, 1) + ";n=" + pad(n, 1),
                     quotient_partition_check(r, n));
    for (long r = 1; r <= 8; ++r)
        for (long n = 1; n <= 6; ++n) {
            long mono_count = 0;
            for (const HomComponent& c : enumerate_hom_components(r, n))
                if (is_mono(c)) ++mono_count;
            long orbit_total = 0;
            for (const auto& orbit : aut_orbits_of_types(r, n))
                orbit_total += static_cast<long>(orbit.size());
            add(out, "glhom-aut-orbits", "r=" + pad(r, 1) + ";n=" + pad(n, 1),
                orbit_total == mono_count, orbit_total, mono_count);
        }
    for (long r = 1; r <= 8; ++r)
        for (long n = 1; n <= 5; ++n)
            for (const HomComponent& c : enumerate_hom_components(r, n)) {
                if (!is_mono(c)) continue;
                std::string key = "r=" + pad(r, 1) + ";n=" + pad(n, 1) + ";d=[";
                for (size_t i = 0; i < c.d.size(); ++i) {
                    if (i > 0) key += ",";
                    key += std::to_string(c.d[i]);
                }
                key += "]";
                const SubgroupProfile p = profile(c);
                const Int oracle = crosscheck::gl_gamma_order_bruteforce(c);
                const bool consistent =
                    p.gamma_order == p.delta_order * p.w_order &&
                    euler_phi(r) % p.w_order == 0;
                add(out, "glhom-gamma-oracle", key,
                    p.gamma_order == oracle && consistent,
                    p.gamma_order.get_str(), oracle.get_str());
            }
    return out;
}

std::vector<CheckResult> suite_k_theory(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (const Instance& inst : exhaustive_instances(opt)) {
        const GSpace& x = inst.space;
        const std::vector<DualCyclicSubgroup> sigmas =
            dual_cyclic_subgroups(inst.group);

        // Fundamental decomposition: the sigma-local dimensions sum to the
        // full dimension, and a sigma-part is nonzero exactly when the
        // sigma-fixed locus is nonempty (computed on the point action).
        long dim_sum = 0;
        bool support_ok = true;
        for (const DualCyclicSubgroup& sigma : sigmas) {
            long dim_sigma = 0;
            for (const Orbit& orbit : x.orbits)
                if (orbit.stabilizer.contains(sigma.generator))
                    dim_sigma += euler_phi(sigma.r);
            dim_sum += dim_sigma;
            const bool local_nonzero =
                !localize(x, k_one(x), sigma).is_zero();
            const bool fixed_nonempty =
                fixed_locus(x.set, sigma.generator).points > 0;
            support_ok = support_ok && local_nonzero == fixed_nonempty &&
                         (dim_sigma > 0) == fixed_nonempty;
        }
        add(out, "ktheory-sigma-dims", inst.key, dim_sum == k_dim(x), dim_sum,
            k_dim(x));
        add_bool(out, "ktheory-sigma-support", inst.key, support_ok);

        // Push-forward to the orbit space is a bijection from the geometric
        // part: exact rank on the per-orbit geometric idempotent basis.
        const size_t m = x.orbits.size();
        RatMat mod(m, m);
        for (size_t i = 0; i < m; ++i) {
            KClass basis = k_zero(x);
            const FinAbGroup stab = x.orbits[i].stabilizer.abstract_group();
            for (const AlgebraFactor& f : cached_algebra_factors(stab))
                if (f.conductor == 1) basis.entries[i] = f.idempotent;
            const std::vector<Rational> v = moduli_pushforward(x, basis);
            for (size_t j = 0; j < m; ++j) mod.at(j, i) = v[j];
        }
        const bool moduli_ok =
            mod.rank() == m &&
            moduli_pushforward(x, geometric_part(x, k_one(x))) ==
                moduli_pushforward(x, k_one(x));
        add_bool(out, "ktheory-moduli-bijective", inst.key, moduli_ok);

        // Vanishing: the algebraic part of the unit dies exactly on free
        // actions.
        bool free_action = true;
        for (const Orbit& orbit : x.orbits)
            free_action = free_action && orbit.stabilizer.order() == 1;
        add_bool(out, "ktheory-free-vanishing", inst.key,
                 algebraic_part(x, k_one(x)).is_zero() == free_action);
    }

    // Full-basis vanishing on the canonical free space of every group.
    for (const FinAbGroup& A : groups_up_to(opt.max_group_order)) {
        const GSpace free_space =
            GSpace::analyze(coset_gset(A, {subgroup_from_generators(A, {})}));
        bool vanish = true;
        const long dim = k_dim(free_space);
        std::vector<Rational> e(static_cast<size_t>(dim), rat(0));
        for (long j = 0; j < dim && vanish; ++j) {
            e[static_cast<size_t>(j)] = rat(1);
            vanish = algebraic_part(free_space,
                                    k_from_coords(free_space, e))
                         .is_zero();
            e[static_cast<size_t>(j)] = rat(0);
        }
        add_bool(out, "ktheory-free-vanishing",
                 "G=" + group_tag(A) + ";free-basis", vanish);
    }

    // Descent along the cover of the one-point space by the regular action,
    // with the group itself as deck group.
    for (const FinAbGroup& A : groups_up_to(std::min<long>(12, opt.max_group_order))) {
        const GSpace total =
            GSpace::analyze(coset_gset(A, {subgroup_from_generators(A, {})}));
        const GSpace base = GSpace::analyze(coset_gset(A, {full_subgroup(A)}));
        const std::vector<long> projection(
            static_cast<size_t>(total.set.points), 0);
        const GaloisCover cover = make_galois_cover(
            total, base, projection, A, total.set.action);
        add_bool(out, "ktheory-cover-descent", "G=" + group_tag(A) + ";point-cover",
                 galois_cover_check(cover));
    }

    // A fixed double cover of a two-point trivial action, and a trivial
    // (identity) cover.
    {
        const FinAbGroup z2{{2}};
        const Subgroup full = full_subgroup(z2);
        const GSpace two = GSpace::analyze(coset_gset(z2, {full, full}));
        const GSpace one = GSpace::analyze(coset_gset(z2, {full}));
        const GaloisCover dbl = make_galois_cover(
            two, one, {0, 0}, FinAbGroup{{2}}, {Perm{1, 0}});
        add_bool(out, "ktheory-cover-descent", "G=[2];double-cover",
                 galois_cover_check(dbl));
        const GaloisCover ident = make_galois_cover(
            two, two, {0, 1}, FinAbGroup{}, {});
        add_bool(out, "ktheory-cover-descent", "G=[2];identity-cover",
                 galois_cover_check(ident));
    }
    return out;
}

std::vector<CheckResult> suite_comp(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (const Instance& inst : all_instances(opt))
        add_bool(out, "comp-scale", inst.key,
                 comp_check(cyclotomic_inertia(inst.space)));
    return out;
}

std::vector<CheckResult> suite_lrr(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (const Instance& inst : all_instances(opt)) {
        const CyclotomicInertia ix = cyclotomic_inertia(inst.space);
        const size_t dim = static_cast<size_t>(k_dim(inst.space));

        add(out, "lrr-vv-dimension", inst.key,
            invariant_slots(ix).size() == dim,
            static_cast<long>(invariant_slots(ix).size()),
            static_cast<long>(dim));

        bool ok = true;
        try {
            // Forward of the inverse over the invariant basis; the forward
            // call asserts the other composite internally on every use.
            for (size_t i = 0; i < dim && ok; ++i) {
                std::vector<Rational> e(dim, rat(0));
                e[i] = rat(1);
                const TwistedClass w = invariant_expand(ix, e);
                ok = lrr_forward(ix, lrr_inverse(ix, w)) == w;
            }
        } catch (const std::logic_error&) {
            ok = false;
        }
        add_bool(out, "lrr-roundtrip", inst.key, ok);
    }

    // The direct evaluation route and the exact linear-inversion route give
    // the same forward map (spot-checked on small mixed-orbit spaces).
    const FinAbGroup z2{{2}}, z4{{4}}, z6{{6}};
    const std::vector<std::pair<std::string, GSpace>> small = {
        {"B-mu2", GSpace::analyze(coset_gset(z2, {full_subgroup(z2)}))},
        {"B-mu4", GSpace::analyze(coset_gset(z4, {full_subgroup(z4)}))},
        {"Z6-mixed",
         GSpace::analyze(coset_gset(
             z6, {subgroup_from_generators(z6, {2}),
                  subgroup_from_generators(z6, {3})}))},
        {"Z4-free-plus-fixed",
         GSpace::analyze(coset_gset(
             z4, {subgroup_from_generators(z4, {}), full_subgroup(z4)}))}};
    for (const auto& [key, x] : small) {
        const CyclotomicInertia ix = cyclotomic_inertia(x);
        const size_t dim = static_cast<size_t>(k_dim(x));
        bool agree = true;
        for (size_t i = 0; i < dim && agree; ++i) {
            std::vector<Rational> e(dim, rat(0));
            e[i] = rat(1);
            const KClass a = k_from_coords(x, e);
            agree = lrr_forward(ix, a) == lrr_forward_via_inversion(ix, a);
        }
        add_bool(out, "lrr-route-agreement", key, agree);
    }
    return out;
}

std::vector<CheckResult> suite_rho_star(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (const Instance& inst : all_instances(opt))
        add_bool(out, "rho-star-bijective", inst.key,
                 rho_star_invariants_bijective(cyclotomic_inertia(inst.space)));
    return out;
}

std::vector<CheckResult> suite_covariance(const VerifyOptions& opt) {
    std::vector<CheckResult> out;

    // Worked instance: folding the free two-point action onto the one-point
    // action sends the unit to (2, 0) along both sides of the square.
    {
        const FinAbGroup z2{{2}};
        const GSpace src =
            GSpace::analyze(coset_gset(z2, {subgroup_from_generators(z2, {})}));
        const GSpace tgt = GSpace::analyze(coset_gset(z2, {full_subgroup(z2)}));
        const EquivariantMap f = make_equivariant_map(src, tgt, {0, 0});
        const CyclotomicInertia iy = cyclotomic_inertia(src);
        const CyclotomicInertia ix = cyclotomic_inertia(tgt);
        const TwistedClass lhs = lrr_forward(ix, pushforward(f, k_one(src)));
        const TwistedClass rhs =
            inertia_pushforward(f, iy, ix, lrr_forward(iy, k_one(src)), false);
        TwistedClass expected = twisted_zero(ix);
        expected.entries[0][0] = CycFieldElem::from_rational(1, rat(2));
        const bool ok =
            lhs == rhs && lhs == expected && covariance_check(f);
        add(out, "covariance-worked", "fold-two-free-points", ok,
            twisted_to_json(ix, lhs), twisted_to_json(ix, expected));
    }

    const long bound = std::min<long>(12, opt.max_group_order);
    for (const FinAbGroup& A : groups_up_to(bound)) {
        std::mt19937_64 rng(opt.seed);
        for (long i = 0; i < 100; ++i) {
            const EquivariantMap f = random_map(A, opt.max_set_size, rng);
            add_bool(out, "covariance-natural",
                     "G=" + group_tag(A) + ";map=" + pad(i, 3),
                     covariance_check(f));
        }
    }
    return out;
}

std::vector<CheckResult> suite_normal_basis(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (long N = 1; N <= opt.max_n; ++N) {
        NormalBasisFamily fam;
        bool built = true;
        try {
            fam = build_family(N);
        } catch (const std::runtime_error&) {
            built = false;
        }
        add_bool(out, "normal-basis-family", "N=" + pad(N, 2),
                 built && family_invariants_hold(fam));
        if (!built) continue;
        add_bool(out, "normal-basis-deterministic", "N=" + pad(N, 2),
                 build_family(N) == fam);
        for (long n : divisors(N))
            for (long r : divisors(n))
                add_bool(out, "normal-basis-tracedown",
                         "N=" + pad(N, 2) + ";n=" + pad(n, 2) + ";r=" + pad(r, 2),
                         tracedown_check(fam, n, r));
    }
    return out;
}

std::vector<CheckResult> suite_rational_rr(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::map<long, NormalBasisFamily> families;
    const auto family_for = [&families](long n) -> const NormalBasisFamily& {
        auto it = families.find(n);
        if (it == families.end())
            it = families.emplace(n, build_family(n)).first;
        return it->second;
    };

    // Worked values on the one-point space with mu_2 automorphisms: the
    // geometric idempotent (1+chi)/2 maps to (1, 0) — it is the class whose
    // forward twisted class is (1, 0) — while the unit and the sign
    // character fill out the basis as (1, 1) and (1, -1).
    {
        const FinAbGroup z2{{2}};
        const GSpace x = GSpace::analyze(coset_gset(z2, {full_subgroup(z2)}));
        const NormalBasisFamily& fam = family_for(2);
        KClass geom = k_one(x);
        geom.entries[0] = (GroupAlgebraElem::one(z2) +
                           GroupAlgebraElem::character(z2, 1)) *
                          rat(1, 2);
        KClass sign = k_one(x);
        sign.entries[0] = GroupAlgebraElem::character(z2, 1);
        const std::vector<std::tuple<std::string, KClass,
                                     std::vector<Rational>>>
            cases = {{"B-mu2;geometric-idempotent", geom, {rat(1), rat(0)}},
                     {"B-mu2;unit", k_one(x), {rat(1), rat(1)}},
                     {"B-mu2;sign", sign, {rat(1), rat(-1)}}};
        for (const auto& [key, a, expected] : cases) {
            const std::vector<Rational> v = rational_rr(x, a, fam);
            add(out, "rational-rr-point-value", key, v == expected,
                rational_vector_to_json(v), rational_vector_to_json(expected));
        }
    }

    // Free actions reduce to the ordinary rank vector over orbits.
    for (long n : {2L, 3L, 4L}) {
        const FinAbGroup A{{n}};
        const GSpace x =
            GSpace::analyze(coset_gset(A, {subgroup_from_generators(A, {})}));
        const long dim = k_dim(x);
        bool ok = true;
        std::vector<Rational> e(static_cast<size_t>(dim), rat(0));
        for (long j = 0; j < dim && ok; ++j) {
            e[static_cast<size_t>(j)] = rat(1);
            const KClass a = k_from_coords(x, e);
            ok = rational_rr(x, a, family_for(A.exponent())) ==
                 moduli_pushforward(x, a);
            e[static_cast<size_t>(j)] = rat(0);
        }
        add_bool(out, "rational-rr-free-rank", "G=" + group_tag(A), ok);
    }

    const long map_bound = std::min<long>(12, opt.max_group_order);
    for (const FinAbGroup& A : groups_up_to(map_bound)) {
        const NormalBasisFamily& fam = family_for(A.exponent());
        std::mt19937_64 rng(opt.seed);
        for (long i = 0; i < 100; ++i) {
            const EquivariantMap f = random_map(A, opt.max_set_size, rng);
            add_bool(out, "rational-rr-phi-covariance",
                     "G=" + group_tag(A) + ";map=" + pad(i, 3),
                     phi_covariance_check(f, fam));
        }
    }

    for (const Instance& inst : exhaustive_instances(opt)) {
        bool ok = true;
        try {
            ok = rational_rr_bijective(inst.space,
                                       family_for(inst.group.exponent()));
        } catch (const std::logic_error&) {
            ok = false;
        }
        add_bool(out, "rational-rr-bijective", inst.key, ok);
    }
    return out;
}

using SuiteFn = std::vector<CheckResult> (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"trace-lemma", suite_trace_lemma},
        {"mackey", suite_mackey},
        {"decomposition", suite_decomposition},
        {"glhom", suite_glhom},
        {"k-theory", suite_k_theory},
        {"comp", suite_comp},
        {"lrr", suite_lrr},
        {"rho-star", suite_rho_star},
        {"covariance", suite_covariance},
        {"normal-basis", suite_normal_basis},
        {"rational-rr", suite_rational_rr},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name,
                                   const VerifyOptions& opt) {
    for (const auto& [suite, fn] : suite_table())
        if (suite == name) return fn(opt);
    throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<CheckResult> run_all_suites(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : suite_table()) {
        std::vector<CheckResult> part = fn(opt);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

Json report_to_json(std::vector<CheckResult> results) {
    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) {
                  return std::tie(a.check, a.instance) <
                         std::tie(b.check, b.instance);
              });
    Json out = Json::array();
    for (const CheckResult& r : results) {
        Json e = Json::object();
        e["check"] = r.check;
        e["instance"] = r.instance;
        e["pass"] = r.pass;
        e["lhs"] = r.lhs;
        e["rhs"] = r.rhs;
        out.push_back(std::move(e));
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace kinertia
