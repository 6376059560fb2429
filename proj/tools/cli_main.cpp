#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kinertia/json_io.hpp"
#include "kinertia/verify.hpp"

namespace kinertia {

namespace {

// Reads the --input value: "-" is the in stream, a leading '{' or '[' is
// inline JSON, anything else must be an existing file.
std::string read_input(const std::string& spec, std::istream& in) {
    if (spec == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    const size_t first = spec.find_first_not_of(" \t\r\n");
    if (first != std::string::npos &&
        (spec[first] == '{' || spec[first] == '[')) {
        return spec;
    }
    std::ifstream f(spec);
    if (!f) throw SchemaError("$", "input file not found: " + spec);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void emit(const std::string& output, const Json& doc, std::ostream& out) {
    if (output.empty()) {
        out << doc.dump(2) << "\n";
        return;
    }
    std::ofstream f(output);
    if (!f) throw SchemaError("$", "cannot open output file: " + output);
    f << doc.dump(2) << "\n";
}

const Json& require_field(const Json& j, const std::string& key,
                          const std::string& path) {
    if (!j.is_object())
        throw SchemaError(path, "expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(path + "." + key, "missing required field");
    return *it;
}

void reject_unknown(const Json& j, const std::vector<std::string>& allowed,
                    const std::string& path) {
    if (!j.is_object())
        throw SchemaError(path, "expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const std::string& a : allowed) known = known || key == a;
        if (!known) throw SchemaError(path + "." + key, "unknown field");
    }
}

long require_long(const Json& j, const std::string& path, long lo, long hi) {
    if (!j.is_number_integer())
        throw SchemaError(path, "expected an integer");
    const long v = j.get<long>();
    if (v < lo || v > hi)
        throw SchemaError(path, "value " + std::to_string(v) +
                                    " outside the supported range [" +
                                    std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    return v;
}

// ------------------------------------------------------------------ verbs

int run_decompose(const Json& j, const std::string& output,
                  std::ostream& out) {
    const FinAbGroup A = group_from_json(j, "$");
    std::vector<AlgebraFactor> factors = factorize_group_algebra(A);
    std::sort(factors.begin(), factors.end(),
              [](const AlgebraFactor& a, const AlgebraFactor& b) {
                  return std::tie(a.conductor, a.sigma.generator) <
                         std::tie(b.conductor, b.sigma.generator);
              });
    Json arr = Json::array();
    for (const AlgebraFactor& f : factors) {
        Json e = Json::object();
        e["sigma_order"] = f.conductor;
        if (euler_phi(f.conductor) > 1) e["field_degree"] = euler_phi(f.conductor);
        arr.push_back(std::move(e));
    }
    emit(output, Json{{"factors", std::move(arr)}}, out);
    return 0;
}

int run_inertia(const Json& j, const std::string& output, std::ostream& out) {
    const GSpace x = GSpace::analyze(gset_from_json(j, "$"));
    const CyclotomicInertia ix = cyclotomic_inertia(x);
    Json comps = Json::array();
    for (const InertiaComponent& c : ix.components) {
        Json e = Json::object();
        e["h"] = element_to_json(x.set.group, c.h);
        e["r"] = c.r;
        e["orbits"] = c.orbit_ids;
        comps.push_back(std::move(e));
    }
    emit(output, Json{{"components", std::move(comps)}}, out);
    return 0;
}

int run_lrr(const Json& j, const std::string& output, std::ostream& out) {
    reject_unknown(j, {"gset", "class"}, "$");
    const GSpace x =
        GSpace::analyze(gset_from_json(require_field(j, "gset", "$"), "$.gset"));
    const KClass a =
        kclass_from_json(x, require_field(j, "class", "$"), "$.class");
    const CyclotomicInertia ix = cyclotomic_inertia(x);
    emit(output, twisted_to_json(ix, lrr_forward(ix, a)), out);
    return 0;
}

int run_lrr_inverse(const Json& j, const std::string& output,
                    std::ostream& out) {
    reject_unknown(j, {"gset", "twisted"}, "$");
    const GSpace x =
        GSpace::analyze(gset_from_json(require_field(j, "gset", "$"), "$.gset"));
    const CyclotomicInertia ix = cyclotomic_inertia(x);
    const TwistedClass w =
        twisted_from_json(ix, require_field(j, "twisted", "$"), "$.twisted");
    if (!aut_invariant(ix, w))
        throw SchemaError("$.twisted",
                          "twisted class is not conjugation-invariant; the "
                          "inverse is defined on the invariant subspace");
    emit(output, kclass_to_json(x, lrr_inverse(ix, w)), out);
    return 0;
}

int run_comp_check(const Json& j, const std::string& output,
                   std::ostream& out) {
    const GSet raw = gset_from_json(j, "$");
    const GSpace x = GSpace::analyze(raw);
    const bool ok = comp_check(cyclotomic_inertia(x));
    Json result = Json::object();
    result["pass"] = ok;
    if (!ok) result["counterexample"] = gset_to_json(raw);
    emit(output, result, out);
    return ok ? 0 : 2;
}

int run_mackey(const Json& j, const std::string& output, std::ostream& out) {
    reject_unknown(j, {"group", "subgroup_generator"}, "$");
    const PermGroup G =
        permgroup_from_json(require_field(j, "group", "$"), "$.group");
    const Perm gen = perm_from_json(
        G.degree, require_field(j, "subgroup_generator", "$"),
        "$.subgroup_generator");
    if (!G.contains(gen))
        throw SchemaError("$.subgroup_generator",
                          "permutation is not an element of the group");
    const RatMat m = res_ind_endo(G, CyclicSubgroupNA::from_generator(gen));
    Json result = Json::object();
    result["order"] = perm_order(gen);
    result["matrix"] = matrix_to_json(m);
    emit(output, result, out);
    return 0;
}

int run_homschemes(const Json& j, const std::string& output,
                   std::ostream& out) {
    reject_unknown(j, {"r", "n"}, "$");
    const long r = require_long(require_field(j, "r", "$"), "$.r", 1, 64);
    const long n = require_long(require_field(j, "n", "$"), "$.n", 1, 64);
    long count = 1;  // C(n+r-1, r-1), bailing out beyond the size cap
    for (long i = 1; i <= r - 1; ++i) {
        count = count * (n + i) / i;
        if (count > 100000)
            throw SchemaError("$", "component count exceeds the supported "
                                   "bound of 100000");
    }
    const std::vector<HomComponent> comps = enumerate_hom_components(r, n);
    Json result = Json::object();
    result["r"] = r;
    result["n"] = n;
    result["count"] = static_cast<long>(comps.size());
    Json carr = Json::array();
    for (const HomComponent& c : comps) carr.push_back(hom_component_to_json(c));
    result["components"] = std::move(carr);
    Json mono = Json::array();
    for (const HomComponent& c : comps) {
        if (!is_mono(c)) continue;
        const SubgroupProfile p = profile(c);
        Json e = Json::object();
        e["component"] = hom_component_to_json(c);
        e["centralizer_blocks"] = p.centralizer_blocks;
        e["delta_order"] = p.delta_order.get_str();
        e["w_order"] = p.w_order;
        e["gamma_order"] = p.gamma_order.get_str();
        mono.push_back(std::move(e));
    }
    result["mono"] = std::move(mono);
    Json orbits = Json::array();
    for (const std::vector<HomComponent>& orbit : aut_orbits_of_types(r, n)) {
        Json o = Json::array();
        for (const HomComponent& c : orbit) o.push_back(hom_component_to_json(c));
        orbits.push_back(std::move(o));
    }
    result["aut_orbits"] = std::move(orbits);
    emit(output, result, out);
    return 0;
}

int run_normal_basis(const Json& j, const std::string& output,
                     std::ostream& out) {
    reject_unknown(j, {"N"}, "$");
    const long N = require_long(require_field(j, "N", "$"), "$.N", 1, 64);
    emit(output, family_to_json(build_family(N)), out);
    return 0;
}

int run_rational_rr(const Json& j, const std::string& output,
                    std::ostream& out) {
    reject_unknown(j, {"gset", "class", "family"}, "$");
    const GSpace x =
        GSpace::analyze(gset_from_json(require_field(j, "gset", "$"), "$.gset"));
    const KClass a =
        kclass_from_json(x, require_field(j, "class", "$"), "$.class");
    const FinAbGroup& A = x.set.group;
    NormalBasisFamily fam;
    if (j.contains("family")) {
        fam = family_from_json(j.at("family"), "$.family");
        if (fam.modulus % A.exponent() != 0)
            throw SchemaError("$.family.N",
                              "family modulus must be a multiple of the "
                              "group exponent " +
                                  std::to_string(A.exponent()));
        if (!family_invariants_hold(fam))
            throw SchemaError("$.family",
                              "family fails the trace-compatible "
                              "normal-basis invariants");
    } else {
        fam = build_family(A.exponent());
    }
    const std::vector<Rational> v = rational_rr(x, a, fam);
    const CyclotomicInertia ix = cyclotomic_inertia(x);
    Json arr = Json::array();
    size_t slot = 0;
    for (const InertiaComponent& c : ix.components)
        for (long oid : c.orbit_ids) {
            Json e = Json::object();
            e["h"] = element_to_json(A, c.h);
            e["orbit"] = oid;
            e["value"] = rational_to_json(v[slot++]);
            arr.push_back(std::move(e));
        }
    emit(output, Json{{"orbits", std::move(arr)}}, out);
    return 0;
}

int run_verify(const VerifyOptions& opt, const std::string& suite,
               const std::string& output, std::ostream& out,
               std::ostream& err) {
    std::vector<CheckResult> results;
    if (suite.empty()) {
        results = run_all_suites(opt);
    } else {
        try {
            results = run_suite(suite, opt);
        } catch (const std::invalid_argument&) {
            std::string names;
            for (const std::string& s : verify_suite_names())
                names += (names.empty() ? "" : ", ") + s;
            throw SchemaError("$.suite",
                              "unknown suite '" + suite + "'; available: " +
                                  names);
        }
    }
    long failed = 0;
    for (const CheckResult& r : results)
        if (!r.pass) ++failed;
    const size_t total = results.size();
    emit(output, report_to_json(std::move(results)), out);
    err << total << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 2;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact equivariant K-theory decompositions, twisted-class "
                 "isomorphisms and verification suites for finite group "
                 "actions on finite sets"};
    app.require_subcommand(1);

    std::string input, output, suite;
    VerifyOptions opt;

    const std::vector<std::pair<std::string, std::string>> data_verbs = {
        {"decompose",
         "Factor the rational group algebra of a finite abelian group"},
        {"inertia", "List the cyclotomic inertia components of a G-set"},
        {"lrr", "Apply the twisted-class isomorphism to a K-theory class"},
        {"lrr-inverse",
         "Recover the K-theory class of an invariant twisted class"},
        {"comp-check",
         "Check the push-pull scaling identity on a G-set's inertia"},
        {"mackey",
         "Restriction-of-induction endomorphism for a cyclic subgroup"},
        {"homschemes",
         "Classify diagonalizable-subgroup components in GL_n with profiles"},
        {"normal-basis",
         "Search a trace-compatible normal-basis family for a modulus"},
        {"rational-rr",
         "Rational Riemann-Roch: one rational per inertia orbit"},
    };
    for (const auto& [name, desc] : data_verbs) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--input", input,
                        "Input JSON: a file path, inline text, or - for stdin")
            ->required();
        sub->add_option("--output", output,
                        "Write the result to this file instead of stdout");
    }
    CLI::App* verify =
        app.add_subcommand("verify", "Run verification suites and report "
                                     "per-check results");
    verify->add_option("--suite", suite, "Run a single suite by name");
    verify->add_option("--seed", opt.seed, "Seed for the randomized instances");
    verify->add_option("--max-group-order", opt.max_group_order,
                       "Largest abelian group order in the instance ranges");
    verify->add_option("--max-set-size", opt.max_set_size,
                       "Largest G-set size in the instance ranges");
    verify->add_option("--max-n", opt.max_n,
                       "Largest modulus in the coefficient-level suites");
    verify->add_option("--output", output,
                       "Write the report to this file instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("kinertia");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return 0;
        } catch (const CLI::ParseError& e) {
            err << e.what() << "\n";
            return 1;
        }
        const std::string verb = app.get_subcommands().at(0)->get_name();
        if (verb == "verify") return run_verify(opt, suite, output, out, err);

        const Json doc = parse_json_text(read_input(input, in));
        if (verb == "decompose") return run_decompose(doc, output, out);
        if (verb == "inertia") return run_inertia(doc, output, out);
        if (verb == "lrr") return run_lrr(doc, output, out);
        if (verb == "lrr-inverse") return run_lrr_inverse(doc, output, out);
        if (verb == "comp-check") return run_comp_check(doc, output, out);
        if (verb == "mackey") return run_mackey(doc, output, out);
        if (verb == "homschemes") return run_homschemes(doc, output, out);
        if (verb == "normal-basis") return run_normal_basis(doc, output, out);
        return run_rational_rr(doc, output, out);
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        Json payload = Json::object();
        payload["error"] = "identity check failed";
        payload["detail"] = e.what();
        out << payload.dump(2) << "\n";
        err << "identity check failed: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        Json payload = Json::object();
        payload["error"] = "computation failed";
        payload["detail"] = e.what();
        out << payload.dump(2) << "\n";
        err << "computation failed: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace kinertia
