#include <string>
#include <vector>

#include "doctest.h"
#include "kinertia/json_io.hpp"
#include "kinertia/verify.hpp"

using namespace kinertia;

namespace {

// Runs a parse that must fail and returns the reported field path.
template <typename F>
std::string failing_path(F&& f) {
    try {
        f();
    } catch (const SchemaError& e) {
        return e.path;
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("rationals serialize as p/q strings and re-parse exactly") {
    CHECK(rational_to_json(rat(3, 4)) == Json("3/4"));
    CHECK(rational_to_json(rat(-5)) == Json("-5"));
    CHECK(rational_to_json(rat(0)) == Json("0"));
    CHECK(rational_from_json(Json("22/7"), "$") == rat(22, 7));
    CHECK(rational_from_json(Json("-9/6"), "$") == rat(-3, 2));

    CHECK(failing_path([] { rational_from_json(Json("x"), "$.v"); }) == "$.v");
    CHECK(failing_path([] { rational_from_json(Json("1/0"), "$.v"); }) ==
          "$.v");
    CHECK(failing_path([] { rational_from_json(Json(7), "$.v"); }) == "$.v");

    const std::vector<Rational> v = {rat(1, 2), rat(-3), rat(0)};
    CHECK(rational_vector_from_json(rational_vector_to_json(v), "$") == v);
}

TEST_CASE("groups round-trip and invalid factor lists name the entry") {
    const FinAbGroup A{{2, 4}};
    CHECK(group_from_json(group_to_json(A), "$") == A);
    CHECK(group_from_json(parse_json_text(R"({"cyclic_factors":[]})"), "$") ==
          FinAbGroup{});

    CHECK(failing_path([] {
              group_from_json(parse_json_text(R"({"cyclic_factors":[2,0]})"),
                              "$");
          }) == "$.cyclic_factors[1]");
    CHECK(failing_path([] {
              group_from_json(parse_json_text(R"({"factors":[2]})"), "$");
          }) == "$.factors");
    CHECK(failing_path([] { group_from_json(Json::array(), "$"); }) == "$");
    CHECK(failing_path([] {
              group_from_json(parse_json_text(R"({"cyclic_factors":"2"})"),
                              "$");
          }) == "$.cyclic_factors");
}

TEST_CASE("elements travel as residue arrays checked per coordinate") {
    const FinAbGroup A{{2, 4}};
    for (long e = 0; e < A.size(); ++e)
        CHECK(element_from_json(A, element_to_json(A, e), "$") == e);

    CHECK(failing_path([&] { element_from_json(A, Json{1}, "$.h"); }) ==
          "$.h");
    CHECK(failing_path([&] { element_from_json(A, Json{1, 4}, "$.h"); }) ==
          "$.h[1]");
    CHECK(failing_path([&] { element_from_json(A, Json{-1, 0}, "$.h"); }) ==
          "$.h[0]");
}

TEST_CASE("group algebra elements key coefficients by character tuples") {
    const FinAbGroup A{{2, 4}};
    GroupAlgebraElem a = GroupAlgebraElem::zero(A);
    a.coeffs[0] = rat(1, 2);
    a.coeffs[5] = rat(-7);
    const Json j = group_algebra_to_json(a);
    CHECK(j.at("coeffs").size() == 2);  // zero coefficients are omitted
    CHECK(group_algebra_from_json(A, j, "$") == a);

    // The trivial group uses the empty tuple as its only key.
    const FinAbGroup triv{};
    GroupAlgebraElem unit = GroupAlgebraElem::one(triv);
    const Json tj = group_algebra_to_json(unit);
    CHECK(tj.at("coeffs").contains(""));
    CHECK(group_algebra_from_json(triv, tj, "$") == unit);

    CHECK(failing_path([&] {
              group_algebra_from_json(
                  A, parse_json_text(R"({"coeffs":{"2,0":"1"}})"), "$");
          }) == "$.coeffs.2,0");
    CHECK(failing_path([&] {
              group_algebra_from_json(
                  A, parse_json_text(R"({"coeffs":{"0":"1"}})"), "$");
          }) == "$.coeffs.0");
    CHECK(failing_path([&] {
              group_algebra_from_json(
                  A, parse_json_text(R"({"coeffs":{},"extra":1})"), "$");
          }) == "$.extra");
}

TEST_CASE("G-sets round-trip and the action block is fully validated") {
    const Json j = parse_json_text(
        R"({"group":{"cyclic_factors":[2,2]},"points":4,
            "action":{"0":[1,0,3,2],"1":[2,3,0,1]}})");
    const GSet x = gset_from_json(j, "$");
    CHECK(x.points == 4);
    const GSet back = gset_from_json(gset_to_json(x), "$");
    CHECK(back.group == x.group);
    CHECK(back.points == x.points);
    CHECK(back.action == x.action);

    auto with_action = [](const std::string& action) {
        return parse_json_text(
            R"({"group":{"cyclic_factors":[2,2]},"points":4,"action":)" +
            action + "}");
    };
    CHECK(failing_path([&] {  // missing generator 1
              gset_from_json(with_action(R"({"0":[1,0,3,2]})"), "$");
          }) == "$.action.1");
    CHECK(failing_path([&] {  // no generator with index 2
              gset_from_json(with_action(
                                 R"({"0":[1,0,3,2],"1":[2,3,0,1],"2":[0,1,2,3]})"),
                             "$");
          }) == "$.action.2");
    CHECK(failing_path([&] {  // not a bijection
              gset_from_json(with_action(R"({"0":[1,0,3,2],"1":[0,0,1,2]})"),
                             "$");
          }) == "$.action.1[1]");
    CHECK(failing_path([&] {  // image out of range
              gset_from_json(with_action(R"({"0":[1,0,3,2],"1":[2,3,0,4]})"),
                             "$");
          }) == "$.action.1[3]");
    CHECK(failing_path([&] {  // order-2 generator with an order-3 permutation
              gset_from_json(
                  parse_json_text(
                      R"({"group":{"cyclic_factors":[2]},"points":3,
                          "action":{"0":[1,2,0]}})"),
                  "$");
          }) == "$.action");
}

TEST_CASE("K-theory classes default absent orbits to zero") {
    const GSpace x = GSpace::analyze(gset_from_json(
        parse_json_text(
            R"({"group":{"cyclic_factors":[2]},"points":3,"action":{"0":[0,2,1]}})"),
        "$"));
    REQUIRE(x.orbits.size() == 2);

    const KClass one = k_one(x);
    CHECK(kclass_from_json(x, kclass_to_json(x, one), "$") == one);

    const KClass partial = kclass_from_json(
        x, parse_json_text(R"({"1":{"coeffs":{"0":"2"}}})"), "$");
    CHECK(partial.entries[0].is_zero());
    CHECK_FALSE(partial.entries[1].is_zero());

    CHECK(failing_path([&] {
              kclass_from_json(x, parse_json_text(R"({"7":{"coeffs":{}}})"),
                               "$");
          }) == "$.7");
    CHECK(failing_path([&] {
              kclass_from_json(x, parse_json_text(R"({"01":{"coeffs":{}}})"),
                               "$");
          }) == "$.01");
}

TEST_CASE("twisted classes serialize densely and re-parse sparsely") {
    const GSpace x = GSpace::analyze(gset_from_json(
        parse_json_text(
            R"({"group":{"cyclic_factors":[4]},"points":3,
                "action":{"0":[0,2,1]}})"),
        "$"));
    const CyclotomicInertia ix = cyclotomic_inertia(x);
    const TwistedClass w = lrr_forward(ix, k_one(x));
    CHECK(twisted_from_json(ix, twisted_to_json(ix, w), "$") == w);
    CHECK(twisted_from_json(ix, parse_json_text(R"({"components":[]})"), "$") ==
          twisted_zero(ix));

    auto one_component = [](const std::string& body) {
        return parse_json_text(R"({"components":[)" + body + "]}");
    };
    CHECK(failing_path([&] {  // phi(4) = 2 coefficients required at h of order 4
              twisted_from_json(
                  ix, one_component(R"({"h":[1],"entries":{"0":["1"]}})"), "$");
          }) == "$.components[0].entries.0");
    const GSpace free4 = GSpace::analyze(gset_from_json(
        parse_json_text(
            R"({"group":{"cyclic_factors":[4]},"points":4,
                "action":{"0":[1,2,3,0]}})"),
        "$"));
    const CyclotomicInertia ifree = cyclotomic_inertia(free4);
    CHECK(failing_path([&] {  // every h != 0 acts freely: no such component
              twisted_from_json(
                  ifree, one_component(R"({"h":[2],"entries":{}})"), "$");
          }) == "$.components[0].h");
    CHECK(failing_path([&] {  // orbit 1 moves under h = 1
              twisted_from_json(
                  ix,
                  one_component(R"({"h":[1],"entries":{"1":["0","0"]}})"),
                  "$");
          }) == "$.components[0].entries.1");
    CHECK(failing_path([&] {  // the same component twice
              twisted_from_json(ix,
                                one_component(
                                    R"({"h":[1],"entries":{}},
                                        {"h":[1],"entries":{}})"),
                                "$");
          }) == "$.components[1].h");
}

TEST_CASE("permutation groups and matrices round-trip with hard caps") {
    const PermGroup s3 = PermGroup::from_generators(3, {{1, 0, 2}, {1, 2, 0}});
    const PermGroup back = permgroup_from_json(permgroup_to_json(s3), "$");
    CHECK(back.elements == s3.elements);

    CHECK(failing_path([] {
              permgroup_from_json(
                  parse_json_text(R"({"degree":0,"generators":[]})"), "$");
          }) == "$.degree");
    CHECK(failing_path([] {  // full S_8 exceeds the order cap
              permgroup_from_json(
                  parse_json_text(
                      R"({"degree":8,
                          "generators":[[1,0,2,3,4,5,6,7],
                                        [1,2,3,4,5,6,7,0]]})"),
                  "$");
          }) == "$.generators");

    const RatMat m = RatMat::from_rows({{rat(1, 2), rat(0)}, {rat(-3), rat(7)}});
    CHECK(matrix_from_json(matrix_to_json(m), "$") == m);
    CHECK(failing_path([] {
              matrix_from_json(parse_json_text(R"([["1","2"],["3"]])"), "$");
          }) == "$[1]");
}

TEST_CASE("rank-function components check the rank sum against n") {
    const HomComponent c{3, 5, {2, 0, 3}};
    CHECK(hom_component_from_json(hom_component_to_json(c), "$") == c);
    CHECK(failing_path([] {
              hom_component_from_json(
                  parse_json_text(R"({"r":2,"n":4,"d":[1,2]})"), "$");
          }) == "$.n");
    CHECK(failing_path([] {
              hom_component_from_json(
                  parse_json_text(R"({"r":2,"n":3,"d":[3]})"), "$");
          }) == "$.d");
}

TEST_CASE("normal-basis families list exactly the divisors of N") {
    const NormalBasisFamily fam = build_family(12);
    CHECK(family_from_json(family_to_json(fam), "$") == fam);

    CHECK(failing_path([] {  // 4 divides 12 but is missing
              family_from_json(
                  parse_json_text(
                      R"({"N":12,"x":{"1":["1"],"2":["1"],"3":["0","-1"],
                          "6":["0","1"],"12":["0","0","0","0"]}})"),
                  "$");
          }) == "$.x.4");
    CHECK(failing_path([] {  // 5 does not divide 1
              family_from_json(
                  parse_json_text(R"({"N":1,"x":{"1":["1"],"5":["1"]}})"), "$");
          }) == "$.x.5");
    CHECK(failing_path([] {  // phi(3) = 2 coefficients required
              family_from_json(
                  parse_json_text(R"({"N":3,"x":{"1":["1"],"3":["1"]}})"), "$");
          }) == "$.x.3");
}

TEST_CASE("verification reports sort by check then instance") {
    std::vector<CheckResult> results;
    results.push_back({"zeta", "i=1", true, Json(1), Json(1)});
    results.push_back({"alpha", "i=2", true, Json(2), Json(2)});
    results.push_back({"alpha", "i=1", false, Json(3), Json(4)});
    const Json rep = report_to_json(results);
    REQUIRE(rep.size() == 3);
    CHECK(rep[0].at("check") == "alpha");
    CHECK(rep[0].at("instance") == "i=1");
    CHECK(rep[0].at("pass") == false);
    CHECK(rep[1].at("instance") == "i=2");
    CHECK(rep[2].at("check") == "zeta");
    CHECK_FALSE(all_passed(results));
}
