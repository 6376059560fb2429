// Acceptance gates: every checked identity of the library, run at its
// contract ranges with a fixed seed, one line per gate with its runtime
// budget enforced. Exits nonzero if any gate fails.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "kinertia/verify.hpp"

namespace {

struct Gate {
    std::string description;
    std::vector<std::string> suites;
    double budget_seconds = 0;  // 0 = untimed
};

}  // namespace

int main() {
    using kinertia::CheckResult;
    kinertia::VerifyOptions opt;  // seed 0, |G| <= 16, <= 6 points, n <= 24

    const std::vector<Gate> gates = {
        {"localized push-forward trace identity for all r | n <= 24",
         {"trace-lemma"},
         5},
        {"restriction-of-induction matrix on the order-3 symmetric group "
         "against the class-function oracle",
         {"mackey"},
         1},
        {"push-pull scaling identity on every coset space (|G| <= 16, <= 6 "
         "points) plus 200 seeded actions",
         {"comp"},
         60},
        {"twisted-class isomorphism round trips and invariant-dimension "
         "match over the same instance range",
         {"lrr"},
         60},
        {"orbit-averaged push-forward bijective on the invariant subspace "
         "over the same instance range",
         {"rho-star"},
         0},
        {"push-forward covariance for 100 seeded maps per group (|G| <= 12) "
         "including the worked two-point fold",
         {"covariance"},
         60},
        {"rank-function component counts, the partition identity and "
         "automorphism orders against the brute-force oracle",
         {"glhom"},
         30},
        {"group-algebra factor dimensions and idempotents (|A| <= 36), "
         "free-action vanishing, orbit-space bijectivity and point-cover "
         "descent",
         {"decomposition", "k-theory"},
         0},
        {"normal-basis families for N <= 24 with covariant rational "
         "Riemann-Roch and exact bijectivity",
         {"normal-basis", "rational-rr"},
         0},
    };

    bool all_ok = true;
    for (size_t i = 0; i < gates.size(); ++i) {
        const Gate& gate = gates[i];
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckResult> results;
        for (const std::string& suite : gate.suites) {
            std::vector<CheckResult> part = kinertia::run_suite(suite, opt);
            results.insert(results.end(), part.begin(), part.end());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();

        const CheckResult* first_fail = nullptr;
        for (const CheckResult& r : results)
            if (!r.pass && !first_fail) first_fail = &r;
        const bool in_budget =
            gate.budget_seconds == 0 || elapsed < gate.budget_seconds;
        const bool ok = !first_fail && in_budget;
        all_ok = all_ok && ok;

        std::printf("%s  gate %zu: %s [%zu checks, %.2fs", ok ? "PASS" : "FAIL",
                    i + 1, gate.description.c_str(), results.size(), elapsed);
        if (gate.budget_seconds > 0)
            std::printf(" < %.0fs%s", gate.budget_seconds,
                        in_budget ? "" : " EXCEEDED");
        std::printf("]\n");
        if (first_fail)
            std::printf("      first failure: %s @ %s\n        lhs=%s\n"
                        "        rhs=%s\n",
                        first_fail->check.c_str(),
                        first_fail->instance.c_str(),
                        first_fail->lhs.dump().c_str(),
                        first_fail->rhs.dump().c_str());
    }
    std::printf("%s\n", all_ok ? "ALL GATES PASSED" : "GATE FAILURES");
    return all_ok ? 0 : 1;
}
