#pragma once

#include <string>
#include <vector>

#include "kinertia/json_io.hpp"

namespace kinertia {

// One verification outcome: a named check on a named instance with the two
// compared values. On failure the instance string is the reproduction
// recipe (group, catalog index or random-draw index under the run's seed)
// and lhs/rhs are the counterexample payload.
struct CheckResult {
    std::string check;
    std::string instance;
    bool pass = true;
    Json lhs;
    Json rhs;
};

struct VerifyOptions {
    long max_group_order = 16;  // abelian instance suites
    long max_set_size = 6;      // points per G-set instance
    unsigned long long seed = 0;
    long max_n = 24;  // modulus bound for the coefficient-level suites
};

// Available suite names, in canonical run order.
const std::vector<std::string>& verify_suite_names();

// Runs one suite with fresh seeded randomness (so a suite produces the same
// results whether run alone or as part of the full set). Unknown names
// throw std::invalid_argument.
std::vector<CheckResult> run_suite(const std::string& name,
                                   const VerifyOptions& opt);

// Every suite, concatenated.
std::vector<CheckResult> run_all_suites(const VerifyOptions& opt);

// Sorted machine-readable report: an array of
// {"check", "instance", "pass", "lhs", "rhs"} ordered by (check, instance).
Json report_to_json(std::vector<CheckResult> results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace kinertia
