#pragma once

// JSON reports for the CLI and test drivers.  Every report entry carries the
// identity it certifies as a plain formula string ("anchor"), its status, and
// enough context (mode, sample points, witness) to reproduce the run.  Output
// is deterministic: ordered JSON, fixed entry order, seeded sampling.

#include <string>

#include <json.hpp>

#include "pencil/families.hpp"

namespace pencil {

using Json = nlohmann::ordered_json;

struct SuiteOptions {
    std::string mode = "symbolic";  // "symbolic" or "sampled"
    int points = 5;
    unsigned seed = 0;
};

// Serialization of a constructed representation: blocks, generators, the
// operator R, the central scalar, and the degeneracy locus.
Json rep_to_json(const FamilyRep& rep);

// Run one verification suite ("relations", "pencil", "r_identity", "inverse",
// "ybe_assoc", "ybe_lie", "quiver", "dynkin", or "all") and return its report:
//   { family, suite, mode, results: [ {check, status, anchor, ...}, ... ] }.
// Throws std::invalid_argument for an unknown suite name.
Json run_suite(const FamilyRep& rep, const std::string& suite, const SuiteOptions& opt);

// Worked-example reports: "example1" (the (e,f) pair family), "example2" (the
// diagonal family on C^p), "sect2_example" (left multiplication on Mat_2).
Json run_example(const std::string& name, int p, int dim, unsigned seed);

// True when every entry of report["results"] has status "pass".
bool report_ok(const Json& report);

}  // namespace pencil
