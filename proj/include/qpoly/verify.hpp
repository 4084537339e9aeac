#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpoly/codes.hpp"
#include "qpoly/qpoly.hpp"

namespace qpoly {

enum class Status { Verified, BracketResolved, Discrepancy, Skipped };
std::string status_name(Status s);

enum class Profile { Quick, Full };
Profile profile_from_name(const std::string& s);
std::string profile_name(Profile p);

struct SuiteResult {
    std::string id;
    nlohmann::json params;
    Status status = Status::Verified;
    nlohmann::json witness;  // null unless status is Discrepancy
    nlohmann::json detail;   // computed values, brackets, notes
    double wall_time = 0;    // seconds; kept out of the canonical report
};

struct SuiteSpec {
    std::string id;
    std::string anchor;  // the statement this suite checks
    // Parameter points in registry order; the full profile is a superset.
    std::function<std::vector<nlohmann::json>(Profile)> points;
    std::function<SuiteResult(const nlohmann::json&)> run;
};

const std::vector<SuiteSpec>& registry();
const SuiteSpec& find_suite(const std::string& id);

// Suite ids whose discrepancies are expected (printed Hermitian rank values).
const std::vector<std::string>& known_ambiguities();
bool is_known_ambiguity(const std::string& id);

// Every numbered statement handled by the verifier: anchor -> suite id, or
// "out-of-scope: reason".
const std::vector<std::pair<std::string, std::string>>& anchor_map();

// Runs one point; parameter errors propagate as ParamError, budget overruns
// as BudgetExceeded. Fills id and wall_time.
SuiteResult run_suite(const std::string& id, const nlohmann::json& params);

struct Report {
    Profile profile = Profile::Quick;
    std::vector<SuiteResult> results;
};
Report run_all(Profile p, const std::function<void(const SuiteResult&)>& on_result = {});

// Canonical JSON (sorted keys, no timings).
nlohmann::json result_json(const SuiteResult& r);
nlohmann::json report_json(const Report& rep);
nlohmann::json timings_json(const Report& rep);
// 0 when every discrepancy belongs to a known-ambiguity suite, else 1.
int report_exit_code(const Report& rep);

// Re-evaluates the comparison stored in a discrepancy witness and returns the
// recomputed value (same JSON shape as witness["computed"]).
nlohmann::json replay_witness(const nlohmann::json& witness);

// Code described by a point's "code" object:
//   {"source":"family", family params...}
//   {"source":"corner", family params..., "to": m}   corner deletion
//   {"source":"whole"|"zero", "kind", "n", "q"}
//   {"source":"random", "kind", "n", "q", "dim", "seed"} (kind may be "Full"
//   with "m" and "ell")
//   {"source":"alt_plus", "n", "q", "extra", "seed"}   Alt + random Sym part
Code code_for_spec(const nlohmann::json& spec);
Code random_code(const Ambient& a, int dim, std::uint64_t seed);

// Every admissible family point with q in {2,3}, n <= 6 (n <= 4 for the
// Hermitian families) and at most max_codewords codewords, as "code" specs.
std::vector<nlohmann::json> admissible_family_points(std::uint64_t max_codewords = 1ULL << 22);
Matrix random_invertible(const FieldPtr& F, int n, std::uint64_t seed);

}  // namespace qpoly
