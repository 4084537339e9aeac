#pragma once
// Helpers shared by the verification suites (not installed).

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpoly/verify.hpp"

namespace qpoly::kit {

using json = nlohmann::json;

// Accumulates the outcome of one suite point.
struct Outcome {
    Status status = Status::Verified;
    json detail = json::object();
    json witness;  // first discrepancy only
    int discrepancies = 0;

    void fail(json w);
    void skip(const std::string& reason);
    void bracket() {
        if (status == Status::Verified) status = Status::BracketResolved;
    }
    SuiteResult result() const;
};

json subspace_json(const Subspace& U);
Subspace subspace_from_json(const FieldPtr& F, int n, const json& j);

// Witness for a failing value comparison on one subspace.
json rank_witness(const std::string& claim, const Code& C, const Subspace& U, const json& expected, int computed);

// Axiom check at the declared scale; records the report under detail["axioms"]
// (appended) and fails the outcome on any violation.
void check_and_record_axioms(const QPolymatroid& M, Outcome& out, const std::string& what);

// A printed value for subspaces of one dimension: exact, a bracket set, or no
// claim.
struct Claim {
    enum Type { None, Exact, Bracket } type = None;
    std::vector<int> values;
    static Claim none() { return {}; }
    static Claim exact(int v) { return {Exact, {v}}; }
    static Claim bracket(std::vector<int> v) { return {Bracket, std::move(v)}; }
};

// Compares a column rank table against per-dimension claims. Records the
// observed values per dimension, resolves brackets (constant value or the
// per-subspace list), and fails on the first mismatch.
void compare_rank_claims(const Code& C, const QPolymatroid& M, const std::function<Claim(int)>& claim, Outcome& out,
                         const std::string& claim_name);

json fam(const std::string& family, int n, int d, int q, int s = 1, int e = 0, int k = 0);
json corner(json family_spec, int to);
json random_spec(const std::string& kind, int n, int q, int dim, std::uint64_t seed);
json ambient_point(const std::string& kind, int n, int q);
Ambient ambient_of(const json& p);

int binom2(int x);

}  // namespace qpoly::kit

namespace qpoly {
std::vector<SuiteSpec> make_suites();
}
