#include "qpoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "suite_kit.hpp"

namespace qpoly {

using json = nlohmann::json;

std::string status_name(Status s) {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::BracketResolved: return "bracket-resolved";
        case Status::Discrepancy: return "discrepancy";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

Profile profile_from_name(const std::string& s) {
    if (s == "quick") return Profile::Quick;
    if (s == "full") return Profile::Full;
    throw ParamError("unknown profile '" + s + "' (expected quick or full)");
}

std::string profile_name(Profile p) { return p == Profile::Quick ? "quick" : "full"; }

namespace kit {

void Outcome::fail(json w) {
    ++discrepancies;
    if (status != Status::Discrepancy) witness = std::move(w);
    status = Status::Discrepancy;
}

void Outcome::skip(const std::string& reason) {
    if (status != Status::Discrepancy) status = Status::Skipped;
    detail["skip_reason"] = reason;
}

SuiteResult Outcome::result() const {
    SuiteResult r;
    r.status = status;
    r.detail = detail;
    if (status == Status::Discrepancy) {
        r.witness = witness;
        r.detail["discrepancy_count"] = discrepancies;
    }
    return r;
}

json subspace_json(const Subspace& U) {
    json rows = json::array();
    for (const auto& r : U.rows()) rows.push_back(r);
    return rows;
}

Subspace subspace_from_json(const FieldPtr& F, int n, const json& j) {
    std::vector<std::vector<Elem>> rows;
    for (const auto& r : j) {
        std::vector<Elem> v = r.get<std::vector<Elem>>();
        if (static_cast<int>(v.size()) != n) throw std::invalid_argument("subspace row has wrong length");
        for (Elem x : v)
            if (x >= F->size()) throw std::invalid_argument("subspace entry outside the field");
        rows.push_back(std::move(v));
    }
    return Subspace::span(F, n, rows);
}

json rank_witness(const std::string& claim, const Code& C, const Subspace& U, const json& expected, int computed) {
    json w;
    w["claim"] = claim;
    w["code"] = code_to_json(C);
    w["subspace"] = subspace_json(U);
    w["expected"] = expected;
    w["computed"] = computed;
    return w;
}

void check_and_record_axioms(const QPolymatroid& M, Outcome& out, const std::string& what) {
    AxiomReport rep = check_axioms(M, Rational(M.r));
    json a;
    a["table"] = what;
    a["ok"] = rep.ok;
    a["r_declared"] = M.r;
    a["r_minimal"] = rep.minimal_valid_r.str();
    a["r3_method"] = rep.r3_method;
    if (!rep.ok) {
        a["violations"] = rep.violations;
        a["examples"] = rep.examples;
        json w;
        w["claim"] = "axioms";
        w["table"] = what;
        w["expected"] = 0;
        w["computed"] = rep.violations;
        w["examples"] = rep.examples;
        out.fail(w);
    }
    out.detail["axioms"].push_back(a);
}

void compare_rank_claims(const Code& C, const QPolymatroid& M, const std::function<Claim(int)>& claim, Outcome& out,
                         const std::string& claim_name) {
    const Lattice& L = *M.L;
    const int n = L.n();
    json by_dim = json::array();
    for (int u = 0; u <= n; ++u) {
        auto [lo, hi] = L.dim_range(u);
        std::map<int, std::vector<size_t>> seen;
        for (size_t i = lo; i < hi; ++i) seen[M.rank[i]].push_back(i);
        Claim c = claim(u);
        json e;
        e["u"] = u;
        json counts = json::object();
        for (const auto& [v, idx] : seen) counts[std::to_string(v)] = idx.size();
        e["values"] = counts;
        if (c.type == Claim::Exact) e["printed"] = c.values[0];
        if (c.type == Claim::Bracket) e["printed_bracket"] = c.values;
        bool bad = false;
        for (const auto& [v, idx] : seen) {
            const bool ok = c.type == Claim::None || std::find(c.values.begin(), c.values.end(), v) != c.values.end();
            if (!ok && !bad) {
                bad = true;
                json expected = c.type == Claim::Exact ? json(c.values[0]) : json(c.values);
                out.fail(rank_witness(claim_name, C, L.at(idx.front()), expected, v));
            }
        }
        e["matches_printed"] = !bad;
        if (c.type == Claim::Bracket && !bad) {
            out.bracket();
            std::vector<int> resolved;
            for (const auto& [v, idx] : seen) resolved.push_back(v);
            e["resolved"] = resolved;
            e["constant"] = resolved.size() == 1;
            if (resolved.size() > 1) {
                // Per-subspace values: every subspace not listed takes the most frequent value.
                int common = seen.begin()->first;
                for (const auto& [v, idx] : seen)
                    if (idx.size() > seen[common].size()) common = v;
                json others = json::object();
                for (const auto& [v, idx] : seen) {
                    if (v == common) continue;
                    json list = json::array();
                    for (size_t i : idx) list.push_back(subspace_string(L.at(i)));
                    others[std::to_string(v)] = list;
                }
                e["default_value"] = common;
                e["subspaces_with_other_values"] = others;
            }
        }
        by_dim.push_back(e);
    }
    out.detail["by_dim"] = by_dim;
}

json fam(const std::string& family, int n, int d, int q, int s, int e, int k) {
    return json{{"source", "family"}, {"family", family}, {"n", n}, {"d", d}, {"q", q}, {"s", s}, {"e", e}, {"k", k}};
}

json corner(json family_spec, int to) {
    family_spec["source"] = "corner";
    family_spec["to"] = to;
    return family_spec;
}

json random_spec(const std::string& kind, int n, int q, int dim, std::uint64_t seed) {
    return json{{"source", "random"}, {"kind", kind}, {"n", n}, {"q", q}, {"dim", dim}, {"seed", seed}};
}

json ambient_point(const std::string& kind, int n, int q) { return json{{"kind", kind}, {"n", n}, {"q", q}}; }

Ambient ambient_of(const json& p) {
    Kind k = kind_from_name(p.at("kind").get<std::string>());
    const int q = p.at("q").get<int>();
    if (k == Kind::Full)
        return Ambient::full(p.at("m").get<int>(), p.at("n").get<int>(), q, p.value("ell", 1));
    return Ambient::make(k, p.at("n").get<int>(), q);
}

int binom2(int x) { return x * (x - 1) / 2; }

}  // namespace kit

Code random_code(const Ambient& a, int dim, std::uint64_t seed) {
    if (dim < 0 || dim > a.dim()) throw ParamError("random code dimension out of range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> digit(0, a.q - 1);
    std::vector<FpVec> rows;
    while (static_cast<int>(rows.size()) < dim) {
        FpVec v(a.dim());
        for (auto& x : v) x = static_cast<std::uint8_t>(digit(rng));
        rows.push_back(v);
        if (fp_rank(a.q, rows, a.dim()) != static_cast<int>(rows.size())) rows.pop_back();
    }
    return code_from_coords(a, rows);
}

std::vector<json> admissible_family_points(std::uint64_t max_codewords) {
    std::vector<json> out;
    auto consider = [&](FamilyParams p) {
        try {
            const int dim = expected_dimension(p);
            BigInt size = boost::multiprecision::pow(BigInt(p.q), static_cast<unsigned>(dim));
            if (size > max_codewords) return;
            construct_family(p);  // validates
        } catch (const ParamError&) {
            return;
        }
        out.push_back(kit::fam(p.family, p.n, p.d, p.q, p.s, p.e, p.k));
    };
    for (int q : {2, 3})
        for (const auto& f : family_names()) {
            const bool her = family_kind(f) == Kind::Her;
            for (int n = 2; n <= (her ? 4 : 6); ++n)
                for (int s = 1; s < (her ? 2 * n : n + 1); ++s) {
                    if (std::gcd(s, her ? 2 * n : n) != 1) continue;
                    FamilyParams p;
                    p.family = f;
                    p.q = q;
                    p.n = n;
                    p.s = s;
                    if (f == "sym_LTZ_eta" || f == "sym_tang_zhou") {
                        if (n % 2) continue;
                        p.k = n / 2;
                        consider(p);
                    } else if (f == "her_R" || f == "her_LTZ_gamma") {
                        if (f == "her_R" && s != 1) continue;  // no twist parameter
                        consider(p);
                    } else {
                        for (int d = (f == "alt_DG" ? 2 : 1); d <= n; d += (f == "alt_DG" ? 2 : 1)) {
                            p.d = d;
                            p.e = f == "alt_DG" ? d / 2 : 0;
                            consider(p);
                        }
                    }
                }
        }
    return out;
}

Matrix random_invertible(const FieldPtr& F, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, F->size() - 1);
    while (true) {
        Matrix M(F, n, n);
        for (auto& x : M.a) x = pick(rng);
        if (rank(M) == n) return M;
    }
}

Code code_for_spec(const json& spec) {
    const std::string src = spec.at("source").get<std::string>();
    if (src == "family" || src == "corner") {
        FamilyParams p;
        p.family = spec.at("family").get<std::string>();
        p.n = spec.value("n", 0);
        p.d = spec.value("d", 0);
        p.e = spec.value("e", 0);
        p.k = spec.value("k", 0);
        p.q = spec.value("q", 2);
        p.s = spec.value("s", 1);
        Code C = construct_family(p);
        if (src == "corner") return corner_delete(C, spec.at("to").get<int>());
        return C;
    }
    if (src == "whole" || src == "zero") {
        Ambient a = kit::ambient_of(spec);
        return src == "whole" ? whole_space(a) : zero_code(a);
    }
    if (src == "random") return random_code(kit::ambient_of(spec), spec.at("dim").get<int>(), spec.at("seed").get<std::uint64_t>());
    if (src == "alt_plus") {
        const int n = spec.at("n").get<int>(), q = spec.at("q").get<int>();
        Ambient sym = Ambient::make(Kind::Sym, n, q);
        std::vector<Matrix> mats;
        for (const auto& M : ambient_basis(Ambient::make(Kind::Alt, n, q))) mats.push_back(M);
        Code extra = random_code(sym, spec.at("extra").get<int>(), spec.at("seed").get<std::uint64_t>());
        for (const auto& M : extra.gens) mats.push_back(M);
        return code_from_matrices(sym, mats);
    }
    if (src == "json") return code_from_json(spec.at("code"));
    throw ParamError("unknown code source '" + src + "'");
}

const std::vector<SuiteSpec>& registry() {
    static const std::vector<SuiteSpec> suites = make_suites();
    return suites;
}

const SuiteSpec& find_suite(const std::string& id) {
    for (const auto& s : registry())
        if (s.id == id) return s;
    throw ParamError("unknown suite id '" + id + "'");
}

const std::vector<std::string>& known_ambiguities() {
    static const std::vector<std::string> ids = {"her-prop-d-n-minus-1", "her-prop-R", "thm-her-H", "thm-her-E"};
    return ids;
}

bool is_known_ambiguity(const std::string& id) {
    const auto& k = known_ambiguities();
    return std::find(k.begin(), k.end(), id) != k.end();
}

const std::vector<std::pair<std::string, std::string>>& anchor_map() {
    static const std::vector<std::pair<std::string, std::string>> m = {
        {"Eq. (size-relation)", "eq-size-relation"},
        {"Eq. (alt-bound)", "codes-families"},
        {"Eq. (eq:alternatingcode)", "codes-families"},
        {"Lemma bound-dual-dist", "lem-bound-dual-dist"},
        {"Eq. (eq:sym_bound_d_odd)", "codes-families"},
        {"Eq. (eq:sym_bound_d_even)", "codes-families"},
        {"Lemma dual-d-odd-sym", "lem-dual-d-odd-sym"},
        {"Lemma dual-sym-even", "lem-dual-sym-even"},
        {"Eq. (Schimdtcode)", "codes-families"},
        {"S_{2k,s}(eta) construction", "codes-families"},
        {"Eq. (code-tangzhou)", "codes-families"},
        {"Hermitian bound", "codes-families"},
        {"Eq. (Hermitian R-code)", "codes-families"},
        {"Lemma dual-d-odd-her", "lem-dual-d-odd-her"},
        {"Eq. (eq:hermitiancodeoppositeparity)", "codes-families"},
        {"Eq. (eq:hermitiancodeodd)", "codes-families"},
        {"Hermitian gamma construction", "codes-families"},
        {"Definition (q,r)-polymatroid (R1)-(R3)", "qpoly-axioms"},
        {"Lemma begin1", "lem-begin1"},
        {"Remark remark (row vs column polymatroids)", "lem-begin1"},
        {"Lemma lem:equiv", "lem-equiv"},
        {"Prop. trivial", "prop-trivial"},
        {"Eq. (anticode-dual)", "eq-anticode-dual"},
        {"Theorem on M[X(V)]", "thm-shortened-ambient"},
        {"Eq. (sizeformula)", "eq-sizeformula"},
        {"Prop. polymatroid", "prop-polymatroid"},
        {"Prop. maxrank", "prop-maxrank"},
        {"Eq. (rk-f-restricted)", "prop-polymatroid"},
        {"Eq. (punct.vs.del.)", "eq-punct-vs-del"},
        {"Prop. (puncturing by the first coordinates)", "eq-punct-vs-del"},
        {"Lemma orthogonal", "lem-orthogonal"},
        {"Prop. prop:punctured", "prop-punctured"},
        {"Remark (generalized X-weights)", "rem-x-weights"},
        {"Prop. alternating (a)", "prop-alt-determined-a"},
        {"Prop. alternating (b)", "prop-alt-determined-b"},
        {"Theorem alternating-missing", "thm-alternating-missing"},
        {"Prop. symmetric a)", "prop-sym-determined-a"},
        {"Prop. symmetric b)", "prop-sym-determined-b"},
        {"Theorem S_{n,d,s}, n even, n-d=2", "thm-sym-n-minus-2"},
        {"Theorem S_{n,d,s}, n odd, n-d=4", "thm-sym-n-minus-4"},
        {"Theorem T_{2k,s}(eta)", "thm-tang-zhou"},
        {"Theorem th:punctured", "thm-sym-punctured"},
        {"Prop. dim C*(U)", "prop-dim-dual-shortened"},
        {"Prop. Hermitian d=n-1", "her-prop-d-n-minus-1"},
        {"Prop. R", "her-prop-R"},
        {"Theorem her-code-opposite", "thm-her-H"},
        {"Theorem E_{n,n-2,s}", "thm-her-E"},
        {"Eq. (dualrank)", "eq-dualrank"},
        {"Lemma inequality", "lem-inequality"},
        {"Theorem th:quotient", "thm-quotient"},
        {"Lemma lem:int", "lem-int"},
        {"Theorem (*down-*up)", "thm-dual-quotient"},
        {"Corollary (q even, Alt in C)", "cor-char2"},
        {"Proofs of all statements", "out-of-scope: statements are checked, proofs are not replayed"},
        {"Generalized inverses (proof of Prop. maxrank)", "out-of-scope: the statement is checked by exhaustive search"},
        {"Isometry group classification", "out-of-scope: isometries are applied, not classified"},
        {"Code equivalence in general", "out-of-scope: only invariants are compared"},
        {"Non-additive codes", "out-of-scope: all codes are F_q-linear"},
    };
    return m;
}

SuiteResult run_suite(const std::string& id, const json& params) {
    const SuiteSpec& s = find_suite(id);
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = s.run(params);
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.id = id;
    r.params = params;
    return r;
}

Report run_all(Profile p, const std::function<void(const SuiteResult&)>& on_result) {
    Report rep;
    rep.profile = p;
    for (const auto& s : registry()) {
        for (const auto& pt : s.points(p)) {
            SuiteResult r;
            try {
                r = run_suite(s.id, pt);
            } catch (const std::exception& e) {
                // A registered point must run; anything thrown is a verifier fault.
                r.id = s.id;
                r.params = pt;
                r.status = Status::Discrepancy;
                r.witness = json{{"claim", "exception"}, {"message", e.what()}, {"expected", "no error"}, {"computed", e.what()}};
            }
            if (on_result) on_result(r);
            rep.results.push_back(std::move(r));
        }
    }
    return rep;
}

json result_json(const SuiteResult& r) {
    json j;
    j["id"] = r.id;
    j["params"] = r.params;
    j["status"] = status_name(r.status);
    j["detail"] = r.detail;
    if (r.status == Status::Discrepancy) {
        j["witness"] = r.witness;
        j["known_ambiguity"] = is_known_ambiguity(r.id);
    }
    return j;
}

json report_json(const Report& rep) {
    json j;
    j["profile"] = profile_name(rep.profile);
    j["results"] = json::array();
    std::map<std::string, int> counts;
    for (const auto& r : rep.results) {
        j["results"].push_back(result_json(r));
        ++counts[status_name(r.status)];
    }
    j["summary"] = counts;
    j["known_ambiguities"] = known_ambiguities();
    j["exit_code"] = report_exit_code(rep);
    return j;
}

json timings_json(const Report& rep) {
    json j = json::array();
    for (const auto& r : rep.results) j.push_back(json{{"id", r.id}, {"params", r.params}, {"seconds", r.wall_time}});
    return j;
}

int report_exit_code(const Report& rep) {
    for (const auto& r : rep.results)
        if (r.status == Status::Discrepancy && !is_known_ambiguity(r.id)) return 1;
    return 0;
}

json replay_witness(const json& w) {
    const std::string claim = w.at("claim").get<std::string>();
    auto code = [&](const char* key) { return code_from_json(w.at(key)); };
    auto sub = [&](const Code& C, const char* key) {
        return kit::subspace_from_json(C.amb.Fe, C.amb.m, w.at(key));
    };
    if (claim == "column_rank") {
        Code C = code("code");
        return column_rank(C, sub(C, "subspace"));
    }
    if (claim == "row_rank") {
        Code C = code("code");
        Subspace V = kit::subspace_from_json(C.amb.Fe, C.amb.n, w.at("subspace"));
        return row_rank(C, V);
    }
    if (claim == "column_rank_pair") {
        Code C = code("code"), D = code("code2");
        return json::array({column_rank(C, sub(C, "subspace")), column_rank(D, sub(D, "subspace2"))});
    }
    if (claim == "dim_dual_shortened") {
        Code C = code("code");
        return shorten(dual_star(C), sub(C, "subspace")).dim();
    }
    if (claim == "dim") return code("code").dim();
    if (claim == "min_distance") return min_distance(code("code"));
    if (claim == "dual_min_distance") return min_distance(dual_star(code("code")));
    if (claim == "corner_dim") return corner_delete(code("code"), w.at("to").get<int>()).dim();
    if (claim == "corner_min_distance") return min_distance(corner_delete(code("code"), w.at("to").get<int>()));
    if (claim == "dim_shortened_ambient" || claim == "dim_shortened_dual" || claim == "maxrank_shortened_dual") {
        Ambient a = kit::ambient_of(w.at("ambient"));
        Subspace U = kit::subspace_from_json(a.Fe, a.n, w.at("subspace"));
        if (claim == "dim_shortened_ambient") return static_cast<int>(shortened_space(a, U).size());
        if (claim == "dim_shortened_dual") return static_cast<int>(shortened_dual_space(a, U).size());
        return max_rank(code_from_coords(a, shortened_dual_space(a, U)));
    }
    if (claim == "shorten_rows_vs_columns") {
        Code C = code("code");
        Subspace U = sub(C, "subspace");
        return shorten_rows(C, C.amb.ell == 2 ? sigma_image(U, 1) : U) == shorten(C, U);
    }
    if (claim == "double_dual") {
        Code C = code("code");
        return dual_star(dual_star(C)) == C;
    }
    if (claim == "lem_int") {
        Code C = code("code");
        return as_full(orthogonal_in_ambient(C)) == code_meet(delsarte_dual(C), as_full(whole_space(C.amb)));
    }
    if (claim == "dual_minus_lower") {
        Code C = code("code");
        Subspace U = sub(C, "subspace");
        QPolymatroid Ms = dual_polymatroid(polymatroid_from_code_columns(C));
        return Ms.at(U) - column_rank(orthogonal_in_ambient(C), U);
    }
    if (claim == "four_term_inequality") {
        Code C = code("code"), CD = code_meet(C, code("code2"));
        Subspace U = sub(C, "subspace"), V = sub(C, "subspace2");
        auto [S, X] = sum_and_meet(U, V);
        auto f = [](const Code& K, const Subspace& W) { return shorten(K, W).dim(); };
        return json::array({f(C, U) + f(C, V) + f(CD, X) + f(CD, S), f(C, X) + f(C, S) + f(CD, U) + f(CD, V)});
    }
    if (claim == "quotient_expressions_equal" || claim == "quotient_axioms") {
        Code C = code("code"), D = code("code2");
        QuotientTables qt = quotient_rank_functions(C, D);
        if (claim == "quotient_expressions_equal") return qt.difference == qt.direct;
        QPolymatroid M = polymatroid_from_code_columns(C);
        M.rank = qt.difference;
        return check_axioms(M, Rational(M.r)).violations;
    }
    if (claim == "orthogonal_decomposition") {
        const int n = w.at("n").get<int>(), u = w.at("u").get<int>();
        FieldPtr F = Field::get(w.at("q").get<int>(), w.at("ell").get<int>());
        Subspace V = kit::subspace_from_json(F, u, w.at("subspace"));
        std::vector<int> tail;
        for (int i = u; i < n; ++i) tail.push_back(i);
        Subspace Uperp = Subspace::coordinate(F, n, tail), psiVperp = embed_subspace(complement(V), n, false);
        auto rows = psiVperp.rows();
        for (const auto& r : Uperp.rows()) rows.push_back(r);
        Subspace rhs = Subspace::span(F, n, rows);
        return complement(embed_subspace(V, n, false)) == rhs && rhs.dim == psiVperp.dim + Uperp.dim;
    }
    throw ParamError("witness claim '" + claim + "' has no replay");
}

}  // namespace qpoly
