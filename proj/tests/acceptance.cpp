// Acceptance run: one PASS/FAIL line per criterion.
//
// A criterion passes when the verifier ran the check at the required points
// and its output agrees with an independent recomputation here. Where the
// printed statement is contradicted, the discrepancy must carry a witness
// that replays to the same value; the line then says so.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "qpoly/verify.hpp"

using namespace qpoly;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::vector<std::string> problems;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            problems.push_back(what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

json fam(const std::string& family, int n, int d, int q, int k = 0) {
    return json{{"source", "family"}, {"family", family}, {"n", n}, {"d", d}, {"q", q}, {"s", 1}, {"e", 0}, {"k", k}};
}
json at(const json& code) { return json{{"code", code}}; }
json amb(const std::string& kind, int n, int q) { return json{{"kind", kind}, {"n", n}, {"q", q}}; }

std::string show(const json& p) {
    std::string s = p.dump();
    return s.size() > 90 ? s.substr(0, 90) + "..." : s;
}

bool replays(const SuiteResult& r) {
    if (r.status != Status::Discrepancy) return true;
    if (!r.witness.is_object()) return false;
    return replay_witness(r.witness) == r.witness.at("computed");
}

std::vector<SuiteResult> run_points(const std::string& id, const std::vector<json>& points) {
    std::vector<SuiteResult> out;
    for (const auto& p : points) out.push_back(run_suite(id, p));
    return out;
}

std::vector<json> all_points(const std::string& id) { return find_suite(id).points(Profile::Full); }

using ByDim = std::vector<std::map<int, std::uint64_t>>;

// rho(U) = dim C - dim C(U^perp): Y A = 0 exactly when colsp(A) lies in ker Y.
ByDim oracle_by_dim(const Code& C) {
    LatticePtr L = lattice_for(C.amb.Fe, C.amb.m);
    ByDim out(C.amb.m + 1);
    for (size_t i = 0; i < L->size(); ++i) {
        const Subspace& U = L->at(i);
        ++out[U.dim][C.dim() - shorten(C, complement(U)).dim()];
    }
    return out;
}

ByDim reported_by_dim(const json& detail) {
    ByDim out;
    for (const auto& e : detail.at("by_dim")) {
        const int u = e.at("u").get<int>();
        if (static_cast<int>(out.size()) <= u) out.resize(u + 1);
        for (const auto& [k, v] : e.at("values").items()) out[u][std::stoi(k)] = v.get<std::uint64_t>();
    }
    return out;
}

// Checks a rank-theorem result against the oracle and returns the bracket entries.
std::vector<json> check_rank_result(Verdict& v, const SuiteResult& r, const std::string& label) {
    Code C = code_for_spec(r.params.at("code"));
    v.require(reported_by_dim(r.detail) == oracle_by_dim(C), label + ": rank values differ from the kernel-formula oracle");
    v.require(replays(r), label + ": witness does not replay");
    std::vector<json> brackets;
    for (const auto& e : r.detail.at("by_dim"))
        if (e.contains("printed_bracket")) brackets.push_back(e);
    return brackets;
}

bool subset_of(const json& small, const json& big) {
    std::set<int> b;
    for (const auto& x : big) b.insert(x.get<int>());
    for (const auto& x : small)
        if (!b.count(x.get<int>())) return false;
    return true;
}

// All members of the ambient space as coordinate vectors.
std::vector<FpVec> all_coords(const Ambient& a) {
    std::vector<FpVec> out;
    FpVec c(a.dim(), 0);
    while (true) {
        out.push_back(c);
        int i = 0;
        while (i < a.dim() && ++c[i] == a.q) c[i++] = 0;
        if (i == a.dim()) break;
    }
    return out;
}

int dot_mod(const FpVec& x, const std::vector<int>& w, int q) {
    long s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += static_cast<long>(x[i]) * w[i];
    return static_cast<int>(s % q);
}

// ---------------------------------------------------------------- criteria

Verdict criterion1() {
    Verdict v;
    int excluded = 0, brute = 0;
    for (const std::string kind : {"Alt", "Sym", "Her"})
        for (int q : {2, 3})
            for (int n = 1; n <= 4; ++n) {
                json p = amb(kind, n, q);
                SuiteResult t = run_suite("prop-trivial", p);
                v.require(t.status == Status::Verified, "prop-trivial " + show(p));
                SuiteResult d = run_suite("eq-anticode-dual", p);
                Ambient a = Ambient::make(kind_from_name(kind), n, q);
                const bool degenerate = form_is_degenerate(a);
                if (degenerate) {
                    v.require(d.status == Status::Skipped, "eq-anticode-dual Sym q=2 should be skipped");
                    ++excluded;
                } else {
                    v.require(d.status == Status::Verified, "eq-anticode-dual " + show(p));
                }
                LatticePtr L = lattice_for(a.Fe, n);
                // dim X(U)*: rank of the pairing between X(U) and the ambient basis.
                auto B = ambient_basis(a);
                for (size_t i = 0; i < L->size(); ++i) {
                    const Subspace& U = L->at(i);
                    auto xu = shortened_space(a, U);
                    std::vector<FpVec> rows;
                    for (const auto& c : xu) {
                        Matrix A = from_coords(a, c);
                        FpVec r;
                        for (const auto& Bj : B) r.push_back(static_cast<std::uint8_t>(ambient_form(a, A, Bj)));
                        rows.push_back(r);
                    }
                    const int dual_dim = a.dim() - fp_rank(q, rows, a.dim());
                    if (!degenerate)
                        v.require(dual_dim == shortened_dual_dim(a.kind, n, U.dim),
                                  "pairing-rank oracle for dim X(U)* at " + show(p));
                }
                // dim X(U) by counting every member of X with its column space, for ambients up to 3^10 members.
                if (std::pow(q, a.dim()) > 70000) continue;
                ++brute;
                std::vector<std::uint64_t> per(L->size(), 0);
                for (const auto& c : all_coords(a)) ++per[L->index_of(Subspace::from_matrix(from_coords(a, c).transpose()))];
                for (size_t i = 0; i < L->size(); ++i) {
                    std::uint64_t count = 0;
                    for (size_t j = 0; j < L->size(); ++j)
                        if (per[j] && L->meet_index(i, j) == j) count += per[j];
                    const std::uint64_t want = static_cast<std::uint64_t>(std::pow(q, shortened_dim_formula(a.kind, L->at(i).dim)));
                    v.require(count == want, "brute-force |X(U)| at " + show(p));
                }
            }
    v.note("24 ambients, every subspace; dim X(U) also brute-forced on " + std::to_string(brute) + " ambients");
    v.note("Sym at q=2, n >= 2 dual items excluded (" + std::to_string(excluded) + " ambients): the trace form is degenerate");
    return v;
}

Verdict criterion2() {
    Verdict v;
    int excluded = 0, checked = 0;
    for (const std::string kind : {"Alt", "Sym", "Her"})
        for (int q : {2, 3})
            for (int n = 1; n <= (q == 2 ? 4 : 3); ++n) {
                json p = amb(kind, n, q);
                SuiteResult r = run_suite("prop-maxrank", p);
                Ambient a = Ambient::make(kind_from_name(kind), n, q);
                if (form_is_degenerate(a)) {
                    v.require(r.status == Status::Skipped, "prop-maxrank Sym q=2 should be skipped");
                    ++excluded;
                    continue;
                }
                v.require(r.status == Status::Verified, "prop-maxrank " + show(p));
                // Exhaustive: every member B of X, its pairing vector with the basis, scanned by rank.
                auto basis = ambient_basis(a);
                struct Member {
                    int rank;
                    std::vector<int> w;
                };
                std::vector<Member> members;
                for (const auto& c : all_coords(a)) {
                    Matrix M = from_coords(a, c);
                    Member m{rank(M), {}};
                    for (const auto& Bj : basis) m.w.push_back(ambient_form(a, Bj, M));
                    members.push_back(std::move(m));
                }
                std::stable_sort(members.begin(), members.end(), [](const Member& x, const Member& y) { return x.rank > y.rank; });
                LatticePtr L = lattice_for(a.Fe, n);
                for (size_t i = 0; i < L->size(); ++i) {
                    const Subspace& U = L->at(i);
                    auto xu = shortened_space(a, U);
                    int best = 0;
                    for (const auto& m : members) {
                        bool orth = true;
                        for (const auto& c : xu)
                            if (dot_mod(c, m.w, q)) {
                                orth = false;
                                break;
                            }
                        if (orth) {
                            best = m.rank;
                            break;
                        }
                    }
                    v.require(best == maxrank_shortened_dual(a.kind, n, U.dim), "exhaustive max rank of X(U)* at " + show(p));
                    ++checked;
                }
            }
    v.note(std::to_string(checked) + " subspaces checked by exhaustive search");
    v.note("Sym at q=2, n >= 2 excluded (" + std::to_string(excluded) + " ambients): X(U)* is not defined by the size relation there");
    return v;
}

Verdict criterion3() {
    Verdict v;
    std::set<std::string> families;
    int n = 0;
    for (const auto& spec : admissible_family_points()) {
        SuiteResult r = run_suite("codes-families", at(spec));
        v.require(r.status == Status::Verified, "codes-families " + show(spec));
        families.insert(spec.at("family").get<std::string>());
        ++n;
    }
    v.require(families.size() == 8, "not every family has an admissible point");
    v.note(std::to_string(n) + " admissible points over " + std::to_string(families.size()) + " families");
    return v;
}

Verdict criterion4() {
    Verdict v;
    int tables = 0;
    for (const std::string kind : {"Alt", "Sym", "Her"})
        for (int n = 1; n <= (kind == "Her" ? 3 : 4); ++n) {
            json p = amb(kind, n, 2);
            SuiteResult r = run_suite("thm-shortened-ambient", p);
            v.require(r.status == Status::Verified, "thm-shortened-ambient " + show(p));
            Ambient a = Ambient::make(kind_from_name(kind), n, 2);
            LatticePtr L = lattice_for(a.Fe, n);
            for (size_t i = 0; i < L->size(); ++i) {
                const Subspace& V = L->at(i);
                Code X = code_from_coords(a, shortened_space(a, V));
                v.require(polymatroid_of_shortened_ambient(a.kind, n, 2, V).rank == polymatroid_from_code_columns(X).rank,
                          "closed form differs at " + show(p));
                ++tables;
            }
        }
    v.note(std::to_string(tables) + " tables M[X(V)] compared, every V");
    return v;
}

Verdict criterion5(const Report& full) {
    Verdict v;
    int tables = 0, her = 0, quotient_failures = 0;
    for (const auto& r : full.results) {
        if (r.id == "thm-quotient") {
            quotient_failures += r.detail.value("axiom_failures", 0);
            continue;
        }
        if (!r.detail.contains("axioms")) continue;
        const bool is_her = r.params.contains("code") && code_for_spec(r.params.at("code")).amb.kind == Kind::Her;
        for (const auto& e : r.detail.at("axioms")) {
            ++tables;
            v.require(e.at("ok").get<bool>(), r.id + " " + show(r.params) + " " + e.at("table").get<std::string>());
            if (is_her) {
                ++her;
                v.require(e.contains("r_minimal"), "Hermitian table without minimal_valid_r");
            }
        }
    }
    for (const std::string id : {"qpoly-axioms", "eq-dualrank"})
        for (const auto& r : full.results)
            if (r.id == id) v.require(r.status == Status::Verified, id + " " + show(r.params));
    v.note(std::to_string(tables) + " tables from the full profile pass R1-R3 at the declared scale (" + std::to_string(her) +
           " Hermitian, each with minimal_valid_r)");
    v.note("quotient rank functions are reported under criterion 9 (" + std::to_string(quotient_failures) +
           " of 50 fail R3)");
    return v;
}

Verdict criterion6() {
    Verdict v;
    for (int q : {2, 3}) {
        SuiteResult r = run_suite("thm-alternating-missing", at(fam("alt_DG", 5, 2, q)));
        const std::string label = "q=" + std::to_string(q);
        v.require(r.status == Status::BracketResolved || r.status == Status::Verified, label + " status " + status_name(r.status));
        check_rank_result(v, r, label);
        ByDim got = reported_by_dim(r.detail);
        const std::vector<int> fixed = {0, 4, 7, -1, 10, 10};
        for (int u = 0; u <= 5; ++u)
            if (fixed[u] >= 0) v.require(got[u].size() == 1 && got[u].begin()->first == fixed[u], label + " value at u=" + std::to_string(u));
        const json& b = r.detail.at("by_dim").at(3);
        v.require(subset_of(b.at("resolved"), json::array({9, 10})), label + " x outside {9,10}");
        const bool constant = b.at("constant").get<bool>();
        v.require(constant || b.contains("subspaces_with_other_values"), label + " non-constant x without a value list");
        v.note(label + ": x = " + b.at("resolved").dump() + (constant ? " on every 3-space" : " (per-subspace list emitted)"));
    }
    return v;
}

Verdict criterion7() {
    Verdict v;
    for (int q : {2, 3}) {
        SuiteResult r = run_suite("thm-sym-n-minus-2", at(fam("sym_schmidt", 4, 2, q)));
        const std::string label = "S_{4,2,1} q=" + std::to_string(q);
        v.require(r.status == Status::BracketResolved || r.status == Status::Verified, label + " status " + status_name(r.status));
        for (const auto& b : check_rank_result(v, r, label)) {
            v.require(subset_of(b.at("resolved"), b.at("printed_bracket")), label + " bracket");
            v.note(label + ": u=2 resolves to " + b.at("resolved").dump());
        }
    }
    {
        SuiteResult r = run_suite("thm-sym-n-minus-4", at(fam("sym_schmidt", 7, 3, 2)));
        v.require(r.status == Status::BracketResolved || r.status == Status::Verified, "S_{7,3,1} status");
        std::uint64_t subspaces = 0;
        for (const auto& m : reported_by_dim(r.detail))
            for (const auto& [rk, c] : m) subspaces += c;
        v.require(subspaces == lattice_for(Field::get(2, 1), 7)->size(), "S_{7,3,1} lattice not exhaustive");
        for (const auto& b : check_rank_result(v, r, "S_{7,3,1}")) {
            v.require(subset_of(b.at("resolved"), b.at("printed_bracket")), "S_{7,3,1} bracket");
            v.require(b.at("constant").get<bool>() || b.contains("subspaces_with_other_values"), "S_{7,3,1} value list");
            v.note("S_{7,3,1} (full F_2^7 lattice, " + std::to_string(subspaces) + " subspaces): u=4 takes " +
                   b.at("resolved").dump() + (b.at("constant").get<bool>() ? "" : ", per-subspace list emitted"));
        }
    }
    {
        SuiteResult r = run_suite("thm-tang-zhou", at(fam("sym_tang_zhou", 6, 4, 3, 3)));
        for (const auto& b : check_rank_result(v, r, "T_{6,1}(eta)")) {
            v.require(subset_of(b.at("resolved"), b.at("printed_bracket")), "T_6 bracket");
            v.note("T_{6,1}(eta) q=3: bracket {12,11,10} resolves to " + b.at("resolved").dump());
        }
        if (r.status == Status::Discrepancy)
            v.note("stated claim contradicted: T_{6,1}(eta) has rho = " + r.witness.at("computed").dump() +
                   " on 1-spaces, printed " + r.witness.at("expected").dump() + " (witness replays)");
    }
    return v;
}

Verdict criterion8() {
    Verdict v;
    const std::vector<std::pair<std::string, json>> items = {
        {"her-prop-d-n-minus-1", fam("her_H", 3, 2, 2)},
        {"her-prop-R", fam("her_R", 3, 2, 2)},
        {"thm-her-H", fam("her_H", 4, 1, 2)},
        {"thm-her-E", fam("her_E", 5, 3, 2)},
    };
    int discrepancies = 0, brackets = 0;
    for (const auto& [id, spec] : items) {
        SuiteResult r = run_suite(id, at(spec));
        v.require(is_known_ambiguity(id), id + " is not on the known-ambiguity list");
        if (r.status == Status::Discrepancy) ++discrepancies;
        for (const auto& b : check_rank_result(v, r, id)) {
            ++brackets;
            v.require(subset_of(b.at("resolved"), b.at("printed_bracket")), id + " bracket inconsistent");
        }
        v.note(id + ": " + status_name(r.status));
    }
    for (const auto& r : run_points("lem-begin1", all_points("lem-begin1")))
        v.require(r.status == Status::Verified, "lem-begin1 " + show(r.params));
    v.note(std::to_string(discrepancies) + " printed-value discrepancies recorded under known ambiguities, witnesses replay");
    v.note(std::to_string(brackets) + " bracket sets consistent; sigma relation exact at every lem-begin1 point");
    return v;
}

Verdict criterion9() {
    Verdict v;
    for (const auto& r : run_points("eq-size-relation", all_points("eq-size-relation"))) {
        const bool sym2 = code_for_spec(r.params.at("code")).amb.kind == Kind::Sym && r.params.at("code").at("q") == 2;
        v.require(r.status == (sym2 ? Status::Skipped : Status::Verified), "eq-size-relation " + show(r.params));
    }
    int lem_int_even = 0;
    for (const auto& r : run_points("lem-int", all_points("lem-int"))) {
        Code C = code_for_spec(r.params.at("code"));
        if (C.amb.q % 2 == 1) v.require(r.status == Status::Verified, "lem-int " + show(r.params));
        if (C.amb.q % 2 == 0 && C.amb.kind == Kind::Sym) {
            v.require(r.detail.contains("equal"), "lem-int q even Sym outcome not recorded");
            ++lem_int_even;
        }
    }

    // Four-term inequality: F_2^{2x1}, U = <(1,1)>, V = <(0,1)>, C = whole space, C meet D = <(1,0)>.
    Ambient a = Ambient::full(2, 1, 2);
    FieldPtr F = a.Fe;
    Code C = whole_space(a);
    Matrix e1(F, 2, 1);
    e1.at(0, 0) = 1;
    Code CD = code_from_matrices(a, {e1});
    Subspace U = Subspace::span(F, 2, {{1, 1}}), V = Subspace::span(F, 2, {{0, 1}});
    auto [S, M] = sum_and_meet(U, V);
    auto f = [&](const Subspace& W) { return shorten(C, W).dim(); };
    auto g = [&](const Subspace& W) { return shorten(CD, W).dim(); };
    const int lhs = f(U) + f(V) + g(M) + g(S), rhs = f(M) + f(S) + g(U) + g(V);
    v.require(lhs == 3 && rhs == 2, "hand counterexample not reproduced");
    int ineq_failures = 0;
    for (const auto& r : run_points("lem-inequality", all_points("lem-inequality"))) {
        v.require(r.status == Status::Discrepancy && replays(r), "lem-inequality witness " + show(r.params));
        ineq_failures += r.detail.value("discrepancy_count", 0);
    }

    int quotient_equal = 0, quotient_pairs = 0, quotient_r3 = 0;
    for (const auto& r : run_points("thm-quotient", all_points("thm-quotient"))) {
        quotient_equal += r.detail.at("pairs_equal").get<int>();
        quotient_pairs += r.detail.at("pairs").get<int>();
        quotient_r3 += r.detail.at("axiom_failures").get<int>();
        v.require(replays(r), "thm-quotient witness " + show(r.params));
    }
    v.require(quotient_equal == quotient_pairs, "quotient expressions differ");
    for (const auto& r : run_points("thm-dual-quotient", all_points("thm-dual-quotient")))
        v.require(r.status == Status::Verified || r.status == Status::Skipped, "thm-dual-quotient " + show(r.params));
    for (const auto& r : run_points("cor-char2", all_points("cor-char2")))
        v.require(r.status == Status::Verified, "cor-char2 " + show(r.params));

    v.note("size relation, lem-int (odd q; " + std::to_string(lem_int_even) + " q-even Sym outcomes recorded), (*down-*up), char-2 corollary exact");
    v.note("quotient expressions equal on " + std::to_string(quotient_equal) + "/" + std::to_string(quotient_pairs) + " pairs");
    v.note("stated claim contradicted: four-term inequality fails (hand counterexample LHS 3 > RHS 2; " +
           std::to_string(ineq_failures) + " failing subspace pairs found, witnesses replay); quotient rank fails R3 on " +
           std::to_string(quotient_r3) + "/" + std::to_string(quotient_pairs) + " pairs");
    return v;
}

Verdict criterion10() {
    Verdict v;
    for (const std::string id : {"prop-punctured", "eq-punct-vs-del"})
        for (const auto& r : run_points(id, all_points(id))) v.require(r.status == Status::Verified, id + " " + show(r.params));

    int maximal = 0;
    for (const auto& r : run_points("thm-sym-punctured", all_points("thm-sym-punctured"))) {
        Code C = code_for_spec(r.params.at("code"));
        const int n = C.amb.n, d = min_distance(C);
        Code K = corner_delete(C, n - 1);
        const bool is_max = Rational(K.dim()) == bound_value("sym", n - 1, std::max(1, d - 2), C.amb.q) && min_distance(K) >= d - 2;
        if (r.params.at("reading") == "printed") {
            v.require(r.status == Status::Discrepancy && replays(r) && !is_max, "printed-reading point " + show(r.params));
            v.note("stated claim contradicted: the printed parity condition fails at S_{5,5,1}^[4], q=3 (corner dim " +
                   std::to_string(K.dim()) + ", not maximal)");
        } else {
            v.require(r.status == Status::Verified && is_max, "corner deletion " + show(r.params));
            ++maximal;
        }
    }
    v.note("S_{5,4,1} does not exist (Schmidt codes need n-d even); " + std::to_string(maximal) +
           " substitutes (S_{5,3,1} q=2,3 and S_{6,4,1}) puncture to maximal codes");

    std::set<bool> branches;
    int contradicted = 0;
    for (const auto& r : run_points("prop-dim-dual-shortened", all_points("prop-dim-dual-shortened"))) {
        if (r.status == Status::Skipped) continue;
        Code C = code_for_spec(r.params.at("code"));
        const int n = C.amb.n;
        std::vector<int> idx;
        for (int i = 0; i + 1 < n; ++i) idx.push_back(i);
        const int oracle = shorten(dual_star(C), Subspace::coordinate(C.amb.Fe, n, idx)).dim();
        v.require(r.detail.at("computed").get<int>() == oracle, "dim C*(U) differs from the direct dual at " + show(r.params));
        v.require(replays(r), "prop-dim-dual-shortened witness");
        branches.insert(r.detail.at("diag_in_C").get<bool>());
        if (r.status == Status::Discrepancy) ++contradicted;
    }
    v.require(branches.size() == 2, "both branches of dim C*(U) not exercised");
    if (contradicted)
        v.note("stated claim contradicted: dim C*(U) differs from the printed value at " + std::to_string(contradicted) +
               " q=3 points covering both branches (direct dual agrees with the computed value)");
    return v;
}

Verdict criterion11(const std::string& cli) {
    Verdict v;
    const std::string a = "acceptance_quick_1.json", b = "acceptance_quick_2.json";
    auto run = [&](const std::string& out) {
        const std::string cmd = cli + " verify-all --profile quick --out " + out + " 2>/dev/null";
        return std::system(cmd.c_str());
    };
    auto t0 = Clock::now();
    const int rc1 = run(a);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const int rc2 = run(b);
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string sa = slurp(a), sb = slurp(b);
    v.require(!sa.empty(), "no report written");
    v.require(sa == sb, "reports differ between runs");
    v.require(rc1 == rc2, "exit codes differ between runs");
    v.require(secs < 300, "quick profile took longer than 5 minutes");
    std::remove(a.c_str());
    std::remove(b.c_str());
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << "quick profile " << secs << " s, " << sa.size() << " bytes, identical; exit code " << WEXITSTATUS(rc1);
    v.note(os.str());
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : QPOLY_CLI_PATH;
    struct Item {
        int id;
        double limit;
        std::function<Verdict()> fn;
    };
    Report full;
    std::vector<Item> items = {
        {1, 30, criterion1},
        {2, 120, criterion2},
        {3, 300, criterion3},
        {4, 120, criterion4},
        {5, 300,
         [&] {
             full = run_all(Profile::Full);
             return criterion5(full);
         }},
        {6, 600, criterion6},
        {7, 600, criterion7},
        {8, 300, criterion8},
        {9, 300, criterion9},
        {10, 180, criterion10},
        {11, 600, [&] { return criterion11(cli); }},
    };
    bool all = true;
    for (const auto& it : items) {
        Verdict v;
        auto t0 = Clock::now();
        try {
            v = it.fn();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        v.require(secs < it.limit, "time limit exceeded");
        all = all && v.pass;
        std::ostringstream line;
        line.precision(1);
        line << std::fixed << "criterion " << it.id << ": " << (v.pass ? "PASS" : "FAIL") << " (" << secs << " s)";
        std::cout << line.str() << '\n';
        for (const auto& n : v.notes) std::cout << "    " << n << '\n';
        for (size_t i = 0; i < v.problems.size() && i < 10; ++i) std::cout << "    problem: " << v.problems[i] << '\n';
        std::cout.flush();
    }
    return all ? 0 : 1;
}
