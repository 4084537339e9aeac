#include <algorithm>
#include <climits>
#include <random>

#include "suite_kit.hpp"

namespace qpoly {
namespace {

using namespace kit;
using Points = std::vector<json>;
using Runner = std::function<SuiteResult(const json&)>;

SuiteSpec make(std::string id, std::string anchor, Points quick, Points full_extra, Runner run) {
    SuiteSpec s;
    s.id = std::move(id);
    s.anchor = std::move(anchor);
    s.points = [quick, full_extra](Profile p) {
        Points out = quick;
        if (p == Profile::Full) out.insert(out.end(), full_extra.begin(), full_extra.end());
        return out;
    };
    s.run = std::move(run);
    return s;
}

json cpt(json code, json extra = json::object()) {
    extra["code"] = std::move(code);
    return extra;
}

json full_spec(int m, int n, int q, int dim, std::uint64_t seed) {
    json j = random_spec("Full", n, q, dim, seed);
    j["m"] = m;
    return j;
}

Code code_of(const json& p) { return code_for_spec(p.at("code")); }

const Lattice& lattice_of(const Ambient& a) { return *lattice_for(a.Fe, a.n); }

json ambient_json(const Ambient& a) {
    json j = ambient_point(kind_name(a.kind), a.n, a.q);
    if (a.kind == Kind::Full) {
        j["m"] = a.m;
        j["ell"] = a.ell;
    }
    return j;
}

json amb_witness(const std::string& claim, const Ambient& a, const Subspace& U, const json& expected, const json& computed) {
    return json{{"claim", claim}, {"ambient", ambient_json(a)}, {"subspace", subspace_json(U)}, {"expected", expected},
                {"computed", computed}};
}

int printed_shortened_dim(Kind k, int u) {
    switch (k) {
        case Kind::Alt: return binom2(u);
        case Kind::Sym: return binom2(u + 1);
        default: return u * u;
    }
}

int printed_dual_dim(Kind k, int n, int u) {
    switch (k) {
        case Kind::Alt: return (n - u) * (n + u - 1) / 2;
        case Kind::Sym: return (n - u) * (n + u + 1) / 2;
        default: return (n - u) * (n + u);
    }
}

int printed_maxrank_dual(const Ambient& a, int u) {
    if (u <= a.n / 2) return a.maxrank();
    return 2 * (a.n - u);
}

// Aggregated axiom check for suites that build many tables.
struct AxiomTally {
    int tables = 0;
    int failed = 0;
    Rational worst_r = 0;
    void add(const QPolymatroid& M, Outcome& out, const std::string& what) {
        AxiomReport rep = check_axioms(M, Rational(M.r));
        ++tables;
        if (rep.minimal_valid_r > worst_r) worst_r = rep.minimal_valid_r;
        if (!rep.ok) {
            ++failed;
            out.fail(json{{"claim", "axioms"}, {"table", what}, {"expected", 0}, {"computed", rep.violations},
                          {"examples", rep.examples}});
        }
    }
    void record(Outcome& out) const {
        out.detail["axiom_tables"] = tables;
        out.detail["axiom_failures"] = failed;
        out.detail["axiom_r_minimal_max"] = worst_r.str();
    }
};

std::string code_label(const Code& C) {
    if (!C.params.family.empty())
        return C.params.family + " n=" + std::to_string(C.params.n) + " d=" + std::to_string(C.params.d);
    return C.amb.name();
}

// ---------------------------------------------------------------- ambient

SuiteResult run_prop_trivial(const json& p) {
    Outcome out;
    Ambient a = ambient_of(p);
    const Lattice& L = lattice_of(a);
    for (size_t i = 0; i < L.size(); ++i) {
        const Subspace& U = L.at(i);
        const int expected = printed_shortened_dim(a.kind, U.dim);
        const int got = static_cast<int>(shortened_space(a, U).size());
        if (got != expected) out.fail(amb_witness("dim_shortened_ambient", a, U, expected, got));
    }
    out.detail["subspaces"] = L.size();
    return out.result();
}

SuiteResult run_lem_equiv(const json& p) {
    Outcome out;
    Ambient a = ambient_of(p);
    const Lattice& L = lattice_of(a);
    for (size_t i = 0; i < L.size(); ++i) {
        const Subspace& U = L.at(i);
        Code direct = code_from_coords(a, shortened_space(a, U));
        Code conj = code_from_coords(a, shortened_space_by_conjugation(a, U));
        if (direct != conj) out.fail(amb_witness("shortened_by_conjugation", a, U, true, false));
    }
    out.detail["subspaces"] = L.size();
    return out.result();
}

SuiteResult run_anticode_dual(const json& p) {
    Outcome out;
    Ambient a = ambient_of(p);
    const Lattice& L = lattice_of(a);
    const bool degenerate = form_is_degenerate(a);
    int mismatches = 0;
    for (size_t i = 0; i < L.size(); ++i) {
        const Subspace& U = L.at(i);
        const int expected = printed_dual_dim(a.kind, a.n, U.dim);
        const int got = static_cast<int>(shortened_dual_space(a, U).size());
        if (got == expected) continue;
        ++mismatches;
        if (!degenerate) out.fail(amb_witness("dim_shortened_dual", a, U, expected, got));
    }
    out.detail["subspaces"] = L.size();
    if (degenerate) {
        out.detail["mismatches_with_degenerate_form"] = mismatches;
        out.skip("trace form is degenerate on " + a.name() + "; the dual of X(U) is not defined by the size relation");
    }
    return out.result();
}

SuiteResult run_prop_maxrank(const json& p) {
    Outcome out;
    Ambient a = ambient_of(p);
    if (form_is_degenerate(a)) {
        out.skip("trace form is degenerate on " + a.name());
        return out.result();
    }
    const Lattice& L = lattice_of(a);
    json per_dim = json::array();
    std::vector<std::set<int>> seen(a.n + 1);
    for (size_t i = 0; i < L.size(); ++i) {
        const Subspace& U = L.at(i);
        const int expected = printed_maxrank_dual(a, U.dim);
        const int got = max_rank(code_from_coords(a, shortened_dual_space(a, U)));
        seen[U.dim].insert(got);
        if (got != expected) out.fail(amb_witness("maxrank_shortened_dual", a, U, expected, got));
        if (maxrank_shortened_dual(a.kind, a.n, U.dim) != got)
            out.fail(amb_witness("maxrank_shortened_dual", a, U, maxrank_shortened_dual(a.kind, a.n, U.dim), got));
    }
    for (int u = 0; u <= a.n; ++u) per_dim.push_back(json{{"u", u}, {"maxrank", seen[u]}});
    out.detail["by_dim"] = per_dim;
    return out.result();
}

SuiteResult run_shortened_ambient(const json& p) {
    Outcome out;
    Ambient a = ambient_of(p);
    const Lattice& L = lattice_of(a);
    AxiomTally tally;
    for (size_t v = 0; v < L.size(); ++v) {
        const Subspace& V = L.at(v);
        QPolymatroid closed = polymatroid_of_shortened_ambient(a.kind, a.n, a.q, V);
        Code XV = code_from_coords(a, shortened_space(a, V));
        QPolymatroid M = polymatroid_from_code_columns(XV);
        for (size_t i = 0; i < L.size(); ++i)
            if (closed.rank[i] != M.rank[i]) {
                out.fail(rank_witness("column_rank", XV, L.at(i), closed.rank[i], M.rank[i]));
                break;
            }
        tally.add(M, out, "X(" + subspace_string(V) + ")");
    }
    tally.record(out);
    out.detail["tables"] = L.size();
    return out.result();
}

// ---------------------------------------------------------------- codes

SuiteResult run_begin1(const json& p) {
    Outcome out;
    Code C = code_of(p);
    const Lattice& L = lattice_of(C.amb);
    QPolymatroid Mc = polymatroid_from_code_columns(C), Mr = polymatroid_from_code_rows(C);
    const bool twisted = C.amb.ell == 2;
    for (size_t i = 0; i < L.size(); ++i) {
        const Subspace& U = L.at(i);
        Subspace Us = twisted ? sigma_image(U, 1) : U;
        if (shorten_rows(C, Us) != shorten(C, U))
            out.fail(json{{"claim", "shorten_rows_vs_columns"}, {"code", code_to_json(C)}, {"subspace", subspace_json(U)},
                          {"expected", true}, {"computed", false}});
        if (Mr.at(Us) != Mc.rank[i]) out.fail(rank_witness("row_rank", C, Us, Mc.rank[i], Mr.at(Us)));
    }
    check_and_record_axioms(Mc, out, "columns");
    check_and_record_axioms(Mr, out, "rows");
    out.detail["subspaces"] = L.size();
    out.detail["sigma"] = twisted ? "x -> x^q" : "identity";
    return out.result();
}

SuiteResult run_size_relation(const json& p) {
    Outcome out;
    Code C = code_of(p);
    const Ambient& a = C.amb;
    if (form_is_degenerate(a)) {
        Code raw = orthogonal_in_ambient(C);
        out.detail["dim_C"] = C.dim();
        out.detail["dim_orthogonal"] = raw.dim();
        out.detail["dim_X"] = a.dim();
        out.skip("trace form is degenerate on " + a.name());
        return out.result();
    }
    Code D = dual_star(C);
    out.detail["dim_C"] = C.dim();
    out.detail["dim_dual"] = D.dim();
    if (C.dim() + D.dim() != a.dim())
        out.fail(json{{"claim", "dim"}, {"code", code_to_json(D)}, {"expected", a.dim() - C.dim()}, {"computed", D.dim()}});
    if (dual_star(D) != C)
        out.fail(json{{"claim", "double_dual"}, {"code", code_to_json(C)}, {"expected", true}, {"computed", false}});
    return out.result();
}

SuiteResult run_sizeformula(const json& p) {
    Outcome out;
    Code C = code_of(p);
    const Ambient& a = C.amb;
    const Lattice& L = lattice_of(a);
    const bool degenerate = form_is_degenerate(a);
    Code D = degenerate ? Code{} : dual_star(C);
    for (size_t i = 0; i < L.size(); ++i) {
        const Subspace& U = L.at(i);
        const int cu = shorten(C, U).dim();
        Code XU = code_from_coords(a, shortened_space(a, U));
        const int first = XU.dim() + C.dim() - code_sum(C, XU).dim();
        if (cu != first)
            out.fail(json{{"claim", "dim_shortened_code"}, {"code", code_to_json(C)}, {"subspace", subspace_json(U)},
                          {"expected", first}, {"computed", cu}});
        if (degenerate) continue;
        Code XUs = code_from_coords(a, shortened_dual_space(a, U));
        const int second = XU.dim() + code_meet(D, XUs).dim() - D.dim();
        if (cu != second)
            out.fail(json{{"claim", "dim_shortened_code"}, {"code", code_to_json(C)}, {"subspace", subspace_json(U)},
                          {"expected", second}, {"computed", cu}});
    }
    out.detail["subspaces"] = L.size();
    if (degenerate) out.detail["dual_expression"] = "not checked: trace form is degenerate on " + a.name();
    return out.result();
}

SuiteResult run_prop_polymatroid(const json& p) {
    Outcome out;
    Code C = code_of(p);
    const Ambient& a = C.amb;
    if (C.dim() == 0) throw ParamError("the zero code has no minimum distance");
    const int n = a.n;
    const int d = min_distance(C);
    QPolymatroid M = polymatroid_from_code_columns(C);
    const Lattice& L = *M.L;
    const bool degenerate = form_is_degenerate(a);
    int dstar = INT_MAX;
    if (!degenerate) {
        Code D = dual_star(C);
        if (D.dim() > 0) dstar = min_distance(D);
    }
    int top = 0, via_maxrank = 0, via_rkf = 0;
    for (size_t i = 0; i < L.size(); ++i) {
        const Subspace& U = L.at(i);
        const int u = U.dim, rho = M.rank[i];
        if (u > n - d) {
            ++top;
            if (rho != C.dim()) out.fail(rank_witness("column_rank", C, U, C.dim(), rho));
        }
        if (degenerate) continue;
        const int expected = printed_dual_dim(a.kind, n, n - u);
        if (printed_maxrank_dual(a, n - u) < dstar) {
            ++via_maxrank;
            if (rho != expected) out.fail(rank_witness("column_rank", C, U, expected, rho));
        }
        if (std::min(2 * u, a.maxrank()) < dstar) {
            ++via_rkf;
            if (rho != expected) out.fail(rank_witness("column_rank", C, U, expected, rho));
        }
    }
    out.detail["d"] = d;
    out.detail["d_dual"] = dstar == INT_MAX ? json("none") : json(dstar);
    out.detail["subspaces_u_above_n_minus_d"] = top;
    out.detail["subspaces_via_maxrank"] = via_maxrank;
    out.detail["subspaces_via_rk_restricted"] = via_rkf;
    if (degenerate) out.detail["dual_cases"] = "not checked: trace form is degenerate on " + a.name();
    check_and_record_axioms(M, out, "columns");
    return out.result();
}

// Shared part of the dual-distance lemmas: d, d*, maximality.
struct DualData {
    Code C;
    int d = 0, dstar = 0;
    bool maximal = false;
};

std::optional<DualData> dual_data(const json& p, Outcome& out) {
    DualData r{code_of(p)};
    const Ambient& a = r.C.amb;
    if (form_is_degenerate(a)) {
        out.skip("trace form is degenerate on " + a.name());
        return std::nullopt;
    }
    Code D = dual_star(r.C);
    if (r.C.dim() == 0 || D.dim() == 0) {
        out.skip("code or dual is zero");
        return std::nullopt;
    }
    r.d = min_distance(r.C);
    r.dstar = min_distance(D);
    const std::string bname = a.kind == Kind::Alt ? "alt" : a.kind == Kind::Sym ? "sym" : "her";
    if (a.kind != Kind::Alt || r.d % 2 == 0) r.maximal = Rational(r.C.dim()) == bound_value(bname, a.n, r.d, a.q);
    out.detail["d"] = r.d;
    out.detail["d_dual"] = r.dstar;
    out.detail["maximal"] = r.maximal;
    out.detail["code"] = code_label(r.C);
    return r;
}

void check_dual_bound(Outcome& out, const DualData& x, int bound, bool equality, const std::string& what) {
    const bool ok = equality ? x.dstar == bound : x.dstar <= bound;
    json& e = out.detail["checks"].emplace_back();
    e["statement"] = what;
    e["printed"] = bound;
    e["holds"] = ok;
    if (!ok)
        out.fail(json{{"claim", "dual_min_distance"}, {"code", code_to_json(x.C)}, {"expected", bound},
                      {"relation", equality ? "==" : "<="}, {"computed", x.dstar}});
}

SuiteResult run_bound_dual_dist(const json& p) {
    Outcome out;
    auto x = dual_data(p, out);
    if (!x) return out.result();
    const int n = x->C.amb.n, h2 = 2 * (n / 2);
    check_dual_bound(out, *x, std::min(h2, h2 - x->d + 4), false, "d* <= min{2 floor(n/2), 2 floor(n/2) - d + 4}");
    return out.result();
}

SuiteResult run_dual_sym_odd(const json& p) {
    Outcome out;
    auto x = dual_data(p, out);
    if (!x) return out.result();
    const int n = x->C.amb.n;
    if (x->d % 2 == 0 || x->d < 3) throw ParamError("needs d = 2 delta - 1 with delta > 1");
    check_dual_bound(out, *x, n - x->d + 3, false, "d* <= n - d + 3");
    if (x->maximal) check_dual_bound(out, *x, n % 2 ? n - x->d + 3 : n - x->d + 2, true, "maximal: d* = n-d+3 (n odd), n-d+2 (n even)");
    return out.result();
}

SuiteResult run_dual_sym_even(const json& p) {
    Outcome out;
    auto x = dual_data(p, out);
    if (!x) return out.result();
    if (x->d % 2) throw ParamError("needs d even");
    check_dual_bound(out, *x, x->C.amb.n - x->d + 2, false, "d* <= n - d + 2");
    return out.result();
}

SuiteResult run_dual_her(const json& p) {
    Outcome out;
    auto x = dual_data(p, out);
    if (!x) return out.result();
    if (x->d < 2) throw ParamError("needs d >= 2");
    const int n = x->C.amb.n;
    check_dual_bound(out, *x, n - x->d + 2, false, "d* <= n - d + 2");
    if (x->d % 2 && x->maximal) check_dual_bound(out, *x, n - x->d + 2, true, "d odd, maximum: d* = n - d + 2");
    return out.result();
}

SuiteResult run_families(const json& p) {
    Outcome out;
    Code C = code_of(p);
    const FamilyParams& fp = C.params;
    const int d = min_distance(C);
    BoundReport b = family_bound(fp, C);
    out.detail["dim"] = C.dim();
    out.detail["d"] = d;
    out.detail["bound"] = b.name;
    out.detail["bound_log_q"] = b.bound.str();
    if (C.dim() != expected_dimension(fp))
        out.fail(json{{"claim", "dim"}, {"code", code_to_json(C)}, {"expected", expected_dimension(fp)}, {"computed", C.dim()}});
    if (d != advertised_distance(fp))
        out.fail(json{{"claim", "min_distance"}, {"code", code_to_json(C)}, {"expected", advertised_distance(fp)}, {"computed", d}});
    if (!b.attained)
        out.fail(json{{"claim", "dim"}, {"code", code_to_json(C)}, {"expected", b.bound.str()}, {"computed", C.dim()}});
    return out.result();
}

SuiteResult run_x_weights(const json& p) {
    Outcome out;
    Code C = code_of(p);
    if (C.dim() == 0) throw ParamError("needs a nonzero code");
    std::vector<int> w = x_weights(C);
    const int d = min_distance(C);
    out.detail["x_weights"] = w;
    out.detail["d"] = d;
    for (size_t j = 1; j < w.size(); ++j)
        if (w[j] < w[j - 1])
            out.fail(json{{"claim", "x_weights_monotone"}, {"code", code_to_json(C)}, {"expected", w[j - 1]}, {"computed", w[j]}});
    const int lower = printed_shortened_dim(C.amb.kind, d);
    if (w.front() < lower)
        out.fail(json{{"claim", "x_weight_1"}, {"code", code_to_json(C)}, {"expected", lower}, {"computed", w.front()}});
    out.detail["d1_lower_bound"] = lower;
    return out.result();
}

SuiteResult run_axioms(const json& p) {
    Outcome out;
    Code C = code_of(p);
    QPolymatroid Mc = polymatroid_from_code_columns(C), Mr = polymatroid_from_code_rows(C);
    check_and_record_axioms(Mc, out, "columns");
    check_and_record_axioms(Mr, out, "rows");
    if (C.amb.ell == 2) {
        AxiomReport rep = check_axioms(Mc, Rational(C.amb.n));
        out.detail["columns_valid_at_r_equal_n"] = rep.ok;
    }
    return out.result();
}

SuiteResult run_dualrank(const json& p) {
    Outcome out;
    Code C = code_of(p);
    QPolymatroid M = polymatroid_from_code_columns(C), Md = dual_polymatroid(M);
    check_and_record_axioms(Md, out, "dual of columns");
    if (C.amb.kind == Kind::Full && C.amb.ell == 1) {
        Code P = delsarte_dual(C);
        QPolymatroid Mp = polymatroid_from_code_columns(P);
        for (size_t i = 0; i < Md.rank.size(); ++i)
            if (Md.rank[i] != Mp.rank[i]) {
                out.fail(rank_witness("column_rank", P, M.L->at(i), Md.rank[i], Mp.rank[i]));
                break;
            }
        out.detail["dual_equals_delsarte_dual_table"] = Md.rank == Mp.rank;
    }
    return out.result();
}

// ---------------------------------------------------------------- puncturing

SuiteResult run_punct_vs_del(const json& p) {
    Outcome out;
    Code C = code_of(p);
    const int m = C.amb.m, u = p.at("u").get<int>();
    if (u < 1 || u >= m) throw ParamError("needs 1 <= u < m");
    const FieldPtr& F = C.amb.Fe;
    Matrix N = p.at("N") == "identity" ? Matrix::identity(F, m) : random_invertible(F, m, p.at("N").get<std::uint64_t>());
    Matrix D(F, m - u, m);
    for (int i = 0; i < m - u; ++i)
        for (int j = 0; j < m; ++j) D.at(i, j) = N.at(u + i, j);
    Code P = puncture(C, u, N);
    QPolymatroid Mc = polymatroid_from_code_columns(C), Mp = polymatroid_from_code_columns(P);
    const Lattice& Lp = *Mp.L;
    Minor del = deletion(Mc, complement(Subspace::from_matrix(D)));
    std::map<std::uint32_t, int> via_del;
    for (size_t t = 0; t < del.members.size(); ++t) via_del[del.members[t]] = del.values[t];
    for (size_t i = 0; i < Lp.size(); ++i) {
        const Subspace& V = Lp.at(i);
        Subspace VD = V.dim == 0 ? Subspace::zero(F, m) : Subspace::from_matrix(V.matrix() * D);
        const size_t j = Mc.L->index_of(VD);
        const auto it = via_del.find(static_cast<std::uint32_t>(j));
        const int dv = it == via_del.end() ? -1 : it->second;
        if (Mp.rank[i] != Mc.rank[j] || dv != Mp.rank[i]) {
            json w{{"claim", "column_rank_pair"}, {"code", code_to_json(P)}, {"subspace", subspace_json(V)},
                   {"code2", code_to_json(C)}, {"subspace2", subspace_json(VD)}};
            w["expected"] = json::array({Mp.rank[i], Mp.rank[i]});
            w["computed"] = json::array({Mp.rank[i], Mc.rank[j]});
            out.fail(w);
        }
    }
    if (via_del.size() != Lp.size()) out.fail(json{{"claim", "deletion_size"}, {"expected", Lp.size()}, {"computed", via_del.size()}});
    check_and_record_axioms(Mp, out, "punctured columns");
    out.detail["punctured_dim"] = P.dim();
    return out.result();
}

SuiteResult run_lem_orthogonal(const json& p) {
    Outcome out;
    const int n = p.at("n").get<int>();
    FieldPtr F = Field::get(p.at("q").get<int>(), p.value("ell", 1));
    int checked = 0;
    for (int u = 1; u < n; ++u) {
        std::vector<int> tail;
        for (int i = u; i < n; ++i) tail.push_back(i);
        Subspace Uperp = Subspace::coordinate(F, n, tail);
        const Lattice& Lu = *lattice_for(F, u);
        for (size_t i = 0; i < Lu.size(); ++i) {
            const Subspace& V = Lu.at(i);
            Subspace psiV = embed_subspace(V, n, false), psiVperp = embed_subspace(complement(V), n, false);
            auto rows = psiVperp.rows();
            for (const auto& r : Uperp.rows()) rows.push_back(r);
            Subspace rhs = Subspace::span(F, n, rows);
            const bool direct = rhs.dim == psiVperp.dim + Uperp.dim;
            if (complement(psiV) != rhs || !direct)
                out.fail(json{{"claim", "orthogonal_decomposition"}, {"n", n}, {"q", p.at("q")}, {"ell", p.value("ell", 1)}, {"u", u}, {"subspace", subspace_json(V)},
                              {"expected", true}, {"computed", false}});
            ++checked;
        }
    }
    out.detail["pairs"] = checked;
    return out.result();
}

SuiteResult run_prop_punctured(const json& p) {
    Outcome out;
    Code C = code_of(p);
    const int n = C.amb.n;
    const FieldPtr& F = C.amb.Fe;
    json per_u = json::array();
    for (int u = 1; u < n; ++u) {
        Code Cu = corner_delete(C, u);
        Ambient fa = Ambient::full(n, u, C.amb.q, C.amb.ell);
        std::vector<Matrix> mats;
        for (const auto& M : C.gens) {
            Matrix T(F, n, u);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < u; ++j) T.at(i, j) = M.at(i, j);
            mats.push_back(T);
        }
        Code Ct = code_from_matrices(fa, mats);
        const Lattice& Lu = *lattice_for(F, u);
        int mism = 0;
        for (size_t i = 0; i < Lu.size(); ++i) {
            const Subspace& V = Lu.at(i);
            Subspace psiV = embed_subspace(V, n, false);
            const int a = column_rank(Cu, V), b = column_rank(Ct, psiV);
            if (a != b) {
                ++mism;
                out.fail(json{{"claim", "column_rank_pair"}, {"code", code_to_json(Cu)}, {"subspace", subspace_json(V)},
                              {"code2", code_to_json(Ct)}, {"subspace2", subspace_json(psiV)},
                              {"expected", json::array({b, b})}, {"computed", json::array({a, b})}});
            }
        }
        check_and_record_axioms(polymatroid_from_code_columns(Cu), out, "corner u=" + std::to_string(u));
        per_u.push_back(json{{"u", u}, {"corner_dim", Cu.dim()}, {"subspaces", Lu.size()}, {"mismatches", mism}});
    }
    out.detail["by_u"] = per_u;
    return out.result();
}

// ---------------------------------------------------------------- rank theorems

struct RankTheorem {
    std::function<void(const Code&, int n, int d)> hypothesis;  // throws ParamError
    std::function<Claim(int n, int dimC, int u)> claim;
};

Runner rank_theorem_runner(RankTheorem t) {
    return [t](const json& p) {
        Outcome out;
        Code C = code_of(p);
        const int n = C.amb.n, d = min_distance(C);
        t.hypothesis(C, n, d);
        QPolymatroid M = polymatroid_from_code_columns(C);
        out.detail["code"] = code_label(C);
        out.detail["dim"] = C.dim();
        out.detail["d"] = d;
        compare_rank_claims(C, M, [&](int u) { return t.claim(n, C.dim(), u); }, out, "column_rank");
        check_and_record_axioms(M, out, "columns");
        return out.result();
    };
}

void need(bool ok, const std::string& msg) {
    if (!ok) throw ParamError("hypothesis not met: " + msg);
}

SuiteResult run_sym_punctured(const json& p) {
    Outcome out;
    Code C = code_of(p);
    const int n = C.amb.n, d = min_distance(C);
    const std::string reading = p.value("reading", "printed");
    need(C.amb.kind == Kind::Sym && d >= 3, "symmetric code with d >= 3");
    need(Rational(C.dim()) == bound_value("sym", n, d, C.amb.q), "maximal code");
    const bool printed = (n - d - 1) % 2 == 0, alt = (n - d) % 2 == 0;
    out.detail["n_minus_d_minus_1_even"] = printed;
    out.detail["n_minus_d_even"] = alt;
    out.detail["reading"] = reading;
    need(reading == "printed" ? printed : alt, "parity condition under the '" + reading + "' reading");
    Code P = corner_delete(C, n - 1);
    const int dp = min_distance(P);
    const Rational b = bound_value("sym", n - 1, d - 2, C.amb.q);
    out.detail["corner_dim"] = P.dim();
    out.detail["corner_d"] = dp;
    out.detail["corner_bound"] = b.str();
    json base{{"code", code_to_json(C)}, {"to", n - 1}};
    if (dp != d - 2) {
        json w = base;
        w["claim"] = "corner_min_distance";
        w["expected"] = d - 2;
        w["computed"] = dp;
        out.fail(w);
    }
    if (Rational(P.dim()) != b) {
        json w = base;
        w["claim"] = "corner_dim";
        w["expected"] = b.str();
        w["computed"] = P.dim();
        out.fail(w);
    }
    return out.result();
}

SuiteResult run_dim_dual_shortened(const json& p) {
    Outcome out;
    Code C = code_of(p);
    const Ambient& a = C.amb;
    const int n = a.n;
    need(a.kind == Kind::Sym, "symmetric code");
    if (form_is_degenerate(a)) {
        out.skip("trace form is degenerate on " + a.name() + "; C* is not defined by the size relation");
        return out.result();
    }
    const int d = min_distance(C);
    need((n - d - 1) % 2 == 0, "n - d - 1 even");
    need(Rational(C.dim()) == bound_value("sym", n, d, a.q), "maximal code");
    std::vector<int> first;
    for (int i = 0; i < n - 1; ++i) first.push_back(i);
    Subspace U = Subspace::coordinate(a.Fe, n, first);
    Matrix E(a.Fe, n, n);
    E.at(n - 1, n - 1) = 1;
    const bool diag = C.contains(to_coords(a, E));
    const int printed = binom2(n) + d - (diag ? 1 : 2);
    const int got = shorten(dual_star(C), U).dim();
    const int oracle = binom2(n) - corner_delete(C, n - 1).dim();
    out.detail["diag_in_C"] = diag;
    out.detail["printed"] = printed;
    out.detail["computed"] = got;
    out.detail["complement_of_corner"] = oracle;
    if (got != oracle) out.fail(rank_witness("dim_dual_shortened", C, U, oracle, got));
    if (got != printed) out.fail(rank_witness("dim_dual_shortened", C, U, printed, got));
    return out.result();
}

// ---------------------------------------------------------------- duality

std::vector<int> shortened_dims(const Code& C, const QPolymatroid& M) {
    const Lattice& L = *M.L;
    std::vector<int> f(L.size());
    for (size_t i = 0; i < L.size(); ++i) f[i] = C.dim() - M.rank[L.complement_index(i)];
    return f;
}

Code random_full(int m, int n, int q, int dim, std::uint64_t seed) { return random_code(Ambient::full(m, n, q), dim, seed); }

// D shares a random part of C and adds random matrices.
Code overlapping(const Code& C, std::mt19937_64& rng) {
    const Ambient& a = C.amb;
    std::uniform_int_distribution<int> shared(0, C.dim()), extra(0, std::max(0, a.dim() - C.dim()));
    std::vector<Matrix> mats(C.gens.begin(), C.gens.begin() + shared(rng));
    Code R = random_code(a, extra(rng), rng());
    mats.insert(mats.end(), R.gens.begin(), R.gens.end());
    return mats.empty() ? zero_code(a) : code_from_matrices(a, mats);
}

SuiteResult run_lem_inequality(const json& p) {
    Outcome out;
    const int q = p.at("q").get<int>(), pairs = p.at("pairs").get<int>();
    std::mt19937_64 rng(p.at("seed").get<std::uint64_t>());
    std::uint64_t checked = 0;
    for (int t = 0; t < pairs; ++t) {
        std::uniform_int_distribution<int> side(2, 3);
        const int m = side(rng), n = side(rng);
        std::uniform_int_distribution<int> dd(1, m * n);
        Code C = random_full(m, n, q, dd(rng), rng());
        Code D = overlapping(C, rng);
        Code CD = code_meet(C, D);
        QPolymatroid Mc = polymatroid_from_code_columns(C), Mcd = polymatroid_from_code_columns(CD);
        const Lattice& L = *Mc.L;
        std::vector<int> f = shortened_dims(C, Mc), g = shortened_dims(CD, Mcd);
        for (size_t i = 0; i < L.size(); ++i)
            for (size_t j = i; j < L.size(); ++j) {
                const size_t s = L.sum_index(i, j), x = L.meet_index(i, j);
                const int lhs = f[i] + f[j] + g[x] + g[s], rhs = f[x] + f[s] + g[i] + g[j];
                ++checked;
                if (lhs > rhs)
                    out.fail(json{{"claim", "four_term_inequality"}, {"code", code_to_json(C)}, {"code2", code_to_json(D)},
                                  {"subspace", subspace_json(L.at(i))}, {"subspace2", subspace_json(L.at(j))},
                                  {"expected", "lhs <= rhs"}, {"computed", json::array({lhs, rhs})}});
            }
    }
    out.detail["code_pairs"] = pairs;
    out.detail["subspace_pairs"] = checked;
    return out.result();
}

SuiteResult run_thm_quotient(const json& p) {
    Outcome out;
    const int q = p.at("q").get<int>(), pairs = p.at("pairs").get<int>();
    std::mt19937_64 rng(p.at("seed").get<std::uint64_t>());
    int tables = 0, failed = 0, equal = 0;
    for (int t = 0; t < pairs; ++t) {
        std::uniform_int_distribution<int> side(2, 3);
        const int m = side(rng), n = side(rng);
        std::uniform_int_distribution<int> dd(1, m * n);
        Code C = random_full(m, n, q, dd(rng), rng());
        Code D = overlapping(C, rng);
        QuotientTables qt = quotient_rank_functions(C, D);
        if (qt.difference == qt.direct)
            ++equal;
        else
            out.fail(json{{"claim", "quotient_expressions_equal"}, {"code", code_to_json(C)}, {"code2", code_to_json(D)},
                          {"expected", true}, {"computed", false}});
        QPolymatroid M = polymatroid_from_code_columns(C);
        M.rank = qt.difference;
        M.provenance = "derived";
        AxiomReport rep = check_axioms(M, Rational(M.r));
        ++tables;
        if (!rep.ok) {
            ++failed;
            out.fail(json{{"claim", "quotient_axioms"}, {"code", code_to_json(C)}, {"code2", code_to_json(D)},
                          {"expected", 0}, {"computed", rep.violations}, {"examples", rep.examples}});
        }
    }
    out.detail["axiom_tables"] = tables;
    out.detail["axiom_failures"] = failed;
    out.detail["pairs"] = pairs;
    out.detail["pairs_equal"] = equal;
    return out.result();
}

SuiteResult run_lem_int(const json& p) {
    Outcome out;
    Code C = code_of(p);
    const Ambient& a = C.amb;
    Code lhs = as_full(orthogonal_in_ambient(C));
    Code rhs = code_meet(delsarte_dual(C), as_full(whole_space(a)));
    const bool eq = lhs == rhs;
    out.detail["equal"] = eq;
    out.detail["dim_orthogonal"] = lhs.dim();
    out.detail["dim_meet"] = rhs.dim();
    if (a.q % 2 == 0 && a.kind == Kind::Alt) {
        out.skip("excluded by hypothesis: alternating forms in characteristic 2");
        return out.result();
    }
    if (a.q % 2 == 0 && a.kind == Kind::Her) {
        out.skip("the F_q-trace of the full-space form vanishes on Hermitian pairs for q even");
        return out.result();
    }
    if (!eq)
        out.fail(json{{"claim", "lem_int"}, {"code", code_to_json(C)}, {"expected", true}, {"computed", false}});
    return out.result();
}

// rho*(U) - rho_*(U) for every U, with rho_* the table of the raw orthogonal code.
std::vector<int> dual_minus_lower(const Code& C) {
    QPolymatroid Ms = dual_polymatroid(polymatroid_from_code_columns(C));
    QPolymatroid Ml = polymatroid_from_code_columns(orthogonal_in_ambient(C));
    std::vector<int> out(Ms.rank.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = Ms.rank[i] - Ml.rank[i];
    return out;
}

SuiteResult run_dual_quotient(const json& p) {
    Outcome out;
    Code C = code_of(p);
    const Ambient& a = C.amb;
    if (a.q % 2 == 0 && a.kind == Kind::Alt) {
        out.skip("excluded by hypothesis: alternating forms in characteristic 2");
        return out.result();
    }
    if (a.q % 2 == 0 && a.kind == Kind::Her) {
        out.skip("the F_q-trace of the full-space form vanishes on Hermitian pairs for q even");
        return out.result();
    }
    const Lattice& L = lattice_of(a);
    std::vector<int> diff = dual_minus_lower(C);
    Code Cp = delsarte_dual(C), X = as_full(whole_space(a));
    const int base = code_sum(Cp, X).dim();
    int nonzero = 0;
    for (size_t i = 0; i < L.size(); ++i) {
        const int rhs = base - code_sum(shorten(Cp, L.at(i).dim == a.n ? Subspace::zero(a.Fe, a.n) : complement(L.at(i))), X).dim();
        if (diff[i]) ++nonzero;
        if (diff[i] != rhs) {
            json w = rank_witness("dual_minus_lower", C, L.at(i), rhs, diff[i]);
            out.fail(w);
        }
    }
    out.detail["subspaces"] = L.size();
    out.detail["subspaces_where_tables_differ"] = nonzero;
    return out.result();
}

SuiteResult run_cor_char2(const json& p) {
    Outcome out;
    Code C = code_of(p);
    const Ambient& a = C.amb;
    need(a.q % 2 == 0, "q even");
    Code alt = whole_space(Ambient::make(Kind::Alt, a.n, a.q));
    for (const auto& M : alt.gens) need(C.contains(to_coords(a, M)), "Alt contained in C");
    const Lattice& L = lattice_of(a);
    std::vector<int> diff = dual_minus_lower(C);
    for (size_t i = 0; i < L.size(); ++i)
        if (diff[i] != 0) out.fail(rank_witness("dual_minus_lower", C, L.at(i), 0, diff[i]));
    out.detail["dim_C"] = C.dim();
    out.detail["subspaces"] = L.size();
    return out.result();
}

// ---------------------------------------------------------------- points

Points ambient_points(const std::vector<std::tuple<std::string, int, int>>& v) {
    Points out;
    for (const auto& [k, n, q] : v) out.push_back(ambient_point(k, n, q));
    return out;
}

Points code_points(const std::vector<json>& codes) {
    Points out;
    for (const auto& c : codes) out.push_back(cpt(c));
    return out;
}

json whole(const std::string& kind, int n, int q) {
    json j = ambient_point(kind, n, q);
    j["source"] = "whole";
    return j;
}

// Small codes of every kind at q = 2.
std::vector<json> small_codes_q2() {
    return {fam("alt_DG", 3, 2, 2),      fam("alt_DG", 5, 4, 2),    fam("sym_schmidt", 3, 1, 2),
            fam("sym_schmidt", 3, 3, 2), fam("sym_schmidt", 4, 2, 2), fam("her_R", 3, 2, 2),
            fam("her_H", 3, 2, 2),       fam("her_E", 3, 3, 2),     random_spec("Alt", 3, 2, 2, 11),
            random_spec("Sym", 3, 2, 3, 12), random_spec("Her", 3, 2, 4, 13), random_spec("Sym", 4, 2, 5, 14)};
}

std::vector<json> small_codes_q3() {
    return {fam("alt_DG", 3, 2, 3),      fam("sym_schmidt", 3, 3, 3), fam("sym_schmidt", 4, 2, 3),
            fam("her_R", 3, 2, 3),       fam("her_E", 3, 3, 3),       random_spec("Alt", 3, 3, 2, 21),
            random_spec("Sym", 3, 3, 3, 22), random_spec("Her", 3, 3, 4, 23), random_spec("Alt", 4, 3, 3, 24)};
}

std::vector<json> full_codes(int q) {
    return {full_spec(3, 2, q, 2, 31), full_spec(3, 3, q, 4, 32),
            full_spec(2, 3, q, 3, 33)};
}

std::vector<json> family_points_quick() {
    return {fam("alt_DG", 3, 2, 2),      fam("alt_DG", 5, 2, 2),      fam("alt_DG", 5, 4, 2),
            fam("sym_schmidt", 2, 2, 2), fam("sym_schmidt", 3, 1, 2), fam("sym_schmidt", 3, 3, 2),
            fam("sym_schmidt", 4, 2, 2), fam("sym_schmidt", 4, 4, 2), fam("sym_schmidt", 5, 3, 2),
            fam("her_R", 2, 2, 2),       fam("her_R", 3, 2, 2),       fam("her_H", 2, 1, 2),
            fam("her_H", 3, 2, 2),       fam("her_E", 3, 1, 2),       fam("her_E", 3, 3, 2)};
}

// Admissible desk-scale points not already in the quick list.
std::vector<json> family_points_full() {
    const auto quick = family_points_quick();
    std::vector<json> out;
    for (const auto& p : admissible_family_points())
        if (std::find(quick.begin(), quick.end(), p) == quick.end()) out.push_back(p);
    return out;
}

std::vector<SuiteSpec> all_suites() {
    std::vector<SuiteSpec> s;
    const std::vector<std::tuple<std::string, int, int>> amb_quick = {
        {"Alt", 2, 2}, {"Alt", 3, 2}, {"Alt", 4, 2}, {"Sym", 2, 2}, {"Sym", 3, 2}, {"Sym", 4, 2}, {"Her", 2, 2}, {"Her", 3, 2}};
    const std::vector<std::tuple<std::string, int, int>> amb_full = {
        {"Alt", 5, 2}, {"Sym", 5, 2}, {"Her", 4, 2}, {"Alt", 3, 3}, {"Alt", 4, 3},
        {"Sym", 3, 3}, {"Sym", 4, 3}, {"Her", 2, 3}, {"Her", 3, 3}, {"Her", 4, 3}};
    // Exhaustive max-rank over every X(U)*: q = 3 stops at n = 4 (n = 3 for Her).
    const std::vector<std::tuple<std::string, int, int>> maxrank_full = {
        {"Alt", 5, 2}, {"Her", 4, 2}, {"Alt", 3, 3}, {"Alt", 4, 3}, {"Sym", 3, 3}, {"Sym", 4, 3}, {"Her", 2, 3}, {"Her", 3, 3}};

    s.push_back(make("prop-trivial", "dim X(U) = binom(u,2), binom(u+1,2), u^2", ambient_points(amb_quick),
                     ambient_points(amb_full), run_prop_trivial));
    s.push_back(make("lem-equiv", "X(U) is the conjugate of the coordinate case", ambient_points(amb_quick),
                     ambient_points(amb_full), run_lem_equiv));
    s.push_back(make("eq-anticode-dual", "dim X(U)* = (n-u)(n+u-1)/2, (n-u)(n+u+1)/2, (n-u)(n+u)",
                     ambient_points(amb_quick), ambient_points(amb_full), run_anticode_dual));
    s.push_back(make("prop-maxrank", "maxrk X(U)* = maxrk X for u <= n/2, 2(n-u) for u >= n/2",
                     ambient_points(amb_quick), ambient_points(maxrank_full), run_prop_maxrank));
    s.push_back(make("lem-begin1", "C(U^sigma, r) = C(U, c)",
                     code_points({fam("her_R", 3, 2, 2), fam("her_H", 3, 2, 2), fam("her_E", 3, 1, 2),
                                  random_spec("Her", 3, 2, 5, 41), fam("sym_schmidt", 4, 2, 2), random_spec("Alt", 4, 2, 3, 42)}),
                     code_points({fam("her_R", 3, 2, 3), fam("her_E", 3, 1, 3), random_spec("Her", 3, 3, 6, 43),
                                  fam("her_H", 4, 3, 2)}),
                     run_begin1));
    s.push_back(make("thm-shortened-ambient", "rank function of X(V) in closed form",
                     ambient_points(amb_quick), ambient_points({{"Alt", 5, 2}, {"Sym", 5, 2}, {"Her", 4, 2}, {"Alt", 4, 3}, {"Sym", 4, 3}, {"Her", 3, 3}}),
                     run_shortened_ambient));
    s.push_back(make("eq-size-relation", "|C| |C*| = |X|", code_points(small_codes_q2()), code_points(small_codes_q3()),
                     run_size_relation));
    s.push_back(make("eq-sizeformula", "|C(U)| via |X(U) + C| and via C* and X(U)*", code_points(small_codes_q2()),
                     code_points(small_codes_q3()), run_sizeformula));
    s.push_back(make("prop-polymatroid", "rank values for u > n-d and for small maximum rank of X(U^perp)*",
                     code_points(small_codes_q2()),
                     code_points([] {
                         auto v = small_codes_q3();
                         v.push_back(fam("alt_DG", 5, 2, 2));
                         v.push_back(fam("sym_schmidt", 5, 3, 3));
                         return v;
                     }()),
                     run_prop_polymatroid));
    s.push_back(make("lem-bound-dual-dist", "alternating: d* <= min{2 floor(n/2), 2 floor(n/2) - d + 4}",
                     code_points({fam("alt_DG", 5, 4, 2), random_spec("Alt", 4, 2, 2, 50), random_spec("Alt", 4, 2, 3, 51),
                                  random_spec("Alt", 5, 2, 6, 52), random_spec("Alt", 5, 2, 4, 54)}),
                     code_points({fam("alt_DG", 5, 4, 3), random_spec("Alt", 4, 3, 3, 53), random_spec("Alt", 5, 3, 5, 55)}),
                     run_bound_dual_dist));
    s.push_back(make("lem-dual-d-odd-sym", "symmetric, d odd: d* <= n-d+3, equality for maximal codes",
                     code_points({fam("sym_schmidt", 3, 3, 3), corner(fam("sym_schmidt", 5, 5, 3), 4)}),
                     code_points({fam("sym_schmidt", 5, 3, 3), fam("sym_schmidt", 5, 5, 3)}), run_dual_sym_odd));
    s.push_back(make("lem-dual-sym-even", "symmetric, d even: d* <= n-d+2",
                     code_points({fam("sym_schmidt", 2, 2, 3), fam("sym_schmidt", 4, 2, 3), fam("sym_schmidt", 4, 4, 3)}),
                     code_points({fam("sym_LTZ_eta", 4, 2, 3)}), run_dual_sym_even));
    s.push_back(make("lem-dual-d-odd-her", "Hermitian: d* <= n-d+2, equality for d odd and maximum",
                     code_points({fam("her_R", 3, 2, 2), fam("her_H", 3, 2, 2), fam("her_E", 3, 3, 2)}),
                     code_points({fam("her_R", 3, 2, 3), fam("her_E", 3, 3, 3), fam("her_H", 4, 3, 2), fam("her_LTZ_gamma", 3, 2, 3)}),
                     run_dual_her));
    s.push_back(make("codes-families", "each construction has its dimension and distance and meets its bound",
                     code_points(family_points_quick()), code_points(family_points_full()), run_families));
    s.push_back(make("rem-x-weights", "X-weights are non-decreasing and d_1 is bounded by the anticode size",
                     code_points({fam("alt_DG", 5, 2, 2), fam("sym_schmidt", 4, 2, 2), fam("her_H", 3, 2, 2),
                                  random_spec("Sym", 3, 2, 3, 61)}),
                     code_points({fam("sym_schmidt", 5, 3, 3), fam("her_E", 3, 1, 3), fam("alt_DG", 5, 4, 3)}),
                     run_x_weights));
    s.push_back(make("qpoly-axioms", "(q,r)-polymatroid axioms R1-R3 for column and row tables",
                     code_points(small_codes_q2()),
                     code_points([] {
                         auto v = small_codes_q3();
                         for (auto& c : full_codes(2)) v.push_back(c);
                         v.push_back(fam("her_H", 4, 3, 2));
                         return v;
                     }()),
                     run_axioms));
    s.push_back(make("eq-dualrank", "the dual rank function is a polymatroid; for full codes it is the Delsarte dual's",
                     code_points([] {
                         auto v = full_codes(2);
                         v.push_back(fam("sym_schmidt", 3, 1, 2));
                         v.push_back(fam("her_R", 3, 2, 2));
                         return v;
                     }()),
                     code_points(full_codes(3)), run_dualrank));
    {
        auto pv = [](json code, int u, json N) { return cpt(std::move(code), json{{"u", u}, {"N", std::move(N)}}); };
        s.push_back(make("eq-punct-vs-del", "puncturing NC is deletion of rowsp(D)^perp",
                         {pv(fam("sym_schmidt", 3, 1, 2), 1, "identity"), pv(fam("sym_schmidt", 3, 1, 2), 2, 71),
                          pv(fam("her_R", 3, 2, 2), 1, 72), pv(full_spec(3, 3, 2, 4, 73), 1, 74),
                          pv(fam("alt_DG", 3, 2, 2), 1, "identity")},
                         {pv(fam("sym_schmidt", 3, 3, 3), 1, 75), pv(random_spec("Alt", 3, 3, 2, 76), 2, "identity"),
                          pv(fam("her_E", 3, 1, 3), 1, 77)},
                         run_punct_vs_del));
    }
    s.push_back(make("lem-orthogonal", "psi(V)^perp = psi(V^perp) + U^perp, direct",
                     {json{{"n", 2}, {"q", 2}}, json{{"n", 3}, {"q", 2}}, json{{"n", 3}, {"q", 2}, {"ell", 2}}},
                     {json{{"n", 3}, {"q", 3}}, json{{"n", 4}, {"q", 2}}}, run_lem_orthogonal));
    s.push_back(make("prop-punctured", "M[C^[u]] is the restriction of M_c[C A^t] to U",
                     code_points({fam("sym_schmidt", 3, 1, 2), fam("alt_DG", 3, 2, 2), fam("her_H", 3, 2, 2),
                                  random_spec("Sym", 3, 2, 3, 81), random_spec("Her", 3, 2, 4, 82)}),
                     code_points({fam("sym_schmidt", 3, 3, 3), random_spec("Alt", 3, 3, 2, 83), fam("her_E", 3, 1, 3)}),
                     run_prop_punctured));

    // Rank theorems.
    s.push_back(make("prop-alt-determined-a", "alternating, n >= 6 even, d = n-2: dim C if u > 2, u(2n-u-1)/2 otherwise", {},
                     code_points({corner(fam("alt_DG", 7, 6, 2), 6)}),
                     rank_theorem_runner({[](const Code& C, int n, int d) {
                                              need(C.amb.kind == Kind::Alt && n >= 6 && n % 2 == 0 && d == n - 2, "Alt, n >= 6 even, d = n-2");
                                          },
                                          [](int n, int dimC, int u) {
                                              return u > 2 ? Claim::exact(dimC) : Claim::exact(u * (2 * n - u - 1) / 2);
                                          }})));
    s.push_back(make("prop-alt-determined-b", "alternating, n >= 5 odd, d = n-1: dim C if u >= 2, u(n-1) otherwise",
                     code_points({fam("alt_DG", 5, 4, 2)}),
                     code_points({fam("alt_DG", 5, 4, 3), fam("alt_DG", 5, 4, 2, 2)}),
                     rank_theorem_runner({[](const Code& C, int n, int d) {
                                              need(C.amb.kind == Kind::Alt && n >= 5 && n % 2 == 1 && d == n - 1, "Alt, n >= 5 odd, d = n-1");
                                          },
                                          [](int n, int dimC, int u) {
                                              return u >= 2 ? Claim::exact(dimC) : Claim::exact(u * (n - 1));
                                          }})));
    s.push_back(make("thm-alternating-missing", "alternating, n-d = 3: 2n if u > 3, u(2n-u-1)/2 if u < 3, {2n, 2n-1} at u = 3",
                     code_points({fam("alt_DG", 5, 2, 2)}),
                     code_points({fam("alt_DG", 5, 2, 3), fam("alt_DG", 5, 2, 2, 2)}),
                     rank_theorem_runner({[](const Code& C, int n, int d) {
                                              need(C.amb.kind == Kind::Alt && n % 2 == 1 && n - d == 3, "Alt, n odd, n-d = 3");
                                          },
                                          [](int n, int, int u) {
                                              if (u > 3) return Claim::exact(2 * n);
                                              if (u < 3) return Claim::exact(u * (2 * n - u - 1) / 2);
                                              return Claim::bracket({2 * n - 1, 2 * n});
                                          }})));
    s.push_back(make("prop-sym-determined-a", "symmetric, d = n-1: dim C if u >= 2, nu otherwise",
                     code_points({corner(fam("sym_schmidt", 4, 4, 2), 3), corner(fam("sym_schmidt", 5, 5, 2), 4)}),
                     code_points({corner(fam("sym_schmidt", 4, 4, 3), 3), corner(fam("sym_schmidt", 5, 5, 3), 4)}),
                     rank_theorem_runner({[](const Code& C, int n, int d) {
                                              need(C.amb.kind == Kind::Sym && n >= 3 && d == n - 1, "Sym, n >= 3, d = n-1");
                                          },
                                          [](int n, int dimC, int u) {
                                              return u >= 2 ? Claim::exact(dimC) : Claim::exact(n * u);
                                          }})));
    s.push_back(make("prop-sym-determined-b", "symmetric, n >= 5 odd, d = n-2: dim C if u >= 3, u(2n-u+1)/2 otherwise",
                     code_points({fam("sym_schmidt", 5, 3, 2)}),
                     code_points({fam("sym_schmidt", 5, 3, 3), fam("sym_schmidt", 7, 5, 2)}),
                     rank_theorem_runner({[](const Code& C, int n, int d) {
                                              need(C.amb.kind == Kind::Sym && n >= 5 && n % 2 == 1 && d == n - 2, "Sym, n >= 5 odd, d = n-2");
                                          },
                                          [](int n, int dimC, int u) {
                                              return u >= 3 ? Claim::exact(dimC) : Claim::exact(u * (2 * n - u + 1) / 2);
                                          }})));
    s.push_back(make("thm-sym-n-minus-2", "S_{n,d,s}, n even, n-d = 2: 2n if u > 2, n at u = 1, {2n, 2n-1} at u = 2",
                     code_points({fam("sym_schmidt", 4, 2, 2)}),
                     code_points({fam("sym_schmidt", 4, 2, 3), fam("sym_schmidt", 6, 4, 2)}),
                     rank_theorem_runner({[](const Code& C, int n, int d) {
                                              need(C.params.family == "sym_schmidt" && n >= 4 && n % 2 == 0 && n - d == 2,
                                                   "S_{n,d,s}, n >= 4 even, n-d = 2");
                                          },
                                          [](int n, int, int u) {
                                              if (u == 0) return Claim::exact(0);
                                              if (u == 1) return Claim::exact(n);
                                              if (u == 2) return Claim::bracket({2 * n - 1, 2 * n});
                                              return Claim::exact(2 * n);
                                          }})));
    s.push_back(make("thm-sym-n-minus-4", "S_{n,d,s}, n odd, n-d = 4: 3n if u > 4, u(2n-u+1)/2 if u < 4, {3n, 3n-1} at u = 4", {},
                     code_points({fam("sym_schmidt", 7, 3, 2)}),
                     rank_theorem_runner({[](const Code& C, int n, int d) {
                                              need(C.params.family == "sym_schmidt" && n >= 7 && n % 2 == 1 && n - d == 4,
                                                   "S_{n,d,s}, n >= 7 odd, n-d = 4");
                                          },
                                          [](int n, int, int u) {
                                              if (u > 4) return Claim::exact(3 * n);
                                              if (u < 4) return Claim::exact(u * (2 * n - u + 1) / 2);
                                              return Claim::bracket({3 * n - 1, 3 * n});
                                          }})));
    s.push_back(make("thm-tang-zhou", "T_{2k,s}(eta): 2n if u > 2, u(2n-u-1)/2 if u < 2, {2n, 2n-1, 2n-2} at u = 2", {},
                     code_points({fam("sym_tang_zhou", 6, 4, 3, 1, 0, 3)}),
                     rank_theorem_runner({[](const Code& C, int, int) {
                                              need(C.params.family == "sym_tang_zhou", "T_{2k,s}(eta)");
                                          },
                                          [](int n, int, int u) {
                                              if (u > 2) return Claim::exact(2 * n);
                                              if (u < 2) return Claim::exact(u * (2 * n - u - 1) / 2);
                                              return Claim::bracket({2 * n - 2, 2 * n - 1, 2 * n});
                                          }})));
    s.push_back(make("her-prop-d-n-minus-1", "Hermitian, d = n-1: dim C if u >= 1, u(n-1)^2 otherwise",
                     code_points({fam("her_H", 3, 2, 2)}),
                     code_points({fam("her_H", 3, 2, 3), fam("her_H", 4, 3, 2)}),
                     rank_theorem_runner({[](const Code& C, int n, int d) {
                                              need(C.amb.kind == Kind::Her && n >= 3 && d == n - 1, "Her, n >= 3, d = n-1");
                                          },
                                          [](int n, int dimC, int u) {
                                              return u >= 1 ? Claim::exact(dimC) : Claim::exact(u * (n - 1) * (n - 1));
                                          }})));
    s.push_back(make("her-prop-R", "R: rho(U) = u(2n-u-1)",
                     code_points({fam("her_R", 3, 2, 2)}),
                     code_points({fam("her_R", 3, 2, 3), fam("her_R", 4, 2, 2)}),
                     rank_theorem_runner({[](const Code& C, int, int) { need(C.params.family == "her_R", "the code R"); },
                                          [](int n, int, int u) { return Claim::exact(u * (2 * n - u - 1)); }})));
    s.push_back(make("thm-her-H", "H, n even, n-d = 3: 4n if u >= 4, u^2 if u <= 2, {4n, 4n-1} at u = 3", {},
                     code_points({fam("her_H", 4, 1, 2)}),
                     rank_theorem_runner({[](const Code& C, int n, int d) {
                                              need(C.params.family == "her_H" && n >= 4 && n % 2 == 0 && n - d == 3,
                                                   "H_{n,d,s}, n >= 4 even, n-d = 3");
                                          },
                                          [](int n, int, int u) {
                                              if (u >= 4) return Claim::exact(4 * n);
                                              if (u <= 2) return Claim::exact(u * u);
                                              return Claim::bracket({4 * n - 1, 4 * n});
                                          }})));
    s.push_back(make("thm-her-E", "E, n odd, n-d = 2: 3n if u >= 4, u^2 if u <= 2, {3n, 3n-1} at u = 2", {},
                     code_points({fam("her_E", 5, 3, 2)}),
                     rank_theorem_runner({[](const Code& C, int n, int d) {
                                              need(C.params.family == "her_E" && n >= 5 && n % 2 == 1 && n - d == 2,
                                                   "E_{n,d,s}, n >= 5 odd, n-d = 2");
                                          },
                                          [](int n, int, int u) {
                                              if (u >= 4) return Claim::exact(3 * n);
                                              if (u < 2) return Claim::exact(u * u);
                                              // Two printed cases overlap at u = 2; u = 3 has no printed value.
                                              if (u == 2) return Claim::bracket({4, 3 * n - 1, 3 * n});
                                              return Claim::none();
                                          }})));

    s.push_back(make("thm-sym-punctured", "corner deletion of a maximal symmetric d-code is a maximal (d-2)-code",
                     {cpt(fam("sym_schmidt", 5, 3, 2), json{{"reading", "n-d even"}})},
                     {cpt(fam("sym_schmidt", 5, 3, 3), json{{"reading", "n-d even"}}),
                      cpt(fam("sym_schmidt", 6, 4, 2), json{{"reading", "n-d even"}}),
                      cpt(corner(fam("sym_schmidt", 5, 5, 3), 4), json{{"reading", "printed"}})},
                     run_sym_punctured));
    s.push_back(make("prop-dim-dual-shortened", "dim C*(U) = binom(n,2) + d - 1 or + d - 2 for U = <e_1..e_{n-1}>",
                     code_points({corner(fam("sym_schmidt", 5, 5, 2), 4)}),
                     code_points({corner(fam("sym_schmidt", 5, 5, 3), 4), whole("Sym", 4, 3), whole("Sym", 2, 3)}),
                     run_dim_dual_shortened));

    // Duality.
    s.push_back(make("lem-inequality", "four-term inequality for C and C meet D, every pair U, V",
                     {json{{"q", 2}, {"pairs", 6}, {"seed", 91}}}, {json{{"q", 3}, {"pairs", 4}, {"seed", 92}}},
                     run_lem_inequality));
    s.push_back(make("thm-quotient", "the two quotient rank functions agree and are polymatroids",
                     {json{{"q", 2}, {"pairs", 25}, {"seed", 93}}}, {json{{"q", 3}, {"pairs", 25}, {"seed", 94}}},
                     run_thm_quotient));
    s.push_back(make("lem-int", "C* = C^perp meet X",
                     code_points({fam("sym_schmidt", 3, 1, 2), random_spec("Sym", 3, 2, 3, 101), fam("alt_DG", 3, 2, 2),
                                  fam("her_R", 3, 2, 2)}),
                     code_points({fam("sym_schmidt", 3, 3, 3), random_spec("Sym", 3, 3, 3, 102), fam("alt_DG", 3, 2, 3),
                                  random_spec("Alt", 4, 3, 2, 103), fam("her_R", 3, 2, 3), random_spec("Her", 3, 3, 5, 104)}),
                     run_lem_int));
    s.push_back(make("thm-dual-quotient", "rho*(U) - rho_*(U) = dim(C^perp + X) - dim(C^perp(U^perp) + X)",
                     code_points({fam("sym_schmidt", 3, 1, 2), random_spec("Sym", 3, 2, 3, 111), fam("alt_DG", 3, 2, 2)}),
                     code_points({fam("sym_schmidt", 3, 3, 3), random_spec("Sym", 3, 3, 3, 112), fam("alt_DG", 3, 2, 3),
                                  fam("her_R", 3, 2, 3)}),
                     run_dual_quotient));
    s.push_back(make("cor-char2", "q even, Alt in C: M*[C] = M[C*]",
                     code_points({json{{"source", "alt_plus"}, {"n", 3}, {"q", 2}, {"extra", 1}, {"seed", 121}},
                                  json{{"source", "alt_plus"}, {"n", 3}, {"q", 2}, {"extra", 2}, {"seed", 122}}}),
                     code_points({json{{"source", "alt_plus"}, {"n", 4}, {"q", 2}, {"extra", 2}, {"seed", 123}}}),
                     run_cor_char2));
    return s;
}

}  // namespace

std::vector<SuiteSpec> make_suites() { return all_suites(); }

}  // namespace qpoly
