#include "qpoly/qpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qpoly {

LatticePtr lattice_for(const FieldPtr& F, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, LatticePtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(F->id(), n);
    auto it = cache.find(key);
    if (it != cache.end()) {
        // Same answer as a fresh build under the current budget.
        if (it->second->size() > subspace_budget()) {
            std::ostringstream os;
            os << "lattice budget exceeded: |L(F_" << F->size() << "^" << n << ")| = " << it->second->size() << " > "
               << subspace_budget();
            throw BudgetExceeded(os.str());
        }
        return it->second;
    }
    auto L = std::make_shared<const Lattice>(F, n);
    cache[key] = L;
    return L;
}

namespace {

bool leq(const Lattice& L, size_t a, size_t b) { return L.meet_index(a, b) == a; }

std::vector<Matrix> transposed(const std::vector<Matrix>& g) {
    std::vector<Matrix> out;
    for (const auto& M : g) out.push_back(M.transpose());
    return out;
}

QPolymatroid table_from_gens(const Code& C, const std::vector<Matrix>& gens, int ground, int r, const char* prov) {
    QPolymatroid M;
    M.L = lattice_for(C.amb.Fe, ground);
    M.r = r;
    M.provenance = prov;
    M.label = C.amb.name();
    M.rank.assign(M.L->size(), 0);
    if (C.dim() == 0) return M;
    for (size_t i = 1; i < M.L->size(); ++i) M.rank[i] = left_image_rank(C.amb, gens, M.L->at(i).matrix());
    return M;
}

}  // namespace

int column_rank(const Code& C, const Subspace& U) {
    if (U.dim == 0 || C.dim() == 0) return 0;
    return left_image_rank(C.amb, C.gens, U.matrix());
}

int row_rank(const Code& C, const Subspace& U) {
    if (U.dim == 0 || C.dim() == 0) return 0;
    return left_image_rank(C.amb, transposed(C.gens), U.matrix());
}

QPolymatroid polymatroid_from_code_columns(const Code& C) {
    return table_from_gens(C, C.gens, C.amb.m, C.amb.ell * C.amb.n, "from-code-columns");
}

QPolymatroid polymatroid_from_code_rows(const Code& C) {
    return table_from_gens(C, transposed(C.gens), C.amb.n, C.amb.ell * C.amb.m, "from-code-rows");
}

QPolymatroid polymatroid_of_shortened_ambient(Kind kind, int n, int q, const Subspace& V) {
    Ambient a = Ambient::make(kind, n, q);
    QPolymatroid M;
    M.L = lattice_for(a.Fe, n);
    M.r = a.ell * n;
    M.provenance = "closed-form";
    M.label = a.name();
    const Lattice& L = *M.L;
    const size_t vi = L.index_of(V);
    const int v = V.dim;
    M.rank.resize(L.size());
    for (size_t i = 0; i < L.size(); ++i) {
        const int w = L.at(L.meet_index(vi, L.complement_index(i))).dim;
        switch (kind) {
            case Kind::Alt: M.rank[i] = v * (v - 1) / 2 - w * (w - 1) / 2; break;
            case Kind::Sym: M.rank[i] = v * (v + 1) / 2 - w * (w + 1) / 2; break;
            case Kind::Her: M.rank[i] = (v - w) * (v + w); break;
            case Kind::Full: throw std::invalid_argument("closed form needs Alt/Sym/Her");
        }
    }
    return M;
}

AxiomReport check_axioms(const QPolymatroid& M, const Rational& r, std::uint64_t max_pairs) {
    const Lattice& L = *M.L;
    const size_t N = L.size();
    if (M.rank.size() != N) throw std::invalid_argument("rank table is incomplete");
    AxiomReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        ++rep.violations;
        if (rep.examples.size() < 8) rep.examples.push_back(msg);
    };
    for (size_t i = 0; i < N; ++i) {
        const int d = L.at(i).dim;
        const int x = M.rank[i];
        if (d > 0) rep.minimal_valid_r = std::max(rep.minimal_valid_r, Rational(x, d));
        if (x < 0 || Rational(x) > r * d)
            fail("R1 at " + subspace_string(L.at(i)) + ": rho=" + std::to_string(x) + ", dim=" + std::to_string(d));
    }
    for (size_t i = 0; i < N; ++i)
        for (auto h : L.hyperplanes(i))
            if (M.rank[h] > M.rank[i]) fail("R2 at " + subspace_string(L.at(h)) + " < " + subspace_string(L.at(i)));
    const std::uint64_t pairs = static_cast<std::uint64_t>(N) * (N - 1) / 2;
    if (pairs <= max_pairs) {
        rep.r3_method = "all-pairs";
        for (size_t i = 0; i < N; ++i)
            for (size_t j = i + 1; j < N; ++j) {
                const size_t s = L.sum_index(i, j), m = L.meet_index(i, j);
                if (M.rank[s] + M.rank[m] > M.rank[i] + M.rank[j])
                    fail("R3 at " + subspace_string(L.at(i)) + " , " + subspace_string(L.at(j)));
            }
    } else {
        rep.r3_method = "diamonds";
        std::vector<std::vector<std::uint32_t>> hs(N);
        for (size_t i = 0; i < N; ++i) {
            hs[i] = L.hyperplanes(i);
            std::sort(hs[i].begin(), hs[i].end());
        }
        std::vector<std::uint32_t> common;
        for (size_t z = 0; z < N; ++z) {
            const auto& h = hs[z];
            for (size_t a = 0; a < h.size(); ++a)
                for (size_t b = a + 1; b < h.size(); ++b) {
                    common.clear();
                    std::set_intersection(hs[h[a]].begin(), hs[h[a]].end(), hs[h[b]].begin(), hs[h[b]].end(),
                                          std::back_inserter(common));
                    if (common.size() != 1) throw std::logic_error("diamond without a unique bottom");
                    if (M.rank[z] + M.rank[common[0]] > M.rank[h[a]] + M.rank[h[b]])
                        fail("R3 at " + subspace_string(L.at(h[a])) + " , " + subspace_string(L.at(h[b])));
                }
        }
    }
    return rep;
}

QPolymatroid dual_polymatroid(const QPolymatroid& M) {
    QPolymatroid D = M;
    D.provenance = "derived";
    const Lattice& L = *M.L;
    const int top = M.full_rank();
    for (size_t i = 0; i < L.size(); ++i) D.rank[i] = M.r * L.at(i).dim - top + M.rank[L.complement_index(i)];
    return D;
}

Minor minor(const QPolymatroid& M, const Subspace& X, const Subspace& Y) {
    const Lattice& L = *M.L;
    const size_t xi = L.index_of(X), yi = L.index_of(Y);
    if (!leq(L, xi, yi)) throw std::invalid_argument("minor needs X <= Y");
    Minor out;
    out.L = M.L;
    for (size_t t = 0; t < L.size(); ++t)
        if (leq(L, xi, t) && leq(L, t, yi)) {
            out.members.push_back(static_cast<std::uint32_t>(t));
            out.values.push_back(M.rank[t] - M.rank[xi]);
        }
    return out;
}

Minor restriction(const QPolymatroid& M, const Subspace& Y) { return minor(M, Subspace::zero(M.L->field(), M.n()), Y); }

Minor contraction(const QPolymatroid& M, const Subspace& X) { return minor(M, X, Subspace::full(M.L->field(), M.n())); }

Minor deletion(const QPolymatroid& M, const Subspace& T) { return restriction(M, complement(T)); }

QuotientTables quotient_rank_functions(const Code& C, const Code& D) {
    if (!C.amb.same_as(D.amb)) throw std::invalid_argument("ambient mismatch");
    Code CD = code_meet(C, D);
    QPolymatroid a = polymatroid_from_code_columns(C), b = polymatroid_from_code_columns(CD);
    const Lattice& L = *a.L;
    QuotientTables out;
    out.difference.resize(L.size());
    out.direct.resize(L.size());
    const int top = code_sum(C, D).dim();
    for (size_t i = 0; i < L.size(); ++i) {
        out.difference[i] = a.rank[i] - b.rank[i];
        Code S = shorten(C, L.at(L.complement_index(i)));
        out.direct[i] = top - code_sum(S, D).dim();
    }
    return out;
}

std::vector<int> x_weights(const Code& C) {
    const int k = C.dim();
    std::vector<int> d(k, 1 << 30);
    if (k == 0) return {};
    QPolymatroid M = polymatroid_from_code_columns(C);
    const Lattice& L = *M.L;
    for (size_t i = 0; i < L.size(); ++i) {
        const int u = L.at(i).dim;
        const int cu = k - M.rank[L.complement_index(i)];
        const int xu = C.amb.kind == Kind::Full ? C.amb.ell * u * C.amb.n : shortened_dim_formula(C.amb.kind, u);
        for (int j = 1; j <= cu; ++j) d[j - 1] = std::min(d[j - 1], xu);
    }
    return d;
}

std::string compare_name(CompareResult c) {
    switch (c) {
        case CompareResult::Equal: return "equal";
        case CompareResult::EqualAfter: return "equal_after";
        case CompareResult::ProfileEqual: return "profile_equal";
        case CompareResult::Distinct: return "distinct";
    }
    return "?";
}

CompareResult compare(const QPolymatroid& M1, const QPolymatroid& M2, const std::vector<std::uint32_t>* phi) {
    if (M1.L->field()->id() != M2.L->field()->id() || M1.n() != M2.n())
        throw std::invalid_argument("polymatroids over different ground spaces");
    if (M1.rank == M2.rank) return CompareResult::Equal;
    const Lattice& L = *M1.L;
    if (phi) {
        bool ok = true;
        for (size_t i = 0; i < L.size() && ok; ++i) ok = M1.rank[i] == M2.rank[(*phi)[i]];
        if (ok) return CompareResult::EqualAfter;
    }
    std::map<std::pair<int, int>, long> prof;
    for (size_t i = 0; i < L.size(); ++i) {
        ++prof[{L.at(i).dim, M1.rank[i]}];
        --prof[{L.at(i).dim, M2.rank[i]}];
    }
    for (const auto& [k, v] : prof)
        if (v) return CompareResult::Distinct;
    return CompareResult::ProfileEqual;
}

std::vector<std::uint32_t> sigma_map(const Lattice& L) {
    std::vector<std::uint32_t> m(L.size());
    for (size_t i = 0; i < L.size(); ++i) m[i] = static_cast<std::uint32_t>(L.index_of(sigma_image(L.at(i), 1)));
    return m;
}

Subspace embed_subspace(const Subspace& V, int n, bool tail) {
    if (V.n > n) throw std::invalid_argument("cannot embed into a smaller space");
    std::vector<std::vector<Elem>> rows;
    const int off = tail ? n - V.n : 0;
    for (const auto& r : V.rows()) {
        std::vector<Elem> v(n, 0);
        for (int j = 0; j < V.n; ++j) v[off + j] = r[j];
        rows.push_back(std::move(v));
    }
    return Subspace::span(V.F, n, rows);
}

std::string subspace_string(const Subspace& U) {
    if (U.dim == 0) return "0";
    const bool small = U.F->size() <= 10;
    std::string s;
    for (int i = 0; i < U.dim; ++i) {
        if (i) s += '|';
        for (int j = 0; j < U.n; ++j) {
            if (!small && j) s += '.';
            s += std::to_string(U.basis[static_cast<size_t>(i) * U.n + j]);
        }
    }
    return s;
}

std::string rank_table_csv(const QPolymatroid& M) {
    std::ostringstream os;
    os << "basis,dim,rank\n";
    for (size_t i = 0; i < M.L->size(); ++i) os << subspace_string(M.L->at(i)) << ',' << M.L->at(i).dim << ',' << M.rank[i] << '\n';
    return os.str();
}

nlohmann::json polymatroid_header(const QPolymatroid& M, const std::string& kind) {
    auto rep = check_axioms(M, Rational(M.r));
    nlohmann::json j;
    j["kind"] = kind;
    j["n"] = M.n();
    j["q"] = M.L->field()->p();
    j["ell"] = M.L->field()->k();
    j["r_declared"] = M.r;
    j["r_minimal"] = rep.minimal_valid_r.str();
    j["axioms_ok"] = rep.ok;
    j["provenance"] = M.provenance;
    return j;
}

}  // namespace qpoly
