#include "qpoly/codes.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

namespace qpoly {

std::uint64_t codeword_budget() {
    if (const char* env = std::getenv("QPOLY_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultCodewordBudget;
}

namespace {

std::vector<FpVec> unit_rows(int d) {
    std::vector<FpVec> out;
    for (int i = 0; i < d; ++i) {
        FpVec v(d, 0);
        v[i] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

FpVec combine(int p, const std::vector<FpVec>& basis, const FpVec& x, int len) {
    FpVec v(len, 0);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < len; ++j) v[j] = static_cast<std::uint8_t>((v[j] + x[i] * basis[i][j]) % p);
    }
    return v;
}

void check_budget(const Code& C, std::uint64_t budget) {
    if (!budget) budget = codeword_budget();
    BigInt total = boost::multiprecision::pow(BigInt(C.amb.q), static_cast<unsigned>(C.dim()));
    if (total > budget) {
        std::ostringstream os;
        os << "codeword enumeration budget exceeded: " << C.amb.q << "^" << C.dim() << " = " << total << " > " << budget;
        throw BudgetExceeded(os.str());
    }
}

int rank_bits(std::uint32_t* rows, int m) {
    int r = 0;
    for (int i = 0; i < m; ++i) {
        std::uint32_t x = rows[i];
        for (int j = 0; j < r; ++j) x = std::min(x, x ^ rows[j]);
        if (x) rows[r++] = x;
    }
    return r;
}

// Visits every nonzero codeword's rank in modular Gray-code order; fn returns
// false to stop early.
void for_each_rank(const Code& C, std::uint64_t budget, const std::function<bool(int)>& fn) {
    check_budget(C, budget);
    const int k = C.dim();
    if (k == 0) return;
    const int q = C.amb.q;
    const int R = C.amb.m, Cc = C.amb.n;
    const Field& E = *C.amb.Fe;
    std::vector<int> ctr(k + 1, 0);
    if (E.size() == 2) {
        std::vector<std::vector<std::uint32_t>> g(k, std::vector<std::uint32_t>(R, 0));
        for (int t = 0; t < k; ++t)
            for (int i = 0; i < R; ++i)
                for (int j = 0; j < Cc; ++j)
                    if (C.gens[t].at(i, j)) g[t][i] |= 1u << j;
        std::vector<std::uint32_t> cur(R, 0), tmp(R);
        while (true) {
            int j = 0;
            while (j < k && ctr[j] == q - 1) ctr[j++] = 0;
            if (j == k) break;
            ++ctr[j];
            for (int i = 0; i < R; ++i) cur[i] ^= g[j][i];
            tmp = cur;
            if (!fn(rank_bits(tmp.data(), R))) return;
        }
        return;
    }
    std::vector<Elem> cur(static_cast<size_t>(R) * Cc, 0), tmp;
    while (true) {
        int j = 0;
        while (j < k && ctr[j] == q - 1) ctr[j++] = 0;
        if (j == k) break;
        ++ctr[j];
        const auto& g = C.gens[j].a;
        for (size_t t = 0; t < cur.size(); ++t) cur[t] = E.add(cur[t], g[t]);
        tmp = cur;
        if (!fn(rank_inplace(E, tmp.data(), R, Cc))) return;
    }
}

}  // namespace

bool Code::contains(const FpVec& coords) const {
    FpRref r{basis, pivots};
    std::vector<int> out;
    return fp_coords(amb.q, r, coords, out);
}

bool Code::contains(const Code& o) const {
    for (const auto& v : o.basis)
        if (!contains(v)) return false;
    return true;
}

Code code_from_coords(const Ambient& a, const std::vector<FpVec>& rows) {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != a.dim()) throw std::invalid_argument("coordinate vector length mismatch");
    auto rr = fp_rref(a.q, rows, a.dim());
    Code C;
    C.amb = a;
    C.basis = std::move(rr.rows);
    C.pivots = std::move(rr.pivots);
    for (const auto& b : C.basis) C.gens.push_back(from_coords(a, b));
    C.params.q = a.q;
    C.params.n = a.n;
    return C;
}

Code code_from_matrices(const Ambient& a, const std::vector<Matrix>& mats) {
    std::vector<FpVec> rows;
    for (const auto& M : mats) {
        if (!membership(a, M)) throw std::invalid_argument("generator is not in " + a.name());
        rows.push_back(to_coords(a, M));
    }
    return code_from_coords(a, rows);
}

Code whole_space(const Ambient& a) { return code_from_coords(a, unit_rows(a.dim())); }
Code zero_code(const Ambient& a) { return code_from_coords(a, {}); }

Code code_sum(const Code& C, const Code& D) {
    if (!C.amb.same_as(D.amb)) throw std::invalid_argument("ambient mismatch");
    return code_from_coords(C.amb, fp_sum(C.amb.q, C.basis, D.basis, C.amb.dim()));
}

Code code_meet(const Code& C, const Code& D) {
    if (!C.amb.same_as(D.amb)) throw std::invalid_argument("ambient mismatch");
    if (C.dim() == 0 || D.dim() == 0) return zero_code(C.amb);
    return code_from_coords(C.amb, fp_intersection(C.amb.q, C.basis, D.basis, C.amb.dim()));
}

int min_distance(const Code& C, std::uint64_t budget) {
    if (C.dim() == 0) throw std::invalid_argument("minimum distance of the zero code");
    int best = 1 << 30;
    for_each_rank(C, budget, [&](int r) {
        best = std::min(best, r);
        return best > 1;
    });
    return best;
}

std::map<int, std::uint64_t> weight_distribution(const Code& C, std::uint64_t budget) {
    std::map<int, std::uint64_t> w;
    w[0] = 1;
    for_each_rank(C, budget, [&](int r) {
        ++w[r];
        return true;
    });
    return w;
}

int max_rank(const Code& C, std::uint64_t budget) {
    int best = 0;
    const int top = std::min(C.amb.m, C.amb.n);
    for_each_rank(C, budget, [&](int r) {
        best = std::max(best, r);
        return best < top;
    });
    return best;
}

Code orthogonal_in_ambient(const Code& C) {
    const Ambient& a = C.amb;
    const int d = a.dim();
    if (C.dim() == 0) return whole_space(a);
    auto G = form_gram(a);
    std::vector<FpVec> rows;
    for (const auto& b : C.basis) {
        FpVec r(d, 0);
        for (int j = 0; j < d; ++j) {
            int acc = 0;
            for (int i = 0; i < d; ++i) acc += b[i] * G[i][j];
            r[j] = static_cast<std::uint8_t>(acc % a.q);
        }
        rows.push_back(std::move(r));
    }
    return code_from_coords(a, fp_kernel(a.q, rows, d));
}

bool form_is_degenerate(const Ambient& a) {
    auto G = form_gram(a);
    std::vector<FpVec> rows;
    for (auto& r : G) rows.emplace_back(r.begin(), r.end());
    return fp_rank(a.q, rows, a.dim()) != a.dim();
}

Code dual_star(const Code& C) {
    Code D = orthogonal_in_ambient(C);
    if (D.dim() + C.dim() != C.amb.dim())
        throw std::logic_error("size relation failed: form is degenerate on " + C.amb.name());
    return D;
}

Code as_full(const Code& C) {
    Ambient f = Ambient::full(C.amb.m, C.amb.n, C.amb.q, C.amb.ell);
    std::vector<FpVec> rows;
    for (const auto& M : C.gens) rows.push_back(flatten(f, M));
    return code_from_coords(f, rows);
}

Code delsarte_dual(const Code& C) { return dual_star(as_full(C)); }

Code shorten(const Code& C, const Subspace& U) {
    if (U.n != C.amb.m) throw std::invalid_argument("subspace dimension does not match row count");
    if (U.dim == U.n || C.dim() == 0) return C;
    Subspace W = complement(U);
    auto li = left_image(C.amb, C.gens, W.matrix(), true);
    std::vector<FpVec> rows;
    for (const auto& x : li.kernel) rows.push_back(combine(C.amb.q, C.basis, x, C.amb.dim()));
    Code S = code_from_coords(C.amb, rows);
    S.params = C.params;
    return S;
}

Code shorten_rows(const Code& C, const Subspace& V) {
    if (V.n != C.amb.n) throw std::invalid_argument("subspace dimension does not match column count");
    if (V.dim == V.n || C.dim() == 0) return C;
    Subspace W = complement(V);
    std::vector<Matrix> tr;
    for (const auto& M : C.gens) tr.push_back(M.transpose());
    auto li = left_image(C.amb, tr, W.matrix(), true);
    std::vector<FpVec> rows;
    for (const auto& x : li.kernel) rows.push_back(combine(C.amb.q, C.basis, x, C.amb.dim()));
    return code_from_coords(C.amb, rows);
}

Code puncture(const Code& C, int u, const Matrix& A) {
    const int m = C.amb.m;
    if (u < 1 || u > m - 1) throw std::invalid_argument("puncturing needs 1 <= u <= m-1");
    if (A.rows != m || A.cols != m || rank(A) != m) throw std::domain_error("puncturing matrix must be invertible m x m");
    Ambient out = Ambient::full(m - u, C.amb.n, C.amb.q, C.amb.ell);
    std::vector<Matrix> mats;
    for (const auto& M : C.gens) {
        Matrix P = A * M;
        Matrix T(C.amb.Fe, m - u, C.amb.n);
        for (int i = u; i < m; ++i)
            for (int j = 0; j < C.amb.n; ++j) T.at(i - u, j) = P.at(i, j);
        mats.push_back(T);
    }
    return code_from_matrices(out, mats);
}

Code corner_delete(const Code& C, int u) {
    const Ambient& a = C.amb;
    if (u < 1 || u > std::min(a.m, a.n) - 1) throw std::invalid_argument("corner deletion needs 1 <= u <= n-1");
    Ambient out = a.kind == Kind::Full ? Ambient::full(u, u, a.q, a.ell) : Ambient::make(a.kind, u, a.q);
    std::vector<Matrix> mats;
    for (const auto& M : C.gens) {
        Matrix T(a.Fe, u, u);
        for (int i = 0; i < u; ++i)
            for (int j = 0; j < u; ++j) T.at(i, j) = M.at(i, j);
        if (!membership(out, T)) throw std::logic_error("corner deletion left the ambient kind");
        mats.push_back(T);
    }
    return code_from_matrices(out, mats);
}

Code apply_isometry(const Code& C, int a, const Matrix& P, int tau_exp, const Matrix& R) {
    const Ambient& amb = C.amb;
    if (!R.a.empty() && !R.is_zero()) throw std::invalid_argument("translation R must be zero for linear codes");
    if (a % amb.q == 0) throw std::invalid_argument("scalar a must be nonzero");
    if (amb.m != amb.n) throw std::invalid_argument("isometries are defined for square ambients");
    if (P.rows != amb.n || P.cols != amb.n || rank(P) != amb.n) throw std::domain_error("P must be invertible");
    Matrix Pst = P.frob(amb.kind == Kind::Her ? 1 : 0).transpose();
    Elem sc = static_cast<Elem>(((a % amb.q) + amb.q) % amb.q);
    std::vector<Matrix> mats;
    for (const auto& M : C.gens) mats.push_back((P * M.frob(tau_exp) * Pst).scaled(sc));
    return code_from_matrices(amb, mats);
}

Code transpose_code(const Code& C) {
    const Ambient& a = C.amb;
    Ambient out = a.kind == Kind::Full ? Ambient::full(a.n, a.m, a.q, a.ell) : a;
    std::vector<Matrix> mats;
    for (const auto& M : C.gens) mats.push_back(M.transpose());
    return code_from_matrices(out, mats);
}

// ---- families ----

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {"alt_DG",       "sym_schmidt", "sym_LTZ_eta", "sym_tang_zhou",
                                                   "her_R",        "her_H",       "her_E",       "her_LTZ_gamma"};
    return names;
}

Kind family_kind(const std::string& f) {
    if (f == "alt_DG") return Kind::Alt;
    if (f == "sym_schmidt" || f == "sym_LTZ_eta" || f == "sym_tang_zhou") return Kind::Sym;
    if (f == "her_R" || f == "her_H" || f == "her_E" || f == "her_LTZ_gamma") return Kind::Her;
    throw ParamError("unknown family: " + f);
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ParamError(msg);
}

// Normalises n for the families where it is derived from k.
FamilyParams normalise(FamilyParams p) {
    family_kind(p.family);
    require(is_prime(p.q), "q must be prime");
    if (p.family == "sym_LTZ_eta" || p.family == "sym_tang_zhou") {
        if (p.k == 0 && p.n > 0 && p.n % 2 == 0) p.k = p.n / 2;
        require(p.k >= 2, p.family + " requires k >= 2");
        require(p.n == 0 || p.n == 2 * p.k, p.family + " requires n = 2k");
        p.n = 2 * p.k;
    }
    if (p.family == "alt_DG") {
        if (p.d == 0) p.d = 2 * p.e;
        if (p.e == 0) p.e = p.d / 2;
        require(p.d == 2 * p.e, "alt_DG requires d = 2e");
    }
    if (p.family == "sym_LTZ_eta" || p.family == "her_R" || p.family == "her_LTZ_gamma") {
        require(p.d == 0 || p.d == 2, p.family + " has d = 2");
        p.d = 2;
    }
    if (p.family == "sym_tang_zhou") {
        require(p.d == 0 || p.d == p.n - 2, "sym_tang_zhou has d = n - 2");
        p.d = p.n - 2;
    }
    return p;
}

void validate(const FamilyParams& p) {
    const std::string& f = p.family;
    const int n = p.n, d = p.d, s = p.s;
    require(n >= 1, "n must be positive");
    if (f == "alt_DG") {
        require(n % 2 == 1 && n >= 3, "alt_DG requires n odd, n >= 3");
        require(p.e >= 1 && p.e <= (n - 1) / 2, "alt_DG requires 1 <= e <= (n-1)/2");
        require(s >= 1 && s <= n && std::gcd(s, n) == 1, "alt_DG requires 1 <= s <= n and gcd(s,n) = 1");
    } else if (f == "sym_schmidt") {
        require(d >= 1 && d <= n, "sym_schmidt requires 1 <= d <= n");
        require((n - d) % 2 == 0, "sym_schmidt requires n - d even");
        require(s >= 1 && s <= n && std::gcd(s, n) == 1, "sym_schmidt requires 1 <= s <= n and gcd(s,n) = 1");
    } else if (f == "sym_LTZ_eta") {
        require(p.q % 2 == 1, "sym_LTZ_eta requires q odd");
        require(std::gcd(s, n) == 1, "sym_LTZ_eta requires gcd(s,n) = 1");
    } else if (f == "sym_tang_zhou") {
        require(p.k >= 3 && p.k <= 5, "sym_tang_zhou requires k in {3,4,5}");
        require(p.q % 2 == 1, "sym_tang_zhou requires q odd (eta a non-square)");
        require(std::gcd(s, n) == 1, "sym_tang_zhou requires gcd(s,n) = 1");
    } else if (f == "her_R") {
        require(n >= 2, "her_R requires n >= 2");
    } else if (f == "her_H") {
        require((n + d) % 2 == 1, "her_H requires n and d of opposite parity");
        require(d >= 1 && d <= n - 1, "her_H requires 1 <= d <= n-1");
        require(std::gcd(s, 2 * n) == 1, "her_H requires gcd(2n,s) = 1");
    } else if (f == "her_E") {
        require(n % 2 == 1 && d % 2 == 1, "her_E requires n and d odd");
        require(d >= 1 && d <= n, "her_E requires 1 <= d <= n");
        require(std::gcd(s, 2 * n) == 1, "her_E requires gcd(2n,s) = 1");
    } else if (f == "her_LTZ_gamma") {
        require(p.q % 2 == 1 && n % 2 == 1 && n >= 3, "her_LTZ_gamma requires q and n odd, n >= 3");
        require(std::gcd(s, 2 * n) == 1, "her_LTZ_gamma requires gcd(2n,s) = 1");
    }
}

std::vector<Elem> full_basis(const FieldPtr& B) {
    std::vector<Elem> out;
    Elem b = 1;
    for (int t = 0; t < B->k(); ++t) {
        out.push_back(b);
        b *= static_cast<Elem>(B->p());
    }
    return out;
}

struct Slot {
    std::vector<Elem> dom;
    std::function<void(LinPoly&, Elem)> put;
};

}  // namespace

int expected_dimension(const FamilyParams& p0) {
    FamilyParams p = normalise(p0);
    const int n = p.n;
    const std::string& f = p.family;
    if (f == "alt_DG") return n * ((n - 1) / 2 - p.e + 1);
    if (f == "sym_schmidt") return n * ((n - p.d) / 2 + 1);
    if (f == "sym_LTZ_eta") return n * p.k;
    if (f == "sym_tang_zhou") return 2 * n;
    if (f == "her_R" || f == "her_LTZ_gamma") return n * (n - 1);
    return n * (n - p.d + 1);
}

int advertised_distance(const FamilyParams& p) { return normalise(p).d; }

Elem find_special_element(const std::string& cond, const FieldPtr& F) {
    const std::uint64_t q = F->p();
    const int k = F->k();
    if (q == 2) throw ParamError(cond + " requires odd q");
    std::uint64_t N = 0;
    auto geom = [&](int m) {  // (q^m - 1)/(q - 1)
        std::uint64_t s = 0, t = 1;
        for (int i = 0; i < m; ++i) {
            s += t;
            t *= q;
        }
        return s;
    };
    if (cond == "eta_TZ")
        N = 1;
    else if (cond == "eta_LTZ")
        N = geom(k - 1);
    else if (cond == "gamma_LTZ")
        N = geom(k);  // norm to F_q; F is F_{q^{2n}} here
    else
        throw ParamError("unknown special-element condition: " + cond);
    for (Elem x = 1; x < F->size(); ++x) {
        Elem y = F->pow(x, N);
        if (cond == "gamma_LTZ") {
            if (y >= q) throw std::logic_error("norm left the prime field");
            if (!Field::get(static_cast<int>(q), 1)->is_square(y)) return x;
        } else if (y && !F->is_square(y)) {
            return x;
        }
    }
    throw std::logic_error("no special element found");
}

Code construct_family(const FamilyParams& p0) {
    FamilyParams p = normalise(p0);
    validate(p);
    const std::string& f = p.family;
    const Kind kind = family_kind(f);
    const int n = p.n, q = p.q, s = p.s;
    Ambient amb = Ambient::make(kind, n, q);
    if (f == "her_R") {
        std::vector<Matrix> mats;
        for (const auto& M : ambient_basis(amb)) {
            bool diag = false;
            for (int i = 0; i < n; ++i) diag = diag || M.at(i, i);
            if (!diag) mats.push_back(M);
        }
        Code C = code_from_matrices(amb, mats);
        C.params = p;
        return C;
    }
    const int ell = kind == Kind::Her ? 2 : 1;
    LinPoly z = LinPoly::zero(q, ell, n, s);
    const FieldPtr B = z.B;
    const Field& F = *B;
    auto big = full_basis(B);
    std::vector<Slot> slots;
    if (f == "alt_DG") {
        for (int i = p.e; i <= (n - 1) / 2; ++i)
            slots.push_back({big, [=, &F](LinPoly& g, Elem b) {
                                 g.add_term(i, b);
                                 g.add_power_term(F.neg(b), static_cast<long>(s) * (n - i));
                             }});
    } else if (f == "sym_schmidt") {
        slots.push_back({big, [](LinPoly& g, Elem b) { g.add_term(0, b); }});
        for (int i = 1; i <= (n - p.d) / 2; ++i)
            slots.push_back({big, [=](LinPoly& g, Elem b) {
                                 g.add_term(i, b);
                                 g.add_power_term(b, static_cast<long>(s) * (n - i));
                             }});
    } else if (f == "sym_LTZ_eta") {
        const int k = p.k;
        Elem eta = Embedding::get(Field::get(q, n), B).embed(find_special_element("eta_LTZ", Field::get(q, n)));
        auto sub = subfield_basis(B, q, k);
        slots.push_back({big, [](LinPoly& g, Elem b) { g.add_term(0, b); }});
        for (int j = 1; j <= k - 2; ++j)
            slots.push_back({big, [=](LinPoly& g, Elem a) {
                                 g.add_term(j, a);
                                 g.add_power_term(a, static_cast<long>(s) * (2 * k - j));
                             }});
        slots.push_back({sub, [=, &F](LinPoly& g, Elem b) {
                             g.add_term(k - 1, F.mul(eta, b));
                             g.add_term(k + 1, F.mul(F.frob(eta, static_cast<long>(s) * (k + 1)), F.frob(b, s)));
                         }});
        slots.push_back({sub, [=](LinPoly& g, Elem a) { g.add_term(k, a); }});
    } else if (f == "sym_tang_zhou") {
        const int k = p.k;
        Elem eta = find_special_element("eta_TZ", B);
        auto sub = subfield_basis(B, q, k);
        slots.push_back({sub, [=](LinPoly& g, Elem b) { g.add_term(k, b); }});
        slots.push_back({big, [=](LinPoly& g, Elem b) {
                             g.add_term(k - 1, b);
                             g.add_power_term(b, static_cast<long>(s) * (k + 1));
                         }});
        slots.push_back({sub, [=, &F](LinPoly& g, Elem b) {
                             Elem c = F.mul(eta, b);
                             g.add_term(k - 2, c);
                             g.add_power_term(c, static_cast<long>(s) * (k + 2));
                         }});
    } else if (f == "her_H") {
        for (int j = 1; j <= (n - p.d + 1) / 2; ++j)
            slots.push_back({big, [=, &F](LinPoly& g, Elem b) {
                                 g.add_power_term(b, static_cast<long>(s) * (2 * n - 2 * j + 2));
                                 g.add_term(j, F.frob(b, s));
                             }});
    } else if (f == "her_E") {
        auto half = subfield_basis(B, q, n);
        slots.push_back({half, [=](LinPoly& g, Elem b) { g.add_power_term(b, static_cast<long>(s) * (n + 1)); }});
        for (int j = 1; j <= (n - p.d) / 2; ++j)
            slots.push_back({big, [=, &F](LinPoly& g, Elem b) {
                                 g.add_power_term(b, static_cast<long>(s) * (n + 2 * j + 1));
                                 g.add_term((n - 2 * j + 1) / 2, F.frob(b, s));
                             }});
    } else if (f == "her_LTZ_gamma") {
        Elem gamma = find_special_element("gamma_LTZ", B);
        auto half = subfield_basis(B, q, n);
        for (int i = 1; i <= (n - 3) / 2; ++i)
            slots.push_back({big, [=, &F](LinPoly& g, Elem c) {
                                 g.add_term(i, c);
                                 g.add_term(n - i + 1, F.frob(c, static_cast<long>(s) * (2 * n - 2 * i + 1)));
                             }});
        slots.push_back({half, [=](LinPoly& g, Elem b) { g.add_term((n + 1) / 2, b); }});
        slots.push_back({half, [=, &F](LinPoly& g, Elem a) {
                             Elem c = F.mul(a, gamma);
                             g.add_term((n - 1) / 2, c);
                             g.add_term((n + 3) / 2, F.frob(c, static_cast<long>(s) * (n + 2)));
                         }});
    }
    std::vector<Matrix> mats;
    for (const auto& sl : slots)
        for (Elem b : sl.dom) {
            LinPoly g = z;
            sl.put(g, b);
            mats.push_back(to_gram(kind, g));
        }
    Code C = code_from_matrices(amb, mats);
    C.params = p;
    return C;
}

// ---- bounds ----

Rational bound_value(const std::string& name, int n, int d, int q, int m) {
    (void)q;
    if (n < 1 || d < 1) throw ParamError("bound parameters must be positive");
    const int h = n / 2;
    if (name == "singleton") {
        if (m == 0) m = n;
        return Rational(std::max(m, n) * (std::min(m, n) - d + 1));
    }
    if (name == "alt") {
        if (d % 2) throw ParamError("alternating bound needs d even");
        if (h == 0) throw ParamError("alternating bound needs n >= 2");
        return Rational(n * (n - 1), 2 * h) * (h - d / 2 + 1);
    }
    if (name == "sym") {
        if (d % 2) {
            const int delta = (d + 1) / 2;
            return n % 2 ? Rational(n * ((n + 1) / 2 - delta + 1)) : Rational((n + 1) * (n / 2 - delta + 1));
        }
        const int delta = d / 2;
        return n % 2 ? Rational((n + 1) * ((n - 1) / 2 - delta + 1)) : Rational(n * (n / 2 - delta + 1));
    }
    if (name == "her") return Rational(n * (n - d + 1));
    if (name == "dual_alt") return Rational(std::min(2 * h, 2 * h - d + 4));
    if (name == "dual_alt_linear_full") {
        if (d != n || n % 2) throw ParamError("dual_alt_linear_full needs d = n even");
        return Rational(2);
    }
    if (name == "dual_sym_odd") {
        if (d % 2 == 0 || d < 3) throw ParamError("dual_sym_odd needs d = 2 delta - 1, delta > 1");
        return Rational(n - d + 3);
    }
    if (name == "dual_sym_odd_maximal") {
        if (d % 2 == 0 || d < 3) throw ParamError("dual_sym_odd_maximal needs d = 2 delta - 1, delta > 1");
        return Rational(n % 2 ? n - d + 3 : n - d + 2);
    }
    if (name == "dual_sym_even") {
        if (d % 2) throw ParamError("dual_sym_even needs d even");
        return Rational(n - d + 2);
    }
    if (name == "dual_her" || name == "dual_her_odd_maximum") {
        if (d < 2) throw ParamError("Hermitian dual-distance bound needs d >= 2");
        if (name == "dual_her_odd_maximum" && d % 2 == 0) throw ParamError("dual_her_odd_maximum needs d odd");
        return Rational(n - d + 2);
    }
    throw ParamError("unknown bound: " + name);
}

BoundReport family_bound(const FamilyParams& p0, const Code& C) {
    FamilyParams p = normalise(p0);
    BoundReport r;
    r.kind = family_kind(p.family);
    r.n = p.n;
    r.d = p.d;
    r.q = p.q;
    r.name = r.kind == Kind::Alt ? "alt" : r.kind == Kind::Sym ? "sym" : "her";
    r.bound = bound_value(r.name, p.n, p.d, p.q);
    r.code_log = C.dim();
    r.attained = r.bound == Rational(C.dim());
    return r;
}

// ---- serialization ----

nlohmann::json code_to_json(const Code& C) {
    nlohmann::json j;
    j["kind"] = kind_name(C.amb.kind);
    j["m"] = C.amb.m;
    j["n"] = C.amb.n;
    j["q"] = C.amb.q;
    j["ell"] = C.amb.ell;
    j["s"] = C.params.s;
    j["family"] = C.params.family;
    j["params"] = {{"d", C.params.d}, {"e", C.params.e}, {"k", C.params.k}};
    j["dim"] = C.dim();
    auto basis = nlohmann::json::array();
    auto gens = nlohmann::json::array();
    for (size_t i = 0; i < C.basis.size(); ++i) {
        basis.push_back(std::vector<int>(C.basis[i].begin(), C.basis[i].end()));
        FpVec fl = flatten(C.amb, C.gens[i]);
        gens.push_back(std::vector<int>(fl.begin(), fl.end()));
    }
    j["basis"] = basis;
    j["generators"] = gens;
    return j;
}

Code code_from_json(const nlohmann::json& j) {
    Kind k = kind_from_name(j.at("kind").get<std::string>());
    const int m = j.at("m").get<int>(), n = j.at("n").get<int>(), q = j.at("q").get<int>();
    Ambient a = k == Kind::Full ? Ambient::full(m, n, q, j.at("ell").get<int>()) : Ambient::make(k, n, q);
    std::vector<FpVec> rows;
    for (const auto& r : j.at("basis")) {
        auto v = r.get<std::vector<int>>();
        FpVec f(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0 || v[i] >= q) throw std::invalid_argument("coordinate out of range");
            f[i] = static_cast<std::uint8_t>(v[i]);
        }
        rows.push_back(std::move(f));
    }
    Code C = code_from_coords(a, rows);
    if (j.contains("generators")) {
        const auto& g = j.at("generators");
        if (g.size() != C.gens.size()) throw std::invalid_argument("generator count does not match basis");
        for (size_t i = 0; i < C.gens.size(); ++i) {
            FpVec fl = flatten(a, C.gens[i]);
            if (g[i].get<std::vector<int>>() != std::vector<int>(fl.begin(), fl.end()))
                throw std::invalid_argument("generator matrices do not match basis");
        }
    }
    C.params.family = j.value("family", std::string());
    C.params.s = j.value("s", 1);
    C.params.q = q;
    C.params.n = n;
    if (j.contains("params")) {
        C.params.d = j["params"].value("d", 0);
        C.params.e = j["params"].value("e", 0);
        C.params.k = j["params"].value("k", 0);
    }
    return C;
}

}  // namespace qpoly
