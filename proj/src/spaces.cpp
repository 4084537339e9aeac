#include "qpoly/spaces.hpp"

#include <stdexcept>

namespace qpoly {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Alt: return "Alt";
        case Kind::Sym: return "Sym";
        case Kind::Her: return "Her";
        case Kind::Full: return "Full";
    }
    return "?";
}

Kind kind_from_name(const std::string& s) {
    if (s == "Alt" || s == "alt") return Kind::Alt;
    if (s == "Sym" || s == "sym") return Kind::Sym;
    if (s == "Her" || s == "her") return Kind::Her;
    if (s == "Full" || s == "full") return Kind::Full;
    throw std::invalid_argument("unknown ambient kind: " + s);
}

Ambient Ambient::make(Kind k, int n, int q) {
    if (k == Kind::Full) return full(n, n, q, 1);
    if (n < 1 || n > 8) throw std::invalid_argument("ambient order n must be in [1,8]");
    if (!is_prime(q)) throw std::invalid_argument("ambient base field order q must be prime");
    Ambient a;
    a.kind = k;
    a.m = a.n = n;
    a.q = q;
    a.ell = (k == Kind::Her) ? 2 : 1;
    a.Fq = Field::get(q, 1);
    a.Fe = Field::get(q, a.ell);
    return a;
}

Ambient Ambient::full(int m, int n, int q, int ell) {
    if (m < 1 || n < 1 || m > 8 || n > 8) throw std::invalid_argument("matrix shape out of range");
    if (!is_prime(q)) throw std::invalid_argument("ambient base field order q must be prime");
    Ambient a;
    a.kind = Kind::Full;
    a.m = m;
    a.n = n;
    a.q = q;
    a.ell = ell;
    a.Fq = Field::get(q, 1);
    a.Fe = Field::get(q, ell);
    return a;
}

int Ambient::dim() const {
    switch (kind) {
        case Kind::Alt: return n * (n - 1) / 2;
        case Kind::Sym: return n * (n + 1) / 2;
        case Kind::Her: return n * n;
        case Kind::Full: return ell * m * n;
    }
    return 0;
}

int Ambient::maxrank() const { return kind == Kind::Full ? std::min(m, n) : maxrank_ambient(kind, n); }

std::string Ambient::name() const {
    std::string s = kind_name(kind) + "(n=" + std::to_string(n);
    if (kind == Kind::Full) s = "Full(" + std::to_string(m) + "x" + std::to_string(n) + ",ell=" + std::to_string(ell);
    return s + ",q=" + std::to_string(q) + ")";
}

FpVec to_coords(const Ambient& a, const Matrix& M) {
    const Field& E = *a.Fe;
    FpVec c;
    c.reserve(a.dim());
    switch (a.kind) {
        case Kind::Alt:
            for (int i = 0; i < a.n; ++i)
                for (int j = i + 1; j < a.n; ++j) c.push_back(static_cast<std::uint8_t>(M.at(i, j)));
            break;
        case Kind::Sym:
            for (int i = 0; i < a.n; ++i)
                for (int j = i; j < a.n; ++j) c.push_back(static_cast<std::uint8_t>(M.at(i, j)));
            break;
        case Kind::Her:
            for (int i = 0; i < a.n; ++i)
                for (int j = i; j < a.n; ++j) {
                    c.push_back(static_cast<std::uint8_t>(E.digit(M.at(i, j), 0)));
                    if (j > i) c.push_back(static_cast<std::uint8_t>(E.digit(M.at(i, j), 1)));
                }
            break;
        case Kind::Full: return flatten(a, M);
    }
    return c;
}

Matrix from_coords(const Ambient& a, const FpVec& c) {
    const Field& E = *a.Fe;
    Matrix M(a.Fe, a.m, a.n);
    size_t t = 0;
    switch (a.kind) {
        case Kind::Alt:
            for (int i = 0; i < a.n; ++i)
                for (int j = i + 1; j < a.n; ++j) {
                    M.at(i, j) = c[t];
                    M.at(j, i) = E.neg(c[t]);
                    ++t;
                }
            break;
        case Kind::Sym:
            for (int i = 0; i < a.n; ++i)
                for (int j = i; j < a.n; ++j) {
                    M.at(i, j) = M.at(j, i) = c[t];
                    ++t;
                }
            break;
        case Kind::Her:
            for (int i = 0; i < a.n; ++i)
                for (int j = i; j < a.n; ++j) {
                    if (j == i) {
                        M.at(i, i) = c[t++];
                    } else {
                        Elem x = E.from_digits({c[t], c[t + 1]});
                        t += 2;
                        M.at(i, j) = x;
                        M.at(j, i) = E.frob(x, 1);
                    }
                }
            break;
        case Kind::Full:
            for (int i = 0; i < a.m; ++i)
                for (int j = 0; j < a.n; ++j) {
                    std::vector<int> d(a.ell);
                    for (int e = 0; e < a.ell; ++e) d[e] = c[t++];
                    M.at(i, j) = E.from_digits(d);
                }
            break;
    }
    return M;
}

FpVec flatten(const Ambient& a, const Matrix& M) {
    const Field& E = *a.Fe;
    FpVec c;
    c.reserve(a.flat_len());
    for (Elem x : M.a)
        for (int e = 0; e < a.ell; ++e) c.push_back(static_cast<std::uint8_t>(E.digit(x, e)));
    return c;
}

std::vector<Matrix> ambient_basis(const Ambient& a) {
    std::vector<Matrix> out;
    const int d = a.dim();
    for (int i = 0; i < d; ++i) {
        FpVec c(d, 0);
        c[i] = 1;
        out.push_back(from_coords(a, c));
    }
    return out;
}

bool membership(const Ambient& a, const Matrix& M) {
    if (M.rows != a.m || M.cols != a.n) throw std::invalid_argument("matrix shape does not match ambient");
    if (M.F->id() != a.Fe->id()) throw std::invalid_argument("matrix field does not match ambient");
    const Field& E = *a.Fe;
    switch (a.kind) {
        case Kind::Alt:
            for (int i = 0; i < a.n; ++i) {
                if (M.at(i, i)) return false;
                for (int j = i + 1; j < a.n; ++j)
                    if (M.at(j, i) != E.neg(M.at(i, j))) return false;
            }
            return true;
        case Kind::Sym:
            for (int i = 0; i < a.n; ++i)
                for (int j = i + 1; j < a.n; ++j)
                    if (M.at(j, i) != M.at(i, j)) return false;
            return true;
        case Kind::Her:
            for (int i = 0; i < a.n; ++i)
                for (int j = i; j < a.n; ++j)
                    if (M.at(j, i) != E.frob(M.at(i, j), 1)) return false;
            return true;
        case Kind::Full: return true;
    }
    return false;
}

int ambient_form(const Ambient& a, const Matrix& A, const Matrix& B) {
    if (!membership(a, A) || !membership(a, B)) throw std::invalid_argument("ambient_form on non-members");
    const Field& E = *a.Fe;
    Elem s = 0;
    if (a.kind == Kind::Alt) {
        for (int i = 0; i < a.n; ++i)
            for (int j = i + 1; j < a.n; ++j) s = E.add(s, E.mul(A.at(i, j), B.at(i, j)));
    } else {
        for (size_t t = 0; t < A.a.size(); ++t) s = E.add(s, E.mul(A.a[t], B.a[t]));
    }
    if (a.ell == 2 && a.kind == Kind::Full) s = E.add(s, E.frob(s, 1));
    if (s >= static_cast<Elem>(a.q)) throw std::logic_error("form value not in the base field");
    return static_cast<int>(s);
}

std::vector<std::vector<int>> form_gram(const Ambient& a) {
    auto B = ambient_basis(a);
    const int d = a.dim();
    std::vector<std::vector<int>> G(d, std::vector<int>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) G[i][j] = ambient_form(a, B[i], B[j]);
    return G;
}

LeftImage left_image(const Ambient& a, const std::vector<Matrix>& gens, const Matrix& Y, bool want_kernel) {
    const int p = a.q;
    const int k = static_cast<int>(gens.size());
    std::vector<FpVec> rows;
    rows.reserve(k);
    int len = 0;
    for (const auto& M : gens) {
        Matrix P = Y * M;
        FpVec v;
        v.reserve(P.a.size() * a.ell);
        for (Elem x : P.a)
            for (int e = 0; e < a.ell; ++e) v.push_back(static_cast<std::uint8_t>(P.F->digit(x, e)));
        len = static_cast<int>(v.size());
        rows.push_back(std::move(v));
    }
    LeftImage out;
    if (k == 0) return out;
    if (!want_kernel) {
        out.rank = fp_rank(p, rows, len);
        return out;
    }
    std::vector<FpVec> tr(len, FpVec(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < len; ++j) tr[j][i] = rows[i][j];
    out.kernel = fp_kernel(p, tr, k);
    out.rank = k - static_cast<int>(out.kernel.size());
    return out;
}

int left_image_rank(const Ambient& a, const std::vector<Matrix>& gens, const Matrix& Y) {
    return left_image(a, gens, Y, false).rank;
}

std::vector<FpVec> shortened_space(const Ambient& a, const Subspace& U) {
    if (U.n != a.m) throw std::invalid_argument("subspace ambient dimension mismatch");
    auto basis = ambient_basis(a);
    Subspace W = complement(U);
    if (W.dim == 0) {
        std::vector<FpVec> all;
        for (int i = 0; i < a.dim(); ++i) {
            FpVec c(a.dim(), 0);
            c[i] = 1;
            all.push_back(c);
        }
        return all;
    }
    auto li = left_image(a, basis, W.matrix(), true);
    return fp_rref(a.q, li.kernel, a.dim()).rows;
}

std::vector<FpVec> shortened_space_by_conjugation(const Ambient& a, const Subspace& U) {
    const int n = a.n, u = U.dim;
    // G maps e_i to the i-th basis vector of U (columns), extended to an invertible matrix.
    Matrix G(a.Fe, n, n);
    auto rows = U.rows();
    for (int i = 0; i < u; ++i)
        for (int r = 0; r < n; ++r) G.at(r, i) = rows[i][r];
    int col = u;
    for (int e = 0; e < n && col < n; ++e) {
        Matrix T = G;
        T.at(e, col) = 1;
        Matrix sub(a.Fe, n, col + 1);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c <= col; ++c) sub.at(r, c) = T.at(r, c);
        if (rank(sub) == col + 1) {
            G = T;
            ++col;
        }
    }
    std::vector<FpVec> out;
    auto basis = ambient_basis(a);
    Matrix Gst = G.frob(a.kind == Kind::Her ? 1 : 0).transpose();
    for (const auto& B : basis) {
        bool inside = true;
        for (int i = 0; i < n && inside; ++i)
            for (int j = 0; j < n; ++j)
                if ((i >= u || j >= u) && B.at(i, j)) {
                    inside = false;
                    break;
                }
        if (!inside) continue;
        out.push_back(to_coords(a, G * B * Gst));
    }
    return fp_rref(a.q, out, a.dim()).rows;
}

std::vector<FpVec> shortened_dual_space(const Ambient& a, const Subspace& U) {
    auto S = shortened_space(a, U);
    auto G = form_gram(a);
    const int d = a.dim();
    std::vector<FpVec> rows;
    for (const auto& s : S) {
        FpVec r(d, 0);
        for (int j = 0; j < d; ++j) {
            int acc = 0;
            for (int i = 0; i < d; ++i) acc += s[i] * G[i][j];
            r[j] = static_cast<std::uint8_t>(acc % a.q);
        }
        rows.push_back(r);
    }
    if (rows.empty()) {
        std::vector<FpVec> all;
        for (int i = 0; i < d; ++i) {
            FpVec c(d, 0);
            c[i] = 1;
            all.push_back(c);
        }
        return all;
    }
    return fp_rref(a.q, fp_kernel(a.q, rows, d), d).rows;
}

int shortened_dim_formula(Kind k, int u) {
    switch (k) {
        case Kind::Alt: return u * (u - 1) / 2;
        case Kind::Sym: return u * (u + 1) / 2;
        case Kind::Her: return u * u;
        default: throw std::invalid_argument("shortened dimension formula needs Alt/Sym/Her");
    }
}

int shortened_dual_dim(Kind k, int n, int u) {
    switch (k) {
        case Kind::Alt: return (n - u) * (n + u - 1) / 2;
        case Kind::Sym: return (n - u) * (n + u + 1) / 2;
        case Kind::Her: return (n - u) * (n + u);
        default: throw std::invalid_argument("shortened dual dimension needs Alt/Sym/Her");
    }
}

int maxrank_ambient(Kind k, int n) {
    if (k == Kind::Alt) return 2 * (n / 2);
    return n;
}

int maxrank_shortened_dual(Kind k, int n, int u) {
    if (u < 0 || u > n) throw std::invalid_argument("u out of range");
    const int low = maxrank_ambient(k, n), high = 2 * (n - u);
    const bool lo = u <= n / 2, hi = u >= (n + 1) / 2;
    if (lo && hi && low != high) throw std::logic_error("maxrank branches disagree");
    return lo ? low : high;
}

}  // namespace qpoly
