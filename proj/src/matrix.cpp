#include "qpoly/matrix.hpp"

#include <stdexcept>

namespace qpoly {

Matrix Matrix::identity(FieldPtr f, int n) {
    Matrix m(std::move(f), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (Elem x : a)
        if (x) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(F, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(F, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->add(a[i], o.a[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(F, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->sub(a[i], o.a[i]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(F, rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            Elem x = at(i, k);
            if (!x) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) = F->add(r.at(i, j), F->mul(x, o.at(k, j)));
        }
    return r;
}

Matrix Matrix::scaled(Elem c) const {
    Matrix r(F, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->mul(c, a[i]);
    return r;
}

Matrix Matrix::frob(long i) const {
    Matrix r(F, rows, cols);
    for (size_t t = 0; t < a.size(); ++t) r.a[t] = F->frob(a[t], i);
    return r;
}

std::vector<Elem> Matrix::row(int i) const {
    return std::vector<Elem>(a.begin() + static_cast<long>(i) * cols, a.begin() + static_cast<long>(i + 1) * cols);
}

RrefResult rref(const Matrix& M) {
    const Field& F = *M.F;
    Matrix A = M;
    int r = 0;
    std::vector<int> piv;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int sel = -1;
        for (int i = r; i < A.rows; ++i)
            if (A.at(i, c)) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(sel, j), A.at(r, j));
        Elem iv = F.inv(A.at(r, c));
        for (int j = c; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), iv);
        for (int i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            Elem f = A.at(i, c);
            if (!f) continue;
            for (int j = c; j < A.cols; ++j) A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    RrefResult res;
    res.rank = r;
    res.pivots = piv;
    res.R = Matrix(M.F, r, M.cols);
    std::copy(A.a.begin(), A.a.begin() + static_cast<long>(r) * A.cols, res.R.a.begin());
    return res;
}

int rank(const Matrix& M) {
    Matrix A = M;
    return rank_inplace(*A.F, A.a.data(), A.rows, A.cols);
}

int rank_inplace(const Field& F, Elem* m, int rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[i * cols + c]) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = c; j < cols; ++j) std::swap(m[sel * cols + j], m[r * cols + j]);
        Elem iv = F.inv(m[r * cols + c]);
        for (int i = r + 1; i < rows; ++i) {
            Elem f = m[i * cols + c];
            if (!f) continue;
            f = F.mul(f, iv);
            for (int j = c; j < cols; ++j) m[i * cols + j] = F.sub(m[i * cols + j], F.mul(f, m[r * cols + j]));
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<Elem>> kernel_basis(const Matrix& M) {
    const Field& F = *M.F;
    auto rr = rref(M);
    std::vector<bool> is_piv(M.cols, false);
    for (int c : rr.pivots) is_piv[c] = true;
    std::vector<std::vector<Elem>> out;
    for (int f = 0; f < M.cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Elem> v(M.cols, 0);
        v[f] = 1;
        for (int i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = F.neg(rr.R.at(i, f));
        out.push_back(std::move(v));
    }
    return out;
}

Matrix inverse(const Matrix& M) {
    if (M.rows != M.cols) throw std::invalid_argument("inverse of non-square matrix");
    const int n = M.rows;
    Matrix aug(M.F, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    Matrix inv(M.F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.R.at(i, n + j);
    return inv;
}

int fp_inv(int p, int a) {
    a %= p;
    if (a < 0) a += p;
    if (!a) throw std::domain_error("inverse of zero mod p");
    for (int x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw std::logic_error("modulus is not prime");
}

FpRref fp_rref(int p, std::vector<FpVec> rows, int cols) {
    FpRref out;
    int r = 0;
    const int m = static_cast<int>(rows.size());
    for (int c = 0; c < cols && r < m; ++c) {
        int sel = -1;
        for (int i = r; i < m; ++i)
            if (rows[i][c]) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[sel], rows[r]);
        int iv = fp_inv(p, rows[r][c]);
        if (iv != 1)
            for (int j = c; j < cols; ++j) rows[r][j] = static_cast<std::uint8_t>((rows[r][j] * iv) % p);
        for (int i = 0; i < m; ++i) {
            if (i == r || !rows[i][c]) continue;
            int f = rows[i][c];
            if (p == 2) {
                for (int j = c; j < cols; ++j) rows[i][j] ^= rows[r][j];
            } else {
                for (int j = c; j < cols; ++j)
                    rows[i][j] = static_cast<std::uint8_t>(((rows[i][j] - f * rows[r][j]) % p + p) % p);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

int fp_rank(int p, std::vector<FpVec> rows, int cols) {
    int r = 0;
    const int m = static_cast<int>(rows.size());
    for (int c = 0; c < cols && r < m; ++c) {
        int sel = -1;
        for (int i = r; i < m; ++i)
            if (rows[i][c]) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[sel], rows[r]);
        int iv = fp_inv(p, rows[r][c]);
        for (int i = r + 1; i < m; ++i) {
            if (!rows[i][c]) continue;
            int f = (rows[i][c] * iv) % p;
            if (p == 2) {
                for (int j = c; j < cols; ++j) rows[i][j] ^= rows[r][j];
            } else {
                for (int j = c; j < cols; ++j)
                    rows[i][j] = static_cast<std::uint8_t>(((rows[i][j] - f * rows[r][j]) % p + p) % p);
            }
        }
        ++r;
    }
    return r;
}

std::vector<FpVec> fp_kernel(int p, const std::vector<FpVec>& rows, int cols) {
    auto rr = fp_rref(p, rows, cols);
    std::vector<bool> is_piv(cols, false);
    for (int c : rr.pivots) is_piv[c] = true;
    std::vector<FpVec> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        FpVec v(cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < rr.rows.size(); ++i) v[rr.pivots[i]] = static_cast<std::uint8_t>((p - rr.rows[i][f]) % p);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<FpVec> fp_sum(int p, const std::vector<FpVec>& A, const std::vector<FpVec>& B, int cols) {
    std::vector<FpVec> all = A;
    all.insert(all.end(), B.begin(), B.end());
    return fp_rref(p, std::move(all), cols).rows;
}

std::vector<FpVec> fp_intersection(int p, const std::vector<FpVec>& A, const std::vector<FpVec>& B, int cols) {
    // Zassenhaus: rows (a | a) and (b | 0); rows with zero left half give the meet.
    std::vector<FpVec> z;
    for (const auto& a : A) {
        FpVec v(2 * cols);
        std::copy(a.begin(), a.end(), v.begin());
        std::copy(a.begin(), a.end(), v.begin() + cols);
        z.push_back(std::move(v));
    }
    for (const auto& b : B) {
        FpVec v(2 * cols, 0);
        std::copy(b.begin(), b.end(), v.begin());
        z.push_back(std::move(v));
    }
    auto rr = fp_rref(p, std::move(z), 2 * cols);
    std::vector<FpVec> out;
    for (size_t i = 0; i < rr.rows.size(); ++i)
        if (rr.pivots[i] >= cols) out.emplace_back(rr.rows[i].begin() + cols, rr.rows[i].end());
    return fp_rref(p, std::move(out), cols).rows;
}

bool fp_coords(int p, const FpRref& basis, const FpVec& v, std::vector<int>& out) {
    FpVec w = v;
    out.assign(basis.rows.size(), 0);
    for (size_t i = 0; i < basis.rows.size(); ++i) {
        int c = basis.pivots[i];
        int f = w[c];
        out[i] = f;
        if (!f) continue;
        for (size_t j = 0; j < w.size(); ++j)
            w[j] = static_cast<std::uint8_t>(((w[j] - f * basis.rows[i][j]) % p + p) % p);
    }
    for (auto x : w)
        if (x) return false;
    return true;
}

}  // namespace qpoly
