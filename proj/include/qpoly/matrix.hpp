#pragma once

#include <cstdint>
#include <vector>

#include "qpoly/field.hpp"

namespace qpoly {

struct Matrix {
    FieldPtr F;
    int rows = 0, cols = 0;
    std::vector<Elem> a;  // row-major

    Matrix() = default;
    Matrix(FieldPtr f, int r, int c) : F(std::move(f)), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    static Matrix identity(FieldPtr f, int n);

    Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    Elem at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(Elem c) const;
    // Entrywise x -> x^{p^i}.
    Matrix frob(long i) const;
    std::vector<Elem> row(int i) const;
};

struct RrefResult {
    Matrix R;  // zero rows removed
    int rank = 0;
    std::vector<int> pivots;
};

// Reduced row echelon form with leftmost pivots; zero rows are dropped.
RrefResult rref(const Matrix& M);
int rank(const Matrix& M);
// Basis of {x : M x = 0}, one vector per free column, in RREF-derived order.
std::vector<std::vector<Elem>> kernel_basis(const Matrix& M);
// Inverse of a square matrix; throws if singular.
Matrix inverse(const Matrix& M);

// Rank of an n x n matrix given as a raw buffer; scratch is overwritten.
int rank_inplace(const Field& F, Elem* m, int rows, int cols);

// ---- Linear algebra over a prime field F_p with small integer entries ----
using FpVec = std::vector<std::uint8_t>;

struct FpMat {
    int p = 2;
    int cols = 0;
    std::vector<FpVec> rows;
};

struct FpRref {
    std::vector<FpVec> rows;
    std::vector<int> pivots;
};

FpRref fp_rref(int p, std::vector<FpVec> rows, int cols);
int fp_rank(int p, std::vector<FpVec> rows, int cols);
std::vector<FpVec> fp_kernel(int p, const std::vector<FpVec>& rows, int cols);
// Intersection of two row spaces (both given by spanning rows).
std::vector<FpVec> fp_intersection(int p, const std::vector<FpVec>& A, const std::vector<FpVec>& B, int cols);
std::vector<FpVec> fp_sum(int p, const std::vector<FpVec>& A, const std::vector<FpVec>& B, int cols);
// Coordinates of v in an RREF basis; returns false if v is not in the span.
bool fp_coords(int p, const FpRref& basis, const FpVec& v, std::vector<int>& out);
int fp_inv(int p, int a);

}  // namespace qpoly
