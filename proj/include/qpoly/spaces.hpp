#pragma once

#include <string>
#include <vector>

#include "qpoly/field.hpp"
#include "qpoly/lattice.hpp"
#include "qpoly/matrix.hpp"

namespace qpoly {

enum class Kind { Alt, Sym, Her, Full };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& s);

// A restricted matrix space over F_q (q prime). Entries live in F_{q^ell}:
// ell = 2 for Her, and a caller-chosen ell for Full.
struct Ambient {
    Kind kind = Kind::Sym;
    int m = 0, n = 0;  // m rows, n columns (m == n except for Full)
    int q = 2;
    int ell = 1;
    FieldPtr Fq, Fe;

    static Ambient make(Kind k, int n, int q);
    static Ambient full(int m, int n, int q, int ell = 1);

    int dim() const;      // F_q-dimension
    int maxrank() const;  // max rank over the whole space
    int flat_len() const { return ell * m * n; }
    std::string name() const;
    bool same_as(const Ambient& o) const { return kind == o.kind && m == o.m && n == o.n && q == o.q && ell == o.ell; }
};

// Basis order: upper triangle row-major for Alt (i<j), Sym and Her (i<=j);
// Her off-diagonal pairs contribute E_ij + E_ji then z E_ij + z^q E_ji with z
// the generator of F_{q^2}. Full: row-major entries, ell digits each.
std::vector<Matrix> ambient_basis(const Ambient& a);
bool membership(const Ambient& a, const Matrix& M);
// Form value before any character is applied, as an F_q element (0..q-1).
int ambient_form(const Ambient& a, const Matrix& A, const Matrix& B);
// Gram matrix of ambient_form on ambient_basis.
std::vector<std::vector<int>> form_gram(const Ambient& a);

FpVec to_coords(const Ambient& a, const Matrix& M);
Matrix from_coords(const Ambient& a, const FpVec& c);
// All F_q digits of all entries (length ell*m*n).
FpVec flatten(const Ambient& a, const Matrix& M);

// F_q-basis (as ambient coordinates) of X(U) = {M in X : colsp(M) <= U}.
std::vector<FpVec> shortened_space(const Ambient& a, const Subspace& U);
// Same space via conjugating the coordinate case; test oracle only.
std::vector<FpVec> shortened_space_by_conjugation(const Ambient& a, const Subspace& U);
// F_q-basis of X(U)* (dual inside X).
std::vector<FpVec> shortened_dual_space(const Ambient& a, const Subspace& U);

int shortened_dim_formula(Kind k, int u);
int shortened_dual_dim(Kind k, int n, int u);
int maxrank_ambient(Kind k, int n);
int maxrank_shortened_dual(Kind k, int n, int u);

// Coefficient combinations x with sum_i x_i * (Y * M_i) = 0, as F_q vectors;
// also returns the rank of the map x -> sum x_i Y M_i.
struct LeftImage {
    int rank = 0;
    std::vector<FpVec> kernel;
};
LeftImage left_image(const Ambient& a, const std::vector<Matrix>& gens, const Matrix& Y, bool want_kernel);
int left_image_rank(const Ambient& a, const std::vector<Matrix>& gens, const Matrix& Y);

}  // namespace qpoly
