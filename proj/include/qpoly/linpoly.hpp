#pragma once

#include <vector>

#include "qpoly/field.hpp"
#include "qpoly/matrix.hpp"
#include "qpoly/spaces.hpp"

namespace qpoly {

// sum_i c[i] X^{Q^{s i}} over F_{Q^n}, Q = q^ell, exponents reduced mod n.
// The Hermitian model uses ell = 2 (monomials X^{q^{2 s i}} over F_{q^{2n}}).
struct LinPoly {
    FieldPtr B;  // big field F_{q^{ell n}}
    int q = 2, ell = 1, n = 1, s = 1;
    std::vector<Elem> c;

    static LinPoly zero(int q, int ell, int n, int s);
    static LinPoly x(int q, int ell, int n, int s);  // the identity X
    // c X^{Q^{s i}}
    static LinPoly monomial(int q, int ell, int n, int s, int i, Elem coeff);

    bool same_ring(const LinPoly& o) const { return q == o.q && ell == o.ell && n == o.n && s == o.s; }
    bool is_zero() const;
    int degree() const;  // max index with nonzero coefficient, -1 for zero
    LinPoly operator+(const LinPoly& o) const;
    LinPoly operator-(const LinPoly& o) const;
    bool operator==(const LinPoly& o) const { return same_ring(o) && c == o.c; }
    // Adds (b X)^{q^{e}} = b^{q^e} X^{q^e}; e must be congruent to ell*s*i
    // modulo ell*n for some i (checked).
    void add_power_term(Elem b, long e);
    // Adds coeff X^{Q^{s i}}.
    void add_term(int i, Elem coeff);
};

Elem evaluate(const LinPoly& f, Elem x);
LinPoly compose_mod(const LinPoly& f, const LinPoly& g);
LinPoly adjoint(const LinPoly& f);
// Rank over F_Q (F_q for ell = 1, F_{q^2} for the Hermitian model).
int poly_rank(const LinPoly& f);
// Dimension of the image over F_q.
int poly_rank_fq(const LinPoly& f);
bool model_membership(Kind k, const LinPoly& f);

// Exponent e (in q-powers, mod 2n) of the Hermitian pairing
// G[i][j] = Tr_{q^{2n}/q^2}(b_i^{q^e} f(b_j)).
int her_gram_twist(int n, int s);
// All e in [0, 2n) for which every Gram image of the Hermitian model is
// Hermitian and the map is injective; used to pin down her_gram_twist.
std::vector<int> her_twist_search(int q, int n, int s);
// Basis 1, g, ..., g^{n-1} of the big field, g its canonical generator.
std::vector<Elem> gram_basis(const LinPoly& f);
// Gram matrix in Alt/Sym/Her; membership in the ambient is asserted.
Matrix to_gram(Kind k, const LinPoly& f);
// Same with an explicit Hermitian twist exponent; no membership check.
Matrix to_gram_twisted(const LinPoly& f, int e);

// F_q-basis of the model space of Alt/Sym/Her as polynomials.
std::vector<LinPoly> model_basis(Kind k, int n, int q, int s);

// F_q-basis of the subfield F_{q^m} of f's big field, embedded.
std::vector<Elem> subfield_basis(const FieldPtr& big, int q, int m);

}  // namespace qpoly
