#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "qpoly/lattice.hpp"
#include "qpoly/linpoly.hpp"
#include "qpoly/spaces.hpp"

namespace qpoly {

using Rational = boost::multiprecision::cpp_rational;

constexpr std::uint64_t kDefaultCodewordBudget = 1ULL << 22;
std::uint64_t codeword_budget();

struct FamilyParams {
    std::string family;  // alt_DG, sym_schmidt, ...; empty for ad-hoc codes
    int n = 0, d = 0, e = 0, k = 0, q = 2, s = 1;
};

// An F_q-linear code inside an ambient space, stored by its RREF coordinate
// basis; gens[i] is the matrix of basis row i.
struct Code {
    Ambient amb;
    std::vector<FpVec> basis;
    std::vector<int> pivots;
    std::vector<Matrix> gens;
    FamilyParams params;

    int dim() const { return static_cast<int>(basis.size()); }
    bool operator==(const Code& o) const { return amb.same_as(o.amb) && basis == o.basis; }
    bool operator!=(const Code& o) const { return !(*this == o); }
    bool contains(const FpVec& coords) const;
    bool contains(const Code& o) const;
};

Code code_from_coords(const Ambient& a, const std::vector<FpVec>& rows);
Code code_from_matrices(const Ambient& a, const std::vector<Matrix>& mats);
Code whole_space(const Ambient& a);
Code zero_code(const Ambient& a);
Code code_sum(const Code& C, const Code& D);
Code code_meet(const Code& C, const Code& D);

// Exhaustive codeword statistics; throw BudgetExceeded above the budget.
int min_distance(const Code& C, std::uint64_t budget = 0);
std::map<int, std::uint64_t> weight_distribution(const Code& C, std::uint64_t budget = 0);
int max_rank(const Code& C, std::uint64_t budget = 0);

// Orthogonal complement inside the ambient space; also defined when the form
// is degenerate (Sym in characteristic 2).
Code orthogonal_in_ambient(const Code& C);
bool form_is_degenerate(const Ambient& a);
// As above, but throws std::logic_error unless dim C + dim C* = dim X.
Code dual_star(const Code& C);
// The code viewed inside the full ell*n*n matrix space.
Code as_full(const Code& C);
Code delsarte_dual(const Code& C);
// C(U) = {A in C : colsp(A) <= U}.
Code shorten(const Code& C, const Subspace& U);
// Row version: {A in C : rowsp(A) <= V}.
Code shorten_rows(const Code& C, const Subspace& V);
// Last m-u rows of A*M for M in C, in the full (m-u) x n space.
Code puncture(const Code& C, int u, const Matrix& A);
// Upper-left u x u block of every codeword.
Code corner_delete(const Code& C, int u);
// {a P M^tau (P^sigma)^t + R}; R must be zero.
Code apply_isometry(const Code& C, int a, const Matrix& P, int tau_exp, const Matrix& R);
// Transpose of every codeword (full-space codes only change shape).
Code transpose_code(const Code& C);

// ---- families ----
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& family_names();
Code construct_family(const FamilyParams& p);
int expected_dimension(const FamilyParams& p);
int advertised_distance(const FamilyParams& p);
Kind family_kind(const std::string& family);

// First element of F_{p^k} (index order) satisfying the condition:
// eta_TZ: non-square; eta_LTZ: x^{(q^{k-1}-1)/(q-1)} non-square;
// gamma_LTZ: the norm x^{(q^k-1)/(q-1)} is a non-square in F_q; called with
// F = F_{q^{2n}} (see README for why this differs from the printed form).
Elem find_special_element(const std::string& condition, const FieldPtr& F);

// ---- bounds ----
struct BoundReport {
    std::string name;
    Kind kind = Kind::Sym;
    int n = 0, d = 0, q = 2;
    Rational bound;
    int code_log = 0;
    bool attained = false;
};

// log_q of the size bound. Names: singleton (n = m x n uses m as given by
// 'm'), alt, sym, her; dual-distance bounds return the bound on d*:
// dual_alt, dual_alt_linear_full, dual_sym_odd, dual_sym_odd_maximal,
// dual_sym_even, dual_her, dual_her_odd_maximum.
Rational bound_value(const std::string& name, int n, int d, int q, int m = 0);
BoundReport family_bound(const FamilyParams& p, const Code& C);

// ---- serialization ----
nlohmann::json code_to_json(const Code& C);
Code code_from_json(const nlohmann::json& j);

}  // namespace qpoly
