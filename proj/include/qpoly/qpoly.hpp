#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpoly/codes.hpp"
#include "qpoly/lattice.hpp"

namespace qpoly {

using LatticePtr = std::shared_ptr<const Lattice>;

// Shared lattice of F_{p^k}^n; built once per (field, n).
LatticePtr lattice_for(const FieldPtr& F, int n);

struct QPolymatroid {
    LatticePtr L;
    int r = 0;  // declared scale
    std::vector<int> rank;
    std::string provenance;  // from-code-columns, from-code-rows, closed-form, derived
    std::string label;       // free text: kind/family for reports

    int n() const { return L->n(); }
    int at(const Subspace& U) const { return rank[L->index_of(U)]; }
    int full_rank() const { return rank[L->full_index()]; }
    bool operator==(const QPolymatroid& o) const { return L == o.L && rank == o.rank; }
};

QPolymatroid polymatroid_from_code_columns(const Code& C);
QPolymatroid polymatroid_from_code_rows(const Code& C);
// rho(U) for U in [0, E]: rank of the map A -> Y A with the rows of Y spanning U.
int column_rank(const Code& C, const Subspace& U);
int row_rank(const Code& C, const Subspace& U);
// Closed form for the code X(V): binom(v,2)-binom(w,2), binom(v+1,2)-binom(w+1,2),
// (v-w)(v+w) with w = dim(V meet U^perp).
QPolymatroid polymatroid_of_shortened_ambient(Kind kind, int n, int q, const Subspace& V);

struct AxiomReport {
    bool ok = true;
    std::uint64_t violations = 0;
    std::vector<std::string> examples;  // first few violations
    Rational minimal_valid_r = 0;
    std::string r3_method;  // "all-pairs" or "diamonds"
};
// R1 on every U, R2 along covering pairs, R3 on every unordered pair when
// the pair count is at most max_pairs, otherwise on every diamond
// (Z, two hyperplanes of Z), which is equivalent on a modular lattice.
AxiomReport check_axioms(const QPolymatroid& M, const Rational& r, std::uint64_t max_pairs = 10'000'000ULL);

QPolymatroid dual_polymatroid(const QPolymatroid& M);

// Interval minor [X, Y]: subspaces T with X <= T <= Y and values rho(T) - rho(X).
struct Minor {
    LatticePtr L;
    std::vector<std::uint32_t> members;  // lattice indices, increasing
    std::vector<int> values;
};
Minor minor(const QPolymatroid& M, const Subspace& X, const Subspace& Y);
Minor restriction(const QPolymatroid& M, const Subspace& Y);
Minor contraction(const QPolymatroid& M, const Subspace& X);
Minor deletion(const QPolymatroid& M, const Subspace& T);

struct QuotientTables {
    std::vector<int> difference;  // rho_C - rho_{C meet D}
    std::vector<int> direct;      // dim(C+D) - dim(C(U^perp) + D)
};
QuotientTables quotient_rank_functions(const Code& C, const Code& D);

// d_j = min{dim X(U) : dim C(U) >= j}, j = 1..dim C (restricted kinds).
std::vector<int> x_weights(const Code& C);

enum class CompareResult { Equal, EqualAfter, ProfileEqual, Distinct };
std::string compare_name(CompareResult c);
// phi maps lattice indices of M1 to lattice indices of M2; when given, an
// EqualAfter check is attempted before the profile comparison.
CompareResult compare(const QPolymatroid& M1, const QPolymatroid& M2,
                      const std::vector<std::uint32_t>* phi = nullptr);
// Index map U -> U^sigma on an F_{q^2} lattice.
std::vector<std::uint32_t> sigma_map(const Lattice& L);

// Subspace of F^n spanned by the images of V under v -> (0,..,0,v) (prefix
// zeros when 'tail' is true) or v -> (v,0,..,0).
Subspace embed_subspace(const Subspace& V, int n, bool tail);

// CSV: one row per subspace in lattice order: basis,dim,rank.
std::string rank_table_csv(const QPolymatroid& M);
nlohmann::json polymatroid_header(const QPolymatroid& M, const std::string& kind);
std::string subspace_string(const Subspace& U);

}  // namespace qpoly
