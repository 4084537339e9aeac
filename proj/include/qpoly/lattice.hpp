#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qpoly/field.hpp"
#include "qpoly/matrix.hpp"

namespace qpoly {

using BigInt = boost::multiprecision::cpp_int;

constexpr std::uint64_t kDefaultSubspaceBudget = 10'000'000ULL;
constexpr std::uint64_t kMaxPointBits = 4096;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A subspace of F^n stored by its RREF basis (no zero rows). Equality is
// equality of the canonical basis.
struct Subspace {
    FieldPtr F;
    int n = 0;
    int dim = 0;
    std::vector<Elem> basis;  // dim x n row-major, RREF

    static Subspace zero(FieldPtr f, int n);
    static Subspace full(FieldPtr f, int n);
    // Span of arbitrary rows (canonicalised).
    static Subspace span(FieldPtr f, int n, const std::vector<std::vector<Elem>>& rows);
    static Subspace from_matrix(const Matrix& rows);
    // Coordinate subspace <e_{i}> for the given 0-based indices.
    static Subspace coordinate(FieldPtr f, int n, const std::vector<int>& idx);

    Matrix matrix() const;
    std::vector<std::vector<Elem>> rows() const;
    bool contains(const std::vector<Elem>& v) const;
    bool contains(const Subspace& o) const;
    std::string key() const;
    bool operator==(const Subspace& o) const { return n == o.n && dim == o.dim && basis == o.basis; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
};

BigInt gaussian_binomial(int n, int k, std::uint64_t Q);

std::uint64_t subspace_budget();

// Calls fn for every dim-dimensional subspace of F^n, in order of pivot
// pattern (lexicographic) and then free entries (row-major, last fastest).
void enumerate_subspaces(const FieldPtr& F, int n, int dim, const std::function<void(const Subspace&)>& fn,
                         std::uint64_t budget = 0);
std::vector<Subspace> all_subspaces_of_dim(const FieldPtr& F, int n, int dim, std::uint64_t budget = 0);

Subspace complement(const Subspace& U);
std::pair<Subspace, Subspace> sum_and_meet(const Subspace& U, const Subspace& V);
Subspace sigma_image(const Subspace& U, long p_power);

// The whole lattice L(F^n) with an index, ordered by dimension then
// enumeration order. Complements and hyperplane lists are precomputed.
class Lattice {
public:
    Lattice(FieldPtr F, int n, std::uint64_t budget = 0);

    const FieldPtr& field() const { return F_; }
    int n() const { return n_; }
    size_t size() const { return subs_.size(); }
    const Subspace& at(size_t i) const { return subs_[i]; }
    const std::vector<Subspace>& all() const { return subs_; }
    size_t index_of(const Subspace& U) const;
    size_t zero_index() const { return 0; }
    size_t full_index() const { return subs_.size() - 1; }
    size_t complement_index(size_t i) const { return comp_[i]; }
    // Indices of the codimension-1 subspaces of subspace i.
    const std::vector<std::uint32_t>& hyperplanes(size_t i) const;
    size_t sum_index(size_t i, size_t j) const;
    size_t meet_index(size_t i, size_t j) const;
    // Index range [first, last) of subspaces of a given dimension.
    std::pair<size_t, size_t> dim_range(int d) const { return {dim_start_[d], dim_start_[d + 1]}; }
    // Index of a vector of F^n in the point bitsets: sum v_i Q^i.
    std::uint32_t vector_index(const std::vector<Elem>& v) const;

private:
    FieldPtr F_;
    int n_;
    std::vector<Subspace> subs_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<std::uint32_t> comp_;
    std::vector<size_t> dim_start_;
    mutable std::vector<std::vector<std::uint32_t>> hyper_;
    mutable bool hyper_built_ = false;
    // Point sets of every subspace as bitsets over F^n, when |F^n| is small;
    // meets are bitwise ANDs, joins go through complements.
    size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::unordered_map<std::string, std::uint32_t> bits_index_;
    size_t lookup_bits(const std::uint64_t* b) const;
};

}  // namespace qpoly
