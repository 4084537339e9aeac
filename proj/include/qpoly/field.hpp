#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace qpoly {

// Field elements are integers whose base-p digits are the coefficients of the
// residue polynomial, lowest degree first. 0 and 1 are the canonical zero/one.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    static constexpr int kMaxDegree = 12;
    static constexpr std::uint32_t kMaxSize = 1u << 20;

    // Shared, cached context for F_{p^k}. Equal (p, k) give the same context.
    static FieldPtr get(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    std::uint32_t size() const { return size_; }
    const std::vector<int>& modulus() const { return modulus_; }
    int id() const { return id_; }
    std::string name() const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    // The residue class of X (the canonical generator); 1 when k == 1 would be
    // degenerate, so for prime fields this returns a primitive root instead.
    Elem gen() const;
    Elem from_int(long v) const;

    int digit(Elem a, int i) const { return static_cast<int>((a / pw_[i]) % p_); }
    Elem from_digits(const std::vector<int>& d) const;
    std::vector<int> digits(Elem a) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    // Schoolbook product reduced by the modulus; reference path for mul().
    Elem mul_poly(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    // x^{p^i}; i taken modulo k (negative i allowed).
    Elem frob(Elem a, long i) const;
    Elem scale(Elem a, int c) const;  // c in F_p

    Elem primitive() const;
    bool is_square(Elem a) const;

private:
    Field(int p, int k, std::vector<int> modulus, int id);
    void build_tables() const;
    void ensure_tables() const { std::call_once(tables_once_, [this] { build_tables(); }); }

    int p_, k_;
    std::uint32_t size_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> pw_;
    int id_;

    mutable std::once_flag tables_once_;
    mutable std::vector<std::uint32_t> log_, exp_;
    mutable Elem prim_ = 0;
    // Dense tables for small fields.
    mutable std::vector<Elem> add_tab_, mul_tab_;
};

bool is_prime(long p);
// Lexicographically smallest monic irreducible of degree k over F_p, compared
// low-degree-first on the coefficient vector (the leading 1 is included last).
std::vector<int> smallest_irreducible(int p, int k);
bool is_irreducible(int p, const std::vector<int>& monic);

// Embedding of F_{p^a} into F_{p^b}, a | b, via a root of the small modulus.
class Embedding {
public:
    static const Embedding& get(const FieldPtr& sub, const FieldPtr& big);

    const FieldPtr& sub() const { return sub_; }
    const FieldPtr& big() const { return big_; }
    Elem embed(Elem x) const { return fwd_[x]; }
    bool contains(Elem y) const { return back_[y] >= 0; }
    // Inverse on the image; throws if y is not in the subfield.
    Elem section(Elem y) const;
    Elem root() const { return root_; }

private:
    Embedding(FieldPtr sub, FieldPtr big);
    FieldPtr sub_, big_;
    Elem root_ = 0;
    std::vector<Elem> fwd_;
    std::vector<std::int32_t> back_;
};

// Tr_{big/sub}(x) as an element of sub.
Elem rel_trace(const FieldPtr& big, Elem x, const FieldPtr& sub);
// x^{p^i} convenience.
inline Elem frobenius(const Field& F, Elem x, long i) { return F.frob(x, i); }

}  // namespace qpoly
