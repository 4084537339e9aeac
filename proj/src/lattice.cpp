#include "qpoly/lattice.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qpoly {

Subspace Subspace::zero(FieldPtr f, int n) {
    Subspace s;
    s.F = std::move(f);
    s.n = n;
    return s;
}

Subspace Subspace::full(FieldPtr f, int n) {
    Subspace s;
    s.F = f;
    s.n = n;
    s.dim = n;
    s.basis.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) s.basis[static_cast<size_t>(i) * n + i] = 1;
    return s;
}

Subspace Subspace::from_matrix(const Matrix& rows) {
    auto rr = rref(rows);
    Subspace s;
    s.F = rows.F;
    s.n = rows.cols;
    s.dim = rr.rank;
    s.basis = rr.R.a;
    return s;
}

Subspace Subspace::span(FieldPtr f, int n, const std::vector<std::vector<Elem>>& rows) {
    Matrix m(f, static_cast<int>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    if (rows.empty()) return zero(std::move(f), n);
    return from_matrix(m);
}

Subspace Subspace::coordinate(FieldPtr f, int n, const std::vector<int>& idx) {
    std::vector<std::vector<Elem>> rows;
    for (int i : idx) {
        std::vector<Elem> v(n, 0);
        v[i] = 1;
        rows.push_back(v);
    }
    return span(std::move(f), n, rows);
}

Matrix Subspace::matrix() const {
    Matrix m(F, dim, n);
    m.a = basis;
    return m;
}

std::vector<std::vector<Elem>> Subspace::rows() const {
    std::vector<std::vector<Elem>> out;
    for (int i = 0; i < dim; ++i) out.emplace_back(basis.begin() + static_cast<long>(i) * n, basis.begin() + static_cast<long>(i + 1) * n);
    return out;
}

bool Subspace::contains(const std::vector<Elem>& v) const {
    auto r = rows();
    r.push_back(v);
    return span(F, n, r).dim == dim;
}

bool Subspace::contains(const Subspace& o) const {
    auto r = rows();
    auto s = o.rows();
    r.insert(r.end(), s.begin(), s.end());
    return span(F, n, r).dim == dim;
}

std::string Subspace::key() const {
    std::string k;
    k.reserve(2 + basis.size() * 3);
    k.push_back(static_cast<char>(n));
    k.push_back(static_cast<char>(dim));
    for (Elem x : basis) {
        k.push_back(static_cast<char>(x & 0xff));
        k.push_back(static_cast<char>((x >> 8) & 0xff));
        k.push_back(static_cast<char>((x >> 16) & 0xff));
    }
    return k;
}

BigInt gaussian_binomial(int n, int k, std::uint64_t Q) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1, qb = Q;
    for (int i = 0; i < k; ++i) {
        num *= BigInt(pow(qb, static_cast<unsigned>(n - i))) - 1;
        den *= BigInt(pow(qb, static_cast<unsigned>(i + 1))) - 1;
    }
    return num / den;
}

std::uint64_t subspace_budget() {
    if (const char* env = std::getenv("QPOLY_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultSubspaceBudget;
}

void enumerate_subspaces(const FieldPtr& F, int n, int dim, const std::function<void(const Subspace&)>& fn,
                         std::uint64_t budget) {
    if (dim < 0 || dim > n) throw std::invalid_argument("subspace dimension out of range");
    if (!budget) budget = subspace_budget();
    BigInt cnt = gaussian_binomial(n, dim, F->size());
    if (cnt > budget) {
        std::ostringstream os;
        os << "subspace enumeration budget exceeded: [" << n << " choose " << dim << "]_" << F->size() << " = " << cnt
           << " > " << budget;
        throw BudgetExceeded(os.str());
    }
    const Elem Q = F->size();
    std::vector<int> piv(dim);
    for (int i = 0; i < dim; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_piv(n, false);
        for (int c : piv) is_piv[c] = true;
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < dim; ++i)
            for (int j = piv[i] + 1; j < n; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);
        Subspace s;
        s.F = F;
        s.n = n;
        s.dim = dim;
        s.basis.assign(static_cast<size_t>(dim) * n, 0);
        for (int i = 0; i < dim; ++i) s.basis[static_cast<size_t>(i) * n + piv[i]] = 1;
        std::vector<Elem> ctr(free_pos.size(), 0);
        while (true) {
            for (size_t t = 0; t < free_pos.size(); ++t)
                s.basis[static_cast<size_t>(free_pos[t].first) * n + free_pos[t].second] = ctr[t];
            fn(s);
            int t = static_cast<int>(ctr.size()) - 1;
            while (t >= 0 && ctr[t] == Q - 1) ctr[t--] = 0;
            if (t < 0) break;
            ++ctr[t];
        }
        // next combination
        int i = dim - 1;
        while (i >= 0 && piv[i] == n - dim + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < dim; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::vector<Subspace> all_subspaces_of_dim(const FieldPtr& F, int n, int dim, std::uint64_t budget) {
    std::vector<Subspace> out;
    enumerate_subspaces(F, n, dim, [&](const Subspace& s) { out.push_back(s); }, budget);
    return out;
}

Subspace complement(const Subspace& U) {
    if (U.dim == 0) return Subspace::full(U.F, U.n);
    auto ker = kernel_basis(U.matrix());
    return Subspace::span(U.F, U.n, ker);
}

std::pair<Subspace, Subspace> sum_and_meet(const Subspace& U, const Subspace& V) {
    if (U.n != V.n || U.F->id() != V.F->id()) throw std::invalid_argument("ambient mismatch in sum_and_meet");
    auto r = U.rows();
    auto s = V.rows();
    r.insert(r.end(), s.begin(), s.end());
    Subspace sum = Subspace::span(U.F, U.n, r);
    // U ∩ V = (U^⊥ + V^⊥)^⊥
    Subspace cu = complement(U), cv = complement(V);
    auto a = cu.rows();
    auto b = cv.rows();
    a.insert(a.end(), b.begin(), b.end());
    Subspace meet = complement(Subspace::span(U.F, U.n, a));
    if (sum.dim + meet.dim != U.dim + V.dim) throw std::logic_error("Grassmann identity violated");
    return {sum, meet};
}

Subspace sigma_image(const Subspace& U, long p_power) {
    Matrix m = U.matrix().frob(p_power);
    if (U.dim == 0) return U;
    return Subspace::from_matrix(m);
}

Lattice::Lattice(FieldPtr F, int n, std::uint64_t budget) : F_(std::move(F)), n_(n) {
    if (!budget) budget = subspace_budget();
    BigInt total = 0;
    for (int d = 0; d <= n; ++d) total += gaussian_binomial(n, d, F_->size());
    if (total > budget) {
        std::ostringstream os;
        os << "lattice budget exceeded: |L(F_" << F_->size() << "^" << n << ")| = " << total << " > " << budget;
        throw BudgetExceeded(os.str());
    }
    dim_start_.push_back(0);
    for (int d = 0; d <= n; ++d) {
        enumerate_subspaces(F_, n, d, [&](const Subspace& s) { subs_.push_back(s); }, budget);
        dim_start_.push_back(subs_.size());
    }
    index_.reserve(subs_.size() * 2);
    for (size_t i = 0; i < subs_.size(); ++i) index_[subs_[i].key()] = static_cast<std::uint32_t>(i);
    comp_.resize(subs_.size());
    for (size_t i = 0; i < subs_.size(); ++i) comp_[i] = static_cast<std::uint32_t>(index_of(complement(subs_[i])));
    std::uint64_t npts = 1;
    for (int i = 0; i < n_; ++i) npts *= F_->size();
    if (npts > kMaxPointBits) return;
    words_ = (npts + 63) / 64;
    bits_.assign(subs_.size() * words_, 0);
    const Elem Q = F_->size();
    for (size_t i = 0; i < subs_.size(); ++i) {
        const Subspace& U = subs_[i];
        std::uint64_t* b = bits_.data() + i * words_;
        std::vector<Elem> coef(U.dim, 0), v(n_, 0);
        while (true) {
            std::fill(v.begin(), v.end(), 0);
            for (int r = 0; r < U.dim; ++r)
                if (coef[r])
                    for (int c = 0; c < n_; ++c)
                        v[c] = F_->add(v[c], F_->mul(coef[r], U.basis[static_cast<size_t>(r) * n_ + c]));
            std::uint32_t x = vector_index(v);
            b[x / 64] |= 1ULL << (x % 64);
            int t = 0;
            while (t < U.dim && coef[t] == Q - 1) coef[t++] = 0;
            if (t == U.dim) break;
            ++coef[t];
        }
        bits_index_[std::string(reinterpret_cast<const char*>(b), words_ * 8)] = static_cast<std::uint32_t>(i);
    }
}

std::uint32_t Lattice::vector_index(const std::vector<Elem>& v) const {
    std::uint32_t x = 0;
    for (int i = n_ - 1; i >= 0; --i) x = x * F_->size() + v[i];
    return x;
}

size_t Lattice::lookup_bits(const std::uint64_t* b) const {
    auto it = bits_index_.find(std::string(reinterpret_cast<const char*>(b), words_ * 8));
    if (it == bits_index_.end()) throw std::logic_error("point set is not a subspace");
    return it->second;
}

size_t Lattice::index_of(const Subspace& U) const {
    auto it = index_.find(U.key());
    if (it == index_.end()) throw std::invalid_argument("subspace not in lattice");
    return it->second;
}

const std::vector<std::uint32_t>& Lattice::hyperplanes(size_t i) const {
    if (!hyper_built_) {
        hyper_.assign(subs_.size(), {});
        for (size_t v = 0; v < subs_.size(); ++v) {
            const Subspace& V = subs_[v];
            const int k = V.dim;
            if (k == 0) continue;
            Matrix Bv = V.matrix();
            // Hyperplanes of V <-> kernels of nonzero functionals on F^k up to scaling.
            enumerate_subspaces(F_, k, 1, [&](const Subspace& phi) {
                auto ker = kernel_basis(phi.matrix());
                std::vector<std::vector<Elem>> rows;
                for (auto& x : ker) {
                    Matrix xv(F_, 1, k);
                    xv.a = x;
                    rows.push_back((xv * Bv).a);
                }
                hyper_[v].push_back(static_cast<std::uint32_t>(index_of(Subspace::span(F_, n_, rows))));
            });
        }
        hyper_built_ = true;
    }
    return hyper_[i];
}

size_t Lattice::sum_index(size_t i, size_t j) const {
    if (words_) return comp_[meet_index(comp_[i], comp_[j])];
    auto r = subs_[i].rows();
    auto s = subs_[j].rows();
    r.insert(r.end(), s.begin(), s.end());
    return index_of(Subspace::span(F_, n_, r));
}

size_t Lattice::meet_index(size_t i, size_t j) const {
    if (words_) {
        std::vector<std::uint64_t> b(words_);
        const std::uint64_t* x = bits_.data() + i * words_;
        const std::uint64_t* y = bits_.data() + j * words_;
        for (size_t w = 0; w < words_; ++w) b[w] = x[w] & y[w];
        return lookup_bits(b.data());
    }
    // (U ∩ V)^⊥ = U^⊥ + V^⊥
    return comp_[sum_index(comp_[i], comp_[j])];
}

}  // namespace qpoly
