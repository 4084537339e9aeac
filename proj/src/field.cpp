#include "qpoly/field.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace qpoly {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<int>;  // low degree first, trimmed

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over F_p, b monic.
Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int c = a.back();
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(r, m, p);
}

Poly poly_sub(Poly a, const Poly& b, int p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic
        int lc = b.back(), inv = 1;
        while ((lc * inv) % p != 1) ++inv;
        for (int& c : b) c = (c * inv) % p;
        Poly r = poly_mod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

// X^{p^e} mod m
Poly frob_power_x(int e, const Poly& m, int p) {
    Poly x = {0, 1};
    Poly cur = poly_mod(x, m, p);
    for (int t = 0; t < e; ++t) {
        Poly r = {1};
        Poly base = cur;
        int ex = p;
        while (ex) {
            if (ex & 1) r = poly_mulmod(r, base, m, p);
            base = poly_mulmod(base, base, m, p);
            ex >>= 1;
        }
        cur = r;
    }
    return cur;
}

}  // namespace

bool is_irreducible(int p, const Poly& monic) {
    const int k = static_cast<int>(monic.size()) - 1;
    if (k < 1) return false;
    if (k == 1) return true;
    // Rabin's test: gcd(X^{p^{k/r}} - X, f) = 1 for prime r | k and f | X^{p^k} - X.
    Poly x = {0, 1};
    for (int r = 2; r <= k; ++r) {
        if (k % r || !is_prime(r)) continue;
        Poly g = poly_gcd(monic, poly_sub(frob_power_x(k / r, monic, p), x, p), p);
        if (g.size() != 1) return false;
    }
    return poly_mod(poly_sub(frob_power_x(k, monic, p), x, p), monic, p).empty();
}

Poly smallest_irreducible(int p, int k) {
    // Enumerate non-leading coefficient vectors in lexicographic order with
    // coefficient 0 (constant term) most significant.
    Poly c(k, 0);
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (int i = k - 1; i >= 0; --i) {
            c[i] = static_cast<int>(v % p);
            v /= p;
        }
        Poly f = c;
        f.push_back(1);
        if (is_irreducible(p, f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

Field::Field(int p, int k, std::vector<int> modulus, int id)
    : p_(p), k_(k), modulus_(std::move(modulus)), id_(id) {
    pw_.resize(k + 1);
    pw_[0] = 1;
    for (int i = 1; i <= k; ++i) pw_[i] = pw_[i - 1] * static_cast<std::uint32_t>(p);
    size_ = pw_[k];
}

FieldPtr Field::get(int p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    if (k < 1 || k > kMaxDegree)
        throw std::invalid_argument("extension degree out of range [1,12]: " + std::to_string(k));
    std::uint64_t sz = 1;
    for (int i = 0; i < k; ++i) sz *= static_cast<std::uint64_t>(p);
    if (sz > kMaxSize) throw std::invalid_argument("field size exceeds 2^20: " + std::to_string(sz));
    static std::mutex mu;
    static std::map<std::pair<int, int>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
    auto f = FieldPtr(new Field(p, k, smallest_irreducible(p, k), static_cast<int>(cache.size()) + 1));
    cache[{p, k}] = f;
    return f;
}

std::string Field::name() const {
    return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

Elem Field::gen() const { return k_ >= 2 ? static_cast<Elem>(p_) : primitive(); }

Elem Field::from_int(long v) const { return static_cast<Elem>(((v % p_) + p_) % p_); }

Elem Field::from_digits(const std::vector<int>& d) const {
    Elem r = 0;
    for (int i = k_ - 1; i >= 0; --i) r = r * p_ + static_cast<Elem>(i < static_cast<int>(d.size()) ? ((d[i] % p_) + p_) % p_ : 0);
    return r;
}

std::vector<int> Field::digits(Elem a) const {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i) {
        d[i] = static_cast<int>(a % p_);
        a /= p_;
    }
    return d;
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (size_ <= 256) {
        ensure_tables();
        return add_tab_[a * size_ + b];
    }
    Elem r = 0;
    for (int i = 0; i < k_; ++i) {
        Elem s = (a % p_) + (b % p_);
        if (s >= static_cast<Elem>(p_)) s -= p_;
        r += s * pw_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    Elem r = 0;
    for (int i = 0; i < k_; ++i) {
        Elem d = a % p_;
        r += (d ? p_ - d : 0) * pw_[i];
        a /= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::scale(Elem a, int c) const {
    c = ((c % p_) + p_) % p_;
    if (c == 0) return 0;
    if (c == 1) return a;
    Elem r = 0;
    for (int i = 0; i < k_; ++i) {
        r += static_cast<Elem>(((a % p_) * c) % p_) * pw_[i];
        a /= p_;
    }
    return r;
}

Elem Field::mul_poly(Elem a, Elem b) const {
    std::vector<int> da = digits(a), db = digits(b), r(2 * k_, 0);
    for (int i = 0; i < k_; ++i)
        if (da[i])
            for (int j = 0; j < k_; ++j) r[i + j] = (r[i + j] + da[i] * db[j]) % p_;
    for (int d = 2 * k_ - 1; d >= k_; --d) {
        int c = r[d];
        if (!c) continue;
        for (int i = 0; i <= k_; ++i) r[d - k_ + i] = ((r[d - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    r.resize(k_);
    return from_digits(r);
}

void Field::build_tables() const {
    // Find the smallest primitive element in index order.
    const std::uint32_t ord = size_ - 1;
    std::vector<std::uint32_t> primes;
    {
        std::uint32_t m = ord;
        for (std::uint32_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                primes.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) primes.push_back(m);
    }
    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul_poly(r, a);
            a = mul_poly(a, a);
            e >>= 1;
        }
        return r;
    };
    Elem g = 0;
    for (Elem c = 1; c < size_; ++c) {
        bool ok = true;
        for (auto r : primes)
            if (slow_pow(c, ord / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = c;
            break;
        }
    }
    if (size_ == 2) g = 1;
    prim_ = g;
    exp_.assign(2 * static_cast<size_t>(ord) + 1, 0);
    log_.assign(size_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < ord; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = mul_poly(x, g);
    }
    for (std::uint32_t i = ord; i < 2 * ord + 1; ++i) exp_[i] = exp_[i - ord];
    if (size_ <= 256) {
        add_tab_.resize(static_cast<size_t>(size_) * size_);
        mul_tab_.resize(static_cast<size_t>(size_) * size_);
        for (Elem a = 0; a < size_; ++a)
            for (Elem b = 0; b < size_; ++b) {
                Elem s = 0, aa = a, bb = b;
                for (int i = 0; i < k_; ++i) {
                    s += static_cast<Elem>((aa % p_ + bb % p_) % p_) * pw_[i];
                    aa /= p_;
                    bb /= p_;
                }
                add_tab_[a * size_ + b] = s;
                mul_tab_[a * size_ + b] = (a && b) ? exp_[log_[a] + log_[b]] : 0;
            }
    }
}

Elem Field::mul(Elem a, Elem b) const {
    if (!a || !b) return 0;
    ensure_tables();
    if (!mul_tab_.empty()) return mul_tab_[a * size_ + b];
    return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
    if (!a) throw std::domain_error("inverse of zero in " + name());
    ensure_tables();
    const std::uint32_t ord = size_ - 1;
    return exp_[(ord - log_[a]) % ord];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (!a) return 0;
    ensure_tables();
    const std::uint64_t ord = size_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % ord)) % ord];
}

Elem Field::frob(Elem a, long i) const {
    long r = ((i % k_) + k_) % k_;
    if (r == 0 || a <= 1) return a;
    std::uint64_t e = 1;
    for (long t = 0; t < r; ++t) e *= static_cast<std::uint64_t>(p_);
    return pow(a, e);
}

Elem Field::primitive() const {
    ensure_tables();
    return prim_;
}

bool Field::is_square(Elem a) const {
    // Convention: 0 counts as a square; every element is a square in char 2.
    if (a == 0 || p_ == 2) return true;
    return pow(a, (size_ - 1) / 2) == 1;
}

Embedding::Embedding(FieldPtr sub, FieldPtr big) : sub_(std::move(sub)), big_(std::move(big)) {
    if (sub_->p() != big_->p() || big_->k() % sub_->k() != 0)
        throw std::invalid_argument(sub_->name() + " is not a subfield of " + big_->name());
    const Field& B = *big_;
    const Field& S = *sub_;
    const auto& m = S.modulus();
    Elem theta = 0;
    bool found = false;
    if (S.k() == 1) {
        found = true;
    } else {
        for (Elem y = 0; y < B.size() && !found; ++y) {
            Elem acc = 0;
            for (int i = S.k(); i >= 0; --i) acc = B.add(B.mul(acc, y), B.from_int(m[i]));
            if (acc == 0) {
                theta = y;
                found = true;
            }
        }
    }
    if (!found) throw std::logic_error("no root of subfield modulus found");
    root_ = theta;
    std::vector<Elem> powers(S.k());
    Elem cur = 1;
    for (int i = 0; i < S.k(); ++i) {
        powers[i] = cur;
        cur = B.mul(cur, theta);
    }
    fwd_.resize(S.size());
    back_.assign(B.size(), -1);
    for (Elem x = 0; x < S.size(); ++x) {
        Elem y = 0;
        for (int i = 0; i < S.k(); ++i) {
            int d = S.digit(x, i);
            if (d) y = B.add(y, B.scale(powers[i], d));
        }
        fwd_[x] = y;
        back_[y] = static_cast<std::int32_t>(x);
    }
}

const Embedding& Embedding::get(const FieldPtr& sub, const FieldPtr& big) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Embedding>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(sub->id(), big->id());
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto e = std::unique_ptr<Embedding>(new Embedding(sub, big));
    auto& ref = *e;
    cache[key] = std::move(e);
    return ref;
}

Elem Embedding::section(Elem y) const {
    if (back_[y] < 0) throw std::domain_error("element not in subfield " + sub_->name());
    return static_cast<Elem>(back_[y]);
}

Elem rel_trace(const FieldPtr& big, Elem x, const FieldPtr& sub) {
    const auto& emb = Embedding::get(sub, big);
    const int r = sub->k();
    const int steps = big->k() / r;
    Elem acc = 0;
    for (int i = 0; i < steps; ++i) acc = big->add(acc, big->frob(x, static_cast<long>(r) * i));
    return emb.section(acc);
}

}  // namespace qpoly
