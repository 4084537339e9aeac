#include "qpoly/linpoly.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qpoly {

namespace {

FieldPtr big_field(int q, int ell, int n) { return Field::get(q, ell * n); }

long mod(long a, long m) { return ((a % m) + m) % m; }

void check_ring(const LinPoly& f, const LinPoly& g) {
    if (!f.same_ring(g)) throw std::invalid_argument("linearized polynomials over different rings");
}

}  // namespace

LinPoly LinPoly::zero(int q, int ell, int n, int s) {
    if (!is_prime(q)) throw std::invalid_argument("q must be prime");
    if (ell != 1 && ell != 2) throw std::invalid_argument("ell must be 1 or 2");
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (std::gcd(s, ell * n) != 1) throw std::invalid_argument("twist s must satisfy gcd(s, ell*n) = 1");
    LinPoly f;
    f.B = big_field(q, ell, n);
    f.q = q;
    f.ell = ell;
    f.n = n;
    f.s = s;
    f.c.assign(n, 0);
    return f;
}

LinPoly LinPoly::x(int q, int ell, int n, int s) { return monomial(q, ell, n, s, 0, 1); }

LinPoly LinPoly::monomial(int q, int ell, int n, int s, int i, Elem coeff) {
    LinPoly f = zero(q, ell, n, s);
    f.c[mod(i, n)] = coeff;
    return f;
}

bool LinPoly::is_zero() const {
    for (Elem x : c)
        if (x) return false;
    return true;
}

int LinPoly::degree() const {
    for (int i = n - 1; i >= 0; --i)
        if (c[i]) return i;
    return -1;
}

LinPoly LinPoly::operator+(const LinPoly& o) const {
    check_ring(*this, o);
    LinPoly r = *this;
    for (int i = 0; i < n; ++i) r.c[i] = B->add(c[i], o.c[i]);
    return r;
}

LinPoly LinPoly::operator-(const LinPoly& o) const {
    check_ring(*this, o);
    LinPoly r = *this;
    for (int i = 0; i < n; ++i) r.c[i] = B->sub(c[i], o.c[i]);
    return r;
}

void LinPoly::add_term(int i, Elem coeff) {
    int k = static_cast<int>(mod(i, n));
    c[k] = B->add(c[k], coeff);
}

void LinPoly::add_power_term(Elem b, long e) {
    const long N = static_cast<long>(ell) * n;
    long em = mod(e, N);
    if (em % ell) throw std::invalid_argument("exponent is not a power of Q = q^ell");
    long t = em / ell;  // want s*i = t mod n
    long i = 0;
    while (i < n && mod(static_cast<long>(s) * i - t, n) != 0) ++i;
    if (i == n) throw std::logic_error("no monomial index for exponent");
    add_term(static_cast<int>(i), B->frob(b, e));
}

Elem evaluate(const LinPoly& f, Elem x) {
    const Field& B = *f.B;
    Elem r = 0;
    for (int i = 0; i < f.n; ++i)
        if (f.c[i]) r = B.add(r, B.mul(f.c[i], B.frob(x, static_cast<long>(f.ell) * f.s * i)));
    return r;
}

LinPoly compose_mod(const LinPoly& f, const LinPoly& g) {
    check_ring(f, g);
    const Field& B = *f.B;
    LinPoly r = LinPoly::zero(f.q, f.ell, f.n, f.s);
    for (int i = 0; i < f.n; ++i) {
        if (!f.c[i]) continue;
        for (int j = 0; j < f.n; ++j) {
            if (!g.c[j]) continue;
            Elem t = B.mul(f.c[i], B.frob(g.c[j], static_cast<long>(f.ell) * f.s * i));
            r.add_term(i + j, t);
        }
    }
    return r;
}

LinPoly adjoint(const LinPoly& f) {
    const Field& B = *f.B;
    LinPoly r = LinPoly::zero(f.q, f.ell, f.n, f.s);
    for (int i = 0; i < f.n; ++i) {
        int k = static_cast<int>(mod(f.n - i, f.n));
        r.c[k] = B.frob(f.c[i], static_cast<long>(f.ell) * f.s * (f.n - i));
    }
    return r;
}

int poly_rank_fq(const LinPoly& f) {
    const Field& B = *f.B;
    const int K = B.k();
    std::vector<FpVec> rows;
    Elem b = 1;
    for (int t = 0; t < K; ++t) {
        Elem y = evaluate(f, b);
        FpVec v(K);
        for (int i = 0; i < K; ++i) v[i] = static_cast<std::uint8_t>(B.digit(y, i));
        rows.push_back(std::move(v));
        b *= static_cast<Elem>(f.q);
    }
    return fp_rank(f.q, rows, K);
}

int poly_rank(const LinPoly& f) { return poly_rank_fq(f) / f.ell; }

bool model_membership(Kind k, const LinPoly& f) {
    const Field& B = *f.B;
    const int n = f.n;
    const long s = f.s;
    switch (k) {
        case Kind::Alt:
            if (f.ell != 1) throw std::invalid_argument("Alt model needs ell = 1");
            if (f.c[0]) return false;
            for (int i = 1; i < n; ++i)
                if (f.c[n - i] != B.neg(B.frob(f.c[i], s * (n - i)))) return false;
            return true;
        case Kind::Sym:
            if (f.ell != 1) throw std::invalid_argument("Sym model needs ell = 1");
            for (int i = 0; i < n; ++i)
                if (f.c[mod(n - i, n)] != B.frob(f.c[i], s * (n - i))) return false;
            return true;
        case Kind::Her:
            if (f.ell != 2) throw std::invalid_argument("Her model needs ell = 2");
            for (int i = 0; i < n; ++i)
                if (f.c[mod(n - i + 1, n)] != B.frob(f.c[i], s * (2L * n - 2L * i + 1))) return false;
            return true;
        case Kind::Full: return true;
    }
    return false;
}

std::vector<Elem> gram_basis(const LinPoly& f) {
    std::vector<Elem> b(f.n);
    Elem g = f.B->gen();
    Elem x = 1;
    for (int i = 0; i < f.n; ++i) {
        b[i] = x;
        x = f.B->mul(x, g);
    }
    return b;
}

Matrix to_gram_twisted(const LinPoly& f, int e) {
    const Field& B = *f.B;
    FieldPtr Fe = Field::get(f.q, f.ell);
    auto beta = gram_basis(f);
    std::vector<Elem> fb(f.n), bt(f.n);
    for (int j = 0; j < f.n; ++j) {
        fb[j] = evaluate(f, beta[j]);
        bt[j] = B.frob(beta[j], e);
    }
    Matrix G(Fe, f.n, f.n);
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j) G.at(i, j) = rel_trace(f.B, B.mul(bt[i], fb[j]), Fe);
    return G;
}

int her_gram_twist(int n, int s) {
    // her_twist_search finds the single exponent e = s (t = 1) at every
    // point tried; the regression test re-runs the search.
    return static_cast<int>(mod(s, 2 * n));
}

Matrix to_gram(Kind k, const LinPoly& f) {
    if (k == Kind::Full) throw std::invalid_argument("to_gram needs Alt/Sym/Her");
    if (!model_membership(k, f)) throw std::invalid_argument("polynomial is not in the " + kind_name(k) + " model");
    int e = (k == Kind::Her) ? her_gram_twist(f.n, f.s) : 0;
    Matrix G = to_gram_twisted(f, e);
    if (!membership(Ambient::make(k, f.n, f.q), G)) throw std::logic_error("Gram matrix left the ambient space");
    return G;
}

std::vector<LinPoly> model_basis(Kind k, int n, int q, int s) {
    const int ell = (k == Kind::Her) ? 2 : 1;
    LinPoly z = LinPoly::zero(q, ell, n, s);
    const Field& B = *z.B;
    const int K = B.k();
    const int vars = n * K;
    // Linear map coefficient vector -> membership defect, as F_q digits.
    auto defect = [&](const LinPoly& f) {
        FpVec d;
        auto push = [&](Elem x) {
            for (int t = 0; t < K; ++t) d.push_back(static_cast<std::uint8_t>(B.digit(x, t)));
        };
        for (int i = 0; i < n; ++i) {
            Elem lhs = 0, rhs = 0;
            if (k == Kind::Alt) {
                lhs = f.c[mod(n - i, n)];
                rhs = B.neg(B.frob(f.c[i], static_cast<long>(s) * (n - i)));
                if (i == 0) push(f.c[0]);
            } else if (k == Kind::Sym) {
                lhs = f.c[mod(n - i, n)];
                rhs = B.frob(f.c[i], static_cast<long>(s) * (n - i));
            } else {
                lhs = f.c[mod(n - i + 1, n)];
                rhs = B.frob(f.c[i], static_cast<long>(s) * (2L * n - 2L * i + 1));
            }
            push(B.sub(lhs, rhs));
        }
        return d;
    };
    std::vector<FpVec> cols;  // defect of each unit coefficient vector
    for (int v = 0; v < vars; ++v) {
        LinPoly f = z;
        f.c[v / K] = static_cast<Elem>(std::pow(q, v % K));
        cols.push_back(defect(f));
    }
    const int m = static_cast<int>(cols[0].size());
    std::vector<FpVec> rows(m, FpVec(vars, 0));
    for (int v = 0; v < vars; ++v)
        for (int r = 0; r < m; ++r) rows[r][v] = cols[v][r];
    auto ker = fp_rref(q, fp_kernel(q, rows, vars), vars).rows;
    std::vector<LinPoly> out;
    for (const auto& x : ker) {
        LinPoly f = z;
        for (int i = 0; i < n; ++i) {
            std::vector<int> d(K);
            for (int t = 0; t < K; ++t) d[t] = x[i * K + t];
            f.c[i] = B.from_digits(d);
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<int> her_twist_search(int q, int n, int s) {
    auto basis = model_basis(Kind::Her, n, q, s);
    Ambient a = Ambient::make(Kind::Her, n, q);
    std::vector<int> good;
    for (int e = 0; e < 2 * n; ++e) {
        bool ok = true;
        std::vector<FpVec> rows;
        for (const auto& f : basis) {
            Matrix G = to_gram_twisted(f, e);
            if (!membership(a, G)) {
                ok = false;
                break;
            }
            rows.push_back(to_coords(a, G));
        }
        if (ok && fp_rank(q, rows, a.dim()) == a.dim()) good.push_back(e);
    }
    return good;
}

std::vector<Elem> subfield_basis(const FieldPtr& big, int q, int m) {
    FieldPtr sub = Field::get(q, m);
    const Embedding& E = Embedding::get(sub, big);
    std::vector<Elem> out;
    Elem b = 1;
    for (int t = 0; t < m; ++t) {
        out.push_back(E.embed(b));
        b *= static_cast<Elem>(q);
    }
    return out;
}

}  // namespace qpoly
