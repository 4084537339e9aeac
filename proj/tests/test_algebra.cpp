#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gen.hpp"

using namespace qpoly;

namespace {
// Degree 2 and 3 polynomials are irreducible iff they have no root in F_p.
std::vector<int> smallest_rootless(int p, int k) {
    std::vector<std::vector<int>> cands;
    std::vector<int> c(k, 0);
    for (int idx = 0; idx < static_cast<int>(std::pow(p, k)); ++idx) {
        for (int i = 0, v = idx; i < k; ++i, v /= p) c[i] = v % p;
        bool root = false;
        for (int x = 0; x < p && !root; ++x) {
            long val = 0, xp = 1;
            for (int i = 0; i < k; ++i, xp *= x) val += c[i] * xp;
            root = (val + xp) % p == 0;
        }
        if (!root) {
            cands.push_back(c);
            cands.back().push_back(1);
        }
    }
    return *std::min_element(cands.begin(), cands.end());
}
}  // namespace

TEST_CASE("smallest irreducible moduli") {
    CHECK(smallest_irreducible(2, 2) == std::vector<int>{1, 1, 1});
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}})
        CHECK(smallest_irreducible(p, k) == smallest_rootless(p, k));
    CHECK(smallest_irreducible(2, 3) == std::vector<int>{1, 0, 1, 1});
    CHECK(smallest_irreducible(3, 2) == std::vector<int>{1, 0, 1});
    CHECK(is_irreducible(2, {1, 1, 0, 0, 1}));
    CHECK_FALSE(is_irreducible(2, {1, 0, 1}));  // (x+1)^2
}

TEST_CASE("field axioms on random triples") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {7, 2}}) {
        FieldPtr F = Field::get(p, k);
        CAPTURE(F->name());
        CHECK(F->size() == static_cast<std::uint32_t>(std::pow(p, k)));
        for (int t = 0; t < 300; ++t) {
            Elem a = gen::element(F), b = gen::element(F), c = gen::element(F);
            CHECK(F->add(a, F->add(b, c)) == F->add(F->add(a, b), c));
            CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->mul(a, b) == F->mul_poly(a, b));
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a) CHECK(F->mul(a, F->inv(a)) == 1);
        }
    }
}

TEST_CASE("Frobenius is an automorphism of order k fixing the prime field") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {3, 3}}) {
        FieldPtr F = Field::get(p, k);
        int fixed = 0;
        for (Elem a = 0; a < F->size(); ++a) {
            CHECK(F->frob(a, k) == a);
            CHECK(F->frob(F->frob(a, 1), -1) == a);
            if (F->frob(a, 1) == a) ++fixed;
            Elem b = gen::element(F);
            CHECK(F->frob(F->mul(a, b), 1) == F->mul(F->frob(a, 1), F->frob(b, 1)));
            CHECK(F->frob(F->add(a, b), 1) == F->add(F->frob(a, 1), F->frob(b, 1)));
        }
        CHECK(fixed == p);
    }
}

TEST_CASE("primitive element has full order") {
    FieldPtr F = Field::get(3, 3);
    Elem g = F->primitive();
    int order = 1;
    for (Elem x = g; x != 1; x = F->mul(x, g)) ++order;
    CHECK(order == 26);
}

TEST_CASE("squares in odd fields") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}, {3, 3}}) {
        FieldPtr F = Field::get(p, k);
        int squares = 0;
        for (Elem a = 1; a < F->size(); ++a) squares += F->is_square(a);
        CHECK(squares == static_cast<int>(F->size() - 1) / 2);
    }
}

TEST_CASE("relative trace is linear and balanced") {
    FieldPtr big = Field::get(2, 4), sub = Field::get(2, 2);
    std::vector<int> hits(sub->size(), 0);
    for (Elem x = 0; x < big->size(); ++x) {
        ++hits[rel_trace(big, x, sub)];
        Elem y = gen::element(big);
        CHECK(rel_trace(big, big->add(x, y), sub) == sub->add(rel_trace(big, x, sub), rel_trace(big, y, sub)));
    }
    for (int h : hits) CHECK(h == 4);
}

TEST_CASE("subfield embedding is a ring homomorphism") {
    FieldPtr sub = Field::get(3, 1), big = Field::get(3, 2);
    const Embedding& E = Embedding::get(sub, big);
    for (Elem a = 0; a < 3; ++a)
        for (Elem b = 0; b < 3; ++b) {
            CHECK(E.embed(sub->mul(a, b)) == big->mul(E.embed(a), E.embed(b)));
            CHECK(E.embed(sub->add(a, b)) == big->add(E.embed(a), E.embed(b)));
            CHECK(E.section(E.embed(a)) == a);
        }
    int inside = 0;
    for (Elem y = 0; y < big->size(); ++y) inside += E.contains(y);
    CHECK(inside == 3);
}

TEST_CASE("matrix rref, kernel and inverse") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        FieldPtr F = Field::get(p, k);
        for (int t = 0; t < 100; ++t) {
            const int r = gen::uniform(1, 5), c = gen::uniform(1, 5);
            Matrix M = gen::matrix(F, r, c);
            auto ker = kernel_basis(M);
            CHECK(rank(M) + static_cast<int>(ker.size()) == c);
            for (const auto& v : ker) {
                Matrix x(F, c, 1);
                x.a = v;
                CHECK((M * x).is_zero());
            }
            CHECK(rank(M) == rank(M.transpose()));
            if (r == c && rank(M) == r) CHECK(M * inverse(M) == Matrix::identity(F, r));
        }
    }
}

TEST_CASE("prime-field vector helpers agree with the matrix path") {
    for (int t = 0; t < 100; ++t) {
        const int cols = gen::uniform(1, 6);
        std::vector<FpVec> rows(gen::uniform(0, 6), FpVec(cols));
        Matrix M(Field::get(3, 1), static_cast<int>(rows.size()), cols);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < cols; ++j) M.at(static_cast<int>(i), j) = rows[i][j] = static_cast<std::uint8_t>(gen::uniform(0, 2));
        CHECK(fp_rank(3, rows, cols) == (rows.empty() ? 0 : rank(M)));
        auto ker = fp_kernel(3, rows, cols);
        CHECK(static_cast<int>(ker.size()) == cols - fp_rank(3, rows, cols));
    }
}
