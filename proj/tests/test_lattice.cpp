#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gen.hpp"

using namespace qpoly;

TEST_CASE("Gaussian binomials") {
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 1, 3) == 13);
    CHECK(gaussian_binomial(5, 0, 7) == 1);
    CHECK(gaussian_binomial(3, 4, 2) == 0);
}

TEST_CASE("enumeration counts match Gaussian binomials") {
    for (auto [p, k, nmax] : std::vector<std::tuple<int, int, int>>{{2, 1, 5}, {3, 1, 4}, {2, 2, 3}}) {
        FieldPtr F = Field::get(p, k);
        for (int n = 1; n <= nmax; ++n)
            for (int d = 0; d <= n; ++d) {
                std::set<std::string> keys;
                enumerate_subspaces(F, n, d, [&](const Subspace& U) {
                    CHECK(U.dim == d);
                    keys.insert(U.key());
                });
                CHECK(BigInt(keys.size()) == gaussian_binomial(n, d, F->size()));
            }
    }
}

TEST_CASE("lattice sizes") {
    CHECK(Lattice(Field::get(2, 1), 4).size() == 67);
    CHECK(Lattice(Field::get(3, 1), 3).size() == 28);
    CHECK(Lattice(Field::get(2, 2), 3).size() == 44);
}

TEST_CASE("budget overrun is reported") {
    CHECK_THROWS_AS(Lattice(Field::get(2, 1), 5, 100), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_subspaces(Field::get(3, 1), 4, 2, [](const Subspace&) {}, 10), BudgetExceeded);
}

TEST_CASE("complement, sum and meet") {
    for (auto [p, k, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 4}, {3, 1, 3}, {2, 2, 3}}) {
        FieldPtr F = Field::get(p, k);
        for (int t = 0; t < 100; ++t) {
            Subspace U = gen::subspace(F, n), V = gen::subspace(F, n);
            Subspace Uc = complement(U);
            CHECK(Uc.dim == n - U.dim);
            CHECK(complement(Uc) == U);
            auto [S, M] = sum_and_meet(U, V);
            CHECK(S.contains(U));
            CHECK(S.contains(V));
            CHECK(U.contains(M));
            CHECK(V.contains(M));
            CHECK(S.dim + M.dim == U.dim + V.dim);
        }
    }
}

TEST_CASE("lattice index operations agree with linear algebra") {
    for (auto [p, k, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 4}, {3, 1, 3}, {2, 2, 3}}) {
        LatticePtr L = lattice_for(Field::get(p, k), n);
        for (int t = 0; t < 200; ++t) {
            size_t i = gen::uniform(0, static_cast<int>(L->size()) - 1), j = gen::uniform(0, static_cast<int>(L->size()) - 1);
            auto [S, M] = sum_and_meet(L->at(i), L->at(j));
            CHECK(L->at(L->sum_index(i, j)) == S);
            CHECK(L->at(L->meet_index(i, j)) == M);
            CHECK(L->at(L->complement_index(i)) == complement(L->at(i)));
        }
        for (size_t i = 0; i < L->size(); ++i) {
            const Subspace& U = L->at(i);
            if (U.dim == 0) continue;
            const auto& hs = L->hyperplanes(i);
            CHECK(BigInt(hs.size()) == gaussian_binomial(U.dim, U.dim - 1, L->field()->size()));
            for (auto h : hs) {
                CHECK(L->at(h).dim == U.dim - 1);
                CHECK(U.contains(L->at(h)));
            }
        }
    }
}

TEST_CASE("sigma image is an involution on F_4 subspaces") {
    FieldPtr F = Field::get(2, 2);
    for (int t = 0; t < 50; ++t) {
        Subspace U = gen::subspace(F, 3);
        CHECK(sigma_image(sigma_image(U, 1), 1) == U);
        CHECK(sigma_image(U, 1).dim == U.dim);
    }
}
