#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gen.hpp"

using namespace qpoly;

namespace {
int choose2(int x) { return x * (x - 1) / 2; }

std::vector<Ambient> small_ambients() {
    return {Ambient::make(Kind::Alt, 4, 2), Ambient::make(Kind::Sym, 3, 2), Ambient::make(Kind::Sym, 3, 3),
            Ambient::make(Kind::Her, 2, 2), Ambient::make(Kind::Her, 3, 2), Ambient::make(Kind::Alt, 3, 3),
            Ambient::full(3, 3, 2), Ambient::full(2, 3, 3)};
}

// Minimal dim X(U) over U with dim C(U) >= j, by enumerating all subspaces.
std::vector<int> x_weights_brute(const Code& C) {
    const Ambient& a = C.amb;
    std::vector<int> best(C.dim(), 1 << 20);
    for (int u = 0; u <= a.n; ++u)
        enumerate_subspaces(a.Fe, a.n, u, [&](const Subspace& U) {
            const int c = shorten(C, U).dim();
            const int x = static_cast<int>(shortened_space(a, U).size());
            for (int j = 1; j <= c; ++j) best[j - 1] = std::min(best[j - 1], x);
        });
    return best;
}
}  // namespace

TEST_CASE("rank functions of random codes satisfy the axioms at the declared scale") {
    for (const Ambient& a : small_ambients()) {
        CAPTURE(a.name());
        for (int t = 0; t < 6; ++t) {
            Code C = gen::code(a);
            QPolymatroid Mc = polymatroid_from_code_columns(C);
            QPolymatroid Mr = polymatroid_from_code_rows(C);
            CHECK(Mc.r == a.ell * a.n);  // columns live in F^m
            CHECK(Mc.full_rank() == C.dim());
            CHECK(Mr.full_rank() == C.dim());
            CHECK(Mc.at(Subspace::zero(a.Fe, Mc.n())) == 0);
            AxiomReport rc = check_axioms(Mc, Rational(Mc.r));
            AxiomReport rr = check_axioms(Mr, Rational(Mr.r));
            CHECK(rc.ok);
            CHECK(rr.ok);
            CHECK(rc.minimal_valid_r <= Rational(Mc.r));
            // The dual is again a q-polymatroid and the construction is an involution.
            QPolymatroid D = dual_polymatroid(Mc);
            CHECK(check_axioms(D, Rational(D.r)).ok);
            CHECK(dual_polymatroid(D) == Mc);
        }
    }
}

TEST_CASE("dual table equals the Delsarte dual's table for full matrix codes") {
    for (const Ambient& a : {Ambient::full(3, 3, 2), Ambient::full(2, 3, 3), Ambient::full(3, 2, 2)})
        for (int t = 0; t < 8; ++t) {
            Code C = gen::code(a);
            CHECK(dual_polymatroid(polymatroid_from_code_columns(C)).rank ==
                  polymatroid_from_code_columns(delsarte_dual(C)).rank);
        }
}

TEST_CASE("column rank agrees with the shortened-code formula") {
    // rho(U) = dim C - dim C(U^perp): Y A = 0 iff colsp(A) lies in ker Y (plain dot product, all kinds).
    for (const Ambient& a : small_ambients()) {
        CAPTURE(a.name());
        for (int t = 0; t < 4; ++t) {
            Code C = gen::code(a);
            for (int u = 0; u < 10; ++u) {
                Subspace U = gen::subspace(a.Fe, a.m);
                CHECK(column_rank(C, U) == C.dim() - shorten(C, complement(U)).dim());
            }
        }
    }
}

TEST_CASE("whole alternating space on F_2^5") {
    Code C = construct_family({"alt_DG", 5, 2, 1, 0, 2, 1});
    QPolymatroid M = polymatroid_from_code_columns(C);
    std::vector<int> by_dim(6, -1);
    for (size_t i = 0; i < M.L->size(); ++i) {
        const int u = M.L->at(i).dim;
        if (by_dim[u] < 0) by_dim[u] = M.rank[i];
        CHECK(M.rank[i] == by_dim[u]);
    }
    CHECK(by_dim == std::vector<int>{0, 4, 7, 9, 10, 10});
    for (int u = 0; u <= 5; ++u) CHECK(by_dim[u] == 10 - choose2(5 - u));
}

TEST_CASE("zero code has the zero rank function") {
    for (const Ambient& a : small_ambients()) {
        QPolymatroid M = polymatroid_from_code_columns(zero_code(a));
        for (int r : M.rank) CHECK(r == 0);
        CHECK(check_axioms(M, Rational(M.r)).ok);
    }
}

TEST_CASE("closed form for shortened ambient codes matches the computed table") {
    for (Kind k : {Kind::Alt, Kind::Sym, Kind::Her})
        for (int q : {2, 3}) {
            const int n = k == Kind::Her ? 2 : 3;
            Ambient a = Ambient::make(k, n, q);
            for (int t = 0; t < 6; ++t) {
                Subspace V = gen::subspace(a.Fe, n);
                Code X = code_from_coords(a, shortened_space(a, V));
                CHECK(polymatroid_of_shortened_ambient(k, n, q, V).rank == polymatroid_from_code_columns(X).rank);
            }
        }
}

TEST_CASE("Hermitian row table is the conjugated column table") {
    Ambient a = Ambient::make(Kind::Her, 3, 2);
    for (int t = 0; t < 5; ++t) {
        Code C = gen::code(a);
        QPolymatroid Mc = polymatroid_from_code_columns(C), Mr = polymatroid_from_code_rows(C);
        auto sig = sigma_map(*Mc.L);
        for (size_t i = 0; i < sig.size(); ++i) {
            CHECK(sig[sig[i]] == i);
            CHECK(Mr.rank[i] == Mc.rank[sig[i]]);
        }
        CHECK(compare(Mr, Mc, &sig) != CompareResult::Distinct);
    }
}

TEST_CASE("quotient rank: difference and direct expressions agree") {
    for (const Ambient& a : {Ambient::make(Kind::Sym, 3, 2), Ambient::make(Kind::Alt, 4, 3), Ambient::make(Kind::Her, 2, 2)})
        for (int t = 0; t < 8; ++t) {
            Code C = gen::code(a), D = gen::code(a);
            QuotientTables Q = quotient_rank_functions(C, D);
            CHECK(Q.difference == Q.direct);
        }
}

TEST_CASE("x-weights against brute force") {
    for (const Ambient& a : {Ambient::make(Kind::Alt, 4, 2), Ambient::make(Kind::Sym, 3, 3), Ambient::make(Kind::Her, 2, 2)})
        for (int t = 0; t < 5; ++t) {
            Code C = gen::code(a);
            if (C.dim() == 0) continue;
            CHECK(x_weights(C) == x_weights_brute(C));
        }
    // Whole space: d_j is the smallest shortened dimension binom(u,2) >= j.
    Code W = whole_space(Ambient::make(Kind::Alt, 5, 2));
    CHECK(x_weights(W) == std::vector<int>{1, 3, 3, 6, 6, 6, 10, 10, 10, 10});
}

TEST_CASE("planted violations are caught by both submodularity methods") {
    Code C = random_code(Ambient::make(Kind::Sym, 3, 2), 4, 5);
    QPolymatroid M = polymatroid_from_code_columns(C);
    // rho(U) = max(0, dim U - 1) is monotone and bounded but supermodular:
    // two distinct lines give 0 + 0 < rho(plane) + rho(0) = 1.
    QPolymatroid bad = M;
    bad.r = 1;
    for (size_t i = 0; i < bad.L->size(); ++i) bad.rank[i] = std::max(0, bad.L->at(i).dim - 1);
    AxiomReport all = check_axioms(bad, Rational(bad.r));
    AxiomReport dia = check_axioms(bad, Rational(bad.r), 0);
    CHECK(all.r3_method == "all-pairs");
    CHECK(dia.r3_method == "diamonds");
    CHECK_FALSE(all.ok);
    CHECK_FALSE(dia.ok);
    CHECK(check_axioms(M, Rational(M.r), 0).ok);

    // A single excess value on a 1-space violates boundedness only.
    QPolymatroid big = M;
    big.rank[1] = M.r + 1;
    CHECK_FALSE(check_axioms(big, Rational(big.r)).ok);
}

TEST_CASE("minors") {
    Code C = random_code(Ambient::make(Kind::Alt, 4, 2), 3, 11);
    QPolymatroid M = polymatroid_from_code_columns(C);
    FieldPtr F = C.amb.Fe;
    for (int t = 0; t < 20; ++t) {
        Subspace Y = gen::subspace(F, 4);
        Subspace X = sum_and_meet(gen::subspace(F, 4), Y).second;
        Minor m = minor(M, X, Y);
        size_t count = 0;
        for (size_t i = 0; i < M.L->size(); ++i) {
            const Subspace& T = M.L->at(i);
            if (T.contains(X) && Y.contains(T)) ++count;
        }
        CHECK(m.members.size() == count);
        for (size_t j = 0; j < m.members.size(); ++j) {
            const Subspace& T = M.L->at(m.members[j]);
            CHECK(T.contains(X));
            CHECK(Y.contains(T));
            CHECK(m.values[j] == M.rank[m.members[j]] - M.at(X));
        }
        CHECK(restriction(M, Y).members == minor(M, Subspace::zero(F, 4), Y).members);
        CHECK(contraction(M, X).values == minor(M, X, Subspace::full(F, 4)).values);
    }
}
