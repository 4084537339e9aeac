#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gen.hpp"

using namespace qpoly;

namespace {
FamilyParams fp(const std::string& family, int n, int d, int q, int e = 0, int k = 0) {
    FamilyParams p;
    p.family = family;
    p.n = n;
    p.d = d;
    p.q = q;
    p.e = e;
    p.k = k;
    return p;
}

// Rank distribution of every member of the ambient space, by brute force over
// all matrices with entries in F_q.
std::map<int, std::uint64_t> ambient_rank_counts(Kind k, int n, int q) {
    Ambient a = Ambient::make(k, n, q);
    FieldPtr F = a.Fe;
    std::map<int, std::uint64_t> out;
    const std::uint64_t total = static_cast<std::uint64_t>(std::pow(F->size(), n * n));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Matrix M(F, n, n);
        std::uint64_t v = idx;
        for (auto& x : M.a) {
            x = static_cast<Elem>(v % F->size());
            v /= F->size();
        }
        if (membership(a, M)) ++out[rank(M)];
    }
    return out;
}

std::map<int, std::uint64_t> as_map(std::initializer_list<std::pair<const int, std::uint64_t>> l) { return l; }
}  // namespace

TEST_CASE("weight distributions") {
    // Whole Alt_5(F_2), checked against a brute-force count over all 5x5 matrices.
    Code whole = construct_family(fp("alt_DG", 5, 2, 2));
    CHECK(whole.dim() == 10);
    CHECK(weight_distribution(whole) == as_map({{0, 1}, {2, 155}, {4, 868}}));
    CHECK(weight_distribution(whole) == ambient_rank_counts(Kind::Alt, 5, 2));
    CHECK(weight_distribution(whole_space(Ambient::make(Kind::Sym, 3, 3))) == ambient_rank_counts(Kind::Sym, 3, 3));
    CHECK(weight_distribution(whole_space(Ambient::make(Kind::Her, 2, 2))) == ambient_rank_counts(Kind::Her, 2, 2));

    CHECK(weight_distribution(construct_family(fp("alt_DG", 5, 4, 2))) == as_map({{0, 1}, {4, 31}}));
    CHECK(weight_distribution(construct_family(fp("sym_schmidt", 3, 3, 2))) == as_map({{0, 1}, {3, 7}}));
}

TEST_CASE("family dimensions and distances on small points") {
    for (const auto& p : {fp("alt_DG", 5, 2, 2), fp("alt_DG", 5, 4, 3), fp("sym_schmidt", 4, 2, 2), fp("sym_schmidt", 3, 1, 3),
                          fp("sym_LTZ_eta", 4, 2, 3), fp("her_R", 3, 2, 2), fp("her_H", 3, 2, 2), fp("her_E", 3, 3, 2),
                          fp("her_E", 3, 1, 2)}) {
        CAPTURE(p.family);
        CAPTURE(p.n);
        CAPTURE(p.d);
        Code C = construct_family(p);
        CHECK(C.dim() == expected_dimension(p));
        CHECK(min_distance(C) == advertised_distance(p));
        for (const auto& M : C.gens) CHECK(membership(C.amb, M));
    }
    CHECK(construct_family(fp("her_R", 3, 2, 2)).dim() == 6);
}

TEST_CASE("parameter errors") {
    try {
        construct_family(fp("sym_tang_zhou", 0, 0, 3, 0, 6));
        FAIL("expected ParamError");
    } catch (const ParamError& e) {
        CHECK(std::string(e.what()) == "sym_tang_zhou requires k in {3,4,5}");
    }
    CHECK_THROWS_AS(construct_family(fp("alt_DG", 4, 2, 2)), ParamError);
    CHECK_THROWS_AS(construct_family(fp("sym_schmidt", 5, 2, 2)), ParamError);
    CHECK_THROWS_AS(construct_family(fp("sym_LTZ_eta", 4, 2, 2)), ParamError);
    CHECK_THROWS_AS(construct_family(fp("nope", 3, 1, 2)), ParamError);
    CHECK_THROWS_AS(construct_family(fp("her_R", 3, 2, 4)), ParamError);
}

TEST_CASE("duals") {
    for (Kind k : {Kind::Alt, Kind::Sym, Kind::Her})
        for (int q : {2, 3}) {
            Ambient a = Ambient::make(k, k == Kind::Her ? 2 : 3, q);
            for (int t = 0; t < 10; ++t) {
                Code C = gen::code(a);
                Code O = orthogonal_in_ambient(C);
                CHECK(orthogonal_in_ambient(O).contains(C));
                for (const auto& A : C.gens)
                    for (const auto& B : O.gens) CHECK(ambient_form(a, A, B) == 0);
                if (!form_is_degenerate(a)) {
                    Code D = dual_star(C);
                    CHECK(C.dim() + D.dim() == a.dim());
                    CHECK(dual_star(D) == C);
                } else {
                    CHECK(O.dim() >= a.dim() - C.dim());
                }
                Code F = as_full(C);
                Code FD = delsarte_dual(F);
                CHECK(F.dim() + FD.dim() == F.amb.dim());
                CHECK(delsarte_dual(FD) == F);
            }
        }
    // Sym in characteristic 2: the dual of a code need not have the complementary dimension.
    CHECK_THROWS_AS(dual_star(whole_space(Ambient::make(Kind::Sym, 2, 2))), std::logic_error);
}

TEST_CASE("isometries preserve the rank distribution") {
    for (Kind k : {Kind::Alt, Kind::Sym, Kind::Her}) {
        Ambient a = Ambient::make(k, 3, 2);
        for (int t = 0; t < 5; ++t) {
            Code C = random_code(a, std::min(4, a.dim()), 1000 + t);
            Matrix P = random_invertible(a.Fe, 3, 2000 + t);
            Code D = apply_isometry(C, 1, P, k == Kind::Her ? 1 : 0, Matrix());
            CHECK(D.dim() == C.dim());
            CHECK(weight_distribution(D) == weight_distribution(C));
        }
    }
}

TEST_CASE("shortening and corner deletion") {
    for (Kind k : {Kind::Alt, Kind::Sym, Kind::Her})
        for (int q : {2, 3}) {
            const int n = 3;
            Ambient a = Ambient::make(k, n, q);
            for (int t = 0; t < 10; ++t) {
                Code C = gen::code(a);
                Subspace U = gen::subspace(a.Fe, n);
                Code S = shorten(C, U);
                CHECK(C.contains(S));
                CHECK(shorten(C, Subspace::full(a.Fe, n)) == C);
                CHECK(shorten(C, Subspace::zero(a.Fe, n)).dim() == 0);
                CHECK(shorten(S, U) == S);
                // Symmetric-type codewords have the same column and row space up to conjugation.
                if (k != Kind::Her) CHECK(shorten_rows(C, U) == S);
                for (const auto& M : S.gens) {
                    Matrix Mt = M.transpose();
                    for (int j = 0; j < n; ++j) {
                        std::vector<Elem> col = Mt.row(j);
                        CHECK(U.contains(col));
                    }
                }
                Code K = corner_delete(C, 2);
                CHECK(K.amb.n == 2);
                CHECK(K.dim() <= C.dim());
                for (const auto& M : K.gens) CHECK(membership(K.amb, M));
            }
        }
}

TEST_CASE("JSON round trip") {
    for (const auto& p : {fp("alt_DG", 5, 4, 2), fp("her_R", 3, 2, 2), fp("sym_schmidt", 3, 1, 3)}) {
        Code C = construct_family(p);
        Code D = code_from_json(code_to_json(C));
        CHECK(D == C);
        CHECK(code_to_json(D) == code_to_json(C));
    }
    Code R = random_code(Ambient::full(2, 3, 3), 4, 7);
    CHECK(code_from_json(code_to_json(R)) == R);
}

TEST_CASE("bounds on attaining families") {
    for (const auto& p : {fp("alt_DG", 5, 4, 2), fp("sym_schmidt", 3, 3, 2), fp("her_R", 3, 2, 2)}) {
        Code C = construct_family(p);
        BoundReport b = family_bound(p, C);
        CAPTURE(p.family);
        CHECK(b.code_log == C.dim());
        CHECK(Rational(b.code_log) <= b.bound);
    }
}
