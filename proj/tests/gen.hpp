#pragma once
// Hand-rolled generators for the property tests (fixed seeds).

#include <random>

#include "qpoly/verify.hpp"

namespace gen {

using namespace qpoly;

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(20240611);
    return r;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Elem element(const FieldPtr& F) { return static_cast<Elem>(uniform(0, static_cast<int>(F->size()) - 1)); }

inline Matrix matrix(const FieldPtr& F, int r, int c) {
    Matrix M(F, r, c);
    for (auto& x : M.a) x = element(F);
    return M;
}

inline Subspace subspace(const FieldPtr& F, int n) {
    return Subspace::from_matrix(matrix(F, uniform(1, n), n));
}

inline Kind kind() { return static_cast<Kind>(uniform(0, 2)); }

inline Code code(const Ambient& a) { return random_code(a, uniform(0, a.dim()), rng()()); }

}  // namespace gen
