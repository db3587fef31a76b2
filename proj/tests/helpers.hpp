#pragma once

#include <utility>
#include <vector>

#include "nilcommute/closure.hpp"
#include "nilcommute/rng.hpp"
#include "nilcommute/witnesses.hpp"

// shared seeded generators for the suites
namespace testutil {

using namespace nilcommute;

inline Matrix random_matrix(Rng& rng, const FieldSpec& f, std::size_t rows, std::size_t cols) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.scalar(f);
    return m;
}

inline Matrix random_invertible(Rng& rng, const FieldSpec& f, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(rng, f, n, n);
        if (is_invertible(m)) return m;
    }
}

inline Matrix random_nilpotent(Rng& rng, const FieldSpec& f, std::size_t n) {
    Matrix u(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) u(i, j) = rng.scalar(f);
    Matrix p = random_invertible(rng, f, n);
    return *inverse(p) * u * p;
}

inline Partition random_partition(Rng& rng, std::size_t n) {
    std::vector<std::size_t> parts;
    std::size_t left = n;
    while (left > 0) {
        std::size_t k = 1 + rng.below(left);
        parts.push_back(k);
        left -= k;
    }
    return Partition(parts);
}

// random polynomial in a with zero constant term
inline Matrix random_poly_of(Rng& rng, const Matrix& a) {
    const FieldSpec& f = a.field();
    Matrix m(f, a.rows(), a.cols());
    Matrix pw = a;
    for (std::size_t e = 1; e < a.rows(); ++e) {
        m = m + pw.scaled(rng.scalar(f));
        pw = pw * a;
    }
    return m;
}

// commuting nilpotent tuple: conjugated polynomials in one Jordan matrix
inline NilTuple random_poly_tuple(Rng& rng, const FieldSpec& f, std::size_t n, std::size_t d) {
    Matrix a = jordan_matrix(random_partition(rng, n), f);
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < d; ++i) mats.push_back(random_poly_of(rng, a));
    Matrix p = random_invertible(rng, f, n);
    Matrix pi = *inverse(p);
    for (auto& m : mats) m = pi * m * p;
    return NilTuple(std::move(mats));
}

// b shifted by a zero-constant polynomial in a, then both conjugated; the
// kernel intersection and the generated algebra are unchanged by both moves
inline std::pair<Matrix, Matrix> random_perturbed_basili(Rng& rng, const FieldSpec& f,
                                                         std::size_t n) {
    Partition lam = random_partition(rng, n);
    auto [a, b] = basili_pair(lam, f);
    b = b + random_poly_of(rng, a);
    Matrix p = random_invertible(rng, f, n);
    Matrix pi = *inverse(p);
    return {pi * a * p, pi * b * p};
}

}  // namespace testutil
