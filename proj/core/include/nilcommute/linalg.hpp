#pragma once

#include <optional>
#include <vector>

#include "nilcommute/matrix.hpp"

namespace nilcommute {

struct Nilpotency {
    bool nilpotent;
    std::size_t index;  // least k with m^k = 0; meaningful only if nilpotent
};

// Rank over Q runs fraction-free (Bareiss) elimination on a denominator-
// cleared integer copy; over F_p it is plain Gaussian elimination on words.
std::size_t rank(const Matrix& m);

// Reduced row echelon form, leftmost-pivot, pivots normalized to 1 and
// eliminated above and below. Pivot column indices go to *pivots.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

// Kernel basis in the deterministic reduced-echelon order: one vector per
// free column, free columns visited left to right, unit at the free column.
std::vector<Matrix> kernel_basis(const Matrix& m);

// One particular solution of a x = b (b is a column), free variables set to
// zero; nullopt when inconsistent.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

// Basis of span(b1) ∩ span(b2); inputs and outputs are column vectors.
// The result is the canonical reduced-echelon basis of the intersection.
std::vector<Matrix> subspace_intersection(const std::vector<Matrix>& b1,
                                          const std::vector<Matrix>& b2);

// Nilpotency test by repeated squaring, with the exact nilpotency index
// recovered by binary search over stored powers.
Nilpotency is_nilpotent(const Matrix& m);

// Incremental span of column vectors, kept in reduced echelon form so that
// membership and dimension queries are exact and order-independent.
class SpanBuilder {
public:
    explicit SpanBuilder(const FieldSpec& f, std::size_t len) : field_(f), len_(len) {}

    // true if v enlarged the span
    bool insert(const Matrix& v);
    bool contains(const Matrix& v) const;
    std::size_t dim() const { return rows_.size(); }
    std::size_t length() const { return len_; }
    std::vector<Matrix> basis() const;  // echelon rows as column vectors

private:
    std::vector<Scalar> reduce(const Matrix& v) const;

    FieldSpec field_;
    std::size_t len_;
    std::vector<std::vector<Scalar>> rows_;   // reduced echelon rows
    std::vector<std::size_t> pivot_cols_;     // strictly increasing
};

}  // namespace nilcommute
