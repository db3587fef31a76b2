#pragma once

#include "nilcommute/jordan.hpp"

namespace nilcommute {

// Tuple of pairwise-commuting nilpotent square matrices over one field.
// Construction validates everything; instances are immutable witnesses.
class NilTuple {
public:
    explicit NilTuple(std::vector<Matrix> mats);

    const FieldSpec& field() const { return field_; }
    std::size_t n() const { return n_; }
    std::size_t d() const { return mats_.size(); }
    const Matrix& mat(std::size_t i) const { return mats_[i]; }
    const std::vector<Matrix>& mats() const { return mats_; }

    bool operator==(const NilTuple& o) const { return mats_ == o.mats_; }

private:
    FieldSpec field_;
    std::size_t n_;
    std::vector<Matrix> mats_;
};

// dim of the unital algebra generated by pairwise-commuting gens, as the
// rank of the matrix whose columns are vec(prod gens[i]^{e_i}) over all
// exponent vectors with 0 <= e_i <= n-1.
std::size_t algebra_dim_monomial(const std::vector<Matrix>& gens);

// Same dimension by iterated span closure: start from {I} + gens, multiply
// by generators until the span stabilizes. Agrees with the monomial route.
std::size_t algebra_dim_closure(const std::vector<Matrix>& gens);

std::size_t algebra_dim_monomial(const NilTuple& t);
std::size_t algebra_dim_closure(const NilTuple& t);

// dim(C(a) ∩ C(b)); equals n exactly when F[a,b] is self-centralizing.
std::size_t self_centralizing_dim(const Matrix& a, const Matrix& b);

// Basis of C(C(x)) = { y : y z = z y for every z in C(x) }. Always spans
// exactly the powers I, x, ..., x^(n-1).
std::vector<Matrix> double_centralizer_basis(const Matrix& x);

// Coordinates of c in the monomial basis a^i b^j (0 <= j < #parts(lam),
// 0 <= i < lam_{j+1}) of F[a,b], valid when dim F[a,b] = n and a has
// Jordan type lam. NotSelfCentralizing / NotInAlgebra on violations.
struct AlgebraCoords {
    std::vector<std::pair<std::size_t, std::size_t>> monomials;  // (i, j)
    std::vector<Scalar> coeffs;                                  // aligned
};
AlgebraCoords express_in_algebra(const Matrix& c, const Matrix& a, const Matrix& b,
                                 const Partition& lam);

}  // namespace nilcommute
