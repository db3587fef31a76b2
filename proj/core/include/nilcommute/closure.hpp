#pragma once

#include <optional>

#include "nilcommute/algebra.hpp"
#include "nilcommute/certificate.hpp"
#include "nilcommute/multipoly.hpp"
#include "nilcommute/rng.hpp"

namespace nilcommute {

// dim of the closure of the rank-one-perturbation locus R1(d, n).
std::size_t r1_closure_dim(std::size_t d, std::size_t n);

// dim of the closure of D2 inside the pair variety over C(J(lam)):
// dim C - #parts + n - 1.
std::size_t d2_closure_dim(const Partition& lam);

// Invertible tuple moves; each preserves membership in the commuting
// nilpotent variety and has an explicit inverse of the same kind.
struct TupleTransform {
    enum class Kind { Conjugate, SpanChange, PolyShift, Transpose, TwistedTranspose };
    Kind kind = Kind::Transpose;
    std::optional<Matrix> p;                 // Conjugate: invertible n x n
    std::optional<Matrix> g;                 // SpanChange: invertible d x d
    std::vector<std::vector<Scalar>> polys;  // PolyShift: coeff lists for members 2..d,
                                             // zero constant term, polys[i][e] * t^e
    std::optional<Matrix> q;                 // TwistedTranspose: q^-1 A1^T q = A1
};

NilTuple tuple_transform(const NilTuple& t, const TupleTransform& tr);

// Moves of a pair (b, c) inside N2(a): swap, or c += p(a, b) for a
// bivariate p with zero constant term.
struct PairTransform {
    enum class Kind { Swap, Shift };
    Kind kind = Kind::Swap;
    std::optional<MultiPoly> p;  // Shift: 2 variables (a, b)
};

std::pair<Matrix, Matrix> pair_transform(const Matrix& a, const Matrix& b, const Matrix& c,
                                         const PairTransform& tr);

// Seeded point of R1(d, n): (A, A p_1(A), ..., A p_{d-1}(A)) with A a
// conjugated regular nilpotent and deg p_i <= n-2.
NilTuple sample_R1(std::size_t d, std::size_t n, const FieldSpec& f, std::uint64_t seed);

// Tuple of matrices whose entries are polynomials in one parameter t,
// stored as coefficient matrices. Evaluation is exact.
class ParamFamily {
public:
    ParamFamily(const FieldSpec& f, std::size_t n, std::vector<std::vector<Matrix>> coeffs);

    const FieldSpec& field() const { return field_; }
    std::size_t n() const { return n_; }
    std::size_t d() const { return coeffs_.size(); }
    std::size_t degree_bound() const;

    std::vector<Matrix> evaluate(const Scalar& t) const;

    // Extends by zero matrices up to d members.
    ParamFamily extended_to(std::size_t d) const;

private:
    FieldSpec field_;
    std::size_t n_;
    std::vector<std::vector<Matrix>> coeffs_;  // coeffs_[i][e] = t^e coefficient of member i
};

// One-parameter family A(t) = J(lam) + t * E with E linking the end of each
// block to the start of the next; A(0) = J(lam) and A(t) is 1-regular for
// every t != 0.
ParamFamily regularization_family(const Partition& lam, const FieldSpec& f);

// Samples the family at nonzero parameters: every sample must be a valid
// commuting nilpotent tuple and carry a 1-regular member in the span of the
// tuple (the first matrix and 16 random span combinations are tried).
// fail = an exact identity broke; inconclusive = only the 1-regular search
// came up empty.
Certificate curve_verify(const ParamFamily& fam, const NilTuple& target, std::uint64_t trials,
                         std::uint64_t seed);

// pass iff dim F[tuple] > n: the dimension obstruction that keeps the tuple
// out of the closure of the 1-regular locus.
Certificate certify_reducible(const NilTuple& t);

// Membership of the pair (b, c) in the closure D2 over a = J(lam):
// true iff dim F[a, b] = n. NotInN2 when (b, c) is not a commuting
// nilpotent pair in C(a).
bool is_in_D2(const Matrix& a, const Matrix& b, const Matrix& c, const Partition& lam);

}  // namespace nilcommute
