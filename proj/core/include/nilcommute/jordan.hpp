#pragma once

#include "nilcommute/linalg.hpp"
#include "nilcommute/partition.hpp"

namespace nilcommute {

// Upper Jordan blocks (ones on the superdiagonal), in partition order.
Matrix jordan_matrix(const Partition& lam, const FieldSpec& f);

// Same operator with equal blocks grouped: diag over groups of
// J_{m_i} (x) I_{s_i}, i.e. m_i block rows/cols of size s_i with identity
// superdiagonal blocks. Conjugate to jordan_matrix(lam).
Matrix grouped_jordan_matrix(const GroupedJordan& g, const FieldSpec& f);

// dim ker = number of parts
std::size_t kernel_dim_of_type(const Partition& lam);

// Nilpotent m is r-regular when dim ker m <= r. NotNilpotent otherwise.
bool is_r_regular(const Matrix& m, std::size_t r);

// Kernel of X -> aX - Xa, one matrix per basis vector, deterministic order.
std::vector<Matrix> centralizer_basis(const Matrix& a);

// dim C(J(lam)) = sum_{i,j} min(lam_i, lam_j)
std::size_t centralizer_dim_formula(const Partition& lam);

// Dimension of the nilpotent cone inside C(J(lam)): formula minus #parts.
std::size_t nilpotent_centralizer_dim(const Partition& lam);

// Toeplitz parameters of a centralizer element in the grouped ordering:
// blocks[i][j][r] is s_i x s_j, for r < min(m_i, m_j). Block (i,j) of the
// result carries blocks[i][j][r] on its r-th free diagonal.
using ToeplitzBlocks = std::vector<std::vector<std::vector<Matrix>>>;
Matrix grouped_centralizer_element(const GroupedJordan& g, const FieldSpec& f,
                                   const ToeplitzBlocks& blocks);

// Extracts the leading diagonal parameter blocks of the grouped ordering.
std::vector<Matrix> grouped_diagonal_params(const GroupedJordan& g, const Matrix& m);

// m (in the centralizer of grouped_jordan_matrix(g), else NotInCentralizer)
// is nilpotent iff all leading diagonal parameter blocks are nilpotent.
bool basili_nilpotency_check(const GroupedJordan& g, const Matrix& m);

// Centralizer of J_k (+) J_m, k > m, as a 2x2 matrix of truncated
// polynomials  [ p(t)         t^(k-m) q(t) ]
//              [ r(t)         s(t)         ]
// with p mod t^k and q, r, s mod t^m. Multiplication matches matrix
// multiplication under this identification.
struct TwoBlockPolyRep {
    FieldSpec field;
    std::size_t k, m;
    std::vector<Scalar> p;  // k coefficients
    std::vector<Scalar> q;  // m coefficients
    std::vector<Scalar> r;  // m coefficients
    std::vector<Scalar> s;  // m coefficients

    TwoBlockPolyRep mul(const TwoBlockPolyRep& o) const;
    bool operator==(const TwoBlockPolyRep& o) const;
};

TwoBlockPolyRep polyrep_encode(std::size_t k, std::size_t m, const Matrix& x);
Matrix polyrep_decode(const TwoBlockPolyRep& rep);

}  // namespace nilcommute
