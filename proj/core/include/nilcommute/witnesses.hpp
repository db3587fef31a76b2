#pragma once

#include <array>
#include <optional>

#include "nilcommute/algebra.hpp"
#include "nilcommute/certificate.hpp"
#include "nilcommute/multipoly.hpp"
#include "nilcommute/rng.hpp"

namespace nilcommute {

// Quadruple (J(n-2,2), e_1 e_n^T, e_{n-1} e_{n-2}^T, e_{n-1} e_n^T) whose
// generated algebra has dimension n + 1 > n. Needs n >= 4.
NilTuple gerstenhaber_quadruple(std::size_t n, const FieldSpec& f);

// Pair (J(lam), B) with B carrying truncated-identity blocks on the block
// superdiagonal; dim(ker A ∩ ker B) = 1 and F[A, B] has dimension n.
std::pair<Matrix, Matrix> basili_pair(const Partition& lam, const FieldSpec& f);

// ---- pair variety with the 9 + 9 coordinate shape over J(3,2,1) ----

// Assembles the 6x6 shape from nine coordinates (a..i).
Matrix n2red_shape(const FieldSpec& f, const std::vector<Scalar>& nine);

// Point of the 18-dimensional ambient space: coords[0..8] unprimed (first
// member), coords[9..17] primed (second member).
struct N2redPoint {
    FieldSpec field;
    std::vector<Scalar> coords;  // 18

    Matrix first() const { return n2red_shape(field, {coords.begin(), coords.begin() + 9}); }
    Matrix second() const { return n2red_shape(field, {coords.begin() + 9, coords.end()}); }
};

// The two defining polynomials, in the 18 ambient variables.
std::vector<MultiPoly> n2red_equations(const FieldSpec& f);

bool n2red_membership(const N2redPoint& pt);

// Random point on the variety: unprimed coordinates drawn freely, primed
// obtained by solving the (linear in primed) equations plus a random
// kernel displacement.
N2redPoint n2red_sample(const FieldSpec& f, Rng& rng);

// Evidence that the pair variety over J(3,2,1) is not irreducible:
// a 16-dimensional shaped subvariety (Jacobian-smooth at sampled points)
// next to the 16-dimensional closure of the 1-regular-pair locus, plus a
// concrete pair outside the shape.
Certificate n2red_certificate(const FieldSpec& f, std::uint64_t seed, std::uint64_t trials);

// ---- perturbation pair for the rank-one family with nonzero parameters ----

struct Prop1NonzeroPair {
    Matrix y, z;        // square-zero commuting pair, supported on the tail block
    Matrix a, b, c;     // ambient triple data: a = J(k,1,...,1), rank-one b, c
    Matrix x, xprime;   // (n-k) x (n-k) tail blocks of y and z
};

// beta = s^2, gamma = t^2; needs 2 <= k <= n-2 and s, t nonzero.
Prop1NonzeroPair prop1nonzero_pair(std::size_t k, std::size_t n, const Scalar& s, const Scalar& t);

// ---- common nilpotent commutant of the square-zero pair (A, B) ----

// A = [[0,I,0],[0,0,0],[0,0,0]], B = [[0,W,V],[0,0,0],[0,0,0]] with block
// dimensions (l, l, m).
std::pair<Matrix, Matrix> squarezero_pair(const Matrix& w, const Matrix& v);

// Nonzero nilpotent commuting with both A and B; W is l x l, V is l x m,
// m >= 2. Normalizes [W V] by centralizer conjugations until a kernel
// branch or the terminal square form produces the witness.
Matrix squarezero_commutant(const Matrix& w, const Matrix& v);

// m = 1 variant: A, B over blocks (l, l, 1) with B = [[0,E,F],...];
// requires rank [E F] <= l-1 (RankTooHigh otherwise).
std::pair<Matrix, Matrix> squarezero_pair_m1(const Matrix& e, const Matrix& fcol);
Matrix squarezero_commutant_m1(const Matrix& e, const Matrix& fcol);

// ---- triple extension data over type (3,2,1) ----

struct Prop321Data {
    std::vector<Matrix> x;  // x_1..x_3, 3x1 columns
    std::vector<Matrix> z;  // Z_1..Z_3, 3x2
    Matrix j2;              // 2x2 Jordan block
};
Prop321Data prop321_fixed_data(const FieldSpec& f);

// The four-parameter family of candidate (Y_1..Y_3, zeta_1..zeta_3).
struct Prop321Family {
    std::vector<Matrix> y;
    std::vector<Scalar> zeta;
};
Prop321Family prop321_family(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                             const Scalar& delta);

// Exact checks of the constraint families on a candidate.
struct Prop321Checks {
    bool linear_x = false;      // x_i^T Y_j = x_j^T Y_i
    bool linear_z = false;      // Y_i Z_j + zeta_j Z_i J = Y_j Z_i + zeta_i Z_j J
    bool commute = false;       // Y_i Y_j = Y_j Y_i
    bool traceless = false;     // tr Y_i = 0
    bool nilpotent = false;     // Y_i nilpotent
    bool all() const { return linear_x && linear_z && commute && traceless && nilpotent; }
};
Prop321Checks prop321_check(const Prop321Family& fam, const FieldSpec& f);

enum class Prop321Case { Generic, Char2, Char3 };

struct Prop321Solution {
    Prop321Case kind;
    Prop321Family family;
    std::vector<Matrix> big;  // assembled 6x6 members X_1..X_3
    bool x1_one_regular;      // reported, asserted only by callers that need it
};

// Generic: characteristic not 2 or 3, omega must satisfy w(27w^3-8) = 0
// (defaults to 2/3); Char2/Char3: the matching characteristic, beta free.
Prop321Solution prop321_solution(Prop321Case kind, const FieldSpec& f, const Scalar& beta,
                                 const std::optional<Scalar>& omega = std::nullopt);

// All (alpha, beta, gamma, delta) in F_p^4 satisfying every constraint
// family, lexicographic order. p must be prime and <= 11.
std::vector<std::array<std::uint32_t, 4>> prop321_fiber_bruteforce(std::uint64_t p);

}  // namespace nilcommute
