#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilcommute/matrix.hpp"

namespace nilcommute {

// Sparse multivariate polynomial with exact coefficients. Terms are keyed by
// exponent vectors (fixed variable count) in lexicographic order, so every
// traversal is deterministic. Zero coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;

    MultiPoly(const FieldSpec& f, std::size_t nvars) : field_(f), nvars_(nvars) {}

    static MultiPoly zero(const FieldSpec& f, std::size_t nvars) { return MultiPoly(f, nvars); }
    static MultiPoly constant(const FieldSpec& f, std::size_t nvars, const Scalar& c);
    static MultiPoly variable(const FieldSpec& f, std::size_t nvars, std::size_t idx);

    const FieldSpec& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Scalar& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Scalar& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Formal partial derivative; exponents multiply into coefficients
    // exactly (relevant in positive characteristic).
    MultiPoly derivative(std::size_t var) const;

    Scalar eval(const std::vector<Scalar>& point) const;

    // Substitutes pairwise-commuting square matrices for the variables.
    Matrix eval_matrices(const std::vector<Matrix>& args) const;

    Scalar constant_term() const;

    std::string to_string() const;  // for diagnostics

private:
    void check_compatible(const MultiPoly& o) const;

    FieldSpec field_;
    std::size_t nvars_;
    std::map<Exponents, Scalar> terms_;
};

struct JacobianResult {
    std::vector<Scalar> values;  // polynomial values at the point
    Matrix jacobian;             // (#polys) x (#vars), formal derivatives evaluated
};

JacobianResult poly_eval_jacobian(const std::vector<MultiPoly>& polys,
                                  const std::vector<Scalar>& point);

}  // namespace nilcommute
