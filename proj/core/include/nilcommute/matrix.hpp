#pragma once

#include <cstddef>
#include <vector>

#include "nilcommute/field.hpp"

namespace nilcommute {

// Dense rectangular matrix over a single field. Zero-sized shapes are legal;
// they show up as empty corner blocks in the square-zero normalizations.
class Matrix {
public:
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

    static Matrix zero(const FieldSpec& f, std::size_t rows, std::size_t cols) {
        return Matrix(f, rows, cols);
    }
    static Matrix identity(const FieldSpec& f, std::size_t n);
    // Row-major entries; size must be rows*cols.
    static Matrix from_entries(const FieldSpec& f, std::size_t rows, std::size_t cols,
                               std::vector<Scalar> entries);
    // Convenience for literals in witness constructions and tests.
    static Matrix from_ints(const FieldSpec& f, std::size_t rows, std::size_t cols,
                            std::initializer_list<long> entries);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    Scalar trace() const;
    Matrix pow(std::uint64_t e) const;  // NotSquare

    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
    void set_block(std::size_t i0, std::size_t j0, const Matrix& b);

    // Column vector of the row-major entries (n*m x 1).
    Matrix vec() const;
    static Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

    // [a, b] = ab - ba
    static Matrix commutator(const Matrix& a, const Matrix& b);
    bool commutes_with(const Matrix& o) const;

private:
    void check_same_shape(const Matrix& o) const;

    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

Matrix operator*(const Scalar& c, const Matrix& m);

// Direct sum diag(blocks...)
Matrix block_diag(const FieldSpec& f, const std::vector<Matrix>& blocks);

}  // namespace nilcommute
