#include "nilcommute/matrix.hpp"

namespace nilcommute {

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_entries(const FieldSpec& f, std::size_t rows, std::size_t cols,
                            std::vector<Scalar> entries) {
    if (entries.size() != rows * cols)
        throw DimensionMismatch("entry count does not match shape");
    Matrix m(f, rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (!(entries[k].field() == f)) throw FieldMismatch("entry field differs from matrix field");
        m.data_[k] = std::move(entries[k]);
    }
    return m;
}

Matrix Matrix::from_ints(const FieldSpec& f, std::size_t rows, std::size_t cols,
                         std::initializer_list<long> entries) {
    if (entries.size() != rows * cols)
        throw DimensionMismatch("entry count does not match shape");
    Matrix m(f, rows, cols);
    std::size_t k = 0;
    for (long v : entries) m.data_[k++] = Scalar::of_int(f, v);
    return m;
}

void Matrix::check_same_shape(const Matrix& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("matrices over different fields");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " vs " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("matrices over different fields");
    if (cols_ != o.rows_)
        throw DimensionMismatch("inner dimensions differ: " + std::to_string(cols_) + " vs " +
                                std::to_string(o.rows_));
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (b.is_zero()) continue;
                r(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
}

Matrix operator*(const Scalar& c, const Matrix& m) { return m.scaled(c); }

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return data_ == o.data_;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Scalar Matrix::trace() const {
    if (!is_square()) throw NotSquare("trace of a non-square matrix");
    Scalar t = Scalar::zero(field_);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::pow(std::uint64_t e) const {
    if (!is_square()) throw NotSquare("power of a non-square matrix");
    Matrix acc = identity(field_, rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) throw DimensionMismatch("block exceeds matrix bounds");
    Matrix b(field_, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
    return b;
}

void Matrix::set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
    if (!(field_ == b.field_)) throw FieldMismatch("block over a different field");
    if (i0 + b.rows_ > rows_ || j0 + b.cols_ > cols_)
        throw DimensionMismatch("block exceeds matrix bounds");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
}

Matrix Matrix::vec() const {
    Matrix v(field_, rows_ * cols_, 1);
    for (std::size_t k = 0; k < data_.size(); ++k) v(k, 0) = data_[k];
    return v;
}

Matrix Matrix::unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols)
        throw DimensionMismatch("unvec shape mismatch");
    Matrix m(v.field(), rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k) m.data_[k] = v(k, 0);
    return m;
}

Matrix Matrix::commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

bool Matrix::commutes_with(const Matrix& o) const { return (*this * o) == (o * *this); }

Matrix block_diag(const FieldSpec& f, const std::vector<Matrix>& blocks) {
    std::size_t n = 0, m = 0;
    for (const auto& b : blocks) {
        n += b.rows();
        m += b.cols();
    }
    Matrix r(f, n, m);
    std::size_t i0 = 0, j0 = 0;
    for (const auto& b : blocks) {
        r.set_block(i0, j0, b);
        i0 += b.rows();
        j0 += b.cols();
    }
    return r;
}

}  // namespace nilcommute
