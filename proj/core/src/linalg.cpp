#include "nilcommute/linalg.hpp"

#include <algorithm>

namespace nilcommute {

namespace {

std::size_t rank_bareiss_q(const Matrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    // Clear denominators per row; row scaling does not change the rank.
    std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < nc; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rat().get_den().get_mpz_t());
        for (std::size_t j = 0; j < nc; ++j) {
            mpq_class scaled = m(i, j).rat() * l;
            a[i][j] = scaled.get_num();  // denominator is 1 now
        }
    }
    std::size_t rk = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < nc && rk < nr; ++col) {
        std::size_t piv = rk;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[rk], a[piv]);
        const mpz_class pivot = a[rk][col];
        mpz_class num, q, r;
        for (std::size_t i = rk + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                num = a[i][j] * pivot - a[i][col] * a[rk][j];
                // one-step fraction-free update: division by the previous
                // pivot is exact (Sylvester identity)
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw InternalError("fraction-free elimination: inexact division");
                a[i][j] = q;
            }
            a[i][col] = 0;
        }
        prev = pivot;
        ++rk;
    }
    return rk;
}

std::size_t rank_gauss_fp(const Matrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    const std::uint64_t p = m.field().p();
    std::vector<std::vector<std::uint64_t>> a(nr, std::vector<std::uint64_t>(nc));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) a[i][j] = m(i, j).residue();
    std::size_t rk = 0;
    for (std::size_t col = 0; col < nc && rk < nr; ++col) {
        std::size_t piv = rk;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[rk], a[piv]);
        std::uint64_t inv = mod_inverse(a[rk][col], p);
        for (std::size_t i = rk + 1; i < nr; ++i) {
            if (a[i][col] == 0) continue;
            std::uint64_t f = a[i][col] * inv % p;
            for (std::size_t j = col; j < nc; ++j) {
                a[i][j] = (a[i][j] + (p - f) * a[rk][j]) % p;
            }
        }
        ++rk;
    }
    return rk;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.field().kind() == FieldKind::Rationals) return rank_bareiss_q(m);
    return rank_gauss_fp(m);
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
    Matrix a = m;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::vector<std::size_t> piv_cols;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < nc && rk < nr; ++col) {
        std::size_t piv = rk;
        while (piv < nr && a(piv, col).is_zero()) ++piv;
        if (piv == nr) continue;
        if (piv != rk)
            for (std::size_t j = 0; j < nc; ++j) std::swap(a(rk, j), a(piv, j));
        Scalar inv = a(rk, col).inverse();
        for (std::size_t j = col; j < nc; ++j) a(rk, j) *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rk || a(i, col).is_zero()) continue;
            Scalar f = a(i, col);
            for (std::size_t j = col; j < nc; ++j) a(i, j) -= f * a(rk, j);
        }
        piv_cols.push_back(col);
        ++rk;
    }
    if (pivots) *pivots = std::move(piv_cols);
    return a;
}

std::vector<Matrix> kernel_basis(const Matrix& m) {
    const FieldSpec& f = m.field();
    const std::size_t nc = m.cols();
    std::vector<std::size_t> piv;
    Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<Matrix> basis;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        Matrix v(f, nc, 1);
        v(free, 0) = Scalar::one(f);
        for (std::size_t r_i = 0; r_i < piv.size(); ++r_i) v(piv[r_i], 0) = -r(r_i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
    if (b.cols() != 1 || b.rows() != a.rows())
        throw DimensionMismatch("right-hand side must be a column matching a's rows");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    aug.set_block(0, a.cols(), b);
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;  // pivot in b column
    Matrix x(a.field(), a.cols(), 1);
    for (std::size_t i = 0; i < piv.size(); ++i) x(piv[i], 0) = r(i, a.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw NotSquare("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix::identity(m.field(), n));
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
    return r.block(0, n, n, n);
}

bool is_invertible(const Matrix& m) {
    if (!m.is_square()) throw NotSquare("invertibility of a non-square matrix");
    return rank(m) == m.rows();
}

std::vector<Matrix> subspace_intersection(const std::vector<Matrix>& b1,
                                          const std::vector<Matrix>& b2) {
    if (b1.empty() || b2.empty()) return {};
    const FieldSpec& f = b1.front().field();
    const std::size_t n = b1.front().rows();
    for (const auto& v : b1)
        if (v.cols() != 1 || v.rows() != n) throw DimensionMismatch("span vectors must be n x 1");
    for (const auto& v : b2) {
        if (v.cols() != 1 || v.rows() != n) throw DimensionMismatch("span vectors must be n x 1");
        if (!(v.field() == f)) throw FieldMismatch("spans over different fields");
    }
    Matrix sys(f, n, b1.size() + b2.size());
    for (std::size_t k = 0; k < b1.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) sys(i, k) = b1[k](i, 0);
    for (std::size_t k = 0; k < b2.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) sys(i, b1.size() + k) = -b2[k](i, 0);
    SpanBuilder span(f, n);
    for (const Matrix& kv : kernel_basis(sys)) {
        Matrix v(f, n, 1);
        for (std::size_t k = 0; k < b1.size(); ++k)
            if (!kv(k, 0).is_zero()) v = v + b1[k].scaled(kv(k, 0));
        if (!v.is_zero()) span.insert(v);
    }
    return span.basis();
}

Nilpotency is_nilpotent(const Matrix& m) {
    if (!m.is_square()) throw NotSquare("nilpotency of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {true, 1};
    if (m.is_zero()) return {true, 1};
    // squares m^(2^j) until the exponent reaches n
    std::vector<Matrix> sq{m};
    std::size_t exp = 1;
    while (exp < n) {
        sq.push_back(sq.back() * sq.back());
        exp *= 2;
        if (sq.back().is_zero()) break;
    }
    if (!sq.back().is_zero()) return {false, 0};
    // binary search the least k in (lo, hi] with m^k = 0
    auto pow_via_squares = [&](std::size_t k) {
        Matrix acc = Matrix::identity(m.field(), n);
        for (std::size_t bit = 0; k > 0; ++bit, k >>= 1)
            if (k & 1) acc = acc * sq[bit];
        return acc;
    };
    std::size_t lo = 1, hi = exp;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (pow_via_squares(mid).is_zero())
            hi = mid;
        else
            lo = mid + 1;
    }
    return {true, lo};
}

std::vector<Scalar> SpanBuilder::reduce(const Matrix& v) const {
    if (v.cols() != 1 || v.rows() != len_) throw DimensionMismatch("span vector length mismatch");
    std::vector<Scalar> w(len_, Scalar::zero(field_));
    for (std::size_t i = 0; i < len_; ++i) w[i] = v(i, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = w[pivot_cols_[r]];
        if (c.is_zero()) continue;
        Scalar f = c;  // pivot entries are 1
        for (std::size_t j = pivot_cols_[r]; j < len_; ++j) w[j] -= f * rows_[r][j];
    }
    return w;
}

bool SpanBuilder::insert(const Matrix& v) {
    std::vector<Scalar> w = reduce(v);
    std::size_t piv = 0;
    while (piv < len_ && w[piv].is_zero()) ++piv;
    if (piv == len_) return false;
    Scalar inv = w[piv].inverse();
    for (std::size_t j = piv; j < len_; ++j) w[j] *= inv;
    // eliminate the new pivot from existing rows to stay fully reduced
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = rows_[r][piv];
        if (c.is_zero()) continue;
        Scalar f = c;
        for (std::size_t j = piv; j < len_; ++j) rows_[r][j] -= f * w[j];
    }
    auto pos = std::upper_bound(pivot_cols_.begin(), pivot_cols_.end(), piv) - pivot_cols_.begin();
    pivot_cols_.insert(pivot_cols_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
}

bool SpanBuilder::contains(const Matrix& v) const {
    std::vector<Scalar> w = reduce(v);
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Matrix> SpanBuilder::basis() const {
    std::vector<Matrix> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
        Matrix v(field_, len_, 1);
        for (std::size_t i = 0; i < len_; ++i) v(i, 0) = row[i];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace nilcommute
