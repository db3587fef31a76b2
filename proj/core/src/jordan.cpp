#include "nilcommute/jordan.hpp"

#include <algorithm>

namespace nilcommute {

Matrix jordan_matrix(const Partition& lam, const FieldSpec& f) {
    Matrix a(f, lam.n(), lam.n());
    std::size_t off = 0;
    for (std::size_t b = 0; b < lam.count(); ++b) {
        for (std::size_t i = 0; i + 1 < lam.part(b); ++i)
            a(off + i, off + i + 1) = Scalar::one(f);
        off += lam.part(b);
    }
    return a;
}

Matrix grouped_jordan_matrix(const GroupedJordan& g, const FieldSpec& f) {
    Matrix a(f, g.n(), g.n());
    for (std::size_t i = 0; i < g.groups(); ++i) {
        std::size_t off = g.group_offset(i), s = g.mults[i];
        for (std::size_t br = 0; br + 1 < g.sizes[i]; ++br)
            a.set_block(off + br * s, off + (br + 1) * s, Matrix::identity(f, s));
    }
    return a;
}

std::size_t kernel_dim_of_type(const Partition& lam) { return lam.count(); }

bool is_r_regular(const Matrix& m, std::size_t r) {
    if (!is_nilpotent(m).nilpotent) throw NotNilpotent("regularity is defined for nilpotent matrices");
    return m.cols() - rank(m) <= r;
}

std::vector<Matrix> centralizer_basis(const Matrix& a) {
    if (!a.is_square()) throw NotSquare("centralizer of a non-square matrix");
    const std::size_t n = a.rows();
    const FieldSpec& f = a.field();
    // row-major vec: X_{kl} sits at column k*n + l of the Sylvester system
    Matrix sys(f, n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) sys(row, k * n + j) += a(i, k);
            for (std::size_t l = 0; l < n; ++l) sys(row, i * n + l) -= a(l, j);
        }
    std::vector<Matrix> basis;
    for (const Matrix& v : kernel_basis(sys)) basis.push_back(Matrix::unvec(v, n, n));
    return basis;
}

std::size_t centralizer_dim_formula(const Partition& lam) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < lam.count(); ++i)
        for (std::size_t j = 0; j < lam.count(); ++j) d += std::min(lam.part(i), lam.part(j));
    return d;
}

std::size_t nilpotent_centralizer_dim(const Partition& lam) {
    return centralizer_dim_formula(lam) - lam.count();
}

Matrix grouped_centralizer_element(const GroupedJordan& g, const FieldSpec& f,
                                   const ToeplitzBlocks& blocks) {
    const std::size_t l = g.groups();
    if (blocks.size() != l) throw DimensionMismatch("need one block list per group pair");
    Matrix b(f, g.n(), g.n());
    for (std::size_t i = 0; i < l; ++i) {
        if (blocks[i].size() != l) throw DimensionMismatch("need one block list per group pair");
        for (std::size_t j = 0; j < l; ++j) {
            const std::size_t mi = g.sizes[i], mj = g.sizes[j];
            const std::size_t si = g.mults[i], sj = g.mults[j];
            const std::size_t nfree = std::min(mi, mj);
            if (blocks[i][j].size() != nfree)
                throw DimensionMismatch("group pair (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") needs " + std::to_string(nfree) + " parameter blocks");
            const std::size_t oi = g.group_offset(i), oj = g.group_offset(j);
            // free diagonals start at block column mj - nfree + r of block row 0
            for (std::size_t r = 0; r < nfree; ++r) {
                const Matrix& par = blocks[i][j][r];
                if (par.rows() != si || par.cols() != sj)
                    throw DimensionMismatch("parameter block must be s_i x s_j");
                std::size_t c0 = mj - nfree + r;
                for (std::size_t t = 0; c0 + t < mj && t < mi; ++t)
                    b.set_block(oi + t * si, oj + (c0 + t) * sj, par);
            }
        }
    }
    return b;
}

std::vector<Matrix> grouped_diagonal_params(const GroupedJordan& g, const Matrix& m) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < g.groups(); ++i) {
        std::size_t off = g.group_offset(i);
        out.push_back(m.block(off, off, g.mults[i], g.mults[i]));
    }
    return out;
}

bool basili_nilpotency_check(const GroupedJordan& g, const Matrix& m) {
    const FieldSpec& f = m.field();
    Matrix a = grouped_jordan_matrix(g, f);
    if (m.rows() != a.rows() || m.cols() != a.cols())
        throw DimensionMismatch("element size does not match the grouped type");
    if (!m.commutes_with(a)) throw NotInCentralizer("element does not commute with the grouped form");
    for (const Matrix& d : grouped_diagonal_params(g, m))
        if (!is_nilpotent(d).nilpotent) return false;
    return true;
}

namespace {

std::vector<Scalar> poly_mul_trunc(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                   std::size_t len, const FieldSpec& f) {
    std::vector<Scalar> out(len, Scalar::zero(f));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Scalar> poly_add(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

}  // namespace

TwoBlockPolyRep TwoBlockPolyRep::mul(const TwoBlockPolyRep& o) const {
    if (!(field == o.field) || k != o.k || m != o.m)
        throw DimensionMismatch("polynomial representations of different shapes");
    TwoBlockPolyRep out{field, k, m, {}, {}, {}, {}};
    // (1,1): p1 p2 + t^(k-m) q1 r2   mod t^k
    out.p = poly_mul_trunc(p, o.p, k, field);
    std::vector<Scalar> cross = poly_mul_trunc(q, o.r, m, field);  // deg < m, shifted by k-m
    for (std::size_t i = 0; i < m && k - m + i < k; ++i) out.p[k - m + i] += cross[i];
    // (1,2): t^(k-m) (p1 q2 + q1 s2   mod t^m)
    out.q = poly_add(poly_mul_trunc(p, o.q, m, field), poly_mul_trunc(q, o.s, m, field));
    // (2,1): r1 p2 + s1 r2   mod t^m
    out.r = poly_add(poly_mul_trunc(r, o.p, m, field), poly_mul_trunc(s, o.r, m, field));
    // (2,2): t^(k-m) r1 q2 + s1 s2   mod t^m
    out.s = poly_mul_trunc(s, o.s, m, field);
    std::vector<Scalar> rq = poly_mul_trunc(r, o.q, m, field);
    for (std::size_t i = 0; k - m + i < m; ++i) out.s[k - m + i] += rq[i];
    return out;
}

bool TwoBlockPolyRep::operator==(const TwoBlockPolyRep& o) const {
    return field == o.field && k == o.k && m == o.m && p == o.p && q == o.q && r == o.r && s == o.s;
}

TwoBlockPolyRep polyrep_encode(std::size_t k, std::size_t m, const Matrix& x) {
    if (k <= m || m == 0) throw BadOrders("need block sizes k > m >= 1");
    if (x.rows() != k + m || x.cols() != k + m)
        throw DimensionMismatch("matrix size does not match k + m");
    const FieldSpec& f = x.field();
    Matrix a = jordan_matrix(Partition({k, m}), f);
    if (!x.commutes_with(a)) throw NotInCentralizer("matrix does not commute with J_k (+) J_m");
    TwoBlockPolyRep rep{f, k, m,
                        std::vector<Scalar>(k, Scalar::zero(f)),
                        std::vector<Scalar>(m, Scalar::zero(f)),
                        std::vector<Scalar>(m, Scalar::zero(f)),
                        std::vector<Scalar>(m, Scalar::zero(f))};
    for (std::size_t c = 0; c < k; ++c) rep.p[c] = x(0, c);                    // X11 top row
    for (std::size_t c = 0; c < m; ++c) rep.q[c] = x(0, k + c);                // X12 top row
    for (std::size_t c = 0; c < m; ++c) rep.r[c] = x(k, (k - m) + c);          // X21 top row, shifted
    for (std::size_t c = 0; c < m; ++c) rep.s[c] = x(k, k + c);                // X22 top row
    return rep;
}

Matrix polyrep_decode(const TwoBlockPolyRep& rep) {
    const FieldSpec& f = rep.field;
    const std::size_t k = rep.k, m = rep.m;
    if (k <= m || m == 0) throw BadOrders("need block sizes k > m >= 1");
    if (rep.p.size() != k || rep.q.size() != m || rep.r.size() != m || rep.s.size() != m)
        throw DimensionMismatch("coefficient lengths must be (k, m, m, m)");
    Matrix x(f, k + m, k + m);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) x(i, j) = rep.p[j - i];
    for (std::size_t i = 0; i < m; ++i)  // rows of X12 beyond m are zero
        for (std::size_t j = i; j < m; ++j) x(i, k + j) = rep.q[j - i];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = (k - m) + i; j < k; ++j) x(k + i, j) = rep.r[j - i - (k - m)];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) x(k + i, k + j) = rep.s[j - i];
    return x;
}

}  // namespace nilcommute
