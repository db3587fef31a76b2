#include "nilcommute/algebra.hpp"

namespace nilcommute {

namespace {

void check_commuting_square(const std::vector<Matrix>& mats) {
    if (mats.empty()) throw DimensionMismatch("empty tuple");
    const FieldSpec& f = mats.front().field();
    const std::size_t n = mats.front().rows();
    for (const auto& m : mats) {
        if (!(m.field() == f)) throw FieldMismatch("tuple members over different fields");
        if (!m.is_square() || m.rows() != n) throw DimensionMismatch("tuple members must be square, same size");
    }
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            if (!mats[i].commutes_with(mats[j]))
                throw NotCommuting("members " + std::to_string(i) + " and " + std::to_string(j) +
                                   " do not commute");
}

}  // namespace

NilTuple::NilTuple(std::vector<Matrix> mats)
    : field_(mats.empty() ? FieldSpec::rationals() : mats.front().field()),
      n_(mats.empty() ? 0 : mats.front().rows()),
      mats_(std::move(mats)) {
    check_commuting_square(mats_);
    for (std::size_t i = 0; i < mats_.size(); ++i)
        if (!is_nilpotent(mats_[i]).nilpotent)
            throw NotNilpotent("member " + std::to_string(i) + " is not nilpotent");
}

std::size_t algebra_dim_monomial(const std::vector<Matrix>& gens) {
    check_commuting_square(gens);
    const FieldSpec& f = gens.front().field();
    const std::size_t n = gens.front().rows();
    const std::size_t d = gens.size();
    // columns indexed by exponent vectors, each entry <= n-1
    std::vector<std::vector<Matrix>> powers(d);
    for (std::size_t i = 0; i < d; ++i) {
        powers[i].push_back(Matrix::identity(f, n));
        for (std::size_t e = 1; e < n; ++e) powers[i].push_back(powers[i].back() * gens[i]);
    }
    std::size_t ncols = 1;
    for (std::size_t i = 0; i < d; ++i) ncols *= n;
    Matrix cols(f, n * n, ncols);
    std::vector<std::size_t> expv(d, 0);
    for (std::size_t c = 0; c < ncols; ++c) {
        Matrix prod = powers[0][expv[0]];
        for (std::size_t i = 1; i < d; ++i)
            if (expv[i] > 0) prod = prod * powers[i][expv[i]];
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) cols(k * n + l, c) = prod(k, l);
        for (std::size_t i = 0; i < d; ++i) {  // odometer
            if (++expv[i] < n) break;
            expv[i] = 0;
        }
    }
    return rank(cols);
}

std::size_t algebra_dim_closure(const std::vector<Matrix>& gens) {
    check_commuting_square(gens);
    const FieldSpec& f = gens.front().field();
    const std::size_t n = gens.front().rows();
    SpanBuilder span(f, n * n);
    std::vector<Matrix> frontier;
    auto push = [&](const Matrix& m) {
        if (span.insert(m.vec())) frontier.push_back(m);
    };
    push(Matrix::identity(f, n));
    for (const auto& g : gens) push(g);
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const auto& b : frontier)
            for (const auto& g : gens) {
                Matrix prod = g * b;
                if (span.insert(prod.vec())) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    return span.dim();
}

std::size_t algebra_dim_monomial(const NilTuple& t) { return algebra_dim_monomial(t.mats()); }
std::size_t algebra_dim_closure(const NilTuple& t) { return algebra_dim_closure(t.mats()); }

std::size_t self_centralizing_dim(const Matrix& a, const Matrix& b) {
    if (!a.commutes_with(b)) throw NotCommuting("a and b do not commute");
    std::vector<Matrix> ca, cb;
    for (const Matrix& m : centralizer_basis(a)) ca.push_back(m.vec());
    for (const Matrix& m : centralizer_basis(b)) cb.push_back(m.vec());
    return subspace_intersection(ca, cb).size();
}

std::vector<Matrix> double_centralizer_basis(const Matrix& x) {
    if (!x.is_square()) throw NotSquare("double centralizer of a non-square matrix");
    const std::size_t n = x.rows();
    const FieldSpec& f = x.field();
    std::vector<Matrix> cx = centralizer_basis(x);
    // stack one Sylvester system per centralizer basis element
    Matrix sys(f, cx.size() * n * n, n * n);
    for (std::size_t b = 0; b < cx.size(); ++b) {
        const Matrix& z = cx[b];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t row = b * n * n + i * n + j;
                for (std::size_t k = 0; k < n; ++k) sys(row, k * n + j) += z(i, k);
                for (std::size_t l = 0; l < n; ++l) sys(row, i * n + l) -= z(l, j);
            }
    }
    std::vector<Matrix> out;
    for (const Matrix& v : kernel_basis(sys)) out.push_back(Matrix::unvec(v, n, n));
    return out;
}

AlgebraCoords express_in_algebra(const Matrix& c, const Matrix& a, const Matrix& b,
                                 const Partition& lam) {
    if (!a.is_square() || a.rows() != lam.n() || b.rows() != a.rows() || !b.is_square() ||
        c.rows() != a.rows() || !c.is_square())
        throw DimensionMismatch("matrices must be n x n with n = |lam|");
    if (!a.commutes_with(b)) throw NotCommuting("a and b do not commute");
    const FieldSpec& f = a.field();
    const std::size_t n = lam.n();
    if (algebra_dim_closure(std::vector<Matrix>{a, b}) != n)
        throw NotSelfCentralizing("F[a,b] has dimension below n");
    AlgebraCoords coords;
    Matrix sys(f, n * n, n);
    std::vector<Matrix> apow{Matrix::identity(f, n)}, bpow{Matrix::identity(f, n)};
    for (std::size_t j = 0; j < lam.count(); ++j) {
        while (bpow.size() <= j) bpow.push_back(bpow.back() * b);
        for (std::size_t i = 0; i < lam.part(j); ++i) {
            while (apow.size() <= i) apow.push_back(apow.back() * a);
            Matrix mono = apow[i] * bpow[j];
            std::size_t col = coords.monomials.size();
            coords.monomials.emplace_back(i, j);
            for (std::size_t k = 0; k < n * n; ++k) sys(k, col) = mono.vec()(k, 0);
        }
    }
    if (coords.monomials.size() != n)
        throw InternalError("monomial basis of unexpected size");
    if (rank(sys) != n)
        throw InternalError("monomial family a^i b^j is not independent despite dim = n");
    auto sol = solve_linear(sys, c.vec());
    if (!sol) throw NotInAlgebra("c is not a combination of the basis monomials");
    for (std::size_t k = 0; k < n; ++k) coords.coeffs.push_back((*sol)(k, 0));
    return coords;
}

}  // namespace nilcommute
