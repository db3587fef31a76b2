#include "nilcommute/closure.hpp"

namespace nilcommute {

std::size_t r1_closure_dim(std::size_t d, std::size_t n) {
    if (n == 0 || d == 0) throw DimensionMismatch("need d >= 1 and n >= 1");
    return (n + d - 1) * (n - 1);
}

std::size_t d2_closure_dim(const Partition& lam) {
    return centralizer_dim_formula(lam) - lam.count() + lam.n() - 1;
}

namespace {

Matrix poly_in_matrix(const std::vector<Scalar>& coeffs, const Matrix& a) {
    Matrix acc(a.field(), a.rows(), a.cols());
    Matrix p = Matrix::identity(a.field(), a.rows());
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (e > 0) p = p * a;
        if (!coeffs[e].is_zero()) acc = acc + p.scaled(coeffs[e]);
    }
    return acc;
}

}  // namespace

NilTuple tuple_transform(const NilTuple& t, const TupleTransform& tr) {
    using Kind = TupleTransform::Kind;
    const FieldSpec& f = t.field();
    std::vector<Matrix> out;
    switch (tr.kind) {
        case Kind::Conjugate: {
            if (!tr.p) throw DimensionMismatch("conjugation needs a matrix");
            auto pinv = inverse(*tr.p);
            if (!pinv) throw NotInvertible("conjugating matrix is singular");
            for (const auto& m : t.mats()) out.push_back(*pinv * m * *tr.p);
            break;
        }
        case Kind::SpanChange: {
            if (!tr.g) throw DimensionMismatch("span change needs a d x d matrix");
            if (tr.g->rows() != t.d() || tr.g->cols() != t.d())
                throw DimensionMismatch("span change matrix must be d x d");
            if (!is_invertible(*tr.g)) throw NotInvertible("span change matrix is singular");
            for (std::size_t i = 0; i < t.d(); ++i) {
                Matrix m(f, t.n(), t.n());
                for (std::size_t j = 0; j < t.d(); ++j) {
                    const Scalar& c = (*tr.g)(i, j);
                    if (!c.is_zero()) m = m + t.mat(j).scaled(c);
                }
                out.push_back(std::move(m));
            }
            break;
        }
        case Kind::PolyShift: {
            if (tr.polys.size() != t.d() - 1)
                throw DimensionMismatch("need one shift polynomial per member beyond the first");
            out.push_back(t.mat(0));
            for (std::size_t i = 1; i < t.d(); ++i) {
                const auto& coeffs = tr.polys[i - 1];
                if (!coeffs.empty() && !coeffs[0].is_zero())
                    throw ConstantTerm("shift polynomials need zero constant term");
                out.push_back(t.mat(i) - poly_in_matrix(coeffs, t.mat(0)));
            }
            break;
        }
        case Kind::Transpose: {
            for (const auto& m : t.mats()) out.push_back(m.transpose());
            break;
        }
        case Kind::TwistedTranspose: {
            if (!tr.q) throw BadQ("twisted transpose needs a matrix q");
            auto qinv = inverse(*tr.q);
            if (!qinv) throw BadQ("twisting matrix is singular");
            if (*qinv * t.mat(0).transpose() * *tr.q != t.mat(0))
                throw BadQ("q does not intertwine the first member with its transpose");
            out.push_back(t.mat(0));
            for (std::size_t i = 1; i < t.d(); ++i)
                out.push_back(*qinv * t.mat(i).transpose() * *tr.q);
            break;
        }
    }
    return NilTuple(std::move(out));
}

std::pair<Matrix, Matrix> pair_transform(const Matrix& a, const Matrix& b, const Matrix& c,
                                         const PairTransform& tr) {
    // (b, c) must be a commuting nilpotent pair inside C(a)
    auto validate = [&](const Matrix& x) {
        if (!x.commutes_with(a)) throw NotInN2("pair member does not centralize a");
        if (!is_nilpotent(x).nilpotent) throw NotInN2("pair member is not nilpotent");
    };
    validate(b);
    validate(c);
    if (!b.commutes_with(c)) throw NotInN2("pair members do not commute");
    if (tr.kind == PairTransform::Kind::Swap) return {c, b};
    if (!tr.p) throw DimensionMismatch("shift needs a bivariate polynomial");
    if (tr.p->nvars() != 2) throw DimensionMismatch("shift polynomial must have 2 variables");
    if (!tr.p->constant_term().is_zero())
        throw ConstantTerm("shift polynomial needs zero constant term");
    Matrix shifted = tr.p->eval_matrices({a, b}) + c;
    return {b, shifted};
}

NilTuple sample_R1(std::size_t d, std::size_t n, const FieldSpec& f, std::uint64_t seed) {
    if (d == 0 || n < 2) throw DimensionMismatch("need d >= 1 and n >= 2");
    Rng rng(seed);
    Matrix j = jordan_matrix(Partition({n}), f);
    Matrix p(f, n, n);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) p(i, k) = rng.scalar(f);
        if (is_invertible(p)) break;
        if (attempt == 999) throw InternalError("no invertible conjugator found");
    }
    Matrix a = *inverse(p) * j * p;
    std::vector<Matrix> mats{a};
    for (std::size_t i = 1; i < d; ++i) {
        // p_i of degree <= n-2, applied as A * p_i(A)
        std::vector<Scalar> coeffs;
        for (std::size_t e = 0; e + 1 < n; ++e) coeffs.push_back(rng.scalar(f));
        mats.push_back(a * poly_in_matrix(coeffs, a));
    }
    return NilTuple(std::move(mats));
}

ParamFamily::ParamFamily(const FieldSpec& f, std::size_t n, std::vector<std::vector<Matrix>> coeffs)
    : field_(f), n_(n), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DimensionMismatch("family needs at least one member");
    for (const auto& member : coeffs_) {
        if (member.empty()) throw DimensionMismatch("each member needs a t^0 coefficient");
        for (const auto& c : member) {
            if (!(c.field() == field_)) throw FieldMismatch("coefficient over a different field");
            if (c.rows() != n_ || c.cols() != n_) throw DimensionMismatch("coefficient must be n x n");
        }
    }
}

std::size_t ParamFamily::degree_bound() const {
    std::size_t deg = 0;
    for (const auto& member : coeffs_) deg = std::max(deg, member.size() - 1);
    return deg;
}

std::vector<Matrix> ParamFamily::evaluate(const Scalar& t) const {
    if (!(t.field() == field_)) throw FieldMismatch("parameter over a different field");
    std::vector<Matrix> out;
    for (const auto& member : coeffs_) {
        Matrix acc = member.back();
        for (std::size_t e = member.size() - 1; e-- > 0;) acc = acc.scaled(t) + member[e];
        out.push_back(std::move(acc));
    }
    return out;
}

ParamFamily ParamFamily::extended_to(std::size_t d) const {
    if (d < coeffs_.size()) throw DimensionMismatch("cannot shrink a family");
    auto coeffs = coeffs_;
    while (coeffs.size() < d) coeffs.push_back({Matrix(field_, n_, n_)});
    return ParamFamily(field_, n_, std::move(coeffs));
}

ParamFamily regularization_family(const Partition& lam, const FieldSpec& f) {
    Matrix j = jordan_matrix(lam, f);
    Matrix e(f, lam.n(), lam.n());
    std::size_t off = 0;
    for (std::size_t b = 0; b + 1 < lam.count(); ++b) {
        // link the end of block b to the start of block b+1
        e(off + lam.part(b) - 1, off + lam.part(b)) = Scalar::one(f);
        off += lam.part(b);
    }
    return ParamFamily(f, lam.n(), {{j, e}});
}

Certificate curve_verify(const ParamFamily& fam, const NilTuple& target, std::uint64_t trials,
                         std::uint64_t seed) {
    if (trials == 0) throw BadSize("needs at least one trial");
    constexpr std::size_t kSpanCombos = 16;
    Certificate cert;
    cert.name = "curve-verify";
    cert.field = fam.field();
    cert.seed = seed;
    cert.trials = trials;
    cert.add("members", fam.d());
    cert.add("degree_bound", fam.degree_bound());
    const FieldSpec& f = fam.field();
    if (fam.d() != target.d() || fam.n() != target.n() || !(f == target.field()))
        throw BadFamily("family and target have different shapes");
    // exact basepoint identity; a mismatch is a fail verdict, not an error
    std::vector<Matrix> base = fam.evaluate(Scalar::zero(f));
    for (std::size_t i = 0; i < base.size(); ++i)
        if (base[i] != target.mat(i)) {
            cert.verdict = Verdict::Fail;
            cert.add("failure", "basepoint mismatch");
            cert.add("member", i);
            return cert;
        }
    cert.add("basepoint", "exact match");
    Rng rng(seed);
    std::uint64_t regular_found = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Scalar t = rng.nonzero_scalar(f);
        std::vector<Matrix> mats = fam.evaluate(t);
        for (std::size_t i = 0; i < mats.size(); ++i) {
            if (!is_nilpotent(mats[i]).nilpotent) {
                cert.verdict = Verdict::Fail;
                cert.add("failure", "member " + std::to_string(i) + " not nilpotent at t = " + t.to_string());
                return cert;
            }
            for (std::size_t k = i + 1; k < mats.size(); ++k)
                if (!mats[i].commutes_with(mats[k])) {
                    cert.verdict = Verdict::Fail;
                    cert.add("failure", "members " + std::to_string(i) + "," + std::to_string(k) +
                                            " do not commute at t = " + t.to_string());
                    return cert;
                }
        }
        bool regular = is_r_regular(mats[0], 1);
        for (std::size_t combo = 0; !regular && combo < kSpanCombos; ++combo) {
            Matrix span(f, fam.n(), fam.n());
            for (const auto& m : mats) span = span + m.scaled(rng.scalar(f));
            if (is_nilpotent(span).nilpotent && is_r_regular(span, 1)) regular = true;
        }
        if (regular) ++regular_found;
    }
    cert.add("samples_with_1_regular_member", regular_found);
    cert.add("span_combinations_per_sample", kSpanCombos);
    if (regular_found == trials) {
        cert.verdict = Verdict::Pass;
    } else {
        cert.verdict = Verdict::Inconclusive;
        cert.add("note", "no 1-regular span combination found at some parameters");
    }
    return cert;
}

Certificate certify_reducible(const NilTuple& t) {
    Certificate cert;
    cert.name = "certify-reducible";
    cert.field = t.field();
    std::size_t dim = algebra_dim_closure(t);
    cert.add("n", t.n());
    cert.add("members", t.d());
    cert.add("algebra_dim", dim);
    if (dim > t.n()) {
        cert.verdict = Verdict::Pass;
        cert.add("conclusion", "dimension obstruction consistent with reducibility");
    } else {
        cert.verdict = Verdict::Inconclusive;
        cert.add("conclusion", "no dimension obstruction: dim <= n");
    }
    return cert;
}

bool is_in_D2(const Matrix& a, const Matrix& b, const Matrix& c, const Partition& lam) {
    if (a != jordan_matrix(lam, a.field()))
        throw DimensionMismatch("a must be the Jordan matrix of lam");
    auto check = [&](const Matrix& x) {
        if (!x.commutes_with(a)) throw NotInN2("pair member does not centralize a");
        if (!is_nilpotent(x).nilpotent) throw NotInN2("pair member is not nilpotent");
    };
    check(b);
    check(c);
    if (!b.commutes_with(c)) throw NotInN2("pair members do not commute");
    return algebra_dim_closure(std::vector<Matrix>{a, b}) == lam.n();
}

}  // namespace nilcommute
