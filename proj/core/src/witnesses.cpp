#include "nilcommute/witnesses.hpp"

#include <utility>

#include "nilcommute/closure.hpp"
#include "nilcommute/io.hpp"
#include "nilcommute/parallel.hpp"

namespace nilcommute {

NilTuple gerstenhaber_quadruple(std::size_t n, const FieldSpec& f) {
    if (n < 4) throw BadSize("quadruple needs n >= 4");
    Matrix a1 = jordan_matrix(Partition({n - 2, 2}), f);
    Matrix a2(f, n, n), a3(f, n, n), a4(f, n, n);
    const Scalar one = Scalar::one(f);
    a2(0, n - 1) = one;
    a3(n - 2, n - 3) = one;
    a4(n - 2, n - 1) = one;
    return NilTuple({std::move(a1), std::move(a2), std::move(a3), std::move(a4)});
}

std::pair<Matrix, Matrix> basili_pair(const Partition& lam, const FieldSpec& f) {
    Matrix a = jordan_matrix(lam, f);
    Matrix b(f, lam.n(), lam.n());
    const Scalar one = Scalar::one(f);
    std::size_t off = 0;
    for (std::size_t i = 0; i + 1 < lam.count(); ++i) {
        std::size_t next = off + lam.part(i);
        // truncated identity: the smaller block maps onto the head of the
        // larger one, which is what makes the block commute with both shifts
        for (std::size_t r = 0; r < lam.part(i + 1); ++r) b(off + r, next + r) = one;
        off = next;
    }
    return {std::move(a), std::move(b)};
}

namespace {

// (row, col, coordinate index) of each shape entry; the repeated indices
// are the ties that keep the matrix inside the centralizer of J(3,2,1)
constexpr std::size_t kShapeEntries[][3] = {
    {0, 1, 0}, {0, 2, 1}, {0, 3, 2}, {0, 4, 3}, {0, 5, 4},
    {1, 2, 0}, {1, 4, 2},
    {3, 2, 5}, {3, 4, 6},
    {5, 2, 7}, {5, 4, 8},
};

// first reason m is not of the shape: an entry outside the support, or one
// of the two tied positions disagreeing with its partner
std::optional<std::pair<std::size_t, std::size_t>> shape_violation(const Matrix& m) {
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            bool supported = false;
            for (const auto& e : kShapeEntries)
                if (e[0] == i && e[1] == j) supported = true;
            if (!supported && !m(i, j).is_zero()) return std::make_pair(i, j);
        }
    if (m(1, 2) != m(0, 1)) return std::make_pair<std::size_t, std::size_t>(1, 2);
    if (m(1, 4) != m(0, 3)) return std::make_pair<std::size_t, std::size_t>(1, 4);
    return std::nullopt;
}

}  // namespace

Matrix n2red_shape(const FieldSpec& f, const std::vector<Scalar>& nine) {
    if (nine.size() != 9) throw BadShape("shape takes 9 coordinates");
    Matrix m(f, 6, 6);
    for (const auto& e : kShapeEntries) {
        if (nine[e[2]].field() != f) throw FieldMismatch("shape coordinate field");
        m(e[0], e[1]) = nine[e[2]];
    }
    return m;
}

std::vector<MultiPoly> n2red_equations(const FieldSpec& f) {
    auto var = [&](std::size_t i) { return MultiPoly::variable(f, 18, i); };
    // commutator entries of two shaped matrices reduce to these two
    MultiPoly eq1 =
        var(2) * var(14) + var(4) * var(16) - var(11) * var(5) - var(13) * var(7);
    MultiPoly eq2 = var(0) * var(11) + var(2) * var(15) + var(4) * var(17) -
                    var(9) * var(2) - var(11) * var(6) - var(13) * var(8);
    return {std::move(eq1), std::move(eq2)};
}

bool n2red_membership(const N2redPoint& pt) {
    if (pt.coords.size() != 18) throw BadShape("point takes 18 coordinates");
    bool vanish = true;
    for (const auto& eq : n2red_equations(pt.field))
        if (!eq.eval(pt.coords).is_zero()) vanish = false;
    // the two equations are exactly the commutator obstruction for the
    // assembled pair; a disagreement means the equations are wrong
    const bool commute = pt.first().commutes_with(pt.second());
    if (vanish != commute)
        throw InternalError("equations disagree with the assembled commutator");
    return vanish;
}

N2redPoint n2red_sample(const FieldSpec& f, Rng& rng) {
    constexpr int kMaxAttempts = 64;
    auto eqs = n2red_equations(f);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Scalar> coords(18, Scalar::zero(f));
        for (std::size_t i = 0; i < 9; ++i) coords[i] = rng.scalar(f);
        std::vector<Scalar> z(9, Scalar::zero(f));
        for (auto& s : z) s = rng.scalar(f);

        // with the unprimed half fixed the equations are linear homogeneous in
        // the primed half; project the random guess z onto their kernel
        Matrix m(f, eqs.size(), 9);
        for (std::size_t j = 0; j < 9; ++j) {
            std::vector<Scalar> probe = coords;
            probe[9 + j] = Scalar::one(f);
            for (std::size_t i = 0; i < eqs.size(); ++i) m(i, j) = eqs[i].eval(probe);
        }
        Matrix rhs(f, eqs.size(), 1);
        std::vector<Scalar> at_z = coords;
        for (std::size_t j = 0; j < 9; ++j) at_z[9 + j] = z[j];
        for (std::size_t i = 0; i < eqs.size(); ++i) rhs(i, 0) = -eqs[i].eval(at_z);
        auto y = solve_linear(m, rhs);
        if (!y) continue;
        for (std::size_t j = 0; j < 9; ++j) coords[9 + j] = z[j] + (*y)(j, 0);
        return N2redPoint{f, std::move(coords)};
    }
    throw ResolutionFailure("no consistent draw after bounded retries");
}

Certificate n2red_certificate(const FieldSpec& f, std::uint64_t seed, std::uint64_t trials) {
    if (trials == 0) throw BadSize("needs at least one trial");
    Certificate cert;
    cert.name = "n2red";
    cert.field = f;
    cert.seed = seed;
    cert.trials = trials;

    const Partition lam({3, 2, 1});
    const Matrix a0 = jordan_matrix(lam, f);
    auto eqs = n2red_equations(f);
    const std::size_t ambient = 18;
    const std::size_t shaped_dim = ambient - eqs.size();
    const std::size_t closure_dim = d2_closure_dim(lam);
    cert.add("ambient_dimension", ambient);
    cert.add("equations", eqs.size());
    cert.add("shaped_dimension", shaped_dim);
    cert.add("regular_closure_dimension", closure_dim);

    std::vector<std::uint8_t> sample_ok(trials, 0), smooth(trials, 0);
    parallel_for(trials, [&](std::size_t t) {
        Rng rng(mix_seed(seed, t));
        N2redPoint pt = n2red_sample(f, rng);
        // each sample must sit on the locus and assemble to a commuting
        // nilpotent pair inside the centralizer of J(3,2,1)
        Matrix b = pt.first(), c = pt.second();
        sample_ok[t] = n2red_membership(pt) && b.commutes_with(c) && b.commutes_with(a0) &&
                               c.commutes_with(a0) && is_nilpotent(b).nilpotent &&
                               is_nilpotent(c).nilpotent
                           ? 1
                           : 0;
        auto jac = poly_eval_jacobian(eqs, pt.coords);
        smooth[t] = rank(jac.jacobian) == eqs.size() ? 1 : 0;
    });
    std::uint64_t n_on = 0, n_smooth = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        n_on += sample_ok[t];
        n_smooth += smooth[t];
    }
    // ceil(0.95 * trials) without floating point
    const std::uint64_t smooth_needed = (19 * trials + 19) / 20;
    cert.add("samples_on_locus", n_on);
    cert.add("samples_with_full_jacobian_rank", n_smooth);
    cert.add("full_rank_samples_needed", smooth_needed);

    // a commuting nilpotent pair over J(3,2,1) that the shape misses: the
    // block-superdiagonal pair, whose (3,5) entry has no shape coordinate
    Matrix wit = basili_pair(lam, f).second;
    const bool w_comm = wit.commutes_with(a0);
    const bool w_nil = is_nilpotent(wit).nilpotent;
    const auto violation = shape_violation(wit);
    const std::size_t pair_dim = algebra_dim_closure(std::vector<Matrix>{a0, wit});
    cert.add("witness", json_of_matrix(wit));
    cert.add("witness_commutes", w_comm);
    cert.add("witness_nilpotent", w_nil);
    if (violation)
        cert.add("witness_entry_outside_shape",
                 nlohmann::json::array({violation->first, violation->second}));
    cert.add("witness_pair_algebra_dim", pair_dim);

    if (n_on != trials || !w_comm || !w_nil || !violation || shaped_dim != closure_dim ||
        pair_dim != lam.n()) {
        cert.verdict = Verdict::Fail;
        cert.add("reason", "an exact identity failed");
        return cert;
    }
    if (n_smooth < smooth_needed) {
        cert.verdict = Verdict::Inconclusive;
        cert.add("reason", "too few samples with full jacobian rank");
        return cert;
    }
    cert.verdict = Verdict::Pass;
    cert.add("conclusion", "dimension obstruction consistent with reducibility");
    return cert;
}

Prop1NonzeroPair prop1nonzero_pair(std::size_t k, std::size_t n, const Scalar& s,
                                   const Scalar& t) {
    const FieldSpec f = s.field();
    if (t.field() != f) throw FieldMismatch("parameters live in different fields");
    if (k < 2 || k + 2 > n) throw BadShape("needs 2 <= k <= n-2");
    if (s.is_zero() || t.is_zero()) throw ZeroParameter("both parameters must be nonzero");

    const Scalar s2 = s * s, s3 = s2 * s, t2 = t * t, t3 = t2 * t;
    const Scalar beta = s2, gamma = t2;
    const std::size_t q = n - k;
    Matrix x(f, q, q), xp(f, q, q);
    x(0, 0) = s2 * t;
    x(0, 1) = s3;
    x(1, 0) = -(s * t2);
    x(1, 1) = -(s2 * t);
    xp(0, 0) = -(s * t2);
    xp(0, 1) = -(s2 * t);
    xp(1, 0) = t3;
    xp(1, 1) = s * t2;

    Matrix y(f, n, n), z(f, n, n);
    y.set_block(k, k, x);
    z.set_block(k, k, xp);

    Matrix a(f, n, n);
    for (std::size_t i = 0; i + 1 < k; ++i) a(i, i + 1) = Scalar::one(f);
    Matrix b(f, n, n), c(f, n, n);
    b(0, k) = Scalar::one(f);
    b(k, k - 1) = beta;
    c(0, k + 1) = Scalar::one(f);
    c(k + 1, k - 1) = -gamma;
    return {std::move(y), std::move(z), std::move(a), std::move(b), std::move(c),
            std::move(x), std::move(xp)};
}

std::pair<Matrix, Matrix> squarezero_pair(const Matrix& w, const Matrix& v) {
    const FieldSpec f = w.field();
    if (v.field() != f) throw FieldMismatch("blocks live in different fields");
    if (!w.is_square()) throw NotSquare("left block must be square");
    if (v.rows() != w.rows()) throw BadShape("blocks need equal row counts");
    const std::size_t l = w.rows(), m = v.cols();
    if (l == 0 || m == 0) throw BadShape("blocks must be nonempty");
    const std::size_t n = 2 * l + m;
    Matrix a(f, n, n), b(f, n, n);
    a.set_block(0, l, Matrix::identity(f, l));
    b.set_block(0, l, w);
    b.set_block(0, 2 * l, v);
    return {std::move(a), std::move(b)};
}

std::pair<Matrix, Matrix> squarezero_pair_m1(const Matrix& e, const Matrix& fcol) {
    if (fcol.cols() != 1) throw BadShape("the m = 1 form takes a single column");
    return squarezero_pair(e, fcol);
}

namespace {

// invertible matrix whose last columns are the given independent columns,
// front filled greedily with standard basis vectors
Matrix complete_basis(const Matrix& tail) {
    const FieldSpec& f = tail.field();
    const std::size_t l = tail.rows(), m = tail.cols();
    SpanBuilder span(f, l);
    for (std::size_t j = 0; j < m; ++j)
        if (!span.insert(tail.block(0, j, l, 1)))
            throw InternalError("completion target must have independent columns");
    Matrix q(f, l, l);
    std::size_t placed = 0;
    for (std::size_t i = 0; i < l && placed < l - m; ++i) {
        Matrix e(f, l, 1);
        e(i, 0) = Scalar::one(f);
        if (span.insert(e)) {
            q.set_block(0, placed, e);
            ++placed;
        }
    }
    if (placed + m != l) throw InternalError("basis completion came up short");
    q.set_block(0, l - m, tail);
    return q;
}

}  // namespace

Matrix squarezero_commutant(const Matrix& w0, const Matrix& v0) {
    const FieldSpec f = w0.field();
    const auto ab = squarezero_pair(w0, v0);
    const Matrix& a = ab.first;
    const Matrix& b = ab.second;
    const std::size_t l = w0.rows(), m = v0.cols(), n = 2 * l + m;
    if (m < 2) throw BadShape("needs m >= 2; the m = 1 form is separate");

    Matrix w = w0, v = v0;
    // cumulative change of basis [[Qc,0,0],[0,Qc,0],[0,Tc,I]], an element of
    // the centralizer of the first member
    Matrix qc = Matrix::identity(f, l);
    Matrix tc = Matrix::zero(f, m, l);

    auto finish = [&](const Matrix& nprime) {
        Matrix pc(f, n, n);
        pc.set_block(0, 0, qc);
        pc.set_block(l, l, qc);
        pc.set_block(2 * l, l, tc);
        pc.set_block(2 * l, 2 * l, Matrix::identity(f, m));
        auto pci = inverse(pc);
        if (!pci) throw InternalError("change of basis must be invertible");
        Matrix out = pc * nprime * *pci;
        if (out.is_zero() || !(out * out).is_zero()) throw InternalError("witness not square-zero");
        if (!out.commutes_with(a) || !out.commutes_with(b))
            throw InternalError("witness fell out of the commutant");
        return out;
    };

    // a kernel vector of v already gives the witness
    if (rank(v) < m) {
        Matrix x = kernel_basis(v)[0];
        Matrix bottom(f, m, l);
        bottom.set_block(0, 0, x);  // x e_1^T
        Matrix nprime(f, n, n);
        nprime.set_block(2 * l, l, bottom);
        return finish(nprime);
    }

    // v injective: conjugate so that v = (0; I) and the bottom rows of w
    // vanish, then walk the staircase until a column block loses rank
    auto apply = [&](const Matrix& q, const Matrix& t) {
        auto qi = inverse(q);
        if (!qi) throw InternalError("stage conjugation must be invertible");
        w = *qi * w * q + (*qi * v) * t;
        v = *qi * v;
        tc = tc * q + t;
        qc = qc * q;
    };
    {
        Matrix q = complete_basis(v);
        auto qi = inverse(q);
        if (!qi) throw InternalError("completion must be invertible");
        Matrix t = -(*qi * w * q).block(l - m, 0, m, l);
        apply(q, t);
    }

    for (std::size_t stage = 1;; ++stage) {
        const std::size_t h = l - stage * m;

        // stage invariant: v = (0; I); w carries the working blocks in the
        // first h rows and an identity staircase below them
        {
            Matrix vexp(f, l, m);
            vexp.set_block(l - m, 0, Matrix::identity(f, m));
            if (v != vexp) throw InternalError("stage lost the v normal form");
            Matrix wexp(f, l, l);
            wexp.set_block(0, 0, w.block(0, 0, h, h));
            wexp.set_block(0, h, w.block(0, h, h, m));
            for (std::size_t r = 1; r + 1 <= stage; ++r)
                wexp.set_block(h + (r - 1) * m, h + r * m, Matrix::identity(f, m));
            if (w != wexp) throw InternalError("stage lost the w normal form");
        }

        Matrix w1 = w.block(0, 0, h, h);
        Matrix w2 = w.block(0, h, h, m);
        if (rank(w2) < m) {
            // x kills the working column block, y makes the rank-one square
            // zero; the diagonal copies commute with the staircase
            Matrix x = kernel_basis(w2)[0];
            Matrix y = kernel_basis(x.transpose())[0];
            Matrix n1 = x * y.transpose();
            std::vector<Matrix> blocks(stage + 1, n1);
            blocks[0] = Matrix::zero(f, h, h);
            Matrix npp = block_diag(f, blocks);
            Matrix nprime(f, n, n);
            nprime.set_block(0, 0, npp);
            nprime.set_block(l, l, npp);
            nprime.set_block(2 * l, 2 * l, n1);
            return finish(nprime);
        }

        // w2 injective: push it onto the staircase and recurse into the
        // leading h - m coordinates
        Matrix s = complete_basis(w2);
        auto si = inverse(s);
        if (!si) throw InternalError("stage completion must be invertible");
        Matrix hatw2(f, h, m);
        hatw2.set_block(h - m, 0, Matrix::identity(f, m));
        Matrix m1 = *si * w1 * s;
        Matrix rmat = -m1.block(h - m, 0, m, h);
        Matrix hatw1 = m1 + hatw2 * rmat;

        std::vector<Matrix> pw = {Matrix::identity(f, h)};
        for (std::size_t e = 1; e <= stage; ++e) pw.push_back(pw.back() * hatw1);

        Matrix q(f, l, l);
        q.set_block(0, 0, s);
        for (std::size_t r = 1; r <= stage; ++r) {
            const std::size_t row0 = h + (r - 1) * m;
            q.set_block(row0, 0, rmat * pw[r - 1]);
            for (std::size_t c = 1; c + 1 <= r; ++c)
                q.set_block(row0, h + (c - 1) * m, rmat * pw[r - 1 - c] * hatw2);
            q.set_block(row0, h + (r - 1) * m, Matrix::identity(f, m));
        }
        Matrix t(f, m, l);
        t.set_block(0, 0, rmat * pw[stage]);
        for (std::size_t c = 1; c <= stage; ++c)
            t.set_block(0, h + (c - 1) * m, rmat * pw[stage - c] * hatw2);
        apply(q, t);
    }
}

Matrix squarezero_commutant_m1(const Matrix& e, const Matrix& fcol) {
    const FieldSpec f = e.field();
    auto [a, b] = squarezero_pair_m1(e, fcol);
    const std::size_t l = e.rows(), n = 2 * l + 1;

    Matrix ef(f, l, l + 1);
    ef.set_block(0, 0, e);
    ef.set_block(0, l, fcol);
    if (rank(ef) + 1 > l) throw RankTooHigh("concatenated block needs rank at most l - 1");

    // x annihilates both blocks from the left; (y, zeta) is a right kernel
    // combination with x^T y = 0, so every product below collapses
    Matrix x = kernel_basis(ef.transpose())[0];
    auto ker = kernel_basis(ef);
    Matrix sys(f, 1, ker.size());
    for (std::size_t i = 0; i < ker.size(); ++i)
        sys(0, i) = (x.transpose() * ker[i].block(0, 0, l, 1))(0, 0);
    Matrix combo(f, l + 1, 1);
    Matrix coeff = kernel_basis(sys)[0];
    for (std::size_t i = 0; i < ker.size(); ++i) combo = combo + coeff(i, 0) * ker[i];
    Matrix y = combo.block(0, 0, l, 1);
    const Scalar zeta = combo(l, 0);

    Matrix yx = y * x.transpose();
    Matrix out(f, n, n);
    out.set_block(0, 0, yx);
    out.set_block(l, l, yx);
    out.set_block(2 * l, l, zeta * x.transpose());
    if (out.is_zero() || !(out * out).is_zero()) throw InternalError("witness not square-zero");
    if (!out.commutes_with(a) || !out.commutes_with(b))
        throw InternalError("witness fell out of the commutant");
    return out;
}

Prop321Data prop321_fixed_data(const FieldSpec& f) {
    std::vector<Matrix> x;
    for (std::size_t i = 0; i < 3; ++i) {
        Matrix e(f, 3, 1);
        e(i, 0) = Scalar::one(f);
        x.push_back(std::move(e));
    }
    std::vector<Matrix> z;
    z.push_back(Matrix::from_ints(f, 3, 2, {0, 1, 0, 0, 1, 0}));
    z.push_back(Matrix::from_ints(f, 3, 2, {0, 0, 1, 0, 0, 1}));
    z.push_back(Matrix::from_ints(f, 3, 2, {1, 0, 0, 1, 0, 0}));
    Matrix j2 = Matrix::from_ints(f, 2, 2, {0, 1, 0, 0});
    return {std::move(x), std::move(z), std::move(j2)};
}

Prop321Family prop321_family(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                             const Scalar& delta) {
    const FieldSpec f = alpha.field();
    if (beta.field() != f || gamma.field() != f || delta.field() != f)
        throw FieldMismatch("family parameters live in different fields");
    const Scalar a = alpha, g = gamma;
    const Scalar bd = beta - delta;
    const Scalar a2 = -(a + a);
    const Scalar g2 = -(g + g);
    const Scalar g4 = Scalar::of_int(f, 4) * g;
    Prop321Family fam;
    fam.y.push_back(Matrix::from_entries(f, 3, 3, {a, beta, g, g, a2, beta, bd, g, a}));
    fam.y.push_back(Matrix::from_entries(f, 3, 3, {g, a2, beta, bd, g2, a2, a2, bd, g}));
    fam.y.push_back(Matrix::from_entries(f, 3, 3, {bd, g, a, a2, bd, g, g4, a2, bd}));
    fam.zeta = {delta, -(a + a + a), g + g + g};
    return fam;
}

Prop321Checks prop321_check(const Prop321Family& fam, const FieldSpec& f) {
    if (fam.y.size() != 3 || fam.zeta.size() != 3) throw BadShape("family takes 3 members");
    const Prop321Data data = prop321_fixed_data(f);
    Prop321Checks out;
    out.linear_x = out.linear_z = out.commute = out.traceless = out.nilpotent = true;
    for (std::size_t i = 0; i < 3; ++i) {
        out.traceless = out.traceless && fam.y[i].trace().is_zero();
        out.nilpotent = out.nilpotent && is_nilpotent(fam.y[i]).nilpotent;
        for (std::size_t j = i + 1; j < 3; ++j) {
            out.linear_x = out.linear_x && data.x[i].transpose() * fam.y[j] ==
                                               data.x[j].transpose() * fam.y[i];
            Matrix lhs = fam.y[i] * data.z[j] + fam.zeta[j] * (data.z[i] * data.j2);
            Matrix rhs = fam.y[j] * data.z[i] + fam.zeta[i] * (data.z[j] * data.j2);
            out.linear_z = out.linear_z && lhs == rhs;
            out.commute = out.commute && fam.y[i].commutes_with(fam.y[j]);
        }
    }
    return out;
}

Prop321Solution prop321_solution(Prop321Case kind, const FieldSpec& f, const Scalar& beta,
                                 const std::optional<Scalar>& omega) {
    if (beta.field() != f) throw FieldMismatch("parameter field");
    const std::uint32_t ch = f.characteristic();
    Prop321Family fam;
    switch (kind) {
        case Prop321Case::Generic: {
            if (ch == 2 || ch == 3)
                throw CharacteristicMismatch("generic case excludes characteristic 2 and 3");
            Scalar w = omega.value_or(Scalar::fraction(f, 2, 3));
            if (w.field() != f) throw FieldMismatch("omega field");
            Scalar root = w * (Scalar::of_int(f, 27) * w * w * w - Scalar::of_int(f, 8));
            if (!root.is_zero()) throw OmegaNotRoot("omega must satisfy w(27w^3 - 8) = 0");
            Scalar alpha = beta * w;
            Scalar gamma = -(Scalar::fraction(f, 3, 2) * beta * w * w);
            fam = prop321_family(alpha, beta, gamma, beta);
            break;
        }
        case Prop321Case::Char2:
            if (ch != 2) throw CharacteristicMismatch("case needs characteristic 2");
            fam = prop321_family(Scalar::zero(f), beta, Scalar::zero(f), beta);
            break;
        case Prop321Case::Char3:
            if (ch != 3) throw CharacteristicMismatch("case needs characteristic 3");
            fam = prop321_family(Scalar::zero(f), beta, Scalar::zero(f), beta);
            break;
    }
    if (!prop321_check(fam, f).all()) throw InternalError("family checks failed");

    const Prop321Data data = prop321_fixed_data(f);
    std::vector<Matrix> big;
    for (std::size_t i = 0; i < 3; ++i) {
        Matrix x(f, 6, 6);
        x.set_block(0, 1, data.x[i].transpose());
        x.set_block(1, 1, fam.y[i]);
        x.set_block(1, 4, data.z[i]);
        x.set_block(4, 4, fam.zeta[i] * data.j2);
        big.push_back(std::move(x));
    }
    NilTuple tup(big);
    const bool onereg = is_r_regular(tup.mat(0), 1);
    return {kind, std::move(fam), tup.mats(), onereg};
}

std::vector<std::array<std::uint32_t, 4>> prop321_fiber_bruteforce(std::uint64_t p) {
    if (p > 11) throw PrimeTooLarge("brute force fiber capped at p <= 11");
    const FieldSpec f = FieldSpec::prime_field(p);
    std::vector<std::array<std::uint32_t, 4>> out;
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t g = 0; g < p; ++g)
                for (std::uint32_t d = 0; d < p; ++d) {
                    Scalar beta = Scalar::from_residue(f, b), delta = Scalar::from_residue(f, d);
                    // the family solves the linear constraints exactly on
                    // 3(beta - delta) = 0; the quadratic ones are checked
                    if (!(Scalar::of_int(f, 3) * (beta - delta)).is_zero()) continue;
                    Prop321Family fam = prop321_family(Scalar::from_residue(f, a), beta,
                                                       Scalar::from_residue(f, g), delta);
                    Prop321Checks ch = prop321_check(fam, f);
                    if (ch.commute && ch.nilpotent) out.push_back({a, b, g, d});
                }
    return out;
}

}  // namespace nilcommute
