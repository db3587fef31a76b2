#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "nilcommute/io.hpp"

using namespace nilcommute;
using namespace testutil;

namespace {

const nlohmann::json& ev(const Certificate& c, const std::string& label) {
    for (const auto& [k, v] : c.evidence)
        if (k == label) return v;
    throw std::runtime_error("missing evidence: " + label);
}

std::vector<Scalar> random_coords(Rng& rng, const FieldSpec& f, std::size_t n) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(rng.scalar(f));
    return out;
}

}  // namespace

TEST_CASE("gerstenhaber quadruple beats the ambient dimension") {
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(101)}) {
        for (std::size_t n = 4; n <= 12; ++n) {
            NilTuple t = gerstenhaber_quadruple(n, f);
            REQUIRE(t.d() == 4);
            REQUIRE(t.n() == n);
            REQUIRE(t.mat(0) == jordan_matrix(Partition({n - 2, 2}), f));
            // the three rank-one members, each a single unit entry
            auto single = [&](const Matrix& m, std::size_t i, std::size_t j) {
                Matrix e = Matrix::zero(f, n, n);
                e(i, j) = Scalar::one(f);
                return m == e;
            };
            REQUIRE(single(t.mat(1), 0, n - 1));
            REQUIRE(single(t.mat(2), n - 2, n - 3));
            REQUIRE(single(t.mat(3), n - 2, n - 1));
            REQUIRE(algebra_dim_closure(t) == n + 1);
        }
        CHECK_THROWS_AS(gerstenhaber_quadruple(3, f), BadSize);
        CHECK_THROWS_AS(gerstenhaber_quadruple(0, f), BadSize);
    }
}

TEST_CASE("basili pair postconditions on all partitions up to 8") {
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(101)}) {
        for (std::size_t n = 1; n <= 8; ++n)
            for (const auto& lam : partitions_of(n)) {
                auto [a, b] = basili_pair(lam, f);
                REQUIRE(a == jordan_matrix(lam, f));
                REQUIRE(is_nilpotent(b).nilpotent);
                REQUIRE(a.commutes_with(b));
                REQUIRE(subspace_intersection(kernel_basis(a), kernel_basis(b)).size() == 1);
            }
    }
}

TEST_CASE("pair variety shape lives in the centralizer") {
    FieldSpec f = FieldSpec::prime_field(101);
    Matrix j321 = jordan_matrix(Partition({3, 2, 1}), f);
    Rng rng(mix_seed(311, 0));
    for (int iter = 0; iter < 100; ++iter) {
        Matrix m = n2red_shape(f, random_coords(rng, f, 9));
        REQUIRE(m.rows() == 6);
        REQUIRE(m.commutes_with(j321));
        REQUIRE(is_nilpotent(m).nilpotent);
        // the two tied positions
        REQUIRE(m(1, 2) == m(0, 1));
        REQUIRE(m(1, 4) == m(0, 3));
    }
    CHECK_THROWS_AS(n2red_shape(f, random_coords(rng, f, 8)), BadShape);
}

TEST_CASE("pair variety equations are the commutator obstruction") {
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(101)}) {
        auto eqs = n2red_equations(f);
        REQUIRE(eqs.size() == 2);

        // the coefficient rows over the union of quadratic monomials are
        // independent
        std::set<MultiPoly::Exponents> support;
        for (const auto& eq : eqs)
            for (const auto& term : eq.terms()) support.insert(term.first);
        Matrix coeff(f, eqs.size(), support.size());
        for (std::size_t r = 0; r < eqs.size(); ++r) {
            std::size_t col = 0;
            for (const auto& e : support) {
                auto it = eqs[r].terms().find(e);
                if (it != eqs[r].terms().end()) coeff(r, col) = it->second;
                ++col;
            }
        }
        REQUIRE(rank(coeff) == 2);

        Rng rng(mix_seed(313, f.characteristic()));
        int members = 0;
        for (int iter = 0; iter < 100; ++iter) {
            N2redPoint pt{f, random_coords(rng, f, 18)};
            bool vanish = true;
            for (const auto& eq : eqs)
                if (!eq.eval(pt.coords).is_zero()) vanish = false;
            REQUIRE(vanish == pt.first().commutes_with(pt.second()));
            if (vanish) ++members;
            REQUIRE(n2red_membership(pt) == vanish);
        }
        // random points occasionally land on the locus but mostly miss
        CHECK(members < 50);
    }

    FieldSpec q = FieldSpec::rationals();
    std::vector<Scalar> zeros(18, Scalar::zero(q));
    CHECK(n2red_membership({q, zeros}));
    // primed member zero: both equation halves vanish
    Rng rng(mix_seed(317, 9));
    std::vector<Scalar> half = random_coords(rng, q, 9);
    half.resize(18, Scalar::zero(q));
    CHECK(n2red_membership({q, half}));
    // c f' alone breaks the first equation
    std::vector<Scalar> cf = zeros;
    cf[2] = Scalar::one(q);
    cf[14] = Scalar::one(q);
    CHECK_FALSE(n2red_membership({q, cf}));
    CHECK_THROWS_AS(n2red_membership({q, random_coords(rng, q, 17)}), BadShape);
}

TEST_CASE("pair variety sampler stays on the locus and is mostly smooth") {
    FieldSpec f = FieldSpec::prime_field(101);
    auto eqs = n2red_equations(f);
    Rng rng(mix_seed(331, 5));
    int smooth = 0;
    for (int iter = 0; iter < 100; ++iter) {
        N2redPoint pt = n2red_sample(f, rng);
        REQUIRE(pt.coords.size() == 18);
        REQUIRE(n2red_membership(pt));
        auto jac = poly_eval_jacobian(eqs, pt.coords);
        for (const auto& v : jac.values) REQUIRE(v.is_zero());
        std::size_t r = rank(jac.jacobian);
        REQUIRE(r <= 2);
        if (r == 2) ++smooth;
    }
    CHECK(smooth >= 90);

    FieldSpec q = FieldSpec::rationals();
    Rng rq(mix_seed(331, 6));
    for (int iter = 0; iter < 10; ++iter) REQUIRE(n2red_membership(n2red_sample(q, rq)));
}

TEST_CASE("pair variety certificate") {
    FieldSpec f = FieldSpec::prime_field(101);
    Certificate c = n2red_certificate(f, 7, 25);
    CHECK(c.name == "n2red");
    CHECK(c.verdict == Verdict::Pass);
    CHECK(c.seed == 7);
    CHECK(c.trials == 25);
    CHECK(ev(c, "ambient_dimension") == 18);
    CHECK(ev(c, "equations") == 2);
    CHECK(ev(c, "samples_on_locus") == 25);
    CHECK(ev(c, "witness_commutes") == true);
    CHECK(ev(c, "witness_nilpotent") == true);
    CHECK(ev(c, "witness_entry_outside_shape") == nlohmann::json::array({3, 5}));
    CHECK(ev(c, "conclusion") == "dimension obstruction consistent with reducibility");
    // the two competing pieces have equal dimension
    CHECK(ev(c, "shaped_dimension") == ev(c, "regular_closure_dimension"));

    Certificate cq = n2red_certificate(FieldSpec::rationals(), 3, 5);
    CHECK(cq.verdict == Verdict::Pass);
    CHECK_THROWS_AS(n2red_certificate(f, 1, 0), BadSize);
}

TEST_CASE("square-zero pair and its nilpotent commutant") {
    auto verify = [](const Matrix& w, const Matrix& v) {
        auto [a, b] = squarezero_pair(w, v);
        std::size_t l = w.rows(), m = v.cols(), n = 2 * l + m;
        REQUIRE(a.rows() == n);
        REQUIRE((a * a).is_zero());
        REQUIRE((b * b).is_zero());
        REQUIRE(a.commutes_with(b));
        Matrix x = m >= 2 ? squarezero_commutant(w, v) : squarezero_commutant_m1(w, v);
        REQUIRE_FALSE(x.is_zero());
        REQUIRE(is_nilpotent(x).nilpotent);
        REQUIRE(x.commutes_with(a));
        REQUIRE(x.commutes_with(b));
    };

    FieldSpec q = FieldSpec::rationals();
    FieldSpec f101 = FieldSpec::prime_field(101);

    // v = 0 takes the kernel branch immediately
    Rng rng(mix_seed(401, 0));
    verify(random_matrix(rng, q, 3, 3), Matrix::zero(q, 3, 2));
    // the terminal square form
    verify(Matrix::zero(q, 2, 2), Matrix::identity(q, 2));

    int batch = 0;
    for (std::size_t l = 1; l <= 4; ++l)
        for (std::size_t m = 2; m <= 3; ++m)
            for (int iter = 0; iter < 25; ++iter) {
                const FieldSpec& f = (iter % 2 == 0) ? q : f101;
                Rng r(mix_seed(403, (l * 10 + m) * 100 + iter));
                verify(random_matrix(r, f, l, l), random_matrix(r, f, l, m));
                ++batch;
            }
    CHECK(batch == 200);

    CHECK_THROWS_AS(squarezero_commutant(Matrix::zero(q, 2, 2), Matrix::zero(q, 2, 1)), BadShape);
    CHECK_THROWS_AS(squarezero_pair(Matrix::zero(q, 2, 3), Matrix::zero(q, 2, 2)), NotSquare);
    CHECK_THROWS_AS(squarezero_pair(Matrix::zero(q, 2, 2), Matrix::zero(q, 3, 2)), BadShape);
}

TEST_CASE("square-zero commutant with a single tail column") {
    FieldSpec q = FieldSpec::rationals();
    auto verify = [](const Matrix& e, const Matrix& fcol) {
        auto [a, b] = squarezero_pair_m1(e, fcol);
        REQUIRE((a * a).is_zero());
        REQUIRE((b * b).is_zero());
        REQUIRE(a.commutes_with(b));
        Matrix x = squarezero_commutant_m1(e, fcol);
        REQUIRE_FALSE(x.is_zero());
        REQUIRE(is_nilpotent(x).nilpotent);
        REQUIRE(x.commutes_with(a));
        REQUIRE(x.commutes_with(b));
    };

    verify(Matrix::zero(q, 2, 2), Matrix::zero(q, 2, 1));
    for (int iter = 0; iter < 100; ++iter) {
        const FieldSpec f = (iter % 2 == 0) ? q : FieldSpec::prime_field(101);
        Rng rng(mix_seed(409, iter));
        std::size_t l = 2 + rng.below(3);  // up to 4
        // force rank [E F] <= l - 1 by factoring through l - 1 columns
        Matrix g = random_matrix(rng, f, l, l - 1);
        Matrix h = random_matrix(rng, f, l - 1, l);
        Matrix e = g * h;
        Matrix fcol = e * random_matrix(rng, f, l, 1);
        verify(e, fcol);
    }
    CHECK_THROWS_AS(squarezero_commutant_m1(Matrix::identity(q, 2), Matrix::zero(q, 2, 1)),
                    RankTooHigh);
    CHECK_THROWS_AS(squarezero_commutant_m1(Matrix::zero(q, 2, 2), Matrix::zero(q, 2, 2)),
                    BadShape);
}

TEST_CASE("rank-one perturbation pair with nonzero parameters") {
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f101 = FieldSpec::prime_field(101);

    auto verify = [](std::size_t k, std::size_t n, const Scalar& s, const Scalar& t, Rng& rng) {
        const FieldSpec& f = s.field();
        Prop1NonzeroPair pp = prop1nonzero_pair(k, n, s, t);
        std::size_t m = n - k;
        Scalar beta = s * s, gamma = t * t;

        REQUIRE((pp.y * pp.y).is_zero());
        REQUIRE((pp.z * pp.z).is_zero());
        REQUIRE(pp.y.commutes_with(pp.z));
        REQUIRE_FALSE(pp.x.is_zero());
        // y and z carry x and x' on the tail block and vanish elsewhere
        Matrix ytail = Matrix::zero(f, n, n);
        ytail.set_block(k, k, pp.x);
        REQUIRE(pp.y == ytail);
        Matrix ztail = Matrix::zero(f, n, n);
        ztail.set_block(k, k, pp.xprime);
        REQUIRE(pp.z == ztail);
        // boundary identities tie the two tail blocks together
        REQUIRE(pp.xprime.block(0, 0, 1, m) == pp.x.block(1, 0, 1, m));
        REQUIRE((pp.xprime.block(0, 0, m, 1).scaled(beta) + pp.x.block(0, 1, m, 1).scaled(gamma))
                    .is_zero());
        // the perturbed triple stays commuting nilpotent for any lambda
        NilTuple base({pp.a, pp.b, pp.c});
        REQUIRE(base.n() == n);
        for (int i = 0; i < 3; ++i) {
            Scalar lam = rng.nonzero_scalar(f);
            NilTuple t2({pp.a, pp.b + pp.y.scaled(lam), pp.c + pp.z.scaled(lam)});
            REQUIRE(t2.n() == n);
        }
    };

    Rng rng(mix_seed(419, 1));
    for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{
             {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 8}, {5, 9}}) {
        verify(k, n, Scalar::parse(q, "3/2"), Scalar::parse(q, "-5/7"), rng);
        verify(k, n, rng.nonzero_scalar(f101), rng.nonzero_scalar(f101), rng);
    }

    Scalar one = Scalar::one(q), zero = Scalar::zero(q);
    CHECK_THROWS_AS(prop1nonzero_pair(2, 4, zero, one), ZeroParameter);
    CHECK_THROWS_AS(prop1nonzero_pair(2, 4, one, zero), ZeroParameter);
    CHECK_THROWS_AS(prop1nonzero_pair(1, 4, one, one), BadShape);
    CHECK_THROWS_AS(prop1nonzero_pair(3, 4, one, one), BadShape);
    CHECK_THROWS_AS(prop1nonzero_pair(2, 4, one, Scalar::one(f101)), FieldMismatch);
}

TEST_CASE("triple extension fixed data and family linearity") {
    FieldSpec q = FieldSpec::rationals();
    Prop321Data data = prop321_fixed_data(q);
    REQUIRE(data.x.size() == 3);
    REQUIRE(data.z.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        Matrix e = Matrix::zero(q, 3, 1);
        e(i, 0) = Scalar::one(q);
        CHECK(data.x[i] == e);
        CHECK(data.z[i].rows() == 3);
        CHECK(data.z[i].cols() == 2);
        CHECK(rank(data.z[i]) == 2);
    }
    CHECK(data.j2 == jordan_matrix(Partition({2}), q));
    // Z_1 sends the second unit vector to the first
    Matrix e2 = Matrix::from_ints(q, 2, 1, {0, 1});
    CHECK(data.z[0] * e2 == data.x[0]);

    // the family is linear in the four parameters
    Rng rng(mix_seed(431, 0));
    for (int iter = 0; iter < 20; ++iter) {
        Scalar a = rng.scalar(q), b = rng.scalar(q), g = rng.scalar(q), d = rng.scalar(q);
        Scalar c = rng.scalar(q);
        Prop321Family f1 = prop321_family(a, b, g, d);
        Prop321Family f2 = prop321_family(c * a, c * b, c * g, c * d);
        for (std::size_t i = 0; i < 3; ++i) {
            REQUIRE(f2.y[i] == f1.y[i].scaled(c));
            REQUIRE(f2.zeta[i] == c * f1.zeta[i]);
        }
    }
    Prop321Family zerof = prop321_family(Scalar::zero(q), Scalar::zero(q), Scalar::zero(q),
                                         Scalar::zero(q));
    for (const auto& y : zerof.y) CHECK(y.is_zero());

    // the family solves both linear constraint sets identically; the
    // residual closed-form condition 3(beta - delta) = 0 is tracelessness
    for (int iter = 0; iter < 20; ++iter) {
        Scalar a = rng.scalar(q), b = rng.scalar(q), g = rng.scalar(q), d = rng.scalar(q);
        Prop321Checks ch = prop321_check(prop321_family(a, b, g, d), q);
        CHECK(ch.linear_x);
        CHECK(ch.linear_z);
        CHECK(ch.traceless == (b == d));
    }
    FieldSpec f3 = FieldSpec::prime_field(3);
    Rng r3(mix_seed(431, 3));
    for (int iter = 0; iter < 20; ++iter) {
        Prop321Checks ch = prop321_check(
            prop321_family(r3.scalar(f3), r3.scalar(f3), r3.scalar(f3), r3.scalar(f3)), f3);
        CHECK(ch.linear_x);
        CHECK(ch.linear_z);
        CHECK(ch.traceless);
    }
}

TEST_CASE("triple extension solutions") {
    FieldSpec q = FieldSpec::rationals();
    Scalar one = Scalar::one(q);

    Prop321Solution gen = prop321_solution(Prop321Case::Generic, q, one);
    CHECK(gen.kind == Prop321Case::Generic);
    CHECK(prop321_check(gen.family, q).all());
    CHECK(gen.x1_one_regular);
    REQUIRE(gen.big.size() == 3);
    NilTuple big(gen.big);  // commuting nilpotent 6x6 triple
    REQUIRE(big.n() == 6);
    // the default omega is 2/3
    Prop321Solution gen23 = prop321_solution(Prop321Case::Generic, q, one, Scalar::parse(q, "2/3"));
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(gen23.big[i] == gen.big[i]);
    // parameters follow (beta w, beta, -(3/2) beta w^2, beta)
    Scalar w = Scalar::parse(q, "2/3");
    Prop321Family expect = prop321_family(w, one, -(Scalar::parse(q, "3/2") * w * w), one);
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(gen.family.y[i] == expect.y[i]);

    // omega = 0 still satisfies the constraints
    Prop321Solution gen0 = prop321_solution(Prop321Case::Generic, q, one, Scalar::zero(q));
    CHECK(prop321_check(gen0.family, q).all());

    // all omega roots work over primes away from 2 and 3
    for (std::uint32_t p : {5u, 7u, 11u}) {
        FieldSpec f = FieldSpec::prime_field(p);
        for (const Scalar& wp : find_omega(f)) {
            Prop321Solution s = prop321_solution(Prop321Case::Generic, f, Scalar::one(f), wp);
            REQUIRE(prop321_check(s.family, f).all());
            REQUIRE(NilTuple(s.big).n() == 6);
            if (!wp.is_zero()) REQUIRE(s.x1_one_regular);
        }
    }

    FieldSpec f2 = FieldSpec::prime_field(2);
    FieldSpec f3 = FieldSpec::prime_field(3);
    Prop321Solution c2 = prop321_solution(Prop321Case::Char2, f2, Scalar::one(f2));
    CHECK(prop321_check(c2.family, f2).all());
    // char 2 and 3 use the degenerate parameter line (0, beta, 0, beta)
    Prop321Family c2exp = prop321_family(Scalar::zero(f2), Scalar::one(f2), Scalar::zero(f2),
                                         Scalar::one(f2));
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(c2.family.y[i] == c2exp.y[i]);
    for (const Scalar& b3 : {Scalar::one(f3), Scalar::of_int(f3, 2)}) {
        Prop321Solution c3 = prop321_solution(Prop321Case::Char3, f3, b3);
        CHECK(prop321_check(c3.family, f3).all());
        CHECK(NilTuple(c3.big).n() == 6);
    }

    CHECK_THROWS_AS(prop321_solution(Prop321Case::Generic, f2, Scalar::one(f2)),
                    CharacteristicMismatch);
    CHECK_THROWS_AS(prop321_solution(Prop321Case::Generic, f3, Scalar::one(f3)),
                    CharacteristicMismatch);
    CHECK_THROWS_AS(prop321_solution(Prop321Case::Char2, q, one), CharacteristicMismatch);
    CHECK_THROWS_AS(prop321_solution(Prop321Case::Char3, q, one), CharacteristicMismatch);
    CHECK_THROWS_AS(prop321_solution(Prop321Case::Char2, f3, Scalar::one(f3)),
                    CharacteristicMismatch);
    CHECK_THROWS_AS(prop321_solution(Prop321Case::Generic, q, one, one), OmegaNotRoot);
}

TEST_CASE("triple extension fibers over small primes") {
    using Tuple4 = std::array<std::uint32_t, 4>;

    auto fib2 = prop321_fiber_bruteforce(2);
    const std::vector<Tuple4> exp2 = {{0, 0, 0, 0}, {0, 1, 0, 1}};
    CHECK(fib2 == exp2);

    auto fib3 = prop321_fiber_bruteforce(3);
    CHECK(fib3.size() == 11);
    std::set<Tuple4> set3(fib3.begin(), fib3.end());
    for (const auto& t : fib3) {
        CHECK((t[0] * t[3]) % 3 == 0);
        CHECK((t[2] * t[3]) % 3 == 0);
        // solutions are closed under scalar scaling
        for (std::uint32_t c = 1; c < 3; ++c) {
            Tuple4 scaled = {t[0] * c % 3, t[1] * c % 3, t[2] * c % 3, t[3] * c % 3};
            CHECK(set3.count(scaled) == 1);
        }
    }

    auto fib5 = prop321_fiber_bruteforce(5);
    std::vector<Tuple4> exp5;
    for (std::uint32_t b = 0; b < 5; ++b) exp5.push_back({0, b, 0, b});
    for (std::uint32_t b = 1; b < 5; ++b) exp5.push_back({4 * b % 5, b, b, b});
    std::sort(exp5.begin(), exp5.end());
    CHECK(fib5 == exp5);

    // independent completeness check over F_2 and F_3: straight enumeration
    // with the defining filter
    for (std::uint64_t p : {2ull, 3ull}) {
        FieldSpec f = FieldSpec::prime_field(p);
        std::vector<Tuple4> expect;
        for (std::uint32_t a = 0; a < p; ++a)
            for (std::uint32_t b = 0; b < p; ++b)
                for (std::uint32_t g = 0; g < p; ++g)
                    for (std::uint32_t d = 0; d < p; ++d) {
                        Scalar bs = Scalar::from_residue(f, b), ds = Scalar::from_residue(f, d);
                        if (!(Scalar::of_int(f, 3) * (bs - ds)).is_zero()) continue;
                        Prop321Checks ch = prop321_check(
                            prop321_family(Scalar::from_residue(f, a), bs,
                                           Scalar::from_residue(f, g), ds),
                            f);
                        if (ch.commute && ch.nilpotent) expect.push_back({a, b, g, d});
                    }
        CHECK(prop321_fiber_bruteforce(p) == expect);
    }

    // membership in the fiber implies the full constraint set
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
        FieldSpec f = FieldSpec::prime_field(p);
        for (const auto& t : prop321_fiber_bruteforce(p)) {
            Prop321Checks ch = prop321_check(
                prop321_family(Scalar::from_residue(f, t[0]), Scalar::from_residue(f, t[1]),
                               Scalar::from_residue(f, t[2]), Scalar::from_residue(f, t[3])),
                f);
            REQUIRE(ch.all());
        }
    }

    CHECK_THROWS_AS(prop321_fiber_bruteforce(13), PrimeTooLarge);
    CHECK_THROWS_AS(prop321_fiber_bruteforce(4), NotPrime);
}
