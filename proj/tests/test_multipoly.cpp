#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "nilcommute/multipoly.hpp"

using namespace nilcommute;
using testutil::random_poly_tuple;

namespace {

const std::vector<FieldSpec> kFields = {FieldSpec::rationals(), FieldSpec::prime_field(101),
                                        FieldSpec::prime_field(5)};

MultiPoly random_poly(Rng& rng, const FieldSpec& f, std::size_t nvars, std::size_t nterms,
                      std::uint32_t max_exp) {
    MultiPoly p(f, nvars);
    for (std::size_t t = 0; t < nterms; ++t) {
        MultiPoly::Exponents e(nvars, 0);
        for (auto& x : e) x = static_cast<std::uint32_t>(rng.below(max_exp + 1));
        p.add_term(e, rng.scalar(f));
    }
    return p;
}

std::vector<Scalar> random_point(Rng& rng, const FieldSpec& f, std::size_t nvars) {
    std::vector<Scalar> pt(nvars, Scalar::zero(f));
    for (auto& x : pt) x = rng.scalar(f);
    return pt;
}

}  // namespace

TEST_CASE("construction and normalization") {
    FieldSpec q = FieldSpec::rationals();
    MultiPoly p(q, 2);
    CHECK(p.is_zero());
    p.add_term({1, 0}, Scalar::of_int(q, 3));
    p.add_term({1, 0}, Scalar::of_int(q, -3));
    CHECK(p.is_zero());  // cancelled terms are dropped
    MultiPoly x = MultiPoly::variable(q, 2, 0);
    MultiPoly c = MultiPoly::constant(q, 2, Scalar::of_int(q, 5));
    CHECK((x * x - x * x).is_zero());
    CHECK(c.constant_term() == Scalar::of_int(q, 5));
    CHECK((x + c).constant_term() == Scalar::of_int(q, 5));
    CHECK(x.constant_term().is_zero());
}

TEST_CASE("ring identities and evaluation homomorphism") {
    for (const FieldSpec& f : kFields) {
        Rng rng(mix_seed(67, f.characteristic()));
        for (int iter = 0; iter < 100; ++iter) {
            std::size_t nv = 1 + rng.below(4);
            MultiPoly a = random_poly(rng, f, nv, 4, 3);
            MultiPoly b = random_poly(rng, f, nv, 4, 3);
            MultiPoly c = random_poly(rng, f, nv, 4, 3);
            REQUIRE((a + b) * c == a * c + b * c);
            REQUIRE(a * b == b * a);
            REQUIRE((a - a).is_zero());
            auto pt = random_point(rng, f, nv);
            REQUIRE((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
            REQUIRE((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
        }
    }
}

TEST_CASE("derivative satisfies the product rule term-wise") {
    for (const FieldSpec& f : kFields) {
        Rng rng(mix_seed(71, f.characteristic()));
        for (int iter = 0; iter < 100; ++iter) {
            std::size_t nv = 1 + rng.below(3);
            MultiPoly a = random_poly(rng, f, nv, 4, 4);
            MultiPoly b = random_poly(rng, f, nv, 4, 4);
            for (std::size_t v = 0; v < nv; ++v)
                REQUIRE((a * b).derivative(v) == a * b.derivative(v) + b * a.derivative(v));
        }
    }
    // exponents multiply into coefficients mod p: d/dx x^5 = 0 over F_5
    FieldSpec f5 = FieldSpec::prime_field(5);
    MultiPoly x5(f5, 1);
    x5.add_term({5}, Scalar::one(f5));
    CHECK(x5.derivative(0).is_zero());
    FieldSpec q = FieldSpec::rationals();
    MultiPoly xq(q, 1);
    xq.add_term({5}, Scalar::one(q));
    MultiPoly expect(q, 1);
    expect.add_term({4}, Scalar::of_int(q, 5));
    CHECK(xq.derivative(0) == expect);
}

TEST_CASE("jacobian matches per-variable formal derivatives") {
    for (const FieldSpec& f : kFields) {
        Rng rng(mix_seed(73, f.characteristic()));
        for (int iter = 0; iter < 50; ++iter) {
            std::size_t nv = 2 + rng.below(3);
            std::vector<MultiPoly> polys;
            for (int k = 0; k < 3; ++k) polys.push_back(random_poly(rng, f, nv, 4, 3));
            auto pt = random_point(rng, f, nv);
            auto res = poly_eval_jacobian(polys, pt);
            REQUIRE(res.values.size() == polys.size());
            REQUIRE(res.jacobian.rows() == polys.size());
            REQUIRE(res.jacobian.cols() == nv);
            for (std::size_t i = 0; i < polys.size(); ++i) {
                REQUIRE(res.values[i] == polys[i].eval(pt));
                for (std::size_t v = 0; v < nv; ++v)
                    REQUIRE(res.jacobian(i, v) == polys[i].derivative(v).eval(pt));
            }
        }
    }
}

TEST_CASE("matrix substitution is a ring homomorphism on commuting args") {
    for (const FieldSpec& f : kFields) {
        Rng rng(mix_seed(79, f.characteristic()));
        for (int iter = 0; iter < 40; ++iter) {
            std::size_t n = 2 + rng.below(4);
            NilTuple t = random_poly_tuple(rng, f, n, 2);
            std::vector<Matrix> args = t.mats();
            MultiPoly a = random_poly(rng, f, 2, 3, 3);
            MultiPoly b = random_poly(rng, f, 2, 3, 3);
            REQUIRE((a * b).eval_matrices(args) == a.eval_matrices(args) * b.eval_matrices(args));
            REQUIRE((a + b).eval_matrices(args) == a.eval_matrices(args) + b.eval_matrices(args));
        }
        // constants substitute to multiples of the identity
        MultiPoly c = MultiPoly::constant(f, 1, Scalar::of_int(f, 7));
        Matrix j2 = jordan_matrix(Partition({2}), f);
        CHECK(c.eval_matrices({j2}) == Matrix::identity(f, 2).scaled(Scalar::of_int(f, 7)));
    }
}
