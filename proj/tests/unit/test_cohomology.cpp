#include "support/generators.hpp"

#include "rbx/cohomology.hpp"
#include "rbx/errors.hpp"

#include <doctest.h>

using namespace rbx;
using testing::Rng;

namespace {

Representation one_dim(const Field& f, long t, long s, long psi) {
    return Representation{RBLieAlgebra{LieAlgebra(f, 1), Matrix::scalar(f, 1, t)}, 1, {Matrix::scalar(f, 1, psi)},
                          Matrix::scalar(f, 1, s), std::nullopt};
}

Vector e(const Representation& r, std::size_t i) { return unit_vector(r.field(), r.gdim(), i); }

} // namespace

TEST_CASE("increasing tuples") {
    auto t = increasing_tuples(3, 2);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == Tuple{0, 1});
    CHECK(t[1] == Tuple{0, 2});
    CHECK(t[2] == Tuple{1, 2});
    CHECK(increasing_tuples(2, 0).size() == 1);
    CHECK(increasing_tuples(1, 2).empty());
}

TEST_CASE("antisymmetric evaluation and flattening") {
    Rng rng(31);
    const Field q = Field::rationals();
    Representation r = testing::random_module(rng, q, 3, 2);
    r.base = testing::random_rb_algebra(rng, q, 1);
    r.base = RBLieAlgebra{LieAlgebra(q, 3), Matrix(q, 3, 3)};
    r.action.assign(3, Matrix(q, r.hdim, r.hdim));
    Cochain c = testing::random_cochain(rng, r, 3);
    const Vector v = c.eval_basis({0, 1, 2});
    CHECK(c.eval_basis({1, 0, 2}) == Scalar(q, -1L) * v);
    CHECK(c.eval_basis({2, 0, 1}) == v);
    CHECK(is_zero(c.eval_basis({0, 0, 2})));
    CHECK(Cochain::unflatten(q, 3, r.hdim, 3, c.flatten()) == c);
    RBCochain rc = testing::random_rb_cochain(rng, r, 2);
    CHECK(unflatten_rb_cochain(r, 2, rc.flatten()) == rc);
    // Multilinear evaluation agrees with expanding by hand in degree 2.
    Cochain c2 = testing::random_cochain(rng, r, 2);
    Vector x = rng.vector(q, 3);
    Vector y = rng.vector(q, 3);
    Vector expect = zero_vector(q, r.hdim);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            expect += (x[i] * y[j]) * c2.eval_basis({i, j});
        }
    }
    CHECK(c2.eval({x, y}) == expect);
}

TEST_CASE("low-degree differentials match direct formulas") {
    Rng rng(37);
    for (const Field& f : {Field::rationals(), Field::prime(5)}) {
        for (int k = 0; k < 40; ++k) {
            Representation r = testing::random_module(rng, f, 3, 3);
            const Matrix& t = r.base.op;
            const LieAlgebra& g = r.base.lie;
            Cochain h = testing::random_cochain(rng, r, 0);
            Cochain d0 = ce_differential(r, h);
            Cochain f1 = testing::random_cochain(rng, r, 1);
            Cochain d1 = ce_differential(r, f1);
            Cochain p1 = rb_twisted_differential(r, f1);
            const Matrix fm = f1.as_matrix();
            for (std::size_t i = 0; i < r.gdim(); ++i) {
                CHECK(d0.eval_basis({i}) == r.action[i].apply(h.value(0)));
                for (std::size_t j = 0; j < r.gdim(); ++j) {
                    Vector expect = r.action[i].apply(fm.column(j)) - r.action[j].apply(fm.column(i)) -
                                    fm.apply(g.bracket_basis(i, j));
                    CHECK(d1.eval_basis({i, j}) == expect);
                    Matrix rho_i = r.psi(t.column(i)) - r.s_op * r.action[i];
                    Matrix rho_j = r.psi(t.column(j)) - r.s_op * r.action[j];
                    Vector bt = g.bracket(t.column(i), e(r, j)) + g.bracket(e(r, i), t.column(j));
                    CHECK(p1.eval_basis({i, j}) == rho_i.apply(fm.column(j)) - rho_j.apply(fm.column(i)) - fm.apply(bt));
                }
            }
            RBCochain l1 = rbl_differential(r, RBCochain{f1, std::nullopt});
            CHECK(l1.f == d1);
            CHECK(l1.theta->as_matrix() == r.s_op * fm - fm * t);
        }
    }
}

TEST_CASE("differential examples") {
    const Field q = Field::rationals();
    Representation r = one_dim(q, 0, 0, 1);
    Cochain h(q, 1, 1, 0);
    h.set_value(0, {Scalar(q, 1)});
    CHECK(ce_differential(r, h).value(0) == Vector{Scalar(q, 1)});
    Cochain f1(q, 1, 1, 1);
    f1.set_value(0, {Scalar(q, 3)});
    CHECK(rb_twisted_differential(r, f1).tuples().empty());
    RBCochain out = rbl_differential(one_dim(q, 0, 0, 0), RBCochain{f1, std::nullopt});
    CHECK(out.is_zero());
    CHECK_THROWS_AS(rbl_differential(r, RBCochain{f1, f1}), DimensionMismatch);
}

TEST_CASE("differentials square to zero") {
    Rng rng(41);
    for (const Field& f : {Field::rationals(), Field::prime(5)}) {
        for (int k = 0; k < 40; ++k) {
            Representation r = testing::random_module(rng, f, 3, 3);
            for (std::size_t n = 0; n + 2 <= r.gdim() + 1; ++n) {
                Cochain c = testing::random_cochain(rng, r, n);
                CHECK(ce_differential(r, ce_differential(r, c)).is_zero());
                CHECK(rb_twisted_differential(r, rb_twisted_differential(r, c)).is_zero());
            }
            for (std::size_t n = 1; n <= 2; ++n) {
                RBCochain c = testing::random_rb_cochain(rng, r, n);
                CHECK(rbl_differential(r, rbl_differential(r, c)).is_zero());
            }
        }
    }
}

TEST_CASE("second cohomology examples") {
    const Field q = Field::rationals();
    SecondCohomology z = second_cohomology(one_dim(q, 0, 0, 0));
    CHECK(z.zdim == 1);
    CHECK(z.bdim == 0);
    CHECK(z.hdim == 1);
    SecondCohomology s = second_cohomology(one_dim(q, 0, 1, 0));
    CHECK(s.zdim == 1);
    CHECK(s.bdim == 1);
    CHECK(s.hdim == 0);
    Representation nab = adjoint_representation(RBLieAlgebra{testing::n2_algebra(q), Matrix(q, 2, 2)});
    CHECK_THROWS_AS(second_cohomology(nab), InvalidArgument);
}

TEST_CASE("second cohomology properties") {
    Rng rng(43);
    for (const Field& f : {Field::rationals(), Field::prime(3)}) {
        for (int k = 0; k < 30; ++k) {
            Representation r = testing::random_module(rng, f, 3, 2);
            SecondCohomology h2 = second_cohomology(r);
            CHECK(h2.hdim == h2.zdim - h2.bdim);
            CHECK(h2.complement_reps.size() == h2.hdim);
            for (const auto& rep : h2.complement_reps) {
                CHECK(rbl_differential(r, rep).is_zero());
            }
            const std::size_t hom = r.gdim() * r.hdim;
            CHECK(h2.bdim == hom - derivation_space(r).size());
            CohomologyDims d2 = cohomology_dims(r, 2);
            CHECK(d2.zdim == h2.zdim);
            CHECK(d2.bdim == h2.bdim);
            CohomologyDims d1 = cohomology_dims(r, 1);
            CHECK(d1.hdim == derivation_space(r).size());
            CHECK(d1.bdim == 0);
            CohomologyDims d3 = cohomology_dims(r, 3);
            CHECK(d3.bdim == rb_cochain_size(r, 2) - h2.zdim);
            // A random cocycle plus a coboundary keeps its coordinates.
            RBCochain z = zero_rb_cochain(r, 2);
            Vector flat = zero_vector(f, rb_cochain_size(r, 2));
            for (const auto& c : h2.cocycle_basis) {
                flat += rng.scalar(f) * c.flatten();
            }
            z = unflatten_rb_cochain(r, 2, flat);
            auto a = cohomology_coordinates(r, h2, z);
            REQUIRE(a.has_value());
            RBCochain b = rbl_differential(r, testing::random_rb_cochain(rng, r, 1));
            auto a2 = cohomology_coordinates(r, h2, unflatten_rb_cochain(r, 2, flat + b.flatten()));
            REQUIRE(a2.has_value());
            CHECK(*a == *a2);
            CHECK(is_zero(*cohomology_coordinates(r, h2, b)));
        }
    }
}

TEST_CASE("derivation space") {
    const Field q = Field::rationals();
    CHECK(derivation_space(one_dim(q, 0, 0, 0)).size() == 1);
    CHECK(derivation_space(one_dim(q, 0, 1, 0)).empty());
    CHECK(derivation_space(one_dim(Field::prime(2), 0, 0, 0)).size() == 1);
    Rng rng(47);
    for (int k = 0; k < 30; ++k) {
        Representation r = testing::random_module(rng, Field::prime(5), 3, 3);
        for (const auto& d : derivation_space(r)) {
            CHECK(r.s_op * d == d * r.base.op);
            for (std::size_t i = 0; i < r.gdim(); ++i) {
                for (std::size_t j = 0; j < r.gdim(); ++j) {
                    CHECK(d.apply(r.base.lie.bracket_basis(i, j)) ==
                          r.action[i].apply(d.column(j)) - r.action[j].apply(d.column(i)));
                }
            }
        }
    }
}
