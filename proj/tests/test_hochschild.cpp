#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace exanlab;
using namespace exanlab::testing;

namespace {

const Field Q = Field::rationals();

Cochain random_cochain(Rng& rng, const Algebra& a, const Bimodule& im, int degree) {
    Cochain c = zero_cochain(a, im, degree);
    for (std::size_t r = 0; r < c.mat.rows(); ++r)
        for (std::size_t col = 0; col < c.mat.cols(); ++col) c.mat.at(r, col) = rng.scalar(a.field);
    return c;
}

} // namespace

TEST_CASE("degree-0 differential is the commutator") {
    const Algebra a = dual_numbers(Q);

    SUBCASE("symmetric bimodule kills d^0") {
        const Bimodule im = regular_bimodule(a); // commutative, so symmetric
        Cochain u = zero_cochain(a, im, 0);
        u.mat.at(1, 0) = Scalar::from_int(Q, 5);
        CHECK(differential(a, im, u).mat.is_zero());
    }
    SUBCASE("asymmetric actions do not") {
        const Algebra t2 = upper_triangular2(Q);
        const Bimodule im = regular_bimodule(t2);
        Cochain u = zero_cochain(t2, im, 0);
        u.mat.at(1, 0) = Scalar::one(Q); // e12 is not central
        CHECK(!differential(t2, im, u).mat.is_zero());
    }
}

TEST_CASE("the worked degree-1 example on dual numbers") {
    // phi(1) = 0, phi(eps) = 1 gives d(phi)(eps x eps) = eps 1 - phi(0) + 1 eps = 2 eps
    const Algebra a = dual_numbers(Q);
    const Bimodule im = regular_bimodule(a);
    Cochain phi = zero_cochain(a, im, 1);
    phi.mat.at(0, 1) = Scalar::one(Q);
    const Cochain d = differential(a, im, phi);
    CHECK(d.degree == 2);
    const Vector at_ee = d.mat.column(1 * 2 + 1);
    CHECK(at_ee[0] == Scalar::zero(Q));
    CHECK(at_ee[1] == Scalar::from_int(Q, 2));
    // and d(phi)(1 x 1) = phi(1) = 0, d(phi)(1 x eps) = phi(1) eps = 0 ... as columns
    CHECK(d.mat.column(0).is_zero());
}

TEST_CASE("d . d = 0 on random cochains and on full bases") {
    Rng rng(101);
    for (int iter = 0; iter < 12; ++iter) {
        const Field f = iter % 2 ? Q : Field::prime_field(5);
        const Algebra a = random_algebra(rng, f, 3);
        const Bimodule im = random_bimodule(rng, a);
        for (int p = 0; p <= 1; ++p) {
            const Cochain c = random_cochain(rng, a, im, p);
            CHECK(differential(a, im, differential(a, im, c)).mat.is_zero());
        }
        // operator route: the composite matrix vanishes identically
        CHECK((differential_matrix(a, im, 1) * differential_matrix(a, im, 0)).is_zero());
        CHECK((differential_matrix(a, im, 2) * differential_matrix(a, im, 1)).is_zero());
    }
}

TEST_CASE("operator matrix agrees with direct evaluation") {
    Rng rng(131);
    const Algebra a = random_algebra(rng, Field::prime_field(5), 3);
    const Bimodule im = random_bimodule(rng, a);
    for (int p = 0; p <= 2; ++p) {
        const Matrix dp = differential_matrix(a, im, p);
        const Cochain c = random_cochain(rng, a, im, p);
        CHECK(dp * cochain_vec(c) == cochain_vec(differential(a, im, c)));
    }
}

TEST_CASE("cochain space dimensions and degree bounds") {
    const Algebra a = truncated_polynomial(Q, 3);
    const Bimodule im = regular_bimodule(a);
    for (int p = 0; p <= 3; ++p)
        CHECK(zero_cochain(a, im, p).mat.cols() * im.dim == im.dim * static_cast<std::size_t>(std::pow(3, p)));
    Cochain c3 = zero_cochain(a, im, 3);
    CHECK_THROWS_AS(differential(a, im, c3), InputError);
    CHECK_THROWS_AS(cohomology(a, im, 3), InputError);
}

TEST_CASE("cohomology of the reference algebras") {
    SUBCASE("HH^1(Q, Q) = 0") {
        const Algebra a = truncated_polynomial(Q, 1);
        CHECK(cohomology(a, regular_bimodule(a), 1).dim == 0);
    }
    SUBCASE("dual numbers over Q: HH^1 = HH^2 = 1") {
        const Algebra a = dual_numbers(Q);
        const Bimodule im = regular_bimodule(a);
        const Cohomology h1 = cohomology(a, im, 1);
        const Cohomology h2 = cohomology(a, im, 2);
        CHECK(h1.dim == 1);
        CHECK(h2.dim == 1);
        // independently verified rank bookkeeping on the explicit matrices:
        // C^1 = 4, C^2 = 8, C^3 = 16; ker d^1 = 1 (derivations) + 0 trivial
        CHECK(h1.kernel_dim == 1);
        CHECK(h1.image_dim == 0);  // commutative regular bimodule: d^0 = 0
        CHECK(h2.kernel_dim == 4);
        CHECK(h2.image_dim == 3);
    }
    SUBCASE("M_2(Q) is separable: HH^1 = HH^2 = 0") {
        const Algebra a = matrix_algebra2(Q);
        const Bimodule im = regular_bimodule(a);
        CHECK(cohomology(a, im, 1).dim == 0);
        CHECK(cohomology(a, im, 2).dim == 0);
    }
    SUBCASE("HH^0(A, A) = dim A for commutative A") {
        for (std::size_t d = 1; d <= 4; ++d) {
            const Algebra a = truncated_polynomial(Q, d);
            CHECK(cohomology(a, regular_bimodule(a), 0).dim == d);
        }
    }
    SUBCASE("representatives are cocycles outside the coboundary span") {
        const Algebra a = dual_numbers(Q);
        const Bimodule im = regular_bimodule(a);
        const Cohomology h2 = cohomology(a, im, 2);
        const Matrix d2 = differential_matrix(a, im, 2);
        const Matrix d1 = differential_matrix(a, im, 1);
        for (const Cochain& rep : h2.representatives) {
            CHECK((d2 * cochain_vec(rep)).is_zero());
            CHECK(!solve(d1, cochain_vec(rep)).has_value());
        }
    }
}

TEST_CASE("cohomology dimensions are basis invariants") {
    Rng rng(77);
    for (int iter = 0; iter < 6; ++iter) {
        const Field f = iter % 2 ? Q : Field::prime_field(3);
        const Algebra a = random_algebra(rng, f, 3);
        const Bimodule im = regular_bimodule(a);

        // conjugate by a random permutation of the A-basis
        Matrix perm(f, a.dim, a.dim);
        std::vector<std::size_t> order(a.dim);
        for (std::size_t i = 0; i < a.dim; ++i) order[i] = i;
        for (std::size_t i = a.dim; i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
        for (std::size_t i = 0; i < a.dim; ++i) perm.at(order[i], i) = Scalar::one(f);

        const Algebra b = change_basis(a, perm);
        const Bimodule imb = change_basis(im, perm, Matrix::identity(f, im.dim));
        REQUIRE(validate_bimodule(b, imb).ok());
        for (int p = 0; p <= 2; ++p)
            CHECK(cohomology(a, im, p).dim == cohomology(b, imb, p).dim);
    }
}

TEST_CASE("the cochain-space guard fires on oversized inputs") {
    Algebra big;
    big.field = Q;
    big.dim = 101; // 101^3 > 10^6; the guard must fire before any allocation
    Bimodule im;
    im.dim = 1;
    CHECK_THROWS_AS(cochain_cols(big, im, 3), SizeGuardError);
}
