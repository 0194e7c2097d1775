#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "exanlab/kodaira.hpp"

using namespace exanlab;
using namespace exanlab::testing;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime_field(2);

LeftModule quotient_by_x(const Field& f) { // A/(x) over the dual numbers
    LeftModule m;
    m.dim = 1;
    m.action.push_back(Matrix::identity(f, 1));
    m.action.push_back(Matrix(f, 1, 1));
    return m;
}

bool witness_solvable(const Algebra& a, const LeftModule& m, const Matrix& delta) {
    // nu(am) = a nu(m) + delta(a) m as a linear system in nu
    const std::size_t n = a.dim, q = m.dim;
    Matrix system(a.field, n * q * q, q * q);
    Vector rhs(a.field, n * q * q);
    for (std::size_t t = 0; t < n; ++t) {
        const Matrix target = m.action_of(delta.column(t));
        const Matrix& act = m.action[t];
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t s = 0; s < q; ++s) {
                const std::size_t eq = t * q * q + r * q + s;
                rhs[eq] = target.at(r, s);
                for (std::size_t u = 0; u < q; ++u) {
                    system.at(eq, r * q + u) += act.at(u, s);
                    system.at(eq, u * q + s) -= act.at(r, u);
                }
            }
    }
    return solve(system, rhs).has_value();
}

} // namespace

TEST_CASE("the regular module has vanishing Kodaira-Spencer map") {
    for (std::size_t deg : {std::size_t{2}, std::size_t{3}}) {
        const Algebra a = truncated_polynomial(Q, deg);
        const KSReport r = ks_map(a, regular_left_module(a));
        CHECK(r.dim_identity);
        CHECK(r.f_kills_d0);
        CHECK(r.g.is_zero());
        CHECK(r.vm_basis.size() == r.dim_der); // V_M = Der
        // each witness satisfies the Leibniz identity (checked in ks_map,
        // re-checked here against the defining formula)
        for (std::size_t i = 0; i < r.vm_basis.size(); ++i)
            for (std::size_t t = 0; t < a.dim; ++t) {
                const Matrix lhs = r.witnesses[i] * a.left_mult(Vector::unit(Q, a.dim, t)) -
                                   a.left_mult(Vector::unit(Q, a.dim, t)) * r.witnesses[i];
                CHECK(lhs == a.left_mult(r.vm_basis[i].column(t)));
            }
    }
}

TEST_CASE("the worked instance: k over the dual numbers") {
    const Algebra a = dual_numbers(Q);
    const KSReport r = ks_map(a, quotient_by_x(Q));
    CHECK(r.dim_d1 == 3);
    CHECK(r.dim_der == 1);
    CHECK(r.dim_ext1 == 1);
    CHECK(r.vm_basis.size() == 1); // delta(x) = x acts as 0 on M, so g = 0
    CHECK(r.f_kills_d0);
    CHECK(r.dim_identity);
}

TEST_CASE("a genuinely obstructed derivation in characteristic 2") {
    // over F_2, Der(F2[x]/(x^2)) is two-dimensional: delta(x) = 1 is allowed,
    // and it cannot be witnessed on M = A/(x): nu(x m) = x nu(m) + m fails
    const Algebra a = dual_numbers(F2);
    const LeftModule m = quotient_by_x(F2);
    const KSReport r = ks_map(a, m);
    CHECK(r.dim_der == 2);
    CHECK(r.vm_basis.size() == 1);
    CHECK(r.dim_ext1 == 1);
    CHECK(!r.g.is_zero());

    // Lemma lr2 both ways: members of V_M have witnesses, non-members do not
    for (const Matrix& delta : r.vm_basis) CHECK(witness_solvable(a, m, delta));
    Matrix bad(F2, 2, 2);
    bad.at(0, 1) = Scalar::one(F2); // delta(x) = 1
    CHECK(!witness_solvable(a, m, bad));

    // the surviving kernel vector is delta(x) = x (up to scale)
    CHECK(r.vm_basis[0].at(0, 1).is_zero());
    CHECK(!r.vm_basis[0].at(1, 1).is_zero());
}

TEST_CASE("bracket closure") {
    SUBCASE("regular modules close with exact commutator witnesses") {
        const Algebra a = truncated_polynomial(Q, 3);
        const KSReport r = ks_map(a, regular_left_module(a));
        const BracketVerdict v = bracket_closure(a, regular_left_module(a), r);
        CHECK(v.closed);
        CHECK(v.witnesses_ok);
    }
    SUBCASE("the fixed instance Q[x]/(x^3) with M = A/(x^2)") {
        const Algebra a = truncated_polynomial(Q, 3);
        LeftModule m;
        m.dim = 2;
        Matrix x_act(Q, 2, 2);
        x_act.at(1, 0) = Scalar::one(Q); // x.1 = x, x.x = 0
        m.action.push_back(Matrix::identity(Q, 2));
        m.action.push_back(x_act);
        m.action.push_back(x_act * x_act);
        REQUIRE(validate_left_module(a, m).ok());
        const KSReport r = ks_map(a, m);
        const BracketVerdict v = bracket_closure(a, m, r);
        CHECK(v.closed);
        CHECK(v.witnesses_ok);
    }
    SUBCASE("non-commutative algebras are refused") {
        const Algebra a = matrix_algebra2(Q);
        const KSReport r = ks_map(a, regular_left_module(a));
        CHECK_THROWS_AS(bracket_closure(a, regular_left_module(a), r), MathDomainError);
    }
    SUBCASE("stale reports are refused") {
        const Algebra a = dual_numbers(Q);
        const KSReport r = ks_map(a, regular_left_module(a));
        CHECK_THROWS_AS(bracket_closure(a, quotient_by_x(Q), r), InputError);
    }
}

TEST_CASE("the twisted module structure") {
    SUBCASE("M = A: everything verifies and the sequence splits") {
        const Algebra a = truncated_polynomial(Q, 3);
        const LeftModule m = regular_left_module(a);
        const TwistCheck t = twist_module_check(a, m, ks_map(a, m));
        CHECK(t.vm_a_closed);
        CHECK(t.l_a_linear);
        CHECK(t.l_law);
        CHECK(t.twisted_associative);
        CHECK(t.lr3_exists);
        CHECK(t.splitting_exists);
        REQUIRE(t.splitting.size() == ks_map(a, m).vm_basis.size());
    }
    SUBCASE("the hand-solved one-dimensional instance") {
        const Algebra a = dual_numbers(Q);
        const LeftModule m = quotient_by_x(Q);
        const KSReport r = ks_map(a, m);
        REQUIRE(r.vm_basis.size() == 1);
        const TwistCheck t = twist_module_check(a, m, r);
        CHECK(t.vm_a_closed);
        CHECK(t.l_a_linear);
        CHECK(t.l_law);
        CHECK(t.twisted_associative);
        CHECK(t.lr3_exists);
        CHECK(t.splitting_exists);
    }
    SUBCASE("V_M = 0 is vacuous") {
        const Algebra a = truncated_polynomial(Q, 1);
        const LeftModule m = regular_left_module(a);
        const TwistCheck t = twist_module_check(a, m, ks_map(a, m));
        CHECK(t.lr3_exists);
        CHECK(t.splitting_exists);
    }
    SUBCASE("random commutative instances satisfy every theorem-backed flag") {
        Rng rng(59);
        for (int iter = 0; iter < 8; ++iter) {
            const Field f = iter % 2 ? Q : Field::prime_field(5);
            const Algebra a = random_algebra(rng, f, 3, /*commutative_only=*/true);
            const LeftModule m = random_left_module(rng, a);
            const KSReport r = ks_map(a, m);
            CHECK(r.dim_identity);
            CHECK(r.f_kills_d0);
            const BracketVerdict bv = bracket_closure(a, m, r);
            CHECK(bv.closed);
            CHECK(bv.witnesses_ok);
            const TwistCheck t = twist_module_check(a, m, r);
            CHECK(t.vm_a_closed);
            CHECK(t.l_a_linear);
            CHECK(t.l_law);
            CHECK(t.twisted_associative);
            CHECK(t.lr3_exists);
            // splitting_exists is a genuine verdict, not a theorem; no assertion
        }
    }
}

TEST_CASE("ks_map dimensions behave on non-commutative algebras too") {
    const Algebra a = upper_triangular2(Q);
    const KSReport r = ks_map(a, regular_left_module(a));
    CHECK(r.dim_identity);
    CHECK(r.f_kills_d0);
}
