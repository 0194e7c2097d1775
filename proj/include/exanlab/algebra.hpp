#pragma once

#include <string>
#include <vector>

#include "exanlab/linalg.hpp"

namespace exanlab {

/// Finite-dimensional associative unital algebra over a fixed basis.
/// mul[i*dim + j] holds the coefficient vector of e_i * e_j, so
/// mul[i][j][k] = coefficient of e_k in e_i e_j. The unit is an arbitrary
/// coefficient vector, not necessarily a basis element.
struct Algebra {
    Field field = Field::rationals();
    std::size_t dim = 0;
    std::vector<Vector> mul;   // dim*dim vectors of length dim
    Vector unit{Field::rationals(), 0};
    std::vector<std::string> basis_names; // optional, empty or size dim

    const Vector& basis_product(std::size_t i, std::size_t j) const { return mul[i * dim + j]; }

    Vector multiply(const Vector& x, const Vector& y) const;
    /// Matrix of left multiplication by x.
    Matrix left_mult(const Vector& x) const;
    /// Matrix of right multiplication by x.
    Matrix right_mult(const Vector& x) const;

    bool is_commutative() const;
};

/// Left-and-right A-module: commuting unital left and right actions on k^dim.
/// left[i] is the matrix of e_i acting on the left, right[i] on the right.
struct Bimodule {
    std::size_t dim = 0;
    std::vector<Matrix> left;
    std::vector<Matrix> right;

    Matrix left_action(const Vector& x) const;
    Matrix right_action(const Vector& x) const;
};

struct LeftModule {
    std::size_t dim = 0;
    std::vector<Matrix> action;

    Matrix action_of(const Vector& x) const;
};

/// Accumulated verdicts of an axiom check; empty report means valid.
struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    void add(std::string v) { violations.push_back(std::move(v)); }
};

/// Checks every associativity triple (e_i e_j) e_k = e_i (e_j e_k) and both
/// unit identities on every basis element.
ValidationReport validate_algebra(const Algebra& a);

ValidationReport validate_bimodule(const Algebra& a, const Bimodule& im);
ValidationReport validate_left_module(const Algebra& a, const LeftModule& m);

/// Checks f is multiplicative on basis pairs and maps unit to unit.
ValidationReport validate_algebra_map(const Algebra& src, const Algebra& dst, const Matrix& f);

/// Basis of the center {z : z e_i = e_i z for all i}, as one kernel.
std::vector<Vector> center(const Algebra& a);

/// Basis of Der_k(A, I): linear maps d: A -> I (as dim(I) x dim(A) matrices)
/// with d(xy) = x d(y) + d(x) y.
std::vector<Matrix> derivations(const Algebra& a, const Bimodule& im);

/// Basis of the first-order differential operators D^1(A) inside End_k(A):
/// endomorphisms whose commutator with every left multiplication is again a
/// left multiplication.
std::vector<Matrix> diff_ops_1(const Algebra& a);

/// End_k(M) as an A-bimodule: (a.f)(m) = a.f(m), (f.a)(m) = f(a.m).
/// Validates the bimodule axioms; a failure signals an invalid module input.
Bimodule end_bimodule(const Algebra& a, const LeftModule& m);

/// A as a bimodule over itself via multiplication.
Bimodule regular_bimodule(const Algebra& a);
LeftModule regular_left_module(const Algebra& a);

/// Endomorphism f of M (dim q) written in the coordinates End_k(M) = k^{q*q},
/// index r*q + s for the elementary map e_s -> e_r.
Vector flatten_endo(const Matrix& f);
Matrix unflatten_endo(const Field& field, std::size_t q, const Vector& v);

/// The same algebra expressed on the new basis whose vectors are the columns
/// of `p` (in old coordinates); p must be invertible.
Algebra change_basis(const Algebra& a, const Matrix& p);

/// Bimodule transported along a base change of A (columns of a_change) and a
/// coordinate change of the module space (columns of i_change).
Bimodule change_basis(const Bimodule& im, const Matrix& a_change, const Matrix& i_change);
LeftModule change_basis(const LeftModule& m, const Matrix& a_change, const Matrix& m_change);

} // namespace exanlab
