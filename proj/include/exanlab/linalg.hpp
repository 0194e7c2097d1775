#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "exanlab/field.hpp"

namespace exanlab {

class Vector {
public:
    Vector(const Field& f, std::size_t n) : field_(f), entries_(n, Scalar::zero(f)) {}

    static Vector unit(const Field& f, std::size_t n, std::size_t i);

    const Field& field() const { return field_; }
    std::size_t size() const { return entries_.size(); }

    Scalar& operator[](std::size_t i) { return entries_[i]; }
    const Scalar& operator[](std::size_t i) const { return entries_[i]; }

    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector operator-() const;
    Vector scaled(const Scalar& c) const;
    Vector& operator+=(const Vector& o) { return *this = *this + o; }
    Vector& operator-=(const Vector& o) { return *this = *this - o; }

    bool operator==(const Vector& o) const { return field_ == o.field_ && entries_ == o.entries_; }
    bool is_zero() const;

private:
    Field field_;
    std::vector<Scalar> entries_;
};

/// Dense row-major matrix over one coefficient field. Immutable in spirit:
/// operations return fresh values, and all algorithms are deterministic
/// (first-nonzero pivoting in column order, leading entries scaled to 1),
/// so every derived basis is reproducible across runs and platforms.
class Matrix {
public:
    /// Generous allocation cap; the much tighter 10^6 cochain-space guard
    /// lives where cochain spaces are built.
    static constexpr std::size_t kMaxEntries = 100'000'000;

    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    bool operator==(const Matrix& o) const;

    Matrix transpose() const;
    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;
    void set_column(std::size_t c, const Vector& v);
    bool is_zero() const;

    /// [this | other], matching row counts.
    Matrix hstack(const Matrix& other) const;

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots; // pivot column indices, ascending
};

/// Unique reduced row-echelon form, Gauss-Jordan with exact arithmetic.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space in echelon-derived form: one vector per free
/// column, ordered by ascending free-column index.
std::vector<Vector> kernel_basis(const Matrix& m);

/// One solution of m x = b (echelon particular solution, free variables 0),
/// or nullopt when b is outside the column space.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Columnwise particular solutions of m X = rhs; nullopt if any column is
/// unsolvable. One elimination pass serves all right-hand sides.
std::optional<Matrix> solve_all(const Matrix& m, const Matrix& rhs);

/// Deterministic basis of the column space: the columns of m at the rref
/// pivot indices (original columns, not reduced ones).
std::vector<Vector> column_space_basis(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

struct QuotientBasis {
    std::size_t dim;
    std::vector<Vector> representatives;
};

/// Dimension of span(space)/span(subspace) plus representatives chosen from
/// `space` itself, in order, extending the subspace span. Throws if the
/// subspace is not contained in the span of `space`.
QuotientBasis quotient_basis(const std::vector<Vector>& space, const std::vector<Vector>& subspace);

} // namespace exanlab
