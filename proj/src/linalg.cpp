#include "exanlab/linalg.hpp"

#include <algorithm>
#include <utility>

namespace exanlab {

Vector Vector::unit(const Field& f, std::size_t n, std::size_t i) {
    Vector v(f, n);
    v[i] = Scalar::one(f);
    return v;
}

Vector Vector::operator+(const Vector& o) const {
    if (size() != o.size()) throw InputError("vector size mismatch in +");
    Vector r(field_, size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = entries_[i] + o[i];
    return r;
}

Vector Vector::operator-(const Vector& o) const {
    if (size() != o.size()) throw InputError("vector size mismatch in -");
    Vector r(field_, size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = entries_[i] - o[i];
    return r;
}

Vector Vector::operator-() const {
    Vector r(field_, size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = -entries_[i];
    return r;
}

Vector Vector::scaled(const Scalar& c) const {
    Vector r(field_, size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = entries_[i] * c;
    return r;
}

bool Vector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(f) {
    if (rows != 0 && cols > kMaxEntries / rows)
        throw SizeGuardError("matrix of " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " entries exceeds the allocation cap");
    entries_.assign(rows * cols, Scalar::zero(f));
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw InputError("column length mismatch in from_columns");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix shape mismatch in *");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Vector Matrix::operator*(const Vector& v) const {
    if (cols_ != v.size()) throw InputError("matrix/vector shape mismatch in *");
    Vector r(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (!at(i, k).is_zero()) r[i] += at(i, k) * v[k];
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in +");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in -");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * c;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && entries_ == o.entries_;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Vector Matrix::row(std::size_t r) const {
    Vector v(field_, cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw InputError("column length mismatch in set_column");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::hstack(const Matrix& other) const {
    if (rows_ != other.rows_) throw InputError("row count mismatch in hstack");
    Matrix r(field_, rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) r.at(i, cols_ + j) = other.at(i, j);
    }
    return r;
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        // first nonzero entry at or below the current row
        std::size_t src = lead;
        while (src < r.rows() && r.at(src, col).is_zero()) ++src;
        if (src == r.rows()) continue;
        if (src != lead)
            for (std::size_t j = 0; j < r.cols(); ++j)
                std::swap(r.at(lead, j), r.at(src, j));
        const Scalar inv = r.at(lead, col).inverse();
        for (std::size_t j = 0; j < r.cols(); ++j) r.at(lead, j) = r.at(lead, j) * inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            const Scalar factor = r.at(i, col);
            for (std::size_t j = 0; j < r.cols(); ++j)
                r.at(i, j) = r.at(i, j) - factor * r.at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    return rref(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.field(), m.cols());
        v[f] = Scalar::one(m.field());
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.reduced.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> solve_all(const Matrix& m, const Matrix& rhs) {
    if (rhs.rows() != m.rows()) throw InputError("dimension mismatch in solve");
    const RrefResult rr = rref(m.hstack(rhs));
    // a pivot beyond the coefficient block means some column is inconsistent
    for (std::size_t p : rr.pivots)
        if (p >= m.cols()) return std::nullopt;
    Matrix x(m.field(), m.cols(), rhs.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            x.at(rr.pivots[i], j) = rr.reduced.at(i, m.cols() + j);
    return x;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    Matrix rhs(m.field(), m.rows(), 1);
    rhs.set_column(0, b);
    auto x = solve_all(m, rhs);
    if (!x) return std::nullopt;
    return x->column(0);
}

std::vector<Vector> column_space_basis(const Matrix& m) {
    const RrefResult rr = rref(m);
    std::vector<Vector> basis;
    basis.reserve(rr.pivots.size());
    for (std::size_t p : rr.pivots) basis.push_back(m.column(p));
    return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
    const RrefResult rr = rref(m.hstack(Matrix::identity(m.field(), m.rows())));
    if (rr.pivots.size() != m.rows() ||
        (m.rows() > 0 && rr.pivots.back() >= m.cols()))
        return std::nullopt;
    Matrix inv(m.field(), m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) inv.at(i, j) = rr.reduced.at(i, m.cols() + j);
    return inv;
}

QuotientBasis quotient_basis(const std::vector<Vector>& space, const std::vector<Vector>& subspace) {
    if (space.empty() && subspace.empty()) return {0, {}};
    const Field f = space.empty() ? subspace.front().field() : space.front().field();
    const std::size_t dim = space.empty() ? subspace.front().size() : space.front().size();
    for (const auto& v : space)
        if (v.size() != dim) throw InputError("inconsistent vector lengths in quotient");
    for (const auto& v : subspace)
        if (v.size() != dim) throw InputError("inconsistent vector lengths in quotient");

    const Matrix s = Matrix::from_columns(f, dim, space);
    const Matrix t = Matrix::from_columns(f, dim, subspace);
    const std::size_t rank_s = rank(s);
    if (rank(s.hstack(t)) != rank_s)
        throw MathDomainError("subspace is not contained in the span of the space");
    const std::size_t rank_t = rank(t);

    // greedily extend the subspace span by space vectors, in order
    std::vector<Vector> chosen;
    Matrix acc = t;
    std::size_t cur = rank_t;
    for (const auto& v : space) {
        if (chosen.size() == rank_s - rank_t) break;
        Matrix ext(f, dim, 1);
        ext.set_column(0, v);
        const Matrix trial = acc.hstack(ext);
        if (rank(trial) > cur) {
            chosen.push_back(v);
            acc = trial;
            ++cur;
        }
    }
    if (chosen.size() != rank_s - rank_t)
        throw InternalError("quotient representative extension failed");
    return {rank_s - rank_t, std::move(chosen)};
}

} // namespace exanlab
