#include "exanlab/algebra.hpp"

#include <sstream>

namespace exanlab {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}

} // namespace

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
    Vector r(field, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            r += basis_product(i, j).scaled(x[i] * y[j]);
        }
    }
    return r;
}

Matrix Algebra::left_mult(const Vector& x) const {
    Matrix m(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        m.set_column(j, multiply(x, Vector::unit(field, dim, j)));
    return m;
}

Matrix Algebra::right_mult(const Vector& x) const {
    Matrix m(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        m.set_column(j, multiply(Vector::unit(field, dim, j), x));
    return m;
}

bool Algebra::is_commutative() const {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (!(basis_product(i, j) == basis_product(j, i))) return false;
    return true;
}

Matrix Bimodule::left_action(const Vector& x) const {
    Matrix m(x.field(), dim, dim);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) m = m + left[i].scaled(x[i]);
    return m;
}

Matrix Bimodule::right_action(const Vector& x) const {
    Matrix m(x.field(), dim, dim);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) m = m + right[i].scaled(x[i]);
    return m;
}

Matrix LeftModule::action_of(const Vector& x) const {
    Matrix m(x.field(), dim, dim);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) m = m + action[i].scaled(x[i]);
    return m;
}

ValidationReport validate_algebra(const Algebra& a) {
    ValidationReport rep;
    if (a.mul.size() != a.dim * a.dim) {
        rep.add("structure tensor has wrong shape");
        return rep;
    }
    if (a.unit.size() != a.dim) {
        rep.add("unit vector has wrong length");
        return rep;
    }
    for (const auto& v : a.mul)
        if (v.size() != a.dim) {
            rep.add("structure tensor entry has wrong length");
            return rep;
        }

    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) {
                const Vector lhs = a.multiply(a.basis_product(i, j), Vector::unit(a.field, a.dim, k));
                const Vector rhs = a.multiply(Vector::unit(a.field, a.dim, i), a.basis_product(j, k));
                if (!(lhs == rhs))
                    rep.add("associativity fails at triple " + triple(i, j, k));
            }
    for (std::size_t i = 0; i < a.dim; ++i) {
        const Vector e = Vector::unit(a.field, a.dim, i);
        if (!(a.multiply(a.unit, e) == e)) rep.add("left unit fails at basis " + std::to_string(i));
        if (!(a.multiply(e, a.unit) == e)) rep.add("right unit fails at basis " + std::to_string(i));
    }
    return rep;
}

ValidationReport validate_bimodule(const Algebra& a, const Bimodule& im) {
    ValidationReport rep;
    if (im.left.size() != a.dim || im.right.size() != a.dim) {
        rep.add("bimodule action lists have wrong length");
        return rep;
    }
    for (std::size_t i = 0; i < a.dim; ++i)
        if (im.left[i].rows() != im.dim || im.left[i].cols() != im.dim ||
            im.right[i].rows() != im.dim || im.right[i].cols() != im.dim) {
            rep.add("bimodule action matrix has wrong shape");
            return rep;
        }

    const Matrix id = Matrix::identity(a.field, im.dim);
    if (!(im.left_action(a.unit) == id)) rep.add("left action of the unit is not the identity");
    if (!(im.right_action(a.unit) == id)) rep.add("right action of the unit is not the identity");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            if (!(im.left_action(a.basis_product(i, j)) == im.left[i] * im.left[j]))
                rep.add("left action not multiplicative at pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
            if (!(im.right_action(a.basis_product(i, j)) == im.right[j] * im.right[i]))
                rep.add("right action not anti-multiplicative at pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
            if (!(im.left[i] * im.right[j] == im.right[j] * im.left[i]))
                rep.add("left/right actions do not commute at pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
        }
    return rep;
}

ValidationReport validate_left_module(const Algebra& a, const LeftModule& m) {
    ValidationReport rep;
    if (m.action.size() != a.dim) {
        rep.add("module action list has wrong length");
        return rep;
    }
    for (std::size_t i = 0; i < a.dim; ++i)
        if (m.action[i].rows() != m.dim || m.action[i].cols() != m.dim) {
            rep.add("module action matrix has wrong shape");
            return rep;
        }
    if (!(m.action_of(a.unit) == Matrix::identity(a.field, m.dim)))
        rep.add("action of the unit is not the identity");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            if (!(m.action_of(a.basis_product(i, j)) == m.action[i] * m.action[j]))
                rep.add("action not multiplicative at pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
    return rep;
}

ValidationReport validate_algebra_map(const Algebra& src, const Algebra& dst, const Matrix& f) {
    ValidationReport rep;
    if (f.rows() != dst.dim || f.cols() != src.dim) {
        rep.add("map matrix has wrong shape");
        return rep;
    }
    if (!(f * src.unit == dst.unit)) rep.add("map is not unital");
    for (std::size_t i = 0; i < src.dim; ++i)
        for (std::size_t j = 0; j < src.dim; ++j) {
            const Vector lhs = f * src.basis_product(i, j);
            const Vector rhs = dst.multiply(f.column(i), f.column(j));
            if (!(lhs == rhs))
                rep.add("map not multiplicative at pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
        }
    return rep;
}

std::vector<Vector> center(const Algebra& a) {
    // stack the conditions z e_i - e_i z = 0 over all basis i
    Matrix conditions(a.field, a.dim * a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        const Vector e = Vector::unit(a.field, a.dim, i);
        const Matrix diff = a.right_mult(e) - a.left_mult(e); // z -> z e_i - e_i z
        for (std::size_t r = 0; r < a.dim; ++r)
            for (std::size_t c = 0; c < a.dim; ++c)
                conditions.at(i * a.dim + r, c) = diff.at(r, c);
    }
    return kernel_basis(conditions);
}

std::vector<Matrix> derivations(const Algebra& a, const Bimodule& im) {
    const std::size_t n = a.dim, m = im.dim;
    // unknowns: entries of d (m x n), flattened column-major (column j = d(e_j))
    Matrix conditions(a.field, n * n * m, m * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t block = (i * n + j) * m;
            // d(e_i e_j) - e_i d(e_j) - d(e_i) e_j = 0
            const Vector& prod = a.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!prod[k].is_zero())
                    for (std::size_t r = 0; r < m; ++r)
                        conditions.at(block + r, k * m + r) += prod[k];
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t s = 0; s < m; ++s) {
                    conditions.at(block + r, j * m + s) -= im.left[i].at(r, s);
                    conditions.at(block + r, i * m + s) -= im.right[j].at(r, s);
                }
        }
    std::vector<Matrix> basis;
    for (const Vector& v : kernel_basis(conditions)) {
        Matrix d(a.field, m, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < m; ++r) d.at(r, j) = v[j * m + r];
        basis.push_back(std::move(d));
    }
    return basis;
}

std::vector<Matrix> diff_ops_1(const Algebra& a) {
    const std::size_t n = a.dim;
    // unknowns: entries of the operator (n^2, column-major) followed by the
    // coefficients x_i of the required left multiplications (n per basis i)
    Matrix conditions(a.field, n * n * n, n * n + n * n);
    std::vector<Matrix> lmul;
    for (std::size_t i = 0; i < n; ++i) lmul.push_back(a.left_mult(Vector::unit(a.field, n, i)));

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t block = i * n * n;
        // op * L_i - L_i * op - sum_k x_{i,k} L_k = 0
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t eq = block + r * n + c;
                // (op * L_i)[r][c] = sum_t op[r][t] L_i[t][c]
                for (std::size_t t = 0; t < n; ++t)
                    conditions.at(eq, t * n + r) += lmul[i].at(t, c);
                // -(L_i * op)[r][c] = -sum_t L_i[r][t] op[t][c]
                for (std::size_t t = 0; t < n; ++t)
                    conditions.at(eq, c * n + t) -= lmul[i].at(r, t);
                // -sum_k x_{i,k} L_k[r][c]
                for (std::size_t k = 0; k < n; ++k)
                    conditions.at(eq, n * n + i * n + k) -= lmul[k].at(r, c);
            }
    }

    // the operator block of the kernel; the auxiliary coefficients are
    // determined by the operator (left multiplication is injective), so the
    // projection preserves dimension
    std::vector<Vector> projected;
    for (const Vector& v : kernel_basis(conditions)) {
        Vector op(a.field, n * n);
        for (std::size_t t = 0; t < n * n; ++t) op[t] = v[t];
        projected.push_back(std::move(op));
    }
    // deterministic echelon re-normalization of the projected basis
    Matrix flat(a.field, n * n, projected.size());
    for (std::size_t c = 0; c < projected.size(); ++c) flat.set_column(c, projected[c]);
    std::vector<Matrix> basis;
    for (const Vector& v : column_space_basis(flat)) {
        Matrix op(a.field, n, n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) op.at(r, c) = v[c * n + r];
        basis.push_back(std::move(op));
    }
    if (basis.size() != projected.size())
        throw InternalError("first-order operator projection lost rank");
    return basis;
}

Bimodule end_bimodule(const Algebra& a, const LeftModule& m) {
    const std::size_t q = m.dim;
    Bimodule b;
    b.dim = q * q;
    for (std::size_t i = 0; i < a.dim; ++i) {
        const Matrix& act = m.action[i];
        Matrix l(a.field, q * q, q * q), r(a.field, q * q, q * q);
        // index r*q+s: elementary endomorphism e_s -> e_r
        for (std::size_t row = 0; row < q; ++row)
            for (std::size_t s = 0; s < q; ++s)
                for (std::size_t t = 0; t < q; ++t) {
                    // (act . f)[row][s] = sum_t act[row][t] f[t][s]
                    l.at(row * q + s, t * q + s) = act.at(row, t);
                    // (f . act)[row][s] = sum_t f[row][t] act[t][s]
                    r.at(row * q + s, row * q + t) = act.at(t, s);
                }
        b.left.push_back(std::move(l));
        b.right.push_back(std::move(r));
    }
    const ValidationReport rep = validate_bimodule(a, b);
    if (!rep.ok())
        throw MathDomainError("End_k(M) failed bimodule axioms (invalid module input): " +
                              rep.violations.front());
    return b;
}

Bimodule regular_bimodule(const Algebra& a) {
    Bimodule b;
    b.dim = a.dim;
    for (std::size_t i = 0; i < a.dim; ++i) {
        const Vector e = Vector::unit(a.field, a.dim, i);
        b.left.push_back(a.left_mult(e));
        b.right.push_back(a.right_mult(e));
    }
    return b;
}

LeftModule regular_left_module(const Algebra& a) {
    LeftModule m;
    m.dim = a.dim;
    for (std::size_t i = 0; i < a.dim; ++i)
        m.action.push_back(a.left_mult(Vector::unit(a.field, a.dim, i)));
    return m;
}

Vector flatten_endo(const Matrix& f) {
    Vector v(f.field(), f.rows() * f.cols());
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t s = 0; s < f.cols(); ++s) v[r * f.cols() + s] = f.at(r, s);
    return v;
}

Matrix unflatten_endo(const Field& field, std::size_t q, const Vector& v) {
    Matrix f(field, q, q);
    for (std::size_t r = 0; r < q; ++r)
        for (std::size_t s = 0; s < q; ++s) f.at(r, s) = v[r * q + s];
    return f;
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
    const auto pinv = inverse(p);
    if (!pinv) throw InputError("basis change matrix is singular");
    Algebra b;
    b.field = a.field;
    b.dim = a.dim;
    b.unit = *pinv * a.unit;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            b.mul.push_back(*pinv * a.multiply(p.column(i), p.column(j)));
    return b;
}

Bimodule change_basis(const Bimodule& im, const Matrix& a_change, const Matrix& i_change) {
    const auto qinv = inverse(i_change);
    if (!qinv) throw InputError("basis change matrix is singular");
    Bimodule b;
    b.dim = im.dim;
    for (std::size_t j = 0; j < a_change.cols(); ++j) {
        b.left.push_back(*qinv * im.left_action(a_change.column(j)) * i_change);
        b.right.push_back(*qinv * im.right_action(a_change.column(j)) * i_change);
    }
    return b;
}

LeftModule change_basis(const LeftModule& m, const Matrix& a_change, const Matrix& m_change) {
    const auto qinv = inverse(m_change);
    if (!qinv) throw InputError("basis change matrix is singular");
    LeftModule r;
    r.dim = m.dim;
    for (std::size_t j = 0; j < a_change.cols(); ++j)
        r.action.push_back(*qinv * m.action_of(a_change.column(j)) * m_change);
    return r;
}

} // namespace exanlab
