#include "exanlab/jets.hpp"

namespace exanlab {

namespace {

// u x e as a vector in I tensor_k E coordinates
Vector pure_tensor(const Field& f, std::size_t q, const Vector& u, const Vector& e) {
    Vector v(f, u.size() * q);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < q; ++j)
            if (!e[j].is_zero()) v[i * q + j] = u[i] * e[j];
    }
    return v;
}

} // namespace

TensorOverA tensor_over_A(const Algebra& a, const Bimodule& im, const LeftModule& e) {
    const Field& f = a.field;
    const std::size_t m = im.dim, q = e.dim, n = a.dim;
    const std::size_t full = m * q;

    // relation (u_i . a_t) x e_j - u_i x (a_t . e_j) per basis triple
    std::vector<Vector> relations;
    relations.reserve(m * n * q);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t j = 0; j < q; ++j) {
                const Vector ui = Vector::unit(f, m, i);
                const Vector ej = Vector::unit(f, q, j);
                Vector rel = pure_tensor(f, q, im.right[t] * ui, ej);
                rel -= pure_tensor(f, q, ui, e.action[t] * ej);
                relations.push_back(std::move(rel));
            }
    const std::vector<Vector> rel_basis =
        column_space_basis(Matrix::from_columns(f, full, relations));

    std::vector<Vector> std_basis;
    for (std::size_t t = 0; t < full; ++t) std_basis.push_back(Vector::unit(f, full, t));
    const QuotientBasis qb = quotient_basis(std_basis, rel_basis);

    TensorOverA out;
    out.dim = qb.dim;
    Matrix basis_change(f, full, full);
    for (std::size_t t = 0; t < rel_basis.size(); ++t) basis_change.set_column(t, rel_basis[t]);
    for (std::size_t t = 0; t < qb.dim; ++t)
        basis_change.set_column(rel_basis.size() + t, qb.representatives[t]);
    const auto inv_change = inverse(basis_change);
    if (!inv_change) throw InternalError("tensor quotient basis is singular");

    out.projection = Matrix(f, qb.dim, full);
    for (std::size_t r = 0; r < qb.dim; ++r)
        for (std::size_t c = 0; c < full; ++c)
            out.projection.at(r, c) = inv_change->at(rel_basis.size() + r, c);
    out.representatives = Matrix(f, full, qb.dim);
    for (std::size_t t = 0; t < qb.dim; ++t)
        out.representatives.set_column(t, qb.representatives[t]);

    // the left action of A on I descends: (x u) a x e - (x u) x (a e) is again
    // a relation, so projection . (left x id) . representatives is well defined
    for (std::size_t t = 0; t < n; ++t) {
        Matrix lift(f, full, full);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t i2 = 0; i2 < m; ++i2) {
                const Scalar& coeff = im.left[t].at(i2, i);
                if (coeff.is_zero()) continue;
                for (std::size_t j = 0; j < q; ++j) lift.at(i2 * q + j, i * q + j) = coeff;
            }
        out.left_action.push_back(out.projection * lift * out.representatives);
        // well-definedness: the lift must preserve the relation span
        for (const Vector& rel : rel_basis) {
            const Vector moved = lift * rel;
            if (!solve(Matrix::from_columns(f, full, rel_basis), moved) && !moved.is_zero())
                throw InternalError("left action does not preserve the tensor relations");
        }
    }
    return out;
}

std::vector<Matrix> derivation_space(const Algebra& a, const Bimodule& im) {
    return derivations(a, im);
}

JetVerdict jet_action(const Algebra& a, const Bimodule& im, const LeftModule& e, const Cochain& c,
                      const Matrix& d) {
    const Field& f = a.field;
    const std::size_t m = im.dim, q = e.dim, n = a.dim;
    if (!is_cocycle(a, im, c).ok) throw MathDomainError("jet action requires a cocycle");
    {
        // d must be a derivation A -> I
        if (d.rows() != m || d.cols() != n) throw InputError("derivation matrix has wrong shape");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vector lhs = d * a.basis_product(i, j);
                const Vector rhs = im.left[i] * d.column(j) + im.right[j] * d.column(i);
                if (!(lhs == rhs)) throw MathDomainError("supplied map is not a derivation");
            }
    }

    JetVerdict out{JetModule{}, true, tensor_over_A(a, im, e)};
    const TensorOverA& tq = out.tensor;
    const std::size_t t = tq.dim;
    out.module.dim = t + q;
    out.module.derivation = d;

    // action of (u_i, 0): (w x e, f) -> (u_i x f, 0)
    for (std::size_t i = 0; i < m; ++i) {
        Matrix act(f, t + q, t + q);
        for (std::size_t j = 0; j < q; ++j) {
            const Vector img = tq.projection *
                pure_tensor(f, q, Vector::unit(f, m, i), Vector::unit(f, q, j));
            for (std::size_t r = 0; r < t; ++r) act.at(r, t + j) = img[r];
        }
        out.module.action.push_back(std::move(act));
    }
    // action of (0, e_x): (w x e, f) -> (x.(w x e) + d(x) x f, x f)
    for (std::size_t x = 0; x < n; ++x) {
        Matrix act(f, t + q, t + q);
        for (std::size_t r = 0; r < t; ++r)
            for (std::size_t s = 0; s < t; ++s) act.at(r, s) = tq.left_action[x].at(r, s);
        for (std::size_t j = 0; j < q; ++j) {
            const Vector img =
                tq.projection * pure_tensor(f, q, d.column(x), Vector::unit(f, q, j));
            for (std::size_t r = 0; r < t; ++r) act.at(r, t + j) = img[r];
        }
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t s = 0; s < q; ++s) act.at(t + r, t + s) = e.action[x].at(r, s);
        out.module.action.push_back(std::move(act));
    }

    // direct verdicts against the extension algebra B^C
    const Algebra bc = twisted_product_algebra(a, im, c);
    auto action_of = [&](const Vector& v) {
        Matrix acc(f, t + q, t + q);
        for (std::size_t i = 0; i < m + n; ++i)
            if (!v[i].is_zero()) acc = acc + out.module.action[i].scaled(v[i]);
        return acc;
    };
    out.module.unital = action_of(bc.unit) == Matrix::identity(f, t + q);
    out.module.associative = true;
    for (std::size_t i = 0; i < m + n && out.module.associative; ++i)
        for (std::size_t j = 0; j < m + n; ++j) {
            if (!(action_of(bc.basis_product(i, j)) ==
                  out.module.action[i] * out.module.action[j])) {
                out.module.associative = false;
                break;
            }
        }

    // independent criterion: C(y,x) x f = 0 in I tensor_A E
    for (std::size_t y = 0; y < n && out.criterion_zero; ++y)
        for (std::size_t x = 0; x < n && out.criterion_zero; ++x) {
            const Vector cyx = c.mat.column(y * n + x);
            for (std::size_t j = 0; j < q; ++j) {
                const Vector img =
                    tq.projection * pure_tensor(f, q, cyx, Vector::unit(f, q, j));
                if (!img.is_zero()) {
                    out.criterion_zero = false;
                    break;
                }
            }
        }
    return out;
}

KaehlerData kaehler(const Algebra& a) {
    if (!a.is_commutative())
        throw MathDomainError("Kaehler differentials require a commutative algebra");
    const Field& f = a.field;
    const std::size_t n = a.dim;
    const std::size_t nn = n * n;

    KaehlerData out;

    // T = A tensor A with (a x b)(c x d) = ac x bd; index of e_i x e_j is i*n+j
    out.tensor_algebra.field = f;
    out.tensor_algebra.dim = nn;
    out.tensor_algebra.mul.reserve(nn * nn);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const Vector& left = a.basis_product(i, k);
                    const Vector& rght = a.basis_product(j, l);
                    Vector prod(f, nn);
                    for (std::size_t s = 0; s < n; ++s) {
                        if (left[s].is_zero()) continue;
                        for (std::size_t tt = 0; tt < n; ++tt)
                            if (!rght[tt].is_zero()) prod[s * n + tt] = left[s] * rght[tt];
                    }
                    out.tensor_algebra.mul.push_back(std::move(prod));
                }
    out.tensor_algebra.unit = Vector(f, nn);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.unit[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!a.unit[j].is_zero()) out.tensor_algebra.unit[i * n + j] = a.unit[i] * a.unit[j];
    }

    // multiplication map T -> A and the diagonal ideal
    out.mult_map = Matrix(f, n, nn);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.mult_map.set_column(i * n + j, a.basis_product(i, j));
    out.diagonal_ideal = kernel_basis(out.mult_map);

    // I^2
    std::vector<Vector> products;
    for (const Vector& v : out.diagonal_ideal)
        for (const Vector& w : out.diagonal_ideal)
            products.push_back(out.tensor_algebra.multiply(v, w));
    out.ideal_squared = column_space_basis(Matrix::from_columns(f, nn, products));

    // Pr^1 = T / I^2 with deterministic standard-basis representatives
    std::vector<Vector> std_basis;
    for (std::size_t t = 0; t < nn; ++t) std_basis.push_back(Vector::unit(f, nn, t));
    const QuotientBasis qb = quotient_basis(std_basis, out.ideal_squared);
    const std::size_t pdim = qb.dim;

    Matrix basis_change(f, nn, nn);
    for (std::size_t t = 0; t < out.ideal_squared.size(); ++t)
        basis_change.set_column(t, out.ideal_squared[t]);
    for (std::size_t t = 0; t < pdim; ++t)
        basis_change.set_column(out.ideal_squared.size() + t, qb.representatives[t]);
    const auto inv_change = inverse(basis_change);
    if (!inv_change) throw InternalError("Pr^1 quotient basis is singular");
    out.pr1_projection = Matrix(f, pdim, nn);
    for (std::size_t r = 0; r < pdim; ++r)
        for (std::size_t c = 0; c < nn; ++c)
            out.pr1_projection.at(r, c) = inv_change->at(out.ideal_squared.size() + r, c);
    Matrix reps(f, nn, pdim);
    for (std::size_t t = 0; t < pdim; ++t) reps.set_column(t, qb.representatives[t]);

    out.pr1.field = f;
    out.pr1.dim = pdim;
    out.pr1.unit = out.pr1_projection * out.tensor_algebra.unit;
    for (std::size_t i = 0; i < pdim; ++i)
        for (std::size_t j = 0; j < pdim; ++j)
            out.pr1.mul.push_back(out.pr1_projection *
                                  out.tensor_algebra.multiply(reps.column(i), reps.column(j)));
    {
        const ValidationReport rep = validate_algebra(out.pr1);
        if (!rep.ok()) throw InternalError("Pr^1 failed validation: " + rep.violations.front());
    }

    // induced map Pr^1 -> A (mult_map kills I^2) and Omega^1 = image of I
    out.pr1_to_base = out.mult_map * reps;
    std::vector<Vector> omega_images;
    for (const Vector& v : out.diagonal_ideal)
        omega_images.push_back(out.pr1_projection * v);
    out.omega1 = column_space_basis(Matrix::from_columns(f, pdim, omega_images));

    // exactness: Omega^1 = ker(Pr^1 -> A)
    {
        const std::vector<Vector> ker = kernel_basis(out.pr1_to_base);
        bool exact = ker.size() == out.omega1.size();
        if (exact && !out.omega1.empty()) {
            const Matrix km = Matrix::from_columns(f, pdim, ker);
            for (const Vector& w : out.omega1)
                if (!solve(km, w)) { exact = false; break; }
        }
        out.sequence_exact = exact;
    }

    // splitting sigma(a) = [a x 1]
    out.splitting = Matrix(f, pdim, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector ei1(f, nn);
        for (std::size_t j = 0; j < n; ++j)
            if (!a.unit[j].is_zero()) ei1[i * n + j] = a.unit[j];
        out.splitting.set_column(i, out.pr1_projection * ei1);
    }
    out.splitting_ok = (out.pr1_to_base * out.splitting == Matrix::identity(f, n)) &&
                       validate_algebra_map(a, out.pr1, out.splitting).ok();

    // universal derivation d(a) = [1 x a - a x 1], written in Omega^1 coordinates
    const std::size_t odim = out.omega1.size();
    const Matrix omega_mat = Matrix::from_columns(f, pdim, out.omega1);
    out.universal_derivation = Matrix(f, odim, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector w(f, nn);
        for (std::size_t j = 0; j < n; ++j)
            if (!a.unit[j].is_zero()) {
                w[j * n + i] += a.unit[j];
                w[i * n + j] -= a.unit[j];
            }
        const auto coords = solve(omega_mat, out.pr1_projection * w);
        if (!coords) throw InternalError("universal derivation escaped Omega^1");
        out.universal_derivation.set_column(i, *coords);
    }

    // Leibniz for d and the module action a.w = [a x 1] w on Omega^1
    auto omega_action = [&](std::size_t i) {
        // multiplication by sigma(e_i) restricted to Omega^1, in Omega^1 coords
        Matrix act(f, odim, odim);
        for (std::size_t t = 0; t < odim; ++t) {
            const Vector moved =
                out.pr1.multiply(out.splitting.column(i), omega_mat.column(t));
            const auto coords = solve(omega_mat, moved);
            if (!coords) throw InternalError("A-action left Omega^1");
            act.set_column(t, *coords);
        }
        return act;
    };
    std::vector<Matrix> oact;
    for (std::size_t i = 0; i < n; ++i) oact.push_back(omega_action(i));
    out.omega_bimodule.dim = odim;
    out.omega_bimodule.left = oact;
    out.omega_bimodule.right = oact; // the two factor actions coincide on I/I^2
    out.leibniz_ok = true;
    for (std::size_t i = 0; i < n && out.leibniz_ok; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector lhs = out.universal_derivation * a.basis_product(i, j);
            const Vector rhs =
                oact[i] * out.universal_derivation.column(j) + oact[j] * out.universal_derivation.column(i);
            if (!(lhs == rhs)) { out.leibniz_ok = false; break; }
        }

    // product formula (w,a)(h,b) = (w b + a h, a b) in the splitting
    // decomposition Pr^1 = Omega^1 + sigma(A)
    out.product_formula_ok = true;
    for (std::size_t t = 0; t < odim && out.product_formula_ok; ++t)
        for (std::size_t s = 0; s < odim; ++s) {
            // omega . eta = 0
            if (!out.pr1.multiply(omega_mat.column(t), omega_mat.column(s)).is_zero()) {
                out.product_formula_ok = false;
                break;
            }
        }
    for (std::size_t t = 0; t < odim && out.product_formula_ok; ++t)
        for (std::size_t j = 0; j < n; ++j) {
            // omega_t . sigma(e_j) = omega_t . e_j and sigma(e_j) . omega_t = e_j . omega_t
            const Vector right_mul =
                out.pr1.multiply(omega_mat.column(t), out.splitting.column(j));
            const Vector left_mul =
                out.pr1.multiply(out.splitting.column(j), omega_mat.column(t));
            const Vector expected = omega_mat * oact[j].column(t);
            if (!(right_mul == expected) || !(left_mul == expected)) {
                out.product_formula_ok = false;
                break;
            }
        }
    for (std::size_t i = 0; i < n && out.product_formula_ok; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // sigma(e_i) sigma(e_j) = sigma(e_i e_j)
            const Vector lhs =
                out.pr1.multiply(out.splitting.column(i), out.splitting.column(j));
            if (!(lhs == out.splitting * a.basis_product(i, j))) {
                out.product_formula_ok = false;
                break;
            }
        }
    return out;
}

std::optional<Matrix> connection_exists(const Algebra& a, const LeftModule& e, const Bimodule& fmod,
                                        const Matrix& d) {
    const Field& f = a.field;
    const std::size_t n = a.dim, q = e.dim;
    if (d.rows() != fmod.dim || d.cols() != n)
        throw InputError("derivation matrix has wrong shape");

    const TensorOverA tq = tensor_over_A(a, fmod, e);
    const std::size_t t = tq.dim;

    // unknowns: entries of nabla (t x q), column-major; equations per basis
    // pair (a_i, e_j): nabla(a_i e_j) - a_i nabla(e_j) = d(a_i) x e_j
    Matrix system(f, n * q * t, t * q);
    Vector rhs(f, n * q * t);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            const std::size_t block = (i * q + j) * t;
            const Vector target =
                tq.projection * pure_tensor(f, q, d.column(i), Vector::unit(f, q, j));
            for (std::size_t r = 0; r < t; ++r) rhs[block + r] = target[r];
            // nabla(a_i e_j) = sum_s (a_i e_j)_s nabla(e_s)
            const Vector ae = e.action[i].column(j);
            for (std::size_t s = 0; s < q; ++s)
                if (!ae[s].is_zero())
                    for (std::size_t r = 0; r < t; ++r)
                        system.at(block + r, s * t + r) += ae[s];
            // -a_i nabla(e_j)
            for (std::size_t r = 0; r < t; ++r)
                for (std::size_t s = 0; s < t; ++s)
                    system.at(block + r, j * t + s) -= tq.left_action[i].at(r, s);
        }
    const auto x = solve(system, rhs);
    if (!x) return std::nullopt;
    Matrix nabla(f, t, q);
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t r = 0; r < t; ++r) nabla.at(r, j) = (*x)[j * t + r];
    // verify the Leibniz identity exactly on all basis pairs
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            const Vector lhs = nabla * e.action[i].column(j);
            const Vector rhs2 = tq.left_action[i] * nabla.column(j) +
                                tq.projection * pure_tensor(f, q, d.column(i), Vector::unit(f, q, j));
            if (!(lhs == rhs2)) throw InternalError("connection solve violated Leibniz");
        }
    return nabla;
}

} // namespace exanlab
