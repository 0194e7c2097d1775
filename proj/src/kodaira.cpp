#include "exanlab/kodaira.hpp"

namespace exanlab {

namespace {

// coordinates of target in the span of flattened matrices, if any
std::optional<Vector> in_span(const std::vector<Matrix>& basis, const Matrix& target) {
    const Field& f = target.field();
    const std::size_t len = target.rows() * target.cols();
    Matrix cols(f, len, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) cols.set_column(i, flatten_endo(basis[i]));
    return solve(cols, flatten_endo(target));
}

void require_report_matches(const Algebra& a, const LeftModule& m, const KSReport& report) {
    for (const Matrix& d : report.der_basis)
        if (d.rows() != a.dim || d.cols() != a.dim)
            throw InputError("stale report: derivation shape mismatch");
    for (const Matrix& w : report.witnesses)
        if (w.rows() != m.dim || w.cols() != m.dim)
            throw InputError("stale report: witness shape mismatch");
    if (report.vm_basis.size() != report.witnesses.size())
        throw InputError("stale report: witness count mismatch");
}

} // namespace

KSReport ks_map(const Algebra& a, const LeftModule& m) {
    {
        const ValidationReport rep = validate_left_module(a, m);
        if (!rep.ok()) throw InputError("invalid module: " + rep.violations.front());
    }
    const Field& f = a.field;
    const std::size_t n = a.dim, q = m.dim;

    KSReport out;
    out.d1_basis = diff_ops_1(a);
    out.der_basis = derivations(a, regular_bimodule(a));
    out.dim_d1 = out.d1_basis.size();
    out.dim_der = out.der_basis.size();
    out.dim_identity = out.dim_d1 == a.dim + out.dim_der;

    const Bimodule endm = end_bimodule(a, m);
    const Matrix d1 = differential_matrix(a, endm, 1);
    const Matrix d0 = differential_matrix(a, endm, 0);
    const std::vector<Vector> kernel = kernel_basis(d1);
    const std::vector<Vector> image = column_space_basis(d0);
    const QuotientBasis hh1 = quotient_basis(kernel, image);
    out.dim_ext1 = hh1.dim;

    // class coordinates: solve against [image | representatives]
    const std::size_t cdim = q * q * n;
    Matrix frame(f, cdim, image.size() + hh1.dim);
    for (std::size_t i = 0; i < image.size(); ++i) frame.set_column(i, image[i]);
    for (std::size_t i = 0; i < hh1.dim; ++i)
        frame.set_column(image.size() + i, hh1.representatives[i]);

    auto cochain_of = [&](const Matrix& delta) {
        // a -> (x -> delta(a) x) as a 1-cochain with values in End_k(M)
        Cochain c{1, Matrix(f, q * q, n)};
        for (std::size_t t = 0; t < n; ++t)
            c.mat.set_column(t, flatten_endo(m.action_of(delta.column(t))));
        return c;
    };
    auto class_coords = [&](const Cochain& c) {
        const auto sol = solve(frame, cochain_vec(c));
        if (!sol) throw InternalError("cocycle escaped the kernel frame");
        Vector cls(f, hh1.dim);
        for (std::size_t i = 0; i < hh1.dim; ++i) cls[i] = (*sol)[image.size() + i];
        return cls;
    };

    out.g = Matrix(f, hh1.dim, out.dim_der);
    for (std::size_t j = 0; j < out.dim_der; ++j) {
        const Cochain c = cochain_of(out.der_basis[j]);
        if (!(d1 * cochain_vec(c)).is_zero())
            throw InternalError("Kodaira-Spencer cochain is not a cocycle");
        out.g.set_column(j, class_coords(c));
    }

    // f vanishes on D^0 = left multiplications, at the level of classes
    out.f_kills_d0 = true;
    for (std::size_t i = 0; i < n && out.f_kills_d0; ++i) {
        // f(phi_{e_i})(a) = phi_{e_i a - a e_i} acting on M
        Matrix delta(f, n, n);
        const Vector e = Vector::unit(f, n, i);
        for (std::size_t t = 0; t < n; ++t) {
            const Vector et = Vector::unit(f, n, t);
            delta.set_column(t, a.multiply(e, et) - a.multiply(et, e));
        }
        const Cochain c = cochain_of(delta);
        if (!(d1 * cochain_vec(c)).is_zero())
            throw InternalError("inner Kodaira-Spencer cochain is not a cocycle");
        if (!class_coords(c).is_zero()) out.f_kills_d0 = false;
    }

    // V_M = ker g, pushed back into derivation space
    for (const Vector& coords : kernel_basis(out.g)) {
        Matrix delta(f, n, n);
        for (std::size_t j = 0; j < out.dim_der; ++j)
            if (!coords[j].is_zero()) delta = delta + out.der_basis[j].scaled(coords[j]);
        out.vm_basis.push_back(std::move(delta));
    }

    // one witness per kernel vector: nu phi_t - phi_t nu = phi_{delta(e_t)}
    for (const Matrix& delta : out.vm_basis) {
        Matrix system(f, n * q * q, q * q);
        Vector rhs(f, n * q * q);
        for (std::size_t t = 0; t < n; ++t) {
            const Matrix target = m.action_of(delta.column(t));
            const Matrix& act = m.action[t];
            for (std::size_t r = 0; r < q; ++r)
                for (std::size_t s = 0; s < q; ++s) {
                    const std::size_t eq = t * q * q + r * q + s;
                    rhs[eq] = target.at(r, s);
                    for (std::size_t u = 0; u < q; ++u) {
                        system.at(eq, r * q + u) += act.at(u, s);  // (nu act)[r][s]
                        system.at(eq, u * q + s) -= act.at(r, u);  // -(act nu)[r][s]
                    }
                }
        }
        const auto sol = solve(system, rhs);
        if (!sol) throw InternalError("kernel vector of g has no connection witness");
        const Matrix nu = unflatten_endo(f, q, *sol);
        for (std::size_t t = 0; t < n; ++t)
            if (!(nu * m.action[t] - m.action[t] * nu == m.action_of(delta.column(t))))
                throw InternalError("witness violates its defining identity");
        out.witnesses.push_back(nu);
    }
    return out;
}

BracketVerdict bracket_closure(const Algebra& a, const LeftModule& m, const KSReport& report) {
    if (!a.is_commutative())
        throw MathDomainError("Lie-Rinehart closure requires a commutative algebra");
    require_report_matches(a, m, report);

    BracketVerdict verdict;
    const std::size_t t = report.vm_basis.size();
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            const Matrix bracket =
                report.vm_basis[i] * report.vm_basis[j] - report.vm_basis[j] * report.vm_basis[i];
            if (!in_span(report.vm_basis, bracket)) verdict.closed = false;

            const Matrix w = report.witnesses[i] * report.witnesses[j] -
                             report.witnesses[j] * report.witnesses[i];
            for (std::size_t s = 0; s < a.dim; ++s) {
                const Matrix lhs = w * m.action[s] - m.action[s] * w;
                if (!(lhs == m.action_of(bracket.column(s)))) {
                    verdict.witnesses_ok = false;
                    break;
                }
            }
        }
    return verdict;
}

TwistCheck twist_module_check(const Algebra& a, const LeftModule& m, const KSReport& report) {
    if (!a.is_commutative())
        throw MathDomainError("the twisted module structure requires a commutative algebra");
    require_report_matches(a, m, report);

    const Field& f = a.field;
    const std::size_t n = a.dim, q = m.dim;
    const std::size_t t = report.vm_basis.size();

    TwistCheck out;

    // End_A(M): endomorphisms commuting with every action matrix
    {
        Matrix system(f, n * q * q, q * q);
        for (std::size_t s = 0; s < n; ++s) {
            const Matrix& act = m.action[s];
            for (std::size_t r = 0; r < q; ++r)
                for (std::size_t col = 0; col < q; ++col) {
                    const std::size_t eq = s * q * q + r * q + col;
                    for (std::size_t u = 0; u < q; ++u) {
                        system.at(eq, r * q + u) += act.at(u, col);
                        system.at(eq, u * q + col) -= act.at(r, u);
                    }
                }
        }
        for (const Vector& v : kernel_basis(system)) out.end_a_basis.push_back(unflatten_endo(f, q, v));
    }

    if (t == 0) {
        // nothing to twist; the sequence is 0 -> End_A(M) -> End_A(M) -> 0 -> 0
        out.lr3_exists = true;
        out.splitting_exists = true;
        return out;
    }

    // coordinates of a.delta_i in the V_M basis
    std::vector<std::vector<Vector>> acoords(n);
    for (std::size_t s = 0; s < n; ++s) {
        const Matrix lmul = a.left_mult(Vector::unit(f, n, s));
        for (std::size_t i = 0; i < t; ++i) {
            const auto coords = in_span(report.vm_basis, lmul * report.vm_basis[i]);
            if (!coords) {
                out.vm_a_closed = false;
                break;
            }
            acoords[s].push_back(*coords);
        }
        if (!out.vm_a_closed) break;
    }

    auto nabla_of = [&](const Vector& coords) {
        Matrix acc(f, q, q);
        for (std::size_t j = 0; j < t; ++j)
            if (!coords[j].is_zero()) acc = acc + report.witnesses[j].scaled(coords[j]);
        return acc;
    };
    auto l_op = [&](std::size_t s, std::size_t i) {
        // L(e_s, delta_i) = phi_{e_s} nabla(delta_i) - nabla(e_s delta_i)
        return m.action[s] * report.witnesses[i] - nabla_of(acoords[s][i]);
    };

    if (out.vm_a_closed) {
        for (std::size_t s = 0; s < n && out.l_a_linear; ++s)
            for (std::size_t i = 0; i < t; ++i) {
                const Matrix l = l_op(s, i);
                for (std::size_t u = 0; u < n; ++u)
                    if (!(l * m.action[u] == m.action[u] * l)) {
                        out.l_a_linear = false;
                        break;
                    }
                if (!out.l_a_linear) break;
            }

        // L(ab, d) = a L(b, d) + L(a, b d), extended bilinearly over basis products
        for (std::size_t s = 0; s < n && out.l_law; ++s)
            for (std::size_t u = 0; u < n && out.l_law; ++u)
                for (std::size_t i = 0; i < t; ++i) {
                    const Vector& prod = a.basis_product(s, u);
                    Matrix lhs(f, q, q);
                    for (std::size_t k = 0; k < n; ++k)
                        if (!prod[k].is_zero()) lhs = lhs + l_op(k, i).scaled(prod[k]);
                    Matrix rhs = m.action[s] * l_op(u, i);
                    const Vector& bd = acoords[u][i];
                    for (std::size_t j = 0; j < t; ++j)
                        if (!bd[j].is_zero()) rhs = rhs + l_op(s, j).scaled(bd[j]);
                    if (!(lhs == rhs)) {
                        out.l_law = false;
                        break;
                    }
                }

        // twisted action on End_A(M) + V_M: a(phi, d) = (a phi + L(a,d), a d)
        const std::size_t w = out.end_a_basis.size();
        std::vector<Matrix> action;
        bool representable = true;
        for (std::size_t s = 0; s < n; ++s) {
            Matrix act(f, w + t, w + t);
            for (std::size_t r = 0; r < w; ++r) {
                const auto coords = in_span(out.end_a_basis, m.action[s] * out.end_a_basis[r]);
                if (!coords) { representable = false; break; }
                for (std::size_t u = 0; u < w; ++u) act.at(u, r) = (*coords)[u];
            }
            if (!representable) break;
            for (std::size_t i = 0; i < t; ++i) {
                const auto coords = in_span(out.end_a_basis, l_op(s, i));
                if (!coords) { representable = false; break; }
                for (std::size_t u = 0; u < w; ++u) act.at(u, w + i) = (*coords)[u];
                for (std::size_t j = 0; j < t; ++j) act.at(w + j, w + i) = acoords[s][i][j];
            }
            if (!representable) break;
            action.push_back(std::move(act));
        }
        if (!representable) {
            out.twisted_associative = false;
        } else {
            auto action_of = [&](const Vector& x) {
                Matrix acc(f, w + t, w + t);
                for (std::size_t s = 0; s < n; ++s)
                    if (!x[s].is_zero()) acc = acc + action[s].scaled(x[s]);
                return acc;
            };
            if (!(action_of(a.unit) == Matrix::identity(f, w + t))) out.twisted_associative = false;
            for (std::size_t s = 0; s < n && out.twisted_associative; ++s)
                for (std::size_t u = 0; u < n; ++u)
                    if (!(action_of(a.basis_product(s, u)) == action[s] * action[u])) {
                        out.twisted_associative = false;
                        break;
                    }
        }
    } else {
        out.l_a_linear = out.l_law = out.twisted_associative = false;
    }

    // joint solves for a simultaneous nabla: unknowns Theta_1..Theta_t,
    // Leibniz block always, A-linearity block for the splitting variant
    const std::size_t unknowns = t * q * q;
    auto leibniz_rows = [&](Matrix& system, Vector& rhs, std::size_t row0) {
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t s = 0; s < n; ++s) {
                const Matrix target = m.action_of(report.vm_basis[i].column(s));
                const Matrix& act = m.action[s];
                for (std::size_t r = 0; r < q; ++r)
                    for (std::size_t col = 0; col < q; ++col) {
                        const std::size_t eq = row0 + ((i * n + s) * q + r) * q + col;
                        rhs[eq] = target.at(r, col);
                        for (std::size_t u = 0; u < q; ++u) {
                            system.at(eq, i * q * q + r * q + u) += act.at(u, col);
                            system.at(eq, i * q * q + u * q + col) -= act.at(r, u);
                        }
                    }
            }
    };

    {
        Matrix system(f, t * n * q * q, unknowns);
        Vector rhs(f, t * n * q * q);
        leibniz_rows(system, rhs, 0);
        out.lr3_exists = solve(system, rhs).has_value();
    }

    if (out.vm_a_closed) {
        const std::size_t leib = t * n * q * q;
        const std::size_t alin = n * t * q * q;
        Matrix system(f, leib + alin, unknowns);
        Vector rhs(f, leib + alin);
        leibniz_rows(system, rhs, 0);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t i = 0; i < t; ++i) {
                // sum_j coords_j Theta_j - phi_{e_s} Theta_i = 0
                const Vector& coords = acoords[s][i];
                const Matrix& act = m.action[s];
                for (std::size_t r = 0; r < q; ++r)
                    for (std::size_t col = 0; col < q; ++col) {
                        const std::size_t eq = leib + ((s * t + i) * q + r) * q + col;
                        for (std::size_t j = 0; j < t; ++j)
                            if (!coords[j].is_zero())
                                system.at(eq, j * q * q + r * q + col) += coords[j];
                        for (std::size_t u = 0; u < q; ++u)
                            system.at(eq, i * q * q + u * q + col) -= act.at(r, u);
                    }
            }
        const auto sol = solve(system, rhs);
        out.splitting_exists = sol.has_value();
        if (sol) {
            for (std::size_t i = 0; i < t; ++i) {
                Vector block(f, q * q);
                for (std::size_t u = 0; u < q * q; ++u) block[u] = (*sol)[i * q * q + u];
                out.splitting.push_back(unflatten_endo(f, q, block));
            }
        }
    }
    return out;
}

} // namespace exanlab
