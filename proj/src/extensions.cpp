#include "exanlab/extensions.hpp"

namespace exanlab {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Scalar small_scalar(const Field& f, std::uint64_t raw) {
    if (f.is_rational()) return Scalar::from_int(f, static_cast<long>(raw % 5) - 2);
    return Scalar::residue(f, raw);
}

// C(x, y) for coefficient vectors x, y
Vector evaluate_cochain2(const Algebra& a, const Bimodule& im, const Cochain& c, const Vector& x,
                         const Vector& y) {
    Vector r(a.field, im.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.dim; ++j) {
            if (y[j].is_zero()) continue;
            r += c.mat.column(i * a.dim + j).scaled(x[i] * y[j]);
        }
    }
    return r;
}

void require_degree2(const Algebra& a, const Bimodule& im, const Cochain& c) {
    if (c.degree != 2) throw InputError("expected a degree-2 cochain");
    if (c.mat.rows() != im.dim || c.mat.cols() != a.dim * a.dim)
        throw InputError("cochain matrix shape does not match the algebra/bimodule pair");
}

} // namespace

CocycleCheck is_cocycle(const Algebra& a, const Bimodule& im, const Cochain& c) {
    require_degree2(a, im, c);
    const std::size_t n = a.dim;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vector v = im.left[x] * c.mat.column(y * n + z);
                const Vector& xy = a.basis_product(x, y);
                const Vector& yz = a.basis_product(y, z);
                for (std::size_t k = 0; k < n; ++k) {
                    if (!xy[k].is_zero()) v -= c.mat.column(k * n + z).scaled(xy[k]);
                    if (!yz[k].is_zero()) v += c.mat.column(x * n + k).scaled(yz[k]);
                }
                v -= im.right[z] * c.mat.column(x * n + y);
                if (!v.is_zero()) return {false, {x, y, z}};
            }
    return {true, {0, 0, 0}};
}

ExanBasis exan_basis(const Algebra& a, const Bimodule& im) {
    const Matrix d2 = differential_matrix(a, im, 2);
    const Matrix d1 = differential_matrix(a, im, 1);

    ExanBasis result;
    for (const Vector& v : kernel_basis(d2))
        result.exan.push_back(cochain_from_vec(a, im, 2, v));
    for (const Vector& v : column_space_basis(d1)) {
        if (!(d2 * v).is_zero())
            throw InternalError("coboundary escaped the cocycle space: d^2 d^1 != 0");
        result.inner.push_back(cochain_from_vec(a, im, 2, v));
    }
    result.hh2_dim = result.exan.size() - result.inner.size();
    return result;
}

Algebra twisted_product_algebra(const Algebra& a, const Bimodule& im, const Cochain& c) {
    require_degree2(a, im, c);
    const std::size_t m = im.dim, n = a.dim, total = m + n;

    Algebra b;
    b.field = a.field;
    b.dim = total;
    b.mul.reserve(total * total);

    auto embed = [&](const Vector& ideal_part, const Vector& base_part) {
        Vector v(a.field, total);
        for (std::size_t r = 0; r < m; ++r) v[r] = ideal_part[r];
        for (std::size_t r = 0; r < n; ++r) v[m + r] = base_part[r];
        return v;
    };
    const Vector zero_i(a.field, m), zero_a(a.field, n);

    for (std::size_t row = 0; row < total; ++row)
        for (std::size_t col = 0; col < total; ++col) {
            Vector prod(a.field, total);
            if (row < m && col < m) {
                // I . I = 0
            } else if (row < m) {
                // u . y = right action
                prod = embed(im.right[col - m].column(row), zero_a);
            } else if (col < m) {
                // x . v = left action
                prod = embed(im.left[row - m].column(col), zero_a);
            } else {
                prod = embed(c.mat.column((row - m) * n + (col - m)),
                             a.basis_product(row - m, col - m));
            }
            b.mul.push_back(std::move(prod));
        }

    // unit (-C(1,1), 1_A); the correction term vanishes for every cocycle
    // with C(1,.) = 0, e.g. anything extracted from a unital section
    Vector c11(a.field, m);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.unit[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (a.unit[j].is_zero()) continue;
            c11 += c.mat.column(i * n + j).scaled(a.unit[i] * a.unit[j]);
        }
    }
    b.unit = embed(-c11, a.unit);
    return b;
}

ExtensionAlgebra build_extension(const Algebra& a, const Bimodule& im, const Cochain& c) {
    const CocycleCheck check = is_cocycle(a, im, c);
    if (!check.ok)
        throw NotACocycleError("cocycle condition fails at basis triple (" +
                                   std::to_string(check.violating_triple[0]) + "," +
                                   std::to_string(check.violating_triple[1]) + "," +
                                   std::to_string(check.violating_triple[2]) + ")",
                               check.violating_triple);

    ExtensionAlgebra b;
    b.algebra = twisted_product_algebra(a, im, c);
    b.ideal_dim = im.dim;
    const std::size_t total = im.dim + a.dim;
    b.injection = Matrix(a.field, total, im.dim);
    for (std::size_t r = 0; r < im.dim; ++r) b.injection.at(r, r) = Scalar::one(a.field);
    b.projection = Matrix(a.field, a.dim, total);
    for (std::size_t r = 0; r < a.dim; ++r) b.projection.at(r, im.dim + r) = Scalar::one(a.field);
    b.cocycle = c;

    const ValidationReport rep = validate_algebra(b.algebra);
    if (!rep.ok())
        throw InternalError("twisted product of a cocycle failed validation: " +
                            rep.violations.front());
    return b;
}

ValidationReport validate_extension(const ExtensionAlgebra& b) {
    ValidationReport rep = validate_algebra(b.algebra);
    const std::size_t total = b.algebra.dim;
    const std::size_t m = b.ideal_dim;
    if (b.injection.rows() != total || b.injection.cols() != m) {
        rep.add("injection matrix has wrong shape");
        return rep;
    }
    const std::size_t n = b.projection.rows();
    if (b.projection.cols() != total || m + n != total) {
        rep.add("projection matrix has wrong shape");
        return rep;
    }
    if (rank(b.injection) != m) rep.add("injection is not injective");
    if (rank(b.projection) != n) rep.add("projection is not surjective");
    if (!(b.projection * b.injection).is_zero()) rep.add("projection . injection != 0");
    if (rank(b.projection) + m != total) rep.add("kernel of projection has wrong dimension");

    // i(I)^2 = 0 and two-sidedness of i(I)
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t)
            if (!b.algebra.multiply(b.injection.column(s), b.injection.column(t)).is_zero())
                rep.add("ideal is not square-zero at pair (" + std::to_string(s) + "," +
                        std::to_string(t) + ")");
    for (std::size_t e = 0; e < total; ++e) {
        const Vector basis_el = Vector::unit(b.algebra.field, total, e);
        for (std::size_t t = 0; t < m; ++t) {
            const Vector lw = b.algebra.multiply(basis_el, b.injection.column(t));
            const Vector rw = b.algebra.multiply(b.injection.column(t), basis_el);
            if (!solve(b.injection, lw))
                rep.add("ideal not left-stable at (" + std::to_string(e) + "," + std::to_string(t) + ")");
            if (!solve(b.injection, rw))
                rep.add("ideal not right-stable at (" + std::to_string(e) + "," + std::to_string(t) + ")");
        }
    }
    return rep;
}

Algebra quotient_algebra(const ExtensionAlgebra& b) {
    const std::size_t n = b.projection.rows();
    const auto preimages = solve_all(b.projection, Matrix::identity(b.algebra.field, n));
    if (!preimages) throw InputError("projection is not surjective");

    Algebra a;
    a.field = b.algebra.field;
    a.dim = n;
    a.unit = b.projection * b.algebra.unit;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.mul.push_back(b.projection *
                            b.algebra.multiply(preimages->column(i), preimages->column(j)));
    return a;
}

Section choose_section(const ExtensionAlgebra& b, unsigned seed) {
    const Field& f = b.algebra.field;
    const std::size_t n = b.projection.rows();
    auto s0 = solve_all(b.projection, Matrix::identity(f, n));
    if (!s0) throw InputError("projection is not surjective");
    Matrix s = *s0;

    const Vector one_b = b.algebra.unit;
    const Vector one_a = b.projection * one_b;
    std::size_t lead = n;
    for (std::size_t j = 0; j < n; ++j)
        if (!one_a[j].is_zero()) { lead = j; break; }
    if (lead == n) throw InputError("unit of the quotient vanishes");
    const Scalar lead_inv = one_a[lead].inverse();

    // correct along the unit so s(1_A) = 1_B
    const Vector discrepancy = one_b - s * one_a;
    for (std::size_t r = 0; r < s.rows(); ++r)
        s.at(r, lead) += discrepancy[r] * lead_inv;

    if (seed != 0) {
        // deterministic perturbation by a map A -> i(I) vanishing on 1_A
        std::uint64_t state = 0x9E3779B9u * (seed + 1);
        Matrix h(f, s.rows(), n);
        for (std::size_t j = 0; j < n; ++j) {
            Vector w(f, b.ideal_dim);
            for (std::size_t t = 0; t < b.ideal_dim; ++t)
                w[t] = small_scalar(f, splitmix64(state));
            h.set_column(j, b.injection * w);
        }
        const Vector at_one = h * one_a;
        for (std::size_t r = 0; r < h.rows(); ++r)
            h.at(r, lead) -= at_one[r] * lead_inv;
        s = s + h;
    }

    if (!(b.projection * s == Matrix::identity(f, n)))
        throw InternalError("section construction lost the right-inverse property");
    if (!(s * one_a == one_b)) throw InternalError("section construction lost s(1) = 1");
    return {s};
}

ExtractedCocycle extract_cocycle(const ExtensionAlgebra& b, const Section& s) {
    const Field& f = b.algebra.field;
    const std::size_t n = b.projection.rows();
    const std::size_t m = b.ideal_dim;

    const Vector one_a = b.projection * b.algebra.unit;
    if (!(b.projection * s.map == Matrix::identity(f, n)))
        throw InputError("section identity p . s = id fails");
    if (!(s.map * one_a == b.algebra.unit)) throw InputError("section identity s(1) = 1 fails");

    ExtractedCocycle out{quotient_algebra(b), Bimodule{}, Cochain{}};
    const Algebra& a = out.base;

    // induced actions x.u = s(x) u, u.x = u s(x), pulled back through i
    out.induced.dim = m;
    for (std::size_t j = 0; j < n; ++j) {
        const Matrix lmul = b.algebra.left_mult(s.map.column(j)) * b.injection;
        const Matrix rmul = b.algebra.right_mult(s.map.column(j)) * b.injection;
        auto l = solve_all(b.injection, lmul);
        auto r = solve_all(b.injection, rmul);
        if (!l || !r)
            throw InputError("ideal is not stable under the section action; invalid extension");
        out.induced.left.push_back(*l);
        out.induced.right.push_back(*r);
    }
    const ValidationReport brep = validate_bimodule(a, out.induced);
    if (!brep.ok())
        throw InputError("induced bimodule fails axioms: " + brep.violations.front());

    // C(x,y) = s(x)s(y) - s(xy) in I-coordinates
    Cochain c{2, Matrix(f, m, n * n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector prod = b.algebra.multiply(s.map.column(i), s.map.column(j));
            const Vector w = prod - s.map * a.basis_product(i, j);
            const auto u = solve(b.injection, w);
            if (!u) throw InputError("section defect is not in the ideal; invalid extension");
            c.mat.set_column(i * n + j, *u);
        }
    const CocycleCheck check = is_cocycle(a, out.induced, c);
    if (!check.ok)
        throw InternalError("extracted cochain violates the cocycle condition");
    out.cocycle = std::move(c);
    return out;
}

RebuiltIsomorphism rebuild_isomorphism(const ExtensionAlgebra& b, const Section& s) {
    const Field& f = b.algebra.field;
    const std::size_t total = b.algebra.dim;
    const std::size_t m = b.ideal_dim;
    const std::size_t n = b.projection.rows();

    ExtractedCocycle ext = extract_cocycle(b, s);
    ExtensionAlgebra target = build_extension(ext.base, ext.induced, ext.cocycle);

    // phi(x) = (i^{-1}(x - s p(x)), p(x))
    const Matrix defect = Matrix::identity(f, total) - s.map * b.projection;
    const auto top = solve_all(b.injection, defect);
    if (!top) throw InputError("x - sp(x) escaped the ideal; invalid extension");

    Matrix phi(f, total, total);
    for (std::size_t c = 0; c < total; ++c) {
        for (std::size_t r = 0; r < m; ++r) phi.at(r, c) = top->at(r, c);
        for (std::size_t r = 0; r < n; ++r) phi.at(m + r, c) = b.projection.at(r, c);
    }

    if (!inverse(phi)) throw InternalError("rebuild map is not bijective");
    const ValidationReport rep = validate_algebra_map(b.algebra, target.algebra, phi);
    if (!rep.ok())
        throw InternalError("rebuild map is not a unital algebra map: " + rep.violations.front());
    if (!(phi * b.injection == target.injection))
        throw InternalError("rebuild map does not commute with the injections");
    if (!(target.projection * phi == b.projection))
        throw InternalError("rebuild map does not commute with the projections");
    return {std::move(phi), std::move(target)};
}

EquivResult equiv(const Algebra& a, const Bimodule& im, const Cochain& c1, const Cochain& c2,
                  EquivMode mode) {
    require_degree2(a, im, c1);
    require_degree2(a, im, c2);
    if (mode == EquivMode::strict) return {c1.mat == c2.mat, std::nullopt};

    const Matrix d1 = differential_matrix(a, im, 1);
    const Vector diff = cochain_vec(Cochain{2, c1.mat - c2.mat});
    const auto x = solve(d1, diff);
    if (!x) return {false, std::nullopt};
    return {true, cochain_from_vec(a, im, 1, *x)};
}

Cochain normalize_cocycle(const Algebra& a, const Bimodule& im, const Cochain& c) {
    require_degree2(a, im, c);
    const Vector c11 = evaluate_cochain2(a, im, c, a.unit, a.unit);
    Cochain phi{1, Matrix(a.field, im.dim, a.dim)};
    for (std::size_t j = 0; j < a.dim; ++j)
        phi.mat.set_column(j, im.left[j] * c11);
    // phi(x) = x.C(1,1), so C - d(phi) kills C(1,.) and C(.,1)
    Cochain out{2, c.mat - differential(a, im, phi).mat};
    if (!evaluate_cochain2(a, im, out, a.unit, a.unit).is_zero())
        throw InternalError("normalization failed to clear C(1,1)");
    return out;
}

Cochain caction(const Algebra& a, const Bimodule& im, const Vector& z, const Cochain& c, Side side) {
    require_degree2(a, im, c);
    if (z.size() != a.dim) throw InputError("center element has wrong length");
    for (std::size_t i = 0; i < a.dim; ++i) {
        const Vector e = Vector::unit(a.field, a.dim, i);
        if (!(a.multiply(z, e) == a.multiply(e, z)))
            throw MathDomainError("element is not central: fails to commute with basis " +
                                  std::to_string(i));
    }
    if (!is_cocycle(a, im, c).ok) throw MathDomainError("center action requires a cocycle");

    const Matrix act = side == Side::left ? im.left_action(z) : im.right_action(z);
    Cochain out{2, act * c.mat};
    if (!is_cocycle(a, im, out).ok)
        throw InternalError("center action left the cocycle space");
    return out;
}

QuotientExtension quotient_extension(const ExtensionAlgebra& b) {
    if (!b.cocycle) throw InputError("quotient requires the provenance cocycle");
    const Field& f = b.algebra.field;
    const std::size_t m = b.ideal_dim;
    const std::size_t n = b.projection.rows();
    const std::size_t total = m + n;

    // canonical layout required: the provenance cocycle is expressed in it
    {
        Matrix canon_i(f, total, m), canon_p(f, n, total);
        for (std::size_t r = 0; r < m; ++r) canon_i.at(r, r) = Scalar::one(f);
        for (std::size_t r = 0; r < n; ++r) canon_p.at(r, m + r) = Scalar::one(f);
        if (!(b.injection == canon_i) || !(b.projection == canon_p))
            throw InputError("quotient requires a canonically built extension");
    }

    const ExtractedCocycle ext = extract_cocycle(b, choose_section(b));
    const Algebra& a = ext.base;
    const Bimodule& im = ext.induced;
    const Cochain& c = *b.cocycle;

    // J: close span(Im C) under all left/right basis actions
    std::vector<Vector> j_basis = column_space_basis(c.mat);
    for (;;) {
        std::vector<Vector> extended = j_basis;
        for (const Vector& w : j_basis)
            for (std::size_t i = 0; i < n; ++i) {
                extended.push_back(im.left[i] * w);
                extended.push_back(im.right[i] * w);
            }
        std::vector<Vector> closed =
            column_space_basis(Matrix::from_columns(f, m, extended));
        if (closed.size() == j_basis.size()) break;
        j_basis = std::move(closed);
    }
    const std::size_t jdim = j_basis.size();

    // I/J representatives from the standard basis, and the projection I -> I/J
    std::vector<Vector> std_basis;
    for (std::size_t t = 0; t < m; ++t) std_basis.push_back(Vector::unit(f, m, t));
    const QuotientBasis qb = quotient_basis(std_basis, j_basis);
    const std::size_t mq = qb.dim; // m - jdim

    Matrix basis_change(f, m, m);
    for (std::size_t t = 0; t < jdim; ++t) basis_change.set_column(t, j_basis[t]);
    for (std::size_t t = 0; t < mq; ++t) basis_change.set_column(jdim + t, qb.representatives[t]);
    const auto inv_change = inverse(basis_change);
    if (!inv_change) throw InternalError("ideal quotient basis is singular");
    Matrix ideal_proj(f, mq, m);
    for (std::size_t r = 0; r < mq; ++r)
        for (std::size_t col = 0; col < m; ++col) ideal_proj.at(r, col) = inv_change->at(jdim + r, col);

    // induced bimodule on I/J
    Matrix reps(f, m, mq);
    for (std::size_t t = 0; t < mq; ++t) reps.set_column(t, qb.representatives[t]);
    Bimodule iq;
    iq.dim = mq;
    for (std::size_t i = 0; i < n; ++i) {
        iq.left.push_back(ideal_proj * im.left[i] * reps);
        iq.right.push_back(ideal_proj * im.right[i] * reps);
    }
    const ValidationReport iqrep = validate_bimodule(a, iq);
    if (!iqrep.ok()) throw InternalError("quotient bimodule fails axioms");

    // the induced product must be the untwisted one: Im(C) dies in I/J
    if (!(ideal_proj * c.mat).is_zero())
        throw InternalError("cocycle image survived the ideal closure");

    QuotientExtension out{
        build_extension(a, iq, zero_cochain(a, iq, 2)),
        std::move(j_basis),
        ideal_proj,
        Matrix(f, mq + n, total),
    };

    // q: B^C -> D^C, ideal part through ideal_proj, base part untouched
    for (std::size_t r = 0; r < mq; ++r)
        for (std::size_t col = 0; col < m; ++col) out.algebra_map.at(r, col) = ideal_proj.at(r, col);
    for (std::size_t r = 0; r < n; ++r)
        out.algebra_map.at(mq + r, m + r) = Scalar::one(f);

    const ValidationReport qrep =
        validate_algebra_map(b.algebra, out.quotient.algebra, out.algebra_map);
    if (!qrep.ok())
        throw InternalError("quotient map is not an algebra map: " + qrep.violations.front());
    if (!(out.algebra_map * b.injection == out.quotient.injection * ideal_proj))
        throw InternalError("quotient diagram fails on the ideal side");
    if (!(out.quotient.projection * out.algebra_map == b.projection))
        throw InternalError("quotient diagram fails over the base");
    return out;
}

} // namespace exanlab
