#pragma once

// Shared fixtures and deterministic random instance generators for the test
// suites. All algebras come from families that are associative and unital by
// construction (truncated polynomial quotients, matrix algebras, upper
// triangular algebras, direct products) followed by random basis changes, so
// validity is never in question while coordinates are thoroughly scrambled.

#include <random>

#include "exanlab/extensions.hpp"

namespace exanlab::testing {

// k[x]/(f) for monic f = x^d - (c_{d-1} x^{d-1} + ... + c_0), basis 1, x, ..., x^{d-1}
inline Algebra poly_quotient(const Field& f, const std::vector<Scalar>& reduction) {
    const std::size_t d = reduction.size();
    Algebra a;
    a.field = f;
    a.dim = d;
    a.unit = Vector::unit(f, d, 0);
    // x^i * x^j = x^{i+j}, reduced
    std::vector<Vector> powers; // x^k for k = 0 .. 2d-2
    for (std::size_t k = 0; k < d; ++k) powers.push_back(Vector::unit(f, d, k));
    for (std::size_t k = d; k <= 2 * (d - 1); ++k) {
        // x^k = x^{k-d} * x^d = x^{k-d} * reduction
        Vector v(f, d);
        const Vector& prev = powers[k - 1];
        // multiply by x: shift up, fold the overflow through the reduction row
        for (std::size_t i = 0; i + 1 < d; ++i) v[i + 1] = prev[i];
        if (!prev[d - 1].is_zero())
            for (std::size_t i = 0; i < d; ++i) v[i] += reduction[i] * prev[d - 1];
        powers.push_back(v);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a.mul.push_back(powers[i + j]);
    return a;
}

inline Algebra truncated_polynomial(const Field& f, std::size_t d) {
    return poly_quotient(f, std::vector<Scalar>(d, Scalar::zero(f)));
}

inline Algebra dual_numbers(const Field& f) { return truncated_polynomial(f, 2); }

// full matrix algebra M_2, basis e11, e12, e21, e22
inline Algebra matrix_algebra2(const Field& f) {
    Algebra a;
    a.field = f;
    a.dim = 4;
    auto idx = [](std::size_t u, std::size_t v) { return u * 2 + v; };
    for (std::size_t u = 0; u < 2; ++u)
        for (std::size_t v = 0; v < 2; ++v)
            for (std::size_t w = 0; w < 2; ++w)
                for (std::size_t z = 0; z < 2; ++z) {
                    Vector prod(f, 4);
                    if (v == w) prod[idx(u, z)] = Scalar::one(f);
                    a.mul.push_back(prod);
                }
    a.unit = Vector(f, 4);
    a.unit[idx(0, 0)] = Scalar::one(f);
    a.unit[idx(1, 1)] = Scalar::one(f);
    return a;
}

// upper triangular 2x2 matrices, basis e11, e12, e22
inline Algebra upper_triangular2(const Field& f) {
    Algebra a;
    a.field = f;
    a.dim = 3;
    auto mul_entry = [&](std::size_t i, std::size_t j) {
        // basis index -> (row, col): 0 -> (0,0), 1 -> (0,1), 2 -> (1,1)
        static const std::size_t rc[3][2] = {{0, 0}, {0, 1}, {1, 1}};
        Vector prod(f, 3);
        if (rc[i][1] == rc[j][0]) {
            const std::size_t r = rc[i][0], c = rc[j][1];
            for (std::size_t k = 0; k < 3; ++k)
                if (rc[k][0] == r && rc[k][1] == c) prod[k] = Scalar::one(f);
        }
        return prod;
    };
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a.mul.push_back(mul_entry(i, j));
    a.unit = Vector(f, 3);
    a.unit[0] = Scalar::one(f);
    a.unit[2] = Scalar::one(f);
    return a;
}

inline Algebra direct_product(const Algebra& a, const Algebra& b) {
    Algebra p;
    p.field = a.field;
    p.dim = a.dim + b.dim;
    auto embed = [&](const Vector& va, const Vector& vb) {
        Vector v(p.field, p.dim);
        for (std::size_t i = 0; i < a.dim; ++i) v[i] = va[i];
        for (std::size_t i = 0; i < b.dim; ++i) v[a.dim + i] = vb[i];
        return v;
    };
    const Vector za(p.field, a.dim), zb(p.field, b.dim);
    for (std::size_t i = 0; i < p.dim; ++i)
        for (std::size_t j = 0; j < p.dim; ++j) {
            if (i < a.dim && j < a.dim)
                p.mul.push_back(embed(a.basis_product(i, j), zb));
            else if (i >= a.dim && j >= a.dim)
                p.mul.push_back(embed(za, b.basis_product(i - a.dim, j - a.dim)));
            else
                p.mul.push_back(Vector(p.field, p.dim));
        }
    p.unit = embed(a.unit, b.unit);
    return p;
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::size_t index(std::size_t bound) { // [0, bound)
        return std::uniform_int_distribution<std::size_t>(0, bound - 1)(eng);
    }
    Scalar scalar(const Field& f) {
        if (f.is_rational())
            return Scalar::from_int(f, static_cast<long>(index(7)) - 3);
        return Scalar::residue(f, index(f.modulus()));
    }
    Scalar nonzero_scalar(const Field& f) {
        for (;;) {
            Scalar s = scalar(f);
            if (!s.is_zero()) return s;
        }
    }
    Vector vector(const Field& f, std::size_t n) {
        Vector v(f, n);
        for (std::size_t i = 0; i < n; ++i) v[i] = scalar(f);
        return v;
    }
    Matrix invertible(const Field& f, std::size_t n) {
        for (;;) {
            Matrix m(f, n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) m.at(r, c) = scalar(f);
            if (inverse(m)) return m;
        }
    }
};

// a random associative unital algebra of dimension <= max_dim (>= 2),
// scrambled by a random basis change
inline Algebra random_algebra(Rng& rng, const Field& f, std::size_t max_dim,
                              bool commutative_only = false) {
    Algebra a;
    const std::size_t pick = rng.index(commutative_only ? 4 : 6);
    switch (pick) {
    case 0: a = truncated_polynomial(f, 2 + rng.index(std::max<std::size_t>(1, max_dim - 1))); break;
    case 1: {
        const std::size_t d = 2 + rng.index(std::max<std::size_t>(1, max_dim - 1));
        std::vector<Scalar> red(d, Scalar::zero(f));
        for (auto& s : red) s = rng.scalar(f);
        a = poly_quotient(f, red);
        break;
    }
    case 2: {
        const std::size_t half = std::max<std::size_t>(1, max_dim / 2);
        const std::size_t d1 = 1 + rng.index(half), d2 = 1 + rng.index(half);
        a = direct_product(truncated_polynomial(f, d1), truncated_polynomial(f, d2));
        break;
    }
    case 3: a = truncated_polynomial(f, 1 + rng.index(max_dim)); break;
    case 4: a = max_dim >= 4 ? matrix_algebra2(f) : upper_triangular2(f); break;
    default: a = upper_triangular2(f); break;
    }
    if (a.dim > max_dim) a = truncated_polynomial(f, max_dim);
    return change_basis(a, rng.invertible(f, a.dim));
}

// a random bimodule over A: the regular one, a direct sum of regulars, or
// End_k(M) of a small module, always scrambled in the module coordinates
inline Bimodule random_bimodule(Rng& rng, const Algebra& a, std::size_t max_dim = 4) {
    Bimodule base = regular_bimodule(a);
    const std::size_t pick = rng.index(3);
    if (pick == 0 && 2 * a.dim <= max_dim) {
        Bimodule sum;
        sum.dim = 2 * a.dim;
        for (std::size_t i = 0; i < a.dim; ++i) {
            Matrix l(a.field, sum.dim, sum.dim), r(a.field, sum.dim, sum.dim);
            for (std::size_t u = 0; u < a.dim; ++u)
                for (std::size_t v = 0; v < a.dim; ++v) {
                    l.at(u, v) = base.left[i].at(u, v);
                    l.at(a.dim + u, a.dim + v) = base.left[i].at(u, v);
                    r.at(u, v) = base.right[i].at(u, v);
                    r.at(a.dim + u, a.dim + v) = base.right[i].at(u, v);
                }
            sum.left.push_back(std::move(l));
            sum.right.push_back(std::move(r));
        }
        base = std::move(sum);
    } else if (pick == 1 && a.dim * a.dim <= max_dim) {
        base = end_bimodule(a, regular_left_module(a));
    }
    const Matrix q = rng.invertible(a.field, base.dim);
    const Matrix a_id = Matrix::identity(a.field, a.dim);
    return change_basis(base, a_id, q);
}

// the regular module with scrambled coordinates; always valid over any A
inline LeftModule random_left_module(Rng& rng, const Algebra& a) {
    LeftModule m = regular_left_module(a);
    const Matrix q = rng.invertible(a.field, m.dim);
    return change_basis(m, Matrix::identity(a.field, a.dim), q);
}

// random element of the exan cocycle space (kernel of d^2)
inline Cochain random_cocycle(Rng& rng, const Algebra& a, const Bimodule& im) {
    const ExanBasis basis = exan_basis(a, im);
    Cochain c = zero_cochain(a, im, 2);
    for (const Cochain& b : basis.exan)
        c.mat = c.mat + b.mat.scaled(rng.scalar(a.field));
    return c;
}

inline Matrix random_derivation(Rng& rng, const Algebra& a, const Bimodule& im) {
    const std::vector<Matrix> space = derivations(a, im);
    Matrix d(a.field, im.dim, a.dim);
    for (const Matrix& b : space) d = d + b.scaled(rng.scalar(a.field));
    return d;
}

} // namespace exanlab::testing
