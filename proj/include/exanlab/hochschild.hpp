#pragma once

#include "exanlab/algebra.hpp"

namespace exanlab {

/// p-cochain A^{tensor p} -> I, stored as a dim(I) x dim(A)^p matrix.
/// Columns are indexed by basis tensors e_{i1} x ... x e_{ip} in
/// lexicographic order with the leftmost factor most significant:
/// column index = i1 n^{p-1} + i2 n^{p-2} + ... + ip.
struct Cochain {
    int degree = 0; // 0..3
    Matrix mat{Field::rationals(), 0, 0};
};

/// Guard for cochain spaces: dim(I) * dim(A)^p may not exceed this.
constexpr std::size_t kCochainSpaceGuard = 1'000'000;

/// dim(A)^degree with the space guard applied against dim(I).
std::size_t cochain_cols(const Algebra& a, const Bimodule& im, int degree);

Cochain zero_cochain(const Algebra& a, const Bimodule& im, int degree);

/// Flattened coordinates of a cochain: column t of the matrix occupies
/// entries [t*dim(I), (t+1)*dim(I)).
Vector cochain_vec(const Cochain& c);
Cochain cochain_from_vec(const Algebra& a, const Bimodule& im, int degree, const Vector& v);

/// The Hochschild differential d^p, evaluated on all basis tensors:
///   d(f)(a_1 x ... x a_{p+1}) = a_1 f(a_2 x ... x a_{p+1})
///     + sum_i (-1)^i f(a_1 x ... x a_i a_{i+1} x ... x a_{p+1})
///     + (-1)^{p+1} f(a_1 x ... x a_p) a_{p+1}.
/// At p = 0 this is the commutator a u - u a. Input degree must be <= 2.
Cochain differential(const Algebra& a, const Bimodule& im, const Cochain& c);

/// Matrix of d^p acting on flattened cochain coordinates.
Matrix differential_matrix(const Algebra& a, const Bimodule& im, int p);

struct Cohomology {
    std::size_t dim = 0;
    std::vector<Cochain> representatives;
    std::size_t kernel_dim = 0;
    std::size_t image_dim = 0; // of d^{p-1}
};

/// HH^p(A, I) = ker d^p / im d^{p-1} for p in {0,1,2}, with deterministic
/// echelon-extension representatives.
Cohomology cohomology(const Algebra& a, const Bimodule& im, int p);

} // namespace exanlab
