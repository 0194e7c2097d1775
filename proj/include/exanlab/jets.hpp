#pragma once

#include "exanlab/extensions.hpp"

namespace exanlab {

/// I tensor_A E, realized as the quotient of I tensor_k E by the span of
/// (u.a) x e - u x (a.e). Index of u_i x e_j in I tensor_k E is i*dim(E)+j.
struct TensorOverA {
    std::size_t dim = 0;                               // t
    Matrix projection{Field::rationals(), 0, 0};       // t x (m q)
    Matrix representatives{Field::rationals(), 0, 0};  // (m q) x t, projection . reps = id
    std::vector<Matrix> left_action;                   // n matrices t x t, induced by I's left action
};

TensorOverA tensor_over_A(const Algebra& a, const Bimodule& im, const LeftModule& e);

/// Same kernel as derivations(); exposed here so jet constructors can
/// enumerate the choices of d.
std::vector<Matrix> derivation_space(const Algebra& a, const Bimodule& im);

/// Candidate left B^C-module structure on Pr^1_I(E) = (I tensor_A E) + E via
/// (u,x)(w x e, f) = (u x f + x.(w x e) + d(x) x f, x f). Unital and
/// distributive always; associative exactly when C(y,x) x f = 0.
struct JetModule {
    std::size_t dim = 0;              // t + q
    std::vector<Matrix> action;       // one matrix per B^C basis element (ideal part first)
    Matrix derivation{Field::rationals(), 0, 0}; // the chosen d: A -> I
    bool associative = false;
    bool unital = false;
};

struct JetVerdict {
    JetModule module;
    bool criterion_zero = false; // C(y,x) x f = 0 in I tensor_A E for all basis y,x,f
    TensorOverA tensor;
};

/// Builds the action and returns both the direct associativity verdict and
/// the independent matrix criterion; the two must agree.
JetVerdict jet_action(const Algebra& a, const Bimodule& im, const LeftModule& e, const Cochain& c,
                      const Matrix& d);

/// Commutative first-order jets: the diagonal ideal of A tensor A, Kaehler
/// differentials, Pr^1 = A tensor A / I^2, the universal derivation, and the
/// split exact sequence 0 -> Omega^1 -> Pr^1 -> A -> 0.
struct KaehlerData {
    Algebra tensor_algebra;                      // A tensor A
    Matrix mult_map{Field::rationals(), 0, 0};   // n x n^2
    std::vector<Vector> diagonal_ideal;          // basis of I in tensor coordinates
    std::vector<Vector> ideal_squared;           // basis of I^2
    Algebra pr1;                                 // A tensor A / I^2
    Matrix pr1_projection{Field::rationals(), 0, 0}; // dim(Pr^1) x n^2
    std::vector<Vector> omega1;                  // basis of Omega^1 in Pr^1 coordinates
    Matrix pr1_to_base{Field::rationals(), 0, 0};    // induced multiplication Pr^1 -> A
    Matrix splitting{Field::rationals(), 0, 0};      // sigma: A -> Pr^1, a -> [a x 1]
    Matrix universal_derivation{Field::rationals(), 0, 0}; // d: A -> Omega^1 coordinates
    Bimodule omega_bimodule; // the A-action on Omega^1 (left = right here)
    bool sequence_exact = false;
    bool splitting_ok = false;     // pr1_to_base . splitting = id and sigma is an algebra map
    bool product_formula_ok = false; // (w,a)(h,b) = (w b + a h, a b) on all basis pairs
    bool leibniz_ok = false;       // d(ab) = a d(b) + d(a) b on all basis pairs
};

KaehlerData kaehler(const Algebra& a);

/// Solves the Leibniz system nabla(x e) = x nabla(e) + d(x) x e for a linear
/// nabla: E -> F tensor_A E, where d: A -> F is a derivation into the
/// bimodule F. Returns the echelon solution or nothing (the affine
/// obstruction-class test: a connection exists iff the class vanishes).
std::optional<Matrix> connection_exists(const Algebra& a, const LeftModule& e, const Bimodule& f,
                                        const Matrix& d);

} // namespace exanlab
