#pragma once

#include "exanlab/jets.hpp"

namespace exanlab {

/// The non-commutative Kodaira-Spencer data of a left module M:
/// D^1(A), Der_k(A), the map g: Der_k(A) -> HH^1(A, End_k(M)) = Ext^1_A(M,M),
/// its kernel V_M, and one connection witness per kernel basis vector.
struct KSReport {
    std::size_t dim_d1 = 0;
    std::size_t dim_der = 0;
    std::size_t dim_ext1 = 0;
    std::vector<Matrix> d1_basis;   // operators on A
    std::vector<Matrix> der_basis;  // derivations of A
    Matrix g{Field::rationals(), 0, 0}; // dim_ext1 x dim_der, in HH^1 class coordinates
    std::vector<Matrix> vm_basis;   // kernel of g, expressed as derivations
    std::vector<Matrix> witnesses;  // per kernel vector: phi with phi(am) = a phi(m) + delta(a) m
    bool f_kills_d0 = false;        // class of f(left mult) is 0 for every basis element
    bool dim_identity = false;      // dim D^1 - dim A = dim Der
};

KSReport ks_map(const Algebra& a, const LeftModule& m);

struct BracketVerdict {
    bool closed = true;        // [delta, eta] in V_M for all kernel basis pairs
    bool witnesses_ok = true;  // [nabla(delta), nabla(eta)] witnesses the bracket
};

/// Lie-Rinehart closure of V_M (commutative A only).
BracketVerdict bracket_closure(const Algebra& a, const LeftModule& m, const KSReport& report);

/// Verdicts for the twisted module structure on End_A(M) + V_M and the
/// splitting statements (commutative A only).
struct TwistCheck {
    bool vm_a_closed = true;        // a.delta stays in V_M
    bool l_a_linear = true;         // L(a, delta) commutes with the A-action on M
    bool l_law = true;              // L(ab, d) = a L(b, d) + L(a, b d)
    bool twisted_associative = true;// (ab)x = a(bx) for the twisted action
    bool lr3_exists = false;        // one k-linear nabla with the Leibniz rule on all of V_M
    bool splitting_exists = false;  // an A-linear such nabla (splits the twisted sequence)
    std::vector<Matrix> end_a_basis;     // basis of End_A(M)
    std::vector<Matrix> splitting;       // the A-linear nabla when it exists
};

TwistCheck twist_module_check(const Algebra& a, const LeftModule& m, const KSReport& report);

} // namespace exanlab
