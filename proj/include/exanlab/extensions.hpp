#pragma once

#include <array>
#include <optional>

#include "exanlab/hochschild.hpp"

namespace exanlab {

/// Square-zero extension 0 -> I -> B -> A -> 0. The base A and the bimodule
/// structure on I are not stored; they are derived from the projection and
/// injection, which is exactly what makes scrambled-basis extensions valid
/// inputs. Extensions built by build_extension use the canonical layout:
/// I-part on the first ideal_dim basis vectors, A-part after, injection
/// [Id; 0] and projection [0 Id].
struct ExtensionAlgebra {
    Algebra algebra;
    std::size_t ideal_dim = 0;
    Matrix injection{Field::rationals(), 0, 0};  // (m+n) x m
    Matrix projection{Field::rationals(), 0, 0}; // n x (m+n)
    std::optional<Cochain> cocycle;              // provenance, canonical coordinates
};

/// Linear right inverse of the projection with s(1) = 1.
struct Section {
    Matrix map{Field::rationals(), 0, 0}; // (m+n) x n
};

struct CocycleCheck {
    bool ok = true;
    std::array<std::size_t, 3> violating_triple{0, 0, 0};
};

struct NotACocycleError : MathDomainError {
    NotACocycleError(const std::string& what, std::array<std::size_t, 3> t)
        : MathDomainError(what), triple(t) {}
    std::array<std::size_t, 3> triple;
};

/// Evaluates x C(y,z) - C(xy,z) + C(x,yz) - C(x,y) z on every basis triple.
/// Deliberately a separate code path from differential(); the two are
/// equivalent and tested against each other.
CocycleCheck is_cocycle(const Algebra& a, const Bimodule& im, const Cochain& c);

struct ExanBasis {
    std::vector<Cochain> exan;  // basis of ker d^2
    std::vector<Cochain> inner; // basis of im d^1
    std::size_t hh2_dim = 0;    // dim exan - dim inner
};

ExanBasis exan_basis(const Algebra& a, const Bimodule& im);

/// The twisted product table on I + A with (u,x)(v,y) = (uy + xv + C(x,y), xy),
/// with no cocycle check. Associativity of the result is equivalent to the
/// cocycle condition. The unit is (-C(1,1), 1_A), which is (0, 1_A) whenever
/// C(1,.) = 0 (in particular for every section-extracted cocycle).
Algebra twisted_product_algebra(const Algebra& a, const Bimodule& im, const Cochain& c);

/// Builds I +^C A. Refuses non-cocycles with the violating triple; the
/// result always passes validate_algebra.
ExtensionAlgebra build_extension(const Algebra& a, const Bimodule& im, const Cochain& c);

ValidationReport validate_extension(const ExtensionAlgebra& b);

/// The quotient algebra A = B/i(I), derived deterministically from the
/// projection (echelon preimages).
Algebra quotient_algebra(const ExtensionAlgebra& b);

/// Deterministic section of the projection: echelon preimages corrected so
/// s(1) = 1. Nonzero seeds add a deterministic perturbation by a map into
/// the ideal, giving genuinely different sections for independence tests.
Section choose_section(const ExtensionAlgebra& b, unsigned seed = 0);

struct ExtractedCocycle {
    Algebra base;     // A
    Bimodule induced; // section-independent bimodule structure on I
    Cochain cocycle;  // C(x,y) = s(x)s(y) - s(xy) in I-coordinates
};

ExtractedCocycle extract_cocycle(const ExtensionAlgebra& b, const Section& s);

struct RebuiltIsomorphism {
    Matrix map{Field::rationals(), 0, 0}; // phi: B -> I +^C A, x -> (x - sp(x), p(x))
    ExtensionAlgebra target;
};

/// Rebuilds B as a twisted product and verifies phi is a unital algebra
/// isomorphism making the extension diagram commute. Verification failure
/// throws InternalError: it cannot happen for a valid extension.
RebuiltIsomorphism rebuild_isomorphism(const ExtensionAlgebra& b, const Section& s);

enum class EquivMode { strict, inner };

struct EquivResult {
    bool equivalent = false;
    std::optional<Cochain> witness; // phi with d^1(phi) = c1 - c2, inner mode
};

/// strict: entrywise equality (the paper's f(u,x) = (u,x) reading).
/// inner: c1 - c2 is a coboundary, with witness.
EquivResult equiv(const Algebra& a, const Bimodule& im, const Cochain& c1, const Cochain& c2,
                  EquivMode mode);

/// Subtracts the coboundary of x -> x.C(1,1), producing the inner-equivalent
/// cocycle with C(1,.) = C(.,1) = 0 (the form every unital section extracts).
Cochain normalize_cocycle(const Algebra& a, const Bimodule& im, const Cochain& c);

enum class Side { left, right };

/// The center action (zC)(x,y) = z.C(x,y) / (Cz)(x,y) = C(x,y).z.
/// Requires z central and c a cocycle; the result is again a cocycle.
Cochain caction(const Algebra& a, const Bimodule& im, const Vector& z, const Cochain& c, Side side);

struct QuotientExtension {
    ExtensionAlgebra quotient;          // D^C, built canonically from the zero cocycle
    std::vector<Vector> ideal_closure;  // basis of J in I-coordinates
    Matrix ideal_projection{Field::rationals(), 0, 0}; // I -> I/J coordinates
    Matrix algebra_map{Field::rationals(), 0, 0};      // q: B^C -> D^C
};

/// D^C = B^C / J for J the smallest two-sided ideal containing Im(C).
/// Requires a canonically built extension carrying its cocycle. Verifies the
/// induced product is untwisted and the extension diagram over id_A commutes.
QuotientExtension quotient_extension(const ExtensionAlgebra& b);

} // namespace exanlab
