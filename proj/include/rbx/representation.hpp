#pragma once

#include "rbx/lie.hpp"

#include <optional>
#include <vector>

namespace rbx {

/// A representation h_S of g_T: action matrices psi_{e_i} (one per basis
/// vector of g) and the operator S. The optional bracket on h lets the same
/// type carry the non-abelian setting; absent means zero.
struct Representation {
    RBLieAlgebra base;
    std::size_t hdim = 0;
    std::vector<Matrix> action;
    Matrix s_op;
    std::optional<LieAlgebra> h_bracket;

    const Field& field() const { return base.field(); }
    std::size_t gdim() const { return base.dim(); }
    /// psi_x for an arbitrary x, by linearity.
    Matrix psi(const Vector& x) const;
    bool h_is_abelian() const { return !h_bracket || h_bracket->is_abelian(); }
    /// The Lie algebra on h (abelian when no bracket is attached).
    LieAlgebra h_lie() const;

    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Throws DimensionMismatch unless all shapes and fields agree.
void check_shapes(const Representation& r);

/// psi_[e_i, e_j] = [psi_{e_i}, psi_{e_j}] on basis pairs i < j.
bool check_module_homomorphism(const Representation& r);

/// psi_{T x} S = S (psi_{T x} + psi_x S) on every basis vector x.
bool check_rb_compatibility(const Representation& r);

/// Compatibility, plus the module property when h carries no bracket.
bool check_representation(const Representation& r);

Representation adjoint_representation(const RBLieAlgebra& a);

/// (psi^alpha)_x = psi_{alpha x}. Throws InvalidArgument unless alpha is an
/// automorphism of the base.
Representation pullback_action(const Representation& r, const Matrix& alpha);

/// g ⋉ h with operator T ⊕ S; g-coordinates first. Throws InvalidArgument when
/// h carries a nonzero bracket.
RBLieAlgebra semidirect_product(const Representation& r);

/// beta is invertible, commutes with S and preserves the h bracket.
bool is_h_automorphism(const Representation& r, const Matrix& beta);

/// beta psi_{e_i} = psi_{alpha e_i} beta for all i. Throws InvalidArgument
/// when beta or alpha is not an automorphism of its side.
bool check_compatible_pair(const Representation& r, const Matrix& beta, const Matrix& alpha);

} // namespace rbx
