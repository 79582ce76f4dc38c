#pragma once

#include "support/random.hpp"

#include "rbx/cohomology.hpp"
#include "rbx/extension.hpp"
#include "rbx/lie.hpp"
#include "rbx/representation.hpp"

namespace rbx::testing {

LieAlgebra n2_algebra(const Field& f);
LieAlgebra heisenberg_algebra(const Field& f);
LieAlgebra sl2_algebra(const Field& f);

/// [x, y]' = P^-1 [P x, P y] and T' = P^-1 T P.
RBLieAlgebra change_basis(const RBLieAlgebra& a, const Matrix& p);

/// Random Rota-Baxter Lie algebra of dimension at most max_dim (1..3), drawn
/// from families with known operators and then put in a random basis.
RBLieAlgebra random_rb_algebra(Rng& rng, const Field& f, std::size_t max_dim);

/// Random valid representation with abelian h of dimension at most max_hdim.
Representation random_module(Rng& rng, const Field& f, std::size_t max_gdim, std::size_t max_hdim);

/// Conjugate psi and S by an invertible Q on h.
Representation change_h_basis(const Representation& r, const Matrix& q);

Representation direct_sum(const Representation& a, const Representation& b);

Cochain random_cochain(Rng& rng, const Representation& r, std::size_t degree);
RBCochain random_rb_cochain(Rng& rng, const Representation& r, std::size_t degree);

/// The cocycle c' with c ~ c' through phi (a change of section by -i phi).
NonAbelianCocycle equivalence_move(const NonAbelianCocycle& c, const Matrix& phi);

/// Random valid non-abelian cocycle with dim g <= max_gdim, dim h <= max_hdim:
/// abelian cocycles from Z^2, one-dimensional g acting by derivations, or the
/// zero cocycle, followed by random equivalence moves.
NonAbelianCocycle random_cocycle(Rng& rng, const Field& f, std::size_t max_gdim, std::size_t max_hdim);

/// The extension built from a random cocycle, then put in a random basis of e.
Extension random_extension(Rng& rng, const Field& f, std::size_t max_gdim, std::size_t max_hdim);

/// Adds a random nonzero change to one entry of chi, psi or Phi.
NonAbelianCocycle perturb(Rng& rng, const NonAbelianCocycle& c);

} // namespace rbx::testing
