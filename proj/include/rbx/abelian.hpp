#pragma once

#include "rbx/inducibility.hpp"

#include <map>
#include <string>

namespace rbx {

/// An extension with abelian h, the representation it induces on h and the
/// 2-cocycle (chi, Phi) read off through a section.
struct AbelianExtensionView {
    Extension ext;
    Matrix section;
    Representation rep;
    RBCochain cocycle;
};

/// Throws InvalidArgument for an invalid extension or a nonzero bracket on h.
AbelianExtensionView abelianize(const Extension& x);
AbelianExtensionView abelianize(const Extension& x, const Matrix& section);

/// Coordinates of [(chi, Phi)] in the complement_reps basis of H^2.
Vector classify_abelian(const AbelianExtensionView& v);

/// beta psi_x = psi_{alpha x} beta.
bool is_compatible_pair(const AbelianExtensionView& v, const AutomorphismPair& pair);

/// Every compatible pair over F_p. Throws BudgetExceeded.
std::vector<AutomorphismPair> compatible_pairs(const AbelianExtensionView& v, std::uint64_t budget = kDefaultBudget);

/// Compatibility first ("C_psi"), then the linear lambda system; never Undecided.
InducibilityResult decide_inducible_abelian(const AbelianExtensionView& v, const AutomorphismPair& pair);

/// Class of (chi', Phi') - (chi, Phi). Throws InvalidArgument for an incompatible pair.
Vector abelian_wells_class(const AbelianExtensionView& v, const AutomorphismPair& pair);

/// psi_x d y - psi_y d x - d[x, y] = 0 and S d = d T.
bool is_rb_derivation(const Representation& r, const Matrix& d);

/// i^-1 (gamma s - s). Throws InvalidArgument unless gamma is an automorphism
/// preserving h with tau(gamma) = (id, id).
Matrix aut_to_derivation(const AbelianExtensionView& v, const Matrix& gamma);

/// [s + i d | i] [s | i]^-1. Throws InvalidArgument unless d is a derivation.
Matrix derivation_to_aut(const AbelianExtensionView& v, const Matrix& d);

struct AbelianReport {
    std::map<std::string, std::uint64_t> counts;
    std::vector<Assertion> assertions;

    bool passed() const;
};

/// t(beta, alpha) = [s alpha | i beta] [s | i]^-1 against Aut_h. Throws
/// InvalidArgument when (chi, Phi) is nonzero under the view's section.
AbelianReport check_split_semidirect(const AbelianExtensionView& v, std::uint64_t budget = kDefaultBudget);

/// im tau inside C_psi, im tau = ker of the Wells class, ker tau = Der, and
/// agreement with the non-abelian verdicts.
AbelianReport check_abelian_wells_sequence(const AbelianExtensionView& v, std::uint64_t budget = kDefaultBudget);

} // namespace rbx
