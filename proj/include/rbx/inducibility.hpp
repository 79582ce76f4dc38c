#pragma once

#include "rbx/extension.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rbx {

/// (beta, alpha) in Aut(h_S) x Aut(g_T).
struct AutomorphismPair {
    Matrix beta;
    Matrix alpha;

    friend bool operator==(const AutomorphismPair&, const AutomorphismPair&) = default;
};

AutomorphismPair compose(const AutomorphismPair& a, const AutomorphismPair& b);
AutomorphismPair inverse(const AutomorphismPair& a);
AutomorphismPair identity_pair(const RBLieAlgebra& g, const RBLieAlgebra& h);

/// Throws InvalidArgument unless beta is an automorphism of h_S and alpha of g_T.
void require_automorphism_pair(const RBLieAlgebra& g, const RBLieAlgebra& h, const AutomorphismPair& pair);

/// gamma maps the image of i into itself.
bool preserves_h(const Extension& x, const Matrix& gamma);

/// (i^-1 gamma i, p gamma s). Throws InvalidArgument unless gamma is an RB
/// automorphism of e preserving the image of i.
AutomorphismPair tau(const Extension& x, const Matrix& gamma);
AutomorphismPair tau(const Extension& x, const Matrix& section, const Matrix& gamma);

/// chi'(x, y) = beta chi(alpha^-1 x, alpha^-1 y), psi'_x = beta psi_{alpha^-1 x} beta^-1,
/// Phi' = beta Phi alpha^-1.
NonAbelianCocycle transform_cocycle(const NonAbelianCocycle& c, const AutomorphismPair& pair);

/// Conditions (I)-(III) for lambda against the cocycle extracted through s.
Diagnosis verify_inducibility_witness(const Extension& x, const Matrix& s, const AutomorphismPair& pair,
                                      const Matrix& lambda);

/// gamma(h + s x) = (beta h + lambda x) + s alpha x, as a matrix on e.
/// Throws InvalidArgument if the witness fails.
Matrix lift_automorphism(const Extension& x, const Matrix& s, const AutomorphismPair& pair, const Matrix& lambda);

/// lambda = i^-1 (gamma s - s alpha) with alpha = p gamma s.
Matrix induced_witness(const Extension& x, const Matrix& s, const Matrix& gamma);

struct InducibilityResult {
    Verdict verdict = Verdict::Undecided;
    std::optional<Matrix> gamma;
    std::optional<Matrix> lambda;
    std::string failing_condition;
};

/// Equivalence of the transformed cocycle with the original; on success the
/// witness lambda = phi alpha is lifted and verified.
InducibilityResult decide_inducible(const Extension& x, const AutomorphismPair& pair);

/// Triviality of the Wells class: Yes means trivial.
Verdict wells_is_trivial(const Extension& x, const AutomorphismPair& pair);
Verdict wells_is_trivial(const Extension& x, const Matrix& section, const AutomorphismPair& pair);
/// The pair (id, alpha).
Verdict wells_restricted_g(const Extension& x, const Matrix& alpha);
/// The pair (beta, id).
Verdict wells_restricted_h(const Extension& x, const Matrix& beta);

/// Number of block-triangular candidates scanned by enumerate_aut_h.
std::uint64_t aut_h_candidates(const Extension& x);

/// Aut_h(e_U) over F_p: all RB automorphisms of e preserving the image of i,
/// scanned as block-triangular matrices in the basis [s | i].
std::vector<Matrix> enumerate_aut_h(const Extension& x, std::uint64_t budget = kDefaultBudget);

struct Assertion {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ExactnessReport {
    std::vector<Matrix> aut_h;
    std::vector<AutomorphismPair> taus;
    std::vector<Matrix> kernel;
    std::size_t fixing_h = 0;
    std::size_t fixing_g = 0;
    std::vector<Matrix> aut_g;
    std::vector<Matrix> aut_hs;
    std::vector<AutomorphismPair> image;
    std::vector<AutomorphismPair> non_inducible;
    std::vector<Assertion> assertions;

    bool passed() const;
};

/// Enumerates Aut_h(e_U), Aut(g_T), Aut(h_S) and checks both Wells exact
/// sequences against the Wells verdicts. Throws BudgetExceeded.
ExactnessReport check_wells_exactness(const Extension& x, std::uint64_t budget = kDefaultBudget);

} // namespace rbx
