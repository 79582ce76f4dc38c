#pragma once

#include "rbx/cohomology.hpp"
#include "rbx/lie.hpp"
#include "rbx/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rbx {

/// A non-abelian 2-cocycle (chi, psi, Phi) of g_T with values in h_S.
struct NonAbelianCocycle {
    RBLieAlgebra g;
    RBLieAlgebra h;
    Cochain chi;
    std::vector<Matrix> psi;
    Matrix phi;

    const Field& field() const { return g.field(); }
    Matrix psi_of(const Vector& x) const;
    /// psi and S packaged as a representation carrying the h bracket.
    Representation representation() const;
    /// The zero cocycle over (g_T, h_S).
    static NonAbelianCocycle zero(const RBLieAlgebra& g, const RBLieAlgebra& h);

    friend bool operator==(const NonAbelianCocycle&, const NonAbelianCocycle&) = default;
};

/// Outcome of a validation: the first failing check and where it failed.
struct Diagnosis {
    bool ok = true;
    std::string condition;
    std::string detail;

    static Diagnosis pass() { return {}; }
    static Diagnosis fail(std::string condition, std::string detail) {
        return {false, std::move(condition), std::move(detail)};
    }
    explicit operator bool() const { return ok; }
};

/// Checks shapes and both algebras, psi landing in Der(h), then (I)-(IV) in
/// order. condition is "g", "h", "Der", "(I)", "(II)", "(III)" or "(IV)".
/// Throws DimensionMismatch on incoherent shapes.
Diagnosis validate_cocycle(const NonAbelianCocycle& c);

/// 0 -> h_S -i-> e_U -p-> g_T -> 0.
struct Extension {
    RBLieAlgebra e;
    Matrix i;
    Matrix p;
    RBLieAlgebra g;
    RBLieAlgebra h;

    const Field& field() const { return e.field(); }
    friend bool operator==(const Extension&, const Extension&) = default;
};

/// Every structural requirement of a short exact sequence of Rota-Baxter Lie
/// algebras, reporting the first failure.
Diagnosis validate_extension(const Extension& x);

/// p s = id, solved column by column.
Matrix canonical_section(const Extension& x);

/// h-coordinates of a vector in the image of i. Throws Error otherwise.
Vector pull_back(const Extension& x, const Vector& v);

/// chi(x, y) = [s x, s y] - s[x, y], psi_x h = [s x, h], Phi(x) = U s x - s T x.
/// Throws InvalidArgument when p s != id.
NonAbelianCocycle extract_cocycle(const Extension& x, const Matrix& s);

struct BuiltExtension {
    Extension extension;
    Matrix section;
};

/// g ⊕ h with g-coordinates first, without validating c.
BuiltExtension assemble_extension(const NonAbelianCocycle& c);

/// Validates c first; throws InvalidArgument naming the failing condition.
BuiltExtension build_extension(const NonAbelianCocycle& c);

/// The equations relating c1 and c2 through phi: g -> h, reported as
/// "(I)", "(II)" or "(III)".
Diagnosis verify_cocycle_equivalence(const NonAbelianCocycle& c1, const NonAbelianCocycle& c2, const Matrix& phi);

enum class Verdict { Yes, No, Undecided };

struct CocycleEquivalence {
    Verdict verdict = Verdict::Undecided;
    std::optional<Matrix> phi;
    /// For a negative verdict, the equation shown to have no solution.
    std::string failing_condition;
};

/// Decides c1 ~ c2 exactly. (I) and (III) are linear in phi; every solution of
/// (I) differs from a particular one by a map into the centre of h, on which
/// the bracket term of (II) is constant, so (II) is affine on that family.
/// The verdict is never Undecided.
CocycleEquivalence solve_cocycle_equivalence(const NonAbelianCocycle& c1, const NonAbelianCocycle& c2);

struct ExtensionEquivalence {
    Verdict verdict = Verdict::Undecided;
    std::optional<Matrix> map;
    std::optional<Matrix> phi;
    std::string failing_condition;
};

/// True when m: e1 -> e2 is an RB isomorphism with m i1 = i2 and p2 m = p1.
bool is_extension_map(const Extension& x1, const Extension& x2, const Matrix& m);

/// Reduces to cocycle equivalence through canonical sections and returns the
/// verified diagram map. Throws InvalidArgument if g or h differ.
ExtensionEquivalence check_extension_equivalence(const Extension& x1, const Extension& x2);

} // namespace rbx
