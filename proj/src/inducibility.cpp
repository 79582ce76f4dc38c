#include "rbx/inducibility.hpp"

#include "rbx/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace rbx {

namespace {

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
    Matrix out(m.field(), rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            out(r, c) = m(r0 + r, c0 + c);
        }
    }
    return out;
}

Matrix invert_or_throw(const Matrix& m, const std::string& what) {
    auto inv = inverse(m);
    if (!inv) {
        throw InvalidArgument(what + " is not invertible");
    }
    return *inv;
}

struct AdaptedBasis {
    Matrix basis;
    Matrix inverse;
};

AdaptedBasis adapted_basis(const Extension& x, const Matrix& s) {
    Matrix b = s.hstack(x.i);
    return AdaptedBasis{b, invert_or_throw(b, "[s | i]")};
}

std::string pair_name(const char* which, std::size_t a, std::size_t b) {
    return std::string(which) + " on (e" + std::to_string(a) + ", e" + std::to_string(b) + ")";
}

} // namespace

AutomorphismPair compose(const AutomorphismPair& a, const AutomorphismPair& b) {
    return AutomorphismPair{a.beta * b.beta, a.alpha * b.alpha};
}

AutomorphismPair inverse(const AutomorphismPair& a) {
    return AutomorphismPair{invert_or_throw(a.beta, "beta"), invert_or_throw(a.alpha, "alpha")};
}

AutomorphismPair identity_pair(const RBLieAlgebra& g, const RBLieAlgebra& h) {
    return AutomorphismPair{Matrix::identity(h.field(), h.dim()), Matrix::identity(g.field(), g.dim())};
}

void require_automorphism_pair(const RBLieAlgebra& g, const RBLieAlgebra& h, const AutomorphismPair& pair) {
    if (!(pair.beta.field() == h.field()) || !(pair.alpha.field() == g.field())) {
        throw DimensionMismatch("automorphism pair over the wrong field");
    }
    if (!is_rb_automorphism(h, pair.beta)) {
        throw InvalidArgument("beta is not an RB automorphism of h");
    }
    if (!is_rb_automorphism(g, pair.alpha)) {
        throw InvalidArgument("alpha is not an RB automorphism of g");
    }
}

bool preserves_h(const Extension& x, const Matrix& gamma) {
    return column_span_contains(x.i, gamma * x.i);
}

AutomorphismPair tau(const Extension& x, const Matrix& gamma) { return tau(x, canonical_section(x), gamma); }

AutomorphismPair tau(const Extension& x, const Matrix& section, const Matrix& gamma) {
    if (!is_rb_automorphism(x.e, gamma)) {
        throw InvalidArgument("gamma is not an RB automorphism of e");
    }
    if (!preserves_h(x, gamma)) {
        throw InvalidArgument("gamma does not preserve the image of i");
    }
    const std::size_t n = x.g.dim();
    const std::size_t m = x.h.dim();
    AdaptedBasis b = adapted_basis(x, section);
    Matrix k = b.inverse * gamma * b.basis;
    return AutomorphismPair{block(k, n, n, m, m), block(k, 0, 0, n, n)};
}

NonAbelianCocycle transform_cocycle(const NonAbelianCocycle& c, const AutomorphismPair& pair) {
    const std::size_t n = c.g.dim();
    const Matrix ainv = invert_or_throw(pair.alpha, "alpha");
    const Matrix binv = invert_or_throw(pair.beta, "beta");
    NonAbelianCocycle out = c;
    for (std::size_t k = 0; k < c.chi.tuples().size(); ++k) {
        const Tuple& t = c.chi.tuples()[k];
        out.chi.set_value(k, pair.beta.apply(c.chi.eval({ainv.column(t[0]), ainv.column(t[1])})));
    }
    for (std::size_t a = 0; a < n; ++a) {
        out.psi[a] = pair.beta * c.psi_of(ainv.column(a)) * binv;
    }
    out.phi = pair.beta * c.phi * ainv;
    return out;
}

Diagnosis verify_inducibility_witness(const Extension& x, const Matrix& s, const AutomorphismPair& pair,
                                      const Matrix& lambda) {
    const std::size_t n = x.g.dim();
    const std::size_t m = x.h.dim();
    if (lambda.rows() != m || lambda.cols() != n || !(lambda.field() == x.field())) {
        throw DimensionMismatch("lambda must be " + std::to_string(m) + "x" + std::to_string(n));
    }
    const NonAbelianCocycle c = extract_cocycle(x, s);
    const LieAlgebra& hl = x.h.lie;
    const Matrix& beta = pair.beta;
    const Matrix& alpha = pair.alpha;
    for (std::size_t a = 0; a < n; ++a) {
        const Matrix lhs = beta * c.psi[a] - c.psi_of(alpha.column(a)) * beta;
        const Matrix rhs = hl.ad(lambda.column(a)) * beta;
        if (!(lhs == rhs)) {
            return Diagnosis::fail("(I)", "x=e" + std::to_string(a));
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const Vector ax = alpha.column(a);
            const Vector ay = alpha.column(b);
            const Vector lx = lambda.column(a);
            const Vector ly = lambda.column(b);
            Vector lhs = beta.apply(c.chi.eval_basis({a, b})) - c.chi.eval({ax, ay});
            Vector rhs = c.psi_of(ax).apply(ly) - c.psi_of(ay).apply(lx) -
                         lambda.apply(x.g.lie.bracket_basis(a, b)) + hl.bracket(lx, ly);
            if (lhs != rhs) {
                return Diagnosis::fail("(II)", pair_name("chi", a, b));
            }
        }
    }
    if (!(beta * c.phi - c.phi * alpha == x.h.op * lambda - lambda * x.g.op)) {
        return Diagnosis::fail("(III)", "beta Phi - Phi alpha differs from S lambda - lambda T");
    }
    return Diagnosis::pass();
}

Matrix lift_automorphism(const Extension& x, const Matrix& s, const AutomorphismPair& pair, const Matrix& lambda) {
    Diagnosis d = verify_inducibility_witness(x, s, pair, lambda);
    if (!d) {
        throw InvalidArgument("lambda fails condition " + d.condition + ": " + d.detail);
    }
    AdaptedBasis b = adapted_basis(x, s);
    Matrix images = (x.i * lambda + s * pair.alpha).hstack(x.i * pair.beta);
    return images * b.inverse;
}

Matrix induced_witness(const Extension& x, const Matrix& s, const Matrix& gamma) {
    const std::size_t n = x.g.dim();
    const std::size_t m = x.h.dim();
    AdaptedBasis b = adapted_basis(x, s);
    Matrix k = b.inverse * gamma * b.basis;
    return block(k, n, 0, m, n);
}

InducibilityResult decide_inducible(const Extension& x, const AutomorphismPair& pair) {
    require_automorphism_pair(x.g, x.h, pair);
    const Matrix s = canonical_section(x);
    const NonAbelianCocycle c = extract_cocycle(x, s);
    CocycleEquivalence r = solve_cocycle_equivalence(transform_cocycle(c, pair), c);
    InducibilityResult out;
    out.verdict = r.verdict;
    out.failing_condition = r.failing_condition;
    if (r.verdict != Verdict::Yes) {
        return out;
    }
    Matrix lambda = *r.phi * pair.alpha;
    Diagnosis d = verify_inducibility_witness(x, s, pair, lambda);
    if (!d) {
        throw std::logic_error("witness from cocycle equivalence fails " + d.condition);
    }
    out.gamma = lift_automorphism(x, s, pair, lambda);
    out.lambda = std::move(lambda);
    return out;
}

Verdict wells_is_trivial(const Extension& x, const AutomorphismPair& pair) {
    return wells_is_trivial(x, canonical_section(x), pair);
}

Verdict wells_is_trivial(const Extension& x, const Matrix& section, const AutomorphismPair& pair) {
    require_automorphism_pair(x.g, x.h, pair);
    const NonAbelianCocycle c = extract_cocycle(x, section);
    return solve_cocycle_equivalence(transform_cocycle(c, pair), c).verdict;
}

Verdict wells_restricted_g(const Extension& x, const Matrix& alpha) {
    return wells_is_trivial(x, AutomorphismPair{Matrix::identity(x.field(), x.h.dim()), alpha});
}

Verdict wells_restricted_h(const Extension& x, const Matrix& beta) {
    return wells_is_trivial(x, AutomorphismPair{beta, Matrix::identity(x.field(), x.g.dim())});
}

std::uint64_t aut_h_candidates(const Extension& x) {
    if (!x.field().is_prime()) {
        throw InvalidArgument("automorphism enumeration needs a prime field");
    }
    const std::uint64_t n = x.g.dim();
    const std::uint64_t m = x.h.dim();
    return saturating_power(x.field().modulus(), n * n + m * m + m * n);
}

std::vector<Matrix> enumerate_aut_h(const Extension& x, std::uint64_t budget) {
    const std::uint64_t required = aut_h_candidates(x);
    if (required > budget) {
        throw BudgetExceeded("enumerating Aut_h of a " + std::to_string(x.e.dim()) + "-dimensional extension over " +
                                 x.field().describe(),
                             required, budget);
    }
    const Field& f = x.field();
    const std::size_t n = x.g.dim();
    const std::size_t m = x.h.dim();
    AdaptedBasis b = adapted_basis(x, canonical_section(x));
    std::vector<Matrix> out;
    for_each_matrix(f, 1, n * n + m * m + m * n, [&](const Matrix& digits) {
        auto d = digits.entries();
        Matrix alpha(f, n, n);
        Matrix beta(f, m, m);
        Matrix lambda(f, m, n);
        std::size_t pos = 0;
        for (auto& v : alpha.entries()) {
            v = d[pos++];
        }
        for (auto& v : beta.entries()) {
            v = d[pos++];
        }
        for (auto& v : lambda.entries()) {
            v = d[pos++];
        }
        if (rank(alpha) != n || rank(beta) != m) {
            return true;
        }
        Matrix k(f, n + m, n + m);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                k(r, c) = alpha(r, c);
            }
        }
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                k(n + r, c) = lambda(r, c);
            }
            for (std::size_t c = 0; c < m; ++c) {
                k(n + r, n + c) = beta(r, c);
            }
        }
        Matrix gamma = b.basis * k * b.inverse;
        if (x.e.op * gamma == gamma * x.e.op && preserves_bracket(x.e.lie, x.e.lie, gamma)) {
            out.push_back(std::move(gamma));
        }
        return true;
    });
    return out;
}

bool ExactnessReport::passed() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

namespace {

template <typename T>
bool contains(const std::vector<T>& v, const T& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

template <typename T>
void insert_unique(std::vector<T>& v, const T& x) {
    if (!contains(v, x)) {
        v.push_back(x);
    }
}

} // namespace

ExactnessReport check_wells_exactness(const Extension& x, std::uint64_t budget) {
    Diagnosis valid = validate_extension(x);
    if (!valid) {
        throw InvalidArgument("not an extension: " + valid.condition + " " + valid.detail);
    }
    ExactnessReport rep;
    const Field& f = x.field();
    const Matrix s = canonical_section(x);
    const Matrix id_g = Matrix::identity(f, x.g.dim());
    const Matrix id_h = Matrix::identity(f, x.h.dim());
    const AutomorphismPair id_pair{id_h, id_g};
    rep.aut_g = enumerate_rb_automorphisms(x.g, budget);
    rep.aut_hs = enumerate_rb_automorphisms(x.h, budget);
    rep.aut_h = enumerate_aut_h(x, budget);

    auto add = [&rep](std::string name, bool passed, std::string detail = {}) {
        rep.assertions.push_back(Assertion{std::move(name), passed, std::move(detail)});
    };

    bool lands = true;
    bool witnesses = true;
    bool lifts = true;
    for (const Matrix& gamma : rep.aut_h) {
        AutomorphismPair t = tau(x, s, gamma);
        lands = lands && is_rb_automorphism(x.h, t.beta) && is_rb_automorphism(x.g, t.alpha);
        Matrix lambda = induced_witness(x, s, gamma);
        witnesses = witnesses && verify_inducibility_witness(x, s, t, lambda).ok;
        lifts = lifts && lift_automorphism(x, s, t, lambda) == gamma;
        rep.taus.push_back(std::move(t));
    }
    add("tau lands in Aut(h_S) x Aut(g_T)", lands);
    add("induced witness satisfies (I)-(III)", witnesses);
    add("lifting the induced witness recovers gamma", lifts);

    bool hom = true;
    for (std::size_t a = 0; a < rep.aut_h.size() && hom; ++a) {
        for (std::size_t b = 0; b < rep.aut_h.size() && hom; ++b) {
            hom = tau(x, s, rep.aut_h[a] * rep.aut_h[b]) == compose(rep.taus[a], rep.taus[b]);
        }
    }
    add("tau is a homomorphism", hom);

    // Aut^{h,g}: identity on i(h) and on the quotient.
    std::vector<Matrix> fixes_both;
    std::vector<std::size_t> fix_h;
    std::vector<std::size_t> fix_g;
    for (std::size_t k = 0; k < rep.aut_h.size(); ++k) {
        const Matrix& gamma = rep.aut_h[k];
        const bool on_h = gamma * x.i == x.i;
        const bool on_g = x.p * gamma == x.p;
        if (on_h) {
            fix_h.push_back(k);
        }
        if (on_g) {
            fix_g.push_back(k);
        }
        if (on_h && on_g) {
            fixes_both.push_back(gamma);
        }
        if (rep.taus[k] == id_pair) {
            rep.kernel.push_back(gamma);
        }
        insert_unique(rep.image, rep.taus[k]);
    }
    rep.fixing_h = fix_h.size();
    rep.fixing_g = fix_g.size();
    add("ker tau = Aut^{h,g}", rep.kernel == fixes_both,
        std::to_string(rep.kernel.size()) + " vs " + std::to_string(fixes_both.size()));
    add("|im tau| * |ker tau| = |Aut_h|", rep.image.size() * rep.kernel.size() == rep.aut_h.size(),
        std::to_string(rep.image.size()) + " * " + std::to_string(rep.kernel.size()) + " vs " +
            std::to_string(rep.aut_h.size()));

    bool decided = true;
    bool image_matches = true;
    std::string mismatch;
    for (const Matrix& beta : rep.aut_hs) {
        for (const Matrix& alpha : rep.aut_g) {
            const AutomorphismPair pair{beta, alpha};
            Verdict v = wells_is_trivial(x, s, pair);
            decided = decided && v != Verdict::Undecided;
            const bool in_image = contains(rep.image, pair);
            if ((v == Verdict::Yes) != in_image && image_matches) {
                image_matches = false;
                mismatch = in_image ? "image pair with nontrivial Wells class" : "trivial Wells class outside image";
            }
            if (v == Verdict::No) {
                rep.non_inducible.push_back(pair);
            }
        }
    }
    add("Wells verdicts decided", decided);
    add("im tau = {(beta, alpha) : W(beta, alpha) trivial}", image_matches, mismatch);

    std::vector<Matrix> image_g;
    std::size_t kernel_g = 0;
    for (std::size_t k : fix_h) {
        insert_unique(image_g, rep.taus[k].alpha);
        kernel_g += rep.taus[k].alpha == id_g ? 1 : 0;
    }
    bool g_matches = true;
    for (const Matrix& alpha : rep.aut_g) {
        Verdict v = wells_restricted_g(x, alpha);
        g_matches = g_matches && (v == Verdict::Yes) == contains(image_g, alpha);
    }
    add("ker tau_1 = Aut^{h,g}", kernel_g == fixes_both.size());
    add("im tau_1 = {alpha : W_g(alpha) trivial}", g_matches);
    add("|im tau_1| * |ker tau_1| = |Aut^h|", image_g.size() * kernel_g == fix_h.size());

    std::vector<Matrix> image_h;
    std::size_t kernel_h = 0;
    for (std::size_t k : fix_g) {
        insert_unique(image_h, rep.taus[k].beta);
        kernel_h += rep.taus[k].beta == id_h ? 1 : 0;
    }
    bool h_matches = true;
    for (const Matrix& beta : rep.aut_hs) {
        Verdict v = wells_restricted_h(x, beta);
        h_matches = h_matches && (v == Verdict::Yes) == contains(image_h, beta);
    }
    add("ker tau_2 = Aut^{h,g}", kernel_h == fixes_both.size());
    add("im tau_2 = {beta : W_h(beta) trivial}", h_matches);
    add("|im tau_2| * |ker tau_2| = |Aut^g|", image_h.size() * kernel_h == fix_g.size());
    return rep;
}

} // namespace rbx
