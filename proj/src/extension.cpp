#include "rbx/extension.hpp"

#include "rbx/errors.hpp"

#include <stdexcept>

namespace rbx {

Matrix NonAbelianCocycle::psi_of(const Vector& x) const {
    Matrix m(field(), h.dim(), h.dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) {
            m += x[i] * psi.at(i);
        }
    }
    return m;
}

Representation NonAbelianCocycle::representation() const {
    return Representation{g, h.dim(), psi, h.op, h.lie};
}

NonAbelianCocycle NonAbelianCocycle::zero(const RBLieAlgebra& g, const RBLieAlgebra& h) {
    const Field& f = g.field();
    return NonAbelianCocycle{g, h, Cochain(f, g.dim(), h.dim(), 2),
                             std::vector<Matrix>(g.dim(), Matrix(f, h.dim(), h.dim())), Matrix(f, h.dim(), g.dim())};
}

namespace {

std::string basis_name(char letter, std::size_t k) { return std::string(1, letter) + std::to_string(k); }

void require_square(const Matrix& m, std::size_t n, const Field& f, const std::string& what) {
    if (m.rows() != n || m.cols() != n || !(m.field() == f)) {
        throw DimensionMismatch(what + " must be " + std::to_string(n) + "x" + std::to_string(n));
    }
}

void check_cocycle_shapes(const NonAbelianCocycle& c) {
    const Field& f = c.field();
    const std::size_t n = c.g.dim();
    const std::size_t m = c.h.dim();
    if (!(c.h.field() == f)) {
        throw DimensionMismatch("g and h are over different fields");
    }
    require_square(c.g.op, n, f, "T");
    require_square(c.h.op, m, f, "S");
    if (c.chi.degree() != 2 || c.chi.gdim() != n || c.chi.hdim() != m || !(c.chi.field() == f)) {
        throw DimensionMismatch("chi must be a degree-2 cochain from g to h");
    }
    if (c.psi.size() != n) {
        throw DimensionMismatch("expected " + std::to_string(n) + " psi matrices, got " + std::to_string(c.psi.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        require_square(c.psi[i], m, f, "psi_" + basis_name('e', i));
    }
    if (c.phi.rows() != m || c.phi.cols() != n || !(c.phi.field() == f)) {
        throw DimensionMismatch("Phi must be " + std::to_string(m) + "x" + std::to_string(n));
    }
}

bool is_derivation_of(const LieAlgebra& l, const Matrix& d) {
    const std::size_t m = l.dim();
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t j = k + 1; j < m; ++j) {
            Vector lhs = d.apply(l.bracket_basis(k, j));
            Vector rhs = l.bracket(d.column(k), unit_vector(l.field(), m, j)) +
                         l.bracket(unit_vector(l.field(), m, k), d.column(j));
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

Diagnosis check_rb_algebra(const RBLieAlgebra& a, const std::string& name) {
    if (!check_jacobi(a.lie)) {
        return Diagnosis::fail(name, "the bracket on " + name + " is not a Lie bracket");
    }
    if (!check_rota_baxter(a.lie, a.op)) {
        return Diagnosis::fail(name, "the operator on " + name + " is not Rota-Baxter");
    }
    return Diagnosis::pass();
}

} // namespace

Diagnosis validate_cocycle(const NonAbelianCocycle& c) {
    check_cocycle_shapes(c);
    if (auto d = check_rb_algebra(c.g, "g"); !d) {
        return d;
    }
    if (auto d = check_rb_algebra(c.h, "h"); !d) {
        return d;
    }
    const Field& f = c.field();
    const std::size_t n = c.g.dim();
    const std::size_t m = c.h.dim();
    const LieAlgebra& gl = c.g.lie;
    const LieAlgebra& hl = c.h.lie;
    const Matrix& t = c.g.op;
    const Matrix& s = c.h.op;
    auto e = [&](std::size_t i) { return unit_vector(f, n, i); };
    auto fh = [&](std::size_t k) { return unit_vector(f, m, k); };

    for (std::size_t i = 0; i < n; ++i) {
        if (!is_derivation_of(hl, c.psi[i])) {
            return Diagnosis::fail("Der", "psi_" + basis_name('e', i) + " is not a derivation of h");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Matrix lhs = c.psi[i] * c.psi[j] - c.psi[j] * c.psi[i] - c.psi_of(gl.bracket_basis(i, j));
            const Vector chi = c.chi.eval_basis({i, j});
            for (std::size_t k = 0; k < m; ++k) {
                if (lhs.column(k) != hl.bracket(chi, fh(k))) {
                    return Diagnosis::fail("(I)", "x=" + basis_name('e', i) + ", y=" + basis_name('e', j) +
                                                      ", h=" + basis_name('f', k));
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector sum = c.psi[i].apply(c.chi.eval_basis({j, k})) + c.psi[j].apply(c.chi.eval_basis({k, i})) +
                             c.psi[k].apply(c.chi.eval_basis({i, j}));
                sum -= c.chi.eval({gl.bracket_basis(i, j), e(k)});
                sum -= c.chi.eval({gl.bracket_basis(j, k), e(i)});
                sum -= c.chi.eval({gl.bracket_basis(k, i), e(j)});
                if (!is_zero(sum)) {
                    return Diagnosis::fail("(II)", "x=" + basis_name('e', i) + ", y=" + basis_name('e', j) +
                                                       ", z=" + basis_name('e', k));
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix ptx = c.psi_of(t.column(i));
        const Vector phx = c.phi.column(i);
        for (std::size_t k = 0; k < m; ++k) {
            const Vector sh = s.column(k);
            Vector lhs = ptx.apply(sh);
            Vector rhs = s.apply(c.psi[i].apply(sh) + ptx.column(k)) + s.apply(hl.bracket(phx, fh(k))) -
                         hl.bracket(phx, sh);
            if (lhs != rhs) {
                return Diagnosis::fail("(III)", "x=" + basis_name('e', i) + ", h=" + basis_name('f', k));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector tx = t.column(i);
            const Vector ty = t.column(j);
            const Vector px = c.phi.column(i);
            const Vector py = c.phi.column(j);
            Vector sum = c.chi.eval({tx, ty});
            sum -= s.apply(c.chi.eval({e(i), ty}) + c.chi.eval({tx, e(j)}));
            sum -= c.phi.apply(gl.bracket(e(i), ty) + gl.bracket(tx, e(j)));
            sum += c.psi_of(tx).apply(py) - c.psi_of(ty).apply(px);
            sum -= s.apply(c.psi[i].apply(py) - c.psi[j].apply(px));
            sum += hl.bracket(px, py);
            if (!is_zero(sum)) {
                return Diagnosis::fail("(IV)", "x=" + basis_name('e', i) + ", y=" + basis_name('e', j));
            }
        }
    }
    return Diagnosis::pass();
}

Diagnosis validate_extension(const Extension& x) {
    const Field& f = x.field();
    const std::size_t ne = x.e.dim();
    const std::size_t n = x.g.dim();
    const std::size_t m = x.h.dim();
    if (!(x.g.field() == f) || !(x.h.field() == f) || !(x.i.field() == f) || !(x.p.field() == f)) {
        return Diagnosis::fail("shape", "components are over different fields");
    }
    if (x.e.op.rows() != ne || x.e.op.cols() != ne || x.g.op.rows() != n || x.g.op.cols() != n ||
        x.h.op.rows() != m || x.h.op.cols() != m) {
        return Diagnosis::fail("shape", "an operator does not match its algebra's dimension");
    }
    if (ne != n + m) {
        return Diagnosis::fail("shape", "dim e = " + std::to_string(ne) + " but dim g + dim h = " +
                                            std::to_string(n + m));
    }
    if (x.i.rows() != ne || x.i.cols() != m) {
        return Diagnosis::fail("shape", "i must be " + std::to_string(ne) + "x" + std::to_string(m));
    }
    if (x.p.rows() != n || x.p.cols() != ne) {
        return Diagnosis::fail("shape", "p must be " + std::to_string(n) + "x" + std::to_string(ne));
    }
    if (auto d = check_rb_algebra(x.g, "g"); !d) {
        return d;
    }
    if (auto d = check_rb_algebra(x.h, "h"); !d) {
        return d;
    }
    if (!check_jacobi(x.e.lie)) {
        return Diagnosis::fail("jacobi", "the bracket on e is not a Lie bracket");
    }
    if (!check_rota_baxter(x.e.lie, x.e.op)) {
        return Diagnosis::fail("rota_baxter", "the operator on e is not Rota-Baxter");
    }
    if (rank(x.i) != m) {
        return Diagnosis::fail("injective", "i is not injective");
    }
    if (rank(x.p) != n) {
        return Diagnosis::fail("surjective", "p is not surjective");
    }
    if (!(x.p * x.i).is_zero()) {
        return Diagnosis::fail("exact", "p i is not zero");
    }
    if (!check_rb_morphism(x.h, x.e, x.i)) {
        return Diagnosis::fail("morphism_i", "i is not a Rota-Baxter Lie algebra morphism");
    }
    if (!check_rb_morphism(x.e, x.g, x.p)) {
        return Diagnosis::fail("morphism_p", "p is not a Rota-Baxter Lie algebra morphism");
    }
    return Diagnosis::pass();
}

Matrix canonical_section(const Extension& x) {
    const Field& f = x.field();
    const std::size_t n = x.g.dim();
    Matrix s(f, x.e.dim(), n);
    for (std::size_t k = 0; k < n; ++k) {
        auto sol = solve(x.p, unit_vector(f, n, k));
        if (!sol) {
            throw InvalidArgument("p is not surjective, no section exists");
        }
        s.set_column(k, sol->particular);
    }
    if (!(x.p * s == Matrix::identity(f, n))) {
        throw std::logic_error("computed section does not split p");
    }
    return s;
}

Vector pull_back(const Extension& x, const Vector& v) {
    auto sol = solve(x.i, v);
    if (!sol) {
        throw Error("vector is not in the image of i; the sequence is not exact");
    }
    return sol->particular;
}

NonAbelianCocycle extract_cocycle(const Extension& x, const Matrix& s) {
    const Field& f = x.field();
    const std::size_t n = x.g.dim();
    const std::size_t m = x.h.dim();
    if (s.rows() != x.e.dim() || s.cols() != n || !(x.p * s == Matrix::identity(f, n))) {
        throw InvalidArgument("section does not satisfy p s = id");
    }
    const LieAlgebra& el = x.e.lie;
    NonAbelianCocycle c = NonAbelianCocycle::zero(x.g, x.h);
    for (std::size_t k = 0; k < c.chi.tuples().size(); ++k) {
        const std::size_t a = c.chi.tuples()[k][0];
        const std::size_t b = c.chi.tuples()[k][1];
        c.chi.set_value(k, pull_back(x, el.bracket(s.column(a), s.column(b)) - s.apply(x.g.lie.bracket_basis(a, b))));
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t k = 0; k < m; ++k) {
            c.psi[a].set_column(k, pull_back(x, el.bracket(s.column(a), x.i.column(k))));
        }
        c.phi.set_column(a, pull_back(x, x.e.op.apply(s.column(a)) - s.apply(x.g.op.column(a))));
    }
    return c;
}

BuiltExtension assemble_extension(const NonAbelianCocycle& c) {
    check_cocycle_shapes(c);
    const Field& f = c.field();
    const std::size_t n = c.g.dim();
    const std::size_t m = c.h.dim();
    LieAlgebra e(f, n + m);
    auto set_pair = [&](std::size_t a, std::size_t b, std::size_t k, const Scalar& v) {
        e.set(a, b, k, v);
        e.set(b, a, k, -v);
    };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const Vector gb = c.g.lie.bracket_basis(a, b);
            const Vector chi = c.chi.eval_basis({a, b});
            for (std::size_t k = 0; k < n; ++k) {
                set_pair(a, b, k, gb[k]);
            }
            for (std::size_t k = 0; k < m; ++k) {
                set_pair(a, b, n + k, chi[k]);
            }
        }
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                set_pair(a, n + j, n + k, c.psi[a](k, j));
            }
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t l = j + 1; l < m; ++l) {
            const Vector hb = c.h.lie.bracket_basis(j, l);
            for (std::size_t k = 0; k < m; ++k) {
                set_pair(n + j, n + l, n + k, hb[k]);
            }
        }
    }
    Matrix u(f, n + m, n + m);
    Matrix i(f, n + m, m);
    Matrix p(f, n, n + m);
    Matrix s(f, n + m, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            u(a, b) = c.g.op(a, b);
        }
        for (std::size_t k = 0; k < m; ++k) {
            u(n + k, a) = c.phi(k, a);
        }
        p(a, a) = Scalar::one(f);
        s(a, a) = Scalar::one(f);
    }
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            u(n + k, n + j) = c.h.op(k, j);
        }
        i(n + j, j) = Scalar::one(f);
    }
    return BuiltExtension{Extension{RBLieAlgebra{std::move(e), std::move(u)}, std::move(i), std::move(p), c.g, c.h},
                          std::move(s)};
}

BuiltExtension build_extension(const NonAbelianCocycle& c) {
    if (Diagnosis d = validate_cocycle(c); !d) {
        throw InvalidArgument("not a non-abelian 2-cocycle: condition " + d.condition + " fails at " + d.detail);
    }
    return assemble_extension(c);
}

namespace {

void require_same_base(const NonAbelianCocycle& c1, const NonAbelianCocycle& c2) {
    check_cocycle_shapes(c1);
    check_cocycle_shapes(c2);
    if (!(c1.g == c2.g) || !(c1.h == c2.h)) {
        throw InvalidArgument("cocycles over different Rota-Baxter Lie algebras");
    }
}

// Left side minus right side of (II), stacked over pairs i < j.
Vector equation_two_residual(const NonAbelianCocycle& c1, const NonAbelianCocycle& c2, const Matrix& phi) {
    const std::size_t n = c1.g.dim();
    Vector out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector r = c1.chi.eval_basis({i, j}) - c2.chi.eval_basis({i, j});
            r -= c2.psi[i].apply(phi.column(j)) - c2.psi[j].apply(phi.column(i));
            r += phi.apply(c1.g.lie.bracket_basis(i, j));
            r -= c1.h.lie.bracket(phi.column(i), phi.column(j));
            out.insert(out.end(), r.begin(), r.end());
        }
    }
    return out;
}

} // namespace

Diagnosis verify_cocycle_equivalence(const NonAbelianCocycle& c1, const NonAbelianCocycle& c2, const Matrix& phi) {
    require_same_base(c1, c2);
    const std::size_t n = c1.g.dim();
    const std::size_t m = c1.h.dim();
    if (phi.rows() != m || phi.cols() != n || !(phi.field() == c1.field())) {
        throw DimensionMismatch("phi must be " + std::to_string(m) + "x" + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(c1.psi[i] - c2.psi[i] == c1.h.lie.ad(phi.column(i)))) {
            return Diagnosis::fail("(I)", "x=" + basis_name('e', i));
        }
    }
    if (!is_zero(equation_two_residual(c1, c2, phi))) {
        return Diagnosis::fail("(II)", "chi differs from the phi-twisted chi");
    }
    if (!(c1.phi - c2.phi == c1.h.op * phi - phi * c1.g.op)) {
        return Diagnosis::fail("(III)", "Phi differs from the phi-twisted Phi");
    }
    return Diagnosis::pass();
}

namespace {

// Unknown phi(a, b) sits at coordinate b * m + a.
Matrix unflatten_phi(const Field& f, std::size_t m, std::size_t n, const Vector& v) {
    Matrix phi(f, m, n);
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t a = 0; a < m; ++a) {
            phi(a, b) = v[b * m + a];
        }
    }
    return phi;
}

struct LinearSystem {
    std::vector<Vector> rows;
    Vector rhs;

    void add(Vector row, const Scalar& b) {
        rows.push_back(std::move(row));
        rhs.push_back(b);
    }
    std::optional<Solution> solve(const Field& f, std::size_t unknowns) const {
        Matrix a(f, rows.size(), unknowns);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < unknowns; ++c) {
                a(r, c) = rows[r][c];
            }
        }
        return rbx::solve(a, rhs);
    }
};

void add_equation_one(LinearSystem& sys, const NonAbelianCocycle& c1, const NonAbelianCocycle& c2) {
    const Field& f = c1.field();
    const std::size_t n = c1.g.dim();
    const std::size_t m = c1.h.dim();
    for (std::size_t b = 0; b < n; ++b) {
        const Matrix diff = c1.psi[b] - c2.psi[b];
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t l = 0; l < m; ++l) {
                Vector row = zero_vector(f, n * m);
                for (std::size_t a = 0; a < m; ++a) {
                    row[b * m + a] = c1.h.lie.c(a, k, l);
                }
                sys.add(std::move(row), diff(l, k));
            }
        }
    }
}

void add_equation_three(LinearSystem& sys, const NonAbelianCocycle& c1, const NonAbelianCocycle& c2) {
    const Field& f = c1.field();
    const std::size_t n = c1.g.dim();
    const std::size_t m = c1.h.dim();
    const Matrix diff = c1.phi - c2.phi;
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t l = 0; l < m; ++l) {
            Vector row = zero_vector(f, n * m);
            for (std::size_t a = 0; a < m; ++a) {
                row[b * m + a] += c1.h.op(l, a);
            }
            for (std::size_t cc = 0; cc < n; ++cc) {
                row[cc * m + l] -= c1.g.op(cc, b);
            }
            sys.add(std::move(row), diff(l, b));
        }
    }
}

} // namespace

CocycleEquivalence solve_cocycle_equivalence(const NonAbelianCocycle& c1, const NonAbelianCocycle& c2) {
    require_same_base(c1, c2);
    const Field& f = c1.field();
    const std::size_t n = c1.g.dim();
    const std::size_t m = c1.h.dim();
    const std::size_t unknowns = n * m;
    CocycleEquivalence out;
    out.verdict = Verdict::No;

    LinearSystem sys;
    add_equation_one(sys, c1, c2);
    if (!sys.solve(f, unknowns)) {
        out.failing_condition = "(I)";
        return out;
    }
    add_equation_three(sys, c1, c2);
    auto sol = sys.solve(f, unknowns);
    if (!sol) {
        out.failing_condition = "(III)";
        return out;
    }
    auto residual = [&](const Vector& v) { return equation_two_residual(c1, c2, unflatten_phi(f, m, n, v)); };
    const Vector r0 = residual(sol->particular);
    std::vector<Vector> directions;
    for (const Vector& k : sol->kernel) {
        Vector d = residual(sol->particular + k) - r0;
        if (residual(sol->particular - k) != r0 - d) {
            throw std::logic_error("equation (II) is not affine on the solutions of (I)");
        }
        directions.push_back(std::move(d));
    }
    Vector t;
    if (directions.empty()) {
        if (!is_zero(r0)) {
            out.failing_condition = "(II)";
            return out;
        }
    } else {
        auto coeffs = solve(Matrix::from_columns(f, r0.size(), directions), zero_vector(f, r0.size()) - r0);
        if (!coeffs) {
            out.failing_condition = "(II)";
            return out;
        }
        t = coeffs->particular;
    }
    Vector v = sol->particular;
    for (std::size_t k = 0; k < t.size(); ++k) {
        v += t[k] * sol->kernel[k];
    }
    Matrix phi = unflatten_phi(f, m, n, v);
    if (!verify_cocycle_equivalence(c1, c2, phi)) {
        throw std::logic_error("solution of the equivalence system failed verification");
    }
    out.verdict = Verdict::Yes;
    out.phi = std::move(phi);
    return out;
}

bool is_extension_map(const Extension& x1, const Extension& x2, const Matrix& m) {
    if (m.rows() != x2.e.dim() || m.cols() != x1.e.dim() || x1.e.dim() != x2.e.dim()) {
        return false;
    }
    return rank(m) == x1.e.dim() && check_rb_morphism(x1.e, x2.e, m) && m * x1.i == x2.i && x2.p * m == x1.p;
}

ExtensionEquivalence check_extension_equivalence(const Extension& x1, const Extension& x2) {
    if (!(x1.g == x2.g) || !(x1.h == x2.h)) {
        throw InvalidArgument("extensions of different Rota-Baxter Lie algebras");
    }
    const Matrix s1 = canonical_section(x1);
    const Matrix s2 = canonical_section(x2);
    const NonAbelianCocycle c1 = extract_cocycle(x1, s1);
    const NonAbelianCocycle c2 = extract_cocycle(x2, s2);
    CocycleEquivalence ce = solve_cocycle_equivalence(c1, c2);
    ExtensionEquivalence out{ce.verdict, std::nullopt, ce.phi, ce.failing_condition};
    if (ce.verdict != Verdict::Yes) {
        return out;
    }
    const Matrix src = s1.hstack(x1.i);
    const Matrix dst = (s2 + x2.i * *ce.phi).hstack(x2.i);
    const auto src_inv = inverse(src);
    if (!src_inv) {
        throw std::logic_error("section and inclusion do not span e");
    }
    Matrix map = dst * *src_inv;
    if (!is_extension_map(x1, x2, map)) {
        throw std::logic_error("equivalence map failed verification");
    }
    out.map = std::move(map);
    return out;
}

} // namespace rbx
