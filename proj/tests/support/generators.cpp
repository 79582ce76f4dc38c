#include "support/generators.hpp"

namespace rbx::testing {

namespace {

Vector vec(const Field& f, std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) {
        v.emplace_back(f, x);
    }
    return v;
}

Matrix rb_operator_on_n2(Rng& rng, const Field& f) {
    switch (rng.below(3)) {
    case 0: {
        // [[a, 0], [c, 0]]
        Matrix t(f, 2, 2);
        t(0, 0) = rng.scalar(f);
        t(1, 0) = rng.scalar(f);
        return t;
    }
    case 1: {
        // nilpotent [[a, b], [-a^2/b, -a]]
        Scalar a = rng.scalar(f);
        Scalar b = rng.scalar(f);
        if (b.is_zero()) {
            b = Scalar::one(f);
        }
        Matrix t(f, 2, 2);
        t(0, 0) = a;
        t(0, 1) = b;
        t(1, 0) = -(a * a) / b;
        t(1, 1) = -a;
        return t;
    }
    default:
        return Matrix(f, 2, 2);
    }
}

} // namespace

LieAlgebra n2_algebra(const Field& f) { return LieAlgebra::from_table(f, 2, {{0, 1, vec(f, {0, 1})}}); }

LieAlgebra heisenberg_algebra(const Field& f) { return LieAlgebra::from_table(f, 3, {{0, 1, vec(f, {0, 0, 1})}}); }

LieAlgebra sl2_algebra(const Field& f) {
    return LieAlgebra::from_table(f, 3, {{2, 0, vec(f, {2, 0, 0})}, {2, 1, vec(f, {0, -2, 0})}, {0, 1, vec(f, {0, 0, 1})}});
}

RBLieAlgebra change_basis(const RBLieAlgebra& a, const Matrix& p) {
    const Field& f = a.field();
    const std::size_t n = a.dim();
    const Matrix pinv = *inverse(p);
    LieAlgebra l(f, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vector v = pinv.apply(a.lie.bracket(p.column(i), p.column(j)));
            for (std::size_t k = 0; k < n; ++k) {
                l.set(i, j, k, v[k]);
            }
        }
    }
    return RBLieAlgebra{std::move(l), pinv * a.op * p};
}

RBLieAlgebra random_rb_algebra(Rng& rng, const Field& f, std::size_t max_dim) {
    const std::size_t dim = rng.below(max_dim) + 1;
    RBLieAlgebra a;
    if (dim == 1) {
        a = {LieAlgebra(f, 1), rng.matrix(f, 1, 1)};
    } else if (dim == 2) {
        if (rng.coin()) {
            a = {LieAlgebra(f, 2), rng.matrix(f, 2, 2)};
        } else {
            a = {n2_algebra(f), rb_operator_on_n2(rng, f)};
        }
    } else {
        switch (rng.below(4)) {
        case 0:
            a = {LieAlgebra(f, 3), rng.matrix(f, 3, 3)};
            break;
        case 1: {
            Matrix t(f, 3, 3);
            for (std::size_t c = 0; c < 3; ++c) {
                t(2, c) = rng.scalar(f);
            }
            a = {heisenberg_algebra(f), t};
            break;
        }
        case 2: {
            // N2 plus a central line; block-diagonal operator.
            LieAlgebra l(f, 3);
            l.set(0, 1, 1, Scalar::one(f));
            l.set(1, 0, 1, Scalar(f, -1L));
            Matrix t(f, 3, 3);
            Matrix t2 = rb_operator_on_n2(rng, f);
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) {
                    t(r, c) = t2(r, c);
                }
            }
            t(2, 2) = rng.scalar(f);
            a = {l, t};
            break;
        }
        default:
            a = {sl2_algebra(f), Matrix(f, 3, 3)};
            break;
        }
    }
    return change_basis(a, rng.invertible(f, dim));
}

Representation change_h_basis(const Representation& r, const Matrix& q) {
    const Matrix qinv = *inverse(q);
    Representation out = r;
    for (auto& m : out.action) {
        m = qinv * m * q;
    }
    out.s_op = qinv * r.s_op * q;
    if (r.h_bracket) {
        RBLieAlgebra h = change_basis(RBLieAlgebra{*r.h_bracket, r.s_op}, q);
        out.h_bracket = h.lie;
    }
    return out;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    const Field& f = a.field();
    const std::size_t m = a.hdim + b.hdim;
    auto block = [&](const Matrix& x, const Matrix& y) {
        Matrix z(f, m, m);
        for (std::size_t r = 0; r < a.hdim; ++r) {
            for (std::size_t c = 0; c < a.hdim; ++c) {
                z(r, c) = x(r, c);
            }
        }
        for (std::size_t r = 0; r < b.hdim; ++r) {
            for (std::size_t c = 0; c < b.hdim; ++c) {
                z(a.hdim + r, a.hdim + c) = y(r, c);
            }
        }
        return z;
    };
    Representation out{a.base, m, {}, block(a.s_op, b.s_op), std::nullopt};
    for (std::size_t i = 0; i < a.gdim(); ++i) {
        out.action.push_back(block(a.action[i], b.action[i]));
    }
    return out;
}

namespace {

Representation trivial_module(Rng& rng, const RBLieAlgebra& g, std::size_t hdim) {
    const Field& f = g.field();
    return Representation{g, hdim, std::vector<Matrix>(g.dim(), Matrix(f, hdim, hdim)), rng.matrix(f, hdim, hdim),
                          std::nullopt};
}

// One-dimensional g with T = 0: psi = D with S D S = 0, a linear condition on D.
Representation line_module(Rng& rng, const Field& f, std::size_t hdim) {
    RBLieAlgebra g{LieAlgebra(f, 1), Matrix(f, 1, 1)};
    Matrix s = rng.coin() ? rng.low_rank(f, hdim, hdim, rng.below(hdim + 1)) : rng.matrix(f, hdim, hdim);
    Matrix sys(f, hdim * hdim, hdim * hdim);
    for (std::size_t a = 0; a < hdim; ++a) {
        for (std::size_t b = 0; b < hdim; ++b) {
            for (std::size_t k = 0; k < hdim; ++k) {
                for (std::size_t l = 0; l < hdim; ++l) {
                    sys(a * hdim + b, k * hdim + l) += s(a, k) * s(l, b);
                }
            }
        }
    }
    Matrix d(f, hdim, hdim);
    for (const auto& v : kernel_basis(sys)) {
        const Scalar c = rng.scalar(f);
        for (std::size_t k = 0; k < hdim * hdim; ++k) {
            d.entries()[k] += c * v[k];
        }
    }
    return Representation{g, hdim, {d}, s, std::nullopt};
}

// Adjoint of an abelian-bracket copy: g abelian, psi_x commuting family.
Representation adjoint_module(Rng& rng, const Field& f, std::size_t max_gdim) {
    RBLieAlgebra g = random_rb_algebra(rng, f, max_gdim);
    Representation r = adjoint_representation(g);
    r.h_bracket.reset();
    return r;
}

} // namespace

Representation random_module(Rng& rng, const Field& f, std::size_t max_gdim, std::size_t max_hdim) {
    Representation r;
    switch (rng.below(4)) {
    case 0:
        r = trivial_module(rng, random_rb_algebra(rng, f, max_gdim), rng.below(max_hdim) + 1);
        break;
    case 1:
        r = line_module(rng, f, rng.below(max_hdim) + 1);
        break;
    case 2: {
        Representation a = adjoint_module(rng, f, std::min(max_gdim, max_hdim));
        if (a.hdim < max_hdim && rng.coin()) {
            a = direct_sum(a, trivial_module(rng, a.base, rng.below(max_hdim - a.hdim) + 1));
        }
        r = a;
        break;
    }
    default: {
        // Rejection sampling of a small random action on a 1-dim g.
        r = line_module(rng, f, rng.below(max_hdim) + 1);
        r.base.op = rng.matrix(f, 1, 1);
        if (!check_representation(r)) {
            r.base.op = Matrix(f, 1, 1);
        }
        break;
    }
    }
    return change_h_basis(r, rng.invertible(f, r.hdim));
}

Cochain random_cochain(Rng& rng, const Representation& r, std::size_t degree) {
    Cochain c(r.field(), r.gdim(), r.hdim, degree);
    for (std::size_t k = 0; k < c.tuples().size(); ++k) {
        c.set_value(k, rng.vector(r.field(), r.hdim));
    }
    return c;
}

RBCochain random_rb_cochain(Rng& rng, const Representation& r, std::size_t degree) {
    RBCochain c{random_cochain(rng, r, degree), std::nullopt};
    if (degree >= 2) {
        c.theta = random_cochain(rng, r, degree - 1);
    }
    return c;
}

} // namespace rbx::testing

namespace rbx::testing {

NonAbelianCocycle equivalence_move(const NonAbelianCocycle& c, const Matrix& phi) {
    NonAbelianCocycle out = c;
    const std::size_t n = c.g.dim();
    const LieAlgebra& hl = c.h.lie;
    for (std::size_t i = 0; i < n; ++i) {
        out.psi[i] = c.psi[i] - hl.ad(phi.column(i));
    }
    for (std::size_t k = 0; k < c.chi.tuples().size(); ++k) {
        const std::size_t i = c.chi.tuples()[k][0];
        const std::size_t j = c.chi.tuples()[k][1];
        Vector twist = out.psi[i].apply(phi.column(j)) - out.psi[j].apply(phi.column(i)) -
                       phi.apply(c.g.lie.bracket_basis(i, j)) + hl.bracket(phi.column(i), phi.column(j));
        out.chi.set_value(k, c.chi.value(k) - twist);
    }
    out.phi = c.phi - (c.h.op * phi - phi * c.g.op);
    return out;
}

namespace {

NonAbelianCocycle abelian_cocycle(Rng& rng, const Field& f, std::size_t max_gdim, std::size_t max_hdim) {
    Representation r = random_module(rng, f, max_gdim, max_hdim);
    const auto z = kernel_basis(rbl_differential_matrix(r, 2));
    Vector flat = zero_vector(f, rb_cochain_size(r, 2));
    for (const auto& v : z) {
        flat += rng.scalar(f) * v;
    }
    RBCochain c = unflatten_rb_cochain(r, 2, flat);
    return NonAbelianCocycle{r.base, RBLieAlgebra{LieAlgebra(f, r.hdim), r.s_op}, c.f, r.action, c.theta->as_matrix()};
}

// One-dimensional g with T = t: psi = D in Der(h) and Phi solve a linear system.
NonAbelianCocycle line_cocycle(Rng& rng, const Field& f, std::size_t max_hdim) {
    RBLieAlgebra h = random_rb_algebra(rng, f, max_hdim);
    const std::size_t m = h.dim();
    const Scalar t = rng.coin() ? Scalar::zero(f) : rng.scalar(f);
    RBLieAlgebra g{LieAlgebra(f, 1), Matrix(f, 1, 1)};
    g.op(0, 0) = t;
    // Unknowns: D(r, c) at r * m + c, then Phi at m * m + k.
    const std::size_t unknowns = m * m + m;
    std::vector<Vector> rows;
    auto var_d = [&](std::size_t r, std::size_t c) { return r * m + c; };
    const LieAlgebra& l = h.lie;
    // D is a derivation.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                Vector row = zero_vector(f, unknowns);
                for (std::size_t a = 0; a < m; ++a) {
                    row[var_d(k, a)] += l.c(i, j, a);
                    row[var_d(a, i)] -= l.c(a, j, k);
                    row[var_d(a, j)] -= l.c(i, a, k);
                }
                rows.push_back(row);
            }
        }
    }
    // t D S h - S(D S h + t D h) - S[Phi, h] + [Phi, S h] = 0 on each basis h.
    const Matrix& s = h.op;
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t out = 0; out < m; ++out) {
            Vector row = zero_vector(f, unknowns);
            for (std::size_t b = 0; b < m; ++b) {
                row[var_d(out, b)] += t * s(b, k);
            }
            for (std::size_t a = 0; a < m; ++a) {
                for (std::size_t b = 0; b < m; ++b) {
                    row[var_d(a, b)] -= s(out, a) * s(b, k);
                }
                row[var_d(a, k)] -= t * s(out, a);
            }
            for (std::size_t a = 0; a < m; ++a) {
                for (std::size_t c = 0; c < m; ++c) {
                    row[m * m + a] -= s(out, c) * l.c(a, k, c);
                    row[m * m + a] += s(c, k) * l.c(a, c, out);
                }
            }
            rows.push_back(row);
        }
    }
    Matrix sys(f, rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < unknowns; ++c) {
            sys(r, c) = rows[r][c];
        }
    }
    Vector x = zero_vector(f, unknowns);
    for (const auto& v : kernel_basis(sys)) {
        x += rng.scalar(f) * v;
    }
    NonAbelianCocycle c = NonAbelianCocycle::zero(g, h);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t cc = 0; cc < m; ++cc) {
            c.psi[0](r, cc) = x[var_d(r, cc)];
        }
        c.phi(r, 0) = x[m * m + r];
    }
    return c;
}

} // namespace

NonAbelianCocycle random_cocycle(Rng& rng, const Field& f, std::size_t max_gdim, std::size_t max_hdim) {
    NonAbelianCocycle c;
    switch (rng.below(3)) {
    case 0:
        c = abelian_cocycle(rng, f, max_gdim, max_hdim);
        break;
    case 1:
        c = line_cocycle(rng, f, max_hdim);
        break;
    default:
        c = NonAbelianCocycle::zero(random_rb_algebra(rng, f, max_gdim), random_rb_algebra(rng, f, max_hdim));
        break;
    }
    const std::size_t moves = rng.below(3);
    for (std::size_t k = 0; k < moves; ++k) {
        c = equivalence_move(c, rng.matrix(f, c.h.dim(), c.g.dim()));
    }
    return c;
}

NonAbelianCocycle perturb(Rng& rng, const NonAbelianCocycle& c) {
    const Field& f = c.field();
    NonAbelianCocycle out = c;
    Scalar delta = rng.scalar(f);
    if (delta.is_zero()) {
        delta = Scalar::one(f);
    }
    const std::size_t m = c.h.dim();
    const std::size_t n = c.g.dim();
    const std::size_t which = rng.below(c.chi.tuples().empty() ? 2 : 3);
    if (which == 0) {
        out.psi[rng.below(n)](rng.below(m), rng.below(m)) += delta;
    } else if (which == 1) {
        out.phi(rng.below(m), rng.below(n)) += delta;
    } else {
        const std::size_t k = rng.below(c.chi.tuples().size());
        Vector v = c.chi.value(k);
        v[rng.below(m)] += delta;
        out.chi.set_value(k, v);
    }
    return out;
}

} // namespace rbx::testing

namespace rbx::testing {

Extension random_extension(Rng& rng, const Field& f, std::size_t max_gdim, std::size_t max_hdim) {
    Extension x = build_extension(random_cocycle(rng, f, max_gdim, max_hdim)).extension;
    const Matrix q = rng.invertible(f, x.e.dim());
    x.e = change_basis(x.e, q);
    x.i = *inverse(q) * x.i;
    x.p = x.p * q;
    return x;
}

} // namespace rbx::testing
