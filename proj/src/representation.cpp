#include "rbx/representation.hpp"

#include "rbx/errors.hpp"

namespace rbx {

Matrix Representation::psi(const Vector& x) const {
    if (x.size() != action.size()) {
        throw DimensionMismatch("action subscript has the wrong dimension");
    }
    Matrix m(field(), hdim, hdim);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) {
            m += x[i] * action[i];
        }
    }
    return m;
}

LieAlgebra Representation::h_lie() const { return h_bracket ? *h_bracket : LieAlgebra(field(), hdim); }

void check_shapes(const Representation& r) {
    const Field& f = r.field();
    const std::size_t n = r.gdim();
    if (r.base.op.rows() != n || r.base.op.cols() != n) {
        throw DimensionMismatch("operator T must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    if (r.action.size() != n) {
        throw DimensionMismatch("expected " + std::to_string(n) + " action matrices, got " +
                                std::to_string(r.action.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (r.action[i].rows() != r.hdim || r.action[i].cols() != r.hdim || !(r.action[i].field() == f)) {
            throw DimensionMismatch("action matrix " + std::to_string(i) + " must be " + std::to_string(r.hdim) +
                                    "x" + std::to_string(r.hdim));
        }
    }
    if (r.s_op.rows() != r.hdim || r.s_op.cols() != r.hdim || !(r.s_op.field() == f)) {
        throw DimensionMismatch("operator S must be " + std::to_string(r.hdim) + "x" + std::to_string(r.hdim));
    }
    if (r.h_bracket && (r.h_bracket->dim() != r.hdim || !(r.h_bracket->field() == f))) {
        throw DimensionMismatch("bracket on h has the wrong dimension");
    }
}

bool check_module_homomorphism(const Representation& r) {
    check_shapes(r);
    const std::size_t n = r.gdim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix lhs = r.psi(r.base.lie.bracket_basis(i, j));
            Matrix rhs = r.action[i] * r.action[j] - r.action[j] * r.action[i];
            if (!(lhs == rhs)) {
                return false;
            }
        }
    }
    return true;
}

bool check_rb_compatibility(const Representation& r) {
    check_shapes(r);
    for (std::size_t i = 0; i < r.gdim(); ++i) {
        const Matrix ptx = r.psi(r.base.op.column(i));
        if (!(ptx * r.s_op == r.s_op * (ptx + r.action[i] * r.s_op))) {
            return false;
        }
    }
    return true;
}

bool check_representation(const Representation& r) {
    if (!check_rb_compatibility(r)) {
        return false;
    }
    return !r.h_is_abelian() || check_module_homomorphism(r);
}

Representation adjoint_representation(const RBLieAlgebra& a) {
    Representation r{a, a.dim(), {}, a.op, a.lie};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        r.action.push_back(a.lie.ad_basis(i));
    }
    return r;
}

Representation pullback_action(const Representation& r, const Matrix& alpha) {
    check_shapes(r);
    if (!is_rb_automorphism(r.base, alpha)) {
        throw InvalidArgument("alpha is not an automorphism of the base Rota-Baxter Lie algebra");
    }
    Representation out = r;
    for (std::size_t i = 0; i < r.gdim(); ++i) {
        out.action[i] = r.psi(alpha.column(i));
    }
    return out;
}

RBLieAlgebra semidirect_product(const Representation& r) {
    check_shapes(r);
    if (!r.h_is_abelian()) {
        throw InvalidArgument("semidirect product needs an abelian h");
    }
    const Field& f = r.field();
    const std::size_t n = r.gdim();
    const std::size_t m = r.hdim;
    LieAlgebra e(f, n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                e.set(i, j, k, r.base.lie.c(i, j, k));
            }
        }
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                e.set(i, n + j, n + k, r.action[i](k, j));
                e.set(n + j, i, n + k, -r.action[i](k, j));
            }
        }
    }
    Matrix op(f, n + m, n + m);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            op(a, b) = r.base.op(a, b);
        }
    }
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            op(n + a, n + b) = r.s_op(a, b);
        }
    }
    return RBLieAlgebra{std::move(e), std::move(op)};
}

bool is_h_automorphism(const Representation& r, const Matrix& beta) {
    check_shapes(r);
    if (beta.rows() != r.hdim || beta.cols() != r.hdim || !(beta.field() == r.field())) {
        throw DimensionMismatch("beta must be " + std::to_string(r.hdim) + "x" + std::to_string(r.hdim));
    }
    return is_rb_automorphism(RBLieAlgebra{r.h_lie(), r.s_op}, beta);
}

bool check_compatible_pair(const Representation& r, const Matrix& beta, const Matrix& alpha) {
    if (!is_h_automorphism(r, beta)) {
        throw InvalidArgument("beta is not an automorphism of h_S");
    }
    if (!is_rb_automorphism(r.base, alpha)) {
        throw InvalidArgument("alpha is not an automorphism of g_T");
    }
    for (std::size_t i = 0; i < r.gdim(); ++i) {
        if (!(beta * r.action[i] == r.psi(alpha.column(i)) * beta)) {
            return false;
        }
    }
    return true;
}

} // namespace rbx
