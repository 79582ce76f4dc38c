#include "rbx/lie.hpp"

#include "rbx/errors.hpp"

#include <limits>

namespace rbx {

std::uint64_t saturating_power(std::uint64_t p, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (p != 0 && r > std::numeric_limits<std::uint64_t>::max() / p) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        r *= p;
    }
    return r;
}

LieAlgebra::LieAlgebra(const Field& f, std::size_t dim)
    : field_(f), dim_(dim), c_(dim * dim * dim, Scalar::zero(f)) {}

LieAlgebra LieAlgebra::from_table(const Field& f, std::size_t dim, const std::vector<Entry>& table) {
    LieAlgebra l(f, dim);
    for (const auto& e : table) {
        if (e.i >= dim || e.j >= dim || e.value.size() != dim) {
            throw DimensionMismatch("bracket entry out of range");
        }
        for (std::size_t k = 0; k < dim; ++k) {
            l.set(e.i, e.j, k, e.value[k]);
            l.set(e.j, e.i, k, -e.value[k]);
        }
    }
    return l;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vector v(c_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_),
             c_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j + 1) * dim_));
    return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) {
        throw DimensionMismatch("bracket arguments do not match the algebra dimension");
    }
    Vector out = zero_vector(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero() || i == j) {
                continue;
            }
            const Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar& ck = c(i, j, k);
                if (!ck.is_zero()) {
                    out[k] += xy * ck;
                }
            }
        }
    }
    return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        m.set_column(j, bracket(x, unit_vector(field_, dim_, j)));
    }
    return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(field_, dim_, i)); }

bool LieAlgebra::is_abelian() const {
    for (const auto& x : c_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

std::optional<std::array<std::size_t, 3>> antisymmetry_violation(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (!(l.c(i, j, k) == -l.c(j, i, k))) {
                    return std::array<std::size_t, 3>{i, j, k};
                }
            }
        }
    }
    return std::nullopt;
}

bool check_jacobi(const LieAlgebra& l) {
    if (antisymmetry_violation(l)) {
        return false;
    }
    const std::size_t n = l.dim();
    const Field& f = l.field();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector ei = unit_vector(f, n, i);
                Vector ej = unit_vector(f, n, j);
                Vector ek = unit_vector(f, n, k);
                Vector sum = l.bracket(ei, l.bracket_basis(j, k));
                sum += l.bracket(ej, l.bracket_basis(k, i));
                sum += l.bracket(ek, l.bracket_basis(i, j));
                if (!is_zero(sum)) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

void require_endomorphism(const LieAlgebra& l, const Matrix& t, const char* what) {
    if (t.rows() != l.dim() || t.cols() != l.dim() || !(t.field() == l.field())) {
        throw DimensionMismatch(std::string(what) + ": operator is " + std::to_string(t.rows()) + "x" +
                                std::to_string(t.cols()) + ", algebra has dimension " + std::to_string(l.dim()));
    }
}

} // namespace

bool check_rota_baxter(const LieAlgebra& l, const Matrix& t) {
    require_endomorphism(l, t, "check_rota_baxter");
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Vector ti = t.column(i);
        const Vector ei = unit_vector(l.field(), n, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector tj = t.column(j);
            const Vector ej = unit_vector(l.field(), n, j);
            Vector lhs = l.bracket(ti, tj);
            Vector rhs = t.apply(l.bracket(ti, ej) + l.bracket(ei, tj));
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

bool preserves_bracket(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& f) {
    if (f.rows() != dst.dim() || f.cols() != src.dim()) {
        throw DimensionMismatch("morphism shape " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                                " does not map dimension " + std::to_string(src.dim()) + " to " +
                                std::to_string(dst.dim()));
    }
    const std::size_t n = src.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Vector fi = f.column(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (f.apply(src.bracket_basis(i, j)) != dst.bracket(fi, f.column(j))) {
                return false;
            }
        }
    }
    return true;
}

bool check_rb_morphism(const RBLieAlgebra& src, const RBLieAlgebra& dst, const Matrix& f) {
    if (!(src.field() == dst.field()) || !(f.field() == src.field())) {
        throw DimensionMismatch("morphism between algebras over different fields");
    }
    if (!preserves_bracket(src.lie, dst.lie, f)) {
        return false;
    }
    return dst.op * f == f * src.op;
}

bool is_rb_automorphism(const RBLieAlgebra& a, const Matrix& f) {
    return f.rows() == a.dim() && f.cols() == a.dim() && check_rb_morphism(a, a, f) && rank(f) == a.dim();
}

std::vector<Matrix> derivation_algebra(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    const Field& f = l.field();
    // Row block (i, j, k): D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j], component k.
    std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    Matrix sys(f, pairs * n, n * n);
    std::size_t block = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++block) {
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t row = block * n + k;
                // D[e_i, e_j]_k = sum_m D(k, m) c(i, j, m)
                for (std::size_t m = 0; m < n; ++m) {
                    sys(row, k * n + m) += l.c(i, j, m);
                }
                // [D e_i, e_j]_k = sum_m D(m, i) c(m, j, k)
                for (std::size_t m = 0; m < n; ++m) {
                    sys(row, m * n + i) -= l.c(m, j, k);
                    sys(row, m * n + j) -= l.c(i, m, k);
                }
            }
        }
    }
    std::vector<Matrix> basis;
    for (const auto& v : kernel_basis(sys)) {
        Matrix d(f, n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                d(r, c) = v[r * n + c];
            }
        }
        basis.push_back(std::move(d));
    }
    return basis;
}

std::vector<Matrix> enumerate_rb_automorphisms(const RBLieAlgebra& a, std::uint64_t budget) {
    if (!a.field().is_prime()) {
        throw InvalidArgument("automorphism enumeration needs a prime field");
    }
    const std::size_t n = a.dim();
    const std::uint64_t required = saturating_power(a.field().modulus(), n * n);
    if (required > budget) {
        throw BudgetExceeded("enumerating RB automorphisms of a " + std::to_string(n) + "-dimensional algebra over " +
                                 a.field().describe(),
                             required, budget);
    }
    std::vector<Matrix> out;
    for_each_matrix(a.field(), n, n, [&](const Matrix& m) {
        if (a.op * m == m * a.op && preserves_bracket(a.lie, a.lie, m) && rank(m) == n) {
            out.push_back(m);
        }
        return true;
    });
    return out;
}

} // namespace rbx
