#include "rbx/cohomology.hpp"

#include "rbx/errors.hpp"

#include <algorithm>
#include <functional>

namespace rbx {

std::vector<Tuple> increasing_tuples(std::size_t n, std::size_t k) {
    std::vector<Tuple> out;
    if (k > n) {
        return out;
    }
    Tuple t(k);
    for (std::size_t i = 0; i < k; ++i) {
        t[i] = i;
    }
    while (true) {
        out.push_back(t);
        std::size_t i = k;
        while (i > 0 && t[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return out;
        }
        ++t[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            t[j] = t[j - 1] + 1;
        }
    }
}

Cochain::Cochain(const Field& f, std::size_t gdim, std::size_t hdim, std::size_t degree)
    : field_(f), gdim_(gdim), hdim_(hdim), degree_(degree), tuples_(increasing_tuples(gdim, degree)),
      values_(tuples_.size(), zero_vector(f, hdim)) {}

void Cochain::set_value(std::size_t k, const Vector& v) {
    if (v.size() != hdim_) {
        throw DimensionMismatch("cochain value has " + std::to_string(v.size()) + " coordinates, expected " +
                                std::to_string(hdim_));
    }
    values_.at(k) = v;
}

std::size_t Cochain::index_of(const Tuple& increasing) const {
    auto it = std::lower_bound(tuples_.begin(), tuples_.end(), increasing);
    if (it == tuples_.end() || *it != increasing) {
        throw InvalidArgument("not an increasing tuple of basis indices");
    }
    return static_cast<std::size_t>(it - tuples_.begin());
}

Vector Cochain::eval_basis(const Tuple& indices) const {
    if (indices.size() != degree_) {
        throw DimensionMismatch("cochain of degree " + std::to_string(degree_) + " evaluated on " +
                                std::to_string(indices.size()) + " arguments");
    }
    Tuple t = indices;
    bool odd = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j + 1 < t.size() - i; ++j) {
            if (t[j] > t[j + 1]) {
                std::swap(t[j], t[j + 1]);
                odd = !odd;
            } else if (t[j] == t[j + 1]) {
                return zero_vector(field_, hdim_);
            }
        }
    }
    for (std::size_t j = 0; j + 1 < t.size(); ++j) {
        if (t[j] == t[j + 1]) {
            return zero_vector(field_, hdim_);
        }
    }
    const Vector& v = values_[index_of(t)];
    return odd ? Scalar(field_, -1L) * v : v;
}

Vector Cochain::eval(const std::vector<Vector>& args) const {
    if (args.size() != degree_) {
        throw DimensionMismatch("cochain of degree " + std::to_string(degree_) + " evaluated on " +
                                std::to_string(args.size()) + " arguments");
    }
    Vector out = zero_vector(field_, hdim_);
    Tuple idx(degree_, 0);
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t pos, const Scalar& coeff) {
        if (pos == degree_) {
            out += coeff * eval_basis(idx);
            return;
        }
        for (std::size_t k = 0; k < gdim_; ++k) {
            if (args[pos][k].is_zero()) {
                continue;
            }
            idx[pos] = k;
            rec(pos + 1, coeff * args[pos][k]);
        }
    };
    rec(0, Scalar::one(field_));
    return out;
}

bool Cochain::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Vector& v) { return rbx::is_zero(v); });
}

Vector Cochain::flatten() const {
    Vector out;
    out.reserve(flat_size());
    for (const auto& v : values_) {
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

Cochain Cochain::unflatten(const Field& f, std::size_t gdim, std::size_t hdim, std::size_t degree,
                           const Vector& coords) {
    Cochain c(f, gdim, hdim, degree);
    if (coords.size() != c.flat_size()) {
        throw DimensionMismatch("flattened cochain has " + std::to_string(coords.size()) + " coordinates, expected " +
                                std::to_string(c.flat_size()));
    }
    for (std::size_t k = 0; k < c.values_.size(); ++k) {
        for (std::size_t a = 0; a < hdim; ++a) {
            c.values_[k][a] = coords[k * hdim + a];
        }
    }
    return c;
}

Matrix Cochain::as_matrix() const {
    if (degree_ != 1) {
        throw InvalidArgument("only degree-1 cochains are linear maps");
    }
    Matrix m(field_, hdim_, gdim_);
    for (std::size_t i = 0; i < gdim_; ++i) {
        m.set_column(i, values_[i]);
    }
    return m;
}

Cochain Cochain::from_matrix(const Matrix& m) {
    Cochain c(m.field(), m.cols(), m.rows(), 1);
    for (std::size_t i = 0; i < m.cols(); ++i) {
        c.values_[i] = m.column(i);
    }
    return c;
}

void Cochain::require_same_shape(const Cochain& o) const {
    if (!(field_ == o.field_) || gdim_ != o.gdim_ || hdim_ != o.hdim_ || degree_ != o.degree_) {
        throw DimensionMismatch("cochains of different shapes");
    }
}

Cochain& Cochain::operator+=(const Cochain& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < values_.size(); ++k) {
        values_[k] += o.values_[k];
    }
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < values_.size(); ++k) {
        values_[k] -= o.values_[k];
    }
    return *this;
}

Cochain operator*(const Scalar& s, Cochain c) {
    for (auto& v : c.values_) {
        v = s * v;
    }
    return c;
}

Cochain operator*(const Matrix& m, const Cochain& c) {
    if (m.cols() != c.hdim_) {
        throw DimensionMismatch("map does not act on the cochain's values");
    }
    Cochain out(c.field_, c.gdim_, m.rows(), c.degree_);
    for (std::size_t k = 0; k < c.values_.size(); ++k) {
        out.values_[k] = m.apply(c.values_[k]);
    }
    return out;
}

Vector RBCochain::flatten() const {
    Vector out = f.flatten();
    if (theta) {
        Vector t = theta->flatten();
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

std::size_t rb_cochain_size(const Representation& r, std::size_t degree) {
    if (degree == 0) {
        return 0;
    }
    std::size_t n = increasing_tuples(r.gdim(), degree).size() * r.hdim;
    if (degree >= 2) {
        n += increasing_tuples(r.gdim(), degree - 1).size() * r.hdim;
    }
    return n;
}

RBCochain zero_rb_cochain(const Representation& r, std::size_t degree) {
    if (degree == 0) {
        throw InvalidArgument("the Rota-Baxter complex starts in degree 1");
    }
    RBCochain c{Cochain(r.field(), r.gdim(), r.hdim, degree), std::nullopt};
    if (degree >= 2) {
        c.theta = Cochain(r.field(), r.gdim(), r.hdim, degree - 1);
    }
    return c;
}

RBCochain unflatten_rb_cochain(const Representation& r, std::size_t degree, const Vector& coords) {
    if (coords.size() != rb_cochain_size(r, degree)) {
        throw DimensionMismatch("flattened Rota-Baxter cochain has the wrong length");
    }
    RBCochain c = zero_rb_cochain(r, degree);
    const std::size_t nf = c.f.flat_size();
    c.f = Cochain::unflatten(r.field(), r.gdim(), r.hdim, degree, Vector(coords.begin(), coords.begin() + nf));
    if (c.theta) {
        c.theta = Cochain::unflatten(r.field(), r.gdim(), r.hdim, degree - 1, Vector(coords.begin() + nf, coords.end()));
    }
    return c;
}

namespace {

void require_over(const Representation& r, const Cochain& f) {
    check_shapes(r);
    if (f.gdim() != r.gdim() || f.hdim() != r.hdim || !(f.field() == r.field())) {
        throw DimensionMismatch("cochain does not live over this representation");
    }
}

// Alternating-sum differential for a given action of basis vectors on h and a
// given bracket of basis vectors in g.
Cochain alternating_differential(const Cochain& f, const std::vector<Matrix>& act,
                                 const std::function<Vector(std::size_t, std::size_t)>& bracket) {
    const Field& fld = f.field();
    const std::size_t n = f.degree();
    Cochain out(fld, f.gdim(), f.hdim(), n + 1);
    const Scalar minus_one(fld, -1L);
    for (std::size_t k = 0; k < out.tuples().size(); ++k) {
        const Tuple& t = out.tuples()[k];
        Vector v = zero_vector(fld, f.hdim());
        for (std::size_t i = 0; i <= n; ++i) {
            Tuple rest;
            for (std::size_t a = 0; a <= n; ++a) {
                if (a != i) {
                    rest.push_back(t[a]);
                }
            }
            Vector term = act[t[i]].apply(f.eval_basis(rest));
            v += i % 2 == 0 ? term : minus_one * term;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                const Vector b = bracket(t[i], t[j]);
                if (rbx::is_zero(b)) {
                    continue;
                }
                std::vector<Vector> args{b};
                for (std::size_t a = 0; a <= n; ++a) {
                    if (a != i && a != j) {
                        args.push_back(unit_vector(fld, f.gdim(), t[a]));
                    }
                }
                Vector term = f.eval(args);
                v += (i + j) % 2 == 0 ? term : minus_one * term;
            }
        }
        out.set_value(k, v);
    }
    return out;
}

} // namespace

Cochain ce_differential(const Representation& r, const Cochain& f) {
    require_over(r, f);
    const LieAlgebra& g = r.base.lie;
    return alternating_differential(f, r.action, [&](std::size_t i, std::size_t j) { return g.bracket_basis(i, j); });
}

Cochain rb_twisted_differential(const Representation& r, const Cochain& f) {
    require_over(r, f);
    const LieAlgebra& g = r.base.lie;
    const Matrix& t = r.base.op;
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < r.gdim(); ++i) {
        act.push_back(r.psi(t.column(i)) - r.s_op * r.action[i]);
    }
    return alternating_differential(f, act, [&](std::size_t i, std::size_t j) {
        const Field& fld = r.field();
        return g.bracket(t.column(i), unit_vector(fld, r.gdim(), j)) +
               g.bracket(unit_vector(fld, r.gdim(), i), t.column(j));
    });
}

RBCochain rbl_differential(const Representation& r, const RBCochain& c) {
    const std::size_t n = c.degree();
    if (n == 0) {
        throw InvalidArgument("the Rota-Baxter complex starts in degree 1");
    }
    require_over(r, c.f);
    if ((n >= 2) != c.theta.has_value() || (c.theta && c.theta->degree() + 1 != n)) {
        throw DimensionMismatch("Rota-Baxter cochain components have inconsistent degrees");
    }
    if (c.theta) {
        require_over(r, *c.theta);
    }
    const Field& fld = r.field();
    const Matrix& t = r.base.op;
    RBCochain out{ce_differential(r, c.f), std::nullopt};
    Cochain theta = c.theta ? rb_twisted_differential(r, *c.theta) : Cochain(fld, r.gdim(), r.hdim, n);
    const Scalar sign(fld, n % 2 == 0 ? 1L : -1L);
    for (std::size_t k = 0; k < theta.tuples().size(); ++k) {
        const Tuple& tup = theta.tuples()[k];
        std::vector<Vector> args;
        for (std::size_t a : tup) {
            args.push_back(t.column(a));
        }
        Vector term = c.f.eval(args);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Vector> mixed = args;
            mixed[i] = unit_vector(fld, r.gdim(), tup[i]);
            term -= r.s_op.apply(c.f.eval(mixed));
        }
        theta.set_value(k, theta.value(k) + sign * term);
    }
    out.theta = std::move(theta);
    return out;
}

Matrix rbl_differential_matrix(const Representation& r, std::size_t degree) {
    const std::size_t cols = rb_cochain_size(r, degree);
    const std::size_t rows = rb_cochain_size(r, degree + 1);
    Matrix m(r.field(), rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        RBCochain unit = unflatten_rb_cochain(r, degree, unit_vector(r.field(), cols, j));
        m.set_column(j, rbl_differential(r, unit).flatten());
    }
    return m;
}

CohomologyDims cohomology_dims(const Representation& r, std::size_t degree) {
    check_shapes(r);
    if (degree == 0) {
        throw InvalidArgument("the combined complex starts in degree 1");
    }
    if (!r.h_is_abelian()) {
        throw InvalidArgument("module cohomology needs an abelian h");
    }
    CohomologyDims out;
    out.zdim = rb_cochain_size(r, degree) - rank(rbl_differential_matrix(r, degree));
    out.bdim = degree == 1 ? 0 : rank(rbl_differential_matrix(r, degree - 1));
    out.hdim = out.zdim - out.bdim;
    return out;
}

SecondCohomology second_cohomology(const Representation& r) {
    check_shapes(r);
    if (!r.h_is_abelian()) {
        throw InvalidArgument("module cohomology needs an abelian h");
    }
    const Field& f = r.field();
    const Matrix d1 = rbl_differential_matrix(r, 1);
    const Matrix d2 = rbl_differential_matrix(r, 2);
    SecondCohomology out;
    const auto cocycles = kernel_basis(d2);
    const Echelon e1 = row_echelon(d1);
    out.zdim = cocycles.size();
    out.bdim = e1.pivots.size();
    out.hdim = out.zdim - out.bdim;
    std::vector<Vector> span;
    for (std::size_t c : e1.pivots) {
        span.push_back(d1.column(c));
        out.coboundary_basis.push_back(unflatten_rb_cochain(r, 2, d1.column(c)));
    }
    for (const auto& z : cocycles) {
        out.cocycle_basis.push_back(unflatten_rb_cochain(r, 2, z));
    }
    std::size_t current = span.size();
    for (const auto& z : cocycles) {
        if (out.complement_reps.size() == out.hdim) {
            break;
        }
        span.push_back(z);
        const std::size_t next = rank(Matrix::from_columns(f, d2.cols(), span));
        if (next > current) {
            current = next;
            out.complement_reps.push_back(unflatten_rb_cochain(r, 2, z));
        } else {
            span.pop_back();
        }
    }
    return out;
}

std::optional<Vector> cohomology_coordinates(const Representation& r, const SecondCohomology& h2,
                                             const RBCochain& c) {
    const Vector target = c.flatten();
    if (target.size() != rb_cochain_size(r, 2)) {
        throw DimensionMismatch("expected a degree-2 Rota-Baxter cochain");
    }
    if (!rbl_differential(r, c).is_zero()) {
        return std::nullopt;
    }
    std::vector<Vector> cols;
    for (const auto& rep : h2.complement_reps) {
        cols.push_back(rep.flatten());
    }
    const Matrix d1 = rbl_differential_matrix(r, 1);
    for (std::size_t j = 0; j < d1.cols(); ++j) {
        cols.push_back(d1.column(j));
    }
    const auto sol = solve(Matrix::from_columns(r.field(), target.size(), cols), target);
    if (!sol) {
        return std::nullopt;
    }
    return Vector(sol->particular.begin(), sol->particular.begin() + static_cast<std::ptrdiff_t>(h2.hdim));
}

std::vector<Matrix> derivation_space(const Representation& r) {
    std::vector<Matrix> out;
    for (const auto& v : kernel_basis(rbl_differential_matrix(r, 1))) {
        out.push_back(Cochain::unflatten(r.field(), r.gdim(), r.hdim, 1, v).as_matrix());
    }
    return out;
}

} // namespace rbx
