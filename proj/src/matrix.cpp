#include "rbx/matrix.hpp"

#include "rbx/errors.hpp"

#include <stdexcept>
#include <utility>

namespace rbx {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t k) {
    Vector v = zero_vector(f, n);
    v.at(k) = Scalar::one(f);
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

Vector& operator+=(Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vector sizes differ");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += b[i];
    }
    return a;
}

Vector& operator-=(Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vector sizes differ");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] -= b[i];
    }
    return a;
}

Vector operator+(const Vector& a, const Vector& b) {
    Vector r = a;
    return r += b;
}

Vector operator-(const Vector& a, const Vector& b) {
    Vector r = a;
    return r -= b;
}

Vector operator*(const Scalar& s, const Vector& v) {
    Vector r = v;
    for (auto& x : r) {
        x *= s;
    }
    return r;
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) { return scalar(f, n, 1); }

Matrix Matrix::scalar(const Field& f, std::size_t n, long v) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Scalar(f, v);
    }
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<long>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) {
            throw DimensionMismatch("ragged matrix rows");
        }
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = Scalar(f, rows[i][j]);
        }
    }
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, std::span<const Vector> cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        m.set_column(j, cols[j]);
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v.push_back((*this)(r, c));
    }
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_ || c >= cols_) {
        throw DimensionMismatch("column does not fit the matrix");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, c) = v[r];
    }
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) {
        throw DimensionMismatch("matrix-vector product: " + std::to_string(cols_) + " columns vs vector of " +
                                std::to_string(v.size()));
    }
    Vector out = zero_vector(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) {
            continue;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero()) {
                out[r] += a * v[c];
            }
        }
    }
    return out;
}

Matrix Matrix::hstack(const Matrix& other) const {
    if (other.rows_ != rows_ || !(other.field_ == field_)) {
        throw DimensionMismatch("hstack: row counts or fields differ");
    }
    Matrix m(field_, rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m(r, c) = (*this)(r, c);
        }
        for (std::size_t c = 0; c < other.cols_; ++c) {
            m(r, cols_ + c) = other(r, c);
        }
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m(c, r) = (*this)(r, c);
        }
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) {
        x = -x;
    }
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (o.rows_ != rows_ || o.cols_ != cols_) {
        throw DimensionMismatch("matrix sum: shapes differ");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += o.data_[i];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (o.rows_ != rows_ || o.cols_ != cols_) {
        throw DimensionMismatch("matrix difference: shapes differ");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= o.data_[i];
    }
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw DimensionMismatch("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    if (!(a.field_ == b.field_)) {
        throw DimensionMismatch("matrix product over different fields");
    }
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) {
                    m(i, j) += x * y;
                }
            }
        }
    }
    return m;
}

Matrix operator*(const Scalar& s, Matrix m) {
    for (auto& x : m.data_) {
        x *= s;
    }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Fraction-free Gauss-Jordan on an integer matrix. Every division by the
// previous pivot is exact; a nonzero remainder means a bug, not bad input.
Echelon echelon_rational(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).rational().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const mpq_class& q = m(r, c).rational();
            a[r][c] = q.get_num() * (l / q.get_den());
        }
    }

    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    mpz_class rem;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t found = pr;
        while (found < rows && a[found][c] == 0) {
            ++found;
        }
        if (found == rows) {
            continue;
        }
        std::swap(a[found], a[pr]);
        const mpz_class piv = a[pr][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr) {
                continue;
            }
            const mpz_class factor = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                mpz_class v = piv * a[i][j] - factor * a[pr][j];
                mpz_tdiv_qr(a[i][j].get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) {
                    throw std::logic_error("fraction-free elimination produced an inexact division");
                }
            }
        }
        prev = piv;
        pivots.push_back(c);
        ++pr;
    }

    Echelon e{Matrix(m.field(), rows, cols), pivots};
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const mpz_class& d = a[r][pivots[r]];
        for (std::size_t c = 0; c < cols; ++c) {
            if (a[r][c] != 0) {
                e.reduced(r, c) = Scalar(m.field(), mpq_class(a[r][c], d));
            }
        }
    }
    return e;
}

Echelon echelon_prime(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t found = pr;
        while (found < rows && a(found, c).is_zero()) {
            ++found;
        }
        if (found == rows) {
            continue;
        }
        if (found != pr) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(a(found, j), a(pr, j));
            }
        }
        const Scalar inv = a(pr, c).inverse();
        for (std::size_t j = c; j < cols; ++j) {
            a(pr, j) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || a(i, c).is_zero()) {
                continue;
            }
            const Scalar factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                a(i, j) -= factor * a(pr, j);
            }
        }
        pivots.push_back(c);
        ++pr;
    }
    return Echelon{std::move(a), pivots};
}

} // namespace

Echelon row_echelon(const Matrix& m) { return m.field().is_rational() ? echelon_rational(m) : echelon_prime(m); }

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

namespace {

std::vector<Vector> kernel_from_echelon(const Echelon& e, std::size_t cols) {
    const Field& f = e.reduced.field();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) {
        if (p < cols) {
            is_pivot[p] = true;
        }
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector v = unit_vector(f, cols, free);
        for (std::size_t k = 0; k < e.pivots.size(); ++k) {
            if (e.pivots[k] < cols) {
                v[e.pivots[k]] = -e.reduced(k, free);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::vector<Vector> kernel_basis(const Matrix& m) { return kernel_from_echelon(row_echelon(m), m.cols()); }

std::optional<Solution> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) {
        throw DimensionMismatch("solve: right-hand side has " + std::to_string(b.size()) + " entries for " +
                                std::to_string(a.rows()) + " rows");
    }
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, a.cols()) = b[r];
    }
    Echelon e = row_echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
        return std::nullopt;
    }
    Solution s{zero_vector(a.field(), a.cols()), kernel_from_echelon(e, a.cols())};
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        s.particular[e.pivots[k]] = e.reduced(k, a.cols());
    }
    return s;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) {
        return std::nullopt;
    }
    const std::size_t n = m.rows();
    Echelon e = row_echelon(m.hstack(Matrix::identity(m.field(), n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
        return std::nullopt;
    }
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inv(r, c) = e.reduced(r, n + c);
        }
    }
    return inv;
}

bool column_span_contains(const Matrix& m, const Matrix& sub) { return rank(m) == rank(m.hstack(sub)); }

} // namespace rbx
