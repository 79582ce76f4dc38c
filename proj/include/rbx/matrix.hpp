#pragma once

#include "rbx/field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rbx {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t k);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);

/// Dense row-major matrix over a single field. A linear map is stored with the
/// images of the domain basis vectors as its columns.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix scalar(const Field& f, std::size_t n, long v);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<long>>& rows);
    static Matrix from_columns(const Field& f, std::size_t rows, std::span<const Vector> cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Scalar> entries() const { return data_; }
    std::span<Scalar> entries() { return data_; }

    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);
    Vector row(std::size_t r) const;

    /// Matrix-vector product.
    Vector apply(const Vector& v) const;

    /// [this | other]
    Matrix hstack(const Matrix& other) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form with pivot columns chosen left to right, first
/// nonzero row in each column.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Exact elimination: fraction-free over Q, plain Gauss-Jordan over F_p.
Echelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}. One vector per non-pivot column, with a 1 in that
/// column, in increasing column order.
std::vector<Vector> kernel_basis(const Matrix& m);

struct Solution {
    Vector particular;
    std::vector<Vector> kernel;
};

/// Empty when a x = b is inconsistent. Free variables are set to zero in the
/// particular solution.
std::optional<Solution> solve(const Matrix& a, const Vector& b);

/// Empty when m is singular or not square.
std::optional<Matrix> inverse(const Matrix& m);

/// True when every column of sub lies in the column span of m.
bool column_span_contains(const Matrix& m, const Matrix& sub);

} // namespace rbx
