#pragma once

#include "rbx/matrix.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace rbx {

/// Default cap on the number of candidates an exhaustive enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 6561; // 3^8

/// p^e, saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t p, std::uint64_t e);

/// Finite-dimensional Lie algebra given by dense structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k, with both (i, j) and (j, i) stored.
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// The abelian algebra of the given dimension.
    LieAlgebra(const Field& f, std::size_t dim);

    struct Entry {
        std::size_t i;
        std::size_t j;
        Vector value;
    };
    /// Sets [e_i, e_j] = value and [e_j, e_i] = -value for every entry.
    static LieAlgebra from_table(const Field& f, std::size_t dim, const std::vector<Entry>& table);

    std::size_t dim() const { return dim_; }
    const Field& field() const { return field_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
    /// Raw write access; does not touch the (j, i) entry.
    void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { c_[(i * dim_ + j) * dim_ + k] = v; }

    Vector bracket_basis(std::size_t i, std::size_t j) const;
    Vector bracket(const Vector& x, const Vector& y) const;
    /// Matrix of y -> [x, y].
    Matrix ad(const Vector& x) const;
    Matrix ad_basis(std::size_t i) const;
    bool is_abelian() const;

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    Field field_;
    std::size_t dim_ = 0;
    std::vector<Scalar> c_;
};

/// A Lie algebra with a weight-zero Rota-Baxter operator.
struct RBLieAlgebra {
    LieAlgebra lie;
    Matrix op;

    std::size_t dim() const { return lie.dim(); }
    const Field& field() const { return lie.field(); }
    friend bool operator==(const RBLieAlgebra&, const RBLieAlgebra&) = default;
};

/// First (i, j, k) with c(i, j, k) != -c(j, i, k), if any.
std::optional<std::array<std::size_t, 3>> antisymmetry_violation(const LieAlgebra& l);

/// Antisymmetry plus the Jacobi identity on all basis triples i < j < k.
bool check_jacobi(const LieAlgebra& l);

/// [T x, T y] = T([T x, y] + [x, T y]) on basis pairs i < j.
bool check_rota_baxter(const LieAlgebra& l, const Matrix& t);

/// f([x, y]) = [f x, f y] on basis pairs i < j.
bool preserves_bracket(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& f);

/// Bracket preservation and dst.op * f == f * src.op.
bool check_rb_morphism(const RBLieAlgebra& src, const RBLieAlgebra& dst, const Matrix& f);

bool is_rb_automorphism(const RBLieAlgebra& a, const Matrix& f);

/// Basis of Der(l) as matrices; unknown D(r, c) is coordinate r * n + c.
std::vector<Matrix> derivation_algebra(const LieAlgebra& l);

/// Calls visit(m) for each of the p^(rows*cols) matrices over F_p, entries
/// counted in row-major order with the first entry most significant.
/// Stops early when visit returns false.
template <typename Visit>
void for_each_matrix(const Field& f, std::size_t rows, std::size_t cols, Visit&& visit) {
    const std::uint64_t p = f.modulus();
    const std::size_t n = rows * cols;
    std::vector<std::uint64_t> digits(n, 0);
    Matrix m(f, rows, cols);
    while (true) {
        if (!visit(static_cast<const Matrix&>(m))) {
            return;
        }
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < p) {
                m.entries()[pos] = Scalar(f, static_cast<long>(digits[pos]));
                break;
            }
            digits[pos] = 0;
            m.entries()[pos] = Scalar::zero(f);
            if (pos == 0) {
                return;
            }
        }
        if (n == 0) {
            return;
        }
    }
}

/// Every RB automorphism of a over F_p, in lexicographic order of entries.
/// Throws BudgetExceeded when p^(n^2) > budget, InvalidArgument over Q.
std::vector<Matrix> enumerate_rb_automorphisms(const RBLieAlgebra& a, std::uint64_t budget = kDefaultBudget);

} // namespace rbx
