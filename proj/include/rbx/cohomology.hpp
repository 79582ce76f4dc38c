#pragma once

#include "rbx/representation.hpp"

#include <optional>
#include <vector>

namespace rbx {

using Tuple = std::vector<std::size_t>;

/// Strictly increasing k-tuples from {0..n-1} in lexicographic order.
std::vector<Tuple> increasing_tuples(std::size_t n, std::size_t k);

/// An alternating map from the degree-th exterior power of g to h, stored by
/// its values on increasing basis tuples.
class Cochain {
public:
    Cochain() = default;
    /// The zero cochain.
    Cochain(const Field& f, std::size_t gdim, std::size_t hdim, std::size_t degree);

    std::size_t degree() const { return degree_; }
    std::size_t gdim() const { return gdim_; }
    std::size_t hdim() const { return hdim_; }
    const Field& field() const { return field_; }

    const std::vector<Tuple>& tuples() const { return tuples_; }
    /// Value on the k-th increasing tuple.
    const Vector& value(std::size_t k) const { return values_[k]; }
    void set_value(std::size_t k, const Vector& v);
    std::size_t index_of(const Tuple& increasing) const;

    /// Value on basis vectors in any order: signed, zero on repeats.
    Vector eval_basis(const Tuple& indices) const;
    /// Multilinear evaluation on arbitrary vectors.
    Vector eval(const std::vector<Vector>& args) const;

    bool is_zero() const;

    /// Tuple-major, h-coordinate-minor.
    Vector flatten() const;
    static Cochain unflatten(const Field& f, std::size_t gdim, std::size_t hdim, std::size_t degree,
                             const Vector& coords);
    std::size_t flat_size() const { return tuples_.size() * hdim_; }

    /// Degree-1 cochain as an hdim x gdim matrix and back.
    Matrix as_matrix() const;
    static Cochain from_matrix(const Matrix& m);

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Scalar& s, Cochain c);
    /// Post-compose every value with a linear map on h.
    friend Cochain operator*(const Matrix& m, const Cochain& c);
    friend bool operator==(const Cochain&, const Cochain&) = default;

private:
    void require_same_shape(const Cochain& o) const;

    Field field_;
    std::size_t gdim_ = 0;
    std::size_t hdim_ = 0;
    std::size_t degree_ = 0;
    std::vector<Tuple> tuples_;
    std::vector<Vector> values_;
};

/// An element (f, theta) of C^n ⊕ C^(n-1); theta is absent in degree 1.
struct RBCochain {
    Cochain f;
    std::optional<Cochain> theta;

    std::size_t degree() const { return f.degree(); }
    Vector flatten() const;
    bool is_zero() const { return f.is_zero() && (!theta || theta->is_zero()); }
    friend bool operator==(const RBCochain&, const RBCochain&) = default;
};

RBCochain zero_rb_cochain(const Representation& r, std::size_t degree);
RBCochain unflatten_rb_cochain(const Representation& r, std::size_t degree, const Vector& coords);
std::size_t rb_cochain_size(const Representation& r, std::size_t degree);

/// Chevalley-Eilenberg differential with coefficients in the psi-action.
Cochain ce_differential(const Representation& r, const Cochain& f);

/// The twisted differential: action psi_{T x} - S psi_x and bracket
/// [T x, y] + [x, T y].
Cochain rb_twisted_differential(const Representation& r, const Cochain& f);

/// The combined differential; degree 1 maps f to (delta f, S f - f T).
RBCochain rbl_differential(const Representation& r, const RBCochain& c);

/// Matrix of the combined differential on flattened coordinates, degree n to n+1.
Matrix rbl_differential_matrix(const Representation& r, std::size_t degree);

struct SecondCohomology {
    std::size_t zdim = 0;
    std::size_t bdim = 0;
    std::size_t hdim = 0;
    std::vector<RBCochain> cocycle_basis;
    std::vector<RBCochain> coboundary_basis;
    std::vector<RBCochain> complement_reps;
};

/// Throws InvalidArgument when h carries a nonzero bracket.
SecondCohomology second_cohomology(const Representation& r);

struct CohomologyDims {
    std::size_t zdim = 0;
    std::size_t bdim = 0;
    std::size_t hdim = 0;
};

/// Dimensions of Z^n, B^n and H^n of the combined complex, n >= 1.
CohomologyDims cohomology_dims(const Representation& r, std::size_t degree);

/// Coordinates of the class of a 2-cocycle in the complement_reps basis;
/// empty when c is not a cocycle.
std::optional<Vector> cohomology_coordinates(const Representation& r, const SecondCohomology& h2,
                                             const RBCochain& c);

/// Basis of Der(g_T, h_S) as hdim x gdim matrices.
std::vector<Matrix> derivation_space(const Representation& r);

} // namespace rbx
