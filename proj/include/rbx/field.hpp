#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace rbx {

/// The ground field: the rationals or a prime field F_p.
class Field {
public:
    enum class Kind { Rationals, PrimeField };

    Field() = default;

    static Field rationals() { return Field{}; }
    /// Throws InvalidArgument unless p is a prime below 2^31.
    static Field prime(std::uint64_t p);

    Kind kind() const { return modulus_ == 0 ? Kind::Rationals : Kind::PrimeField; }
    bool is_rational() const { return modulus_ == 0; }
    bool is_prime() const { return modulus_ != 0; }
    /// Zero for the rationals.
    std::uint64_t modulus() const { return modulus_; }

    std::string describe() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : modulus_(p) {}
    std::uint64_t modulus_ = 0;
};

bool is_prime_number(std::uint64_t n);

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in [0, p).
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;
    Scalar(const Field& f, long v);
    Scalar(const Field& f, const mpq_class& v);

    static Scalar zero(const Field& f) { return Scalar(f, 0L); }
    static Scalar one(const Field& f) { return Scalar(f, 1L); }

    /// Accepts "n" or "n/d" with an unsigned d, any common factor, and normalizes.
    static Scalar parse(const Field& f, std::string_view text);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    /// Canonical text form: "n" or "n/d" over Q, decimal residue over F_p.
    std::string to_string() const;

    /// Valid only over the rationals.
    const mpq_class& rational() const { return q_; }
    /// Valid only over F_p.
    std::uint64_t residue() const { return r_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    /// Throws std::domain_error on division by zero.
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    void check_same(const Scalar& o) const;

    std::uint64_t p_ = 0;
    std::uint64_t r_ = 0;
    mpq_class q_;
};

} // namespace rbx
