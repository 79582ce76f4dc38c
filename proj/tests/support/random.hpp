#pragma once

#include "rbx/matrix.hpp"

#include <cstdint>
#include <random>

namespace rbx::testing {

/// Small-entry random scalars and matrices for property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(gen_); }
    long between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

    Scalar scalar(const Field& f) {
        if (f.is_prime()) {
            return Scalar(f, static_cast<long>(below(f.modulus())));
        }
        if (coin(0.3)) {
            return Scalar(f, 0L);
        }
        mpq_class q(between(-4, 4), static_cast<unsigned long>(between(1, 3)));
        q.canonicalize();
        return Scalar(f, q);
    }

    Vector vector(const Field& f, std::size_t n) {
        Vector v;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(scalar(f));
        }
        return v;
    }

    Matrix matrix(const Field& f, std::size_t rows, std::size_t cols) {
        Matrix m(f, rows, cols);
        for (auto& x : m.entries()) {
            x = scalar(f);
        }
        return m;
    }

    /// Random matrix of rank at most r: product of random rows x r and r x cols.
    Matrix low_rank(const Field& f, std::size_t rows, std::size_t cols, std::size_t r) {
        return matrix(f, rows, r) * matrix(f, r, cols);
    }

    Matrix invertible(const Field& f, std::size_t n) {
        while (true) {
            Matrix m = matrix(f, n, n);
            if (rank(m) == n) {
                return m;
            }
        }
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

} // namespace rbx::testing
