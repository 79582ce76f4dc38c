#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rbx {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands have incompatible shapes or live over different fields.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An argument failed a membership/validity precondition (not an automorphism,
/// not a section, broken exactness, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would need more candidates than allowed.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string what, std::uint64_t required, std::uint64_t budget)
        : Error(what + ": needs " + std::to_string(required) + " candidates, budget is " +
                std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// Malformed input text or file.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace rbx
