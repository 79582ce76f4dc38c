#include "rbx/field.hpp"

#include "rbx/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace rbx {

bool is_prime_number(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime_number(p)) {
        throw InvalidArgument("field modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
    return Field(p);
}

std::string Field::describe() const {
    return is_rational() ? std::string("Q") : "F_" + std::to_string(modulus_);
}

namespace {

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e != 0) {
        if (e & 1U) {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1U;
    }
    return r;
}

bool valid_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

mpz_class integer_from(std::string_view s) {
    if (!s.empty() && s[0] == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

} // namespace

Scalar::Scalar(const Field& f, long v) : p_(f.modulus()) {
    if (p_ == 0) {
        q_ = v;
    } else {
        r_ = reduce(mpz_class(v), p_);
    }
}

Scalar::Scalar(const Field& f, const mpq_class& v) : p_(f.modulus()) {
    if (p_ == 0) {
        q_ = mpq_class(v.get_num(), v.get_den());
        q_.canonicalize();
    } else {
        std::uint64_t den = reduce(v.get_den(), p_);
        if (den == 0) {
            throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
        }
        r_ = mul_mod(reduce(v.get_num(), p_), pow_mod(den, p_ - 2, p_), p_);
    }
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+') {
        throw ParseError("malformed scalar \"" + std::string(text) + "\"");
    }
    mpz_class d = integer_from(den);
    if (d == 0) {
        throw ParseError("zero denominator in scalar \"" + std::string(text) + "\"");
    }
    mpq_class q(integer_from(num), d);
    q.canonicalize();
    try {
        return Scalar(f, q);
    } catch (const std::domain_error&) {
        throw ParseError("scalar \"" + std::string(text) + "\" has a denominator divisible by " +
                         std::to_string(f.modulus()));
    }
}

Field Scalar::field() const { return Field(p_); }

bool Scalar::is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

std::string Scalar::to_string() const {
    if (p_ != 0) {
        return std::to_string(r_);
    }
    return q_.get_str();
}

void Scalar::check_same(const Scalar& o) const {
    if (p_ != o.p_) {
        throw DimensionMismatch("scalars over different fields");
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (p_ == 0) {
        r.q_ = -q_;
    } else {
        r.r_ = r_ == 0 ? 0 : p_ - r_;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (p_ == 0) {
        q_ += o.q_;
    } else {
        r_ += o.r_;
        if (r_ >= p_) {
            r_ -= p_;
        }
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (p_ == 0) {
        q_ -= o.q_;
    } else {
        r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (p_ == 0) {
        q_ *= o.q_;
    } else {
        r_ = mul_mod(r_, o.r_, p_);
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw std::domain_error("division by zero");
    }
    Scalar r = *this;
    if (p_ == 0) {
        r.q_ = 1 / q_;
    } else {
        r.r_ = pow_mod(r_, p_ - 2, p_);
    }
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) {
        return false;
    }
    return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

} // namespace rbx
