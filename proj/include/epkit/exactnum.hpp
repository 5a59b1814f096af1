#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace epkit {

/// Raised on division by zero and other undefined field operations.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an exact value has no finite binary64 image.
class ConversionError : public std::range_error {
public:
    using std::range_error::range_error;
};

/// Raised when scalar or matrix text does not match the accepted grammar.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}                    // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    /// Parses `['-'] digits ['/' digits]`.
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Nearest binary64 value; throws ConversionError on overflow.
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    mpq_class value_;
};

/// Complex number with rational real and imaginary parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}                     // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}      // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    /// Parses `R | R ('+'|'-') R 'i' | R 'i'` with no whitespace.
    static GaussianRational parse(std::string_view text);
    static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] const Rational& re() const { return re_; }
    [[nodiscard]] const Rational& im() const { return im_; }

    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const { return im_.is_zero(); }

    [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    [[nodiscard]] Rational norm2() const { return re_ * re_ + im_ * im_; }

    [[nodiscard]] std::complex<double> to_complex() const;
    /// Canonical text form; parse(to_string()) reproduces the value.
    [[nodiscard]] std::string to_string() const;

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
    friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
    friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
    friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }
    friend GaussianRational operator-(const GaussianRational& x) { return {-x.re_, -x.im_}; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational conj(const GaussianRational& x) { return x.conj(); }
inline std::complex<double> to_float(const GaussianRational& x) { return x.to_complex(); }

std::ostream& operator<<(std::ostream& os, const Rational& x);
std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace epkit
