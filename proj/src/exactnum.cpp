#include "epkit/exactnum.hpp"

#include <cctype>
#include <cmath>

#include <mpfr.h>

namespace epkit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw ArithmeticError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw ArithmeticError("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
}

double Rational::to_double() const {
    mpfr_t tmp;
    mpfr_init2(tmp, 53);
    mpfr_set_q(tmp, value_.get_mpq_t(), MPFR_RNDN);
    const double out = mpfr_get_d(tmp, MPFR_RNDN);
    mpfr_clear(tmp);
    if (!std::isfinite(out)) throw ConversionError("rational " + to_string() + " overflows binary64");
    return out;
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw ArithmeticError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

GaussianRational GaussianRational::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    if (text.back() != 'i') return Rational::parse(text);

    std::string_view body = text.substr(0, text.size() - 1);
    // Split on the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return {Rational(0), Rational::parse(body)};

    Rational re = Rational::parse(body.substr(0, split));
    std::string_view im_text = body.substr(split + 1);
    if (!im_text.empty() && im_text.front() == '-') {
        throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    Rational im = Rational::parse(im_text);
    if (body[split] == '-') im = -im;
    return {std::move(re), std::move(im)};
}

std::complex<double> GaussianRational::to_complex() const {
    return {re_.to_double(), im_.to_double()};
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    if (re_.is_zero()) return im_.to_string() + "i";
    const std::string sign = im_.sign() < 0 ? "-" : "+";
    const Rational mag = im_.sign() < 0 ? -im_ : im_;
    return re_.to_string() + sign + mag.to_string() + "i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    if (im_.is_zero() && rhs.im_.is_zero()) {
        re_ *= rhs.re_;
        return *this;
    }
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    Rational im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    if (rhs.is_zero()) throw ArithmeticError("division by zero");
    if (rhs.im_.is_zero()) {
        re_ /= rhs.re_;
        im_ /= rhs.re_;
        return *this;
    }
    const Rational denom = rhs.norm2();
    *this *= rhs.conj();
    re_ /= denom;
    im_ /= denom;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

}  // namespace epkit
