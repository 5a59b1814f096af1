#include <gtest/gtest.h>

#include <string>

#include "epkit/exactnum.hpp"
#include "support.hpp"

using namespace epkit;
using testing_support::g;

TEST(Rational, ParsesAndNormalizes) {
    EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("-2"), Rational(-2));
    EXPECT_EQ(Rational::parse("0/5").to_string(), "0");
    EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "1//2", "1/0", "abc", "1/", "/2", "--1", "1.5"}) {
        EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
    }
    EXPECT_THROW(Rational(1, 0), ArithmeticError);
}

TEST(Rational, DivisionByZeroThrows) {
    EXPECT_THROW(Rational(1) / Rational(0), ArithmeticError);
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(GaussianRational, Arithmetic) {
    EXPECT_EQ(g("1/2+1i") * g("1/2-1i"), g("5/4"));
    EXPECT_EQ(g("3/4") + g("1/4"), g("1"));
    EXPECT_EQ(g("1i") / g("1i"), g("1"));
    EXPECT_EQ(g("1+2i") * g("3-1i"), g("5+5i"));
    EXPECT_EQ(g("1") / g("1+1i"), g("1/2-1/2i"));
    EXPECT_THROW(g("1+1i") / g("0"), ArithmeticError);
}

TEST(GaussianRational, Conjugate) {
    EXPECT_EQ(conj(g("1+2i")), g("1-2i"));
    EXPECT_EQ(conj(g("5")), g("5"));
    EXPECT_EQ(conj(g("0")), g("0"));
}

TEST(GaussianRational, TextRoundTrip) {
    for (const char* s : {"0", "7", "-1/3", "1i", "-1i", "-2i", "3/4+1/2i", "-5-7/9i", "2/3i"}) {
        const GaussianRational x = g(s);
        EXPECT_EQ(GaussianRational::parse(x.to_string()), x) << s;
    }
    EXPECT_EQ(g("3/4+1/2i").to_string(), "3/4+1/2i");
    EXPECT_EQ(g("0-2i").to_string(), "-2i");
    EXPECT_EQ(g("5+0i").to_string(), "5");
    EXPECT_EQ(g("1i"), GaussianRational::imaginary_unit());
    EXPECT_THROW(g("i"), ParseError);
}

TEST(GaussianRational, RejectsMalformedText) {
    for (const char* bad : {"1//2", "1+", "1+2", "2ii", "i1", "1+2j", " 1"}) {
        EXPECT_THROW(GaussianRational::parse(bad), ParseError) << bad;
    }
}

TEST(ToFloat, NearestDouble) {
    EXPECT_EQ(to_float(g("1/2")), std::complex<double>(0.5, 0.0));
    EXPECT_EQ(Rational(1, 3).to_double(), 1.0 / 3.0);
    EXPECT_EQ(to_float(g("-1/3+2/7i")), std::complex<double>(-1.0 / 3.0, 2.0 / 7.0));
}

TEST(ToFloat, OverflowThrows) {
    const std::string huge = "1" + std::string(400, '0');
    EXPECT_THROW((void)Rational::parse(huge).to_double(), ConversionError);
    EXPECT_THROW(to_float(GaussianRational(Rational(0), Rational::parse(huge))), ConversionError);
}
