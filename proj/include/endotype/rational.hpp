#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace endotype {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact element of Q(i).  Both parts are arbitrary-precision rationals in
/// canonical reduced form (cpp_rational keeps them reduced), so equality is
/// exact structural equality.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(long num, long den) : re(Rational(num, den)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool isZero() const { return re == 0 && im == 0; }
    bool isReal() const { return im == 0; }
    /// True when the value lies in Z (real with denominator 1).
    bool isInteger() const {
        return im == 0 && boost::multiprecision::denominator(re) == 1;
    }
    BigInt integerValue() const {
        if (!isInteger()) throw std::logic_error("GaussianRational: not an integer");
        return boost::multiprecision::numerator(re);
    }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2 as a rational.
    Rational normSq() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.normSq();
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    /// Lexicographic order; used only as a container key, no numeric meaning.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    GaussianRational pow(long e) const {
        if (e < 0) return (GaussianRational(1) / *this).pow(-e);
        GaussianRational acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Sign of a real value; throws on non-real input.
    int sign() const {
        if (im != 0) throw std::logic_error("GaussianRational: sign of non-real value");
        return re == 0 ? 0 : (re > 0 ? 1 : -1);
    }
};

inline std::string toString(const Rational& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
        s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

/// Canonical text form matching the query grammar
/// [+-]?INT(/INT)?([+-]INT(/INT)?i)?  e.g. "3/2", "1+1i", "-5/2-2i".
inline std::string toString(const GaussianRational& z) {
    std::string s = toString(z.re);
    if (z.im != 0) {
        if (z.im > 0) s += "+";
        s += toString(z.im) + "i";
    }
    return s;
}

namespace detail {

inline bool parseRationalPart(std::string_view text, size_t& pos, Rational& out) {
    size_t start = pos;
    BigInt num, den(1);
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) {
        pos = start;
        return false;
    }
    num = BigInt(std::string(text.substr(digits, pos - digits)));
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        size_t d2 = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == d2) {
            pos = start;
            return false;
        }
        den = BigInt(std::string(text.substr(d2, pos - d2)));
        if (den == 0) {
            pos = start;
            return false;
        }
    }
    if (neg) num = -num;
    out = Rational(num, den);
    return true;
}

} // namespace detail

/// Parses the grammar above; returns nullopt if `text` is not entirely one value.
inline std::optional<GaussianRational> parseGaussianRational(std::string_view text) {
    size_t pos = 0;
    Rational re;
    if (!detail::parseRationalPart(text, pos, re)) return std::nullopt;
    if (pos == text.size()) return GaussianRational(re);
    Rational im;
    size_t mark = pos;
    if (!detail::parseRationalPart(text, pos, im)) return std::nullopt;
    if (pos >= text.size() || text[pos] != 'i') return std::nullopt;
    if (text[mark] != '+' && text[mark] != '-') return std::nullopt;
    ++pos;
    if (pos != text.size()) return std::nullopt;
    return GaussianRational(re, im);
}

} // namespace endotype
