#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "ncsheaf/errors.hpp"

namespace ncsheaf {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored normalized: gcd(|num|, den) = 1, den >= 1.
using Rational = boost::multiprecision::cpp_rational;

enum class Field { real, complex };

std::string field_name(Field f);
Field field_from_name(std::string_view name);

/// Accepts "n", "n/d" and plain decimals like "-0.25". Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, "n/d" otherwise.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

/// Element of Q(i); the scalar field of the complexified algebra. Purely real
/// values double as the real scalar field.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long long r) : re(r) {}            // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    /// |z|^2, exact.
    Rational norm_sq() const { return re * re + im * im; }

    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        if (a.im == 0 && b.im == 0) return {a.re * b.re};
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw DomainError("division by zero");
        if (a.im == 0 && b.im == 0) return {a.re / b.re};
        Rational n = b.norm_sq();
        GaussianRational c = a * b.conj();
        return {c.re / n, c.im / n};
    }
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
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
};

std::string to_string(const GaussianRational& z);

}  // namespace ncsheaf
