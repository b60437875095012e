#pragma once

#include <vector>

#include "ncsheaf/rational.hpp"

namespace ncsheaf {

/// Dense univariate polynomial over exact scalars, coefficient index = degree.
/// Invariants: the trailing coefficient is nonzero (the zero polynomial has no
/// coefficients), and a real-tagged polynomial has no imaginary parts.
class Polynomial {
public:
    explicit Polynomial(Field f = Field::real) : field_(f) {}

    static Polynomial zero(Field f) { return Polynomial(f); }
    static Polynomial constant(const GaussianRational& c, Field f);
    /// The identity polynomial x.
    static Polynomial variable(Field f);
    static Polynomial from_coeffs(std::vector<GaussianRational> coeffs, Field f);

    Field field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
    GaussianRational coeff(int k) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str() const;

private:
    Field field_;
    std::vector<GaussianRational> coeffs_;

    void trim();
    static void require_same_field(const Polynomial& a, const Polynomial& b);
};

/// x -> p(x + c), exact (degree-preserving Taylor shift).
Polynomial poly_shift(const Polynomial& p, const GaussianRational& c);

/// Exact formal derivative.
Polynomial poly_derivative(const Polynomial& p);

/// Exact Horner evaluation.
GaussianRational poly_eval(const Polynomial& p, const GaussianRational& x);

}  // namespace ncsheaf
