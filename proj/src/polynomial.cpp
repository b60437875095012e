#include "ncsheaf/polynomial.hpp"

#include <utility>

namespace ncsheaf {

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::require_same_field(const Polynomial& a, const Polynomial& b) {
    if (a.field_ != b.field_)
        throw FieldMismatchError("polynomial field mismatch: " + field_name(a.field_) + " vs " +
                                 field_name(b.field_));
}

Polynomial Polynomial::constant(const GaussianRational& c, Field f) {
    return from_coeffs({c}, f);
}

Polynomial Polynomial::variable(Field f) {
    return from_coeffs({GaussianRational(0), GaussianRational(1)}, f);
}

Polynomial Polynomial::from_coeffs(std::vector<GaussianRational> coeffs, Field f) {
    Polynomial p(f);
    p.coeffs_ = std::move(coeffs);
    if (f == Field::real)
        for (const auto& c : p.coeffs_)
            if (!c.is_real())
                throw FieldMismatchError("complex coefficient in a real polynomial");
    p.trim();
    return p;
}

GaussianRational Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return GaussianRational(0);
    return coeffs_[static_cast<size_t>(k)];
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial::require_same_field(a, b);
    Polynomial r(a.field_);
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t k = 0; k < r.coeffs_.size(); ++k) {
        if (k < a.coeffs_.size()) r.coeffs_[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) r.coeffs_[k] += b.coeffs_[k];
    }
    r.trim();
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.field_);
    r.coeffs_.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) r.coeffs_.push_back(-c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial::require_same_field(a, b);
    Polynomial r(a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, GaussianRational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
    if (c.is_zero()) return Polynomial(p.field_);
    Polynomial r(p.field_);
    r.coeffs_.reserve(p.coeffs_.size());
    for (const auto& a : p.coeffs_) r.coeffs_.push_back(c * a);
    r.trim();
    return r;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const auto& c = coeffs_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (k == 1)
            out += "*x";
        else if (k > 1)
            out += "*x^" + std::to_string(k);
    }
    return out;
}

Polynomial poly_shift(const Polynomial& p, const GaussianRational& c) {
    if (p.field() == Field::real && !c.is_real())
        throw FieldMismatchError("complex shift of a real polynomial");
    if (c.is_zero() || p.is_zero()) return p;
    // Horner form: p(x+c) = c0 + (x+c)(c1 + (x+c)(...)).
    Polynomial result = Polynomial::zero(p.field());
    Polynomial shifted_var =
        Polynomial::from_coeffs({c, GaussianRational(1)}, p.field());
    for (int k = p.degree(); k >= 0; --k) {
        result = result * shifted_var + Polynomial::constant(p.coeff(k), p.field());
    }
    return result;
}

Polynomial poly_derivative(const Polynomial& p) {
    if (p.degree() <= 0) return Polynomial::zero(p.field());
    std::vector<GaussianRational> d;
    d.reserve(static_cast<size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k)
        d.push_back(GaussianRational(Rational(k)) * p.coeff(k));
    return Polynomial::from_coeffs(std::move(d), p.field());
}

GaussianRational poly_eval(const Polynomial& p, const GaussianRational& x) {
    if (p.field() == Field::real && !x.is_real())
        throw FieldMismatchError("complex evaluation point for a real polynomial");
    GaussianRational acc(0);
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k);
    return acc;
}

}  // namespace ncsheaf
