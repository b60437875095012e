#pragma once

#include <vector>

#include "ncsheaf/polynomial.hpp"

namespace ncsheaf {

/// Element of the enveloping algebra of aff(1) in normal form: the finite sum
/// sum_q f_q(e1) e2^q, stored as the level sequence (f_0, f_1, ...). The last
/// stored level is a nonzero polynomial; the zero element stores no levels.
class PBWElement {
public:
    explicit PBWElement(Field f = Field::real) : field_(f) {}

    static PBWElement zero(Field f) { return PBWElement(f); }
    static PBWElement one(Field f);
    static PBWElement e1(Field f);
    static PBWElement e2(Field f);
    static PBWElement from_levels(std::vector<Polynomial> levels, Field f);
    /// c * e1^a e2^b.
    static PBWElement monomial(const GaussianRational& c, int a, int b, Field f);

    Field field() const { return field_; }
    bool is_zero() const { return levels_.empty(); }
    /// Highest e2-power with a nonzero coefficient polynomial; -1 for zero.
    int e2_degree() const { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<Polynomial>& levels() const { return levels_; }
    /// f_q; the zero polynomial beyond the stored levels.
    Polynomial level(int q) const;

    friend PBWElement operator+(const PBWElement& a, const PBWElement& b);
    friend PBWElement operator-(const PBWElement& a, const PBWElement& b);
    friend PBWElement operator-(const PBWElement& a);
    friend PBWElement operator*(const GaussianRational& c, const PBWElement& a);

    friend bool operator==(const PBWElement& a, const PBWElement& b) {
        return a.field_ == b.field_ && a.levels_ == b.levels_;
    }
    friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

    std::string str() const;

private:
    Field field_;
    std::vector<Polynomial> levels_;

    void trim();
    static void require_same_field(const PBWElement& a, const PBWElement& b);
    friend PBWElement pbw_mul(const PBWElement&, const PBWElement&);
    friend PBWElement pbw_mul_oracle(const PBWElement&, const PBWElement&);
};

/// Normal-form product. Since e2^i e1 = (e1 - i) e2^i, the product of
/// sum_i f_i e2^i and sum_j g_j e2^j has levels h_q(x) = sum_{i+j=q} f_i(x) g_j(x-i).
PBWElement pbw_mul(const PBWElement& a, const PBWElement& b);

/// Independent check of pbw_mul: expands both factors into words over {e1, e2},
/// concatenates, and rewrites e2 e1 -> e1 e2 - e2 until every word is normal
/// ordered. Exact and terminating (each step moves an e1 left or shortens a word).
PBWElement pbw_mul_oracle(const PBWElement& a, const PBWElement& b);

/// ab - ba.
PBWElement pbw_bracket(const PBWElement& a, const PBWElement& b);

}  // namespace ncsheaf
