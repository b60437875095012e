#include "ncsheaf/pbw.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <utility>

namespace ncsheaf {

void PBWElement::trim() {
    while (!levels_.empty() && levels_.back().is_zero()) levels_.pop_back();
}

void PBWElement::require_same_field(const PBWElement& a, const PBWElement& b) {
    if (a.field_ != b.field_)
        throw FieldMismatchError("PBW field mismatch: " + field_name(a.field_) + " vs " +
                                 field_name(b.field_));
}

PBWElement PBWElement::one(Field f) {
    return from_levels({Polynomial::constant(GaussianRational(1), f)}, f);
}

PBWElement PBWElement::e1(Field f) { return from_levels({Polynomial::variable(f)}, f); }

PBWElement PBWElement::e2(Field f) {
    return from_levels({Polynomial::zero(f), Polynomial::constant(GaussianRational(1), f)}, f);
}

PBWElement PBWElement::from_levels(std::vector<Polynomial> levels, Field f) {
    PBWElement a(f);
    for (const auto& p : levels)
        if (p.field() != f) throw FieldMismatchError("level polynomial field mismatch");
    a.levels_ = std::move(levels);
    a.trim();
    return a;
}

PBWElement PBWElement::monomial(const GaussianRational& c, int a, int b, Field f) {
    std::vector<GaussianRational> coeffs(static_cast<size_t>(a) + 1, GaussianRational(0));
    coeffs.back() = c;
    std::vector<Polynomial> levels(static_cast<size_t>(b) + 1, Polynomial::zero(f));
    levels.back() = Polynomial::from_coeffs(std::move(coeffs), f);
    return from_levels(std::move(levels), f);
}

Polynomial PBWElement::level(int q) const {
    if (q < 0 || q >= static_cast<int>(levels_.size())) return Polynomial::zero(field_);
    return levels_[static_cast<size_t>(q)];
}

PBWElement operator+(const PBWElement& a, const PBWElement& b) {
    PBWElement::require_same_field(a, b);
    PBWElement r(a.field_);
    size_t n = std::max(a.levels_.size(), b.levels_.size());
    r.levels_.reserve(n);
    for (size_t q = 0; q < n; ++q)
        r.levels_.push_back(a.level(static_cast<int>(q)) + b.level(static_cast<int>(q)));
    r.trim();
    return r;
}

PBWElement operator-(const PBWElement& a, const PBWElement& b) { return a + (-b); }

PBWElement operator-(const PBWElement& a) {
    PBWElement r(a.field_);
    r.levels_.reserve(a.levels_.size());
    for (const auto& p : a.levels_) r.levels_.push_back(-p);
    return r;
}

PBWElement operator*(const GaussianRational& c, const PBWElement& a) {
    PBWElement r(a.field_);
    r.levels_.reserve(a.levels_.size());
    for (const auto& p : a.levels_) r.levels_.push_back(c * p);
    r.trim();
    return r;
}

std::string PBWElement::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t q = 0; q < levels_.size(); ++q) {
        if (levels_[q].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "[" + levels_[q].str() + "]e2^" + std::to_string(q);
    }
    return out;
}

PBWElement pbw_mul(const PBWElement& a, const PBWElement& b) {
    PBWElement::require_same_field(a, b);
    PBWElement r(a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    int deg = a.e2_degree() + b.e2_degree();
    r.levels_.assign(static_cast<size_t>(deg) + 1, Polynomial::zero(a.field_));
    for (int i = 0; i <= a.e2_degree(); ++i) {
        const Polynomial& f = a.levels_[static_cast<size_t>(i)];
        if (f.is_zero()) continue;
        for (int j = 0; j <= b.e2_degree(); ++j) {
            const Polynomial& g = b.levels_[static_cast<size_t>(j)];
            if (g.is_zero()) continue;
            r.levels_[static_cast<size_t>(i + j)] +=
                f * poly_shift(g, GaussianRational(Rational(-i)));
        }
    }
    r.trim();
    return r;
}

namespace {

// Words over the alphabet {'1' = e1, '2' = e2}. A word is normal once no '2'
// precedes a '1'. normal_form maps a word to an integer combination of normal
// monomials (a, b) = e1^a e2^b; results are memoized across calls.
using NormalCombo = std::map<std::pair<int, int>, BigInt>;

const NormalCombo& normal_form(const std::string& word) {
    static std::unordered_map<std::string, NormalCombo> memo;
    if (auto it = memo.find(word); it != memo.end()) return it->second;

    NormalCombo combo;
    auto pos = word.find("21");
    if (pos == std::string::npos) {
        int ones = 0;
        while (ones < static_cast<int>(word.size()) && word[static_cast<size_t>(ones)] == '1')
            ++ones;
        combo[{ones, static_cast<int>(word.size()) - ones}] = 1;
    } else {
        // e2 e1 -> e1 e2 - e2 at the first inversion.
        std::string swapped = word;
        swapped[pos] = '1';
        swapped[pos + 1] = '2';
        std::string dropped = word.substr(0, pos + 1) + word.substr(pos + 2);
        combo = normal_form(swapped);
        for (const auto& [mono, coeff] : normal_form(dropped)) {
            auto& c = combo[mono];
            c -= coeff;
            if (c == 0) combo.erase(mono);
        }
    }
    return memo.emplace(word, std::move(combo)).first->second;
}

}  // namespace

PBWElement pbw_mul_oracle(const PBWElement& a, const PBWElement& b) {
    PBWElement::require_same_field(a, b);
    Field f = a.field();

    // Monomial expansions c * e1^k e2^q of both factors.
    auto expand = [](const PBWElement& x) {
        std::vector<std::tuple<int, int, GaussianRational>> monos;
        for (int q = 0; q <= x.e2_degree(); ++q) {
            Polynomial fq = x.level(q);
            for (int k = 0; k <= fq.degree(); ++k)
                if (!fq.coeff(k).is_zero()) monos.emplace_back(k, q, fq.coeff(k));
        }
        return monos;
    };

    std::map<std::pair<int, int>, GaussianRational> acc;
    for (const auto& [k1, q1, c1] : expand(a)) {
        for (const auto& [k2, q2, c2] : expand(b)) {
            std::string word;
            word.append(static_cast<size_t>(k1), '1');
            word.append(static_cast<size_t>(q1), '2');
            word.append(static_cast<size_t>(k2), '1');
            word.append(static_cast<size_t>(q2), '2');
            GaussianRational c = c1 * c2;
            for (const auto& [mono, n] : normal_form(word)) {
                auto& slot = acc[mono];
                slot += GaussianRational(Rational(n)) * c;
                if (slot.is_zero()) acc.erase(mono);
            }
        }
    }

    int max_level = -1;
    for (const auto& [mono, c] : acc) max_level = std::max(max_level, mono.second);
    std::vector<std::vector<GaussianRational>> coeffs(static_cast<size_t>(max_level) + 1);
    for (const auto& [mono, c] : acc) {
        auto& cs = coeffs[static_cast<size_t>(mono.second)];
        if (static_cast<int>(cs.size()) <= mono.first)
            cs.resize(static_cast<size_t>(mono.first) + 1, GaussianRational(0));
        cs[static_cast<size_t>(mono.first)] = c;
    }
    std::vector<Polynomial> levels;
    levels.reserve(coeffs.size());
    for (auto& cs : coeffs) levels.push_back(Polynomial::from_coeffs(std::move(cs), f));
    return PBWElement::from_levels(std::move(levels), f);
}

PBWElement pbw_bracket(const PBWElement& a, const PBWElement& b) {
    return pbw_mul(a, b) - pbw_mul(b, a);
}

}  // namespace ncsheaf
