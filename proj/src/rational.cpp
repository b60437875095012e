#include "ncsheaf/rational.hpp"

#include <cctype>

namespace ncsheaf {

std::string field_name(Field f) { return f == Field::real ? "real" : "complex"; }

Field field_from_name(std::string_view name) {
    if (name == "real") return Field::real;
    if (name == "complex") return Field::complex;
    throw ParseError("unknown field tag: " + std::string(name));
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("empty rational literal: '" + std::string(text) + "'");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed rational literal: '" + std::string(text) + "'");
        BigInt d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Rational(BigInt{std::string(num)}, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp))
            throw ParseError("malformed decimal literal: '" + std::string(text) + "'");
        BigInt scale = 1;
        for (size_t k = 0; k < fp.size(); ++k) scale *= 10;
        BigInt whole = ip.empty() ? BigInt(0) : BigInt{std::string(ip)};
        value = Rational(whole * scale + BigInt{std::string(fp)}, scale);
    } else {
        if (!all_digits(s)) throw ParseError("malformed rational literal: '" + std::string(text) + "'");
        value = Rational(BigInt{std::string(s)});
    }
    return neg ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return to_string(z.re);
    return to_string(z.re) + (z.im > 0 ? "+" : "") + to_string(z.im) + "i";
}

}  // namespace ncsheaf
