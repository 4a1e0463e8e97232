#pragma once

// Lossless text forms for exact values. Integers print in decimal, rationals
// as "p/q" (or "p" when the denominator is 1), and lambda-polynomials as
// "c0 + c1*L + c2*L^2" in ascending degree with zero terms omitted.

#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exact.hpp"

namespace dharm {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string to_text(const Int& v) { return v.get_str(); }
inline std::string to_text(const Rat& v) { return v.get_str(); }

inline std::string to_text(const LPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += cs[i].get_str();
        if (i >= 1) out += "*L";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace detail

inline Int parse_int(std::string_view s) {
    s = detail::trim(s);
    if (!detail::is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return Int(std::string(s), 10);
}

inline Rat parse_rat(std::string_view s) {
    s = detail::trim(s);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    const Int num = parse_int(s.substr(0, slash));
    const std::string_view den_text = detail::trim(s.substr(slash + 1));
    if (!den_text.empty() && den_text.front() == '-')
        throw ParseError("denominator must be positive: '" + std::string(s) + "'");
    const Int den = parse_int(den_text);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Inverse of to_text(LPoly). Accepts terms "c", "c*L", "c*L^k" joined by " + ";
/// repeated powers are summed.
inline LPoly parse_lpoly(std::string_view s) {
    s = detail::trim(s);
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<Rat> coeffs;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(" + ", pos);
        const std::string_view term =
            detail::trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (term.empty()) throw ParseError("empty term in polynomial '" + std::string(s) + "'");
        std::size_t power = 0;
        std::string_view coeff_text = term;
        if (const auto star = term.find('*'); star != std::string_view::npos) {
            coeff_text = term.substr(0, star);
            std::string_view mono = detail::trim(term.substr(star + 1));
            if (mono.empty() || mono.front() != 'L')
                throw ParseError("expected L in term '" + std::string(term) + "'");
            mono.remove_prefix(1);
            if (mono.empty()) {
                power = 1;
            } else {
                if (mono.front() != '^') throw ParseError("bad monomial in '" + std::string(term) + "'");
                mono.remove_prefix(1);
                auto [ptr, ec] = std::from_chars(mono.data(), mono.data() + mono.size(), power);
                if (ec != std::errc{} || ptr != mono.data() + mono.size())
                    throw ParseError("bad exponent in '" + std::string(term) + "'");
            }
        }
        const Rat c = parse_rat(coeff_text);
        if (coeffs.size() <= power) coeffs.resize(power + 1);
        coeffs[power] += c;
        if (next == std::string_view::npos) break;
        pos = next + 3;
    }
    return LPoly(std::move(coeffs));
}

}  // namespace dharm
