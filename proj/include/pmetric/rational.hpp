#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace pmetric {

/// Exact rational number; all library arithmetic goes through this type.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Renders in lowest terms: "3", "-1/2".
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses an integer or "a/b". Returns nullopt on malformed input
/// (including zero denominators and floating-point syntax).
inline std::optional<Rational> parse_rational(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rational(Integer(text));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        Integer d(den);
        if (d == 0) return std::nullopt;
        return Rational(Integer(num), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace pmetric
