#pragma once

/// @file rational.hpp
/// @brief Exact rational arithmetic backbone (GMP-backed) plus a strict
///        string grammar: "p", "p/q" with arbitrary-precision p, q.
///
/// Every Rational in this library is kept canonical: gcd(num, den) = 1 and
/// den > 0. GMP preserves canonical form through arithmetic, so the only
/// places that must canonicalize are construction and parsing, both of
/// which are funneled through the helpers below.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace vecrec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Build a canonical rational, rejecting zero denominators.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("rational denominator must be nonzero");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

namespace detail {

// Accepts [+-]?digits only. GMP's own string parser skips interior
// whitespace, which is too lax for a wire format.
inline bool is_strict_integer(std::string_view text) {
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        text.remove_prefix(1);
    }
    if (text.empty()) return false;
    for (char ch : text) {
        if (ch < '0' || ch > '9') return false;
    }
    return true;
}

inline Integer parse_integer(std::string_view text) {
    if (!is_strict_integer(text)) {
        throw std::invalid_argument("invalid integer literal: '" + std::string(text) + "'");
    }
    if (text.front() == '+') text.remove_prefix(1);  // mpz_set_str refuses '+'
    return Integer(std::string(text));
}

}  // namespace detail

/// Parse "p" or "p/q" into a canonical rational. Throws std::invalid_argument
/// on grammar violations and std::domain_error on a zero denominator.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(detail::parse_integer(text));
    }
    if (text.find('/', slash + 1) != std::string_view::npos) {
        throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    }
    const Integer num = detail::parse_integer(text.substr(0, slash));
    const Integer den = detail::parse_integer(text.substr(slash + 1));
    return make_rational(num, den);
}

/// Canonical string form: "p" when den == 1, otherwise "p/q".
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace vecrec
