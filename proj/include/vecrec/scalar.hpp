#pragma once

/// @file scalar.hpp
/// @brief Gaussian rationals: the exact computable subfield of ℂ used as
///        the base field everywhere in this library.
///
/// A Scalar is re + im·i with both parts canonical rationals. All
/// arithmetic is exact; division by zero throws. The string grammar is
///   "p/q"          real-only value (integer shorthand "p" when q = 1)
///   "p/q+r/si"     nonzero imaginary part, sign folded into the 'r' term
/// and the parser additionally accepts pure-imaginary shorthands such as
/// "2i", "-i", "3/4i".

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "rational.hpp"

namespace vecrec {

class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conjugate() const { return Scalar(re_, Rational(-im_)); }

    /// Squared modulus re² + im²; rational, zero iff the scalar is zero.
    Rational norm() const {
        Rational n = re_ * re_ + im_ * im_;
        return n;
    }

    Scalar& operator+=(const Scalar& rhs) {
        re_ += rhs.re_;
        im_ += rhs.im_;
        return *this;
    }

    Scalar& operator-=(const Scalar& rhs) {
        re_ -= rhs.re_;
        im_ -= rhs.im_;
        return *this;
    }

    Scalar& operator*=(const Scalar& rhs) {
        // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
        Rational re = re_ * rhs.re_ - im_ * rhs.im_;
        Rational im = re_ * rhs.im_ + im_ * rhs.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    Scalar& operator/=(const Scalar& rhs) {
        const Rational n = rhs.norm();
        if (n == 0) throw std::domain_error("scalar division by zero");
        Rational re = (re_ * rhs.re_ + im_ * rhs.im_) / n;
        Rational im = (im_ * rhs.re_ - re_ * rhs.im_) / n;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    Scalar operator-() const { return Scalar(Rational(-re_), Rational(-im_)); }

    friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
        return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
    }
    friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

private:
    Rational re_;
    Rational im_;
};

inline std::string to_string(const Scalar& s) {
    if (s.is_real()) return to_string(s.real());
    std::string out = to_string(s.real());
    if (s.imag() > 0) out += '+';
    out += to_string(s.imag());
    out += 'i';
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << to_string(s);
}

/// Parse the scalar grammar described in the file header.
inline Scalar parse_scalar(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty scalar literal");

    // Locate a '+'/'-' separating the real and imaginary terms: it must not
    // be the leading sign and must not follow a '/'.
    std::string_view::size_type split = std::string_view::npos;
    for (std::string_view::size_type pos = 1; pos < text.size(); ++pos) {
        if ((text[pos] == '+' || text[pos] == '-') && text[pos - 1] != '/') {
            split = pos;
        }
    }

    const auto parse_imag_term = [](std::string_view term) -> Rational {
        // 'term' still carries its trailing 'i'.
        term.remove_suffix(1);
        if (term.empty() || term == "+") return Rational(1);
        if (term == "-") return Rational(-1);
        return parse_rational(term);
    };

    if (text.back() == 'i') {
        if (split == std::string_view::npos) {
            return Scalar(Rational(0), parse_imag_term(text));
        }
        return Scalar(parse_rational(text.substr(0, split)), parse_imag_term(text.substr(split)));
    }
    if (split != std::string_view::npos) {
        throw std::invalid_argument("invalid scalar literal: '" + std::string(text) + "'");
    }
    return Scalar(parse_rational(text));
}

}  // namespace vecrec
