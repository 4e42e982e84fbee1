#pragma once

/// @file poly.hpp
/// @brief Dense univariate polynomials over an exact field.
///
/// Coefficients are stored constant-first, so coeff(i) is the coefficient
/// of x^i. The zero polynomial is the empty coefficient list; otherwise the
/// leading coefficient is nonzero.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace vecrec {

template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }

    /// x^power with unit coefficient.
    static Polynomial monomial(std::size_t power) {
        std::vector<T> c(power + 1, T(0));
        c.back() = T(1);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the zero polynomial is -1 by convention.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

    /// Coefficient of x^i; zero beyond the stored length.
    const T& coeff(std::size_t i) const {
        static const T kZero(0);
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    const std::vector<T>& coefficients() const { return coeffs_; }

    const T& leading_coefficient() const { return coeffs_.back(); }  // nonzero poly only

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }
    friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) { return !(lhs == rhs); }

    friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
        std::vector<T> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs.coeff(i) + rhs.coeff(i);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) {
        std::vector<T> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs.coeff(i) - rhs.coeff(i);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
        std::vector<T> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    /// Horner evaluation.
    T operator()(const T& x) const {
        T acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x + coeffs_[i];
        }
        return acc;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

/// Render with the conventional variable, highest power first:
/// "x^4 - 2x^3 - x^2 + 2x + 1".
template <class T>
std::string to_string(const Polynomial<T>& p, const char* var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
        const T& c = p.coeff(i);
        if (c == T(0)) continue;
        const std::string cs = to_string(c);
        const bool negated = cs.front() == '-' && cs.find_first_of("+-", 1) == std::string::npos;
        if (out.empty()) {
            if (negated) out += '-';
        } else {
            out += negated ? " - " : " + ";
        }
        std::string body = negated ? cs.substr(1) : cs;
        if (body.find_first_of("+-") != std::string::npos) body = "(" + cs + ")";
        if (i == 0) {
            out += body;
        } else {
            if (body != "1") out += body;
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
    return os << to_string(p);
}

}  // namespace vecrec
