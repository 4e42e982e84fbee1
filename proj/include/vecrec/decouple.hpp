#pragma once

/// @file decouple.hpp
/// @brief Collapse a coupled order-s system into one scalar linear
///        recurrence of order 2s.
///
/// Both component sequences of a CoupledSystem satisfy
///
///   z_n = c₁ z_{n−1} + c₂ z_{n−2} + ⋯ + c_{2s} z_{n−2s},   n ≥ 2s,
///
/// and the coefficients c₁…c_{2s} are computable from traces and
/// (mixed-column) determinants of A₁…Aₛ alone. Two routes are provided:
/// the order-by-order recursion and a direct closed-form index pattern.
/// They must agree entrywise; the test suite enforces that, and the
/// companion-matrix oracle cross-checks both against a generic exact
/// characteristic polynomial.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mat2.hpp"
#include "poly.hpp"

namespace vecrec {

/// Coefficients c₁…c_{2s} of the decoupled recurrence, stored in that order
/// (coeffs[i] is c_{i+1}). Fresh vectors always have exactly 2s entries;
/// trim_trailing_zeros may shorten a copy on request.
struct CoefficientVector {
    std::size_t order = 0;  // s of the originating system
    std::vector<Scalar> coeffs;

    friend bool operator==(const CoefficientVector& lhs, const CoefficientVector& rhs) {
        return lhs.order == rhs.order && lhs.coeffs == rhs.coeffs;
    }
    friend bool operator!=(const CoefficientVector& lhs, const CoefficientVector& rhs) {
        return !(lhs == rhs);
    }
};

/// Build c^{(s)} by the order-raising recursion: starting from
/// c^{(1)} = (tr A₁, −|A₁|), each step s appends two zero slots and adds
///   tr(Aₛ) at position s,
///   −Det(A^{(i,s)}) = −ddet(A_i, Aₛ) at positions s+1 … 2s−1,
///   −|Aₛ| at position 2s.
inline CoefficientVector coefficients_recursive(std::span<const Mat2> matrices) {
    if (matrices.empty()) {
        throw std::invalid_argument("order must be at least 1");
    }
    std::vector<Scalar> c{trace(matrices[0]), -det(matrices[0])};
    for (std::size_t t = 2; t <= matrices.size(); ++t) {
        const Mat2& at = matrices[t - 1];
        c.resize(2 * t, Scalar(0));
        c[t - 1] += trace(at);
        for (std::size_t i = 1; i < t; ++i) {
            c[t + i - 1] -= ddet(matrices[i - 1], at);
        }
        c[2 * t - 1] -= det(at);
    }
    return CoefficientVector{matrices.size(), std::move(c)};
}

/// Direct evaluation of the same vector, one entry at a time:
///   c_m = [m ≤ s]·tr(A_m) − Σ_{i<j≤s, i+j=m} ddet(A_i, A_j)
///         − [m even, m/2 ≤ s]·|A_{m/2}|.
inline CoefficientVector coefficients_closed(std::span<const Mat2> matrices) {
    if (matrices.empty()) {
        throw std::invalid_argument("order must be at least 1");
    }
    const std::size_t s = matrices.size();
    std::vector<Scalar> c(2 * s, Scalar(0));
    for (std::size_t m = 1; m <= 2 * s; ++m) {
        Scalar& cm = c[m - 1];
        if (m <= s) cm += trace(matrices[m - 1]);
        for (std::size_t i = 1; 2 * i < m; ++i) {
            const std::size_t j = m - i;
            if (j <= s) cm -= ddet(matrices[i - 1], matrices[j - 1]);
        }
        if (m % 2 == 0 && m / 2 <= s) cm -= det(matrices[m / 2 - 1]);
    }
    return CoefficientVector{s, std::move(c)};
}

/// Monic characteristic polynomial x^{2s} − c₁x^{2s−1} − ⋯ − c_{2s}.
/// The sign flip between recurrence form and monic form happens here and
/// only here.
inline Polynomial<Scalar> char_poly(const CoefficientVector& c) {
    const std::size_t k = c.coeffs.size();
    std::vector<Scalar> coeffs(k + 1, Scalar(0));
    coeffs[k] = Scalar(1);
    for (std::size_t i = 1; i <= k; ++i) {
        coeffs[k - i] = -c.coeffs[i - 1];
    }
    return Polynomial<Scalar>(std::move(coeffs));
}

/// Drop the all-zero suffix, reducing the effective recurrence order when
/// the top matrices are singular or zero. Never applied implicitly.
inline CoefficientVector trim_trailing_zeros(CoefficientVector c) {
    while (!c.coeffs.empty() && c.coeffs.back() == Scalar(0)) {
        c.coeffs.pop_back();
    }
    return c;
}

}  // namespace vecrec
