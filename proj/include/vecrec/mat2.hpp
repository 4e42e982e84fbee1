#pragma once

/// @file mat2.hpp
/// @brief 2×2 matrices over Scalar and the column-mix determinant sum that
///        drives the decoupling coefficients.

#include <utility>

#include "scalar.hpp"

namespace vecrec {

/// Entry a_rc sits at row r, column c (1-based, matching the usual α_{r,c}).
struct Mat2 {
    Scalar a11, a12, a21, a22;

    Mat2() = default;
    Mat2(Scalar m11, Scalar m12, Scalar m21, Scalar m22)
        : a11(std::move(m11)), a12(std::move(m12)), a21(std::move(m21)), a22(std::move(m22)) {}

    static Mat2 identity() { return Mat2(1, 0, 0, 1); }
    static Mat2 zero() { return Mat2(); }

    friend bool operator==(const Mat2& lhs, const Mat2& rhs) {
        return lhs.a11 == rhs.a11 && lhs.a12 == rhs.a12 && lhs.a21 == rhs.a21 &&
               lhs.a22 == rhs.a22;
    }
    friend bool operator!=(const Mat2& lhs, const Mat2& rhs) { return !(lhs == rhs); }

    friend Mat2 operator+(const Mat2& lhs, const Mat2& rhs) {
        return Mat2(lhs.a11 + rhs.a11, lhs.a12 + rhs.a12, lhs.a21 + rhs.a21, lhs.a22 + rhs.a22);
    }

    friend Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
        return Mat2(lhs.a11 * rhs.a11 + lhs.a12 * rhs.a21, lhs.a11 * rhs.a12 + lhs.a12 * rhs.a22,
                    lhs.a21 * rhs.a11 + lhs.a22 * rhs.a21, lhs.a21 * rhs.a12 + lhs.a22 * rhs.a22);
    }

    friend Mat2 operator*(const Scalar& s, const Mat2& m) {
        return Mat2(s * m.a11, s * m.a12, s * m.a21, s * m.a22);
    }
};

inline Scalar trace(const Mat2& m) { return m.a11 + m.a22; }

inline Scalar det(const Mat2& m) { return m.a11 * m.a22 - m.a12 * m.a21; }

/// Column mix: column 1 from ai, column 2 from aj.
inline Mat2 mix(const Mat2& ai, const Mat2& aj) {
    return Mat2(ai.a11, aj.a12, ai.a21, aj.a22);
}

/// Symmetric determinant sum |mix(ai,aj)| + |mix(aj,ai)|.
/// ddet(a, a) = 2·det(a) and ddet is symmetric and bilinear in its arguments.
inline Scalar ddet(const Mat2& ai, const Mat2& aj) {
    return det(mix(ai, aj)) + det(mix(aj, ai));
}

}  // namespace vecrec
