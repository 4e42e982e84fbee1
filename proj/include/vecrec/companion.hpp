#pragma once

/// @file companion.hpp
/// @brief Independent oracle for the decoupling: the block companion matrix
///        of the coupled system and a generic exact characteristic
///        polynomial via the Faddeev–LeVerrier trace recursion.
///
/// Nothing here touches the coefficient formulas of decouple.hpp; that is
/// the point. char_poly_oracle works for any square matrix over the exact
/// scalar field and is used to cross-check the decoupled coefficients.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coupled_system.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace vecrec {

class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim, Scalar(0)) {
        if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
    }

    static SquareMatrix identity(std::size_t dim) {
        SquareMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    std::size_t dim() const { return dim_; }

    Scalar& at(std::size_t row, std::size_t col) { return cells_[row * dim_ + col]; }
    const Scalar& at(std::size_t row, std::size_t col) const { return cells_[row * dim_ + col]; }

    Scalar trace() const {
        Scalar t(0);
        for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
        return t;
    }

    friend bool operator==(const SquareMatrix& lhs, const SquareMatrix& rhs) {
        return lhs.dim_ == rhs.dim_ && lhs.cells_ == rhs.cells_;
    }
    friend bool operator!=(const SquareMatrix& lhs, const SquareMatrix& rhs) {
        return !(lhs == rhs);
    }

    friend SquareMatrix operator+(const SquareMatrix& lhs, const SquareMatrix& rhs) {
        if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
        SquareMatrix out(lhs.dim_);
        for (std::size_t i = 0; i < lhs.cells_.size(); ++i) {
            out.cells_[i] = lhs.cells_[i] + rhs.cells_[i];
        }
        return out;
    }

    friend SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs) {
        if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
        const std::size_t n = lhs.dim_;
        SquareMatrix out(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& lik = lhs.at(i, k);
                if (lik.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    out.at(i, j) += lik * rhs.at(k, j);
                }
            }
        }
        return out;
    }

    friend SquareMatrix operator*(const Scalar& s, const SquareMatrix& m) {
        SquareMatrix out(m.dim_);
        for (std::size_t i = 0; i < m.cells_.size(); ++i) out.cells_[i] = s * m.cells_[i];
        return out;
    }

private:
    std::size_t dim_;
    std::vector<Scalar> cells_;
};

/// Block companion matrix of the coupled system: first two rows carry
/// A₁ A₂ … Aₛ, the subdiagonal carries 2×2 identity blocks. Iterating it on
/// the stacked state (a_i, b_i, a_{i−1}, b_{i−1}, …) advances the system by
/// one step.
inline SquareMatrix build_companion(const CoupledSystem& sys) {
    const std::size_t s = sys.order();
    SquareMatrix m(2 * s);
    for (std::size_t t = 0; t < s; ++t) {
        const Mat2& a = sys.matrices()[t];
        m.at(0, 2 * t) = a.a11;
        m.at(0, 2 * t + 1) = a.a12;
        m.at(1, 2 * t) = a.a21;
        m.at(1, 2 * t + 1) = a.a22;
    }
    for (std::size_t i = 2; i < 2 * s; ++i) {
        m.at(i, i - 2) = Scalar(1);
    }
    return m;
}

/// Monic characteristic polynomial det(xI − M) by Faddeev–LeVerrier:
///   N₁ = M, q₁ = −tr(N₁), N_k = M(N_{k−1} + q_{k−1}I), q_k = −tr(N_k)/k,
/// giving p(x) = xⁿ + q₁xⁿ⁻¹ + ⋯ + qₙ. Needs only ring operations and
/// division by the integers 1…n, both exact here.
inline Polynomial<Scalar> char_poly_oracle(const SquareMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<Scalar> coeffs(n + 1, Scalar(0));
    coeffs[n] = Scalar(1);

    SquareMatrix work = m;  // N_k
    Scalar q = -work.trace();
    coeffs[n - 1] = q;
    for (std::size_t k = 2; k <= n; ++k) {
        work = m * (work + q * SquareMatrix::identity(n));
        q = -work.trace() / Scalar(static_cast<long>(k));
        coeffs[n - k] = q;
    }
    return Polynomial<Scalar>(std::move(coeffs));
}

/// One application w ↦ M·w of the companion dynamics.
inline std::vector<Scalar> step(const SquareMatrix& m, std::span<const Scalar> w) {
    if (w.size() != m.dim()) {
        throw std::invalid_argument("state vector length must equal matrix dimension");
    }
    std::vector<Scalar> out(m.dim(), Scalar(0));
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            out[i] += m.at(i, j) * w[j];
        }
    }
    return out;
}

}  // namespace vecrec
