#pragma once

/// @file coupled_system.hpp
/// @brief A pair of sequences (a_n), (b_n) evolving jointly through 2×2
///        matrices A₁…Aₛ:
///
///   (a_n, b_n)ᵀ = A₁(a_{n−1}, b_{n−1})ᵀ + ⋯ + Aₛ(a_{n−s}, b_{n−s})ᵀ,  n ≥ s,
///
/// seeded with initial values a₀…a_{s−1}, b₀…b_{s−1}.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mat2.hpp"

namespace vecrec {

class CoupledSystem {
public:
    CoupledSystem(std::vector<Mat2> matrices, std::vector<Scalar> init_a,
                  std::vector<Scalar> init_b)
        : matrices_(std::move(matrices)), init_a_(std::move(init_a)), init_b_(std::move(init_b)) {
        if (matrices_.empty()) {
            throw std::invalid_argument("order must be at least 1");
        }
        if (init_a_.size() != matrices_.size() || init_b_.size() != matrices_.size()) {
            throw std::invalid_argument("initial vectors must have exactly order-many entries");
        }
    }

    /// Order s: how many past vector terms the recurrence consults.
    std::size_t order() const { return matrices_.size(); }

    const std::vector<Mat2>& matrices() const { return matrices_; }
    const std::vector<Scalar>& initial_a() const { return init_a_; }
    const std::vector<Scalar>& initial_b() const { return init_b_; }

    const Mat2& matrix(std::size_t t) const { return matrices_.at(t - 1); }  // 1-based, A_t

private:
    std::vector<Mat2> matrices_;
    std::vector<Scalar> init_a_;
    std::vector<Scalar> init_b_;
};

}  // namespace vecrec
