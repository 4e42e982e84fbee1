#pragma once

/// @file sequence.hpp
/// @brief Term generation for coupled systems and decoupled scalar
///        recurrences, plus exact recurrence verification.
///
/// The decoupled recurrence of order 2s only governs terms from index 2s
/// onward; indices s…2s−1 come from the coupled system itself. Hence
/// bootstrap_initials: run the coupled system far enough to seed the scalar
/// recurrence.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "coupled_system.hpp"
#include "decouple.hpp"

namespace vecrec {

/// Terms grow exponentially in n; generation refuses to produce more than
/// this many terms unless the caller raises the cap.
inline constexpr std::size_t kDefaultMaxTerms = 10'000;

using ScalarSequence = std::vector<Scalar>;

struct SequencePair {
    ScalarSequence a;
    ScalarSequence b;
};

namespace detail {

inline void check_horizon(std::size_t terms, std::size_t max_terms) {
    if (terms > max_terms) {
        throw std::length_error("generation horizon exceeds the term cap");
    }
}

}  // namespace detail

/// Terms a₀…a_n, b₀…b_n of the coupled system. Requires n ≥ s−1 so the
/// initial data fits the requested range.
inline SequencePair generate_coupled(const CoupledSystem& sys, std::size_t n,
                                     std::size_t max_terms = kDefaultMaxTerms) {
    const std::size_t s = sys.order();
    if (n + 1 < s) {
        throw std::invalid_argument("horizon shorter than initial data");
    }
    detail::check_horizon(n + 1, max_terms);

    SequencePair out;
    out.a.reserve(n + 1);
    out.b.reserve(n + 1);
    out.a.assign(sys.initial_a().begin(), sys.initial_a().end());
    out.b.assign(sys.initial_b().begin(), sys.initial_b().end());
    for (std::size_t m = s; m <= n; ++m) {
        Scalar an(0);
        Scalar bn(0);
        for (std::size_t t = 1; t <= s; ++t) {
            const Mat2& at = sys.matrices()[t - 1];
            const Scalar& ap = out.a[m - t];
            const Scalar& bp = out.b[m - t];
            an += at.a11 * ap + at.a12 * bp;
            bn += at.a21 * ap + at.a22 * bp;
        }
        out.a.push_back(std::move(an));
        out.b.push_back(std::move(bn));
    }
    return out;
}

/// First 2s terms of (a_n), (b_n) and of the sum sequence t_n = a_n + b_n —
/// exactly the seed data the order-2s scalar recurrence needs.
struct BootstrapInitials {
    ScalarSequence a;
    ScalarSequence b;
    ScalarSequence t;
};

inline BootstrapInitials bootstrap_initials(const CoupledSystem& sys) {
    const std::size_t s = sys.order();
    SequencePair pair = generate_coupled(sys, 2 * s - 1);
    BootstrapInitials out;
    out.t.reserve(2 * s);
    for (std::size_t i = 0; i < 2 * s; ++i) {
        out.t.push_back(pair.a[i] + pair.b[i]);
    }
    out.a = std::move(pair.a);
    out.b = std::move(pair.b);
    return out;
}

/// Terms z₀…z_n of the scalar recurrence z_m = Σ cᵢ z_{m−i} seeded with the
/// given initial segment. init must have exactly as many entries as c has
/// coefficients (2s for an untrimmed vector).
inline ScalarSequence generate_decoupled(const CoefficientVector& c, std::span<const Scalar> init,
                                         std::size_t n,
                                         std::size_t max_terms = kDefaultMaxTerms) {
    const std::size_t k = c.coeffs.size();
    if (init.size() != k) {
        throw std::invalid_argument("initial segment length must equal the recurrence order");
    }
    if (n + 1 < k) {
        throw std::invalid_argument("horizon shorter than initial data");
    }
    detail::check_horizon(n + 1, max_terms);

    ScalarSequence z(init.begin(), init.end());
    z.reserve(n + 1);
    for (std::size_t m = k; m <= n; ++m) {
        Scalar zm(0);
        for (std::size_t i = 1; i <= k; ++i) {
            zm += c.coeffs[i - 1] * z[m - i];
        }
        z.push_back(std::move(zm));
    }
    return z;
}

struct RecurrenceReport {
    bool pass = false;
    /// Earliest index n with z_n ≠ Σ cᵢ z_{n−i}; empty when the check passes.
    std::optional<std::size_t> first_violation;
    std::size_t checked_from = 0;
    std::size_t checked_to = 0;
};

/// Exact check that z obeys the recurrence c at every index from 2s to the
/// end of the sequence. Requires at least one checkable index.
inline RecurrenceReport verify_recurrence(std::span<const Scalar> z, const CoefficientVector& c) {
    const std::size_t k = c.coeffs.size();
    if (z.size() < k + 1) {
        throw std::invalid_argument("sequence too short");
    }
    RecurrenceReport report;
    report.checked_from = k;
    report.checked_to = z.size() - 1;
    for (std::size_t n = k; n < z.size(); ++n) {
        Scalar expected(0);
        for (std::size_t i = 1; i <= k; ++i) {
            expected += c.coeffs[i - 1] * z[n - i];
        }
        if (expected != z[n]) {
            report.pass = false;
            report.first_violation = n;
            return report;
        }
    }
    report.pass = true;
    return report;
}

}  // namespace vecrec
