#pragma once

/// @file tiling.hpp
/// @brief Black/white piece tilings of a 1×n board: the combinatorial
///        application of the decoupling machinery.
///
/// A board is tiled left to right with pieces of length 1…k, each black or
/// white, under the rule that a black piece never follows a white one. A
/// coloring is therefore a single split index: an all-black prefix followed
/// by an all-white suffix. a_{n,k} counts tilings ending black (including
/// the empty tiling), b_{n,k} those ending white, t = a + b.
///
/// This generalizes black/white domino tiling: every piece is colored like
/// a domino whatever its length, hence "piece" in the identifiers.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "coupled_system.hpp"
#include "decouple.hpp"
#include "sequence.hpp"

namespace vecrec {

/// One tiling: the composition of n into parts 1…k plus the index of the
/// first white piece (== parts.size() when the tiling is all black).
struct Tiling {
    std::vector<unsigned> parts;
    std::size_t white_start = 0;

    bool all_black() const { return white_start == parts.size(); }

    friend bool operator==(const Tiling& lhs, const Tiling& rhs) {
        return lhs.parts == rhs.parts && lhs.white_start == rhs.white_start;
    }
};

namespace detail {

/// First k terms of (a_n), (b_n) for maximal piece size k, from a₀ = 1,
/// b₀ = 0. For n < k the defining sums simply truncate to the terms that
/// exist (no piece can be longer than the board).
inline void tiling_initials(unsigned k, std::vector<Scalar>& a, std::vector<Scalar>& b) {
    a.assign(1, Scalar(1));
    b.assign(1, Scalar(0));
    for (std::size_t n = 1; n < k; ++n) {
        Scalar an(0);
        Scalar bn(0);
        for (std::size_t i = 1; i <= n; ++i) {
            an += a[n - i];
            bn += a[n - i] + b[n - i];
        }
        a.push_back(an);
        b.push_back(bn);
    }
}

}  // namespace detail

/// The coupled system behind the counts: all k matrices equal [[1,0],[1,1]].
inline CoupledSystem tiling_system(unsigned k) {
    if (k < 1) throw std::invalid_argument("maximal piece size must be at least 1");
    const Mat2 block(1, 0, 1, 1);
    std::vector<Mat2> matrices(k, block);
    std::vector<Scalar> init_a;
    std::vector<Scalar> init_b;
    detail::tiling_initials(k, init_a, init_b);
    return CoupledSystem(std::move(matrices), std::move(init_a), std::move(init_b));
}

struct TilingCounts {
    ScalarSequence a;  // tilings ending black
    ScalarSequence b;  // tilings ending white
    ScalarSequence t;  // all tilings, entrywise a + b
};

/// Counts for boards of length 0…n.
inline TilingCounts tiling_counts(unsigned k, std::size_t n,
                                  std::size_t max_terms = kDefaultMaxTerms) {
    const CoupledSystem sys = tiling_system(k);
    // The system carries k initial terms; short horizons just truncate.
    SequencePair pair = generate_coupled(sys, n < k ? k - 1 : n, max_terms);
    TilingCounts out;
    out.a.assign(pair.a.begin(), pair.a.begin() + static_cast<std::ptrdiff_t>(n + 1));
    out.b.assign(pair.b.begin(), pair.b.begin() + static_cast<std::ptrdiff_t>(n + 1));
    out.t.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        out.t.push_back(out.a[i] + out.b[i]);
    }
    return out;
}

/// Degenerate k = 0 row: no pieces exist, so only the empty board has a
/// (single, vacuous) tiling. Kept outside the k ≥ 1 domain of the model;
/// returns the OEIS-style constants a ≡ 0 and t = (1, 0, 0, …).
struct DegenerateCounts {
    ScalarSequence a;
    ScalarSequence t;
};

inline DegenerateCounts degenerate_counts_k0(std::size_t n) {
    DegenerateCounts out;
    out.a.assign(n + 1, Scalar(0));
    out.t.assign(n + 1, Scalar(0));
    out.t[0] = Scalar(1);
    return out;
}

/// Brute-force enumeration of every tiling of a length-n board: every
/// composition of n into parts 1…k, each paired with every admissible
/// white_start. Deterministic order: lexicographic in the parts, then
/// increasing white_start. n = 0 yields the single empty tiling (all
/// black).
inline std::vector<Tiling> enumerate_tilings(unsigned k, std::size_t n) {
    if (k < 1) throw std::invalid_argument("maximal piece size must be at least 1");
    std::vector<Tiling> out;
    std::vector<unsigned> parts;

    auto emit = [&]() {
        for (std::size_t w = 0; w <= parts.size(); ++w) {
            out.push_back(Tiling{parts, w});
        }
    };

    auto recurse = [&](auto&& self, std::size_t remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (unsigned p = 1; p <= k && p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };

    recurse(recurse, n);
    return out;
}

/// Rows k = 1…max_k of the coefficient triangle: row k holds the 2k
/// decoupled coefficients of the tiling system with maximal piece size k.
inline std::vector<CoefficientVector> coefficient_triangle(unsigned max_k) {
    if (max_k < 1) throw std::invalid_argument("maximal piece size must be at least 1");
    std::vector<CoefficientVector> rows;
    rows.reserve(max_k);
    const Mat2 block(1, 0, 1, 1);
    std::vector<Mat2> matrices;
    for (unsigned k = 1; k <= max_k; ++k) {
        matrices.push_back(block);
        rows.push_back(coefficients_recursive(matrices));
    }
    return rows;
}

}  // namespace vecrec
