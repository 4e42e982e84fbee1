#include <algorithm>
#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include "random_systems.hpp"
#include "vecrec/tiling.hpp"

using namespace vecrec;

namespace {

std::vector<Scalar> scalars(std::initializer_list<long> values) {
    std::vector<Scalar> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

struct Split {
    std::size_t black = 0;
    std::size_t white = 0;
};

Split split_counts(const std::vector<Tiling>& tilings) {
    Split s;
    for (const Tiling& t : tilings) {
        (t.all_black() ? s.black : s.white) += 1;
    }
    return s;
}

}  // namespace

TEST_CASE("tiling systems carry the bootstrapped initial values", "[tiling]") {
    const CoupledSystem k1 = tiling_system(1);
    CHECK(k1.order() == 1);
    CHECK(k1.matrices()[0] == Mat2(1, 0, 1, 1));
    CHECK(k1.initial_a() == scalars({1}));
    CHECK(k1.initial_b() == scalars({0}));

    const CoupledSystem k2 = tiling_system(2);
    CHECK(k2.initial_a() == scalars({1, 1}));
    CHECK(k2.initial_b() == scalars({0, 1}));

    const CoupledSystem k3 = tiling_system(3);
    CHECK(k3.initial_a() == scalars({1, 1, 2}));
    CHECK(k3.initial_b() == scalars({0, 1, 3}));

    CHECK_THROWS_AS(tiling_system(0), std::invalid_argument);
}

TEST_CASE("counts match the worked example", "[tiling]") {
    const TilingCounts k3 = tiling_counts(3, 3);
    CHECK(k3.a == scalars({1, 1, 2, 4}));
    CHECK(k3.b == scalars({0, 1, 3, 8}));
    CHECK(k3.t == scalars({1, 2, 5, 12}));

    CHECK(tiling_counts(1, 5).t == scalars({1, 2, 3, 4, 5, 6}));
    CHECK(tiling_counts(2, 6).a == scalars({1, 1, 2, 3, 5, 8, 13}));
}

TEST_CASE("enumeration basics", "[tiling]") {
    SECTION("n = 0 is the single empty tiling") {
        const auto none = enumerate_tilings(3, 0);
        REQUIRE(none.size() == 1);
        CHECK(none[0].parts.empty());
        CHECK(none[0].all_black());
    }
    SECTION("n = 1 has one black and one white unit piece") {
        for (unsigned k : {1u, 2u, 5u}) {
            const auto unit = enumerate_tilings(k, 1);
            const Split s = split_counts(unit);
            CHECK(unit.size() == 2);
            CHECK(s.black == 1);
            CHECK(s.white == 1);
        }
    }
    SECTION("k = 1, n = 4: five color splits of the unique composition") {
        const auto t = enumerate_tilings(1, 4);
        CHECK(t.size() == 5);
    }
    SECTION("k = 3, n = 3 worked example") {
        const auto t = enumerate_tilings(3, 3);
        const Split s = split_counts(t);
        CHECK(t.size() == 12);
        CHECK(s.black == 4);
        CHECK(s.white == 8);
    }
}

TEST_CASE("enumerated tilings satisfy their invariants", "[tiling]") {
    for (unsigned k = 1; k <= 4; ++k) {
        for (std::size_t n = 0; n <= 9; ++n) {
            for (const Tiling& t : enumerate_tilings(k, n)) {
                std::size_t total = 0;
                for (unsigned p : t.parts) {
                    REQUIRE(p >= 1);
                    REQUIRE(p <= k);
                    total += p;
                }
                REQUIRE(total == n);
                REQUIRE(t.white_start <= t.parts.size());
            }
        }
    }
}

TEST_CASE("enumeration agrees with the recurrence counts", "[tiling]") {
    for (unsigned k = 1; k <= 5; ++k) {
        const TilingCounts counts = tiling_counts(k, 12);
        for (std::size_t n = 0; n <= 12; ++n) {
            const Split s = split_counts(enumerate_tilings(k, n));
            REQUIRE(Scalar(static_cast<long>(s.black)) == counts.a[n]);
            REQUIRE(Scalar(static_cast<long>(s.white)) == counts.b[n]);
        }
    }
}

TEST_CASE("a-component satisfies the k-bonacci recurrence", "[tiling]") {
    for (unsigned k = 1; k <= 5; ++k) {
        const TilingCounts counts = tiling_counts(k, 25);
        for (std::size_t n = k; n <= 25; ++n) {
            Scalar sum(0);
            for (std::size_t i = 1; i <= k; ++i) sum += counts.a[n - i];
            REQUIRE(counts.a[n] == sum);
        }
    }
}

TEST_CASE("coefficient triangle reference rows", "[tiling]") {
    const auto rows = coefficient_triangle(7);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0].coeffs == scalars({2, -1}));
    CHECK(rows[1].coeffs == scalars({2, 1, -2, -1}));
    CHECK(rows[2].coeffs == scalars({2, 1, 0, -3, -2, -1}));
    CHECK(rows[3].coeffs == scalars({2, 1, 0, -1, -4, -3, -2, -1}));
    CHECK(rows[4].coeffs == scalars({2, 1, 0, -1, -2, -5, -4, -3, -2, -1}));
    CHECK(rows[5].coeffs == scalars({2, 1, 0, -1, -2, -3, -6, -5, -4, -3, -2, -1}));
    CHECK(rows[6].coeffs == scalars({2, 1, 0, -1, -2, -3, -4, -7, -6, -5, -4, -3, -2, -1}));
}

TEST_CASE("triangle rows follow the padded row recursion", "[tiling]") {
    const auto rows = coefficient_triangle(8);
    for (std::size_t k = 2; k <= rows.size(); ++k) {
        const auto& prev = rows[k - 2].coeffs;
        const auto& cur = rows[k - 1].coeffs;
        REQUIRE(cur.size() == prev.size() + 2);

        // pad previous row with two zeros, then add (0,...,0,2,-2,...,-2,-1)
        std::vector<Scalar> expected(prev);
        expected.resize(cur.size(), Scalar(0));
        expected[k - 1] += Scalar(2);
        for (std::size_t i = k; i + 1 < 2 * k; ++i) expected[i] += Scalar(-2);
        expected[2 * k - 1] += Scalar(-1);
        REQUIRE(cur == expected);
    }
}

TEST_CASE("known sequence prefixes", "[tiling]") {
    SECTION("t_{n,1} = n + 1") {
        const TilingCounts k1 = tiling_counts(1, 20);
        for (std::size_t n = 0; n <= 20; ++n) {
            REQUIRE(k1.t[n] == Scalar(static_cast<long>(n + 1)));
        }
    }
    SECTION("a_{n,2} is the Fibonacci sequence") {
        CHECK(tiling_counts(2, 9).a == scalars({1, 1, 2, 3, 5, 8, 13, 21, 34, 55}));
    }
    SECTION("a_{n,3} is the tribonacci sequence") {
        CHECK(tiling_counts(3, 9).a == scalars({1, 1, 2, 4, 7, 13, 24, 44, 81, 149}));
    }
}

TEST_CASE("degenerate k = 0 constants", "[tiling]") {
    // no pieces: a_{n,0} is the zero sequence, t_{n,0} = (1, 0, 0, ...)
    const DegenerateCounts d = degenerate_counts_k0(6);
    CHECK(d.a == std::vector<Scalar>(7, Scalar(0)));
    CHECK(d.t == scalars({1, 0, 0, 0, 0, 0, 0}));
}
