#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "ftwave/partition.hpp"

using ftwave::FuzzyPartition;

namespace {

double ulp(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()) - x; }

double basis_sum(const FuzzyPartition& p, double x) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += p.basis(i, x);
    return s;
}

}  // namespace

TEST_CASE("uniform construction: spacing and anchored endpoints") {
    const auto p = FuzzyPartition::uniform(0.0, 10.0, 401);
    CHECK(p.size() == 401);
    CHECK(p.h() == doctest::Approx(0.025).epsilon(1e-15));
    CHECK(p.node(0) == 0.0);
    CHECK(p.node(400) == 10.0);

    const auto q = FuzzyPartition::uniform(0.0, 10.0, 601);
    CHECK(q.h() == doctest::Approx(10.0 / 600.0).epsilon(1e-15));
    CHECK(q.node(600) == 10.0);

    const auto m = FuzzyPartition::uniform(0.0, 1.0, 2);
    CHECK(m.h() == 1.0);
    CHECK(m.node(0) == 0.0);
    CHECK(m.node(1) == 1.0);
}

TEST_CASE("nodes are strictly increasing with spacing h to within 4 ulps of the endpoint") {
    for (std::size_t n : {2u, 3u, 26u, 401u, 601u, 1001u}) {
        const auto p = FuzzyPartition::uniform(-3.0, 10.0, n);
        const double tol = 4.0 * ulp(10.0);
        for (std::size_t i = 1; i < n; ++i) {
            CHECK(p.node(i) > p.node(i - 1));
            CHECK(std::abs((p.node(i) - p.node(i - 1)) - p.h()) <= tol);
        }
    }
}

TEST_CASE("construction rejects bad input and names the precondition") {
    CHECK_THROWS_WITH_AS(FuzzyPartition::uniform(0.0, 1.0, 1), doctest::Contains("n >= 2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(FuzzyPartition::uniform(1.0, 1.0, 5), doctest::Contains("b > a"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(FuzzyPartition::uniform(2.0, 1.0, 5), doctest::Contains("b > a"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(FuzzyPartition::uniform(0.0, std::numeric_limits<double>::infinity(), 5),
                         doctest::Contains("finite"), std::invalid_argument);
    CHECK_THROWS_AS(FuzzyPartition::uniform(std::nan(""), 1.0, 5), std::invalid_argument);
}

TEST_CASE("basis values at nodes, midpoints and neighbours") {
    const auto p = FuzzyPartition::uniform(0.0, 10.0, 401);
    for (std::size_t i : {0u, 1u, 57u, 200u, 399u, 400u}) {
        CHECK(p.basis(i, p.node(i)) == 1.0);
        if (i + 1 < p.size()) CHECK(p.basis(i, p.node(i + 1)) == 0.0);
        if (i > 0) CHECK(p.basis(i, p.node(i - 1)) == 0.0);
    }
    for (std::size_t i : {1u, 57u, 200u, 399u}) {
        const double half = p.h() / 2.0;
        CHECK(p.basis(i, p.node(i) + half) == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(p.basis(i, p.node(i) - half) == doctest::Approx(0.5).epsilon(1e-13));
    }
    // exact on a dyadic grid
    const auto d = FuzzyPartition::uniform(0.0, 8.0, 33);
    CHECK(d.basis(5, d.node(5) + 0.125) == 0.5);
    CHECK(d.basis(5, d.node(5) - 0.125) == 0.5);
}

TEST_CASE("basis support: zero outside (x_{i-1}, x_{i+1}), half triangles at the ends") {
    const auto p = FuzzyPartition::uniform(0.0, 10.0, 401);
    CHECK(p.support(0) == std::pair{0.0, p.node(1)});
    CHECK(p.support(400) == std::pair{p.node(399), 10.0});
    CHECK(p.support(7) == std::pair{p.node(6), p.node(8)});
    CHECK(p.basis(7, 3.0) == 0.0);
    CHECK(p.basis(0, 0.0) == 1.0);
    CHECK(p.basis(0, p.h() / 4.0) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(p.basis(400, 10.0) == 1.0);
}

TEST_CASE("basis rejects bad index or argument") {
    const auto p = FuzzyPartition::uniform(0.0, 1.0, 11);
    CHECK_THROWS_AS(p.basis(11, 0.5), std::out_of_range);
    CHECK_THROWS_AS(p.basis(3, -0.1), std::out_of_range);
    CHECK_THROWS_AS(p.basis(3, 1.1), std::out_of_range);
    CHECK_THROWS_AS(p.cover(1.0 + 1e-9), std::out_of_range);
}

TEST_CASE("covering_indices: endpoints, nodes and cell interiors") {
    const auto p = FuzzyPartition::uniform(0.0, 10.0, 401);
    CHECK(p.covering_indices(0.0) == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(p.covering_indices(10.0) == std::pair<std::size_t, std::size_t>{400, 400});
    CHECK(p.covering_indices(p.node(57)) == std::pair<std::size_t, std::size_t>{57, 57});
    CHECK(p.covering_indices(p.node(57) + p.h() / 3.0) == std::pair<std::size_t, std::size_t>{57, 58});

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int k = 0; k < 500; ++k) {
        const double x = u(rng);
        const auto c = p.cover(x);
        CHECK(c.w_lo == p.basis(c.lo, x));
        if (c.hi != c.lo) CHECK(c.w_hi == p.basis(c.hi, x));
        // at most two nonzero bases, both reported by the cover
        int nonzero = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p.basis(i, x) != 0.0) {
                ++nonzero;
                CHECK((i == c.lo || i == c.hi));
            }
        CHECK(nonzero <= 2);
    }
}

TEST_CASE("partition of unity at random points") {
    for (std::size_t n : {2u, 26u, 401u, 601u}) {
        const auto p = FuzzyPartition::uniform(0.0, 10.0, n);
        std::mt19937_64 rng(n);
        std::uniform_real_distribution<double> u(0.0, 10.0);
        for (int k = 0; k < 1000; ++k) {
            const double x = u(rng);
            CHECK(std::abs(basis_sum(p, x) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("symmetry about interior nodes with exactly reflected arguments") {
    // x+ is drawn in (x_i, x_{i+1}); d = x+ - x_i is then exact and x_i - d is exact too
    const auto p = FuzzyPartition::uniform(0.0, 10.0, 401);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(1, p.size() - 2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        const std::size_t i = pick(rng);
        const double xp = p.node(i) + u(rng) * (p.node(i + 1) - p.node(i));
        const double d = xp - p.node(i);
        const double xm = p.node(i) - d;
        REQUIRE(xm + d == p.node(i));
        CHECK(std::abs(p.basis(i, xm) - p.basis(i, xp)) < 1e-14);
    }
}

TEST_CASE("shift is exact on a dyadic partition") {
    const auto p = FuzzyPartition::uniform(0.0, 8.0, 257);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(p.h(), 8.0);
    for (int k = 0; k < 1000; ++k) {
        const double x = u(rng);
        const auto [lo, hi] = p.covering_indices(x);
        for (std::size_t j : {lo, hi}) {
            if (j == 0 || j + 1 >= p.size()) continue;
            CHECK(p.basis(j, x) == p.basis(j - 1, x - p.h()));
        }
    }
}

TEST_CASE("shift on non-dyadic grids stays within the rounding floor") {
    // fl(x - h) and the node positions each carry up to ulp(b) of error, magnified by 1/h
    for (std::size_t n : {401u, 601u}) {
        const auto p = FuzzyPartition::uniform(0.0, 10.0, n);
        const double floor = 4.0 * ulp(10.0) / p.h();
        std::mt19937_64 rng(n + 1);
        std::uniform_real_distribution<double> u(p.h(), 10.0);
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const double x = u(rng);
            const auto [lo, hi] = p.covering_indices(x);
            for (std::size_t j : {lo, hi}) {
                if (j == 0 || j + 1 >= p.size()) continue;
                worst = std::max(worst, std::abs(p.basis(j, x) - p.basis(j - 1, x - p.h())));
            }
        }
        CAPTURE(n);
        CHECK(worst <= floor);
    }
}
