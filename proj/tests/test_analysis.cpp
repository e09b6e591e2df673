#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "ftwave/analysis.hpp"
#include "test_util.hpp"

using namespace ftwave;

namespace {

constexpr double pi = std::numbers::pi;

// max over random interior points of |u_tt - u_xx| by centered second differences.
// The time step is h/2: with equal steps the two h^2 truncation terms cancel exactly.
double pde_residual(double h, std::mt19937_64& rng) {
    const double ht = 0.5 * h;
    std::uniform_real_distribution<double> ux(1.0, 9.0), ut(1.0, 9.0);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double x = ux(rng), t = ut(rng);
        const double uxx = (exact_solution(x - h, t) - 2.0 * exact_solution(x, t) + exact_solution(x + h, t)) / (h * h);
        const double utt = (exact_solution(x, t - ht) - 2.0 * exact_solution(x, t) + exact_solution(x, t + ht)) / (ht * ht);
        worst = std::max(worst, std::abs(utt - uxx));
    }
    return worst;
}

}  // namespace

TEST_CASE("exact solution: closed-form values") {
    CHECK(exact_solution(0.5, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    for (double x : {0.1, 2.7, 9.99}) CHECK(std::abs(exact_solution(x, 0.5)) < 1e-15);
    // 40-digit evaluation of sin(pi x) cos(pi t)
    CHECK(std::abs(exact_solution(9.08, 3.63) - (-0.098766664109723680516)) < 1e-15);
    CHECK(std::abs(exact_solution(4.54, 5.45) - (-0.15520093255867877285)) < 1e-15);
}

TEST_CASE("exact solution satisfies the initial and boundary conditions") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    const double d = 1e-5;
    for (int k = 0; k < 500; ++k) {
        const double x = u(rng), t = u(rng);
        CHECK(std::abs(exact_solution(x, 0.0) - std::sin(pi * x)) < 1e-12);
        CHECK(std::abs((exact_solution(x, d) - exact_solution(x, -d)) / (2.0 * d)) < 1e-12);
        CHECK(std::abs(exact_solution(0.0, t)) < 1e-12);
        CHECK(std::abs(exact_solution(10.0, t)) < 1e-12);
    }
}

TEST_CASE("exact solution satisfies the PDE discretely: residual drops 4x per halving") {
    std::mt19937_64 r1(9), r2(9);
    const double coarse = pde_residual(0.02, r1);
    const double fine = pde_residual(0.01, r2);
    CAPTURE(coarse);
    CAPTURE(fine);
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("exact_field samples the closed form") {
    const auto f = exact_field(UniformAxis::make(0.0, 10.0, 41), UniformAxis::make(0.0, 10.0, 61));
    CHECK(f.nx() == 41);
    CHECK(f.nt() == 61);
    CHECK(f.at(7, 13) == exact_solution(f.x_axis()[7], f.t_axis()[13]));
}

TEST_CASE("compare: identical, offset and symmetric") {
    std::mt19937_64 rng(6);
    const auto xs = UniformAxis::make(0.0, 1.0, 23), ts = UniformAxis::make(0.0, 2.0, 17);
    const SampledField a(xs, ts, test::random_vector(rng, 23 * 17));
    const SampledField b(xs, ts, test::random_vector(rng, 23 * 17));

    const auto same = compare(a, a);
    CHECK(same.max_abs == 0.0);
    CHECK(same.rmse == 0.0);
    CHECK(same.l2_rel == 0.0);
    CHECK(same.n_points == 23 * 17);

    SampledField shifted = a;
    for (double& v : shifted.values()) v += 0.5;
    const auto off = compare(shifted, a);
    CHECK(off.max_abs == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(off.rmse == doctest::Approx(0.5).epsilon(1e-14));

    const auto ab = compare(a, b), ba = compare(b, a);
    CHECK(ab.max_abs == ba.max_abs);
    CHECK(ab.rmse == ba.rmse);
    CHECK(ab.rmse <= ab.max_abs);
    CHECK(ab.max_abs > 0.0);

    const SampledField other(UniformAxis::make(0.0, 1.0, 24), ts, std::vector<double>(24 * 17, 0.0));
    CHECK_THROWS_AS(compare(a, other), std::invalid_argument);
}

TEST_CASE("compare: relative L2 against the second argument") {
    const auto xs = UniformAxis::make(0.0, 1.0, 4);
    const SampledField ref(xs, {3.0, 0.0, 4.0, 0.0});
    const SampledField got(xs, {3.0, 1.0, 4.0, 0.0});
    const auto r = compare(got, ref);
    CHECK(r.l2_rel == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(r.rmse == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.max_abs == 1.0);
}

TEST_CASE("convergence_order: synthetic power laws") {
    std::vector<RefinementSample> quad, lin;
    for (double h : {0.2, 0.1, 0.05, 0.025}) {
        quad.push_back({h, 3.7 * h * h});
        lin.push_back({h, 0.4 * h});
    }
    CHECK(std::abs(convergence_order(quad) - 2.0) < 1e-10);
    CHECK(std::abs(convergence_order(lin) - 1.0) < 1e-10);
}

TEST_CASE("convergence_order: preconditions") {
    const std::vector<RefinementSample> two{{0.1, 1.0}, {0.05, 0.25}};
    CHECK_THROWS_WITH_AS(convergence_order(two), doctest::Contains("at least 3"), std::invalid_argument);
    const std::vector<RefinementSample> zero{{0.1, 1.0}, {0.05, 0.0}, {0.025, 0.1}};
    CHECK_THROWS_AS(convergence_order(zero), std::invalid_argument);
    const std::vector<RefinementSample> rising{{0.1, 1.0}, {0.2, 0.5}, {0.05, 0.1}};
    CHECK_THROWS_WITH_AS(convergence_order(rising), doctest::Contains("decrease"), std::invalid_argument);
}

TEST_CASE("slice: exact nodes are returned verbatim") {
    std::mt19937_64 rng(1);
    const auto xs = UniformAxis::make(0.0, 10.0, 401), ts = UniformAxis::make(0.0, 10.0, 601);
    const SampledField f(xs, ts, test::random_vector(rng, 401 * 601));
    const auto row = slice(f, SliceAxis::time, ts[300]);
    CHECK(row.index == 300);
    CHECK(row.at == ts[300]);
    CHECK(test::bitwise_equal(row.values, f.row(300)));
    CHECK(test::bitwise_equal(row.coords, xs.coordinates()));

    const auto col = slice(f, SliceAxis::space, xs[17]);
    CHECK(col.index == 17);
    REQUIRE(col.values.size() == 601);
    for (std::size_t l = 0; l < 601; ++l) CHECK(col.values[l] == f.at(17, l));
    CHECK(test::bitwise_equal(col.coords, ts.coordinates()));
}

TEST_CASE("slice: the experiment's coordinates snap to the nearest node") {
    const auto f = exact_field(UniformAxis::make(0.0, 10.0, 401), UniformAxis::make(0.0, 10.0, 601));
    const auto t363 = slice(f, SliceAxis::time, 3.63);
    CHECK(t363.index == 218);  // node 219 in 1-based numbering
    CHECK(t363.at == doctest::Approx(3.6333333333333333).epsilon(1e-15));
    CHECK(slice(f, SliceAxis::space, 9.08).at == doctest::Approx(9.075).epsilon(1e-15));
    CHECK(slice(f, SliceAxis::time, 5.45).index == 327);
    CHECK(slice(f, SliceAxis::space, 4.54).index == 182);
    CHECK_THROWS_AS(slice(f, SliceAxis::time, 10.5), std::out_of_range);
    CHECK_THROWS_AS(slice(f, SliceAxis::space, -0.1), std::out_of_range);
    CHECK_THROWS_AS(slice(SampledField(UniformAxis::make(0.0, 1.0, 3), {1.0, 2.0, 3.0}), SliceAxis::time, 0.5),
                    std::invalid_argument);
}
