#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "chemo/elliptic.hpp"
#include "chemo/grid.hpp"
#include "chemo/operators.hpp"
#include "doctest.h"

using namespace chemo;
using std::numbers::pi;

namespace {

ScalarField random_field(const Grid& g, uint32_t seed, double lo = 0.0, double hi = 1.0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    ScalarField f(g);
    for (double& v : f.values) v = dist(rng);
    return f;
}

}  // namespace

TEST_CASE("constants are exact solutions") {
    Grid g = build_grid(1.0, 1.0, 16, 16);
    ScalarField u(g, 4.5);
    ScalarField v = solve_screened_poisson(u);
    for (double val : v.values) CHECK(val == doctest::Approx(4.5).epsilon(1e-9));
}

TEST_CASE("operator is symmetric") {
    Grid g = build_grid(1.3, 0.9, 12, 10);
    ScalarField x = random_field(g, 1, -1.0, 1.0);
    ScalarField y = random_field(g, 2, -1.0, 1.0);
    ScalarField ax(g), ay(g);
    detail::apply_screened(x, ax);
    detail::apply_screened(y, ay);
    double xay = 0.0, yax = 0.0;
    for (size_t c = 0; c < x.values.size(); ++c) {
        xay += x.values[c] * ay.values[c];
        yax += y.values[c] * ax.values[c];
    }
    CHECK(xay == doctest::Approx(yax).epsilon(1e-12));
}

TEST_CASE("solution matches the analytic eigenfunction at second order") {
    const double lx = 1.0, ly = 1.0;
    double prev_err = 0.0;
    for (int n : {32, 64, 128}) {
        Grid g = build_grid(lx, ly, n, n);
        ScalarField u = make_field(g, [&](double x, double) { return 1.0 + std::cos(pi * x / lx); });
        ScalarField v = solve_screened_poisson(u);
        const double shrink = 1.0 / (1.0 + (pi / lx) * (pi / lx));
        double err = 0.0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                double expect = 1.0 + shrink * std::cos(pi * g.x(i) / lx);
                err = std::max(err, std::abs(v.at(i, j) - expect));
            }
        if (prev_err > 0.0) {
            double ratio = prev_err / err;
            CHECK(ratio > 3.5);
            CHECK(ratio < 4.5);
        }
        prev_err = err;
    }
}

TEST_CASE("solve conserves the integral") {
    Grid g = build_grid(2.0, 1.0, 48, 24);
    for (uint32_t seed : {3u, 4u, 5u}) {
        ScalarField u = random_field(g, seed);
        ScalarField v = solve_screened_poisson(u);
        double mu = integrate(u), mv = integrate(v);
        CHECK(std::abs(mv - mu) / std::abs(mu) < 1e-8);
    }
}

TEST_CASE("nonnegative data produce (numerically) nonnegative solutions") {
    Grid g = build_grid(1.0, 1.0, 40, 40);
    for (uint32_t seed : {7u, 8u}) {
        ScalarField u = random_field(g, seed);
        ScalarField v = solve_screened_poisson(u);
        CHECK(min_value(v) >= -1e-10 * max_value(u));
    }
}

TEST_CASE("warm start reduces iteration counts") {
    Grid g = build_grid(1.0, 1.0, 32, 32);
    ScalarField u = random_field(g, 9);
    EllipticStats cold{}, warm{};
    ScalarField v = solve_screened_poisson(u, {}, nullptr, &cold);
    solve_screened_poisson(u, {}, &v, &warm);
    CHECK(warm.iterations < cold.iterations);
    CHECK(warm.iterations <= 1);
}

TEST_CASE("residual matches its definition") {
    Grid g = build_grid(1.0, 1.0, 8, 8);
    CHECK(residual(ScalarField(g, 1.0), ScalarField(g, 1.0)) == 0.0);
    CHECK(residual(ScalarField(g, 1.0), ScalarField(g, 2.0)) == doctest::Approx(1.0).epsilon(1e-14));

    ScalarField u = random_field(g, 10);
    ScalarField v = solve_screened_poisson(u);
    CHECK(residual(u, v) <= 1e-10);
}

TEST_CASE("configuration validation") {
    Grid g = build_grid(1.0, 1.0, 8, 8);
    ScalarField u(g, 1.0);
    EllipticSolveConfig bad_tol;
    bad_tol.tol = 1e-3;
    CHECK_THROWS_AS(solve_screened_poisson(u, bad_tol), std::invalid_argument);
    EllipticSolveConfig small_budget;
    small_budget.max_iter = 10;  // below nx*ny
    CHECK_THROWS_AS(solve_screened_poisson(u, small_budget), std::invalid_argument);

    ScalarField nan_field(g, 1.0);
    nan_field.values[3] = std::nan("");
    CHECK_THROWS_AS(solve_screened_poisson(nan_field), std::invalid_argument);
}

TEST_CASE("an exhausted iteration budget raises NonConvergenceError") {
    Grid g = build_grid(1.0, 1.0, 24, 24);
    ScalarField u = random_field(g, 12);
    CHECK_THROWS_AS(detail::solve_screened_budget(u, 1e-10, 3, nullptr, nullptr),
                    NonConvergenceError);
    try {
        detail::solve_screened_budget(u, 1e-10, 3, nullptr, nullptr);
    } catch (const NonConvergenceError& e) {
        CHECK(e.final_residual > 1e-10);
    }
}
