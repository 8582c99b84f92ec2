// Copyright 2026 The qdens authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "qdens/fit.hpp"
#include "qdens/rng.hpp"

using namespace qdens;

namespace {

const double kGrid[] = {0.02, 0.05, 0.1, 0.2, 0.3, 0.5, 1.0};

std::vector<FitPoint> negexp_points(double R0, double Rinf, double delta) {
    NegExpFit f;
    f.R0 = R0;
    f.Rinf = Rinf;
    f.delta = delta;
    std::vector<FitPoint> pts;
    for (const double rho : kGrid) pts.push_back({rho, negexp_value(f, rho)});
    return pts;
}

}  // namespace

TEST_CASE("model evaluation endpoints") {
    NegExpFit f;
    f.R0 = 500;
    f.Rinf = 60;
    f.delta = 1.5;
    CHECK(negexp_value(f, 0.0) == doctest::Approx(500.0));
    // large density approaches the floor
    CHECK(negexp_value(f, 100.0) == doctest::Approx(60.0).epsilon(1e-9));
    CHECK(negexp_value(f, 0.5) ==
          doctest::Approx(60 + 440 * std::exp(-std::exp(1.5) * 0.5)));
}

TEST_CASE("exact data is recovered to high precision") {
    const struct {
        double R0, Rinf, delta;
    } cases[] = {{900, 120, 2.5}, {350, 40, 0.8}, {600, 10, 1.9}};
    for (const auto& c : cases) {
        const auto fit = fit_negexp(negexp_points(c.R0, c.Rinf, c.delta));
        CHECK(fit.converged);
        CHECK(fit.R0 == doctest::Approx(c.R0).epsilon(1e-6));
        CHECK(fit.Rinf == doctest::Approx(c.Rinf).epsilon(1e-6));
        CHECK(fit.delta == doctest::Approx(c.delta).epsilon(1e-6));
        CHECK(fit.rss <= 1e-10);
        CHECK(fit.r_squared > 0.999999);
    }
}

TEST_CASE("pinned floor recovers two-parameter data") {
    const auto pts = negexp_points(800, 0, 2.0);
    const auto fit = fit_negexp(pts, true);
    CHECK(fit.converged);
    CHECK(fit.Rinf == 0.0);
    CHECK(fit.R0 == doctest::Approx(800).epsilon(1e-6));
    CHECK(fit.delta == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("constraining can only raise the residual") {
    auto pts = negexp_points(700, 90, 1.4);
    Rng rng(3);
    for (auto& p : pts) p.value += rng.uniform_real() * 10.0 - 5.0;
    const auto free_fit = fit_negexp(pts, false);
    const auto pinned = fit_negexp(pts, true);
    CHECK(free_fit.converged);
    CHECK(pinned.converged);
    CHECK(pinned.rss >= free_fit.rss - 1e-9);
}

TEST_CASE("replicates at one density are usable") {
    std::vector<FitPoint> pts;
    NegExpFit truth;
    truth.R0 = 400;
    truth.Rinf = 50;
    truth.delta = 1.0;
    for (const double rho : kGrid) {
        pts.push_back({rho, negexp_value(truth, rho) + 1.0});
        pts.push_back({rho, negexp_value(truth, rho) - 1.0});
    }
    const auto fit = fit_negexp(pts);
    CHECK(fit.converged);
    CHECK(fit.R0 == doctest::Approx(400).epsilon(0.02));
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(fit_negexp({{0.1, 5}, {0.2, 6}, {0.3, 7}}), std::invalid_argument);
    CHECK_THROWS_AS(
        fit_negexp({{0.1, 5}, {0.1, 6}, {0.1, 7}, {0.1, 8}}),  // one distinct density
        std::invalid_argument);
    CHECK_THROWS_AS(fit_negexp({{0.1, 5}, {0.2, 5}, {0.3, 5}, {0.4, 5}}), FlatDataError);
    const double nan = std::nan("");
    CHECK_THROWS_AS(fit_negexp({{0.1, 5}, {0.2, nan}, {0.3, 7}, {0.4, 8}}),
                    std::invalid_argument);
}

TEST_CASE("reciprocal model solves exactly on reciprocal data") {
    std::vector<FitPoint> pts;
    for (const double rho : kGrid) pts.push_back({rho, 3.0 + 2.0 / rho});
    const auto fit = fit_inverse(pts);
    CHECK(fit.a == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(fit.b == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fit.rss <= 1e-12);
    CHECK(fit.r_squared == doctest::Approx(1.0));
    CHECK_THROWS(fit_inverse({{0.0, 1}, {0.5, 2}}));  // zero density
}

TEST_CASE("power transform finds square and log laws") {
    std::vector<FitPoint> sq, ex;
    for (const double rho : kGrid) {
        const double base = 1.0 + 3.0 * rho;
        sq.push_back({rho, base * base});        // recovered by lambda = 0.5
        ex.push_back({rho, std::exp(2.0 + rho)});  // recovered by lambda = 0
    }
    const auto fsq = fit_boxcox(sq);
    CHECK(fsq.lambda > 0.49);
    CHECK(fsq.lambda < 0.51);
    CHECK(fsq.r_squared > 0.999);
    const auto fex = fit_boxcox(ex);
    CHECK(std::abs(fex.lambda) <= 0.01);
    CHECK(fex.slope == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS(fit_boxcox({{0.1, -1.0}, {0.2, 2.0}, {0.3, 3.0}, {0.4, 4.0}}));
}

TEST_CASE("model ranking puts the generating family first") {
    const auto pts = negexp_points(900, 120, 2.5);
    const auto rows = compare_models(pts);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].model == "negexp");
    CHECK(rows[0].ok);
    CHECK(rows[0].rss <= rows[1].rss);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i - 1].ok && rows[i].ok) CHECK(rows[i - 1].rss <= rows[i].rss);
        CHECK((rows[i - 1].ok || !rows[i].ok));  // failures sort last
    }
}

TEST_CASE("failed families rank last") {
    // negative values break the power transform but not the other two
    std::vector<FitPoint> pts;
    NegExpFit truth;
    truth.R0 = 5;
    truth.Rinf = -6;
    truth.delta = 1.0;
    for (const double rho : kGrid) pts.push_back({rho, negexp_value(truth, rho)});
    const auto rows = compare_models(pts);
    REQUIRE(rows.size() == 3);
    CHECK(rows[2].model == "boxcox");
    CHECK(!rows[2].ok);
    CHECK(rows[0].ok);
}

TEST_CASE("coefficient tables sort by problem then size") {
    std::vector<CoefficientRow> rows(3);
    rows[0].problem = "tsp";
    rows[0].n_qubits = 9;
    rows[1].problem = "maxcut";
    rows[1].n_qubits = 16;
    rows[2].problem = "maxcut";
    rows[2].n_qubits = 9;
    const auto sorted = coefficient_evolution(rows);
    CHECK(sorted[0].problem == "maxcut");
    CHECK(sorted[0].n_qubits == 9);
    CHECK(sorted[1].n_qubits == 16);
    CHECK(sorted[2].problem == "tsp");
}
