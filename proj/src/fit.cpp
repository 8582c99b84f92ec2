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

#include "qdens/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace qdens {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void check_points(const std::vector<FitPoint>& points, std::size_t min_points,
                  const char* who) {
    if (points.size() < min_points)
        fail(std::string(who) + ": needs at least " + std::to_string(min_points) + " points");
    double first_rho = points[0].density;
    bool rho_varies = false, value_varies = false;
    for (const FitPoint& p : points) {
        if (!std::isfinite(p.density) || !std::isfinite(p.value))
            fail(std::string(who) + ": non-finite input");
        rho_varies = rho_varies || p.density != first_rho;
        value_varies = value_varies || p.value != points[0].value;
    }
    if (!rho_varies) fail(std::string(who) + ": needs more than one distinct density");
    if (!value_varies) throw FlatDataError(std::string(who) + ": values show no variation");
}

double total_ss(const std::vector<FitPoint>& points) {
    double mean = 0;
    for (const FitPoint& p : points) mean += p.value;
    mean /= static_cast<double>(points.size());
    double tss = 0;
    for (const FitPoint& p : points) tss += (p.value - mean) * (p.value - mean);
    return tss;
}

// Gaussian elimination with partial pivoting on a k x k system (k <= 3).
bool solve_linear(double a[3][3], double b[3], int k, double out[3]) {
    int piv[3] = {0, 1, 2};
    for (int col = 0; col < k; ++col) {
        int best = col;
        for (int r = col + 1; r < k; ++r)
            if (std::abs(a[piv[r]][col]) > std::abs(a[piv[best]][col])) best = r;
        std::swap(piv[col], piv[best]);
        const double p = a[piv[col]][col];
        if (!(std::abs(p) > 1e-300)) return false;
        for (int r = col + 1; r < k; ++r) {
            const double m = a[piv[r]][col] / p;
            for (int c = col; c < k; ++c) a[piv[r]][c] -= m * a[piv[col]][c];
            b[piv[r]] -= m * b[piv[col]];
        }
    }
    for (int col = k - 1; col >= 0; --col) {
        double s = b[piv[col]];
        for (int c = col + 1; c < k; ++c) s -= a[piv[col]][c] * out[c];
        out[col] = s / a[piv[col]][col];
    }
    return true;
}

double negexp_rss(const std::vector<FitPoint>& points, double r0, double rinf, double delta) {
    const double rate = std::exp(delta);
    double rss = 0;
    for (const FitPoint& p : points) {
        const double r = rinf + (r0 - rinf) * std::exp(-rate * p.density) - p.value;
        rss += r * r;
    }
    return rss;
}

}  // namespace

double negexp_value(const NegExpFit& f, double density) {
    return f.Rinf + (f.R0 - f.Rinf) * std::exp(-std::exp(f.delta) * density);
}

NegExpFit fit_negexp(const std::vector<FitPoint>& points, bool constrain_rinf_zero) {
    check_points(points, constrain_rinf_zero ? 3 : 4, "fit_negexp");

    double lo = points[0].value, hi = points[0].value;
    double rho_min = points[0].density, rho_max = points[0].density;
    for (const FitPoint& p : points) {
        lo = std::min(lo, p.value);
        hi = std::max(hi, p.value);
        rho_min = std::min(rho_min, p.density);
        rho_max = std::max(rho_max, p.density);
    }

    NegExpFit fit;
    fit.Rinf = constrain_rinf_zero ? 0.0 : lo;
    fit.R0 = hi;
    // start with the rate that halves the drop at the middle density
    const double rho_mid = (rho_min + rho_max) / 2;
    const double drop = fit.R0 - fit.Rinf;
    const double rate0 = std::log(drop / std::max(drop / 2, 1e-12)) / rho_mid;
    fit.delta = (std::isfinite(rate0) && rate0 > 0) ? std::log(rate0) : 0.0;

    const int n_par = constrain_rinf_zero ? 2 : 3;
    double rss = negexp_rss(points, fit.R0, fit.Rinf, fit.delta);
    double damping = 1e-3;
    const double tss = total_ss(points);

    // residuals cannot be meaningfully smaller than eps * |value|, so an
    // RSS below this floor is a machine-precision-perfect fit
    double sum_sq = 0.0;
    for (const FitPoint& p : points) sum_sq += p.value * p.value;
    const double eps = std::numeric_limits<double>::epsilon();
    const double perfect = eps * eps * sum_sq * static_cast<double>(points.size());

    for (int iter = 0; iter < 500; ++iter) {
        fit.iterations = iter + 1;
        if (rss <= perfect) {
            fit.converged = true;
            break;
        }
        // normal equations J^T J step with Marquardt scaling on the diagonal
        double jtj[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
        double jtr[3] = {0, 0, 0};
        const double rate = std::exp(fit.delta);
        for (const FitPoint& p : points) {
            const double e = std::exp(-rate * p.density);
            const double res = fit.Rinf + (fit.R0 - fit.Rinf) * e - p.value;
            double grad[3];
            if (constrain_rinf_zero) {
                grad[0] = e;
                grad[1] = -(fit.R0 - fit.Rinf) * e * p.density * rate;
                grad[2] = 0;
            } else {
                grad[0] = e;
                grad[1] = 1 - e;
                grad[2] = -(fit.R0 - fit.Rinf) * e * p.density * rate;
            }
            for (int r = 0; r < n_par; ++r) {
                for (int c = 0; c < n_par; ++c) jtj[r][c] += grad[r] * grad[c];
                jtr[r] += grad[r] * res;
            }
        }
        double a[3][3];
        double b[3];
        for (int r = 0; r < n_par; ++r) {
            for (int c = 0; c < n_par; ++c) a[r][c] = jtj[r][c];
            a[r][r] += damping * std::max(jtj[r][r], 1e-12);
            b[r] = -jtr[r];
        }
        double step[3] = {0, 0, 0};
        bool accepted = false;
        if (solve_linear(a, b, n_par, step)) {
            double r0 = fit.R0, rinf = fit.Rinf, delta = fit.delta;
            if (constrain_rinf_zero) {
                r0 += step[0];
                delta += step[1];
            } else {
                r0 += step[0];
                rinf += step[1];
                delta += step[2];
            }
            const double cand = negexp_rss(points, r0, rinf, delta);
            if (std::isfinite(cand) && cand < rss) {
                const double rel = (rss - cand) / rss;
                fit.R0 = r0;
                fit.Rinf = rinf;
                fit.delta = delta;
                rss = cand;
                damping = std::max(damping / 10, 1e-15);
                accepted = true;
                if (rel < 1e-10) {
                    fit.converged = true;
                    break;
                }
            } else if (std::isfinite(cand) && std::fabs(cand - rss) <= 1e-10 * rss) {
                // the step moves the objective by less than the convergence
                // band: flat to working precision, so this is the optimum
                fit.converged = true;
                break;
            }
        }
        if (!accepted) {
            damping *= 10;
            if (damping > 1e12) break;  // no acceptable step remains
        }
    }

    fit.rss = rss;
    fit.r_squared = 1 - rss / tss;
    return fit;
}

InverseFit fit_inverse(const std::vector<FitPoint>& points) {
    check_points(points, 2, "fit_inverse");
    for (const FitPoint& p : points)
        if (p.density == 0.0) fail("fit_inverse: zero density");

    const auto n = static_cast<double>(points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const FitPoint& p : points) {
        const double x = 1.0 / p.density;
        sx += x;
        sy += p.value;
        sxx += x * x;
        sxy += x * p.value;
    }
    const double var_x = sxx - sx * sx / n;
    if (!(var_x > 0)) fail("fit_inverse: densities give no regressor variation");

    InverseFit fit;
    fit.b = (sxy - sx * sy / n) / var_x;
    fit.a = (sy - fit.b * sx) / n;
    for (const FitPoint& p : points) {
        const double r = fit.a + fit.b / p.density - p.value;
        fit.rss += r * r;
    }
    fit.r_squared = 1 - fit.rss / total_ss(points);
    return fit;
}

BoxCoxFit fit_boxcox(const std::vector<FitPoint>& points) {
    check_points(points, 3, "fit_boxcox");
    double log_sum = 0;
    for (const FitPoint& p : points) {
        if (!(p.value > 0)) fail("fit_boxcox: values must be strictly positive");
        log_sum += std::log(p.value);
    }

    const auto n = static_cast<double>(points.size());
    double sx = 0, sxx = 0;
    for (const FitPoint& p : points) {
        sx += p.density;
        sxx += p.density * p.density;
    }
    const double var_x = sxx - sx * sx / n;
    if (!(var_x > 0)) fail("fit_boxcox: densities give no regressor variation");

    // transformed value at a given lambda; the grid hits 0 exactly
    const auto transform = [](double y, double lambda) {
        return lambda == 0.0 ? std::log(y) : (std::pow(y, lambda) - 1) / lambda;
    };

    BoxCoxFit best;
    double best_ll = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 400; ++i) {
        const double lambda = (i - 200) / 100.0;
        double sy = 0, sxy = 0;
        for (const FitPoint& p : points) {
            const double z = transform(p.value, lambda);
            sy += z;
            sxy += p.density * z;
        }
        const double slope = (sxy - sx * sy / n) / var_x;
        const double intercept = (sy - slope * sx) / n;
        double rss_z = 0;
        for (const FitPoint& p : points) {
            const double r = intercept + slope * p.density - transform(p.value, lambda);
            rss_z += r * r;
        }
        const double ll = -n / 2 * std::log(rss_z / n) + (lambda - 1) * log_sum;
        if (ll > best_ll) {
            best_ll = ll;
            best.lambda = lambda;
            best.intercept = intercept;
            best.slope = slope;
        }
    }

    // back-transform the chosen line and score on the original scale
    best.rss = 0;
    for (const FitPoint& p : points) {
        const double z = best.intercept + best.slope * p.density;
        const double pred =
            best.lambda == 0.0 ? std::exp(z) : std::pow(best.lambda * z + 1, 1 / best.lambda);
        const double r = pred - p.value;
        best.rss += r * r;
    }
    best.r_squared = 1 - best.rss / total_ss(points);
    return best;
}

std::vector<ModelComparisonRow> compare_models(const std::vector<FitPoint>& points) {
    std::vector<ModelComparisonRow> rows;
    const auto add = [&](const char* name, auto&& fitter) {
        ModelComparisonRow row;
        row.model = name;
        try {
            const auto [rss, r2] = fitter();
            row.rss = rss;
            row.r_squared = r2;
            row.ok = std::isfinite(rss);
        } catch (const std::exception&) {
            row.ok = false;
        }
        if (!row.ok) {
            row.rss = std::numeric_limits<double>::infinity();
            row.r_squared = 0;
        }
        rows.push_back(row);
    };
    add("negexp", [&] {
        const auto f = fit_negexp(points);
        return std::pair{f.rss, f.r_squared};
    });
    add("inverse", [&] {
        const auto f = fit_inverse(points);
        return std::pair{f.rss, f.r_squared};
    });
    add("boxcox", [&] {
        const auto f = fit_boxcox(points);
        return std::pair{f.rss, f.r_squared};
    });
    std::sort(rows.begin(), rows.end(), [](const ModelComparisonRow& a, const ModelComparisonRow& b) {
        return std::make_tuple(!a.ok, a.rss, a.model) < std::make_tuple(!b.ok, b.rss, b.model);
    });
    return rows;
}

std::vector<CoefficientRow> coefficient_evolution(std::vector<CoefficientRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const CoefficientRow& a, const CoefficientRow& b) {
        return std::make_tuple(a.problem, a.n_qubits) < std::make_tuple(b.problem, b.n_qubits);
    });
    return rows;
}

}  // namespace qdens
