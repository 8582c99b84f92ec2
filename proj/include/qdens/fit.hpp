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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qdens {

/// Raised when a fit is requested on data with no variation at all.
struct FlatDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One observation: a connectivity density and a measured cost value.
/// Replicates (several values at one density) are perfectly fine.
struct FitPoint {
    double density = 0.0;
    double value = 0.0;
};

/// Saturating exponential decline
///     f(rho) = Rinf + (R0 - Rinf) * exp(-exp(delta) * rho).
/// R0 is the zero-density extrapolation, Rinf the dense-hardware floor and
/// exp(delta) the decay rate.
struct NegExpFit {
    double R0 = 0.0;
    double Rinf = 0.0;
    double delta = 0.0;
    double rss = 0.0;
    double r_squared = 0.0;
    int iterations = 0;
    bool converged = false;
};

double negexp_value(const NegExpFit& f, double density);

/// Damped least squares with the analytic Jacobian. Damping starts at
/// 1e-3, grows 10x on a rejected step and shrinks 10x on an accepted one.
/// Iteration stops, with converged set, when a step moves the RSS by less
/// than 1e-10 relative (improvement or stall) or when the RSS reaches the
/// machine-precision floor for the data's magnitude; it stops without
/// convergence after 500 iterations or when no finite step remains.
/// With constrain_rinf_zero the floor is pinned to 0 and only (R0, delta)
/// move. Needs at least 4 points (3 when constrained) spanning more than
/// one distinct density; all-equal values raise FlatDataError.
NegExpFit fit_negexp(const std::vector<FitPoint>& points, bool constrain_rinf_zero = false);

/// Competitor models fitted for comparison. rss and r_squared are always
/// computed on the original value scale so models rank fairly.
struct InverseFit {
    double a = 0.0;  // value ~ a + b / density
    double b = 0.0;
    double rss = 0.0;
    double r_squared = 0.0;
};

InverseFit fit_inverse(const std::vector<FitPoint>& points);

/// Power-transform regression: finds lambda in [-2, 2] (grid step 0.01)
/// maximizing the profile log-likelihood of a linear fit between the
/// transformed values and density, then reports that linear fit. Values
/// must be strictly positive.
struct BoxCoxFit {
    double lambda = 0.0;
    double intercept = 0.0;  // a in transformed(value) ~ a + b * density
    double slope = 0.0;      // b
    double rss = 0.0;        // original scale
    double r_squared = 0.0;  // original scale
};

BoxCoxFit fit_boxcox(const std::vector<FitPoint>& points);

/// Side-by-side ranking of the three model families on one data set,
/// ascending by RSS; models that fail to fit sort last with ok = false.
struct ModelComparisonRow {
    std::string model;  // "negexp", "inverse", "boxcox"
    double rss = 0.0;
    double r_squared = 0.0;
    bool ok = false;
};

std::vector<ModelComparisonRow> compare_models(const std::vector<FitPoint>& points);

/// Fitted coefficients tabulated against problem size, for studying how
/// the decline parameters move as instances grow.
struct CoefficientRow {
    std::string problem;
    int n_qubits = 0;
    NegExpFit fit;
};

/// Sorts rows by (problem, n_qubits). Input order is irrelevant.
std::vector<CoefficientRow> coefficient_evolution(std::vector<CoefficientRow> rows);

}  // namespace qdens
