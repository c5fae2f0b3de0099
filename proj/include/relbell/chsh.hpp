// Copyright 2026 The relbell Authors
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

#include <cmath>
#include <cstdint>
#include <optional>

#include "relbell/observables.hpp"

namespace relbell {

struct ChshSettings
{
    MeasurementDirection a;
    MeasurementDirection a_prime;
    MeasurementDirection b;
    MeasurementDirection b_prime;
};

/*!
 * Settings reaching 2 sqrt2 at rest for each Bell label.
 *
 * b = y and b' = x throughout. Label 00 uses a = (1, -1, 0)/sqrt2,
 * a' = (-1, -1, 0)/sqrt2 and label 01 their negatives. Labels 11 and 10 use
 * the same sets with a_x mirrored, because the plain 00 set gives zero on
 * the singlet.
 */
ChshSettings canonical_settings(BellLabel label);

/// <ab> + <ab'> + <a'b> - <a'b'> on an already boosted state.
double chsh_value(TwoParticleSpinState const& state,
                  ChshSettings const& settings, BoostParameters const& boost);

/// Boosts the Bell state through the SU(2) matrix path and evaluates CHSH.
double chsh_value(BellLabel label, ChshSettings const& settings,
                  BoostParameters const& boost, MomentumState const& m);

/// Closed-form CHSH value with canonical settings, general momentum.
/// std::nullopt for labels 10 and 11.
std::optional<double> chsh_closed_form(BellLabel label,
                                       BoostParameters const& boost,
                                       AngleDecomposition const& angles);

/// Closed-form CHSH value with canonical settings, momentum in the x-z plane.
std::optional<double> chsh_closed_form(BellLabel label,
                                       BoostParameters const& boost,
                                       InPlaneAngles const& angles);

/// beta = 1 limit of the general closed form, from the ultra-relativistic
/// angle decomposition. std::nullopt for labels 10 and 11.
std::optional<double> chsh_closed_form_ultra(BellLabel label,
                                             AngleDecomposition const& ultra);

/// (2/sqrt(2 - beta^2))(1 + sqrt(1 - beta^2)), written as
/// 2 sqrt(1 + 2s/(1 + s^2)) with s = sqrt(1 - beta^2) so both endpoints are
/// exact. Works for any floating type with ADL sqrt.
template<class T>
T universal_curve_t(T const& beta)
{
    using std::sqrt;
    T const one{1};
    T const s = sqrt((one - beta) * (one + beta));
    return 2 * sqrt(one + 2 * s / (one + s * s));
}

/// Throws std::domain_error unless 0 <= beta <= 1.
double universal_curve(double beta);

enum class MaximizeMethod { grid, simplex };

struct MaximizeOptions
{
    MaximizeMethod method{MaximizeMethod::simplex};
    std::uint64_t seed{0};
    //! Random starts for the simplex method (the canonical start is extra)
    int starts{16};
    //! Objective evaluation cap
    long max_evaluations{400000};
    //! Convergence tolerance on the objective
    double tolerance{1e-8};
};

struct MaximizeResult
{
    ChshSettings settings;
    double value{0};
    bool converged{false};
    long evaluations{0};
};

/// Maximizes the CHSH value over all four directions (8 spherical angles).
/// Deterministic for a fixed seed; never worse than the canonical settings.
MaximizeResult maximize_chsh(BellLabel label, BoostParameters const& boost,
                             MomentumState const& m,
                             MaximizeOptions const& options = {});

MaximizeMethod parse_maximize_method(std::string_view text);

}  // namespace relbell
