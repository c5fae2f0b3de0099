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

#include <optional>

#include "relbell/spin_states.hpp"

/*!
 * \file observables.hpp
 *
 * Normalized relativistic spin observables for an observer boosted along x
 * and their joint expectation values on two-particle states.
 */

namespace relbell {

/// Unit measurement direction.
class MeasurementDirection
{
  public:
    //! Tolerance on | |v| - 1 | accepted by the constructor
    static constexpr double tolerance = 1e-9;

    //! Renormalizes deviations within tolerance, throws
    //! std::invalid_argument beyond it.
    explicit MeasurementDirection(Vec3 const& v);

    //! Normalizes any finite nonzero vector.
    static MeasurementDirection normalized(Vec3 const& v);

    Vec3 const& vec() const { return v_; }
    double x() const { return v_.x(); }
    double y() const { return v_.y(); }
    double z() const { return v_.z(); }

  private:
    Vec3 v_;
};

struct SpinObservable
{
    Su2Matrix matrix{Su2Matrix::Zero()};
    //! Unit vector m such that matrix = m . sigma
    Vec3 direction{Vec3::UnitZ()};
};

/// sqrt(1 - beta^2) (s - e (s.e)) + e (s.e)
Vec3 relativistic_spin_vector(Vec3 const& s, BoostParameters const& b);

/// Unit direction (a_x, g a_y, g a_z)/|.| with g = sqrt(1 - beta^2).
Vec3 relativistic_direction(MeasurementDirection const& a,
                            BoostParameters const& b);

SpinObservable spin_observable(MeasurementDirection const& a,
                               BoostParameters const& b);

/// <state| a (x) b |state> for the normalized relativistic observables.
double joint_expectation(TwoParticleSpinState const& state,
                         MeasurementDirection const& a,
                         MeasurementDirection const& b,
                         BoostParameters const& boost);

/// One pair of coefficient combinations: sum = (X+ + X-)/2 and
/// diff = (X+ - X-)/2i.
struct CoefficientFamily
{
    double sum{0};
    double diff{0};
};

/// Coefficient families A through H of the out-of-plane expectation value.
struct CoefficientTable
{
    CoefficientFamily a, b, c, d, e, f, g, h;
};

CoefficientTable coefficient_table(MeasurementDirection const& a,
                                   MeasurementDirection const& b,
                                   BoostParameters const& boost);

/// sqrt((1 + beta^2 (a_x^2 - 1))(1 + beta^2 (b_x^2 - 1)))
double observable_normalization(MeasurementDirection const& a,
                                MeasurementDirection const& b,
                                BoostParameters const& boost);

/// Closed-form expectation for a boosted Bell state, general momentum.
/// Returns std::nullopt for labels 10 and 11, which have no closed form
/// here and must use joint_expectation.
std::optional<double> expectation_closed_form(BellLabel label,
                                              AngleDecomposition const& angles,
                                              MeasurementDirection const& a,
                                              MeasurementDirection const& b,
                                              BoostParameters const& boost);

/// Closed-form expectation for momentum in the x-z plane (signed angles).
std::optional<double> expectation_closed_form(BellLabel label,
                                              InPlaneAngles const& angles,
                                              MeasurementDirection const& a,
                                              MeasurementDirection const& b,
                                              BoostParameters const& boost);

/// beta -> 1 limit of the joint expectation of a boosted Bell state, given
/// the ultra-relativistic angle decomposition. Zero if a_x or b_x is zero.
double expectation_ultra_limit(BellLabel label,
                               AngleDecomposition const& ultra_angles,
                               MeasurementDirection const& a,
                               MeasurementDirection const& b);

/// sign(a_x) sign(b_x), or 0 if either component vanishes.
double classical_limit_correlation(MeasurementDirection const& a,
                                   MeasurementDirection const& b);

}  // namespace relbell
