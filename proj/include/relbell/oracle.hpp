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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relbell/chsh.hpp"
#include "relbell/random.hpp"

/*!
 * \file oracle.hpp
 *
 * Brute-force reference constructions that share no half-angle algebra with
 * the closed forms: the 4x4 little-group element, the direct spinor boost
 * formula and dense tensor-product expectations. crosscheck_suite compares
 * every closed form against them over a seeded random sample.
 */

namespace relbell {

struct LittleGroupElement
{
    //! W = L^-1(Lambda p) Lambda L(p), built in quad precision
    Lorentz4 w{Lorentz4::Identity()};
    //! Rotation in the WignerRotation convention (axis along e x p)
    WignerRotation rotation;
    //! max |W^T eta W - eta|
    double metric_defect{0};
    //! max |W k - k| for the rest momentum k = (0, 0, 0, 1)
    double fixed_point_defect{0};
    //! max |R^T R - I| of the spatial block
    double orthogonality_defect{0};
};

/// Throws std::logic_error if W fails to be a rotation to 1e-10.
LittleGroupElement little_group_element(BoostParameters const& b,
                                        MomentumState const& m, Sign sign);

/// SO(3) image R_ij = tr(sigma_i D sigma_j D^dagger)/2 of a spinor matrix.
Eigen::Matrix3d rotation_image(Su2Matrix const& d);

/// [(p0 + m) cosh(a/2) + (p.e) sinh(a/2) - i sinh(a/2) sigma.(p x e)]
///   / sqrt((p0 + m)((Lambda p)^0 + m))
Su2Matrix wigner_matrix_direct(BoostParameters const& b,
                               MomentumState const& m, Sign sign);

/// Boosts a state with the direct spinor matrices.
TwoParticleSpinState boost_two_particle_direct(TwoParticleSpinState const& s,
                                               BoostParameters const& b,
                                               MomentumState const& m);

/// Quadratic form of the explicit 4x4 operator opA (x) opB.
double dense_expectation(TwoParticleSpinState const& state,
                         SpinObservable const& op_a,
                         SpinObservable const& op_b);

/// The printed action of a (x) b on the four product basis kets, as the
/// columns of a 4x4 matrix.
Operator4 basis_action_matrix(MeasurementDirection const& a,
                              MeasurementDirection const& b,
                              BoostParameters const& boost);

/// max |basis_action_matrix - opA (x) opB|
double basis_action_defect(MeasurementDirection const& a,
                           MeasurementDirection const& b,
                           BoostParameters const& boost);

/// Parameter tuple of one sample or grid point.
struct SampleTuple
{
    double beta{0};
    double delta{0};
    double theta{0};
    double phi{0};
    Vec3 a{Vec3::UnitZ()};
    Vec3 b{Vec3::UnitZ()};
    //! Appendix t for grid points of the bounds suite, 0 otherwise
    double t{0};
};

struct Comparison
{
    std::string name;
    double max_deviation{0};
    double tolerance{0};
    bool passed{true};
    SampleTuple worst;
};

struct CrosscheckOptions
{
    //! Replaces the sampled beta in every tuple
    std::optional<double> forced_beta;
    //! Gate for the path-agreement comparisons
    double tolerance{1e-9};
};

struct CrosscheckReport
{
    std::uint64_t seed{0};
    int n_samples{0};
    std::vector<Comparison> comparisons;

    bool passed() const;
    Comparison const& find(std::string const& name) const;
};

/*!
 * Draws n_samples tuples with beta in [0, 0.999], delta in [0, 10], uniform
 * angles and uniform sphere directions from mt19937_64(seed), and records
 * the worst deviation of every path comparison.
 */
CrosscheckReport crosscheck_suite(std::uint64_t seed, int n_samples,
                                  CrosscheckOptions const& options = {});


/*!
 * Appendix bounds on a grid of log-spaced t in [1, 1e6] and uniform theta
 * in [0, pi], phi in [0, 2 pi): the bound violation of q_minus and q_plus
 * (tolerance 1e-12) and the largest forward difference of f and g along t
 * (must not be positive).
 */
std::vector<Comparison> appendix_bounds_suite(int n_t = 100, int n_theta = 50,
                                              int n_phi = 50);

/*!
 * Strict decrease of universal_curve on points uniform grid points of
 * [0, 1]. Reports the largest forward difference evaluated in quad
 * precision (must be negative), and separately the double evaluation
 * (must not be positive; double cannot resolve the first steps near 0).
 */
std::vector<Comparison> universal_curve_suite(int points = 10000);

}  // namespace relbell
