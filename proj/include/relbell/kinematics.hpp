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

#include <limits>

#include "relbell/common.hpp"

/*!
 * \file kinematics.hpp
 *
 * Scalar and four-vector kinematics for a back-to-back particle pair viewed
 * from a frame boosted along +x.
 *
 * Natural units (c = 1). Four-vectors are stored with index order
 * (x, y, z, t). The observer boost has rapidity alpha (cosh alpha = 1/sqrt(1 -
 * beta^2)); each particle has rapidity delta (cosh delta = p0/m) and direction
 * (sin th cos ph, sin th sin ph, cos th). Particle 1 carries +p, particle 2
 * carries -p.
 */

namespace relbell {

//---------------------------------------------------------------------------//
// Boost and momentum
//---------------------------------------------------------------------------//

/// Rapidity alpha >= 0 with cosh(alpha) = 1/sqrt(1 - beta^2). Throws
/// std::domain_error unless 0 <= beta < 1.
double rapidity_from_beta(double beta);

/// Inverse of rapidity_from_beta. Throws std::domain_error for alpha < 0.
double beta_from_rapidity(double alpha);

/*!
 * Observer boost along the x axis.
 *
 * beta = 1 is not representable; the ultra-relativistic limit is exposed
 * through the dedicated *_ultra operations.
 */
class BoostParameters
{
  public:
    //! Rest frame
    BoostParameters() = default;

    static BoostParameters from_beta(double beta);
    static BoostParameters from_rapidity(double alpha);
    //! cosh(alpha) >= 1
    static BoostParameters from_cosh(double cosh_alpha);

    double beta() const { return beta_; }
    double rapidity() const { return alpha_; }
    //! sqrt(1 - beta^2) = 1/cosh(alpha), evaluated without cancellation
    double inverse_gamma() const { return inverse_gamma_; }
    Vec3 axis() const { return Vec3::UnitX(); }

  private:
    BoostParameters(double beta, double alpha, double inverse_gamma)
        : beta_(beta), alpha_(alpha), inverse_gamma_(inverse_gamma)
    {
    }

    double beta_{0};
    double alpha_{0};
    double inverse_gamma_{1};
};

/// Mass, rapidity and direction of the particle carrying +p.
class MomentumState
{
  public:
    //! Throws std::domain_error for m <= 0, delta < 0, theta outside [0, pi]
    //! or phi outside [0, 2 pi).
    MomentumState(double mass, double rapidity, double theta, double phi);

    static MomentumState from_cosh(double mass, double cosh_delta,
                                   double theta, double phi);

    double mass() const { return mass_; }
    double rapidity() const { return delta_; }
    double theta() const { return theta_; }
    double phi() const { return phi_; }

    double energy() const;
    double momentum_magnitude() const;
    //! Unit direction of +p
    Vec3 direction() const;

  private:
    double mass_;
    double delta_;
    double theta_;
    double phi_;
};

struct FourMomentum
{
    Vec3 momentum{Vec3::Zero()};
    double energy{0};
};

/// (+-|p| p_hat, p0) for the particle in the given slot.
FourMomentum four_momentum(MomentumState const& m, Sign sign);

/// (Lambda p)^0 = p0 cosh(alpha) +- p_x sinh(alpha).
double boosted_energy(MomentumState const& m, BoostParameters const& b,
                      Sign sign);

//---------------------------------------------------------------------------//
// Wigner rotation
//---------------------------------------------------------------------------//

/*!
 * Little-group rotation acquired by a boosted spin-1/2 particle.
 *
 * The spinor representation is cos(omega/2) + i sin(omega/2) sigma.axis with
 * axis along e x p_hat. sin_half is stored nonnegative; the sign of the
 * rotation is carried by the axis, which is exactly zero when the boost and
 * momentum are collinear or either rapidity vanishes.
 */
struct WignerRotation
{
    double cos_half{1};
    double sin_half{0};
    Vec3 axis{Vec3::Zero()};

    double omega() const;
    //! sin(omega/2) * axis
    Vec3 half_vector() const { return sin_half * axis; }
};

WignerRotation wigner_rotation(BoostParameters const& b,
                               MomentumState const& m, Sign sign);

/// Limit of wigner_rotation as beta -> 1 at fixed momentum.
WignerRotation wigner_rotation_ultra(MomentumState const& m, Sign sign);

/// Decomposition of the Wigner axis direction in the y-z plane.
struct EtaDecomposition
{
    double r{1};
    double cos_eta{1};
    double sin_eta{0};
};

/// r = sqrt(sin^2 th sin^2 ph + cos^2 th), cos eta = cos th / r,
/// sin eta = sin th sin ph / r; (0, 1, 0) when r = 0.
EtaDecomposition eta_decomposition(double theta, double phi);

//---------------------------------------------------------------------------//
// Pair angle algebra
//---------------------------------------------------------------------------//

/*!
 * Half-sum and half-difference of the two Wigner angles together with the
 * derived Bell-rotation coefficients.
 *
 * omega_bar = (Omega_p + Omega_-p)/2, delta_omega = (Omega_p - Omega_-p)/2,
 * both with nonnegative half-angle sines. The coefficient tuples satisfy
 * x^2 + y^2 + z^2 + w^2 = 1 and xp^2 + yp^2 + zp^2 = 1.
 */
struct AngleDecomposition
{
    double omega_bar{0};
    double delta_omega{0};
    double cos_bar{1};
    double sin_bar{0};
    double cos_delta{1};
    double sin_delta{0};

    double r{1};
    double cos_eta{1};
    double sin_eta{0};

    double x{1};
    double y{0};
    double z{0};
    double w{0};

    double xp{0};
    double yp{0};
    double zp{1};

    //! coth^2(alpha/2) coth^2(delta/2); +infinity when either rapidity is 0
    double t{std::numeric_limits<double>::infinity()};

    //! X^2 - Y^2 - Z^2 + W^2
    double q_minus() const { return x * x - y * y - z * z + w * w; }
    //! X^2 + Y^2 - Z^2 - W^2
    double q_plus() const { return x * x + y * y - z * z - w * w; }
};

/// Builds the decomposition from the two rotations using the half-angle
/// sum/difference identities.
AngleDecomposition angle_decomposition(BoostParameters const& b,
                                       MomentumState const& m);

/// beta -> 1 limit of angle_decomposition (t -> coth^2(delta/2)).
AngleDecomposition angle_decomposition_ultra(MomentumState const& m);

/// Fills the coefficient tuples and omega angles from the four half-sum and
/// half-difference trigonometric values and the eta decomposition.
AngleDecomposition make_angle_decomposition(double cos_bar, double sin_bar,
                                            double cos_delta, double sin_delta,
                                            EtaDecomposition const& eta,
                                            double t);

/*!
 * Signed pair angles for momentum in the x-z plane (phi = 0).
 *
 * Here both half-angle sines carry the sign of cos(theta) and the axes are
 * fixed to -+y, so sum = (Omega_p + Omega_-p)/2 and
 * diff = (Omega_p - Omega_-p)/2 are signed. Computed from the direct
 * closed forms in (alpha, delta, theta), independent of the half-angle
 * products used by angle_decomposition.
 */
struct InPlaneAngles
{
    double cos_sum{1};
    double sin_sum{0};
    double cos_diff{1};
    double sin_diff{0};

    //! cos(Omega_p + Omega_-p)
    double cos_full_sum() const { return cos_sum * cos_sum - sin_sum * sin_sum; }
    double sin_full_sum() const { return 2 * sin_sum * cos_sum; }
    //! cos(Omega_p - Omega_-p)
    double cos_full_diff() const
    {
        return cos_diff * cos_diff - sin_diff * sin_diff;
    }
    double sin_full_diff() const { return 2 * sin_diff * cos_diff; }
};

/// Throws std::domain_error unless m.phi() == 0.
InPlaneAngles in_plane_angles(BoostParameters const& b, MomentumState const& m);

/// In-plane rotation for one slot with the signed case-A half-angle sine,
/// normalized to the WignerRotation convention. Requires m.phi() == 0.
WignerRotation wigner_rotation_in_plane(BoostParameters const& b,
                                        MomentumState const& m, Sign sign);

//---------------------------------------------------------------------------//
// t-parameter forms and bounds
//---------------------------------------------------------------------------//

struct AppendixQuantities
{
    double q_minus{1};
    double q_plus{1};
    //! 2 sin^2 th sin^2 ph - 1
    double lower_minus{-1};
    //! cos(2 eta)
    double lower_plus{-1};
};

/// q_minus and q_plus through their t-forms, with the lower bounds.
/// t = +infinity returns the analytic limit 1. Throws std::domain_error for
/// t < 1 or NaN.
AppendixQuantities appendix_quantities(double t, double theta, double phi);

/// f(t) = (t + a)/((t-1)^2 + 4 r^2 t) with a = (1 - r^2) tan^2 eta.
double appendix_f(double t, double theta, double phi);
/// g(t) = b/((t-1)^2 + 4 r^2 t) with b = 1 - r^2 sin^2 eta.
double appendix_g(double t, double theta, double phi);

/// coth^2(alpha/2) coth^2(delta/2), +infinity if either rapidity is zero.
double t_parameter(double alpha, double delta);

//---------------------------------------------------------------------------//
// Lorentz matrices
//---------------------------------------------------------------------------//

/// 4x4 real Lorentz matrix, index order (x, y, z, t).
using Lorentz4 = Eigen::Matrix4d;

/// diag(-1, -1, -1, +1)
Lorentz4 minkowski_metric();

/// Pure boost L(+-p) taking (0, 0, 0, m) to (+-p, p0).
Lorentz4 standard_boost(MomentumState const& m, Sign sign);

/// Pure boost along x with rapidity alpha.
Lorentz4 boost_matrix(BoostParameters const& b);

/// max |L^T eta L - eta| / max(1, max|L|^2)
double metric_defect(Lorentz4 const& lambda);

}  // namespace relbell
