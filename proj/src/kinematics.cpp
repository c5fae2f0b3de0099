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

#include "relbell/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "trig.hpp"

namespace relbell {

Sign parse_sign(std::string_view text)
{
    if (text == "+" || text == "plus")
        return Sign::plus;
    if (text == "-" || text == "minus")
        return Sign::minus;
    throw std::invalid_argument("sign must be '+' or '-', got '"
                                + std::string(text) + "'");
}

//---------------------------------------------------------------------------//
// Boost and momentum
//---------------------------------------------------------------------------//

double rapidity_from_beta(double beta)
{
    if (!(beta >= 0.0 && beta < 1.0))
        throw std::domain_error("beta must lie in [0, 1), got "
                                + std::to_string(beta));
    return std::atanh(beta);
}

double beta_from_rapidity(double alpha)
{
    if (!(alpha >= 0.0) || std::isinf(alpha))
        throw std::domain_error("rapidity must be finite and >= 0, got "
                                + std::to_string(alpha));
    return std::tanh(alpha);
}

BoostParameters BoostParameters::from_beta(double beta)
{
    double const alpha = rapidity_from_beta(beta);
    return {beta, alpha, std::sqrt((1.0 - beta) * (1.0 + beta))};
}

BoostParameters BoostParameters::from_rapidity(double alpha)
{
    double const beta = beta_from_rapidity(alpha);
    return {beta, alpha, 1.0 / std::cosh(alpha)};
}

BoostParameters BoostParameters::from_cosh(double cosh_alpha)
{
    if (!(cosh_alpha >= 1.0) || std::isinf(cosh_alpha))
        throw std::domain_error("cosh(alpha) must be finite and >= 1, got "
                                + std::to_string(cosh_alpha));
    double const beta
        = std::sqrt((cosh_alpha - 1.0) * (cosh_alpha + 1.0)) / cosh_alpha;
    return {beta, std::acosh(cosh_alpha), 1.0 / cosh_alpha};
}

MomentumState::MomentumState(double mass, double rapidity, double theta,
                             double phi)
    : mass_(mass), delta_(rapidity), theta_(theta), phi_(phi)
{
    if (!(mass > 0.0) || std::isinf(mass))
        throw std::domain_error("mass must be finite and > 0");
    if (!(rapidity >= 0.0) || std::isinf(rapidity))
        throw std::domain_error("particle rapidity must be finite and >= 0");
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw std::domain_error("theta must lie in [0, pi]");
    if (!(phi >= 0.0 && phi < 2 * std::numbers::pi))
        throw std::domain_error("phi must lie in [0, 2 pi)");
}

MomentumState MomentumState::from_cosh(double mass, double cosh_delta,
                                       double theta, double phi)
{
    if (!(cosh_delta >= 1.0) || std::isinf(cosh_delta))
        throw std::domain_error("cosh(delta) must be finite and >= 1");
    return {mass, std::acosh(cosh_delta), theta, phi};
}

double MomentumState::energy() const
{
    return mass_ * std::cosh(delta_);
}

double MomentumState::momentum_magnitude() const
{
    return mass_ * std::sinh(delta_);
}

Vec3 MomentumState::direction() const
{
    double const st = detail::snapped_sin(theta_);
    return {st * detail::snapped_cos(phi_), st * detail::snapped_sin(phi_),
            detail::snapped_cos(theta_)};
}

FourMomentum four_momentum(MomentumState const& m, Sign sign)
{
    return {sign_value(sign) * m.momentum_magnitude() * m.direction(),
            m.energy()};
}

double boosted_energy(MomentumState const& m, BoostParameters const& b,
                      Sign sign)
{
    FourMomentum const p = four_momentum(m, sign);
    return p.energy * std::cosh(b.rapidity())
           + p.momentum.x() * std::sinh(b.rapidity());
}

//---------------------------------------------------------------------------//
// Wigner rotation
//---------------------------------------------------------------------------//

namespace {

// Products of half-rapidity functions. Only ratios enter the rotation, so
// the ultra-relativistic limit divides everything by cosh(alpha/2).
struct HalfRapidities
{
    double cc;  // cosh(a/2) cosh(d/2)
    double ss;  // sinh(a/2) sinh(d/2)
    double cc_minus_ss;  // cosh((a-d)/2)
};

HalfRapidities half_rapidities(double alpha, double delta)
{
    return {std::cosh(alpha / 2) * std::cosh(delta / 2),
            std::sinh(alpha / 2) * std::sinh(delta / 2),
            std::cosh((alpha - delta) / 2)};
}

HalfRapidities half_rapidities_ultra(double delta)
{
    return {std::cosh(delta / 2), std::sinh(delta / 2), std::exp(-delta / 2)};
}

// dir is the signed unit momentum of the slot; boost along x.
WignerRotation rotation_from(HalfRapidities const& h, Vec3 const& dir)
{
    double const k = dir.x();
    Vec3 const cross{0.0, -dir.z(), dir.y()};
    double const r = cross.norm();
    // cosh cosh + sinh sinh k, rearranged for k < 0 to avoid cancellation
    double const num = k >= 0 ? h.cc + h.ss * k
                              : h.cc_minus_ss + h.ss * (1.0 + k);
    double const sr = h.ss * r;
    double const den = std::hypot(num, sr);

    WignerRotation w;
    w.cos_half = num / den;
    w.sin_half = sr / den;
    if (w.sin_half > 0)
        w.axis = cross / r;
    return w;
}

Vec3 slot_direction(MomentumState const& m, Sign sign)
{
    return sign_value(sign) * m.direction();
}

}  // namespace

double WignerRotation::omega() const
{
    return 2 * std::atan2(sin_half, cos_half);
}

WignerRotation wigner_rotation(BoostParameters const& b,
                               MomentumState const& m, Sign sign)
{
    return rotation_from(half_rapidities(b.rapidity(), m.rapidity()),
                         slot_direction(m, sign));
}

WignerRotation wigner_rotation_ultra(MomentumState const& m, Sign sign)
{
    return rotation_from(half_rapidities_ultra(m.rapidity()),
                         slot_direction(m, sign));
}

EtaDecomposition eta_decomposition(double theta, double phi)
{
    double const ct = detail::snapped_cos(theta);
    double const sy = detail::snapped_sin(theta) * detail::snapped_sin(phi);
    double const r = std::hypot(sy, ct);
    if (r == 0)
        return {0.0, 1.0, 0.0};
    return {r, ct / r, sy / r};
}

//---------------------------------------------------------------------------//
// Pair angle algebra
//---------------------------------------------------------------------------//

AngleDecomposition make_angle_decomposition(double cos_bar, double sin_bar,
                                            double cos_delta, double sin_delta,
                                            EtaDecomposition const& eta,
                                            double t)
{
    AngleDecomposition a;
    a.cos_bar = cos_bar;
    a.sin_bar = sin_bar;
    a.cos_delta = cos_delta;
    a.sin_delta = sin_delta;
    a.omega_bar = std::atan2(sin_bar, cos_bar);
    a.delta_omega = std::atan2(sin_delta, cos_delta);
    a.r = eta.r;
    a.cos_eta = eta.cos_eta;
    a.sin_eta = eta.sin_eta;

    double const ce = eta.cos_eta;
    double const se = eta.sin_eta;
    a.x = cos_bar * ce * ce + cos_delta * se * se;
    a.y = sin_bar * ce;
    a.z = sin_delta * se;
    a.w = (cos_delta - cos_bar) * se * ce;

    a.xp = sin_delta * ce;
    a.yp = sin_delta * se;
    a.zp = cos_delta;
    a.t = t;
    return a;
}

namespace {

AngleDecomposition combine(WignerRotation const& plus,
                           WignerRotation const& minus,
                           MomentumState const& m, double t)
{
    double const cp = plus.cos_half, sp = plus.sin_half;
    double const cm = minus.cos_half, sm = minus.sin_half;
    return make_angle_decomposition(cp * cm - sp * sm, sp * cm + cp * sm,
                                    cp * cm + sp * sm, sp * cm - cp * sm,
                                    eta_decomposition(m.theta(), m.phi()), t);
}

}  // namespace

double t_parameter(double alpha, double delta)
{
    if (alpha == 0 || delta == 0)
        return std::numeric_limits<double>::infinity();
    double const ca = 1.0 / std::tanh(alpha / 2);
    double const cd = 1.0 / std::tanh(delta / 2);
    return ca * ca * cd * cd;
}

AngleDecomposition angle_decomposition(BoostParameters const& b,
                                       MomentumState const& m)
{
    return combine(wigner_rotation(b, m, Sign::plus),
                   wigner_rotation(b, m, Sign::minus), m,
                   t_parameter(b.rapidity(), m.rapidity()));
}

AngleDecomposition angle_decomposition_ultra(MomentumState const& m)
{
    double t = std::numeric_limits<double>::infinity();
    if (m.rapidity() != 0)
    {
        double const cd = 1.0 / std::tanh(m.rapidity() / 2);
        t = cd * cd;
    }
    return combine(wigner_rotation_ultra(m, Sign::plus),
                   wigner_rotation_ultra(m, Sign::minus), m, t);
}

namespace {

void require_in_plane(MomentumState const& m)
{
    if (m.phi() != 0)
        throw std::domain_error(
            "in-plane forms require momentum in the x-z plane (phi = 0)");
}

// 1/2 + 1/2 cosh a cosh d +- 1/2 sinh a sinh d sin th, without cancellation
// for the minus branch.
double in_plane_denominator_sq(double alpha, double delta, double sin_theta,
                               double sign)
{
    double const shsh = std::sinh(alpha) * std::sinh(delta);
    if (sign > 0)
        return 0.5
               * (1.0 + std::cosh(alpha) * std::cosh(delta) + shsh * sin_theta);
    return 0.5 * (1.0 + std::cosh(alpha - delta) + shsh * (1.0 - sin_theta));
}

}  // namespace

InPlaneAngles in_plane_angles(BoostParameters const& b, MomentumState const& m)
{
    require_in_plane(m);
    double const alpha = b.rapidity();
    double const delta = m.rapidity();
    double const st = detail::snapped_sin(m.theta());
    double const ct = detail::snapped_cos(m.theta());
    HalfRapidities const h = half_rapidities(alpha, delta);

    double const den
        = std::sqrt(in_plane_denominator_sq(alpha, delta, st, +1.0)
                    * in_plane_denominator_sq(alpha, delta, st, -1.0));
    // (cosh cosh)^2 - (sinh sinh)^2 = cosh((a-d)/2) cosh((a+d)/2)
    double const cc2_minus_ss2
        = h.cc_minus_ss * std::cosh((alpha + delta) / 2);

    InPlaneAngles a;
    a.cos_sum = cc2_minus_ss2 / den;
    a.sin_sum = 2 * h.cc * h.ss * ct / den;
    // (cosh cosh)^2 + (sinh sinh)^2 cos(2 th)
    a.cos_diff = (cc2_minus_ss2 + 2 * h.ss * h.ss * ct * ct) / den;
    a.sin_diff = -2 * h.ss * h.ss * st * ct / den;
    return a;
}

WignerRotation wigner_rotation_in_plane(BoostParameters const& b,
                                        MomentumState const& m, Sign sign)
{
    require_in_plane(m);
    double const alpha = b.rapidity();
    double const delta = m.rapidity();
    double const st = detail::snapped_sin(m.theta());
    double const ct = detail::snapped_cos(m.theta());
    double const s = sign_value(sign);
    HalfRapidities const h = half_rapidities(alpha, delta);

    double const num = s > 0 ? h.cc + h.ss * st
                             : h.cc_minus_ss + h.ss * (1.0 - st);
    double const den = std::sqrt(in_plane_denominator_sq(alpha, delta, st, s));
    // sin(Omega/2) n = (-+y) sinh sinh cos(th) / den
    double const signed_sin = h.ss * ct / den;

    WignerRotation w;
    w.cos_half = num / den;
    w.sin_half = std::abs(signed_sin);
    if (w.sin_half > 0)
        w.axis = Vec3{0.0, -s * std::copysign(1.0, signed_sin), 0.0};
    return w;
}

//---------------------------------------------------------------------------//
// t-parameter forms
//---------------------------------------------------------------------------//

namespace {

void require_t(double t)
{
    if (!(t >= 1.0))
        throw std::domain_error("t must be >= 1, got " + std::to_string(t));
}

double t_denominator(double t, double r)
{
    return (t - 1) * (t - 1) + 4 * t * r * r;
}

}  // namespace

AppendixQuantities appendix_quantities(double t, double theta, double phi)
{
    require_t(t);
    EtaDecomposition const eta = eta_decomposition(theta, phi);
    double const st = detail::snapped_sin(theta);
    double const sp = detail::snapped_sin(phi);

    AppendixQuantities q;
    q.lower_minus = 2 * st * st * sp * sp - 1;
    q.lower_plus
        = eta.cos_eta * eta.cos_eta - eta.sin_eta * eta.sin_eta;
    if (std::isinf(t) || eta.r == 0)
        return q.q_minus = q.q_plus = 1.0, q;

    double const r2 = eta.r * eta.r;
    double const ce2 = eta.cos_eta * eta.cos_eta;
    double const se2 = eta.sin_eta * eta.sin_eta;
    double const den = t_denominator(t, eta.r);
    // cos^2(eta) tan^2(eta) folded into sin^2(eta)
    q.q_minus = 1 - 8 * r2 * (ce2 * t + (1 - r2) * se2) / den;
    q.q_plus = 1 - 8 * r2 * se2 * (1 - r2 * se2) / den;
    return q;
}

double appendix_f(double t, double theta, double phi)
{
    require_t(t);
    if (std::isinf(t))
        return 0.0;
    EtaDecomposition const eta = eta_decomposition(theta, phi);
    double const tan_eta = eta.sin_eta / eta.cos_eta;
    double const a = (1 - eta.r * eta.r) * tan_eta * tan_eta;
    return (t + a) / t_denominator(t, eta.r);
}

double appendix_g(double t, double theta, double phi)
{
    require_t(t);
    if (std::isinf(t))
        return 0.0;
    EtaDecomposition const eta = eta_decomposition(theta, phi);
    double const b = 1 - eta.r * eta.r * eta.sin_eta * eta.sin_eta;
    return b / t_denominator(t, eta.r);
}

//---------------------------------------------------------------------------//
// Lorentz matrices
//---------------------------------------------------------------------------//

Lorentz4 minkowski_metric()
{
    return Eigen::Vector4d(-1, -1, -1, 1).asDiagonal();
}

Lorentz4 standard_boost(MomentumState const& m, Sign sign)
{
    Vec3 const u = slot_direction(m, sign);
    double const delta = m.rapidity();
    double const half_sinh = std::sinh(delta / 2);
    Lorentz4 l = Lorentz4::Identity();
    // cosh(d) - 1 = 2 sinh^2(d/2)
    l.topLeftCorner<3, 3>() += 2 * half_sinh * half_sinh * u * u.transpose();
    l.topRightCorner<3, 1>() = std::sinh(delta) * u;
    l.bottomLeftCorner<1, 3>() = std::sinh(delta) * u.transpose();
    l(3, 3) = std::cosh(delta);
    return l;
}

Lorentz4 boost_matrix(BoostParameters const& b)
{
    Lorentz4 l = Lorentz4::Identity();
    l(0, 0) = l(3, 3) = std::cosh(b.rapidity());
    l(0, 3) = l(3, 0) = std::sinh(b.rapidity());
    return l;
}

double metric_defect(Lorentz4 const& lambda)
{
    Lorentz4 const eta = minkowski_metric();
    double const scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
    return (lambda.transpose() * eta * lambda - eta).cwiseAbs().maxCoeff()
           / (scale * scale);
}

}  // namespace relbell
