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

#include "relbell/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace relbell {

MeasurementDirection::MeasurementDirection(Vec3 const& v)
{
    double const n = v.norm();
    if (!std::isfinite(n) || std::abs(n - 1) > tolerance)
        throw std::invalid_argument(
            "measurement direction must be a unit vector");
    v_ = v / n;
}

MeasurementDirection MeasurementDirection::normalized(Vec3 const& v)
{
    double const n = v.norm();
    if (!(n > 0) || !std::isfinite(n))
        throw std::invalid_argument(
            "measurement direction must be finite and nonzero");
    return MeasurementDirection(v / n);
}

Vec3 relativistic_spin_vector(Vec3 const& s, BoostParameters const& b)
{
    double const g = b.inverse_gamma();
    return {s.x(), g * s.y(), g * s.z()};
}

Vec3 relativistic_direction(MeasurementDirection const& a,
                            BoostParameters const& b)
{
    return relativistic_spin_vector(a.vec(), b).normalized();
}

SpinObservable spin_observable(MeasurementDirection const& a,
                               BoostParameters const& b)
{
    SpinObservable o;
    o.direction = relativistic_direction(a, b);
    o.matrix = o.direction.x() * pauli(0) + o.direction.y() * pauli(1)
               + o.direction.z() * pauli(2);
    return o;
}

double joint_expectation(TwoParticleSpinState const& state,
                         MeasurementDirection const& a,
                         MeasurementDirection const& b,
                         BoostParameters const& boost)
{
    // psi_{ij} as a 2x2 matrix M: <psi|A (x) B|psi> = tr(M^dag A M B^T)
    Eigen::Matrix2cd m;
    m << state.amplitudes[0], state.amplitudes[1], state.amplitudes[2],
        state.amplitudes[3];
    Su2Matrix const op_a = spin_observable(a, boost).matrix;
    Su2Matrix const op_b = spin_observable(b, boost).matrix;
    return (m.adjoint() * op_a * m * op_b.transpose()).trace().real();
}

CoefficientTable coefficient_table(MeasurementDirection const& a,
                                   MeasurementDirection const& b,
                                   BoostParameters const& boost)
{
    double const g = boost.inverse_gamma();
    double const g2 = g * g;
    double const ax = a.x(), ay = a.y(), az = a.z();
    double const bx = b.x(), by = b.y(), bz = b.z();

    CoefficientTable t;
    t.a.sum = ax * bx - g2 * ay * by + g2 * az * bz;
    t.c.sum = -ax * bx - g2 * ay * by - g2 * az * bz;
    t.e.sum = -ax * bx + g2 * ay * by + g2 * az * bz;
    t.g.sum = ax * bx + g2 * ay * by - g2 * az * bz;
    t.b.sum = t.d.sum = g * (az * bx - bz * ax);
    t.f.sum = t.h.sum = g * (az * bx + bz * ax);

    t.a.diff = t.e.diff = g * (ax * by + bx * ay);
    t.c.diff = t.g.diff = g * (ax * by - bx * ay);
    t.b.diff = t.h.diff = g2 * (az * by + bz * ay);
    t.d.diff = t.f.diff = g2 * (az * by - bz * ay);
    return t;
}

double observable_normalization(MeasurementDirection const& a,
                                MeasurementDirection const& b,
                                BoostParameters const& boost)
{
    // 1 + beta^2 (x^2 - 1) = x^2 + g^2 (1 - x^2)
    double const g2 = boost.inverse_gamma() * boost.inverse_gamma();
    auto factor = [g2](double x) { return x * x + g2 * (1 - x * x); };
    return std::sqrt(factor(a.x()) * factor(b.x()));
}

std::optional<double> expectation_closed_form(BellLabel label,
                                              AngleDecomposition const& s,
                                              MeasurementDirection const& a,
                                              MeasurementDirection const& b,
                                              BoostParameters const& boost)
{
    CoefficientTable const k = coefficient_table(a, b, boost);
    double const n = observable_normalization(a, b, boost);
    switch (label)
    {
        case BellLabel::b00:
            return (k.a.sum * s.x * s.x + k.c.sum * s.y * s.y
                    + k.e.sum * s.z * s.z + k.g.sum * s.w * s.w
                    - 2
                          * (k.b.sum * s.x * s.y + k.a.diff * s.x * s.z
                             + k.b.diff * s.x * s.w - k.d.diff * s.y * s.z
                             + k.c.diff * s.y * s.w + k.f.sum * s.z * s.w))
                   / n;
        case BellLabel::b01:
            return (k.g.sum * s.xp * s.xp + k.a.sum * s.yp * s.yp
                    + k.e.sum * s.zp * s.zp
                    + 2
                          * (k.f.sum * s.xp * s.zp + k.a.diff * s.yp * s.zp
                             - k.b.diff * s.xp * s.yp))
                   / n;
        default:
            return std::nullopt;
    }
}

std::optional<double> expectation_closed_form(BellLabel label,
                                              InPlaneAngles const& s,
                                              MeasurementDirection const& a,
                                              MeasurementDirection const& b,
                                              BoostParameters const& boost)
{
    double const g = boost.inverse_gamma();
    double const g2 = g * g;
    double const ax = a.x(), ay = a.y(), az = a.z();
    double const bx = b.x(), by = b.y(), bz = b.z();
    double const n = observable_normalization(a, b, boost);
    switch (label)
    {
        case BellLabel::b00:
            return ((ax * bx + g2 * az * bz) * s.cos_full_sum() - g2 * ay * by
                    - g * (az * bx - bz * ax) * s.sin_full_sum())
                   / n;
        case BellLabel::b01:
            return ((-ax * bx + g2 * az * bz) * s.cos_full_diff()
                    + g2 * ay * by
                    + g * (az * bx + bz * ax) * s.sin_full_diff())
                   / n;
        default:
            return std::nullopt;
    }
}

double expectation_ultra_limit(BellLabel label,
                               AngleDecomposition const& ultra_angles,
                               MeasurementDirection const& a,
                               MeasurementDirection const& b)
{
    double const signs = classical_limit_correlation(a, b);
    if (signs == 0)
        return 0;
    // Both observables tend to sign(x) sigma_x.
    Eigen::Vector4cd const psi
        = bell_recompose(boost_bell_closed_form(label, ultra_angles))
              .amplitudes;
    Operator4 const xx = kron(pauli(0), pauli(0));
    return signs * psi.dot(xx * psi).real();
}

double classical_limit_correlation(MeasurementDirection const& a,
                                   MeasurementDirection const& b)
{
    auto sign = [](double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); };
    return sign(a.x()) * sign(b.x());
}

}  // namespace relbell
