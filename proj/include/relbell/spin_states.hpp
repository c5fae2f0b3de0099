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

#include <string>
#include <string_view>

#include "relbell/kinematics.hpp"

namespace relbell {

/// 2x2 complex matrix of the spin-1/2 representation.
using Su2Matrix = Eigen::Matrix2cd;
/// Two-qubit operator in slot-1-major order.
using Operator4 = Eigen::Matrix4cd;

/// cos(omega/2) I + i sin(omega/2) sigma.axis
Su2Matrix wigner_matrix(WignerRotation const& w);

/// Pauli matrices sigma_x, sigma_y, sigma_z.
Su2Matrix pauli(int index);

/// Kronecker product, first factor acting on slot 1.
Operator4 kron(Su2Matrix const& first, Su2Matrix const& second);

enum class BellLabel { b00, b01, b10, b11 };

/// Accepts "00", "01", "10", "11"; throws std::invalid_argument otherwise.
BellLabel parse_bell_label(std::string_view text);
std::string to_string(BellLabel label);
constexpr int index(BellLabel label) { return static_cast<int>(label); }

inline constexpr BellLabel all_bell_labels[]
    = {BellLabel::b00, BellLabel::b01, BellLabel::b10, BellLabel::b11};

/*!
 * Two-particle spin amplitudes ordered (up up, up down, down up, down down);
 * slot 1 carries +p, slot 2 carries -p.
 *
 * The energy prefactor of the boosted creation operators is kept separately
 * so that the amplitudes stay unit-normalized.
 */
struct TwoParticleSpinState
{
    Eigen::Vector4cd amplitudes{Eigen::Vector4cd::Zero()};
    double prefactor{1};

    double norm() const { return amplitudes.norm(); }
};

/// Coefficients over (Psi00, Psi01, Psi10, Psi11).
struct BellDecomposition
{
    Eigen::Vector4cd coefficients{Eigen::Vector4cd::Zero()};

    Complex operator[](BellLabel label) const
    {
        return coefficients[index(label)];
    }
};

/// Psi00 = (uu + dd)/sqrt2, Psi01 = (uu - dd)/sqrt2,
/// Psi10 = (ud + du)/sqrt2, Psi11 = (ud - du)/sqrt2.
TwoParticleSpinState bell_state(BellLabel label);

/// sqrt((Lambda p)^0/p^0) sqrt((Lambda Pp)^0/p^0)
double energy_prefactor(BoostParameters const& b, MomentumState const& m);

/// Applies D(W(Lambda, p)) to slot 1 and D(W(Lambda, -p)) to slot 2.
TwoParticleSpinState boost_two_particle(TwoParticleSpinState const& s,
                                        BoostParameters const& b,
                                        MomentumState const& m);

BellDecomposition bell_decompose(TwoParticleSpinState const& s);
TwoParticleSpinState bell_recompose(BellDecomposition const& d);

/// Closed-form Bell coefficients of a boosted Bell state for general
/// momentum direction.
BellDecomposition boost_bell_closed_form(BellLabel label,
                                         AngleDecomposition const& a);

/// Closed-form Bell coefficients for momentum in the x-z plane. Psi00 and
/// Psi11 mix through the signed half-sum, Psi01 and Psi10 through the
/// signed half-difference.
BellDecomposition boost_bell_in_plane(BellLabel label, InPlaneAngles const& a);

}  // namespace relbell
