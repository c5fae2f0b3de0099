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

#include "relbell/spin_states.hpp"

#include <cmath>
#include <stdexcept>

namespace relbell {

namespace {

constexpr Complex i_unit{0.0, 1.0};

}  // namespace

Su2Matrix pauli(int index)
{
    Su2Matrix s;
    switch (index)
    {
        case 0:
            s << 0, 1, 1, 0;
            break;
        case 1:
            s << 0, -i_unit, i_unit, 0;
            break;
        case 2:
            s << 1, 0, 0, -1;
            break;
        default:
            throw std::out_of_range("pauli index must be 0, 1 or 2");
    }
    return s;
}

Su2Matrix wigner_matrix(WignerRotation const& w)
{
    Vec3 const h = w.half_vector();
    Su2Matrix d;
    d << Complex{w.cos_half, h.z()}, Complex{h.y(), h.x()},
        Complex{-h.y(), h.x()}, Complex{w.cos_half, -h.z()};
    return d;
}

Operator4 kron(Su2Matrix const& first, Su2Matrix const& second)
{
    Operator4 k;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            k.block<2, 2>(2 * i, 2 * j) = first(i, j) * second;
    return k;
}

BellLabel parse_bell_label(std::string_view text)
{
    if (text == "00")
        return BellLabel::b00;
    if (text == "01")
        return BellLabel::b01;
    if (text == "10")
        return BellLabel::b10;
    if (text == "11")
        return BellLabel::b11;
    throw std::invalid_argument("Bell label must be 00, 01, 10 or 11, got '"
                                + std::string(text) + "'");
}

std::string to_string(BellLabel label)
{
    static char const* const names[] = {"00", "01", "10", "11"};
    return names[index(label)];
}

TwoParticleSpinState bell_state(BellLabel label)
{
    double const h = 1 / std::sqrt(2.0);
    TwoParticleSpinState s;
    switch (label)
    {
        case BellLabel::b00:
            s.amplitudes << h, 0, 0, h;
            break;
        case BellLabel::b01:
            s.amplitudes << h, 0, 0, -h;
            break;
        case BellLabel::b10:
            s.amplitudes << 0, h, h, 0;
            break;
        case BellLabel::b11:
            s.amplitudes << 0, h, -h, 0;
            break;
        default:
            throw std::invalid_argument("invalid Bell label");
    }
    return s;
}

double energy_prefactor(BoostParameters const& b, MomentumState const& m)
{
    double const p0 = m.energy();
    return std::sqrt(boosted_energy(m, b, Sign::plus) / p0)
           * std::sqrt(boosted_energy(m, b, Sign::minus) / p0);
}

TwoParticleSpinState boost_two_particle(TwoParticleSpinState const& s,
                                        BoostParameters const& b,
                                        MomentumState const& m)
{
    Operator4 const u = kron(wigner_matrix(wigner_rotation(b, m, Sign::plus)),
                             wigner_matrix(wigner_rotation(b, m, Sign::minus)));
    TwoParticleSpinState out;
    out.amplitudes = u * s.amplitudes;
    out.amplitudes /= out.amplitudes.norm();
    out.prefactor = s.prefactor * energy_prefactor(b, m);
    return out;
}

namespace {

Eigen::Matrix4cd bell_basis()
{
    Eigen::Matrix4cd basis;
    for (BellLabel label : all_bell_labels)
        basis.col(index(label)) = bell_state(label).amplitudes;
    return basis;
}

}  // namespace

BellDecomposition bell_decompose(TwoParticleSpinState const& s)
{
    return {bell_basis().adjoint() * s.amplitudes};
}

TwoParticleSpinState bell_recompose(BellDecomposition const& d)
{
    TwoParticleSpinState s;
    s.amplitudes = bell_basis() * d.coefficients;
    return s;
}

BellDecomposition boost_bell_closed_form(BellLabel label,
                                         AngleDecomposition const& a)
{
    double const ce = a.cos_eta, se = a.sin_eta;
    BellDecomposition d;
    auto& c = d.coefficients;
    switch (label)
    {
        case BellLabel::b00:
            c << a.x, i_unit * a.z, -i_unit * a.w, -a.y;
            break;
        case BellLabel::b01:
            c << i_unit * a.yp, a.zp, a.xp, 0;
            break;
        case BellLabel::b10:
            c << -i_unit * (a.cos_bar - a.cos_delta) * ce * se,
                -a.sin_delta * ce,
                a.cos_bar * se * se + a.cos_delta * ce * ce,
                i_unit * a.sin_bar * se;
            break;
        case BellLabel::b11:
            c << a.sin_bar * ce, 0, i_unit * a.sin_bar * se, a.cos_bar;
            break;
    }
    return d;
}

BellDecomposition boost_bell_in_plane(BellLabel label, InPlaneAngles const& a)
{
    BellDecomposition d;
    auto& c = d.coefficients;
    switch (label)
    {
        case BellLabel::b00:
            c << a.cos_sum, 0, 0, -a.sin_sum;
            break;
        case BellLabel::b01:
            c << 0, a.cos_diff, a.sin_diff, 0;
            break;
        case BellLabel::b10:
            c << 0, -a.sin_diff, a.cos_diff, 0;
            break;
        case BellLabel::b11:
            c << a.sin_sum, 0, 0, a.cos_sum;
            break;
    }
    return d;
}

}  // namespace relbell
