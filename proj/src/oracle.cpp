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

#include "relbell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/float128.hpp>

namespace relbell {

//---------------------------------------------------------------------------//
// Little-group element
//---------------------------------------------------------------------------//

namespace {

// Entries of L(p) reach cosh(10)^2 ~ 1e8 and cancel to O(1) in W, so the
// composition runs in quad precision.
using Quad = boost::multiprecision::float128;
using QVec3 = Eigen::Matrix<Quad, 3, 1>;
using QMat4 = Eigen::Matrix<Quad, 4, 4>;

QMat4 quad_boost(QVec3 const& unit, Quad const& gamma_minus_one,
                 Quad const& gamma_beta)
{
    QMat4 l = QMat4::Identity();
    l.topLeftCorner<3, 3>() += gamma_minus_one * unit * unit.transpose();
    l.topRightCorner<3, 1>() = gamma_beta * unit;
    l.bottomLeftCorner<1, 3>() = gamma_beta * unit.transpose();
    l(3, 3) = 1 + gamma_minus_one;
    return l;
}

QMat4 quad_metric()
{
    QMat4 eta = QMat4::Identity();
    for (int i = 0; i < 3; ++i)
        eta(i, i) = -1;
    return eta;
}

double max_abs(QMat4 const& m)
{
    Quad best = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            best = std::max(best, Quad(abs(m(i, j))));
    return static_cast<double>(best);
}

}  // namespace

LittleGroupElement little_group_element(BoostParameters const& b,
                                        MomentumState const& m, Sign sign)
{
    Quad const mass = m.mass();
    Quad const delta = m.rapidity();
    Quad const alpha = b.rapidity();
    Vec3 const dir = sign_value(sign) * m.direction();
    QVec3 u = dir.cast<Quad>();
    u /= sqrt(u.squaredNorm());

    Quad const half_sinh_d = sinh(delta / 2);
    QMat4 const l_p = quad_boost(u, 2 * half_sinh_d * half_sinh_d, sinh(delta));

    QMat4 lambda = QMat4::Identity();
    lambda(0, 0) = lambda(3, 3) = cosh(alpha);
    lambda(0, 3) = lambda(3, 0) = sinh(alpha);

    Eigen::Matrix<Quad, 4, 1> k = Eigen::Matrix<Quad, 4, 1>::Zero();
    k(3) = mass;
    Eigen::Matrix<Quad, 4, 1> const q = lambda * (l_p * k);

    // L^-1(q) is the pure boost with reversed three-momentum.
    QMat4 l_q_inv = QMat4::Identity();
    QVec3 const qv = q.head<3>();
    Quad const qn = sqrt(qv.squaredNorm());
    if (qn > 0)
    {
        Quad const gamma_minus_one = qn * qn / (mass * (q(3) + mass));
        l_q_inv = quad_boost(qv / qn, gamma_minus_one, -qn / mass);
    }

    QMat4 const w = l_q_inv * lambda * l_p;

    LittleGroupElement out;
    QMat4 const eta = quad_metric();
    out.metric_defect = max_abs(w.transpose() * eta * w - eta);
    Eigen::Matrix<Quad, 4, 1> rest = Eigen::Matrix<Quad, 4, 1>::Zero();
    rest(3) = 1;
    QMat4 fixed = QMat4::Zero();
    fixed.col(0) = w * rest - rest;
    out.fixed_point_defect = max_abs(fixed);
    Eigen::Matrix<Quad, 3, 3> const r = w.topLeftCorner<3, 3>();
    QMat4 orth = QMat4::Zero();
    orth.topLeftCorner<3, 3>()
        = r.transpose() * r - Eigen::Matrix<Quad, 3, 3>::Identity();
    out.orthogonality_defect = max_abs(orth);
    out.w = w.cast<double>();

    constexpr double rotation_tolerance = 1e-10;
    if (out.metric_defect > rotation_tolerance
        || out.fixed_point_defect > rotation_tolerance
        || out.orthogonality_defect > rotation_tolerance)
    {
        throw std::logic_error("little-group element is not a rotation");
    }

    // Quaternion of the active rotation R = exp(omega [u]x): the scalar part
    // is sqrt(1 + tr R)/2, the vector part the antisymmetric part over 4c.
    Quad const c = sqrt(1 + r.trace()) / 2;
    QVec3 v{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)};
    v /= 4 * c;
    // The spinor convention rotates about -u (axis along e x p).
    Vec3 const half = -v.cast<double>();
    out.rotation.cos_half = static_cast<double>(c);
    out.rotation.sin_half = half.norm();
    if (out.rotation.sin_half > 0)
        out.rotation.axis = half / out.rotation.sin_half;
    return out;
}

Eigen::Matrix3d rotation_image(Su2Matrix const& d)
{
    Eigen::Matrix3d r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = 0.5
                      * (pauli(i) * d * pauli(j) * d.adjoint()).trace().real();
    return r;
}

//---------------------------------------------------------------------------//
// Direct spinor boost
//---------------------------------------------------------------------------//

Su2Matrix wigner_matrix_direct(BoostParameters const& b,
                               MomentumState const& m, Sign sign)
{
    FourMomentum const p = four_momentum(m, sign);
    double const mass = m.mass();
    double const ch = std::cosh(b.rapidity() / 2);
    double const sh = std::sinh(b.rapidity() / 2);
    Vec3 const e = b.axis();
    Vec3 const pxe = p.momentum.cross(e);

    Complex const scalar = (p.energy + mass) * ch + p.momentum.dot(e) * sh;
    Complex const minus_i_sh{0.0, -sh};
    Su2Matrix d = scalar * Su2Matrix::Identity();
    for (int k = 0; k < 3; ++k)
        d += minus_i_sh * pxe[k] * pauli(k);
    return d
           / std::sqrt((p.energy + mass)
                       * (boosted_energy(m, b, sign) + mass));
}

TwoParticleSpinState boost_two_particle_direct(TwoParticleSpinState const& s,
                                               BoostParameters const& b,
                                               MomentumState const& m)
{
    Su2Matrix const d1 = wigner_matrix_direct(b, m, Sign::plus);
    Su2Matrix const d2 = wigner_matrix_direct(b, m, Sign::minus);
    TwoParticleSpinState out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out.amplitudes[2 * i + j]
                        += d1(i, k) * d2(j, l) * s.amplitudes[2 * k + l];
    out.prefactor = s.prefactor * std::sqrt(boosted_energy(m, b, Sign::plus)
                                            / m.energy())
                    * std::sqrt(boosted_energy(m, b, Sign::minus) / m.energy());
    return out;
}

//---------------------------------------------------------------------------//
// Dense expectations
//---------------------------------------------------------------------------//

double dense_expectation(TwoParticleSpinState const& state,
                         SpinObservable const& op_a,
                         SpinObservable const& op_b)
{
    Operator4 full;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    full(2 * i + j, 2 * k + l)
                        = op_a.matrix(i, k) * op_b.matrix(j, l);
    return state.amplitudes.dot(full * state.amplitudes).real();
}

Operator4 basis_action_matrix(MeasurementDirection const& a,
                              MeasurementDirection const& b,
                              BoostParameters const& boost)
{
    double const g = boost.inverse_gamma();
    double const ax = a.x(), ay = a.y(), az = a.z();
    double const bx = b.x(), by = b.y(), bz = b.z();
    Complex const ap{ax, g * ay}, am{ax, -g * ay};
    Complex const bp{bx, g * by}, bm{bx, -g * by};
    double const zz = g * g * az * bz;

    Operator4 op;
    // columns: up up, up down, down up, down down
    op.col(0) << zz, g * az * bp, g * bz * ap, ap * bp;
    op.col(1) << g * az * bm, -zz, ap * bm, -g * bz * ap;
    op.col(2) << g * bz * am, am * bp, -zz, -g * az * bp;
    op.col(3) << am * bm, -g * bz * am, -g * az * bm, zz;
    return op / observable_normalization(a, b, boost);
}

double basis_action_defect(MeasurementDirection const& a,
                           MeasurementDirection const& b,
                           BoostParameters const& boost)
{
    Operator4 const direct = kron(spin_observable(a, boost).matrix,
                                  spin_observable(b, boost).matrix);
    return (basis_action_matrix(a, b, boost) - direct).cwiseAbs().maxCoeff();
}

//---------------------------------------------------------------------------//
// Crosscheck suite
//---------------------------------------------------------------------------//

bool CrosscheckReport::passed() const
{
    return std::all_of(comparisons.begin(), comparisons.end(),
                       [](Comparison const& c) { return c.passed; });
}

Comparison const& CrosscheckReport::find(std::string const& name) const
{
    for (Comparison const& c : comparisons)
        if (c.name == name)
            return c;
    throw std::out_of_range("no comparison named " + name);
}

namespace {

class Tracker
{
  public:
    Tracker(std::vector<Comparison>& out, std::string name, double tolerance)
        : out_(out), index_(out.size())
    {
        Comparison c;
        c.name = std::move(name);
        c.tolerance = tolerance;
        out_.push_back(c);
    }

    void record(double deviation, SampleTuple const& tuple)
    {
        if (std::isnan(deviation))
            deviation = std::numeric_limits<double>::infinity();
        Comparison& c = out_[index_];
        if (deviation > c.max_deviation)
        {
            c.max_deviation = deviation;
            c.worst = tuple;
        }
        c.passed = c.max_deviation <= c.tolerance;
    }

  private:
    std::vector<Comparison>& out_;
    std::size_t index_;
};

double max_abs_diff(Eigen::MatrixXcd const& a, Eigen::MatrixXcd const& b)
{
    return (a - b).cwiseAbs().maxCoeff();
}

double rotation_diff(WignerRotation const& a, WignerRotation const& b)
{
    return std::max(std::abs(a.cos_half - b.cos_half),
                    (a.half_vector() - b.half_vector()).cwiseAbs().maxCoeff());
}

double su2_defect(Su2Matrix const& d)
{
    double const unitary
        = (d.adjoint() * d - Su2Matrix::Identity()).cwiseAbs().maxCoeff();
    return std::max(unitary, std::abs(d.determinant() - 1.0));
}

// Positive part of a bound violation.
double violation(double lower, double value, double upper)
{
    return std::max({0.0, lower - value, value - upper});
}

constexpr BellLabel closed_labels[] = {BellLabel::b00, BellLabel::b01};

}  // namespace

CrosscheckReport crosscheck_suite(std::uint64_t seed, int n_samples,
                                  CrosscheckOptions const& options)
{
    if (n_samples < 1)
        throw std::invalid_argument("crosscheck needs at least one sample");

    CrosscheckReport report;
    report.seed = seed;
    report.n_samples = n_samples;
    auto& out = report.comparisons;
    out.reserve(16);
    double const tol = options.tolerance;

    Tracker little_group(out, "little_group_vs_closed_form", tol);
    Tracker so3(out, "little_group_vs_su2_image", tol);
    Tracker direct(out, "direct_vs_angle_su2", tol);
    Tracker bell(out, "bell_closed_vs_matrix", tol);
    Tracker bell_direct(out, "bell_closed_vs_direct", tol);
    Tracker expect(out, "expectation_closed_vs_dense", tol);
    Tracker expect_plane(out, "expectation_in_plane_vs_dense", tol);
    Tracker expect_matrix(out, "expectation_matrix_vs_dense", tol);
    Tracker chsh(out, "chsh_closed_vs_assembled", tol);
    Tracker w_metric(out, "little_group_metric", 1e-10);
    Tracker l_metric(out, "lorentz_metric_relative", 1e-12);
    Tracker su2(out, "su2_membership", 1e-12);
    Tracker basis(out, "basis_action", 1e-12);
    Tracker angle_norm(out, "angle_normalization", 1e-10);
    Tracker state_norm(out, "state_normalization", 1e-12);
    Tracker t_form(out, "t_form", 1e-10);
    Tracker bounds(out, "appendix_bounds", 1e-12);
    Tracker reduction(out, "case_reduction", 1e-12);

    UniformSource rng(seed);
    for (int n = 0; n < n_samples; ++n)
    {
        SampleTuple s;
        s.beta = 0.999 * rng.next();
        s.delta = 10 * rng.next();
        s.theta = std::acos(1 - 2 * rng.next());
        s.phi = 2 * std::numbers::pi * rng.next();
        s.a = rng.sphere();
        s.b = rng.sphere();
        if (options.forced_beta)
            s.beta = *options.forced_beta;

        auto const boost = BoostParameters::from_beta(s.beta);
        MomentumState const m(1.0, s.delta, s.theta, s.phi);
        MomentumState const m_plane(1.0, s.delta, s.theta, 0.0);
        MeasurementDirection const a(s.a), b(s.b);
        SpinObservable const op_a = spin_observable(a, boost);
        SpinObservable const op_b = spin_observable(b, boost);

        // Rotations: 4x4 little group, half-angle closed form, direct spinor.
        for (Sign sign : {Sign::plus, Sign::minus})
        {
            LittleGroupElement const lg = little_group_element(boost, m, sign);
            WignerRotation const closed = wigner_rotation(boost, m, sign);
            Su2Matrix const d_closed = wigner_matrix(closed);
            Su2Matrix const d_direct = wigner_matrix_direct(boost, m, sign);

            little_group.record(rotation_diff(lg.rotation, closed), s);
            so3.record((rotation_image(d_closed) - lg.w.topLeftCorner<3, 3>())
                           .cwiseAbs()
                           .maxCoeff(),
                       s);
            direct.record(max_abs_diff(d_direct, d_closed), s);
            w_metric.record(lg.metric_defect, s);
            l_metric.record(std::max(metric_defect(standard_boost(m, sign)),
                                     metric_defect(boost_matrix(boost))),
                            s);
            su2.record(std::max(su2_defect(d_closed), su2_defect(d_direct)), s);

            WignerRotation const in_plane
                = wigner_rotation_in_plane(boost, m_plane, sign);
            reduction.record(
                rotation_diff(in_plane, wigner_rotation(boost, m_plane, sign)),
                s);
        }

        AngleDecomposition const angles = angle_decomposition(boost, m);
        AngleDecomposition const angles_plane
            = angle_decomposition(boost, m_plane);
        InPlaneAngles const plane = in_plane_angles(boost, m_plane);

        angle_norm.record(
            std::max(std::abs(angles.x * angles.x + angles.y * angles.y
                              + angles.z * angles.z + angles.w * angles.w - 1),
                     std::abs(angles.xp * angles.xp + angles.yp * angles.yp
                              + angles.zp * angles.zp - 1)),
            s);
        AppendixQuantities const q
            = appendix_quantities(angles.t, s.theta, s.phi);
        t_form.record(std::max(std::abs(q.q_minus - angles.q_minus()),
                               std::abs(q.q_plus - angles.q_plus())),
                      s);
        bounds.record(std::max(violation(q.lower_minus, q.q_minus, 1.0),
                               violation(q.lower_plus, q.q_plus, 1.0)),
                      s);

        for (BellLabel label : all_bell_labels)
        {
            TwoParticleSpinState const start = bell_state(label);
            TwoParticleSpinState const by_matrix
                = boost_two_particle(start, boost, m);
            TwoParticleSpinState const by_direct
                = boost_two_particle_direct(start, boost, m);
            BellDecomposition const closed
                = boost_bell_closed_form(label, angles);

            bell.record(max_abs_diff(closed.coefficients,
                                     bell_decompose(by_matrix).coefficients),
                        s);
            bell_direct.record(
                max_abs_diff(closed.coefficients,
                             bell_decompose(by_direct).coefficients),
                s);
            state_norm.record(std::max(std::abs(by_matrix.norm() - 1),
                                       std::abs(by_direct.norm() - 1)),
                              s);

            double const dense = dense_expectation(by_direct, op_a, op_b);
            expect_matrix.record(
                std::abs(joint_expectation(by_matrix, a, b, boost) - dense), s);

            reduction.record(
                max_abs_diff(boost_bell_closed_form(label, angles_plane)
                                 .coefficients,
                             boost_bell_in_plane(label, plane).coefficients),
                s);
        }

        for (BellLabel label : closed_labels)
        {
            TwoParticleSpinState const start = bell_state(label);
            TwoParticleSpinState const by_direct
                = boost_two_particle_direct(start, boost, m);
            TwoParticleSpinState const by_direct_plane
                = boost_two_particle_direct(start, boost, m_plane);

            double const general
                = *expectation_closed_form(label, angles, a, b, boost);
            double const general_plane
                = *expectation_closed_form(label, angles_plane, a, b, boost);
            double const in_plane
                = *expectation_closed_form(label, plane, a, b, boost);
            expect.record(
                std::abs(general - dense_expectation(by_direct, op_a, op_b)),
                s);
            expect_plane.record(
                std::abs(in_plane
                         - dense_expectation(by_direct_plane, op_a, op_b)),
                s);
            reduction.record(std::abs(general_plane - in_plane), s);

            // CHSH assembled from dense expectations with canonical settings
            ChshSettings const cs = canonical_settings(label);
            auto assembled = [&](TwoParticleSpinState const& st) {
                auto e = [&](MeasurementDirection const& x,
                             MeasurementDirection const& y) {
                    return dense_expectation(st, spin_observable(x, boost),
                                             spin_observable(y, boost));
                };
                return e(cs.a, cs.b) + e(cs.a, cs.b_prime) + e(cs.a_prime, cs.b)
                       - e(cs.a_prime, cs.b_prime);
            };
            chsh.record(
                std::max(std::abs(*chsh_closed_form(label, boost, angles)
                                  - assembled(by_direct)),
                         std::abs(*chsh_closed_form(label, boost, plane)
                                  - assembled(by_direct_plane))),
                s);
        }

        basis.record(basis_action_defect(a, b, boost), s);
    }
    return report;
}

}  // namespace relbell

namespace relbell {

std::vector<Comparison> appendix_bounds_suite(int n_t, int n_theta, int n_phi)
{
    if (n_t < 2 || n_theta < 1 || n_phi < 1)
        throw std::invalid_argument("appendix grid is too small");
    std::vector<Comparison> out;
    Tracker q_bounds(out, "appendix_q_bounds", 1e-12);
    Tracker f_mono(out, "appendix_f_nonincreasing", 0.0);
    Tracker g_mono(out, "appendix_g_nonincreasing", 0.0);

    std::vector<double> ts(n_t);
    for (int i = 0; i < n_t; ++i)
        ts[i] = std::pow(1e6, static_cast<double>(i) / (n_t - 1));
    ts.front() = 1.0;

    for (int j = 0; j < n_theta; ++j)
    {
        double const theta
            = n_theta == 1 ? 0.0 : std::numbers::pi * j / (n_theta - 1);
        for (int k = 0; k < n_phi; ++k)
        {
            double const phi = 2 * std::numbers::pi * k / n_phi;
            SampleTuple s;
            s.theta = theta;
            s.phi = phi;
            double f_prev = 0, g_prev = 0;
            for (int i = 0; i < n_t; ++i)
            {
                s.t = ts[i];
                AppendixQuantities const q = appendix_quantities(ts[i], theta, phi);
                q_bounds.record(std::max(violation(q.lower_minus, q.q_minus, 1.0),
                                         violation(q.lower_plus, q.q_plus, 1.0)),
                                s);
                double const f = appendix_f(ts[i], theta, phi);
                double const g = appendix_g(ts[i], theta, phi);
                // f and g are unbounded at t = 1 only for collinear momentum
                if (i > 0 && std::isfinite(f_prev) && std::isfinite(g_prev))
                {
                    f_mono.record(f - f_prev, s);
                    g_mono.record(g - g_prev, s);
                }
                f_prev = f;
                g_prev = g;
            }
        }
    }
    return out;
}

std::vector<Comparison> universal_curve_suite(int points)
{
    if (points < 2)
        throw std::invalid_argument("need at least two grid points");
    std::vector<Comparison> out;
    Comparison quad;
    quad.name = "universal_curve_strictly_decreasing";
    Comparison dbl;
    dbl.name = "universal_curve_nonincreasing_double";
    quad.max_deviation = dbl.max_deviation
        = -std::numeric_limits<double>::infinity();

    Quad prev_q = universal_curve_t(Quad(0));
    double prev_d = universal_curve(0.0);
    for (int i = 1; i < points; ++i)
    {
        SampleTuple s;
        s.beta = static_cast<double>(i) / (points - 1);
        Quad const cur_q = universal_curve_t(Quad(i) / (points - 1));
        double const cur_d = universal_curve(s.beta);
        double const dq = static_cast<double>(cur_q - prev_q);
        if (dq > quad.max_deviation)
            quad.max_deviation = dq, quad.worst = s;
        if (cur_d - prev_d > dbl.max_deviation)
            dbl.max_deviation = cur_d - prev_d, dbl.worst = s;
        prev_q = cur_q;
        prev_d = cur_d;
    }
    quad.passed = quad.max_deviation < 0;
    dbl.passed = dbl.max_deviation <= 0;
    out.push_back(quad);
    out.push_back(dbl);
    return out;
}

}  // namespace relbell
