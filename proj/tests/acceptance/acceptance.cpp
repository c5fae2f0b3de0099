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

// Acceptance checks: one PASS/FAIL line per criterion, tolerances fixed
// below. Exit status is nonzero if any criterion fails, except those
// listed as unattainable (their FAIL line is still printed).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "relbell/oracle.hpp"
#include "test_support.hpp"

using namespace relbell;
using namespace relbell::test;

namespace {

struct Outcome
{
    std::string id;
    std::string title;
    bool passed;
    std::string detail;
    bool unattainable{false};
};

std::vector<Outcome> outcomes;

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void report(std::string id, std::string title, bool passed, std::string detail,
            bool unattainable = false)
{
    std::printf("[%s] %s %s: %s\n", passed ? "PASS" : "FAIL", id.c_str(),
                title.c_str(), detail.c_str());
    outcomes.push_back({std::move(id), std::move(title), passed,
                        std::move(detail), unattainable});
}

//---------------------------------------------------------------------------//

void c1_rest_frame()
{
    constexpr double tol = 1e-12;
    MomentumState const m(1.0, 1.7, 0.9, 2.1);
    double const matrix = chsh_value(
        BellLabel::b00, canonical_settings(BellLabel::b00), BoostParameters{}, m);
    double const closed = *chsh_closed_form(
        BellLabel::b00, BoostParameters{},
        angle_decomposition(BoostParameters{}, m));
    double const dev = std::max(std::abs(matrix - 2 * sqrt2),
                                std::abs(closed - 2 * sqrt2));
    report("C1", "rest-frame CHSH", dev <= tol,
           "value=" + fmt(matrix) + " |dev|=" + fmt(dev) + " tol=1e-12");
}

void c2_ultra_endpoint()
{
    constexpr double slack = 1e-12;
    // Gap to the limit is O(1/gamma): each step in k should cut it by about
    // 1/sqrt(10). Pinned on the last step, and it must shrink at every step.
    constexpr double max_last_step_ratio = 0.35;
    bool ok = universal_curve(1.0) == 2.0;
    bool shrinking = true;
    double worst_excess = -1e300, worst_limit = -1e300, worst_ratio = 0;
    for (double delta : {0.3, 1.0, 2.5, 6.0})
        for (double theta : {0.0, 0.4, 1.2, 2.0, 2.9})
        {
            MomentumState const m(1.0, delta, theta, 0.0);
            double const ultra = *chsh_closed_form_ultra(
                BellLabel::b00, angle_decomposition_ultra(m));
            worst_limit = std::max(worst_limit, ultra);
            double previous_gap = 1e300;
            for (int k = 1; k <= 10; ++k)
            {
                auto const b = BoostParameters::from_beta(1 - std::pow(10.0, -k));
                InPlaneAngles const ip = in_plane_angles(b, m);
                double const value = *chsh_closed_form(BellLabel::b00, b, ip);
                double const s = b.inverse_gamma();
                double const gap = std::abs(value - ultra);
                shrinking = shrinking && gap < previous_gap;
                if (k == 10)
                    worst_ratio = std::max(worst_ratio, gap / previous_gap);
                previous_gap = gap;
                // |case A - 2 cos(O_p + O_-p)| <= 2s + s^2
                double const excess = std::abs(value - 2 * ip.cos_full_sum())
                                      - (2 * s + s * s);
                worst_excess = std::max(worst_excess, excess);
            }
        }
    ok = ok && worst_excess <= slack && worst_limit <= 2 + slack && shrinking
         && worst_ratio <= max_last_step_ratio;
    report("C2", "ultra-relativistic endpoint", ok,
           "universal_curve(1)=" + fmt(universal_curve(1.0))
               + " max_limit=" + fmt(worst_limit)
               + " max_envelope_excess=" + fmt(worst_excess)
               + " gap(k=10)/gap(k=9)=" + fmt(worst_ratio)
               + (shrinking ? " shrinking" : " NOT shrinking")
               + " tol=1e-12, ratio <= 0.35");
}

void c3_worked_point()
{
    constexpr double tol = 1e-9;
    auto const b = worked_boost();
    MomentumState const m = worked_momentum();
    double const omega_expected = std::acos(0.8);
    double const chsh_expected = 2 / std::sqrt(1.25) * (0.5 + 0.28);
    double dev = 0;
    auto track = [&dev](double a, double e) {
        dev = std::max(dev, std::abs(a - e));
    };

    // Rotation angle: closed form, direct spinor, little group
    track(wigner_rotation(b, m, Sign::plus).omega(), omega_expected);
    Su2Matrix const d = wigner_matrix_direct(b, m, Sign::plus);
    track(2 * std::acos(d.trace().real() / 2), omega_expected);
    track(little_group_element(b, m, Sign::plus).rotation.omega(),
          omega_expected);

    // Bell coefficients of boosted Psi00
    Eigen::Vector4cd const coeff(0.8, 0, 0, -0.6);
    TwoParticleSpinState const by_matrix
        = boost_two_particle(bell_state(BellLabel::b00), b, m);
    TwoParticleSpinState const by_direct
        = boost_two_particle_direct(bell_state(BellLabel::b00), b, m);
    dev = std::max(dev, (boost_bell_closed_form(BellLabel::b00,
                                                angle_decomposition(b, m))
                             .coefficients
                         - coeff)
                            .cwiseAbs()
                            .maxCoeff());
    dev = std::max(
        dev, (bell_decompose(by_matrix).coefficients - coeff).cwiseAbs().maxCoeff());
    dev = std::max(
        dev, (bell_decompose(by_direct).coefficients - coeff).cwiseAbs().maxCoeff());

    // <zz>
    MeasurementDirection const z(Vec3::UnitZ());
    SpinObservable const zo = spin_observable(z, b);
    track(*expectation_closed_form(BellLabel::b00, angle_decomposition(b, m), z,
                                   z, b),
          0.28);
    track(*expectation_closed_form(BellLabel::b00, in_plane_angles(b, m), z, z,
                                   b),
          0.28);
    track(joint_expectation(by_matrix, z, z, b), 0.28);
    track(dense_expectation(by_direct, zo, zo), 0.28);

    // CHSH with canonical settings
    ChshSettings const cs = canonical_settings(BellLabel::b00);
    auto dense = [&](MeasurementDirection const& x, MeasurementDirection const& y) {
        return dense_expectation(by_direct, spin_observable(x, b),
                                 spin_observable(y, b));
    };
    double const chsh_dense = dense(cs.a, cs.b) + dense(cs.a, cs.b_prime)
                              + dense(cs.a_prime, cs.b)
                              - dense(cs.a_prime, cs.b_prime);
    track(*chsh_closed_form(BellLabel::b00, b, angle_decomposition(b, m)),
          chsh_expected);
    track(*chsh_closed_form(BellLabel::b00, b, in_plane_angles(b, m)),
          chsh_expected);
    track(chsh_value(BellLabel::b00, cs, b, m), chsh_expected);
    track(chsh_dense, chsh_expected);

    report("C3", "worked point, three paths", dev <= tol,
           "omega=" + fmt(omega_expected) + " coeff=(0.8,0,0,-0.6) <zz>=0.28 chsh="
               + fmt(chsh_expected) + " max|dev|=" + fmt(dev) + " tol=1e-9");
}

CrosscheckReport c4_oracle()
{
    constexpr double tol = 1e-9;
    constexpr double time_limit = 10.0;
    auto const start = std::chrono::steady_clock::now();
    CrosscheckOptions opts;
    opts.tolerance = tol;
    CrosscheckReport const r = crosscheck_suite(42, 1000, opts);
    double const seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    double worst = 0;
    std::string worst_name;
    for (auto const& c : r.comparisons)
        if (c.tolerance == tol && c.max_deviation >= worst)
            worst = c.max_deviation, worst_name = c.name;
    report("C4", "oracle suite seed=42 n=1000",
           r.passed() && seconds < time_limit,
           std::to_string(r.comparisons.size()) + " comparisons, worst path "
               + worst_name + "=" + fmt(worst) + " tol=1e-9 runtime="
               + fmt(seconds) + "s limit=10s");
    return r;
}

void c5_appendix_bounds()
{
    bool ok = true;
    std::string detail;
    for (auto const& c : appendix_bounds_suite(100, 50, 50))
    {
        ok = ok && c.passed;
        detail += c.name + "=" + fmt(c.max_deviation) + " (tol "
                  + fmt(c.tolerance) + ") ";
    }
    report("C5", "appendix bounds and monotonicity, 100x50x50 grid", ok, detail);
}

void c6_normalization(CrosscheckReport const& r)
{
    Comparison const& angles = r.find("angle_normalization");
    Comparison const& states = r.find("state_normalization");
    bool const ok = angles.max_deviation <= 1e-10 && states.max_deviation <= 1e-12;
    report("C6", "normalization invariants", ok,
           "coefficient tuples |dev|=" + fmt(angles.max_deviation)
               + " tol=1e-10, boosted states |dev|=" + fmt(states.max_deviation)
               + " tol=1e-12");
}

void c7_case_reduction()
{
    constexpr double tol = 1e-12;
    UniformSource rng(7007);
    double dev = 0;
    for (int i = 0; i < 200; ++i)
    {
        Point const p = random_point(rng, true);
        MeasurementDirection const a = random_direction(rng);
        MeasurementDirection const b = random_direction(rng);
        for (Sign s : {Sign::plus, Sign::minus})
        {
            WignerRotation const wa = wigner_rotation_in_plane(p.boost, p.momentum, s);
            WignerRotation const wb = wigner_rotation(p.boost, p.momentum, s);
            dev = std::max({dev, std::abs(wa.cos_half - wb.cos_half),
                            (wa.half_vector() - wb.half_vector())
                                .cwiseAbs()
                                .maxCoeff()});
        }
        InPlaneAngles const ip = in_plane_angles(p.boost, p.momentum);
        AngleDecomposition const ad = angle_decomposition(p.boost, p.momentum);
        for (BellLabel l : all_bell_labels)
            dev = std::max(dev, (boost_bell_in_plane(l, ip).coefficients
                                 - boost_bell_closed_form(l, ad).coefficients)
                                    .cwiseAbs()
                                    .maxCoeff());
        for (BellLabel l : {BellLabel::b00, BellLabel::b01})
            dev = std::max(dev,
                           std::abs(*expectation_closed_form(l, ip, a, b, p.boost)
                                    - *expectation_closed_form(l, ad, a, b,
                                                               p.boost)));
    }
    report("C7", "case reduction at phi=0, 200 tuples", dev <= tol,
           "max|dev|=" + fmt(dev) + " tol=1e-12");
}

void c8_monotonicity()
{
    auto const suite = universal_curve_suite(10000);
    bool const ok = suite[0].passed && suite[1].passed;
    report("C8", "universal curve strictly decreasing, 1e4 grid", ok,
           "max forward difference quad=" + fmt(suite[0].max_deviation)
               + " (< 0 required), double=" + fmt(suite[1].max_deviation)
               + " (<= 0 required)");
}

double label_universality_deviation(bool in_plane, int samples)
{
    UniformSource rng(in_plane ? 9001 : 9002);
    double dev = 0;
    for (int i = 0; i < samples; ++i)
    {
        Point const p = random_point(rng, in_plane);
        auto value = [&](BellLabel l) {
            return chsh_value(l, canonical_settings(l), p.boost, p.momentum);
        };
        dev = std::max({dev, std::abs(value(BellLabel::b10) - value(BellLabel::b01)),
                        std::abs(value(BellLabel::b11) - value(BellLabel::b00))});
    }
    return dev;
}

void c9_label_universality()
{
    constexpr double tol = 1e-10;
    double const plane = label_universality_deviation(true, 1000);
    report("C9a", "label universality, momentum in the boost plane", plane <= tol,
           "max|CHSH10-CHSH01|,|CHSH11-CHSH00|=" + fmt(plane) + " tol=1e-10");
    double const general = label_universality_deviation(false, 1000);
    report("C9b", "label universality, general momentum direction",
           general <= tol,
           "max deviation=" + fmt(general)
               + " tol=1e-10 (unattainable for phi != 0, see README)",
           true);
}

void c10_maximizer()
{
    constexpr double rest_tol = 1e-6;
    constexpr double dominance_slack = 1e-9;
    MomentumState const m(1.0, 2.0, 0.8, 1.9);
    MaximizeOptions opts;
    opts.seed = 42;
    double const rest
        = maximize_chsh(BellLabel::b00, BoostParameters{}, m, opts).value;
    bool ok = std::abs(rest - 2 * sqrt2) <= rest_tol;

    UniformSource rng(10010);
    double worst_margin = 1e300;
    int points = 0;
    for (int i = 0; i < 10; ++i)
    {
        Point const p = random_point(rng);
        for (BellLabel l : all_bell_labels)
            for (MaximizeMethod method :
                 {MaximizeMethod::simplex, MaximizeMethod::grid})
            {
                opts.method = method;
                double const canonical
                    = chsh_value(l, canonical_settings(l), p.boost, p.momentum);
                double const best
                    = maximize_chsh(l, p.boost, p.momentum, opts).value;
                worst_margin = std::min(worst_margin, best - canonical);
                ++points;
            }
    }
    ok = ok && worst_margin >= -dominance_slack;
    report("C10", "maximizer sanity", ok,
           "rest value=" + fmt(rest) + " |dev|=" + fmt(std::abs(rest - 2 * sqrt2))
               + " tol=1e-6; min(max - canonical) over " + std::to_string(points)
               + " runs=" + fmt(worst_margin) + " >= -1e-9");
}

}  // namespace

int main()
{
    c1_rest_frame();
    c2_ultra_endpoint();
    c3_worked_point();
    CrosscheckReport const r = c4_oracle();
    c5_appendix_bounds();
    c6_normalization(r);
    c7_case_reduction();
    c8_monotonicity();
    c9_label_universality();
    c10_maximizer();

    int passed = 0, failed = 0, unattainable = 0;
    for (auto const& o : outcomes)
    {
        if (o.passed)
            ++passed;
        else if (o.unattainable)
            ++unattainable;
        else
            ++failed;
    }
    std::printf("summary: %d passed, %d failed, %d failed as documented "
                "unattainable\n",
                passed, failed, unattainable);
    return failed == 0 ? 0 : 1;
}
