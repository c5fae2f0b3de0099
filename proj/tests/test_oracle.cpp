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

#include <cmath>

#include <doctest.h>

#include "relbell/oracle.hpp"
#include "test_support.hpp"

using namespace relbell;
using namespace relbell::test;
using doctest::Approx;

TEST_CASE("little group element at rest and collinear")
{
    MomentumState const m(1, 2.0, 0.6, 1.3);
    LittleGroupElement const rest
        = little_group_element(BoostParameters{}, m, Sign::plus);
    CHECK((rest.w - Lorentz4::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(rest.rotation.sin_half < 1e-15);

    MomentumState const collinear(1, 2.0, pi / 2, 0.0);
    for (Sign s : {Sign::plus, Sign::minus})
    {
        LittleGroupElement const c = little_group_element(
            BoostParameters::from_cosh(2.0), collinear, s);
        CHECK((c.w - Lorentz4::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("little group element at the worked point")
{
    LittleGroupElement const lg
        = little_group_element(worked_boost(), worked_momentum(), Sign::plus);
    CHECK(std::cos(lg.rotation.omega()) == Approx(0.8).epsilon(1e-14));
    CHECK(lg.rotation.axis.isApprox(-Vec3::UnitY(), 1e-14));
    CHECK(lg.metric_defect < 1e-20);
    CHECK(lg.fixed_point_defect < 1e-20);
}

TEST_CASE("direct spinor matrix")
{
    CHECK((wigner_matrix_direct(BoostParameters{}, worked_momentum(), Sign::plus)
           - Su2Matrix::Identity())
              .cwiseAbs()
              .maxCoeff()
          < 1e-15);
    Su2Matrix expected;
    expected << std::sqrt(0.9), -std::sqrt(0.1), std::sqrt(0.1), std::sqrt(0.9);
    CHECK((wigner_matrix_direct(worked_boost(), worked_momentum(), Sign::plus)
           - expected)
              .cwiseAbs()
              .maxCoeff()
          < 1e-14);
}

TEST_CASE("dense expectation")
{
    SpinObservable const z = spin_observable(MeasurementDirection(Vec3::UnitZ()),
                                             BoostParameters{});
    TwoParticleSpinState up_up;
    up_up.amplitudes << 1, 0, 0, 0;
    CHECK(dense_expectation(up_up, z, z) == Approx(1));
    CHECK(dense_expectation(bell_state(BellLabel::b11), z, z) == Approx(-1));

    auto const b = worked_boost();
    TwoParticleSpinState const s = boost_two_particle_direct(
        bell_state(BellLabel::b00), b, worked_momentum());
    SpinObservable const zb
        = spin_observable(MeasurementDirection(Vec3::UnitZ()), b);
    CHECK(dense_expectation(s, zb, zb) == Approx(0.28).epsilon(1e-13));
}

TEST_CASE("basis actions")
{
    UniformSource rng(67);
    for (int i = 0; i < 500; ++i)
    {
        auto const b = BoostParameters::from_beta(0.999 * rng.next());
        CHECK(basis_action_defect(random_direction(rng), random_direction(rng),
                                  b)
              < 1e-12);
    }
}

TEST_CASE("rotation image")
{
    CHECK(rotation_image(Su2Matrix::Identity()).isApprox(
        Eigen::Matrix3d::Identity()));
}

TEST_CASE("crosscheck suite")
{
    CrosscheckOptions forced;
    forced.forced_beta = 0.0;
    CrosscheckReport const zero = crosscheck_suite(1, 1, forced);
    for (Comparison const& c : zero.comparisons)
        CHECK_MESSAGE(c.max_deviation <= 1e-14, c.name);

    CrosscheckReport const full = crosscheck_suite(42, 1000);
    CHECK(full.passed());
    for (Comparison const& c : full.comparisons)
        CHECK_MESSAGE(c.passed, c.name);

    CrosscheckReport const again = crosscheck_suite(42, 1000);
    REQUIRE(again.comparisons.size() == full.comparisons.size());
    for (std::size_t i = 0; i < full.comparisons.size(); ++i)
    {
        CHECK(again.comparisons[i].max_deviation
              == full.comparisons[i].max_deviation);
        CHECK(again.comparisons[i].worst.beta == full.comparisons[i].worst.beta);
    }

    CHECK_THROWS(crosscheck_suite(1, 0));
    CHECK_THROWS(full.find("missing"));
}

TEST_CASE("bounds suites")
{
    for (Comparison const& c : appendix_bounds_suite(40, 20, 20))
        CHECK_MESSAGE(c.passed, c.name);
    for (Comparison const& c : universal_curve_suite(10000))
        CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("seeded uniform source")
{
    UniformSource a(9), b(9);
    for (int i = 0; i < 100; ++i)
    {
        double const u = a.next();
        CHECK(u == b.next());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        Vec3 const s = a.sphere();
        b.sphere();
        CHECK(std::abs(s.norm() - 1) < 1e-15);
    }
}
