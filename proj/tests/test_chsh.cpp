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

#include <boost/multiprecision/float128.hpp>
#include <doctest.h>

#include "relbell/chsh.hpp"
#include "test_support.hpp"

using namespace relbell;
using namespace relbell::test;
using doctest::Approx;

TEST_CASE("canonical settings")
{
    double const h = 1 / sqrt2;
    ChshSettings const s00 = canonical_settings(BellLabel::b00);
    CHECK(s00.a.vec().isApprox(Vec3(h, -h, 0)));
    CHECK(s00.a_prime.vec().isApprox(Vec3(-h, -h, 0)));
    CHECK(s00.b.vec() == Vec3::UnitY());
    CHECK(s00.b_prime.vec() == Vec3::UnitX());
    ChshSettings const s01 = canonical_settings(BellLabel::b01);
    CHECK(s01.a.vec().isApprox(Vec3(-h, h, 0)));
    CHECK(s01.a_prime.vec().isApprox(Vec3(h, h, 0)));

    MomentumState const m(1, 1.0, 0.5, 0.5);
    for (BellLabel l : all_bell_labels)
        CHECK(chsh_value(l, canonical_settings(l), BoostParameters{}, m)
              == Approx(2 * sqrt2).epsilon(1e-14));
}

TEST_CASE("worked point CHSH")
{
    // (2/sqrt(1.25)) (0.5 + 0.28)
    double const expected = 2 / std::sqrt(1.25) * 0.78;
    CHECK(expected == Approx(1.3953064179598689).epsilon(1e-15));
    auto const b = worked_boost();
    MomentumState const m = worked_momentum();
    CHECK(chsh_value(BellLabel::b00, canonical_settings(BellLabel::b00), b, m)
          == Approx(expected).epsilon(1e-13));
    CHECK(*chsh_closed_form(BellLabel::b00, b, angle_decomposition(b, m))
          == Approx(expected).epsilon(1e-13));
    CHECK(*chsh_closed_form(BellLabel::b00, b, in_plane_angles(b, m))
          == Approx(expected).epsilon(1e-13));
}

TEST_CASE("closed forms match assembled CHSH")
{
    UniformSource rng(53);
    for (int i = 0; i < 1000; ++i)
    {
        Point const p = random_point(rng);
        MomentumState const plane(1, p.momentum.rapidity(),
                                  p.momentum.theta(), 0.0);
        for (BellLabel l : {BellLabel::b00, BellLabel::b01})
        {
            double const general = chsh_value(l, canonical_settings(l),
                                              p.boost, p.momentum);
            CHECK(std::abs(*chsh_closed_form(
                               l, p.boost, angle_decomposition(p.boost, p.momentum))
                           - general)
                  < 1e-10);
            double const in_plane
                = chsh_value(l, canonical_settings(l), p.boost, plane);
            CHECK(std::abs(
                      *chsh_closed_form(l, p.boost, in_plane_angles(p.boost, plane))
                      - in_plane)
                  < 1e-10);
            CHECK(std::abs(general) <= 2 * sqrt2 + 1e-9);
        }
        CHECK_FALSE(chsh_closed_form(BellLabel::b10, p.boost,
                                     angle_decomposition(p.boost, p.momentum)));
    }
}

TEST_CASE("rest frame closed form is Tsirelson")
{
    MomentumState const m(1, 3.0, 1.0, 2.0);
    for (BellLabel l : {BellLabel::b00, BellLabel::b01})
        CHECK(*chsh_closed_form(l, BoostParameters{},
                                angle_decomposition(BoostParameters{}, m))
              == Approx(2 * sqrt2).epsilon(1e-15));
}

TEST_CASE("ultra-relativistic closed form")
{
    UniformSource rng(59);
    for (int i = 0; i < 200; ++i)
    {
        MomentumState const m(1, 10 * rng.next(), pi * rng.next(),
                              2 * pi * rng.next());
        AngleDecomposition const u = angle_decomposition_ultra(m);
        double const v = *chsh_closed_form_ultra(BellLabel::b00, u);
        CHECK(v <= 2 + 1e-12);
        auto const far = BoostParameters::from_rapidity(30);
        CHECK(std::abs(v
                       - *chsh_closed_form(BellLabel::b00, far,
                                           angle_decomposition(far, m)))
              < 1e-9);
    }
}

TEST_CASE("universal curve")
{
    CHECK(universal_curve(0) == 2 * sqrt2);
    CHECK(universal_curve(1) == 2.0);
    CHECK(universal_curve(0.8) == Approx(2.743977362280141).epsilon(1e-14));
    CHECK(universal_curve(0.999) == Approx(2.087335105769559).epsilon(1e-14));
    CHECK_THROWS_AS(universal_curve(1.1), std::domain_error);

    // Direct form of the same curve
    for (double beta : {0.1, 0.5, 0.9, 0.99})
        CHECK(universal_curve(beta)
              == Approx(2 / std::sqrt(2 - beta * beta)
                        * (1 + std::sqrt(1 - beta * beta)))
                     .epsilon(1e-14));

    // Strict decrease needs more than double near beta = 0.
    using boost::multiprecision::float128;
    int const n = 10000;
    float128 prev = universal_curve_t(float128(0));
    bool strict = true;
    for (int i = 1; i < n; ++i)
    {
        float128 const cur = universal_curve_t(float128(i) / (n - 1));
        strict = strict && cur < prev;
        prev = cur;
    }
    CHECK(strict);
}

TEST_CASE("maximizer")
{
    MomentumState const m(1, 1.2, 0.7, 0.4);
    MaximizeOptions opts;
    opts.seed = 5;
    MaximizeResult const rest
        = maximize_chsh(BellLabel::b00, BoostParameters{}, m, opts);
    CHECK(std::abs(rest.value - 2 * sqrt2) < 1e-6);

    auto const b = worked_boost();
    MomentumState const w = worked_momentum();
    double const canonical
        = chsh_value(BellLabel::b00, canonical_settings(BellLabel::b00), b, w);
    for (MaximizeMethod method : {MaximizeMethod::simplex, MaximizeMethod::grid})
    {
        opts.method = method;
        MaximizeResult const r = maximize_chsh(BellLabel::b00, b, w, opts);
        CHECK(r.value >= canonical - 1e-9);
        CHECK(r.value <= 2 * sqrt2 + 1e-9);
        CHECK(r.value
              == Approx(chsh_value(BellLabel::b00, r.settings, b, w)).epsilon(1e-15));
    }

    opts.method = MaximizeMethod::simplex;
    MaximizeResult const again1 = maximize_chsh(BellLabel::b01, b, w, opts);
    MaximizeResult const again2 = maximize_chsh(BellLabel::b01, b, w, opts);
    CHECK(again1.value == again2.value);
    CHECK(again1.evaluations == again2.evaluations);
    CHECK(again1.settings.a.vec() == again2.settings.a.vec());
}

TEST_CASE("maximizer dominates canonical settings")
{
    UniformSource rng(61);
    MaximizeOptions opts;
    opts.starts = 4;
    for (int i = 0; i < 8; ++i)
    {
        Point const p = random_point(rng);
        for (BellLabel l : all_bell_labels)
        {
            double const canonical
                = chsh_value(l, canonical_settings(l), p.boost, p.momentum);
            MaximizeResult const r = maximize_chsh(l, p.boost, p.momentum, opts);
            CHECK(r.value >= canonical - 1e-9);
        }
    }
}
