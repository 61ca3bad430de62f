// Copyright 2026 the expsubdiv authors
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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "expsubdiv/curves.hpp"

using namespace expsubdiv;

TEST_CASE("star polygon samples the caption formulas") {
    CurveSpec spec;
    spec.kind = CurveSpec::Kind::Star2D;
    spec.nu1 = 4;
    spec.npoints = 25;
    auto gen = generate(spec);

    double theta = 2.0 * std::numbers::pi / 24.0;
    for (int i : {0, 3, 11}) {
        double u = theta * i;
        double radius = 3.0 + std::sin(4.0 * u);
        CHECK(gen.polygon.points[static_cast<std::size_t>(i)][0] ==
              Catch::Approx(radius * std::cos(u)).margin(1e-15));
        CHECK(gen.polygon.points[static_cast<std::size_t>(i)][1] ==
              Catch::Approx(radius * std::sin(u)).margin(1e-15));
    }

    // the duplicate closing sample is dropped
    CHECK(gen.polygon.points.size() == 24);
    CHECK(gen.polygon.closed);
    CHECK(gen.polygon.dim == 2);
    CHECK(gen.params.n == 5); // nu + 1
    CHECK(gen.params.theta.kind == ThetaSpec::Kind::Trigonometric);
    CHECK(gen.params.theta.value == Catch::Approx(theta));
}

TEST_CASE("star 3d adds the height coordinate and doubles the order") {
    CurveSpec spec;
    spec.kind = CurveSpec::Kind::Star3D;
    spec.nu1 = 3;
    spec.npoints = 33;
    auto gen = generate(spec);
    CHECK(gen.params.n == 6); // 2 nu
    CHECK(gen.polygon.dim == 3);
    double theta = 2.0 * std::numbers::pi / 32.0;
    double u = theta * 5;
    double radius = 3.0 + std::sin(3.0 * u);
    CHECK(gen.polygon.points[5][2] == Catch::Approx(-radius * radius / 4.0).margin(1e-15));
}

TEST_CASE("planar lissajous preset") {
    CurveSpec spec;
    spec.kind = CurveSpec::Kind::Lissajous2D;
    spec.nu1 = 3;
    spec.nu2 = 4;
    spec.tau = 1.0;
    spec.npoints = 41;
    auto gen = generate(spec);
    CHECK(gen.params.n == 4); // max(nu1, nu2)
    CHECK(gen.polygon.points.size() == 40);
    double theta = 2.0 * std::numbers::pi / 40.0;
    double u = theta * 7;
    CHECK(gen.polygon.points[7][0] == Catch::Approx(std::cos(4.0 * u)).margin(1e-15));
    CHECK(gen.polygon.points[7][1] ==
          Catch::Approx(std::cos(3.0 * u - std::numbers::pi / 4.0)).margin(1e-15));
}

TEST_CASE("spatial lissajous runs over half a period and keeps all samples") {
    CurveSpec spec;
    spec.kind = CurveSpec::Kind::Lissajous3D;
    spec.nu1 = 4;
    spec.nu2 = 2;
    spec.nu3 = 5;
    spec.npoints = 30;
    auto gen = generate(spec);
    CHECK(gen.params.n == 5);
    CHECK(gen.params.theta.value == Catch::Approx(std::numbers::pi / 29.0));
    CHECK(gen.polygon.points.size() == 30); // endpoints differ, nothing dropped
    CHECK(gen.polygon.points[0][0] == 1.0);
    CHECK(gen.polygon.points[0][1] == 1.0);
    CHECK(gen.polygon.points[0][2] == 1.0);
}

TEST_CASE("spherical lissajous points sit on the unit sphere") {
    CurveSpec spec;
    spec.kind = CurveSpec::Kind::LissajousSphere;
    spec.nu1 = 4;
    spec.nu2 = 1;
    spec.rho = 0.5;
    spec.npoints = 37;
    auto gen = generate(spec);
    CHECK(gen.params.n == 5); // nu1 + nu2
    for (const auto& pt : gen.polygon.points) {
        double norm = std::sqrt(pt[0] * pt[0] + pt[1] * pt[1] + pt[2] * pt[2]);
        CHECK(std::abs(norm - 1.0) <= 1e-14);
    }
}

TEST_CASE("curve specs are validated") {
    CurveSpec spec;
    spec.npoints = 3;
    CHECK_THROWS_AS(generate(spec), std::domain_error);
    spec.npoints = 20;
    spec.nu1 = 0;
    CHECK_THROWS_AS(generate(spec), std::domain_error);
}

TEST_CASE("generated polygons subdivide cleanly") {
    CurveSpec spec;
    spec.kind = CurveSpec::Kind::Star2D;
    spec.nu1 = 4;
    spec.npoints = 33;
    auto gen = generate(spec);
    Polygon fine = subdivide(gen.polygon, gen.params, 3);
    CHECK(fine.points.size() == gen.polygon.points.size() * 8);
}
