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

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "expsubdiv/subdivision.hpp"

namespace expsubdiv {

/// Preset initial polygons: star-shaped curves and planar / spatial /
/// spherical Lissajous curves, sampled at u = theta (i-1) for i = 1..N
/// with theta = 2*pi/(N-1) (pi/(N-1) for the spatial Lissajous, whose
/// parameter runs over half a period). Each preset also recommends the
/// scheme order n matched to its frequency content.
struct CurveSpec {
    enum class Kind { Star2D, Star3D, Lissajous2D, Lissajous3D, LissajousSphere };

    Kind kind = Kind::Star2D;
    int nu1 = 4;       // nu for the star shapes
    int nu2 = 1;
    int nu3 = 1;
    double tau = 1.0;  // planar Lissajous phase, y = cos(nu1 u - tau*pi/nu2)
    double rho = 0.0;  // spherical Lissajous rotation
    int npoints = 33;  // N, counting the duplicate closing sample
};

struct GeneratedCurve {
    Polygon polygon;
    SchemeParams params;
};

inline GeneratedCurve generate(const CurveSpec& spec) {
    if (spec.npoints < 4) throw std::domain_error("generate: need at least 4 sample points");
    if (spec.nu1 < 1 || spec.nu2 < 1 || spec.nu3 < 1)
        throw std::domain_error("generate: frequency integers must be >= 1");

    const int N = spec.npoints;
    const double full = 2.0 * std::numbers::pi;
    const double theta = spec.kind == CurveSpec::Kind::Lissajous3D
                             ? std::numbers::pi / (N - 1)
                             : full / (N - 1);

    GeneratedCurve out;
    out.polygon.closed = true;
    out.polygon.dim = spec.kind == CurveSpec::Kind::Star2D ||
                              spec.kind == CurveSpec::Kind::Lissajous2D
                          ? 2
                          : 3;
    out.params.theta = ThetaSpec::trigonometric(theta);

    const double nu = spec.nu1;
    for (int i = 0; i < N; ++i) {
        const double u = theta * i;
        std::array<double, 3> pt{0.0, 0.0, 0.0};
        switch (spec.kind) {
            case CurveSpec::Kind::Star2D: {
                double radius = 3.0 + std::sin(nu * u);
                pt = {radius * std::cos(u), radius * std::sin(u), 0.0};
                break;
            }
            case CurveSpec::Kind::Star3D: {
                double radius = 3.0 + std::sin(nu * u);
                pt = {radius * std::cos(u), radius * std::sin(u), -radius * radius / 4.0};
                break;
            }
            case CurveSpec::Kind::Lissajous2D:
                pt = {std::cos(spec.nu2 * u),
                      std::cos(spec.nu1 * u - spec.tau * std::numbers::pi / spec.nu2), 0.0};
                break;
            case CurveSpec::Kind::Lissajous3D:
                pt = {std::cos(spec.nu1 * u), std::cos(spec.nu2 * u), std::cos(spec.nu3 * u)};
                break;
            case CurveSpec::Kind::LissajousSphere: {
                double phase = spec.nu1 * u - spec.rho * std::numbers::pi;
                pt = {std::sin(spec.nu2 * u) * std::cos(phase),
                      std::sin(spec.nu2 * u) * std::sin(phase), std::cos(spec.nu2 * u)};
                break;
            }
        }
        out.polygon.points.push_back(pt);
    }

    // u spans a full period for all presets except the spatial Lissajous,
    // so the last sample duplicates the first; the closed polygon keeps
    // the N-1 distinct points.
    const auto& first = out.polygon.points.front();
    const auto& last = out.polygon.points.back();
    double gap = 0.0;
    for (int d = 0; d < 3; ++d)
        gap = std::max(gap, std::abs(first[static_cast<std::size_t>(d)] -
                                     last[static_cast<std::size_t>(d)]));
    if (gap <= 1e-9) out.polygon.points.pop_back();

    switch (spec.kind) {
        case CurveSpec::Kind::Star2D: out.params.n = spec.nu1 + 1; break;
        case CurveSpec::Kind::Star3D: out.params.n = 2 * spec.nu1; break;
        case CurveSpec::Kind::Lissajous2D: out.params.n = std::max(spec.nu1, spec.nu2); break;
        case CurveSpec::Kind::Lissajous3D:
            out.params.n = std::max({spec.nu1, spec.nu2, spec.nu3});
            break;
        case CurveSpec::Kind::LissajousSphere: out.params.n = spec.nu1 + spec.nu2; break;
    }
    return out;
}

} // namespace expsubdiv
