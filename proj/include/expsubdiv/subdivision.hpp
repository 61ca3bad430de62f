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

#include <array>
#include <cstddef>
#include <vector>

#include "expsubdiv/errors.hpp"
#include "expsubdiv/symbols.hpp"

namespace expsubdiv {

/// Ordered point sequence in R^2 or R^3. Indices wrap modulo the length
/// when closed; unused coordinates stay zero.
struct Polygon {
    std::vector<std::array<double, 3>> points;
    int dim = 2;
    bool closed = true;
};

/// Scheme order n and frequency parameter; together they pick the
/// reproduced space span{1, x, e^{+-ij*theta*x}, j = 1..n}.
struct SchemeParams {
    int n = 1;
    ThetaSpec theta = ThetaSpec::zero();
};

/// Mask for refinement level k: the closed-form symbol at
/// v = cos(theta/2^{k+1}), or the Dubuc-Deslauriers limit mask when the
/// level parameter is 1 (theta = 0).
inline SubdivisionMask<double> level_mask(int n, const ThetaSpec& theta, int k) {
    LevelParam<double> lp = level_param(theta, k);
    SubdivisionMask<double> mask = scalar_traits<double>::eq(lp.v, 1.0)
                                       ? dubuc_deslauriers_symbol<double>(n)
                                       : closed_form_symbol<double>(n, lp.v, k);
    mask.level.k = k;
    return mask;
}

namespace detail {

inline void require_interpolatory(const SubdivisionMask<double>& mask) {
    using traits = scalar_traits<double>;
    const LaurentPoly<double>& m = mask.symbol;
    if (!traits::eq(m.coeff(0), 1.0))
        throw std::invalid_argument("refine_once: mask center coefficient is not 1");
    for (int j = m.lo(); j <= m.hi(); ++j)
        if (j != 0 && j % 2 == 0 && !traits::is_zero(m.coeff(j)))
            throw std::invalid_argument("refine_once: mask has a nonzero even coefficient");
}

} // namespace detail

/// One refinement round: p'_i = sum_j m_{i-2j} p_j with wrap-around
/// indexing. The interpolatory structure makes p'_{2i} = p_i, so even
/// outputs are copied bit-identically and only odd outputs are blended.
inline Polygon refine_once(const Polygon& p, const SubdivisionMask<double>& mask) {
    if (!p.closed) throw unsupported_boundary_error("refine_once: open polygons unsupported");
    if (p.points.size() < 3)
        throw std::invalid_argument("refine_once: closed polygon needs at least 3 points");
    detail::require_interpolatory(mask);

    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(p.points.size());
    std::vector<std::pair<int, double>> odd_taps; // (exponent e, weight m_e)
    for (int e = mask.symbol.lo(); e <= mask.symbol.hi(); ++e)
        if (e % 2 != 0) odd_taps.emplace_back(e, mask.symbol.coeff(e));

    Polygon out;
    out.dim = p.dim;
    out.closed = true;
    out.points.resize(p.points.size() * 2);
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        out.points[static_cast<std::size_t>(2 * i)] = p.points[static_cast<std::size_t>(i)];
        std::array<double, 3> acc{0.0, 0.0, 0.0};
        for (const auto& [e, w] : odd_taps) {
            std::ptrdiff_t j = i + (1 - e) / 2; // 2i+1-e = 2j
            j %= count;
            if (j < 0) j += count;
            const auto& q = p.points[static_cast<std::size_t>(j)];
            for (int d = 0; d < 3; ++d) acc[static_cast<std::size_t>(d)] += w * q[static_cast<std::size_t>(d)];
        }
        out.points[static_cast<std::size_t>(2 * i + 1)] = acc;
    }
    return out;
}

/// Iterated refinement with the level-k mask at step k. All masks are
/// built up front so an inadmissible level fails before any points move;
/// original points survive at stride 2^steps.
inline Polygon subdivide(const Polygon& p, const SchemeParams& params, int steps) {
    if (steps < 0) throw std::domain_error("subdivide: negative step count");
    std::vector<SubdivisionMask<double>> masks;
    masks.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        try {
            masks.push_back(level_mask(params.n, params.theta, k));
        } catch (const degenerate_level_error& e) {
            throw degenerate_level_error(
                "subdivide: level " + std::to_string(k) + " mask is degenerate: " + e.what(),
                e.index);
        }
    }
    Polygon cur = p;
    for (const auto& mask : masks) cur = refine_once(cur, mask);
    return cur;
}

} // namespace expsubdiv
