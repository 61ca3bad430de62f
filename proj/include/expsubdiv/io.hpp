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

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "expsubdiv/laurent.hpp"
#include "expsubdiv/subdivision.hpp"
#include "expsubdiv/symbols.hpp"

namespace expsubdiv {

using json = nlohmann::json;

namespace detail {

inline json scalar_to_json(const Rational& value) { return scalar_traits<Rational>::str(value); }
inline json scalar_to_json(double value) { return value; }

template <ScalarField S>
S scalar_from_json(const json& j);

template <>
inline Rational scalar_from_json<Rational>(const json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw std::invalid_argument("expected a \"p/q\" string for a rational coefficient");
}

template <>
inline double scalar_from_json<double>(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return scalar_traits<Rational>::to_double(
        rational_from_string(j.get<std::string>()));
    throw std::invalid_argument("expected a numeric coefficient");
}

} // namespace detail

/// {"lo": int, "coeffs": [...]}; rational coefficients are "p/q" strings
/// so the exact realization round-trips losslessly.
template <ScalarField S>
json laurent_to_json(const LaurentPoly<S>& p) {
    json coeffs = json::array();
    for (const S& c : p.coeffs()) coeffs.push_back(detail::scalar_to_json(c));
    return json{{"lo", p.lo()}, {"coeffs", coeffs}};
}

template <ScalarField S>
LaurentPoly<S> laurent_from_json(const json& j) {
    std::vector<S> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(detail::scalar_from_json<S>(c));
    return LaurentPoly<S>(j.at("lo").get<int>(), std::move(coeffs));
}

/// {"n": int, "v": "p/q"|float, "lo": int, "coeffs": [...]}.
template <ScalarField S>
json mask_to_json(const SubdivisionMask<S>& mask) {
    json j = laurent_to_json(mask.symbol);
    j["n"] = mask.n;
    j["v"] = detail::scalar_to_json(mask.level.v);
    return j;
}

/// CSV polygons: one point per line, comma-separated coordinates, 2 or 3
/// columns, wrap-around (closed) assumed.
inline Polygon read_polygon_csv(std::istream& in) {
    Polygon p;
    p.closed = true;
    std::string line;
    int dim = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream row(line);
        std::array<double, 3> pt{0.0, 0.0, 0.0};
        int cols = 0;
        std::string cell;
        while (std::getline(row, cell, ',')) {
            if (cols >= 3) throw std::invalid_argument("polygon CSV: more than 3 coordinates");
            pt[static_cast<std::size_t>(cols++)] = std::stod(cell);
        }
        if (cols < 2) throw std::invalid_argument("polygon CSV: need 2 or 3 coordinates per line");
        if (dim == 0) dim = cols;
        if (cols != dim) throw std::invalid_argument("polygon CSV: inconsistent column count");
        p.points.push_back(pt);
    }
    p.dim = dim == 0 ? 2 : dim;
    return p;
}

inline void write_polygon_csv(std::ostream& out, const Polygon& p) {
    out << std::setprecision(17);
    for (const auto& pt : p.points) {
        for (int d = 0; d < p.dim; ++d) {
            if (d > 0) out << ',';
            out << pt[static_cast<std::size_t>(d)];
        }
        out << '\n';
    }
}

/// SVG 1.1 snapshot: refined curve as a solid polyline, control polygon
/// dashed, fixed viewBox from the joint bounding box with a 5% margin.
/// 3D polygons are projected onto their first two coordinates.
inline void write_polyline_svg(std::ostream& out, const Polygon& refined,
                               const Polygon& control) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto absorb = [&](const Polygon& p) {
        for (const auto& pt : p.points) {
            xmin = std::min(xmin, pt[0]);
            xmax = std::max(xmax, pt[0]);
            ymin = std::min(ymin, pt[1]);
            ymax = std::max(ymax, pt[1]);
        }
    };
    absorb(refined);
    absorb(control);
    if (refined.points.empty() && control.points.empty()) {
        xmin = ymin = 0.0;
        xmax = ymax = 1.0;
    }
    double w = std::max(xmax - xmin, 1e-12);
    double h = std::max(ymax - ymin, 1e-12);
    double margin = 0.05 * std::max(w, h);
    double stroke = std::max(w, h) / 400.0;

    // y is flipped so the picture keeps the mathematical orientation
    auto points_attr = [&](const Polygon& p) {
        std::ostringstream os;
        os << std::setprecision(10);
        for (const auto& pt : p.points) os << pt[0] << ',' << -pt[1] << ' ';
        if (p.closed && !p.points.empty())
            os << p.points.front()[0] << ',' << -p.points.front()[1];
        return os.str();
    };

    out << std::setprecision(10);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (xmin - margin) << ' '
        << (-ymax - margin) << ' ' << (w + 2 * margin) << ' ' << (h + 2 * margin) << "\">\n";
    out << "  <polyline fill=\"none\" stroke=\"#888888\" stroke-width=\"" << stroke
        << "\" stroke-dasharray=\"" << 4 * stroke << ' ' << 3 * stroke << "\" points=\""
        << points_attr(control) << "\"/>\n";
    out << "  <polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"" << stroke
        << "\" points=\"" << points_attr(refined) << "\"/>\n";
    out << "</svg>\n";
}

} // namespace expsubdiv
