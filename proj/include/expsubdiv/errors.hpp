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

#include <stdexcept>
#include <string>

namespace expsubdiv {

/// Base class for all library-specific failures.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A series or summation parameter makes a denominator factor vanish
/// before the terminating index is reached.
struct singular_parameter_error : error {
    explicit singular_parameter_error(const std::string& what) : error(what) {}
};

/// No numerator parameter of a basic hypergeometric series is a
/// non-positive integer power of q, so the series does not terminate.
struct nonterminating_series_error : error {
    explicit nonterminating_series_error(const std::string& what) : error(what) {}
};

/// A coupling coefficient C_{l,i}(x) is evaluated at a point where its
/// denominator vanishes.
struct degenerate_parameter_error : error {
    degenerate_parameter_error(const std::string& what, int ell, int i)
        : error(what), ell(ell), i(i) {}
    int ell;
    int i;
};

/// A symbol builder hit a vanishing denominator for the given level
/// parameter; `index` reports the offending factor order.
struct degenerate_level_error : error {
    degenerate_level_error(const std::string& what, int index)
        : error(what), index(index) {}
    int index;
};

/// The linear system extracted from the banded coefficient matrix is
/// singular (or numerically singular in the float realization).
struct singular_matrix_error : error {
    explicit singular_matrix_error(const std::string& what) : error(what) {}
};

/// Refinement was requested for a polygon boundary type the engine does
/// not support (only closed polygons are refined).
struct unsupported_boundary_error : error {
    explicit unsupported_boundary_error(const std::string& what) : error(what) {}
};

} // namespace expsubdiv
