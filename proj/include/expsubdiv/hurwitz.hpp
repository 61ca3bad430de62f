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

#include <vector>

#include "expsubdiv/errors.hpp"
#include "expsubdiv/laurent.hpp"
#include "expsubdiv/scalar.hpp"
#include "expsubdiv/symbols.hpp"

namespace expsubdiv {

/// Banded linear system extracted from the exponential B-spline symbol
/// s(z) = sum_{j=0}^{2n+2} s_j z^{j-(n+1)}: the (2n+1) x (2n+1) matrix has
/// entries matrix[r][c] = s_{2(c+1)-(r+1)} (0-based r, c), with s_m = 0
/// outside 0..2n+2.
template <ScalarField S>
struct HurwitzSystem {
    int n = 1;
    std::vector<S> s_coeffs;              // s_0 .. s_{2n+2}
    std::vector<std::vector<S>> matrix;   // (2n+1) x (2n+1)
};

template <ScalarField S>
HurwitzSystem<S> build_hurwitz_system(int n, const S& v) {
    if (n < 1) throw std::domain_error("build_hurwitz_system: n must be positive");
    using traits = scalar_traits<S>;
    HurwitzSystem<S> sys;
    sys.n = n;

    LaurentPoly<S> s = exp_bspline_symbol(n, v);
    sys.s_coeffs.resize(static_cast<std::size_t>(2 * n + 3), traits::zero());
    for (int j = 0; j <= 2 * n + 2; ++j)
        sys.s_coeffs[static_cast<std::size_t>(j)] = s.coeff(j - (n + 1));

    const int dim = 2 * n + 1;
    sys.matrix.assign(static_cast<std::size_t>(dim),
                      std::vector<S>(static_cast<std::size_t>(dim), traits::zero()));
    for (int r = 1; r <= dim; ++r) {
        for (int c = 1; c <= dim; ++c) {
            int idx = 2 * c - r;
            if (idx >= 0 && idx <= 2 * n + 2)
                sys.matrix[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] =
                    sys.s_coeffs[static_cast<std::size_t>(idx)];
        }
    }
    return sys;
}

namespace detail {

/// Gaussian elimination solve of A x = rhs in place. The float
/// realization first equilibrates the rows (the banded spline systems
/// mix coefficient magnitudes across ~15 orders for hyperbolic levels)
/// and then pivots by largest magnitude; a pivot below 1e-12 relative to
/// the equilibrated scale is reported as singular. The exact realization
/// takes the first nonzero pivot and only an exactly zero column is
/// singular.
template <ScalarField S>
std::vector<S> gaussian_solve(std::vector<std::vector<S>> a, std::vector<S> rhs) {
    using traits = scalar_traits<S>;
    const std::size_t dim = a.size();

    if constexpr (!traits::is_exact) {
        for (std::size_t r = 0; r < dim; ++r) {
            S rowmax = traits::zero();
            for (const S& x : a[r]) rowmax = std::max(rowmax, traits::abs(x));
            if (traits::degenerate_divisor(rowmax))
                throw singular_matrix_error("gaussian_solve: zero row");
            for (S& x : a[r]) x = x / rowmax;
            rhs[r] = rhs[r] / rowmax;
        }
    }

    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        if constexpr (traits::is_exact) {
            while (pivot < dim && traits::is_zero(a[pivot][col])) ++pivot;
            if (pivot == dim) throw singular_matrix_error("gaussian_solve: exact zero pivot");
        } else {
            for (std::size_t r = col + 1; r < dim; ++r)
                if (traits::abs(a[r][col]) > traits::abs(a[pivot][col])) pivot = r;
            if (traits::abs(a[pivot][col]) <= S(1e-12))
                throw singular_matrix_error("gaussian_solve: pivot below 1e-12 relative");
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(rhs[pivot], rhs[col]);
        }
        for (std::size_t r = col + 1; r < dim; ++r) {
            if (traits::is_zero(a[r][col])) continue;
            S f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < dim; ++c) a[r][c] = a[r][c] - f * a[col][c];
            rhs[r] = rhs[r] - f * rhs[col];
        }
    }

    std::vector<S> x(dim, traits::zero());
    for (std::size_t row = dim; row-- > 0;) {
        S acc = rhs[row];
        for (std::size_t c = row + 1; c < dim; ++c) acc = acc - a[row][c] * x[c];
        x[row] = acc / a[row][row];
    }
    return x;
}

} // namespace detail

/// The Laurent polynomial l(z) = sum_{j=-n}^{n} y_j z^j built from the
/// middle row of the inverse system matrix. Only that one row is needed,
/// so this solves the single transposed system A^T y = e_{n+1} instead of
/// inverting A.
template <ScalarField S>
LaurentPoly<S> interpolatory_cofactor(const HurwitzSystem<S>& sys) {
    using traits = scalar_traits<S>;
    const int dim = 2 * sys.n + 1;
    std::vector<std::vector<S>> at(static_cast<std::size_t>(dim),
                                   std::vector<S>(static_cast<std::size_t>(dim), traits::zero()));
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            at[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                sys.matrix[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    std::vector<S> rhs(static_cast<std::size_t>(dim), traits::zero());
    rhs[static_cast<std::size_t>(sys.n)] = traits::one();
    std::vector<S> y = detail::gaussian_solve(std::move(at), std::move(rhs));
    return LaurentPoly<S>(-sys.n, std::move(y));
}

/// Reference construction of the interpolatory symbol: multiply the
/// exponential B-spline symbol by the cofactor polynomial from the banded
/// system. Independent of the closed form; the two must agree.
template <ScalarField S>
SubdivisionMask<S> reference_symbol(int n, const S& v, int level = 0) {
    HurwitzSystem<S> sys = build_hurwitz_system(n, v);
    SubdivisionMask<S> mask;
    mask.symbol = exp_bspline_symbol(n, v) * interpolatory_cofactor(sys);
    mask.n = n;
    mask.level = {v, level};
    return mask;
}

} // namespace expsubdiv
