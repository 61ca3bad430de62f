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

#include <optional>
#include <type_traits>
#include <vector>

#include "expsubdiv/errors.hpp"
#include "expsubdiv/qseries.hpp"
#include "expsubdiv/scalar.hpp"

namespace expsubdiv {

/// Argument of a Chebyshev polynomial, optionally carrying the
/// substitution parameter t with x = (t + 1/t)/2.
template <ScalarField S>
struct ChebPoint {
    S x = scalar_traits<S>::zero();
    std::optional<S> t;

    static ChebPoint from_argument(const S& x) { return {x, std::nullopt}; }

    static ChebPoint from_parameter(const S& t) {
        using traits = scalar_traits<S>;
        if (traits::is_zero(t)) throw std::domain_error("ChebPoint: t must be nonzero");
        S x = (t + traits::one() / t) / traits::from_int(2);
        return {x, t};
    }

    bool consistent() const {
        using traits = scalar_traits<S>;
        if (!t) return true;
        return traits::eq(x, (*t + traits::one() / *t) / traits::from_int(2));
    }
};

/// Chebyshev polynomial of the first kind by the three-term recurrence
/// T_0 = 1, T_1 = x, T_{k+1} = 2x T_k - T_{k-1}. Valid for |x| > 1 as
/// well, and exact over rationals.
template <ScalarField S>
S chebyshev_t(int n, const S& x) {
    if (n < 0) throw std::domain_error("chebyshev_t: negative degree");
    using traits = scalar_traits<S>;
    if (n == 0) return traits::one();
    S prev = traits::one();
    S cur = x;
    S twox = traits::from_int(2) * x;
    for (int k = 1; k < n; ++k) {
        S next = twox * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// T_0 .. T_m at a fixed argument.
template <ScalarField S>
std::vector<S> chebyshev_t_table(int m, const S& x) {
    using traits = scalar_traits<S>;
    std::vector<S> table;
    table.reserve(static_cast<std::size_t>(m) + 1);
    table.push_back(traits::one());
    if (m >= 1) table.push_back(x);
    S twox = traits::from_int(2) * x;
    for (int k = 2; k <= m; ++k)
        table.push_back(twox * table[static_cast<std::size_t>(k - 1)] -
                        table[static_cast<std::size_t>(k - 2)]);
    return table;
}

/// T_n((t + 1/t)/2) = (t^n + t^{-n})/2, evaluated directly in t.
template <ScalarField S>
S chebyshev_t_param(int n, const S& t) {
    if (n < 0) throw std::domain_error("chebyshev_t_param: negative degree");
    using traits = scalar_traits<S>;
    if (traits::is_zero(t)) throw std::domain_error("chebyshev_t_param: t must be nonzero");
    return (scalar_pow(t, n) + scalar_pow(t, -static_cast<long long>(n))) / traits::from_int(2);
}

namespace detail {

/// C_{l,i} from a precomputed table of T_0..T_{i+1}. The denominator
/// (T_i - T_{i+1}) - (T_l - T_{l+1}) vanishes at x = 1 and at resonant
/// trigonometric arguments; callers own the limit handling.
template <ScalarField S>
S coupling_from_table(const std::vector<S>& T, int ell, int i) {
    using traits = scalar_traits<S>;
    const auto u = [&](int m) { return T[static_cast<std::size_t>(m)]; };
    S num = (u(ell) - u(ell + 1)) * (u(ell) + traits::one());
    S den = (u(i) - u(i + 1)) - (u(ell) - u(ell + 1));
    if (traits::degenerate_divisor(den))
        throw degenerate_parameter_error("coupling coefficient denominator vanishes", ell, i);
    return num / den;
}

} // namespace detail

/// Coupling coefficient
///   C_{l,i}(x) = (T_l - T_{l+1})(T_l + 1) / ((T_i - T_{i+1}) - (T_l - T_{l+1})),
/// defined for 0 <= l < i.
template <ScalarField S>
S coupling_coefficient(int ell, int i, const S& x) {
    if (i < 1 || ell < 0 || ell >= i)
        throw std::domain_error("coupling_coefficient: requires 0 <= ell < i");
    return detail::coupling_from_table(chebyshev_t_table(i + 1, x), ell, i);
}

/// Weighted coupling sum
///   sum_{i=1}^{n} 2^i/(T_i+1) prod_{l=0}^{i-1} C_{l,i}(x) (T_l^2 - T_n^2)/(T_l+1)^2,
/// which closes to (1 - T_n(x)) / (2 T_n(x)).
///
/// Products run incrementally per i, O(n^2) scalar operations total.
/// Near x = -1 the terms grow to ~1e6 and cancel, so the binary64
/// realization accumulates in extended precision before rounding back.
template <ScalarField S>
S coupling_sum(int n, const S& x) {
    if (n < 1) throw std::domain_error("coupling_sum: n must be positive");
    if constexpr (std::is_same_v<S, double>) {
        return static_cast<double>(coupling_sum(n, static_cast<long double>(x)));
    }
    using traits = scalar_traits<S>;
    const std::vector<S> T = chebyshev_t_table(n + 1, x);
    const S tn2 = T[static_cast<std::size_t>(n)] * T[static_cast<std::size_t>(n)];

    S sum = traits::zero();
    S two_pow = traits::one();
    for (int i = 1; i <= n; ++i) {
        two_pow = two_pow * traits::from_int(2);
        S ti1 = T[static_cast<std::size_t>(i)] + traits::one();
        if (traits::degenerate_divisor(ti1))
            throw degenerate_parameter_error("coupling_sum: T_i(x) = -1", i, i);
        S prod = traits::one();
        for (int ell = 0; ell < i; ++ell) {
            S tl = T[static_cast<std::size_t>(ell)];
            S tl1 = tl + traits::one();
            if (traits::degenerate_divisor(tl1))
                throw degenerate_parameter_error("coupling_sum: T_l(x) = -1", ell, i);
            prod = prod * detail::coupling_from_table(T, ell, i) * (tl * tl - tn2) / (tl1 * tl1);
        }
        sum = sum + two_pow / ti1 * prod;
    }
    return sum;
}

/// The factored form of the series tail:
///
///   (t^{2n}-1)^2 sum_{i=1}^{n} (-1)^i
///       prod_{l=1}^{i} (t^{2l-1}-1) prod_{l=1}^{i-1} (t^{2(n+l)}-1) prod_{l=1}^{i-1} (t^{2(n-l)}-1)
///     / ( t^{(2n-i)i-i} prod_{l=1}^{i} (t^{2l}-1) prod_{l=1}^{2i} (t^l+1) ),
///
/// equal to the terminating 3phi2 of chebyshev_reciprocal_series minus 1.
template <ScalarField S>
S factored_phi_sum(int n, const S& t) {
    if (n < 1) throw std::domain_error("factored_phi_sum: n must be positive");
    using traits = scalar_traits<S>;
    const S one = traits::one();
    if (traits::is_zero(t) || traits::eq(t, one) || traits::eq(t, -one))
        throw std::domain_error("factored_phi_sum: t in {0, 1, -1} excluded");

    S sum = traits::zero();
    for (int i = 1; i <= n; ++i) {
        S num = one;
        for (int ell = 1; ell <= i; ++ell) num = num * (scalar_pow(t, 2 * ell - 1) - one);
        for (int ell = 1; ell <= i - 1; ++ell) num = num * (scalar_pow(t, 2 * (n + ell)) - one);
        for (int ell = 1; ell <= i - 1; ++ell) num = num * (scalar_pow(t, 2 * (n - ell)) - one);

        S den = scalar_pow(t, static_cast<long long>(2 * n - i) * i - i);
        for (int ell = 1; ell <= i; ++ell) den = den * (scalar_pow(t, 2 * ell) - one);
        for (int ell = 1; ell <= 2 * i; ++ell) den = den * (scalar_pow(t, ell) + one);
        if (traits::degenerate_divisor(den))
            throw std::domain_error("factored_phi_sum: vanishing denominator product");

        S term = num / den;
        if (i % 2 != 0) term = -term;
        sum = sum + term;
    }
    S front = scalar_pow(t, 2 * n) - one;
    return front * front * sum;
}

/// The terminating 3phi2 with numerator parameters t^{-2n}, t^{2n}, t and
/// denominator parameters -t, -t^2 at base and argument t^2. Its value is
/// 2t^n/(1 + t^{2n}), the reciprocal of T_n((t + 1/t)/2).
template <ScalarField S>
S chebyshev_reciprocal_series(int n, const S& t) {
    if (n < 0) throw std::domain_error("chebyshev_reciprocal_series: negative degree");
    using traits = scalar_traits<S>;
    if (traits::is_zero(t)) throw std::domain_error("chebyshev_reciprocal_series: t must be nonzero");
    QHyperParams<S> params;
    params.numerator = {scalar_pow(t, -2 * static_cast<long long>(n)),
                        scalar_pow(t, 2 * static_cast<long long>(n)), t};
    params.denominator = {-t, -(t * t)};
    params.q = t * t;
    params.z = t * t;
    return basic_hypergeom(params);
}

} // namespace expsubdiv
