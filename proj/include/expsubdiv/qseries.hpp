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

#include <utility>
#include <vector>

#include "expsubdiv/errors.hpp"
#include "expsubdiv/scalar.hpp"

namespace expsubdiv {

/// Shifted factorial (p)_n = p (p+1) ... (p+n-1), with (p)_0 = 1.
template <ScalarField S>
S pochhammer(const S& p, int n) {
    if (n < 0) throw std::domain_error("pochhammer: negative order");
    using traits = scalar_traits<S>;
    S acc = traits::one();
    for (int j = 0; j < n; ++j) acc = acc * (p + traits::from_int(j));
    return acc;
}

/// q-shifted factorial (a;q)_n = prod_{j=0}^{n-1} (1 - a q^j), with
/// (a;q)_0 = 1.
template <ScalarField S>
S q_pochhammer(const S& a, const S& q, int n) {
    if (n < 0) throw std::domain_error("q_pochhammer: negative order");
    using traits = scalar_traits<S>;
    S acc = traits::one();
    S qj = traits::one();
    for (int j = 0; j < n; ++j) {
        acc = acc * (traits::one() - a * qj);
        qj = qj * q;
    }
    return acc;
}

/// Terminating Gauss hypergeometric series
///   2F1(-m, b; c; z) = sum_{k=0}^{m} (-1)^k binom(m,k) (b)_k/(c)_k z^k.
///
/// Throws singular_parameter_error when a denominator factor (c+k)
/// vanishes while later terms still contribute.
template <ScalarField S>
S hypergeom_2f1_terminating(int m, const S& b, const S& c, const S& z) {
    if (m < 0) throw std::domain_error("hypergeom_2f1_terminating: negative order");
    using traits = scalar_traits<S>;
    S term = traits::one();
    S sum = term;
    for (int k = 0; k < m; ++k) {
        if (term == traits::zero()) break; // a vanished numerator kills all later terms
        S den = c + traits::from_int(k);
        if (traits::degenerate_divisor(den))
            throw singular_parameter_error("2F1: denominator parameter hits a non-positive integer");
        term = term * traits::from_int(-(m - k)) / traits::from_int(k + 1);
        term = term * (b + traits::from_int(k)) / den;
        term = term * z;
        sum = sum + term;
    }
    return sum;
}

/// Parameters of a basic (q-)hypergeometric series rphi_s.
///
/// The series is only ever summed when it terminates: at least one
/// numerator parameter must equal q^{-n} for an integer 0 <= n <= 64.
/// Detection is exact in the rational realization and within relative
/// tolerance 1e-9 in the float realization.
template <ScalarField S>
struct QHyperParams {
    std::vector<S> numerator;
    std::vector<S> denominator;
    S q = scalar_traits<S>::zero();
    S z = scalar_traits<S>::zero();

    static constexpr int max_termination_index = 64;

    /// Smallest n with some numerator parameter equal to q^{-n}.
    int termination_index() const {
        using traits = scalar_traits<S>;
        if (traits::is_zero(q) || traits::eq(q, traits::one()))
            throw singular_parameter_error("basic hypergeometric series requires q != 0, 1");
        S qn = traits::one();
        for (int n = 0; n <= max_termination_index; ++n) {
            for (const S& alpha : numerator) {
                if (matches_one(alpha * qn)) return n;
            }
            qn = qn * q;
        }
        throw nonterminating_series_error(
            "no numerator parameter equals q^-n for n <= 64; refusing to sum");
    }

private:
    static bool matches_one(const S& value) {
        if constexpr (scalar_traits<S>::is_exact) {
            return value == scalar_traits<S>::one();
        } else {
            return std::abs(scalar_traits<S>::to_double(value) - 1.0) <= 1e-9;
        }
    }
};

/// Terminating basic hypergeometric series
///
///   rphi_s[a_1..a_r; b_1..b_s; q, z]
///     = sum_n  prod_i (a_i;q)_n / prod_j (b_j;q)_n
///              * z^n/(q;q)_n * ((-1)^n q^{n(n-1)/2})^{1+s-r},
///
/// truncated at the termination index. The correction factor is 1 when
/// r = s+1. Throws singular_parameter_error if a denominator factor
/// vanishes before termination.
template <ScalarField S>
S basic_hypergeom(const QHyperParams<S>& params) {
    using traits = scalar_traits<S>;
    const int n0 = params.termination_index();
    const long long excess = 1 + static_cast<long long>(params.denominator.size()) -
                             static_cast<long long>(params.numerator.size());

    S term = traits::one();
    S sum = term;
    S qk = traits::one(); // q^k while stepping from term k to k+1
    for (int k = 0; k < n0; ++k) {
        for (const S& alpha : params.numerator)
            term = term * (traits::one() - alpha * qk);
        for (const S& beta : params.denominator) {
            S f = traits::one() - beta * qk;
            if (traits::degenerate_divisor(f))
                throw singular_parameter_error(
                    "basic hypergeometric series: denominator q-factor vanishes before termination");
            term = term / f;
        }
        S f = traits::one() - params.q * qk; // the new (q;q)_{k+1} factor
        if (traits::degenerate_divisor(f))
            throw singular_parameter_error("basic hypergeometric series: (q;q)_n factor vanishes");
        term = term * params.z / f;
        if (excess != 0) term = term * scalar_pow(S(-qk), excess);
        qk = qk * params.q;
        sum = sum + term;
    }
    return sum;
}

/// Both sides of the q-Saalschutz (Jackson) summation
///
///   3phi2[q^{-n}, a, b; c, ab/(c q^{n-1}); q, q]
///     = (c/a;q)_n (c/b;q)_n / ((c;q)_n (c/(ab);q)_n),
///
/// returned as a (lhs, rhs) pair so the caller chooses the equality
/// notion.
template <ScalarField S>
std::pair<S, S> q_saalschutz_sides(int n, const S& a, const S& b, const S& c, const S& q) {
    using traits = scalar_traits<S>;
    if (n < 1) throw std::domain_error("q_saalschutz_sides: n must be positive");
    if (traits::degenerate_divisor(a) || traits::degenerate_divisor(b) ||
        traits::degenerate_divisor(c))
        throw singular_parameter_error("q_saalschutz_sides: a, b, c must be nonzero");

    QHyperParams<S> params;
    params.numerator = {scalar_pow(q, -static_cast<long long>(n)), a, b};
    params.denominator = {c, a * b / (c * scalar_pow(q, n - 1))};
    params.q = q;
    params.z = q;
    S lhs = basic_hypergeom(params);

    S den = q_pochhammer(c, q, n) * q_pochhammer(c / (a * b), q, n);
    if (traits::degenerate_divisor(den))
        throw singular_parameter_error("q_saalschutz_sides: right side denominator vanishes");
    S rhs = q_pochhammer(c / a, q, n) * q_pochhammer(c / b, q, n) / den;
    return {lhs, rhs};
}

/// Big q-Jacobi polynomial P_n(x; a, b, c; q), defined through the
/// terminating 3phi2 with numerator parameters q^{-n}, abq^{n+1}, x and
/// denominator parameters aq, cq at argument z = q.
template <ScalarField S>
S big_q_jacobi(const S& x, const S& a, const S& b, const S& c, const S& q, int n) {
    if (n < 0) throw std::domain_error("big_q_jacobi: negative degree");
    QHyperParams<S> params;
    params.numerator = {scalar_pow(q, -static_cast<long long>(n)),
                        a * b * scalar_pow(q, static_cast<long long>(n) + 1), x};
    params.denominator = {a * q, c * q};
    params.q = q;
    params.z = q;
    return basic_hypergeom(params);
}

/// Classical Jacobi polynomial
///   P_n^{(alpha,beta)}(x) = (alpha+1)_n / n! * 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2).
template <ScalarField S>
S jacobi_polynomial(int n, const S& alpha, const S& beta, const S& x) {
    if (n < 0) throw std::domain_error("jacobi_polynomial: negative degree");
    using traits = scalar_traits<S>;
    S two = traits::from_int(2);
    S front = pochhammer(alpha + traits::one(), n) / pochhammer(traits::one(), n);
    S series = hypergeom_2f1_terminating(
        n, traits::from_int(n) + alpha + beta + traits::one(), alpha + traits::one(),
        (traits::one() - x) / two);
    return front * series;
}

} // namespace expsubdiv
