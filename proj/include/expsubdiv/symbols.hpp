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

#include <cmath>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "expsubdiv/chebyshev.hpp"
#include "expsubdiv/errors.hpp"
#include "expsubdiv/laurent.hpp"
#include "expsubdiv/scalar.hpp"

namespace expsubdiv {

/// Frequency parameter of the reproduced space
/// span{1, x, e^{+-ij*theta*x}, j = 1..n}: theta = 0 gives the polynomial
/// case, a trigonometric theta = omega > 0 gives pure frequencies, and a
/// hyperbolic theta = i*s (s > 0) gives real exponentials.
struct ThetaSpec {
    enum class Kind { Zero, Trigonometric, Hyperbolic };

    Kind kind = Kind::Zero;
    double value = 0.0; // omega (trigonometric) or s (hyperbolic)

    static ThetaSpec zero() { return {Kind::Zero, 0.0}; }

    static ThetaSpec trigonometric(double omega) {
        if (!(omega > 0.0))
            throw std::domain_error("ThetaSpec: trigonometric frequency must be positive");
        return {Kind::Trigonometric, omega};
    }

    static ThetaSpec hyperbolic(double s) {
        if (!(s > 0.0)) throw std::domain_error("ThetaSpec: hyperbolic rate must be positive");
        return {Kind::Hyperbolic, s};
    }
};

/// Per-level reduction of theta: v = cos(theta / 2^{k+1}), which is
/// cosh(s / 2^{k+1}) in the hyperbolic regime and exactly 1 when theta = 0.
/// Every symbol builder is a rational function of v alone, so builders
/// accept v directly and this wrapper only matters for theta-driven runs.
template <ScalarField S>
struct LevelParam {
    S v = scalar_traits<S>::one();
    int k = 0;
};

inline LevelParam<double> level_param(const ThetaSpec& theta, int k) {
    if (k < 0) throw std::domain_error("level_param: negative level");
    double halving = std::ldexp(theta.value, -(k + 1)); // theta / 2^{k+1}
    switch (theta.kind) {
        case ThetaSpec::Kind::Zero: return {1.0, k};
        case ThetaSpec::Kind::Trigonometric: return {std::cos(halving), k};
        case ThetaSpec::Kind::Hyperbolic: return {std::cosh(halving), k};
    }
    throw std::logic_error("level_param: unreachable");
}

/// Interpolatory odd-symmetric mask for one refinement level.
///
/// Invariants (guaranteed by the builders, exact in the rational
/// realization): symbol(z) = symbol(1/z), coefficient 1 at exponent 0
/// with every other even exponent 0, symbol(1) = 2, and support inside
/// [-(2n+1), 2n+1].
template <ScalarField S>
struct SubdivisionMask {
    LaurentPoly<S> symbol;
    int n = 1;
    LevelParam<S> level;
};

/// Quadratic factor (z + 2 T_l(v) + 1/z) / (2 (T_l(v) + 1)) of the
/// exponential B-spline symbol. For l = 0 this is (1+z)^2/(4z)
/// independently of v.
template <ScalarField S>
LaurentPoly<S> bspline_factor(int ell, const S& v) {
    if (ell < 0) throw std::domain_error("bspline_factor: negative order");
    using traits = scalar_traits<S>;
    S t = chebyshev_t(ell, v);
    S den = traits::from_int(2) * (t + traits::one());
    if (traits::degenerate_divisor(den))
        throw degenerate_level_error("bspline_factor: T_l(v) = -1", ell);
    S edge = traits::one() / den;
    return LaurentPoly<S>(-1, {edge, traits::from_int(2) * t / den, edge});
}

/// Exponential B-spline symbol 2 prod_{l=0}^{n} a_l(z); support is
/// exactly [-(n+1), n+1] and the value at z = 1 is 2.
template <ScalarField S>
LaurentPoly<S> exp_bspline_symbol(int n, const S& v) {
    if (n < 0) throw std::domain_error("exp_bspline_symbol: negative order");
    using traits = scalar_traits<S>;
    LaurentPoly<S> acc = LaurentPoly<S>::constant(traits::from_int(2));
    for (int ell = 0; ell <= n; ++ell) acc = acc * bspline_factor(ell, v);
    return acc;
}

/// Scalar weight c_i(v) = 2^i/(T_i(v)+1) prod_{l=0}^{i-1} C_{l,i}(v).
/// Degenerate at v = 1 (every C_{l,i} is 0/0) and wherever a coupling
/// denominator or T_i(v) + 1 vanishes.
template <ScalarField S>
S coupling_weight(int i, const S& v) {
    if (i < 1) throw std::domain_error("coupling_weight: i must be positive");
    using traits = scalar_traits<S>;
    const std::vector<S> T = chebyshev_t_table(i + 1, v);
    S den = T[static_cast<std::size_t>(i)] + traits::one();
    if (traits::degenerate_divisor(den))
        throw degenerate_level_error("coupling_weight: T_i(v) = -1", i);
    S acc = scalar_pow(traits::from_int(2), i) / den;
    for (int ell = 0; ell < i; ++ell) {
        try {
            acc = acc * detail::coupling_from_table(T, ell, i);
        } catch (const degenerate_parameter_error& e) {
            throw degenerate_level_error(
                "coupling_weight: degenerate coupling at l = " + std::to_string(e.ell) +
                    ", i = " + std::to_string(e.i),
                e.i);
        }
    }
    return acc;
}

/// Correction term b_i(z) = (2 a_0(z) - 1) c_i(v) prod_{l=0}^{i-1} a_l(-z).
/// Note 2 a_0(z) - 1 = (1 + z^2)/(2z); the result satisfies b(z) = b(1/z).
template <ScalarField S>
LaurentPoly<S> correction_factor(int i, const S& v) {
    if (i < 1) throw std::domain_error("correction_factor: i must be positive");
    using traits = scalar_traits<S>;
    S half = traits::one() / traits::from_int(2);
    LaurentPoly<S> two_a0_minus_1(-1, {half, traits::zero(), half});
    LaurentPoly<S> acc = two_a0_minus_1.scaled(coupling_weight(i, v));
    for (int ell = 0; ell < i; ++ell) acc = acc * bspline_factor(ell, v).reflected();
    return acc;
}

/// Closed-form k-level symbol of the minimum-support interpolatory
/// scheme reproducing span{1, x, e^{+-ij*theta*x}, j = 1..n}:
///
///   m(z) = 2 a_0(z) ( 1 + sum_{i=1}^{n} b_i(z) prod_{l=1}^{i-1} a_l(z) ).
///
/// v = 1 is rejected (the coupling weights are 0/0 there); use
/// dubuc_deslauriers_symbol for the polynomial case. n = 0 yields the
/// two-point symbol 2 a_0(z) with an empty sum.
template <ScalarField S>
SubdivisionMask<S> closed_form_symbol(int n, const S& v, int level = 0) {
    if (n < 0) throw std::domain_error("closed_form_symbol: negative order");
    using traits = scalar_traits<S>;
    if (traits::eq(v, traits::one()))
        throw degenerate_level_error(
            "closed_form_symbol: v = 1 is degenerate; use dubuc_deslauriers_symbol", 0);

    LaurentPoly<S> a0 = bspline_factor(0, v);
    LaurentPoly<S> inner = LaurentPoly<S>::one();
    LaurentPoly<S> prod_neg = LaurentPoly<S>::one(); // prod_{l=0}^{i-1} a_l(-z)
    LaurentPoly<S> prod_pos = LaurentPoly<S>::one(); // prod_{l=1}^{i-1} a_l(z)
    S half = traits::one() / traits::from_int(2);
    LaurentPoly<S> two_a0_minus_1(-1, {half, traits::zero(), half});
    for (int i = 1; i <= n; ++i) {
        LaurentPoly<S> a_prev = bspline_factor(i - 1, v);
        prod_neg = prod_neg * a_prev.reflected();
        if (i >= 2) prod_pos = prod_pos * a_prev;
        S ci = coupling_weight(i, v);
        inner = inner + (two_a0_minus_1 * prod_neg * prod_pos).scaled(ci);
    }
    SubdivisionMask<S> mask;
    mask.symbol = a0.scaled(traits::from_int(2)) * inner;
    mask.n = n;
    mask.level = {v, level};
    return mask;
}

/// The same symbol with the product distributed flat:
///
///   m(z) = 2 a_0(z) + 2 (2 a_0(z) - 1) sum_{i=1}^{n} c_i(v)
///          prod_{l=0}^{i-1} a_l(-z) a_l(z).
///
/// Kept alongside the nested form for the coefficient-wise equivalence
/// check; the nested form is the primary code path.
template <ScalarField S>
SubdivisionMask<S> closed_form_symbol_flat(int n, const S& v, int level = 0) {
    if (n < 0) throw std::domain_error("closed_form_symbol_flat: negative order");
    using traits = scalar_traits<S>;
    if (traits::eq(v, traits::one()))
        throw degenerate_level_error(
            "closed_form_symbol_flat: v = 1 is degenerate; use dubuc_deslauriers_symbol", 0);

    LaurentPoly<S> a0 = bspline_factor(0, v);
    S half = traits::one() / traits::from_int(2);
    LaurentPoly<S> two_a0_minus_1(-1, {half, traits::zero(), half});
    LaurentPoly<S> sum;
    LaurentPoly<S> prod_both = LaurentPoly<S>::one(); // prod_{l=0}^{i-1} a_l(-z) a_l(z)
    for (int i = 1; i <= n; ++i) {
        LaurentPoly<S> a_prev = bspline_factor(i - 1, v);
        prod_both = prod_both * a_prev.reflected() * a_prev;
        sum = sum + prod_both.scaled(coupling_weight(i, v));
    }
    SubdivisionMask<S> mask;
    mask.symbol = a0.scaled(traits::from_int(2)) +
                  (two_a0_minus_1 * sum).scaled(traits::from_int(2));
    mask.n = n;
    mask.level = {v, level};
    return mask;
}

/// Limit symbol of the level sequence: the (2n+2)-point
/// Dubuc-Deslauriers mask
///
///   (1+z)^{2n+2}/(2^{2n+1} z^{n+1}) sum_{s=0}^{n} binom(n+s, s) (-1)^s (1-z)^{2s}/(4^s z^s),
///
/// expanded to coefficients; the level parameter is v = 1.
template <ScalarField S>
SubdivisionMask<S> dubuc_deslauriers_symbol(int n) {
    if (n < 0) throw std::domain_error("dubuc_deslauriers_symbol: negative order");
    using traits = scalar_traits<S>;
    const S one = traits::one();
    LaurentPoly<S> one_plus_z(0, {one, one});
    LaurentPoly<S> one_minus_z(0, {one, -one});
    LaurentPoly<S> front =
        pow(one_plus_z, 2 * n + 2).scaled(one / scalar_pow(traits::from_int(2), 2 * n + 1));
    front = front.shifted(-(n + 1));

    LaurentPoly<S> sum;
    S binom = one; // binom(n+s, s), updated multiplicatively
    S quarter_pow = one;
    for (int s = 0; s <= n; ++s) {
        if (s > 0) {
            binom = binom * traits::from_int(n + s) / traits::from_int(s);
            quarter_pow = quarter_pow * traits::from_int(4);
        }
        S w = binom / quarter_pow;
        if (s % 2 != 0) w = -w;
        sum = sum + pow(one_minus_z, 2 * s).shifted(-s).scaled(w);
    }

    SubdivisionMask<S> mask;
    mask.symbol = front * sum;
    mask.n = n;
    mask.level = {one, 0};
    return mask;
}

enum class ConditionMode { Generation, Reproduction, Interpolation };

/// Residual report for the algebraic conditions a symbol must satisfy to
/// generate/reproduce the target space or to be interpolatory.
///
/// Conditions at z = +-1 and the interpolation coefficients are computed
/// in the mask's own scalar field (exact for rationals); the root
/// conditions at the points r^{+-j} are always evaluated in complex
/// binary64, with r recovered from v as r = v + i sqrt(1-v^2) for
/// |v| <= 1 and r = v + sqrt(v^2-1) for v > 1.
template <ScalarField S>
struct ConditionReport {
    std::vector<std::pair<std::string, S>> exact;
    std::vector<std::pair<std::string, double>> numeric;

    double max_abs() const {
        double best = 0.0;
        for (const auto& [name, r] : exact)
            best = std::max(best, std::abs(scalar_traits<S>::to_double(r)));
        for (const auto& [name, r] : numeric) best = std::max(best, std::abs(r));
        return best;
    }
};

template <ScalarField S>
ConditionReport<S> verify_conditions(const SubdivisionMask<S>& mask, ConditionMode mode) {
    using traits = scalar_traits<S>;
    ConditionReport<S> report;
    const LaurentPoly<S>& m = mask.symbol;
    const S one = traits::one();
    const S two = traits::from_int(2);

    if (mode == ConditionMode::Interpolation) {
        LaurentPoly<S> g = m + m.reflected() - LaurentPoly<S>::constant(two);
        S worst = traits::zero();
        for (int j = g.lo(); j <= g.hi(); ++j) {
            S a = traits::abs(g.coeff(j));
            if (worst < a) worst = a;
        }
        report.exact.emplace_back("max |coeff of m(z)+m(-z)-2|", worst);
        return report;
    }

    LaurentPoly<S> dm = m.derivative();
    if (mode == ConditionMode::Generation) {
        report.exact.emplace_back("m(-1)", m(-one));
        report.exact.emplace_back("m'(-1)", dm(-one));
    } else {
        report.exact.emplace_back("m(1)-2", m(one) - two);
        report.exact.emplace_back("m'(1)", dm(one));
    }

    // Root conditions. When the scalar field is exact and sqrt(|v^2 - 1|)
    // is rational, r itself is exact and the residuals join the exact
    // list (for hyperbolic levels like v = 5/4 the points r^{+-j} grow
    // geometrically and binary64 evaluation loses the outer digits).
    if constexpr (std::is_same_v<S, Rational>) {
        const Rational& v = mask.level.v;
        const bool hyperbolic = v > Rational(1);
        std::optional<Rational> root = exact_sqrt(hyperbolic ? v * v - 1 : Rational(1) - v * v);
        if (root) {
            const bool generation = mode == ConditionMode::Generation;
            Complex<Rational> r = hyperbolic ? Complex<Rational>(v + *root, Rational(0))
                                             : Complex<Rational>(v, *root);
            Complex<Rational> target(generation ? Rational(0) : Rational(2), Rational(0));
            Complex<Rational> rj = Complex<Rational>::from_real(Rational(1));
            for (int j = 1; j <= mask.n; ++j) {
                rj = rj * r;
                const Complex<Rational> points[2] = {rj, rj.reciprocal()};
                for (int side = 0; side < 2; ++side) {
                    Complex<Rational> w =
                        (generation ? m(-points[side]) : m(points[side])) - target;
                    S resid = std::max(traits::abs(w.re), traits::abs(w.im));
                    report.exact.emplace_back(std::string(generation ? "|m(-r^" : "|m(r^") +
                                                  (side == 0 ? "" : "-") + std::to_string(j) +
                                                  (generation ? ")|" : ")-2|"),
                                              resid);
                }
            }
            return report;
        }
    }

    const double v = traits::to_double(mask.level.v);
    Complex<double> r = v <= 1.0 ? Complex<double>(v, std::sqrt(std::max(0.0, 1.0 - v * v)))
                                 : Complex<double>(v + std::sqrt(v * v - 1.0), 0.0);
    LaurentPoly<double> md = to_double_poly(m);
    Complex<double> rj(1.0, 0.0);
    for (int j = 1; j <= mask.n; ++j) {
        rj = rj * r;
        Complex<double> rmj = rj.reciprocal();
        if (mode == ConditionMode::Generation) {
            report.numeric.emplace_back("|m(-r^" + std::to_string(j) + ")|", md(-rj).abs());
            report.numeric.emplace_back("|m(-r^-" + std::to_string(j) + ")|", md(-rmj).abs());
        } else {
            Complex<double> two_c(2.0, 0.0);
            report.numeric.emplace_back("|m(r^" + std::to_string(j) + ")-2|",
                                        (md(rj) - two_c).abs());
            report.numeric.emplace_back("|m(r^-" + std::to_string(j) + ")-2|",
                                        (md(rmj) - two_c).abs());
        }
    }
    return report;
}

} // namespace expsubdiv
