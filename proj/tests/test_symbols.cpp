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

#include "expsubdiv/symbols.hpp"

using namespace expsubdiv;

namespace {

Rational rat(long long p, long long q = 1) { return Rational(p) / Rational(q); }

const std::vector<Rational> kLevelValues = {rat(5, 4), rat(3, 4), rat(2, 3),
                                            rat(9, 8), rat(15, 16), rat(3, 2)};

// mask structure shared by every interpolatory symbol in the family
template <ScalarField S>
void check_mask_invariants(const SubdivisionMask<S>& mask) {
    using traits = scalar_traits<S>;
    const auto& m = mask.symbol;
    CHECK(m.is_symmetric());
    CHECK(m.lo() >= -(2 * mask.n + 1));
    CHECK(m.hi() <= 2 * mask.n + 1);
    CHECK(traits::eq(m.coeff(0), traits::one()));
    for (int j = m.lo(); j <= m.hi(); ++j)
        if (j != 0 && j % 2 == 0) CHECK(traits::is_zero(m.coeff(j)));
    CHECK(traits::eq(m(traits::one()), traits::from_int(2)));
}

} // namespace

TEST_CASE("level parameter per regime") {
    CHECK(level_param(ThetaSpec::zero(), 0).v == 1.0);
    CHECK(level_param(ThetaSpec::zero(), 7).v == 1.0);

    auto trig = level_param(ThetaSpec::trigonometric(std::numbers::pi), 0);
    CHECK(std::abs(trig.v - std::cos(std::numbers::pi / 2)) <= 1e-15);

    // cosh(ln 2) = (2 + 1/2)/2 gives an exact-rational test point
    auto hyp = level_param(ThetaSpec::hyperbolic(2.0 * std::log(2.0)), 0);
    CHECK(std::abs(hyp.v - 1.25) <= 1e-15);

    CHECK_THROWS_AS(ThetaSpec::trigonometric(-1.0), std::domain_error);
    CHECK_THROWS_AS(ThetaSpec::hyperbolic(0.0), std::domain_error);
}

TEST_CASE("level parameter approaches 1 monotonically") {
    auto theta = ThetaSpec::trigonometric(0.8);
    auto hyper = ThetaSpec::hyperbolic(0.8);
    double prev_t = level_param(theta, 0).v;
    double prev_h = level_param(hyper, 0).v;
    for (int k = 1; k <= 8; ++k) {
        double vt = level_param(theta, k).v;
        double vh = level_param(hyper, k).v;
        CHECK(vt > prev_t);
        CHECK(vt <= 1.0);
        CHECK(vh < prev_h);
        CHECK(vh >= 1.0);
        prev_t = vt;
        prev_h = vh;
    }
}

TEST_CASE("b-spline quadratic factor") {
    for (Rational v : {rat(5, 4), rat(1, 3), rat(-1, 2)}) {
        auto a0 = bspline_factor(0, v);
        CHECK(a0 == LaurentPoly<Rational>(-1, {rat(1, 4), rat(1, 2), rat(1, 4)}));
    }
    for (int ell = 0; ell <= 4; ++ell)
        for (Rational v : kLevelValues)
            CHECK(bspline_factor(ell, v)(rat(1)) == rat(1));

    auto a1 = bspline_factor(1, rat(5, 4));
    CHECK(a1 == LaurentPoly<Rational>(-1, {rat(2, 9), rat(5, 9), rat(2, 9)}));

    // T_3(1/2) = -1 makes the third factor degenerate
    CHECK_THROWS_AS(bspline_factor(3, rat(1, 2)), degenerate_level_error);
    try {
        bspline_factor(3, rat(1, 2));
    } catch (const degenerate_level_error& e) {
        CHECK(e.index == 3);
    }
}

TEST_CASE("exponential b-spline symbol") {
    Rational v(5, 4);
    auto s0 = exp_bspline_symbol(0, v);
    CHECK(s0 == LaurentPoly<Rational>(-1, {rat(1, 2), rat(1), rat(1, 2)}));

    // the order-3 symbol expands to the known rational functions of v
    auto s3 = exp_bspline_symbol(3, v);
    CHECK(s3.lo() == -4);
    CHECK(s3.hi() == 4);
    CHECK(s3.coeff(-3) == rat(1) / (8 * v * (2 * v * v + v - 1)));
    CHECK(s3.coeff(-3) == rat(4, 135));
    CHECK(s3(rat(1)) == rat(2));

    // v = 1 collapses to the polynomial B-spline symbol
    for (int n = 0; n <= 4; ++n) {
        auto s = exp_bspline_symbol(n, rat(1));
        LaurentPoly<Rational> binom(0, {rat(1), rat(1)});
        auto want = pow(binom, 2 * n + 2)
                        .scaled(rat(1) / scalar_pow(rat(2), 2 * n + 1))
                        .shifted(-(n + 1));
        CHECK(s == want);
    }
}

TEST_CASE("coupling weight") {
    for (Rational v : kLevelValues) CHECK(coupling_weight(1, v) == rat(2) / (v * (v + 1)));
    CHECK(coupling_weight(1, rat(5, 4)) == rat(32, 45));

    // direct product evaluation of c_2 at v = 5/4
    Rational v(5, 4);
    Rational t2 = 2 * v * v - 1;
    Rational t3 = 4 * v * v * v - 3 * v;
    Rational c02 = (rat(1) - v) * rat(2) / ((t2 - t3) - (rat(1) - v));
    Rational c12 = (v - t2) * (v + 1) / ((t2 - t3) - (v - t2));
    CHECK(coupling_weight(2, v) == rat(4) / (t2 + 1) * c02 * c12);

    CHECK_THROWS_AS(coupling_weight(1, rat(1)), degenerate_level_error);
}

TEST_CASE("correction factor") {
    Rational v(5, 4);
    // b_1(z) = -(z^2+1)(z-1)^2 / (4 z^2 v (1+v))
    Rational w = rat(1) / (4 * v * (1 + v));
    LaurentPoly<Rational> zsq_plus_1(0, {rat(1), rat(0), rat(1)});
    LaurentPoly<Rational> zm1(0, {rat(-1), rat(1)});
    auto want = (zsq_plus_1 * zm1 * zm1).shifted(-2).scaled(-w);
    CHECK(correction_factor(1, v) == want);

    for (int i = 1; i <= 4; ++i) {
        auto b = correction_factor(i, v);
        CHECK(b.is_symmetric()); // b(z) = b(1/z)
    }
}

TEST_CASE("closed form symbol at the base order") {
    for (Rational v : kLevelValues) {
        auto mask = closed_form_symbol(1, v);
        Rational w = rat(1) / (8 * v * (1 + v));
        CHECK(mask.symbol.coeff(0) == rat(1));
        CHECK(mask.symbol.coeff(1) == rat(1, 2) + w);
        CHECK(mask.symbol.coeff(3) == -w);
        CHECK(mask.symbol.coeff(-1) == mask.symbol.coeff(1));
        CHECK(mask.symbol.coeff(-3) == mask.symbol.coeff(3));
        CHECK(mask.symbol.coeff(2) == rat(0));
    }
}

TEST_CASE("closed form symbol satisfies the mask invariants") {
    for (int n = 0; n <= 6; ++n)
        for (Rational v : kLevelValues) check_mask_invariants(closed_form_symbol(n, v));
}

TEST_CASE("nested and flat forms agree coefficient-wise") {
    for (int n = 1; n <= 6; ++n)
        for (Rational v : kLevelValues)
            CHECK(closed_form_symbol(n, v).symbol == closed_form_symbol_flat(n, v).symbol);
}

TEST_CASE("telescoping between consecutive orders") {
    for (int n = 2; n <= 6; ++n)
        for (Rational v : {rat(5, 4), rat(2, 3), rat(15, 16)}) {
            auto big = closed_form_symbol(n, v).symbol;
            auto small = closed_form_symbol(n - 1, v).symbol;
            auto step = exp_bspline_symbol(n - 1, v) * correction_factor(n, v);
            CHECK(big - small == step);
        }
}

TEST_CASE("coupling weights contract the factor products at the root") {
    // sum_i c_i(v) prod_l a_l(rho) a_l(-rho) = (1 - T_n(v))/(2 T_n(v)) at
    // rho = r^n, where (r + 1/r)/2 = v so that (rho + 1/rho)/2 = T_n(v)
    for (double v : {std::cos(std::numbers::pi / 12), 0.87, 1.25}) {
        Complex<double> r = v <= 1.0
                                ? Complex<double>(v, std::sqrt(1.0 - v * v))
                                : Complex<double>(v + std::sqrt(v * v - 1.0), 0.0);
        for (int n = 1; n <= 5; ++n) {
            Complex<double> rho = complex_pow(r, n);
            Complex<double> sum(0.0, 0.0);
            Complex<double> prod(1.0, 0.0);
            for (int i = 1; i <= n; ++i) {
                auto a = to_double_poly(bspline_factor(i - 1, v));
                prod = prod * a(rho) * a(-rho);
                sum = sum + prod * coupling_weight(i, v);
            }
            double tn = chebyshev_t(n, v);
            Complex<double> want((1.0 - tn) / (2.0 * tn), 0.0);
            CHECK((sum - want).abs() <= 1e-10);
        }
    }
}

TEST_CASE("closed form rejects degenerate levels") {
    CHECK_THROWS_AS(closed_form_symbol(2, rat(1)), degenerate_level_error);
    CHECK_THROWS_AS(closed_form_symbol(3, rat(1, 2)), degenerate_level_error);

    // 4 theta = pi: the coupling C_{3,4} pole makes orders 4 and 5
    // unbuildable at v = cos(pi/8)
    double v8 = std::cos(std::numbers::pi / 8);
    CHECK_NOTHROW(closed_form_symbol(3, v8));
    CHECK_THROWS_AS(closed_form_symbol(4, v8), degenerate_level_error);
    CHECK_THROWS_AS(closed_form_symbol(5, v8), degenerate_level_error);
    try {
        closed_form_symbol(4, v8);
    } catch (const degenerate_level_error& e) {
        CHECK(e.index == 4);
    }
}

TEST_CASE("dubuc-deslauriers limit mask") {
    auto dd1 = dubuc_deslauriers_symbol<Rational>(1);
    CHECK(dd1.symbol == LaurentPoly<Rational>(-3, {rat(-1, 16), rat(0), rat(9, 16), rat(1),
                                                    rat(9, 16), rat(0), rat(-1, 16)}));

    auto dd0 = dubuc_deslauriers_symbol<Rational>(0);
    CHECK(dd0.symbol == LaurentPoly<Rational>(-1, {rat(1, 2), rat(1), rat(1, 2)}));

    for (int n = 0; n <= 5; ++n) {
        auto dd = dubuc_deslauriers_symbol<Rational>(n);
        CHECK(dd.symbol(rat(1)) == rat(2));
        check_mask_invariants(dd);
    }
}

TEST_CASE("closed form converges to the limit mask") {
    for (int n = 1; n <= 4; ++n) {
        auto dd = dubuc_deslauriers_symbol<Rational>(n);
        Rational prev(-1);
        for (int m = 2; m <= 6; ++m) {
            Rational v = rat(1) - scalar_pow(rat(1, 4), m);
            Rational diff = max_abs_diff(closed_form_symbol(n, v).symbol, dd.symbol);
            if (m > 2) CHECK(diff < prev);
            prev = diff;
        }
    }
}

TEST_CASE("limit correction term matches the closed limit formula") {
    // lim b_1 = -(1+z^2)(1-z)^2/(8 z^2), approached along v -> 1
    LaurentPoly<Rational> zsq_plus_1(0, {rat(1), rat(0), rat(1)});
    LaurentPoly<Rational> one_minus_z(0, {rat(1), rat(-1)});
    auto limit = (zsq_plus_1 * one_minus_z * one_minus_z).shifted(-2).scaled(rat(-1, 8));
    Rational prev(-1);
    for (int m = 2; m <= 6; ++m) {
        Rational v = rat(1) - scalar_pow(rat(1, 4), m);
        Rational diff = max_abs_diff(correction_factor(1, v), limit);
        if (m > 2) CHECK(diff < prev);
        prev = diff;
    }
}

TEST_CASE("space conditions for the limit mask") {
    auto dd2 = dubuc_deslauriers_symbol<Rational>(2);
    auto gen = verify_conditions(dd2, ConditionMode::Generation);
    auto rep = verify_conditions(dd2, ConditionMode::Reproduction);
    for (const auto& [name, r] : gen.exact) CHECK(r == rat(0));
    for (const auto& [name, r] : rep.exact) CHECK(r == rat(0));
}

TEST_CASE("space conditions at a trigonometric level") {
    auto mask = closed_form_symbol<double>(1, std::cos(std::numbers::pi / 8));
    auto gen = verify_conditions(mask, ConditionMode::Generation);
    REQUIRE(gen.numeric.size() == 2);
    CHECK(gen.numeric[0].second <= 1e-12); // |m(-r)|
    CHECK(gen.numeric[1].second <= 1e-12); // |m(-1/r)|
    CHECK(gen.max_abs() <= 1e-12);
}

TEST_CASE("space conditions at a hyperbolic level") {
    // v = 5/4 has the exact root point r = 2, so every residual is exact
    auto mask = closed_form_symbol(3, rat(5, 4));
    auto rep = verify_conditions(mask, ConditionMode::Reproduction);
    REQUIRE(rep.exact.size() == 8); // m(1)-2, m'(1), then r^{+-j}, j = 1..3
    CHECK(rep.numeric.empty());
    for (const auto& [name, r] : rep.exact) CHECK(r == rat(0));

    auto gen = verify_conditions(mask, ConditionMode::Generation);
    CHECK(gen.numeric.empty());
    for (const auto& [name, r] : gen.exact) CHECK(r == rat(0));

    auto interp = verify_conditions(mask, ConditionMode::Interpolation);
    REQUIRE(interp.exact.size() == 1);
    CHECK(interp.exact[0].second == rat(0));

    // a level parameter whose root point is irrational goes the numeric way
    auto mask2 = closed_form_symbol(2, rat(4, 3));
    auto rep2 = verify_conditions(mask2, ConditionMode::Reproduction);
    CHECK(rep2.numeric.size() == 4);
    for (const auto& [name, r] : rep2.numeric) CHECK(r <= 1e-10);
}
