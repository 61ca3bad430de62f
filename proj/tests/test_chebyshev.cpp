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

#include "expsubdiv/chebyshev.hpp"

using namespace expsubdiv;

namespace {

Rational rat(long long p, long long q = 1) { return Rational(p) / Rational(q); }

const std::vector<Rational> kParams = {rat(2), rat(3, 2), rat(5), rat(7, 3)};

} // namespace

TEST_CASE("chebyshev recurrence values") {
    for (int n = 0; n <= 12; ++n) CHECK(chebyshev_t(n, rat(1)) == rat(1));
    CHECK(chebyshev_t(2, rat(5, 4)) == rat(17, 8));
    for (Rational x : {rat(0), rat(1, 2), rat(2)})
        CHECK(chebyshev_t(3, x) == 4 * x * x * x - 3 * x);
}

TEST_CASE("chebyshev argument vs parameter form") {
    CHECK(chebyshev_t_param(0, rat(9, 7)) == rat(1));
    CHECK(chebyshev_t_param(2, rat(2)) == rat(17, 8));
    CHECK(chebyshev_t(2, rat(5, 4)) == chebyshev_t_param(2, rat(2)));
    CHECK(chebyshev_t_param(1, rat(3)) == rat(5, 3));
    CHECK(chebyshev_t(1, rat(5, 3)) == chebyshev_t_param(1, rat(3)));

    for (const Rational& t : kParams) {
        Rational x = (t + rat(1) / t) / 2;
        for (int n = 0; n <= 16; ++n) CHECK(chebyshev_t(n, x) == chebyshev_t_param(n, t));
    }
    CHECK_THROWS_AS(chebyshev_t_param(3, rat(0)), std::domain_error);
}

TEST_CASE("cheb point consistency") {
    auto cp = ChebPoint<Rational>::from_parameter(rat(2));
    CHECK(cp.x == rat(5, 4));
    CHECK(cp.consistent());
    CHECK_THROWS_AS(ChebPoint<Rational>::from_parameter(rat(0)), std::domain_error);
}

TEST_CASE("coupling coefficient symbolic value") {
    // C_{0,1}(v) simplifies to 1/v
    for (Rational v : {rat(5, 4), rat(2, 3), rat(7, 5), rat(-3, 4), rat(9, 8)})
        CHECK(coupling_coefficient(0, 1, v) == rat(1) / v);
    CHECK(coupling_coefficient(0, 1, rat(5, 4)) == rat(4, 5));

    CHECK_THROWS_AS(coupling_coefficient(0, 1, rat(1)), degenerate_parameter_error);
    CHECK_THROWS_AS(coupling_coefficient(1, 1, rat(5, 4)), std::domain_error);
}

TEST_CASE("coupling sum closes to (1 - T_n)/(2 T_n)") {
    CHECK(coupling_sum(1, rat(5, 4)) == rat(-1, 10));
    CHECK(coupling_sum(2, rat(5, 4)) == rat(-9, 34));

    for (const Rational& t : kParams) {
        Rational x = (t + rat(1) / t) / 2;
        for (int n = 1; n <= 10; ++n) {
            Rational tn = chebyshev_t(n, x);
            CHECK(coupling_sum(n, x) == (rat(1) - tn) / (2 * tn));
        }
    }
}

TEST_CASE("coupling sum closes on the trigonometric grid") {
    for (int k = 1; k <= 36; k += 5) {
        double x = std::cos(std::numbers::pi * k / 37.0);
        for (int n = 1; n <= 8; ++n) {
            double tn = chebyshev_t(n, x);
            double residual = std::abs(coupling_sum(n, x) - (1.0 - tn) / (2.0 * tn));
            CHECK(residual <= 1e-10);
        }
    }
}

TEST_CASE("factored sum equals the series minus one") {
    CHECK(factored_phi_sum(1, rat(2)) == rat(4, 5) - 1);
    CHECK(factored_phi_sum(2, rat(3, 2)) == rat(72, 97) - 1);
    // -(1 - t^n)^2/(1 + t^{2n}) at n = 3, t = 2
    CHECK(factored_phi_sum(3, rat(2)) == rat(-49, 65));

    for (const Rational& t : kParams)
        for (int n = 1; n <= 8; ++n)
            CHECK(factored_phi_sum(n, t) == chebyshev_reciprocal_series(n, t) - rat(1));

    CHECK_THROWS_AS(factored_phi_sum(2, rat(0)), std::domain_error);
    CHECK_THROWS_AS(factored_phi_sum(2, rat(1)), std::domain_error);
    CHECK_THROWS_AS(factored_phi_sum(2, rat(-1)), std::domain_error);
}

TEST_CASE("reciprocal series evaluates to 2t^n/(1+t^2n)") {
    CHECK(chebyshev_reciprocal_series(0, rat(7, 3)) == rat(1));
    CHECK(chebyshev_reciprocal_series(1, rat(2)) == rat(4, 5));
    CHECK(chebyshev_reciprocal_series(2, rat(2)) == rat(8, 17));

    for (const Rational& t : kParams) {
        Rational x = (t + rat(1) / t) / 2;
        for (int n = 0; n <= 10; ++n) {
            Rational closed = 2 * scalar_pow(t, n) / (rat(1) + scalar_pow(t, 2 * n));
            CHECK(chebyshev_reciprocal_series(n, t) == closed);
            CHECK(chebyshev_reciprocal_series(n, t) * chebyshev_t(n, x) == rat(1));
        }
    }
}

TEST_CASE("series times the hypergeometric polynomial is one") {
    // 2F1(-n, n; 1/2; -(t-1)^2/(4t)) evaluates T_n at (t+1/t)/2
    for (const Rational& t : kParams) {
        Rational z = -(t - 1) * (t - 1) / (4 * t);
        for (int n = 0; n <= 10; ++n) {
            Rational f = hypergeom_2f1_terminating(n, rat(n), rat(1, 2), z);
            CHECK(chebyshev_reciprocal_series(n, t) * f == rat(1));
        }
    }
}

TEST_CASE("chebyshev composition T_m(T_n(x)) = T_mn(x)") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k < 10; ++k) {
                double x = -0.95 + 0.2 * k;
                double lhs = chebyshev_t(m, chebyshev_t(n, x));
                double rhs = chebyshev_t(m * n, x);
                CHECK(std::abs(lhs - rhs) <= 1e-10);
            }
}
