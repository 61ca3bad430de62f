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
#include <concepts>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "expsubdiv/errors.hpp"

namespace expsubdiv {

/// Exact field realization: arbitrary-precision rational numbers.
/// Expression templates are disabled so arithmetic composes with
/// generic code that deduces the scalar type from operands.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Scalar contract shared by the two field realizations.
///
/// Equality is the realization's own notion: exact comparison for
/// Rational, |a-b| <= atol + rtol*max(|a|,|b|) for double (defaults
/// atol = rtol = 1e-12). `degenerate_divisor` is the centralized test
/// used before any division whose failure must surface as a typed
/// degeneracy error: exact zero for Rational, magnitude < 1e-12 for
/// double.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long long v) { return Rational(v); }

    static bool eq(const Rational& a, const Rational& b) { return a == b; }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static bool degenerate_divisor(const Rational& a) { return a.is_zero(); }

    static Rational abs(const Rational& a) { return boost::multiprecision::abs(a); }
    static double to_double(const Rational& a) { return a.convert_to<double>(); }

    static std::string str(const Rational& a) {
        std::ostringstream os;
        os << boost::multiprecision::numerator(a);
        if (boost::multiprecision::denominator(a) != 1)
            os << '/' << boost::multiprecision::denominator(a);
        return os.str();
    }
};

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static constexpr double atol = 1e-12;
    static constexpr double rtol = 1e-12;
    static constexpr double divisor_floor = 1e-12;

    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long long v) { return static_cast<double>(v); }

    static bool eq(double a, double b) {
        return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
    }
    static bool is_zero(double a) { return std::abs(a) <= atol; }
    static bool degenerate_divisor(double a) { return std::abs(a) < divisor_floor; }

    static double abs(double a) { return std::abs(a); }
    static double to_double(double a) { return a; }

    static std::string str(double a) {
        std::ostringstream os;
        os.precision(17);
        os << a;
        return os.str();
    }
};

// Extended-precision variant used internally where binary64 summation
// would lose the last digits the tests pin down; same contract as double.
template <>
struct scalar_traits<long double> {
    static constexpr bool is_exact = false;
    static constexpr long double atol = 1e-12L;
    static constexpr long double rtol = 1e-12L;
    static constexpr long double divisor_floor = 1e-12L;

    static long double zero() { return 0.0L; }
    static long double one() { return 1.0L; }
    static long double from_int(long long v) { return static_cast<long double>(v); }

    static bool eq(long double a, long double b) {
        return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
    }
    static bool is_zero(long double a) { return std::abs(a) <= atol; }
    static bool degenerate_divisor(long double a) { return std::abs(a) < divisor_floor; }

    static long double abs(long double a) { return std::abs(a); }
    static double to_double(long double a) { return static_cast<double>(a); }

    static std::string str(long double a) {
        std::ostringstream os;
        os.precision(21);
        os << a;
        return os.str();
    }
};

template <class S>
concept ScalarField = requires(const S& a) {
    { scalar_traits<S>::zero() } -> std::convertible_to<S>;
    { scalar_traits<S>::eq(a, a) } -> std::convertible_to<bool>;
};

/// Exact rational square root when one exists.
inline std::optional<Rational> exact_sqrt(const Rational& value) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    if (value < 0) return std::nullopt;
    auto num = numerator(value);
    auto den = denominator(value);
    auto sn = boost::multiprecision::sqrt(num);
    auto sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn) / Rational(sd);
}

/// Integer power with negative exponents allowed (base must be nonzero
/// for e < 0).
template <ScalarField S>
S scalar_pow(const S& base, long long e) {
    using traits = scalar_traits<S>;
    if (e < 0) {
        if (traits::is_zero(base))
            throw std::domain_error("scalar_pow: negative power of zero");
        return traits::one() / scalar_pow(base, -e);
    }
    S acc = traits::one();
    S b = base;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k != 0) {
        if (k & 1ULL) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

/// Complex extension (re, im) of a scalar realization, used only for
/// evaluation; no complex-coefficient polynomials exist in the library.
template <ScalarField S>
struct Complex {
    S re = scalar_traits<S>::zero();
    S im = scalar_traits<S>::zero();

    Complex() = default;
    Complex(S re, S im) : re(std::move(re)), im(std::move(im)) {}
    static Complex from_real(const S& r) { return Complex(r, scalar_traits<S>::zero()); }

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator-() const { return {-re, -im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator*(const S& s) const { return {re * s, im * s}; }

    S squared_modulus() const { return re * re + im * im; }

    Complex reciprocal() const {
        S n2 = squared_modulus();
        if (scalar_traits<S>::is_zero(n2))
            throw std::domain_error("Complex: reciprocal of zero");
        return {re / n2, -im / n2};
    }
    Complex operator/(const Complex& o) const { return *this * o.reciprocal(); }

    bool is_zero() const {
        return scalar_traits<S>::is_zero(re) && scalar_traits<S>::is_zero(im);
    }
    double abs() const {
        return std::sqrt(scalar_traits<S>::to_double(squared_modulus()));
    }
};

template <ScalarField S>
Complex<S> complex_pow(const Complex<S>& base, long long e) {
    if (e < 0) return complex_pow(base.reciprocal(), -e);
    Complex<S> acc = Complex<S>::from_real(scalar_traits<S>::one());
    Complex<S> b = base;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k != 0) {
        if (k & 1ULL) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

/// Parse "p/q" or "p" into an exact rational. Throws std::invalid_argument
/// on malformed input or a zero denominator.
inline Rational rational_from_string(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(boost::multiprecision::cpp_int(text));
        }
        boost::multiprecision::cpp_int num(text.substr(0, slash));
        boost::multiprecision::cpp_int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("rational_from_string: ") + e.what());
    }
}

} // namespace expsubdiv
