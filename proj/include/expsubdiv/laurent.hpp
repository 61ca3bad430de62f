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

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "expsubdiv/scalar.hpp"

namespace expsubdiv {

/// Finitely supported Laurent polynomial over a scalar field.
///
/// Dense storage with an explicit lowest exponent: `coeff(lo()+i)` is
/// stored at index i. Instances are normalized after every operation
/// (leading/trailing zero coefficients trimmed under the realization's
/// `is_zero`), so equality is structural. The zero polynomial has empty
/// storage and lo() == 0.
template <ScalarField S>
class LaurentPoly {
public:
    using traits = scalar_traits<S>;

    LaurentPoly() = default;

    LaurentPoly(int lo, std::vector<S> coeffs) : lo_(lo), c_(std::move(coeffs)) {
        normalize();
    }

    LaurentPoly(int lo, std::initializer_list<S> coeffs)
        : LaurentPoly(lo, std::vector<S>(coeffs)) {}

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(traits::one()); }
    static LaurentPoly constant(const S& c) { return LaurentPoly(0, std::vector<S>{c}); }
    static LaurentPoly monomial(int exponent, const S& c) {
        return LaurentPoly(exponent, std::vector<S>{c});
    }

    bool is_zero() const { return c_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }

    /// Coefficient of z^j (zero outside the stored support).
    const S& coeff(int j) const {
        static const S kZero = traits::zero();
        if (j < lo_ || j > hi()) return kZero;
        return c_[static_cast<std::size_t>(j - lo_)];
    }

    const std::vector<S>& coeffs() const { return c_; }

    LaurentPoly operator+(const LaurentPoly& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        int nlo = std::min(lo_, o.lo_);
        int nhi = std::max(hi(), o.hi());
        std::vector<S> out(static_cast<std::size_t>(nhi - nlo + 1), traits::zero());
        for (int j = lo_; j <= hi(); ++j) out[static_cast<std::size_t>(j - nlo)] = coeff(j);
        for (int j = o.lo_; j <= o.hi(); ++j)
            out[static_cast<std::size_t>(j - nlo)] = out[static_cast<std::size_t>(j - nlo)] + o.coeff(j);
        return LaurentPoly(nlo, std::move(out));
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (S& c : r.c_) c = -c;
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

    LaurentPoly operator*(const LaurentPoly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<S> out(c_.size() + o.c_.size() - 1, traits::zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                out[i + j] = out[i + j] + c_[i] * o.c_[j];
        return LaurentPoly(lo_ + o.lo_, std::move(out));
    }

    /// Scale by a field element.
    LaurentPoly scaled(const S& factor) const {
        if (traits::is_zero(factor)) return zero();
        LaurentPoly r = *this;
        for (S& c : r.c_) c = c * factor;
        r.normalize();
        return r;
    }

    /// Multiply by z^d.
    LaurentPoly shifted(int d) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.lo_ += d;
        return r;
    }

    /// Evaluate at a nonzero scalar point.
    S operator()(const S& z) const {
        if (z == traits::zero())
            throw std::domain_error("LaurentPoly: evaluation at z = 0");
        if (is_zero()) return traits::zero();
        S acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * z + c_[i];
        return acc * scalar_pow(z, lo_);
    }

    /// Evaluate at a nonzero complex point.
    Complex<S> operator()(const Complex<S>& z) const {
        if (traits::is_zero(z.re) && traits::is_zero(z.im))
            throw std::domain_error("LaurentPoly: evaluation at z = 0");
        Complex<S> acc = Complex<S>::from_real(traits::zero());
        if (is_zero()) return acc;
        acc = Complex<S>::from_real(c_.back());
        for (std::size_t i = c_.size() - 1; i-- > 0;)
            acc = acc * z + Complex<S>::from_real(c_[i]);
        return acc * complex_pow(z, lo_);
    }

    /// Term-wise d/dz, including negative exponents.
    LaurentPoly derivative() const {
        if (is_zero()) return zero();
        std::vector<S> out(c_.size(), traits::zero());
        for (int j = lo_; j <= hi(); ++j)
            out[static_cast<std::size_t>(j - lo_)] = coeff(j) * traits::from_int(j);
        return LaurentPoly(lo_ - 1, std::move(out));
    }

    /// p(-z): the coefficient of z^j picks up a factor (-1)^j.
    LaurentPoly reflected() const {
        LaurentPoly r = *this;
        for (int j = r.lo_; j <= r.hi(); ++j)
            if (j % 2 != 0) r.c_[static_cast<std::size_t>(j - r.lo_)] = -r.coeff(j);
        return r;
    }

    /// True iff the coefficient sequence is palindromic about exponent 0,
    /// i.e. p(z) = p(1/z) under the realization's equality.
    bool is_symmetric() const {
        int m = std::max(std::abs(lo_), std::abs(hi()));
        for (int j = 1; j <= m; ++j)
            if (!traits::eq(coeff(j), coeff(-j))) return false;
        return true;
    }

    /// Coefficient-wise equality over the union of supports, under the
    /// realization's equality.
    bool equals(const LaurentPoly& o) const {
        int nlo = std::min(lo_, o.lo_);
        int nhi = std::max(hi(), o.hi());
        for (int j = nlo; j <= nhi; ++j)
            if (!traits::eq(coeff(j), o.coeff(j))) return false;
        return true;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.equals(b); }

private:
    void normalize() {
        std::size_t first = 0;
        while (first < c_.size() && traits::is_zero(c_[first])) ++first;
        std::size_t last = c_.size();
        while (last > first && traits::is_zero(c_[last - 1])) --last;
        if (first == last) {
            c_.clear();
            lo_ = 0;
            return;
        }
        if (first > 0 || last < c_.size()) {
            std::vector<S> kept(c_.begin() + static_cast<std::ptrdiff_t>(first),
                                c_.begin() + static_cast<std::ptrdiff_t>(last));
            lo_ += static_cast<int>(first);
            c_ = std::move(kept);
        }
    }

    int lo_ = 0;
    std::vector<S> c_;
};

template <ScalarField S>
LaurentPoly<S> pow(const LaurentPoly<S>& p, int e) {
    if (e < 0) throw std::domain_error("LaurentPoly pow: negative exponent");
    LaurentPoly<S> acc = LaurentPoly<S>::one();
    for (int i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

/// Largest |coefficient difference| over the union of supports.
template <ScalarField S>
S max_abs_diff(const LaurentPoly<S>& a, const LaurentPoly<S>& b) {
    using traits = scalar_traits<S>;
    int nlo = std::min(a.lo(), b.lo());
    int nhi = std::max(a.hi(), b.hi());
    S best = traits::zero();
    for (int j = nlo; j <= nhi; ++j) {
        S d = traits::abs(a.coeff(j) - b.coeff(j));
        if (best < d) best = d;
    }
    return best;
}

/// Convert a polynomial to the binary64 realization.
template <ScalarField S>
LaurentPoly<double> to_double_poly(const LaurentPoly<S>& p) {
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const S& x : p.coeffs()) c.push_back(scalar_traits<S>::to_double(x));
    return LaurentPoly<double>(p.lo(), std::move(c));
}

} // namespace expsubdiv
