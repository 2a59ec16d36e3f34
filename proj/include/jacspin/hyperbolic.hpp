/*
   Copyright 2026 the jacspin authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "rational.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace jacspin {

/// Hyperbolic (split-complex) number re + hy*u with u^2 = +1, generic over a
/// commutative scalar ring S (Rational, UniPoly, PolyFrac, ExtElem).
///
/// u^2 = +1 lives only in operator*; equality is componentwise. The
/// idempotents e = (1+u)/2 and e* = (1-u)/2 diagonalize the ring: split()
/// maps to coordinates (re+hy, re-hy) where multiplication is componentwise.
template <class S>
class Hyperbolic {
  public:
    Hyperbolic() = default;
    Hyperbolic(S re) : re_(std::move(re)) {} // NOLINT implicit
    Hyperbolic(S re, S hy) : re_(std::move(re)), hy_(std::move(hy)) {}

    static Hyperbolic unit() { return Hyperbolic(S(0), S(1)); }

    const S& re() const { return re_; }
    const S& hy() const { return hy_; }

    bool is_zero() const { return re_.is_zero() && hy_.is_zero(); }

    Hyperbolic conj() const { return Hyperbolic(re_, -hy_); }

    Hyperbolic operator-() const { return Hyperbolic(-re_, -hy_); }

    Hyperbolic& operator+=(const Hyperbolic& o) {
        re_ += o.re_;
        hy_ += o.hy_;
        return *this;
    }
    Hyperbolic& operator-=(const Hyperbolic& o) {
        re_ -= o.re_;
        hy_ -= o.hy_;
        return *this;
    }
    Hyperbolic& operator*=(const Hyperbolic& o) {
        S re = re_ * o.re_ + hy_ * o.hy_;
        S hy = re_ * o.hy_ + hy_ * o.re_;
        re_ = std::move(re);
        hy_ = std::move(hy);
        return *this;
    }
    Hyperbolic& operator*=(const S& s) {
        re_ *= s;
        hy_ *= s;
        return *this;
    }

    friend Hyperbolic operator+(Hyperbolic a, const Hyperbolic& b) { return a += b; }
    friend Hyperbolic operator-(Hyperbolic a, const Hyperbolic& b) { return a -= b; }
    friend Hyperbolic operator*(Hyperbolic a, const Hyperbolic& b) { return a *= b; }
    friend Hyperbolic operator*(Hyperbolic a, const S& s) { return a *= s; }
    friend Hyperbolic operator*(const S& s, Hyperbolic a) { return a *= s; }

    friend bool operator==(const Hyperbolic& a, const Hyperbolic& b) {
        return a.re_ == b.re_ && a.hy_ == b.hy_;
    }
    friend bool operator!=(const Hyperbolic& a, const Hyperbolic& b) {
        return !(a == b);
    }

    /// Idempotent coordinates (re+hy, re-hy).
    std::pair<S, S> split() const { return {re_ + hy_, re_ - hy_}; }

    /// Inverse of split(); divides by 2, exact in every scalar ring used here.
    static Hyperbolic join(const S& plus, const S& minus) {
        return Hyperbolic(scalar_half(plus + minus), scalar_half(plus - minus));
    }

  private:
    S re_{};
    S hy_{};
};

/// The hy*u summand as a string: "u", "-u", "3u", "-1/3u", "(1 + 2*x)u".
template <class S>
std::string hyper_unit_term(const S& hy) {
    using jacspin::to_string;
    if (scalar_atomic(hy)) {
        std::string body = to_string(hy);
        if (body == "1") return "u";
        if (body == "-1") return "-u";
        return body + "u";
    }
    return "(" + to_string(hy) + ")u";
}

template <class S>
std::string to_string(const Hyperbolic<S>& h) {
    using jacspin::to_string;
    if (h.is_zero()) return "0";
    std::string s;
    if (!h.re().is_zero()) s = to_string(h.re());
    if (!h.hy().is_zero()) {
        std::string term = hyper_unit_term(h.hy());
        if (s.empty())
            s = term;
        else if (term[0] == '-')
            s += term;
        else
            s += "+" + term;
    }
    return s;
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Hyperbolic<S>& h) {
    return os << to_string(h);
}

using HypScalar = Hyperbolic<Rational>;

} // namespace jacspin
