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

#include "polynomial.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace jacspin {

/// Rational function num/den over UniPoly.
///
/// Canonical form: den is monic, gcd(num, den) = 1, zero is 0/1. The monic
/// constraint pushes constant factors into the numerator, so equality is
/// plain componentwise comparison.
class PolyFrac {
  public:
    PolyFrac() : num_(), den_(UniPoly(1)) {}
    PolyFrac(int c) : num_(UniPoly(c)), den_(UniPoly(1)) {}      // NOLINT
    PolyFrac(Rational c) : num_(UniPoly(std::move(c))), den_(UniPoly(1)) {} // NOLINT
    PolyFrac(UniPoly p) : num_(std::move(p)), den_(UniPoly(1)) {} // NOLINT

    PolyFrac(UniPoly num, UniPoly den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_ == UniPoly(1); }

    /// The underlying polynomial; throws unless den == 1.
    const UniPoly& as_poly() const {
        if (!is_poly()) throw std::domain_error("PolyFrac: denominator is not 1");
        return num_;
    }

    PolyFrac operator-() const {
        PolyFrac r(*this);
        r.num_ = -r.num_;
        return r;
    }

    PolyFrac& operator+=(const PolyFrac& o) {
        return *this = PolyFrac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    PolyFrac& operator-=(const PolyFrac& o) {
        return *this = PolyFrac(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    PolyFrac& operator*=(const PolyFrac& o) {
        return *this = PolyFrac(num_ * o.num_, den_ * o.den_);
    }
    PolyFrac& operator/=(const PolyFrac& o) {
        if (o.is_zero()) throw std::domain_error("PolyFrac: division by zero");
        return *this = PolyFrac(num_ * o.den_, den_ * o.num_);
    }

    friend PolyFrac operator+(PolyFrac a, const PolyFrac& b) { return a += b; }
    friend PolyFrac operator-(PolyFrac a, const PolyFrac& b) { return a -= b; }
    friend PolyFrac operator*(PolyFrac a, const PolyFrac& b) { return a *= b; }
    friend PolyFrac operator/(PolyFrac a, const PolyFrac& b) { return a /= b; }

    friend bool operator==(const PolyFrac& a, const PolyFrac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const PolyFrac& a, const PolyFrac& b) {
        return !(a == b);
    }

    PolyFrac inverse() const {
        if (is_zero()) throw std::domain_error("PolyFrac: division by zero");
        return PolyFrac(den_, num_);
    }

    /// Exact evaluation; throws std::domain_error at a pole.
    Rational eval(const Rational& at) const {
        Rational d = den_.eval(at);
        if (d.is_zero()) throw std::domain_error("PolyFrac: evaluation at a pole");
        return num_.eval(at) / d;
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("PolyFrac: zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly(1);
            return;
        }
        if (!den_.is_constant()) {
            UniPoly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = divmod(num_, g).first;
                den_ = divmod(den_, g).first;
            }
        }
        Rational lead = den_.leading();
        if (!lead.is_one()) {
            Rational inv = lead.inverse();
            num_ *= inv;
            den_ *= inv;
        }
    }

    UniPoly num_;
    UniPoly den_;
};

inline std::string to_string(const PolyFrac& f) {
    if (f.is_poly()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const PolyFrac& f) {
    return os << to_string(f);
}

inline PolyFrac scalar_half(const PolyFrac& f) { return f * PolyFrac(Rational(1, 2)); }
inline PolyFrac scalar_inverse(const PolyFrac& f) { return f.inverse(); }

inline bool scalar_atomic(const PolyFrac& f) {
    return f.is_poly() && f.num().is_constant();
}

} // namespace jacspin
