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

#include "poly_fraction.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace jacspin {

/// Element p + q*c of the quadratic extension of the rational-function field,
/// where the adjoined root satisfies c^2 = 8x + 1.
///
/// 8x + 1 is not a square in Q(x), so the extension is a field: every nonzero
/// element is invertible by rationalizing with the conjugate p - q*c, whose
/// norm p^2 - (8x+1) q^2 vanishes only at zero.
class ExtElem {
  public:
    ExtElem() = default;
    ExtElem(int v) : base_(v) {}                  // NOLINT implicit
    ExtElem(Rational v) : base_(std::move(v)) {}  // NOLINT implicit
    ExtElem(UniPoly v) : base_(std::move(v)) {}   // NOLINT implicit
    ExtElem(PolyFrac v) : base_(std::move(v)) {}  // NOLINT implicit
    ExtElem(PolyFrac base, PolyFrac surd)
        : base_(std::move(base)), surd_(std::move(surd)) {}

    /// The square of the adjoined root: 8x + 1.
    static const UniPoly& discriminant() {
        static const UniPoly d =
            UniPoly(std::vector<Rational>{Rational(1), Rational(8)});
        return d;
    }

    /// The adjoined root c itself.
    static ExtElem root() { return ExtElem(PolyFrac(0), PolyFrac(1)); }

    /// alpha = (1 + c)/2, the "positive" root of t^2 = t + 2x.
    static ExtElem alpha() {
        return ExtElem(PolyFrac(Rational(1, 2)), PolyFrac(Rational(1, 2)));
    }

    /// beta = (1 - c)/2, the conjugate root; alpha*beta = -2x, alpha+beta = 1.
    static ExtElem beta() {
        return ExtElem(PolyFrac(Rational(1, 2)), PolyFrac(Rational(-1, 2)));
    }

    const PolyFrac& base() const { return base_; }
    const PolyFrac& surd() const { return surd_; }

    bool is_zero() const { return base_.is_zero() && surd_.is_zero(); }
    bool is_surd_free() const { return surd_.is_zero(); }

    ExtElem conj() const { return ExtElem(base_, -surd_); }

    /// Field norm (p + qc)(p - qc) = p^2 - (8x+1) q^2, a rational function.
    PolyFrac norm() const {
        return base_ * base_ - PolyFrac(discriminant()) * surd_ * surd_;
    }

    ExtElem operator-() const { return ExtElem(-base_, -surd_); }

    ExtElem& operator+=(const ExtElem& o) {
        base_ += o.base_;
        surd_ += o.surd_;
        return *this;
    }
    ExtElem& operator-=(const ExtElem& o) {
        base_ -= o.base_;
        surd_ -= o.surd_;
        return *this;
    }
    ExtElem& operator*=(const ExtElem& o) {
        PolyFrac d(discriminant());
        PolyFrac nb = base_ * o.base_ + d * surd_ * o.surd_;
        PolyFrac ns = base_ * o.surd_ + surd_ * o.base_;
        base_ = std::move(nb);
        surd_ = std::move(ns);
        return *this;
    }
    ExtElem& operator/=(const ExtElem& o) { return *this *= o.inverse(); }

    friend ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
    friend ExtElem operator-(ExtElem a, const ExtElem& b) { return a -= b; }
    friend ExtElem operator*(ExtElem a, const ExtElem& b) { return a *= b; }
    friend ExtElem operator/(ExtElem a, const ExtElem& b) { return a /= b; }

    friend bool operator==(const ExtElem& a, const ExtElem& b) {
        return a.base_ == b.base_ && a.surd_ == b.surd_;
    }
    friend bool operator!=(const ExtElem& a, const ExtElem& b) {
        return !(a == b);
    }

    ExtElem inverse() const {
        PolyFrac n = norm();
        if (n.is_zero()) throw std::domain_error("ExtElem: division by zero");
        PolyFrac inv = n.inverse();
        return ExtElem(base_ * inv, -surd_ * inv);
    }

    ExtElem pow(unsigned long long e) const {
        ExtElem acc(1);
        ExtElem b(*this);
        while (e > 0) {
            if (e & 1ULL) acc *= b;
            b *= b;
            e >>= 1ULL;
        }
        return acc;
    }

  private:
    PolyFrac base_;
    PolyFrac surd_;
};

inline std::string to_string(const ExtElem& e) {
    if (e.is_surd_free()) return to_string(e.base());
    std::string s = "(" + to_string(e.surd()) + ")*c";
    if (e.base().is_zero()) return s;
    return "(" + to_string(e.base()) + ") + " + s;
}

inline std::ostream& operator<<(std::ostream& os, const ExtElem& e) {
    return os << to_string(e);
}

inline ExtElem scalar_half(const ExtElem& e) {
    return ExtElem(scalar_half(e.base()), scalar_half(e.surd()));
}
inline ExtElem scalar_inverse(const ExtElem& e) { return e.inverse(); }

inline bool scalar_atomic(const ExtElem& e) {
    return e.is_surd_free() && scalar_atomic(e.base());
}

} // namespace jacspin
