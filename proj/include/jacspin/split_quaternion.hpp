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
#include <stdexcept>
#include <string>
#include <utility>

namespace jacspin {

/// Split quaternion a + b*i + c*j + d*k over Rational, with
/// i^2 = -1, j^2 = k^2 = +1 and ij = k = -ji, jk = -i, kj = i, ki = j.
///
/// Unlike Hamilton's quaternions the norm a^2 + b^2 - c^2 - d^2 is
/// indefinite, so the ring has zero divisors (e.g. N(1 + j) = 0).
class SplitQuat {
  public:
    SplitQuat() : a_(0), b_(0), c_(0), d_(0) {}
    SplitQuat(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
    SplitQuat(int a) : SplitQuat(Rational(a), 0, 0, 0) {} // NOLINT implicit
    SplitQuat(Rational a) : SplitQuat(std::move(a), 0, 0, 0) {} // NOLINT

    static SplitQuat i() { return SplitQuat(0, 1, 0, 0); }
    static SplitQuat j() { return SplitQuat(0, 0, 1, 0); }
    static SplitQuat k() { return SplitQuat(0, 0, 0, 1); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool is_zero() const {
        return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
    }

    SplitQuat conj() const { return SplitQuat(a_, -b_, -c_, -d_); }

    /// N(q) = q * conj(q) = a^2 + b^2 - c^2 - d^2. Computed both ways; the
    /// product route must collapse to the scalar formula.
    Rational norm() const {
        Rational direct = a_ * a_ + b_ * b_ - c_ * c_ - d_ * d_;
        SplitQuat product = *this * conj();
        if (!(product == SplitQuat(direct)))
            throw std::logic_error("SplitQuat: norm routes disagree");
        return direct;
    }

    SplitQuat operator-() const { return SplitQuat(-a_, -b_, -c_, -d_); }

    SplitQuat& operator+=(const SplitQuat& o) {
        a_ += o.a_;
        b_ += o.b_;
        c_ += o.c_;
        d_ += o.d_;
        return *this;
    }
    SplitQuat& operator-=(const SplitQuat& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        c_ -= o.c_;
        d_ -= o.d_;
        return *this;
    }
    SplitQuat& operator*=(const SplitQuat& o) { return *this = *this * o; }
    SplitQuat& operator*=(const Rational& s) {
        a_ *= s;
        b_ *= s;
        c_ *= s;
        d_ *= s;
        return *this;
    }

    friend SplitQuat operator+(SplitQuat p, const SplitQuat& q) { return p += q; }
    friend SplitQuat operator-(SplitQuat p, const SplitQuat& q) { return p -= q; }
    friend SplitQuat operator*(SplitQuat p, const Rational& s) { return p *= s; }
    friend SplitQuat operator*(const Rational& s, SplitQuat p) { return p *= s; }

    friend SplitQuat operator*(const SplitQuat& p, const SplitQuat& q) {
        // 1*i = i, i*i = -1, j*j = k*k = 1,
        // i*j = k, j*i = -k, j*k = -i, k*j = i, k*i = j, i*k = -j.
        return SplitQuat(
            p.a_ * q.a_ - p.b_ * q.b_ + p.c_ * q.c_ + p.d_ * q.d_,
            p.a_ * q.b_ + p.b_ * q.a_ - p.c_ * q.d_ + p.d_ * q.c_,
            p.a_ * q.c_ + p.c_ * q.a_ - p.b_ * q.d_ + p.d_ * q.b_,
            p.a_ * q.d_ + p.d_ * q.a_ + p.b_ * q.c_ - p.c_ * q.b_);
    }

    friend bool operator==(const SplitQuat& p, const SplitQuat& q) {
        return p.a_ == q.a_ && p.b_ == q.b_ && p.c_ == q.c_ && p.d_ == q.d_;
    }
    friend bool operator!=(const SplitQuat& p, const SplitQuat& q) {
        return !(p == q);
    }

  private:
    Rational a_, b_, c_, d_;
};

inline std::string to_string(const SplitQuat& q) {
    if (q.is_zero()) return "0";
    std::string s;
    auto append = [&s](const Rational& coeff, const char* unit) {
        if (coeff.is_zero()) return;
        std::string term;
        if (unit[0] == '\0') {
            term = to_string(coeff);
        } else if (coeff.is_one()) {
            term = unit;
        } else if ((-coeff).is_one()) {
            term = std::string("-") + unit;
        } else {
            term = to_string(coeff) + unit;
        }
        if (s.empty() || term[0] == '-')
            s += term;
        else
            s += "+" + term;
    };
    append(q.a(), "");
    append(q.b(), "i");
    append(q.c(), "j");
    append(q.d(), "k");
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const SplitQuat& q) {
    return os << to_string(q);
}

} // namespace jacspin
