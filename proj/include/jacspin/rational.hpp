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

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace jacspin {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number with a canonical representation:
/// denominator > 0, gcd(num, den) == 1, zero is 0/1.
///
/// boost's cpp_rational refuses negative denominators outright, so the
/// (num, den) normalization is done here and cpp_int only supplies the
/// arbitrary-precision integer arithmetic.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(int value) : num_(value), den_(1) {}            // NOLINT implicit
    Rational(Int value) : num_(std::move(value)), den_(1) {} // NOLINT implicit

    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const { return Rational(unchecked(), -num_, den_); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    Rational inverse() const {
        if (num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(unchecked(), sign() < 0 ? -den_ : den_,
                        sign() < 0 ? -num_ : num_);
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

  private:
    struct unchecked {}; // representation already canonical

    Rational(unchecked, Int num, Int den)
        : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

inline std::string to_string(const Rational& r) {
    std::string s = r.num().str();
    if (!r.is_integer()) s += "/" + r.den().str();
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << to_string(r);
}

inline Rational scalar_half(const Rational& v) { return v / Rational(2); }
inline Rational scalar_inverse(const Rational& v) { return v.inverse(); }

/// Rationals print as a single token, so unit coefficients need no parens.
inline bool scalar_atomic(const Rational&) { return true; }

/// 2^n as an exact rational (n >= 0).
inline Rational pow2(long long n) {
    if (n < 0) throw std::out_of_range("pow2: negative exponent");
    return Rational(Int(1) << static_cast<unsigned>(n));
}

/// (-1)^n for any integer n.
inline Rational alt_sign(long long n) {
    return (n % 2 == 0) ? Rational(1) : Rational(-1);
}

} // namespace jacspin
