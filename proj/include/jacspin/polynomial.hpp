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

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jacspin {

/// Dense univariate polynomial in x over Rational.
///
/// Invariant: the coefficient vector carries no trailing zeros, so the zero
/// polynomial is the empty vector and degree() is size()-1 (or -1 for zero).
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(int c) : UniPoly(Rational(c)) {} // NOLINT implicit
    UniPoly(Rational c) {                    // NOLINT implicit
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        trim();
    }

    static UniPoly monomial(Rational coeff, std::size_t deg) {
        if (coeff.is_zero()) return UniPoly();
        std::vector<Rational> c(deg + 1, Rational(0));
        c[deg] = std::move(coeff);
        return UniPoly(std::move(c));
    }
    static UniPoly variable() { return monomial(Rational(1), 1); }

    /// Degree as a plain int; the zero polynomial has degree -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational leading() const {
        if (c_.empty()) throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) {
        return !(a == b);
    }

    /// Horner evaluation at an exact rational point.
    Rational eval(const Rational& at) const {
        Rational acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * at + c_[k];
        return acc;
    }

    /// As a rational constant; throws unless degree <= 0.
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("UniPoly: not a constant polynomial");
        return c_.empty() ? Rational(0) : c_[0];
    }

    /// Quotient and remainder with deg(rem) < deg(divisor).
    friend std::pair<UniPoly, UniPoly> divmod(UniPoly a, const UniPoly& b) {
        if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        UniPoly q;
        Rational lead_inv = b.leading().inverse();
        while (!a.is_zero() && a.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
            Rational factor = a.leading() * lead_inv;
            UniPoly term = monomial(factor, shift);
            q += term;
            a -= term * b;
        }
        return {std::move(q), std::move(a)};
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    UniPoly monic() const {
        if (is_zero()) return UniPoly();
        return *this * leading().inverse();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline std::string to_string(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        Rational c = p.coeff(k);
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        Rational a = c.abs();
        if (k == 0) {
            s += to_string(a);
        } else {
            if (!a.is_one()) s += to_string(a) + "*";
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    return os << to_string(p);
}

inline UniPoly scalar_half(const UniPoly& p) { return p * Rational(1, 2); }

inline bool scalar_atomic(const UniPoly& p) { return p.is_constant(); }

} // namespace jacspin
