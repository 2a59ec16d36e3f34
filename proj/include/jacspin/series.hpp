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

#include "sequences.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jacspin {

/// Formal power series truncated at order N: coefficients of x^0 .. x^N,
/// exact arithmetic modulo x^{N+1}.
template <class T>
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t order)
        : order_(order), coeffs_(order + 1, T()) {}
    TruncatedSeries(std::size_t order, std::vector<T> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != order_ + 1)
            throw std::invalid_argument("TruncatedSeries: order/coefficient mismatch");
    }

    std::size_t order() const { return order_; }
    const T& coeff(std::size_t k) const {
        if (k > order_) throw std::out_of_range("TruncatedSeries: index beyond order");
        return coeffs_[k];
    }
    void set_coeff(std::size_t k, T value) {
        if (k > order_) throw std::out_of_range("TruncatedSeries: index beyond order");
        coeffs_[k] = std::move(value);
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        return a -= b;
    }

    /// Cauchy product, truncated.
    friend TruncatedSeries operator*(const TruncatedSeries& a,
                                     const TruncatedSeries& b) {
        a.check_order(b);
        TruncatedSeries r(a.order_);
        for (std::size_t n = 0; n <= a.order_; ++n) {
            T acc{};
            for (std::size_t k = 0; k <= n; ++k)
                acc += a.coeffs_[k] * b.coeffs_[n - k];
            r.coeffs_[n] = std::move(acc);
        }
        return r;
    }

    /// Division by a unit series (constant term invertible).
    friend TruncatedSeries operator/(const TruncatedSeries& a,
                                     const TruncatedSeries& b) {
        a.check_order(b);
        if (b.coeffs_[0].is_zero())
            throw std::domain_error("TruncatedSeries: divisor is not a unit");
        T inv0 = scalar_inverse(b.coeffs_[0]);
        TruncatedSeries q(a.order_);
        for (std::size_t n = 0; n <= a.order_; ++n) {
            T acc = a.coeffs_[n];
            for (std::size_t k = 1; k <= n; ++k)
                acc -= b.coeffs_[k] * q.coeffs_[n - k];
            q.coeffs_[n] = acc * inv0;
        }
        return q;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

  private:
    void check_order(const TruncatedSeries& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("TruncatedSeries: order mismatch");
    }

    std::size_t order_;
    std::vector<T> coeffs_;
};

/// Coefficients a_n of 1/(1 - x - 2*lambda*x^2):
/// a_0 = 1, a_1 = 1, a_n = a_{n-1} + 2*lambda*a_{n-2}.
template <class S>
TruncatedSeries<S> denom_inverse(const S& lambda, std::size_t order) {
    TruncatedSeries<S> r(order);
    r.set_coeff(0, S(1));
    if (order >= 1) r.set_coeff(1, S(1));
    for (std::size_t n = 2; n <= order; ++n)
        r.set_coeff(n, r.coeff(n - 1) + lambda * r.coeff(n - 2) * S(2));
    return r;
}

namespace detail {

/// (n0 + n1*x) / (1 - x - 2*lambda*x^2) with spinor numerator coefficients:
/// coefficient n of the quotient is n0*a_n + n1*a_{n-1}.
template <class S>
TruncatedSeries<Spinor<S>> spinor_over_denominator(const Spinor<S>& n0,
                                                   const Spinor<S>& n1,
                                                   const S& lambda,
                                                   std::size_t order) {
    TruncatedSeries<S> a = denom_inverse(lambda, order);
    TruncatedSeries<Spinor<S>> r(order);
    for (std::size_t n = 0; n <= order; ++n) {
        Spinor<S> coeff = n0 * a.coeff(n);
        if (n >= 1) coeff += n1 * a.coeff(n - 1);
        r.set_coeff(n, std::move(coeff));
    }
    return r;
}

} // namespace detail

/// Series expansion of the generating function of spinor_term(kind, .).
///
/// Corrected numerator: S_0 + (S_1 - S_0) x, the unique linear numerator
/// over 1 - x - 2x^2 whose expansion reproduces the recurrence from the
/// seeds. With use_printed, the published numerators are expanded instead:
/// HSJ x[3u; -1+2u] - [1+8u; -2+4u]; HSJL x[2+7u; -1+5u] - 3[1+8u; -2+4u].
inline TruncatedSeries<HypSpinor> gen_function_series(SeqKind kind,
                                                      std::size_t order,
                                                      bool use_printed = false) {
    HypSpinor n0, n1;
    if (use_printed) {
        if (kind == SeqKind::HSJ) {
            n0 = -HypSpinor(HypScalar(1, 8), HypScalar(-2, 4));
            n1 = HypSpinor(HypScalar(0, 3), HypScalar(-1, 2));
        } else {
            n0 = HypSpinor(HypScalar(1, 8), HypScalar(-2, 4)) * Rational(-3);
            n1 = HypSpinor(HypScalar(2, 7), HypScalar(-1, 5));
        }
    } else {
        HypSpinor s0 = spinor_term(kind, 0);
        HypSpinor s1 = spinor_term(kind, 1);
        n0 = s0;
        n1 = s1 - s0;
    }
    return detail::spinor_over_denominator(n0, n1, Rational(1), order);
}

/// Series in t with polynomial-spinor coefficients for the bivariate
/// generating function of HSJ_n(x) over 1 - t - 2x t^2.
///
/// Corrected numerator: (1 - t) HSJ_0(x) + t HSJ_1(x); the published one
/// is (1 - t) HSJ_0(x) + HSJ_1(x), kept behind use_printed.
inline TruncatedSeries<PolySpinor> poly_gen_series(std::size_t order,
                                                   bool use_printed = false) {
    PolySpinor s0 = spinor_poly_term(0);
    PolySpinor s1 = spinor_poly_term(1);
    PolySpinor n0 = use_printed ? s0 + s1 : s0;
    PolySpinor n1 = use_printed ? -s0 : s1 - s0;
    return detail::spinor_over_denominator(n0, n1, UniPoly::variable(), order);
}

} // namespace jacspin
