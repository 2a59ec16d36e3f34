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

#include "hyperbolic.hpp"
#include "split_quaternion.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace jacspin {

/// Two-component column of hyperbolic scalars; a module over Hyperbolic<S>.
template <class S>
class Spinor {
  public:
    Spinor() = default;
    Spinor(Hyperbolic<S> c1, Hyperbolic<S> c2)
        : c1_(std::move(c1)), c2_(std::move(c2)) {}

    const Hyperbolic<S>& c1() const { return c1_; }
    const Hyperbolic<S>& c2() const { return c2_; }

    bool is_zero() const { return c1_.is_zero() && c2_.is_zero(); }

    Spinor operator-() const { return Spinor(-c1_, -c2_); }

    Spinor& operator+=(const Spinor& o) {
        c1_ += o.c1_;
        c2_ += o.c2_;
        return *this;
    }
    Spinor& operator-=(const Spinor& o) {
        c1_ -= o.c1_;
        c2_ -= o.c2_;
        return *this;
    }
    Spinor& operator*=(const Hyperbolic<S>& h) {
        c1_ *= h;
        c2_ *= h;
        return *this;
    }
    Spinor& operator*=(const S& s) {
        c1_ *= s;
        c2_ *= s;
        return *this;
    }

    friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
    friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
    friend Spinor operator*(Spinor a, const Hyperbolic<S>& h) { return a *= h; }
    friend Spinor operator*(const Hyperbolic<S>& h, Spinor a) { return a *= h; }
    friend Spinor operator*(Spinor a, const S& s) { return a *= s; }
    friend Spinor operator*(const S& s, Spinor a) { return a *= s; }

    friend bool operator==(const Spinor& a, const Spinor& b) {
        return a.c1_ == b.c1_ && a.c2_ == b.c2_;
    }
    friend bool operator!=(const Spinor& a, const Spinor& b) {
        return !(a == b);
    }

    /// Componentwise hyperbolic conjugate.
    Spinor bar() const { return Spinor(c1_.conj(), c2_.conj()); }

    /// u * C * bar(s), the spinor conjugate.
    Spinor tilde() const {
        Spinor b = bar();
        Spinor cb = spin_matrix_c_apply(b);
        const Hyperbolic<S> u = Hyperbolic<S>::unit();
        return Spinor(u * cb.c1_, u * cb.c2_);
    }

    /// -C * bar(s), the mate.
    Spinor mate() const { return -spin_matrix_c_apply(bar()); }

  private:
    Hyperbolic<S> c1_{};
    Hyperbolic<S> c2_{};
};

/// The fixed matrix C = [[0, 1], [-1, 0]] acting on a column: [x; y] -> [y; -x].
/// C^2 = -I.
template <class S>
Spinor<S> spin_matrix_c_apply(const Spinor<S>& s) {
    return Spinor<S>(s.c2(), -s.c1());
}

template <class S>
std::string to_string(const Spinor<S>& s) {
    return "[" + to_string(s.c1()) + "; " + to_string(s.c2()) + "]";
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Spinor<S>& s) {
    return os << to_string(s);
}

using HypSpinor = Spinor<Rational>;

/// The correspondence f: a + bi + cj + dk -> [a + du; -b + cu], the unique
/// linear extension of the map carrying the split Jacobsthal quaternions to
/// their hyperbolic spinors. Linear and injective, not surjective.
inline HypSpinor quat_to_spinor(const SplitQuat& q) {
    return HypSpinor(HypScalar(q.a(), q.d()), HypScalar(-q.b(), q.c()));
}

/// Spinor attached to the quaternion conjugate: f(conj(q)) = [a-du; b-cu].
inline HypSpinor spinor_star(const SplitQuat& q) {
    return quat_to_spinor(q.conj());
}

/// The isotropic-vector parametrization by a spinor (phi1, phi2), together
/// with the value of the quadratic form Q = x1^2 + x2^2 - x3^2 in the
/// hyperbolic ring. Q is returned, not asserted zero: with u^2 = +1 it
/// equals 2*(phi1^2 - phi2^2)^2 and vanishes only when phi1^2 = phi2^2.
struct IsotropicVector {
    HypScalar x1; // phi1^2 - phi2^2
    HypScalar x2; // u * (phi1^2 + phi2^2)
    HypScalar x3; // -2 * phi1 * phi2
    HypScalar form; // x1^2 + x2^2 - x3^2
};

inline IsotropicVector isotropic_vector(const HypScalar& phi1,
                                        const HypScalar& phi2) {
    const HypScalar u = HypScalar::unit();
    IsotropicVector v;
    v.x1 = phi1 * phi1 - phi2 * phi2;
    v.x2 = u * (phi1 * phi1 + phi2 * phi2);
    v.x3 = HypScalar(Rational(-2)) * phi1 * phi2;
    v.form = v.x1 * v.x1 + v.x2 * v.x2 - v.x3 * v.x3;
    return v;
}

} // namespace jacspin
