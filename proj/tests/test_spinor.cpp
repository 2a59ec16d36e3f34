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

#include <jacspin/spinor.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace jacspin;

namespace {

HypSpinor spin(int re1, int hy1, int re2, int hy2) {
    return HypSpinor(HypScalar(re1, hy1), HypScalar(re2, hy2));
}

const SplitQuat sjq0(Rational(0), Rational(1), Rational(1), Rational(3));
const SplitQuat sjq1(Rational(1), Rational(1), Rational(3), Rational(5));

} // namespace

TEST_CASE("quat_to_spinor carries a+bi+cj+dk to [a+du; -b+cu]") {
    CHECK(quat_to_spinor(sjq0) == spin(0, 3, -1, 1));
    CHECK(quat_to_spinor(SplitQuat(1)) == spin(1, 0, 0, 0));
    CHECK(quat_to_spinor(sjq1) == spin(1, 5, -1, 3));
    CHECK(to_string(quat_to_spinor(sjq0)) == "[3u; -1+u]");
    CHECK(to_string(quat_to_spinor(sjq1)) == "[1+5u; -1+3u]");
}

TEST_CASE("bar conjugates componentwise") {
    CHECK(spin(0, 3, -1, 1).bar() == spin(0, -3, -1, -1));
    CHECK(spin(1, 0, 0, 0).bar() == spin(1, 0, 0, 0));
    HypSpinor s = spin(1, 5, -1, 3);
    CHECK(s.bar().bar() == s);
}

TEST_CASE("C = [[0,1],[-1,0]] squares to -I") {
    HypSpinor s = spin(1, 0, 0, 0);
    CHECK(spin_matrix_c_apply(s) == spin(0, 0, -1, 0));
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<int> v(-50, 50);
    for (int i = 0; i < 1000; ++i) {
        HypSpinor t = spin(v(rng), v(rng), v(rng), v(rng));
        CHECK(spin_matrix_c_apply(spin_matrix_c_apply(t)) == -t);
    }
}

TEST_CASE("tilde is u*C*bar") {
    CHECK(spin(0, 3, -1, 1).tilde() == spin(-1, -1, 3, 0));
    CHECK(to_string(spin(0, 3, -1, 1).tilde()) == "[-1-u; 3]");
    CHECK(spin(1, 0, 0, 0).tilde() == spin(0, 0, -1, 0) * HypScalar::unit());
    CHECK(to_string(spin(1, 0, 0, 0).tilde()) == "[0; -u]");
    // Applying tilde twice is the identity: bar moves across u as
    // bar(u*x) = -u*bar(x), so the two sign flips cancel against C^2 = -I
    // and u^2 = +1.
    HypSpinor e1 = spin(1, 0, 0, 0);
    CHECK(e1.tilde().tilde() == e1);
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<int> v(-50, 50);
    for (int i = 0; i < 200; ++i) {
        HypSpinor t = spin(v(rng), v(rng), v(rng), v(rng));
        CHECK(t.tilde().tilde() == t);
    }
}

TEST_CASE("mate is -C*bar and squares to -1") {
    CHECK(spin(0, 3, -1, 1).mate() == spin(1, 1, 0, -3));
    CHECK(to_string(spin(0, 3, -1, 1).mate()) == "[1+u; -3u]");
    CHECK(spin(1, 0, 0, 0).mate() == spin(0, 0, 1, 0));
    CHECK(spin(1, 0, 0, 0).mate().mate() == spin(-1, 0, 0, 0));
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<int> v(-50, 50);
    for (int i = 0; i < 200; ++i) {
        HypSpinor t = spin(v(rng), v(rng), v(rng), v(rng));
        CHECK(t.mate().mate() == -t);
    }
}

TEST_CASE("star is the spinor of the quaternion conjugate") {
    CHECK(spinor_star(sjq0) == spin(0, -3, 1, -1));
    CHECK(to_string(spinor_star(sjq0)) == "[-3u; 1-u]");
    CHECK(spinor_star(SplitQuat(5)) == spin(5, 0, 0, 0));
    CHECK(spinor_star(sjq1) == spin(1, -5, 1, -3));
    CHECK(to_string(spinor_star(sjq1)) == "[1-5u; 1-3u]");
}

TEST_CASE("quat_to_spinor is additive and injective on the basis") {
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 9);
    auto draw_r = [&] { return Rational(Int(num(rng)), Int(den(rng))); };
    auto draw = [&] {
        return SplitQuat(draw_r(), draw_r(), draw_r(), draw_r());
    };
    for (int i = 0; i < 1000; ++i) {
        SplitQuat p = draw(), q = draw();
        CHECK(quat_to_spinor(p + q) == quat_to_spinor(p) + quat_to_spinor(q));
        Rational s = draw_r();
        CHECK(quat_to_spinor(p * s) == quat_to_spinor(p) * s);
        // All four coordinates survive, so the kernel is trivial.
        if (!p.is_zero()) CHECK(!quat_to_spinor(p).is_zero());
    }
    HypSpinor images[] = {quat_to_spinor(SplitQuat(1)),
                          quat_to_spinor(SplitQuat::i()),
                          quat_to_spinor(SplitQuat::j()),
                          quat_to_spinor(SplitQuat::k())};
    for (int a = 0; a < 4; ++a) {
        CHECK(!images[a].is_zero());
        for (int b = a + 1; b < 4; ++b) CHECK(images[a] != images[b]);
    }
}

TEST_CASE("isotropic vectors report the quadratic form value") {
    IsotropicVector v = isotropic_vector(HypScalar(1, 0), HypScalar(0, 0));
    CHECK(v.x1 == HypScalar(1, 0));
    CHECK(v.x2 == HypScalar(0, 1));
    CHECK(v.x3 == HypScalar(0, 0));
    CHECK(v.form == HypScalar(2, 0)); // u^2 = +1 makes Q = 2 here, not 0

    IsotropicVector w = isotropic_vector(HypScalar(1, 0), HypScalar(1, 0));
    CHECK(w.x1 == HypScalar(0, 0));
    CHECK(w.x2 == HypScalar(0, 2));
    CHECK(w.x3 == HypScalar(-2, 0));
    CHECK(w.form == HypScalar(0, 0));

    // Q = 2*(phi1^2 - phi2^2)^2 identically.
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<int> c(-9, 9);
    for (int i = 0; i < 1000; ++i) {
        HypScalar phi1(c(rng), c(rng));
        HypScalar phi2(c(rng), c(rng));
        IsotropicVector t = isotropic_vector(phi1, phi2);
        HypScalar diff = phi1 * phi1 - phi2 * phi2;
        CHECK(t.form == HypScalar(Rational(2)) * diff * diff);
    }
}
