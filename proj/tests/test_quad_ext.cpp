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

#include <jacspin/quad_ext.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace jacspin;

namespace {

UniPoly poly(std::vector<int> coeffs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return UniPoly(std::move(c));
}

} // namespace

TEST_CASE("PolyFrac reduces to lowest terms with a monic denominator") {
    PolyFrac f(poly({0, 2}), poly({0, 4})); // 2x / 4x
    CHECK(f == PolyFrac(Rational(Int(1), Int(2))));
    PolyFrac g(poly({-1, 0, 1}), poly({1, 1})); // (x^2-1)/(x+1)
    CHECK(g.is_poly());
    CHECK(g.as_poly() == poly({-1, 1}));
    PolyFrac h(poly({1}), poly({0, 2})); // 1 / 2x
    CHECK(h.den() == poly({0, 1}));
    CHECK(h.num() == PolyFrac(Rational(Int(1), Int(2))).num());
    CHECK_THROWS_AS(PolyFrac(poly({1}), UniPoly(0)), std::domain_error);
}

TEST_CASE("PolyFrac field operations and errors") {
    PolyFrac x{UniPoly::variable()};
    PolyFrac one(1);
    CHECK(one / (one - x) + one / (one + x) ==
          PolyFrac(poly({2}), poly({1, 0, -1})));
    CHECK((x * x - one) / (x - one) == x + one);
    CHECK_THROWS_AS(one / PolyFrac(0), std::domain_error);
    CHECK_THROWS_AS(PolyFrac(0).inverse(), std::domain_error);
    CHECK(x.inverse() * x == one);
}

TEST_CASE("PolyFrac evaluation rejects poles") {
    PolyFrac f(poly({1}), poly({-1, 1})); // 1/(x-1)
    CHECK(f.eval(Rational(3)) == Rational(Int(1), Int(2)));
    CHECK_THROWS_AS(f.eval(Rational(1)), std::domain_error);
}

TEST_CASE("PolyFrac prints plain polynomials without a denominator") {
    CHECK(to_string(PolyFrac(poly({1, 2}))) == "1 + 2*x");
    CHECK(to_string(PolyFrac(poly({1}), poly({0, 1}))) == "(1)/(x)");
    CHECK(to_string(PolyFrac(0)) == "0");
}

TEST_CASE("alpha and beta are the roots of t^2 = t + 2x") {
    ExtElem alpha = ExtElem::alpha();
    ExtElem beta = ExtElem::beta();
    ExtElem c = ExtElem::root();
    ExtElem two_x{PolyFrac(poly({0, 2}))};
    CHECK(alpha + beta == ExtElem(1));
    CHECK(alpha - beta == c);
    CHECK(alpha * beta == -two_x);
    CHECK(alpha * alpha == alpha + two_x);
    CHECK(beta * beta == beta + two_x);
    CHECK(c * c == ExtElem{PolyFrac(ExtElem::discriminant())});
}

TEST_CASE("ExtElem inversion rationalizes by the conjugate") {
    ExtElem c = ExtElem::root();
    ExtElem e(PolyFrac(poly({1, 1})), PolyFrac(poly({2})));
    CHECK(e * e.inverse() == ExtElem(1));
    CHECK(e.conj().conj() == e);
    CHECK((e * e.conj()).is_surd_free());
    CHECK_THROWS_AS(ExtElem(0).inverse(), std::domain_error);
    CHECK_THROWS_WITH(ExtElem(1) / ExtElem(0), "ExtElem: division by zero");

    // 1/(2c) rationalizes to c/(2(8x+1)).
    ExtElem inv_2c = (ExtElem(2) * c).inverse();
    PolyFrac expected_surd(UniPoly(1), poly({2, 16}));
    CHECK(inv_2c == ExtElem(PolyFrac(0), expected_surd));
}

TEST_CASE("ExtElem pow matches repeated multiplication") {
    ExtElem alpha = ExtElem::alpha();
    ExtElem acc(1);
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(alpha.pow(n) == acc);
        acc = acc * alpha;
    }
    // alpha^2 + beta^2 is symmetric, hence surd-free: 1 + 4x.
    ExtElem sym = alpha.pow(2) + ExtElem::beta().pow(2);
    CHECK(sym.is_surd_free());
    CHECK(sym.base() == PolyFrac(poly({1, 4})));
}

TEST_CASE("ExtElem field identities hold on randomized inputs") {
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<int> coeff(-5, 5);
    auto draw_poly = [&] {
        std::vector<Rational> c(3);
        for (auto& v : c) v = Rational(coeff(rng));
        return UniPoly(std::move(c));
    };
    auto draw = [&] {
        return ExtElem(PolyFrac(draw_poly()), PolyFrac(draw_poly()));
    };
    // Inversion normalizes through polynomial gcds, so the case count stays
    // modest to keep the suite inside its runtime budget.
    for (int i = 0; i < 250; ++i) {
        ExtElem a = draw(), b = draw();
        CHECK(a * b == b * a);
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.norm() == (a * a.conj()).base());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == ExtElem(1));
            CHECK((b / a) * a == b);
        }
    }
}
