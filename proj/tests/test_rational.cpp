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

#include <jacspin/rational.hpp>
#include <jacspin/text_io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace jacspin;

TEST_CASE("Rational normalizes eagerly to a canonical form") {
    CHECK(Rational(Int(-3), Int(-9)) == Rational(Int(1), Int(3)));
    CHECK(Rational(Int(3), Int(-9)) == Rational(Int(-1), Int(3)));
    CHECK(Rational(Int(0), Int(-7)) == Rational(0));
    CHECK(Rational(Int(0), Int(-7)).den() == 1);
    CHECK(Rational(Int(6), Int(4)).num() == 3);
    CHECK(Rational(Int(6), Int(4)).den() == 2);
}

TEST_CASE("Rational rejects a zero denominator") {
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
    CHECK_THROWS_WITH(Rational(Int(1), Int(0)),
                      "Rational: zero denominator");
}

TEST_CASE("Rational arithmetic is exact") {
    Rational a(Int(1), Int(3));
    Rational b(Int(1), Int(6));
    CHECK(a + b == Rational(Int(1), Int(2)));
    CHECK(a - b == Rational(Int(1), Int(6)));
    CHECK(a * b == Rational(Int(1), Int(18)));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(Int(-1), Int(3)));
    CHECK(a.inverse() == Rational(3));
    CHECK(a.abs() == a);
    CHECK((-a).abs() == a);
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(b < a);
}

TEST_CASE("Rational division by zero raises domain_error") {
    CHECK_THROWS_WITH(Rational(1) / Rational(0),
                      "Rational: division by zero");
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("Rational prints p/q with the denominator omitted when 1") {
    CHECK(to_string(Rational(Int(-3), Int(4))) == "-3/4");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(Int(-7), Int(1))) == "-7");
    CHECK(to_string(Rational(Int(10), Int(4))) == "5/2");
}

TEST_CASE("parse_rational inverts to_string and rejects garbage") {
    CHECK(parse_rational("-3/4") == Rational(Int(-3), Int(4)));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational(" 7 / 2 ") == Rational(Int(7), Int(2)));
    CHECK(parse_rational("0") == Rational(0));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
}

TEST_CASE("pow2 and alt_sign match their definitions") {
    CHECK(pow2(0) == Rational(1));
    CHECK(pow2(10) == Rational(1024));
    CHECK(pow2(70) == Rational(Int(1) << 70));
    CHECK_THROWS_AS(pow2(-1), std::out_of_range);
    CHECK(alt_sign(0) == Rational(1));
    CHECK(alt_sign(5) == Rational(-1));
    CHECK(alt_sign(6) == Rational(1));
}

TEST_CASE("Rational satisfies field identities on randomized inputs") {
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<int> num(-99, 99);
    std::uniform_int_distribution<int> den(1, 99);
    auto draw = [&] { return Rational(Int(num(rng)), Int(den(rng))); };
    for (int i = 0; i < 1000; ++i) {
        Rational a = draw(), b = draw(), c = draw();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
        CHECK(parse_rational(to_string(a)) == a);
    }
}
