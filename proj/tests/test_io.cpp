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

#include <jacspin/json_io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace jacspin;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(Int(n), Int(d)); }

} // namespace

TEST_CASE("rationals cross JSON as exact strings") {
    nlohmann::json j = rat(-3, 4);
    CHECK(j.is_string());
    CHECK(j.get<std::string>() == "-3/4");
    CHECK(j.get<Rational>() == rat(-3, 4));

    // Never floating point, even for values a double would mangle.
    Rational tiny = pow2(200).inverse();
    nlohmann::json jt = tiny;
    CHECK(jt.get<Rational>() == tiny);
}

TEST_CASE("polynomials cross JSON as exact strings") {
    UniPoly p = UniPoly(1) - UniPoly::monomial(rat(4), 2);
    nlohmann::json j = p;
    CHECK(j.get<std::string>() == "1 - 4*x^2");
    CHECK(j.get<UniPoly>() == p);
}

TEST_CASE("hyperbolic numbers round-trip over both scalar types") {
    Hyperbolic<Rational> h(rat(-7), rat(7));
    nlohmann::json j = h;
    CHECK(j.at("re").get<std::string>() == "-7");
    CHECK(j.at("hy").get<std::string>() == "7");
    CHECK(j.get<Hyperbolic<Rational>>() == h);

    Hyperbolic<UniPoly> hp(UniPoly(1) + UniPoly::variable(),
                           UniPoly::variable() * UniPoly::variable());
    nlohmann::json jp = hp;
    CHECK(jp.get<Hyperbolic<UniPoly>>() == hp);
}

TEST_CASE("spinors round-trip componentwise") {
    HypSpinor s = spinor_term(SeqKind::HSJ, 2);
    nlohmann::json j = s;
    CHECK(j.at("c1").at("re").get<std::string>() == "1");
    CHECK(j.at("c1").at("hy").get<std::string>() == "11");
    CHECK(j.get<HypSpinor>() == s);

    PolySpinor sp = spinor_poly_term(3);
    nlohmann::json jp = sp;
    CHECK(jp.get<PolySpinor>() == sp);
}

TEST_CASE("split quaternions round-trip componentwise") {
    SplitQuat q(rat(1), rat(2), rat(-3), rat(5, 2));
    nlohmann::json j = q;
    CHECK(j.at("a").get<std::string>() == "1");
    CHECK(j.at("d").get<std::string>() == "5/2");
    CHECK(j.get<SplitQuat>() == q);
}

TEST_CASE("isotropic vectors emit their components and form value") {
    IsotropicVector v = isotropic_vector(HypScalar(rat(1)), HypScalar(rat(1)));
    nlohmann::json j = v;
    CHECK(j.at("x1").at("re").get<std::string>() == "0");
    CHECK(j.at("x1").at("hy").get<std::string>() == "0");
    CHECK(j.at("x2").at("hy").get<std::string>() == "2");
    CHECK(j.at("x3").at("re").get<std::string>() == "-2");
    CHECK(j.at("form").at("re").get<std::string>() == "0");
}

TEST_CASE("series emit ascending coefficients and parse back") {
    auto s = gen_function_series(SeqKind::HSJ, 6);
    nlohmann::json j = s;
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 7);
    CHECK(j[0].at("n").get<std::size_t>() == 0);
    CHECK(j[3].at("coeff").at("c1").at("re").get<std::string>() == "3");

    TruncatedSeries<HypSpinor> back(0);
    j.get_to(back);
    REQUIRE(back.order() == 6);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(back.coeff(n) == s.coeff(n));

    nlohmann::json empty = nlohmann::json::array();
    CHECK_THROWS_AS(empty.get_to(back), std::invalid_argument);
}

TEST_CASE("grid configs and statuses round-trip") {
    GridConfig g;
    g.n_max = 5;
    g.r_max = 2;
    g.t_max = 3;
    g.order = 7;
    nlohmann::json j = g;
    GridConfig back = j.get<GridConfig>();
    CHECK(back.n_max == 5);
    CHECK(back.r_max == 2);
    CHECK(back.t_max == 3);
    CHECK(back.order == 7);

    CHECK(nlohmann::json(Status::Holds) == "holds");
    CHECK(nlohmann::json(Status::HoldsCorrected) == "holds_corrected");
    CHECK(nlohmann::json(Status::Fails) == "fails");
    CHECK(nlohmann::json("fails").get<Status>() == Status::Fails);
    CHECK_THROWS_AS(nlohmann::json("maybe").get<Status>(),
                    std::invalid_argument);
}

TEST_CASE("random scalar values survive a JSON round-trip") {
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 60);
    for (int i = 0; i < 1000; ++i) {
        Rational r = rat(num(rng), den(rng));
        nlohmann::json j = r;
        CHECK(j.get<Rational>() == r);

        UniPoly p;
        for (std::size_t k = 0; k < 4; ++k)
            p = p + UniPoly::monomial(rat(num(rng), den(rng)), k);
        nlohmann::json jp = p;
        CHECK(jp.get<UniPoly>() == p);
    }
}
