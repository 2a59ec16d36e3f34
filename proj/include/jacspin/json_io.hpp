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

#include "text_io.hpp"
#include "verifier.hpp"

#include <json.hpp>

#include <string>

namespace jacspin {

// JSON bindings. Exact scalars always cross the wire as their textual forms
// ("p/q", "1 + 2*x"), never as floating point; every emitted shape parses
// back to an equal value.

inline void scalar_from_text(const std::string& text, Rational& out) {
    out = parse_rational(text);
}
inline void scalar_from_text(const std::string& text, UniPoly& out) {
    out = parse_unipoly(text);
}

inline void to_json(nlohmann::json& j, const Rational& r) { j = to_string(r); }
inline void from_json(const nlohmann::json& j, Rational& r) {
    r = parse_rational(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const UniPoly& p) { j = to_string(p); }
inline void from_json(const nlohmann::json& j, UniPoly& p) {
    p = parse_unipoly(j.get<std::string>());
}

template <class S>
void to_json(nlohmann::json& j, const Hyperbolic<S>& h) {
    j = nlohmann::json{{"re", to_string(h.re())}, {"hy", to_string(h.hy())}};
}
template <class S>
void from_json(const nlohmann::json& j, Hyperbolic<S>& h) {
    S re, hy;
    scalar_from_text(j.at("re").get<std::string>(), re);
    scalar_from_text(j.at("hy").get<std::string>(), hy);
    h = Hyperbolic<S>(std::move(re), std::move(hy));
}

template <class S>
void to_json(nlohmann::json& j, const Spinor<S>& s) {
    j = nlohmann::json{{"c1", s.c1()}, {"c2", s.c2()}};
}
template <class S>
void from_json(const nlohmann::json& j, Spinor<S>& s) {
    s = Spinor<S>(j.at("c1").get<Hyperbolic<S>>(),
                  j.at("c2").get<Hyperbolic<S>>());
}

inline void to_json(nlohmann::json& j, const SplitQuat& q) {
    j = nlohmann::json{{"a", to_string(q.a())},
                       {"b", to_string(q.b())},
                       {"c", to_string(q.c())},
                       {"d", to_string(q.d())}};
}
inline void from_json(const nlohmann::json& j, SplitQuat& q) {
    q = SplitQuat(parse_rational(j.at("a").get<std::string>()),
                  parse_rational(j.at("b").get<std::string>()),
                  parse_rational(j.at("c").get<std::string>()),
                  parse_rational(j.at("d").get<std::string>()));
}

inline void to_json(nlohmann::json& j, const IsotropicVector& v) {
    j = nlohmann::json{
        {"x1", v.x1}, {"x2", v.x2}, {"x3", v.x3}, {"form", v.form}};
}

/// Series emit as [{"n": 0, "coeff": ...}, ...] with n ascending.
template <class T>
void to_json(nlohmann::json& j, const TruncatedSeries<T>& s) {
    j = nlohmann::json::array();
    for (std::size_t n = 0; n <= s.order(); ++n)
        j.push_back(nlohmann::json{{"n", n}, {"coeff", s.coeff(n)}});
}
template <class T>
void from_json(const nlohmann::json& j, TruncatedSeries<T>& s) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("series JSON must be a nonempty array");
    TruncatedSeries<T> out(j.size() - 1);
    for (const auto& item : j)
        out.set_coeff(item.at("n").get<std::size_t>(),
                      item.at("coeff").get<T>());
    s = std::move(out);
}

inline void to_json(nlohmann::json& j, const GridConfig& g) {
    j = nlohmann::json{{"n_max", g.n_max},
                       {"r_max", g.r_max},
                       {"t_max", g.t_max},
                       {"order", g.order}};
}
inline void from_json(const nlohmann::json& j, GridConfig& g) {
    g.n_max = j.at("n_max").get<Index>();
    g.r_max = j.at("r_max").get<Index>();
    g.t_max = j.at("t_max").get<Index>();
    g.order = j.at("order").get<std::size_t>();
}

inline void to_json(nlohmann::json& j, const Status& s) { j = to_string(s); }
inline void from_json(const nlohmann::json& j, Status& s) {
    std::string text = j.get<std::string>();
    if (text == "holds")
        s = Status::Holds;
    else if (text == "holds_corrected")
        s = Status::HoldsCorrected;
    else if (text == "fails")
        s = Status::Fails;
    else
        throw std::invalid_argument("unknown status: " + text);
}

inline void to_json(nlohmann::json& j, const Counterexample& c) {
    j = nlohmann::json{{"params", c.params}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}
inline void from_json(const nlohmann::json& j, Counterexample& c) {
    c.params = j.at("params").get<std::string>();
    c.lhs = j.at("lhs").get<std::string>();
    c.rhs = j.at("rhs").get<std::string>();
}

inline void to_json(nlohmann::json& j, const ClauseOutcome& c) {
    j = nlohmann::json{{"clause", c.clause}, {"status", c.status}};
    j["counterexample"] =
        c.printed_failure ? nlohmann::json(*c.printed_failure) : nullptr;
    j["corrected_statement"] =
        c.corrected_statement ? nlohmann::json(*c.corrected_statement) : nullptr;
}
inline void from_json(const nlohmann::json& j, ClauseOutcome& c) {
    c.clause = j.at("clause").get<std::string>();
    c.status = j.at("status").get<Status>();
    c.printed_failure.reset();
    if (!j.at("counterexample").is_null())
        c.printed_failure = j.at("counterexample").get<Counterexample>();
    c.corrected_statement.reset();
    if (!j.at("corrected_statement").is_null())
        c.corrected_statement = j.at("corrected_statement").get<std::string>();
    c.corrected_failure.reset();
}

inline void to_json(nlohmann::json& j, const IdentityResult& r) {
    j = nlohmann::json{
        {"id", r.id}, {"citation", r.citation}, {"status", r.status}};
    auto ce = r.counterexample();
    j["counterexample"] = ce ? nlohmann::json(*ce) : nullptr;
    auto corrected = r.corrected_statement();
    j["corrected_statement"] = corrected ? nlohmann::json(*corrected) : nullptr;
    j["clauses"] = r.clauses;
}
inline void from_json(const nlohmann::json& j, IdentityResult& r) {
    r.id = j.at("id").get<std::string>();
    r.citation = j.at("citation").get<std::string>();
    r.status = j.at("status").get<Status>();
    r.clauses = j.at("clauses").get<std::vector<ClauseOutcome>>();
}

inline void to_json(nlohmann::json& j, const Report& r) {
    j = nlohmann::json{{"grid", r.grid},
                       {"results", r.results},
                       {"runtime_ms", r.runtime_ms},
                       {"note", r.note}};
}
inline void from_json(const nlohmann::json& j, Report& r) {
    r.grid = j.at("grid").get<GridConfig>();
    r.results = j.at("results").get<std::vector<IdentityResult>>();
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    r.note = j.at("note").get<std::string>();
}

} // namespace jacspin
