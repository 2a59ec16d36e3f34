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

#include "polynomial.hpp"
#include "spinor.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacspin {

// Parsers for the textual forms this library emits ("p/q", "1 + 2*x - x^3",
// "-1+3u", "1+2i-3k"). Whitespace is ignored everywhere; anything else
// unrecognized raises std::invalid_argument naming the offending input.

namespace detail {

inline std::string strip_spaces(const std::string& text) {
    std::string out;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

[[noreturn]] inline void bad_parse(const char* what, const std::string& text) {
    throw std::invalid_argument(std::string("cannot parse ") + what + ": \"" +
                                text + "\"");
}

inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

/// ['-'] digits ['/' digits], already space-free.
inline Rational rational_body(const std::string& s, const char* what,
                              const std::string& whole) {
    std::string t = s;
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    std::string num = t, den = "1";
    if (auto slash = t.find('/'); slash != std::string::npos) {
        num = t.substr(0, slash);
        den = t.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) bad_parse(what, whole);
    Rational r{Int(num), Int(den)};
    return neg ? -r : r;
}

/// Split "a+b-c" into sign-prefixed chunks ("a", "+b", "-c").
inline std::vector<std::string> signed_terms(const std::string& s,
                                             const char* what,
                                             const std::string& whole) {
    if (s.empty()) bad_parse(what, whole);
    std::vector<std::string> terms;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if ((ch == '+' || ch == '-') && i > 0) {
            terms.push_back(cur);
            cur.clear();
        }
        cur += ch;
    }
    terms.push_back(cur);
    for (const auto& t : terms)
        if (t.empty() || t == "+" || t == "-") bad_parse(what, whole);
    return terms;
}

/// Coefficient in front of a unit symbol: "" -> 1, "-" -> -1, "+3/2" -> 3/2.
inline Rational unit_coeff(std::string t, const char* what,
                           const std::string& whole) {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    if (t.back() == '*') t.pop_back();
    return rational_body(t, what, whole);
}

} // namespace detail

inline Rational parse_rational(const std::string& text) {
    std::string s = detail::strip_spaces(text);
    if (s.empty()) detail::bad_parse("rational", text);
    return detail::rational_body(s, "rational", text);
}

inline UniPoly parse_unipoly(const std::string& text) {
    std::string s = detail::strip_spaces(text);
    UniPoly p;
    for (const std::string& term :
         detail::signed_terms(s, "polynomial", text)) {
        auto xpos = term.find('x');
        if (xpos == std::string::npos) {
            p += UniPoly(detail::rational_body(term, "polynomial", text));
            continue;
        }
        Rational coeff =
            detail::unit_coeff(term.substr(0, xpos), "polynomial", text);
        std::string tail = term.substr(xpos + 1);
        std::size_t deg = 1;
        if (!tail.empty()) {
            if (tail[0] != '^' || !detail::all_digits(tail.substr(1)))
                detail::bad_parse("polynomial", text);
            deg = std::stoul(tail.substr(1));
        }
        p += UniPoly::monomial(coeff, deg);
    }
    return p;
}

inline HypScalar parse_hyperbolic(const std::string& text) {
    std::string s = detail::strip_spaces(text);
    Rational re, hy;
    for (const std::string& term :
         detail::signed_terms(s, "hyperbolic number", text)) {
        if (term.back() == 'u')
            hy += detail::unit_coeff(term.substr(0, term.size() - 1),
                                     "hyperbolic number", text);
        else
            re += detail::rational_body(term, "hyperbolic number", text);
    }
    return HypScalar(re, hy);
}

inline SplitQuat parse_split_quat(const std::string& text) {
    std::string s = detail::strip_spaces(text);
    Rational a, b, c, d;
    for (const std::string& term :
         detail::signed_terms(s, "split quaternion", text)) {
        char last = term.back();
        if (last == 'i' || last == 'j' || last == 'k') {
            Rational coeff = detail::unit_coeff(
                term.substr(0, term.size() - 1), "split quaternion", text);
            if (last == 'i')
                b += coeff;
            else if (last == 'j')
                c += coeff;
            else
                d += coeff;
        } else {
            a += detail::rational_body(term, "split quaternion", text);
        }
    }
    return SplitQuat(a, b, c, d);
}

} // namespace jacspin
