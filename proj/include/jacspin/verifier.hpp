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

#include "series.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jacspin {

/// Parameter grid shared by the whole registry. Identities skip points
/// outside their own domain (e.g. n >= r+1 for the r-shifted differences)
/// rather than failing on them.
struct GridConfig {
    Index n_max = 64;
    Index r_max = 8;
    Index t_max = 8;
    std::size_t order = 32;

    void validate() const {
        if (n_max < 0 || r_max < 0 || t_max < 0)
            throw std::invalid_argument("malformed grid: negative bound");
    }
};

enum class Status { Holds, HoldsCorrected, Fails };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::HoldsCorrected: return "holds_corrected";
        default: return "fails";
    }
}

/// First grid point where a statement breaks, with both sides rendered.
struct Counterexample {
    std::string params;
    std::string lhs;
    std::string rhs;
};

/// One independently checkable statement of a registry entry. A theorem that
/// bundles several displayed equalities contributes one clause each.
struct ClauseSpec {
    std::string name;
    std::string printed_statement;
    std::function<std::optional<Counterexample>(const GridConfig&)> eval_printed;
    // Both empty unless the printed form needs a correction.
    std::string corrected_statement;
    std::function<std::optional<Counterexample>(const GridConfig&)> eval_corrected;
};

struct IdentityDescriptor {
    std::string id;
    std::string citation;
    std::vector<ClauseSpec> clauses;
};

struct ClauseOutcome {
    std::string clause;
    Status status = Status::Holds;
    std::optional<Counterexample> printed_failure;
    std::optional<std::string> corrected_statement;
    std::optional<Counterexample> corrected_failure;
};

struct IdentityResult {
    std::string id;
    std::string citation;
    Status status = Status::Holds;
    std::vector<ClauseOutcome> clauses;

    /// First offending clause's printed counterexample, if any.
    std::optional<Counterexample> counterexample() const {
        for (const auto& c : clauses)
            if (c.status != Status::Holds && c.printed_failure) return c.printed_failure;
        return std::nullopt;
    }

    /// Verified corrections of all offending clauses, joined.
    std::optional<std::string> corrected_statement() const {
        std::string joined;
        for (const auto& c : clauses) {
            if (c.status == Status::HoldsCorrected && c.corrected_statement) {
                if (!joined.empty()) joined += "; ";
                joined += *c.corrected_statement;
            }
        }
        if (joined.empty()) return std::nullopt;
        return joined;
    }
};

struct Report {
    GridConfig grid;
    std::vector<IdentityResult> results;
    std::int64_t runtime_ms = 0;
    // Scope statement carried into every report: grid equality is what is
    // claimed, though agreement of a fixed second-order recurrence with a
    // closed form on more consecutive indices than any statement's shift
    // span already forces it for all n.
    std::string note =
        "All identities relate terms of the second-order recurrence "
        "S_{n+2} = S_{n+1} + 2*lambda*S_n; exact agreement on more "
        "consecutive indices than any statement's shift span forces the "
        "identity for all n, but this report claims only grid-level "
        "equality.";
};

namespace detail {

template <class T>
std::optional<Counterexample> mismatch(std::string params, const T& lhs,
                                       const T& rhs) {
    using jacspin::to_string;
    if (lhs == rhs) return std::nullopt;
    return Counterexample{std::move(params), to_string(lhs), to_string(rhs)};
}

inline std::string param_n(Index n) { return "n=" + std::to_string(n); }
inline std::string param_nr(Index n, Index r) {
    return "n=" + std::to_string(n) + ", r=" + std::to_string(r);
}
inline std::string param_nt(Index n, Index t) {
    return "n=" + std::to_string(n) + ", t=" + std::to_string(t);
}

inline HypSpinor lit(int re1, int hy1, int re2, int hy2) {
    return HypSpinor(HypScalar(re1, hy1), HypScalar(re2, hy2));
}

// Constants exactly as displayed in the source statements.
inline HypSpinor lit_A() { return lit(1, 8, -2, 4); }      // [1+8u; -2+4u]
inline HypSpinor lit_A_typo() { return lit(1, 8, 0, 4); }  // [1+8u; 4u]
inline HypSpinor lit_A_scrambled() { return lit(8, 1, 2, 4); } // [8+u; 2+4u]
inline HypSpinor lit_B() { return lit(1, -1, 1, 1); }      // [1-u; 1+u]

using Eval = std::function<std::optional<Counterexample>(const GridConfig&)>;

/// Scan n in [lo, n_max] comparing term-built lhs and formula rhs.
inline Eval scan_n(Index lo,
                   std::function<HypSpinor(Index)> lhs,
                   std::function<HypSpinor(Index)> rhs) {
    return [lo, lhs = std::move(lhs), rhs = std::move(rhs)](const GridConfig& g)
               -> std::optional<Counterexample> {
        for (Index n = lo; n <= g.n_max; ++n)
            if (auto ce = mismatch(param_n(n), lhs(n), rhs(n))) return ce;
        return std::nullopt;
    };
}

/// Scan n in [r+1, n_max], r in [1, r_max].
inline Eval scan_nr(std::function<HypSpinor(Index, Index)> lhs,
                    std::function<HypSpinor(Index, Index)> rhs) {
    return [lhs = std::move(lhs), rhs = std::move(rhs)](const GridConfig& g)
               -> std::optional<Counterexample> {
        for (Index n = 2; n <= g.n_max; ++n)
            for (Index r = 1; r <= g.r_max && r <= n - 1; ++r)
                if (auto ce = mismatch(param_nr(n, r), lhs(n, r), rhs(n, r)))
                    return ce;
        return std::nullopt;
    };
}

/// Scan n in [0, n_max], t in [0, t_max].
inline Eval scan_nt(std::function<HypSpinor(Index, Index)> lhs,
                    std::function<HypSpinor(Index, Index)> rhs) {
    return [lhs = std::move(lhs), rhs = std::move(rhs)](const GridConfig& g)
               -> std::optional<Counterexample> {
        for (Index n = 0; n <= g.n_max; ++n)
            for (Index t = 0; t <= g.t_max; ++t)
                if (auto ce = mismatch(param_nt(n, t), lhs(n, t), rhs(n, t)))
                    return ce;
        return std::nullopt;
    };
}

/// Coefficients of a spinor generating-function expansion vs sequence terms.
inline Eval scan_series(SeqKind kind, bool use_printed) {
    return [kind, use_printed](const GridConfig& g)
               -> std::optional<Counterexample> {
        auto series = gen_function_series(kind, g.order, use_printed);
        for (std::size_t n = 0; n <= g.order; ++n) {
            auto ce = mismatch(param_n(static_cast<Index>(n)),
                               spinor_term(kind, static_cast<Index>(n)),
                               series.coeff(n));
            if (ce) return ce;
        }
        return std::nullopt;
    };
}

inline Eval scan_poly_series(bool use_printed) {
    return [use_printed](const GridConfig& g) -> std::optional<Counterexample> {
        auto series = poly_gen_series(g.order, use_printed);
        for (std::size_t n = 0; n <= g.order; ++n) {
            auto ce = mismatch(param_n(static_cast<Index>(n)),
                               spinor_poly_term(static_cast<Index>(n)),
                               series.coeff(n));
            if (ce) return ce;
        }
        return std::nullopt;
    };
}

/// The published polynomial Binet right-hand side, taken at face value: no
/// exponent on alpha(x), beta(x), so it is a single extension-ring spinor
/// independent of n (and not even c-free).
inline ExtSpinor printed_poly_binet_rhs() {
    auto ext = [](UniPoly base, UniPoly surd) {
        return ExtElem(PolyFrac(std::move(base)), PolyFrac(std::move(surd)));
    };
    UniPoly x = UniPoly::variable();
    UniPoly fourx1 = UniPoly(1) + x * Rational(4);   // 4x+1
    UniPoly sixx1 = UniPoly(1) + x * Rational(6);    // 6x+1
    UniPoly twox1 = UniPoly(1) + x * Rational(2);    // 2x+1
    // A(x) = [-1+c+(4x+1+c)u; -1-c+(4x+1+c)u]
    ExtSpinor a(Hyperbolic<ExtElem>(ext(UniPoly(-1), UniPoly(1)), ext(fourx1, UniPoly(1))),
                Hyperbolic<ExtElem>(ext(UniPoly(-1), UniPoly(-1)), ext(fourx1, UniPoly(1))));
    // B(x) = [-2+((2x+1)c-6x-1)u; -1-c+(c-4x-1)u]
    ExtSpinor b(Hyperbolic<ExtElem>(ext(UniPoly(-2), UniPoly(0)), ext(-sixx1, twox1)),
                Hyperbolic<ExtElem>(ext(UniPoly(-1), UniPoly(-1)), ext(-fourx1, UniPoly(1))));
    ExtElem inv_2c = (ExtElem(2) * ExtElem::root()).inverse();
    return (a * ExtElem::alpha() + b * ExtElem::beta()) * inv_2c;
}

inline const std::vector<IdentityDescriptor>& registry();

} // namespace detail

inline const std::vector<IdentityDescriptor>& identity_registry() {
    return detail::registry();
}

inline std::vector<std::string> identity_ids() {
    std::vector<std::string> ids;
    for (const auto& d : identity_registry()) ids.push_back(d.id);
    return ids;
}

namespace detail {

inline ClauseOutcome run_clause(const ClauseSpec& spec, const GridConfig& grid) {
    ClauseOutcome out;
    out.clause = spec.name;
    auto printed = spec.eval_printed(grid);
    if (!printed) return out;
    out.printed_failure = std::move(printed);
    if (spec.eval_corrected) {
        auto corrected = spec.eval_corrected(grid);
        if (!corrected) {
            out.status = Status::HoldsCorrected;
            out.corrected_statement = spec.corrected_statement;
            return out;
        }
        out.corrected_failure = std::move(corrected);
    }
    out.status = Status::Fails;
    return out;
}

inline IdentityResult run_identity(const IdentityDescriptor& desc,
                                   const GridConfig& grid) {
    IdentityResult result;
    result.id = desc.id;
    result.citation = desc.citation;
    for (const auto& clause : desc.clauses) {
        ClauseOutcome outcome = run_clause(clause, grid);
        if (outcome.status == Status::Fails)
            result.status = Status::Fails;
        else if (outcome.status == Status::HoldsCorrected &&
                 result.status == Status::Holds)
            result.status = Status::HoldsCorrected;
        result.clauses.push_back(std::move(outcome));
    }
    return result;
}

} // namespace detail

inline IdentityResult verify_identity(const std::string& id,
                                      const GridConfig& grid) {
    grid.validate();
    for (const auto& desc : identity_registry())
        if (desc.id == id) return detail::run_identity(desc, grid);
    throw std::invalid_argument("unknown identity: " + id);
}

/// Run the registry (or the single entry named by filter) in stable order.
inline Report run_suite(const GridConfig& grid, const std::string& filter = "all") {
    grid.validate();
    if (filter.empty()) throw std::invalid_argument("empty identity filter");
    auto start = std::chrono::steady_clock::now();
    Report report;
    report.grid = grid;
    bool matched = false;
    for (const auto& desc : identity_registry()) {
        if (filter != "all" && desc.id != filter) continue;
        matched = true;
        report.results.push_back(detail::run_identity(desc, grid));
    }
    if (!matched) throw std::invalid_argument("unknown identity: " + filter);
    auto end = std::chrono::steady_clock::now();
    report.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return report;
}

inline bool has_bare_fails(const Report& report) {
    for (const auto& r : report.results)
        if (r.status == Status::Fails) return true;
    return false;
}

namespace detail {

inline std::vector<IdentityDescriptor> build_registry() {
    std::vector<IdentityDescriptor> reg;
    const HypSpinor A = lit_A();
    const HypSpinor A_typo = lit_A_typo();
    const HypSpinor A_scr = lit_A_scrambled();
    const HypSpinor B = lit_B();
    const Rational third(1, 3);
    const Rational half(1, 2);

    auto term = [](SeqKind k) {
        return [k](Index n) { return spinor_term(k, n); };
    };
    auto hsj = term(SeqKind::HSJ);
    auto hsjl = term(SeqKind::HSJL);

    // 1. Defining recurrences.
    reg.push_back(
        {"hsj-recurrence",
         "§3, recurrence displays HSJ_{n+2} = HSJ_{n+1} + 2HSJ_n and the HSJL analogue",
         {ClauseSpec{"hsj", "HSJ_{n+2} = HSJ_{n+1} + 2*HSJ_n",
                     scan_n(0, [hsj](Index n) { return hsj(n + 2); },
                            [hsj](Index n) { return hsj(n + 1) + hsj(n) * Rational(2); }),
                     "", nullptr},
          ClauseSpec{"hsjl", "HSJL_{n+2} = HSJL_{n+1} + 2*HSJL_n",
                     scan_n(0, [hsjl](Index n) { return hsjl(n + 2); },
                            [hsjl](Index n) { return hsjl(n + 1) + hsjl(n) * Rational(2); }),
                     "", nullptr}}});

    // 2. HSJ Binet formula.
    reg.push_back(
        {"hsj-binet", "§3, Thm 3.2 (Binet formula for HSJ_n)",
         {ClauseSpec{
             "main", "HSJ_n = (1/3)*(2^n*[1+8u; 4u] - (-1)^n*[1-u; 1+u])",
             scan_n(0, hsj,
                    [](Index n) { return spinor_binet(SeqKind::HSJ, n, true); }),
             "HSJ_n = (1/3)*(2^n*[1+8u; -2+4u] - (-1)^n*[1-u; 1+u])",
             scan_n(0, hsj,
                    [](Index n) { return spinor_binet(SeqKind::HSJ, n, false); })}}});

    // 3. HSJ generating function.
    reg.push_back(
        {"hsj-genfunc", "§3, Thm 3.3 (generating function for HSJ_n)",
         {ClauseSpec{
             "main",
             "G_HSJ(x) = (x*[3u; -1+2u] - [1+8u; -2+4u]) / (1 - x - 2*x^2)",
             scan_series(SeqKind::HSJ, true),
             "G_HSJ(x) = ([3u; -1+u] + x*[1+2u; 2u]) / (1 - x - 2*x^2)",
             scan_series(SeqKind::HSJ, false)}}});

    // 4. HSJ partial sums.
    reg.push_back(
        {"hsj-sum", "§3, Thm 3.4 (partial sums of HSJ_n)",
         {ClauseSpec{"range-sum",
                     "sum_{s=0..t} HSJ_{n+s} = (1/2)*(HSJ_{n+t+2} - HSJ_{n+1})",
                     scan_nt([](Index n, Index t) {
                                 return spinor_partial_sum(SeqKind::HSJ, n, t);
                             },
                             [hsj, half](Index n, Index t) {
                                 return (hsj(n + t + 2) - hsj(n + 1)) * half;
                             }),
                     "", nullptr},
          ClauseSpec{"prefix-sum",
                     "sum_{s=1..n} HSJ_s = (1/2)*(HSJ_{n+2} - HSJ_2)",
                     scan_n(0,
                            [](Index n) {
                                return n == 0 ? HypSpinor()
                                              : spinor_partial_sum(SeqKind::HSJ, 1, n - 1);
                            },
                            [hsj, half](Index n) {
                                return (hsj(n + 2) - hsj(2)) * half;
                            }),
                     "", nullptr}}});

    // 5. HSJ shifted sum and difference.
    reg.push_back(
        {"hsj-shift", "§3, Thm 3.5 (HSJ_{n+r} +/- HSJ_{n-r})",
         {ClauseSpec{
              "sum",
              "HSJ_{n+r} + HSJ_{n-r} = (1/3)*((2^(n-r) + 2^(n+r))*[8+u; 2+4u]"
              " - 2*(-1)^(n-1)*[1-u; 1+u])",
              scan_nr([hsj](Index n, Index r) { return hsj(n + r) + hsj(n - r); },
                      [A_scr, B, third](Index n, Index r) {
                          return (A_scr * (pow2(n - r) + pow2(n + r)) -
                                  B * (Rational(2) * alt_sign(n - 1))) *
                                 third;
                      }),
              "HSJ_{n+r} + HSJ_{n-r} = (1/3)*((2^(n-r) + 2^(n+r))*[1+8u; -2+4u]"
              " - 2*(-1)^(n-r)*[1-u; 1+u])",
              scan_nr([hsj](Index n, Index r) { return hsj(n + r) + hsj(n - r); },
                      [A, B, third](Index n, Index r) {
                          return (A * (pow2(n - r) + pow2(n + r)) -
                                  B * (Rational(2) * alt_sign(n - r))) *
                                 third;
                      })},
          ClauseSpec{
              "difference",
              "HSJ_{n+r} - HSJ_{n-r} = (1/3)*2^(n-r)*(2^(2*r) - 1)*[1+8u; -2+4u]",
              scan_nr([hsj](Index n, Index r) { return hsj(n + r) - hsj(n - r); },
                      [A, third](Index n, Index r) {
                          return A * (pow2(n - r) * (pow2(2 * r) - Rational(1)) * third);
                      }),
              "", nullptr}}});

    // 6. HSJ consecutive sum.
    reg.push_back(
        {"hsj-consecutive", "§3, Thm 3.6 (HSJ_{n+1} + HSJ_n)",
         {ClauseSpec{"main", "HSJ_{n+1} + HSJ_n = 2^n*[1+8u; 4u]",
                     scan_n(1, [hsj](Index n) { return hsj(n + 1) + hsj(n); },
                            [A_typo](Index n) { return A_typo * pow2(n); }),
                     "HSJ_{n+1} + HSJ_n = 2^n*[1+8u; -2+4u]",
                     scan_n(1, [hsj](Index n) { return hsj(n + 1) + hsj(n); },
                            [A](Index n) { return A * pow2(n); })}}});

    // 7. HSJ even/odd indexed sums.
    reg.push_back(
        {"hsj-parity-sum", "§3, Thm 3.7 (even- and odd-indexed partial sums)",
         {ClauseSpec{
              "even",
              "sum_{i=1..n} HSJ_{2i} = (2/3)*HSJ_{2n+1}"
              " + (1/3)*(HSJ_2 - (2n+1)*HSJ_3 + n*HSJ_4)",
              scan_n(1,
                     [hsj](Index n) {
                         HypSpinor acc;
                         for (Index i = 1; i <= n; ++i) acc += hsj(2 * i);
                         return acc;
                     },
                     [hsj, third](Index n) {
                         return hsj(2 * n + 1) * Rational(2, 3) +
                                (hsj(2) - hsj(3) * Rational(Int(2 * n + 1)) +
                                 hsj(4) * Rational(Int(n))) *
                                    third;
                     }),
              "", nullptr},
          ClauseSpec{
              "odd",
              "sum_{i=1..n} HSJ_{2i-1} = (2/3)*HSJ_{2n}"
              " - (1/3)*(n*HSJ_4 - 2n*HSJ_3 + 2*HSJ_0)",
              scan_n(1,
                     [hsj](Index n) {
                         HypSpinor acc;
                         for (Index i = 1; i <= n; ++i) acc += hsj(2 * i - 1);
                         return acc;
                     },
                     [hsj, third](Index n) {
                         return hsj(2 * n) * Rational(2, 3) -
                                (hsj(4) * Rational(Int(n)) -
                                 hsj(3) * Rational(Int(2 * n)) +
                                 hsj(0) * Rational(2)) *
                                    third;
                     }),
              "", nullptr}}});

    // 8. HSJL Binet formula.
    reg.push_back(
        {"hsjl-binet", "§3, Thm 3.9 (Binet formula for HSJL_n)",
         {ClauseSpec{"main",
                     "HSJL_n = 2^n*[1+8u; -2+4u] + (-1)^n*[1-u; 1+u]",
                     scan_n(0, hsjl,
                            [A, B](Index n) {
                                return A * pow2(n) + B * alt_sign(n);
                            }),
                     "", nullptr}}});

    // 9. HSJL generating function.
    reg.push_back(
        {"hsjl-genfunc", "§3, Thm 3.10 (generating function for HSJL_n)",
         {ClauseSpec{
             "main",
             "G_HSJL(x) = (x*[2+7u; -1+5u] - 3*[1+8u; -2+4u]) / (1 - x - 2*x^2)",
             scan_series(SeqKind::HSJL, true),
             "G_HSJL(x) = ([2+7u; -1+5u] + x*[-1+10u; -4+2u]) / (1 - x - 2*x^2)",
             scan_series(SeqKind::HSJL, false)}}});

    // 10. HSJL partial sums.
    reg.push_back(
        {"hsjl-sum", "§3, Thm 3.11 (partial sums of HSJL_n)",
         {ClauseSpec{"main",
                     "sum_{s=0..t} HSJL_{n+s} = (1/2)*(HSJL_{n+t+2} - HSJL_{n+1})",
                     scan_nt([](Index n, Index t) {
                                 return spinor_partial_sum(SeqKind::HSJL, n, t);
                             },
                             [hsjl, half](Index n, Index t) {
                                 return (hsjl(n + t + 2) - hsjl(n + 1)) * half;
                             }),
                     "", nullptr}}});

    // 11. HSJL consecutive sum and shifted difference.
    reg.push_back(
        {"hsjl-shift", "§3, Thm 3.12 (HSJL consecutive sum, r-shifted difference)",
         {ClauseSpec{"consecutive",
                     "HSJL_{n+1} + HSJL_n = 3*2^n*[1+8u; -2+4u]",
                     scan_n(1, [hsjl](Index n) { return hsjl(n + 1) + hsjl(n); },
                            [A](Index n) { return A * (Rational(3) * pow2(n)); }),
                     "", nullptr},
          ClauseSpec{
              "difference",
              "HSJL_{n+r} - HSJL_{n-r} = 3*2^(n-1)*[1+8u; -2+4u]",
              scan_nr([hsjl](Index n, Index r) { return hsjl(n + r) - hsjl(n - r); },
                      [A](Index n, Index) {
                          return A * (Rational(3) * pow2(n - 1));
                      }),
              "HSJL_{n+r} - HSJL_{n-r} = 2^(n-r)*(2^(2*r) - 1)*[1+8u; -2+4u]",
              scan_nr([hsjl](Index n, Index r) { return hsjl(n + r) - hsjl(n - r); },
                      [A](Index n, Index r) {
                          return A * (pow2(n - r) * (pow2(2 * r) - Rational(1)));
                      })}}});

    // 12. Mixed HSJL/HSJ pair.
    reg.push_back(
        {"hsj-hsjl-mixed", "§3, Thm 3.13 (HSJL_n combined with HSJ_n)",
         {ClauseSpec{"sum", "HSJL_n + HSJ_n = 2*HSJ_{n+1}",
                     scan_n(1, [hsj, hsjl](Index n) { return hsjl(n) + hsj(n); },
                            [hsj](Index n) { return hsj(n + 1) * Rational(2); }),
                     "", nullptr},
          ClauseSpec{"binet-combination",
                     "HSJL_n + 3*HSJ_n = 2^(n+1)*[1+8u; -2+4u]",
                     scan_n(1,
                            [hsj, hsjl](Index n) {
                                return hsjl(n) + hsj(n) * Rational(3);
                            },
                            [A](Index n) { return A * pow2(n + 1); }),
                     "", nullptr}}});

    // 13. Product with Jacobsthal-Lucas numbers.
    reg.push_back(
        {"hsjl-product",
         "§3, closing theorem (HSJ_n*JL_n + 2*HSJ_{n-1}*JL_{n-1} = HSJL_{2n-1})",
         {ClauseSpec{"main", "HSJ_n*JL_n + 2*HSJ_{n-1}*JL_{n-1} = HSJL_{2n-1}",
                     scan_n(1,
                            [hsj](Index n) {
                                return hsj(n) * Rational(jacobsthal_lucas(n)) +
                                       hsj(n - 1) *
                                           (Rational(2) *
                                            Rational(jacobsthal_lucas(n - 1)));
                            },
                            [hsjl](Index n) { return hsjl(2 * n - 1); }),
                     "", nullptr}}});

    // 14. Polynomial spinors: recurrence, Binet, generating function.
    reg.push_back(
        {"poly-genfunc",
         "§4 (polynomial spinor recurrence, Binet formula, generating function)",
         {ClauseSpec{
              "recurrence", "HSJ_n(x) = HSJ_{n-1}(x) + 2x*HSJ_{n-2}(x)",
              [](const GridConfig& g) -> std::optional<Counterexample> {
                  UniPoly two_x = UniPoly::monomial(Rational(2), 1);
                  for (Index n = 2; n <= g.n_max; ++n) {
                      auto ce = mismatch(param_n(n), spinor_poly_term(n),
                                         spinor_poly_term(n - 1) +
                                             spinor_poly_term(n - 2) * two_x);
                      if (ce) return ce;
                  }
                  return std::nullopt;
              },
              "", nullptr},
          ClauseSpec{
              "binet",
              "HSJ_n(x) = (1/(2c))*(A(x)*alpha(x) + B(x)*beta(x)) with"
              " A(x) = [-1+c+(4x+1+c)u; -1-c+(4x+1+c)u],"
              " B(x) = [-2+((2x+1)c-6x-1)u; -1-c+(c-4x-1)u], c = sqrt(8x+1)",
              [](const GridConfig& g) -> std::optional<Counterexample> {
                  ExtSpinor rhs = printed_poly_binet_rhs();
                  for (Index n = 0; n <= g.n_max; ++n) {
                      auto ce = mismatch(param_n(n),
                                         spinor_poly_lift(spinor_poly_term(n)), rhs);
                      if (ce) return ce;
                  }
                  return std::nullopt;
              },
              "HSJ_n(x) = (1/(2c))*(A(x)*alpha(x)^n + B(x)*beta(x)^n) with"
              " A(x) = [2+(6x+1+(2x+1)c)u; -1-c+(4x+1+c)u],"
              " B(x) = [-2+((2x+1)c-6x-1)u; 1-c+(c-4x-1)u], c = sqrt(8x+1)",
              [](const GridConfig& g) -> std::optional<Counterexample> {
                  for (Index n = 0; n <= g.n_max; ++n) {
                      auto ce = mismatch(param_n(n), spinor_poly_term(n),
                                         spinor_poly_binet(n));
                      if (ce) return ce;
                  }
                  return std::nullopt;
              }},
          ClauseSpec{
              "genfunc",
              "G_HSJ(t,x) = ((1-t)*[(2x+1)u; -1+u] + [1+(4x+1)u; -1+(2x+1)u])"
              " / (1 - t - 2x*t^2)",
              scan_poly_series(true),
              "G_HSJ(t,x) = ((1-t)*[(2x+1)u; -1+u] + t*[1+(4x+1)u; -1+(2x+1)u])"
              " / (1 - t - 2x*t^2)",
              scan_poly_series(false)}}});

    return reg;
}

inline const std::vector<IdentityDescriptor>& registry() {
    static const std::vector<IdentityDescriptor> reg = build_registry();
    return reg;
}

} // namespace detail

} // namespace jacspin
