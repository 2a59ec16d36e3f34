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

#include <jacspin/jacspin.hpp>
#include <jacspin/json_io.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace jacspin;

enum class Format { Pretty, Json, Csv };

Format parse_format(const std::string& name) {
    if (name == "pretty") return Format::Pretty;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw CLI::ValidationError("--format", "must be one of pretty, json, csv");
}

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format: pretty, json, csv")
        ->default_val("pretty")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
}

/// Exact values go to stdout; the legend goes to stderr so scripted output
/// stays clean.
void hyperbolic_legend() {
    std::cerr << "legend: u^2 = +1 (the hyperbolic unit, elsewhere printed"
                 " as j)\n";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += "\"";
    return out;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

template <class S>
std::vector<std::string> spinor_row(const Spinor<S>& s) {
    using jacspin::to_string;
    return {to_string(s.c1().re()), to_string(s.c1().hy()),
            to_string(s.c2().re()), to_string(s.c2().hy())};
}

void csv_line(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << csv_field(fields[i]);
    }
    std::cout << "\n";
}

// ---- gen ----

struct GenArgs {
    std::string seq = "hsj";
    Index from = 0;
    Index to = 16;
    std::string format = "pretty";
};

int run_gen(const GenArgs& args) {
    if (args.to < args.from)
        throw CLI::ValidationError("--to", "must be >= --from");
    Format fmt = parse_format(args.format);
    bool spinors = args.seq == "hsj" || args.seq == "hsjl";
    bool quats = args.seq == "sjq" || args.seq == "sjlq";
    bool numbers = args.seq == "j" || args.seq == "jl";
    if (!spinors && !quats && !numbers)
        throw CLI::ValidationError(
            "--seq", "must be one of hsj, hsjl, j, jl, sjq, sjlq");
    SeqKind kind = (args.seq == "hsj" || args.seq == "j" || args.seq == "sjq")
                       ? SeqKind::HSJ
                       : SeqKind::HSJL;

    nlohmann::json out = nlohmann::json::array();
    if (fmt == Format::Csv)
        csv_line(spinors ? std::vector<std::string>{"n", "c1_re", "c1_hy",
                                                    "c2_re", "c2_hy"}
                 : quats ? std::vector<std::string>{"n", "a", "b", "c", "d"}
                         : std::vector<std::string>{"n", "value"});
    if (fmt == Format::Pretty && spinors) hyperbolic_legend();
    for (Index n = args.from; n <= args.to; ++n) {
        std::string label = std::to_string(n);
        if (spinors) {
            HypSpinor s = spinor_term(kind, n);
            if (fmt == Format::Pretty)
                std::cout << to_string(s) << "\n";
            else if (fmt == Format::Json)
                out.push_back(nlohmann::json{{"n", n}, {"value", s}});
            else {
                auto row = spinor_row(s);
                row.insert(row.begin(), label);
                csv_line(row);
            }
        } else if (quats) {
            SplitQuat q = split_quat_seq(kind, n);
            if (fmt == Format::Pretty)
                std::cout << to_string(q) << "\n";
            else if (fmt == Format::Json)
                out.push_back(nlohmann::json{{"n", n}, {"value", q}});
            else
                csv_line({label, to_string(q.a()), to_string(q.b()),
                          to_string(q.c()), to_string(q.d())});
        } else {
            std::string value = seq_number(kind, n).str();
            if (fmt == Format::Pretty)
                std::cout << value << "\n";
            else if (fmt == Format::Json)
                out.push_back(nlohmann::json{{"n", n}, {"value", value}});
            else
                csv_line({label, value});
        }
    }
    if (fmt == Format::Json) print_json(out);
    return 0;
}

// ---- series ----

struct SeriesArgs {
    std::string seq = "hsj";
    std::size_t order = 32;
    std::string format = "pretty";
};

int run_series(const SeriesArgs& args) {
    if (args.seq != "hsj" && args.seq != "hsjl")
        throw CLI::ValidationError("--seq", "must be hsj or hsjl");
    Format fmt = parse_format(args.format);
    SeqKind kind = args.seq == "hsj" ? SeqKind::HSJ : SeqKind::HSJL;
    auto series = gen_function_series(kind, args.order);
    if (fmt == Format::Json) {
        print_json(nlohmann::json(series));
        return 0;
    }
    if (fmt == Format::Csv) {
        csv_line({"n", "c1_re", "c1_hy", "c2_re", "c2_hy"});
        for (std::size_t n = 0; n <= series.order(); ++n) {
            auto row = spinor_row(series.coeff(n));
            row.insert(row.begin(), std::to_string(n));
            csv_line(row);
        }
        return 0;
    }
    hyperbolic_legend();
    for (std::size_t n = 0; n <= series.order(); ++n)
        std::cout << "n=" << n << ": " << to_string(series.coeff(n)) << "\n";
    return 0;
}

// ---- poly ----

struct PolyArgs {
    Index n = 0;
    std::string eval_at;
    std::string format = "pretty";
};

int run_poly(const PolyArgs& args) {
    Format fmt = parse_format(args.format);
    PolySpinor term = spinor_poly_term(args.n);
    if (!args.eval_at.empty()) {
        Rational at = parse_rational(args.eval_at);
        HypSpinor value = spinor_poly_eval(term, at);
        if (fmt == Format::Json)
            print_json(nlohmann::json{
                {"n", args.n}, {"eval_at", at}, {"value", value}});
        else if (fmt == Format::Csv) {
            csv_line({"n", "eval_at", "c1_re", "c1_hy", "c2_re", "c2_hy"});
            auto row = spinor_row(value);
            row.insert(row.begin(), to_string(at));
            row.insert(row.begin(), std::to_string(args.n));
            csv_line(row);
        } else {
            hyperbolic_legend();
            std::cout << to_string(value) << "\n";
        }
        return 0;
    }
    if (fmt == Format::Json)
        print_json(nlohmann::json{{"n", args.n}, {"value", term}});
    else if (fmt == Format::Csv) {
        csv_line({"n", "c1_re", "c1_hy", "c2_re", "c2_hy"});
        auto row = spinor_row(term);
        row.insert(row.begin(), std::to_string(args.n));
        csv_line(row);
    } else {
        hyperbolic_legend();
        std::cout << to_string(term) << "\n";
    }
    return 0;
}

// ---- quat ----

struct QuatArgs {
    std::string op = "mul";
    std::string lhs;
    std::string rhs;
    std::string format = "pretty";
};

int run_quat(const QuatArgs& args) {
    Format fmt = parse_format(args.format);
    SplitQuat lhs = parse_split_quat(args.lhs);
    if (args.op == "mul") {
        if (args.rhs.empty())
            throw CLI::ValidationError("--rhs", "required for --op mul");
        SplitQuat result = lhs * parse_split_quat(args.rhs);
        if (fmt == Format::Json)
            print_json(nlohmann::json{{"result", result}});
        else if (fmt == Format::Csv) {
            csv_line({"a", "b", "c", "d"});
            csv_line({to_string(result.a()), to_string(result.b()),
                      to_string(result.c()), to_string(result.d())});
        } else
            std::cout << to_string(result) << "\n";
        return 0;
    }
    if (!args.rhs.empty())
        throw CLI::ValidationError("--rhs", "only valid with --op mul");
    if (args.op == "conj") {
        SplitQuat result = lhs.conj();
        if (fmt == Format::Json)
            print_json(nlohmann::json{{"result", result}});
        else if (fmt == Format::Csv) {
            csv_line({"a", "b", "c", "d"});
            csv_line({to_string(result.a()), to_string(result.b()),
                      to_string(result.c()), to_string(result.d())});
        } else
            std::cout << to_string(result) << "\n";
        return 0;
    }
    if (args.op == "norm") {
        Rational result = lhs.norm();
        if (fmt == Format::Json)
            print_json(nlohmann::json{{"result", result}});
        else if (fmt == Format::Csv) {
            csv_line({"value"});
            csv_line({to_string(result)});
        } else
            std::cout << to_string(result) << "\n";
        return 0;
    }
    throw CLI::ValidationError("--op", "must be one of mul, conj, norm");
}

// ---- verify ----

struct VerifyArgs {
    std::string suite = "all";
    GridConfig grid;
    bool strict = false;
    std::string format = "pretty";
};

void print_report_pretty(const Report& report) {
    for (const auto& r : report.results) {
        std::cout << r.id << " (" << r.citation
                  << "): " << to_string(r.status) << "\n";
        for (const auto& c : r.clauses) {
            std::cout << "  clause " << c.clause << ": " << to_string(c.status)
                      << "\n";
            if (c.printed_failure)
                std::cout << "    printed form fails at " << c.printed_failure->params
                          << ": lhs = " << c.printed_failure->lhs
                          << ", rhs = " << c.printed_failure->rhs << "\n";
            if (c.corrected_statement)
                std::cout << "    corrected: " << *c.corrected_statement << "\n";
        }
    }
    std::cout << "grid: n_max=" << report.grid.n_max
              << " r_max=" << report.grid.r_max
              << " t_max=" << report.grid.t_max
              << " order=" << report.grid.order << "\n";
    std::cout << "note: " << report.note << "\n";
    std::cout << "runtime: " << report.runtime_ms << " ms\n";
}

void print_report_csv(const Report& report) {
    csv_line({"id", "citation", "status", "counterexample_params",
              "counterexample_lhs", "counterexample_rhs",
              "corrected_statement"});
    for (const auto& r : report.results) {
        auto ce = r.counterexample();
        auto corrected = r.corrected_statement();
        csv_line({r.id, r.citation, to_string(r.status),
                  ce ? ce->params : "", ce ? ce->lhs : "", ce ? ce->rhs : "",
                  corrected ? *corrected : ""});
    }
}

int run_verify(const VerifyArgs& args) {
    Format fmt = parse_format(args.format);
    Report report = run_suite(args.grid, args.suite);
    if (fmt == Format::Json)
        print_json(nlohmann::json(report));
    else if (fmt == Format::Csv)
        print_report_csv(report);
    else
        print_report_pretty(report);
    if (args.strict && has_bare_fails(report)) return 2;
    return 0;
}

// ---- isotropic ----

struct IsotropicArgs {
    std::string phi1 = "1";
    std::string phi2 = "0";
    std::string format = "pretty";
};

int run_isotropic(const IsotropicArgs& args) {
    Format fmt = parse_format(args.format);
    IsotropicVector v =
        isotropic_vector(parse_hyperbolic(args.phi1), parse_hyperbolic(args.phi2));
    if (fmt == Format::Json) {
        print_json(nlohmann::json(v));
        return 0;
    }
    if (fmt == Format::Csv) {
        csv_line({"component", "re", "hy"});
        csv_line({"x1", to_string(v.x1.re()), to_string(v.x1.hy())});
        csv_line({"x2", to_string(v.x2.re()), to_string(v.x2.hy())});
        csv_line({"x3", to_string(v.x3.re()), to_string(v.x3.hy())});
        csv_line({"form", to_string(v.form.re()), to_string(v.form.hy())});
        return 0;
    }
    hyperbolic_legend();
    std::cout << "x1 = " << to_string(v.x1) << "\n";
    std::cout << "x2 = " << to_string(v.x2) << "\n";
    std::cout << "x3 = " << to_string(v.x3) << "\n";
    std::cout << "Q = " << to_string(v.form) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hyperbolic Jacobsthal spinor sequences, series and"
                 " identity verification"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "print sequence terms");
    gen->add_option("--seq", gen_args.seq,
                    "sequence: hsj, hsjl, j, jl, sjq, sjlq")
        ->default_val("hsj");
    gen->add_option("--from", gen_args.from, "first index")->default_val(0);
    gen->add_option("--to", gen_args.to, "last index")->default_val(16);
    add_format_option(gen, gen_args.format);

    SeriesArgs series_args;
    auto* series = app.add_subcommand(
        "series", "expand a generating function to a truncation order");
    series->add_option("--seq", series_args.seq, "sequence: hsj or hsjl")
        ->default_val("hsj");
    series->add_option("--order", series_args.order, "truncation order")
        ->default_val(32);
    add_format_option(series, series_args.format);

    PolyArgs poly_args;
    auto* poly = app.add_subcommand("poly", "polynomial spinor term");
    poly->add_option("--n", poly_args.n, "term index")->required();
    poly->add_option("--eval-at", poly_args.eval_at,
                     "evaluate at an exact rational x");
    add_format_option(poly, poly_args.format);

    QuatArgs quat_args;
    auto* quat = app.add_subcommand("quat", "split-quaternion arithmetic");
    quat->add_option("--op", quat_args.op, "operation: mul, conj, norm")
        ->default_val("mul");
    quat->add_option("--lhs", quat_args.lhs, "left operand, e.g. 1+2i-3k")
        ->required();
    quat->add_option("--rhs", quat_args.rhs, "right operand (mul only)");
    add_format_option(quat, quat_args.format);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "check every registered identity against the oracle");
    verify->add_option("--suite", verify_args.suite,
                       "all, or a single identity id")
        ->default_val("all");
    verify->add_option("--n-max", verify_args.grid.n_max, "index bound")
        ->default_val(64);
    verify->add_option("--r-max", verify_args.grid.r_max, "shift bound")
        ->default_val(8);
    verify->add_option("--t-max", verify_args.grid.t_max, "sum-length bound")
        ->default_val(8);
    verify->add_option("--order", verify_args.grid.order,
                       "series truncation order")
        ->default_val(32);
    verify->add_flag("--strict", verify_args.strict,
                     "exit 2 if any identity fails without a verified"
                     " correction");
    add_format_option(verify, verify_args.format);

    IsotropicArgs iso_args;
    auto* iso = app.add_subcommand(
        "isotropic", "isotropic-vector components and quadratic form value");
    iso->add_option("--phi1", iso_args.phi1, "first spinor component")
        ->default_val("1");
    iso->add_option("--phi2", iso_args.phi2, "second spinor component")
        ->default_val("0");
    add_format_option(iso, iso_args.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (series->parsed()) return run_series(series_args);
        if (poly->parsed()) return run_poly(poly_args);
        if (quat->parsed()) return run_quat(quat_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (iso->parsed()) return run_isotropic(iso_args);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
