#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "newtrace/arith.hpp"
#include "newtrace/dimension.hpp"
#include "newtrace/eigensplit.hpp"
#include "newtrace/factored.hpp"
#include "newtrace/hecke_trace.hpp"
#include "newtrace/qexpansion.hpp"
#include "newtrace/rational.hpp"
#include "newtrace/tables.hpp"

namespace {

using namespace newtrace;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

// Accepts "12", "2,4,6" and "2..24" (even weights, step 2).
std::vector<int> parse_weights(const std::string& spec) {
    std::vector<int> out;
    std::stringstream stream(spec);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const auto dots = token.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(token));
            continue;
        }
        const int lo = std::stoi(token.substr(0, dots));
        const int hi = std::stoi(token.substr(dots + 2));
        for (int k = lo; k <= hi; k += 2) out.push_back(k);
    }
    if (out.empty()) throw CLI::ValidationError("--weights", "empty weight list");
    for (int k : out) {
        if (k < 2 || k % 2 != 0) {
            throw CLI::ValidationError("--weights",
                                       "weights must be even and >= 2");
        }
    }
    return out;
}

int run_dim(int k, std::int64_t N, const std::string& split) {
    const Factored level = factor(N);
    if (split.empty()) {
        std::cout << dim_newform(k, level) << "\n";
        return 0;
    }
    const Factored nx = nstar(level);
    if (split == "all") {
        std::cout << "{";
        bool first = true;
        for (std::int64_t i : nx.divisors()) {
            if (!first) std::cout << ", ";
            first = false;
            std::cout << i << ":" << dim_split(k, level, i);
        }
        std::cout << "}\n";
        return 0;
    }
    std::cout << dim_split(k, level, std::stoll(split)) << "\n";
    return 0;
}

int run_trace(int k, std::int64_t N, std::int64_t l, const std::string& split,
              bool full_space) {
    if (!factor(l).is_squarefree()) {
        std::cerr << "error: unsupported: l not square-free\n";
        return kExitUsage;
    }
    Rat value;
    if (full_space) {
        value = trace_full(k, N, l);
    } else if (!split.empty()) {
        value = trace_split(k, N, l, std::stoll(split));
    } else {
        value = trace_newform(k, N, l);
    }
    std::cout << rat_to_string(value) << "\n";
    return 0;
}

int run_table(const std::string& which, int max_level, const std::string& weights,
              const std::string& format) {
    static const std::map<std::string, TableKind> kinds = {
        {"dims", TableKind::Dims},       {"trace2", TableKind::Trace2},
        {"trace3", TableKind::Trace3},   {"traceL", TableKind::TraceL},
        {"dtables", TableKind::DTables},
    };
    static const std::map<std::string, TableFormat> formats = {
        {"text", TableFormat::Text},
        {"csv", TableFormat::Csv},
        {"json", TableFormat::Json},
    };
    TableOptions opt;
    opt.which = kinds.at(which);
    opt.max_level = max_level;
    opt.weights = parse_weights(weights);
    opt.format = formats.at(format);
    std::cout << generate_table(opt);
    return 0;
}

bool check(bool ok, const std::string& what, std::string* first_failure) {
    if (!ok && first_failure->empty()) *first_failure = what;
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    return ok;
}

int run_verify(int prec, bool corrupt) {
    std::string first_failure;
    bool all = true;

    QSeries delta = delta14(prec);
    if (corrupt) delta.set_coeff(2, delta.coeff(2) + 1);

    all &= check(delta.coeff(1) == 1 && delta.coeff(2) == -1 &&
                     delta.coeff(3) == -2,
                 "delta14 leading coefficients (1, -1, -2)", &first_failure);

    const VerifyReport d_report = hecke_verify(delta, 2, 14, prec);
    all &= check(d_report.pass,
                 "delta14 primitive-form checks to precision " +
                     std::to_string(prec) +
                     (d_report.pass ? "" : " [" + d_report.first_failure + "]"),
                 &first_failure);

    const int prec4 = std::min(prec, 50);
    const Weight4Forms forms = weight4_forms(prec4);
    all &= check(forms.f1.coeff(2) == 2 && forms.f1.coeff(3) == -2 &&
                     forms.f1.coeff(4) == 4,
                 "weight-4 all-plus form coefficients (2, -2, 4)", &first_failure);
    const VerifyReport f1_report = hecke_verify_split(forms.f1, 4, 14, 1, prec4);
    all &= check(f1_report.pass,
                 "weight-4 all-plus form against subspace traces" +
                     (f1_report.pass ? std::string()
                                     : " [" + f1_report.first_failure + "]"),
                 &first_failure);
    const VerifyReport f14_report =
        hecke_verify_split(forms.f14, 4, 14, 14, prec4);
    all &= check(f14_report.pass,
                 "weight-4 all-minus form against subspace traces" +
                     (f14_report.pass ? std::string()
                                      : " [" + f14_report.first_failure + "]"),
                 &first_failure);

    bool integral = true;
    for (int n = 0; n <= prec4; ++n) {
        integral &= is_integer(delta.coeff(std::min(n, delta.precision())));
        integral &= is_integer(forms.f1.coeff(n));
        integral &= is_integer(forms.f14.coeff(n));
    }
    all &= check(integral, "exact cancellation of the 1/2 and 1/8 prefactors",
                 &first_failure);

    if (!all) {
        std::cout << "first failure: " << first_failure << "\n";
        return kExitVerifyFailure;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Traces of Hecke operators on newform spaces"};
    app.require_subcommand(1);

    int k = 2;
    std::int64_t N = 1;
    std::int64_t l = 2;
    std::string split;
    bool full_space = false;

    auto* dim = app.add_subcommand("dim", "Newform dimension, optionally split "
                                          "by eigenvalue signs");
    dim->add_option("--weight,-k", k, "Even weight >= 2")->required();
    dim->add_option("--level,-N", N, "Level")->required();
    dim->add_option("--split", split,
                    "A divisor i of nstar(N), or 'all' for the full partition");

    auto* trace = app.add_subcommand("trace", "Trace of a Hecke operator");
    trace->add_option("--weight,-k", k, "Even weight >= 2")->required();
    trace->add_option("--level,-N", N, "Level")->required();
    trace->add_option("--hecke,-l", l, "Squarefree Hecke index")->required();
    trace->add_option("--split", split, "Divisor i of nstar(N)");
    trace->add_flag("--full-space", full_space,
                    "Trace on the full cuspform space instead of newforms");

    std::string which = "dims";
    int max_level = 42;
    std::string weights = "2..24";
    std::string format = "text";
    auto* table = app.add_subcommand("table", "Regenerate a value table");
    table->add_option("--which", which, "dims|trace2|trace3|traceL|dtables")
        ->check(CLI::IsMember({"dims", "trace2", "trace3", "traceL", "dtables"}))
        ->required();
    table->add_option("--max-level", max_level, "Largest level (default 42)");
    table->add_option("--weights", weights, "Weight list, e.g. 2..24 or 2,4,8");
    table->add_option("--format", format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    int prec = 128;
    bool corrupt = false;
    auto* verify = app.add_subcommand("verify-qexp",
                                      "Verify the level-14 q-expansions "
                                      "against the trace formulas");
    verify->add_option("--prec", prec, "Coefficient precision (>= 10)")
        ->check(CLI::Range(10, 100000));
    verify->add_flag("--inject-corruption", corrupt)->group("");  // test hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dim->parsed()) return run_dim(k, N, split);
        if (trace->parsed()) return run_trace(k, N, l, split, full_space);
        if (table->parsed()) return run_table(which, max_level, weights, format);
        if (verify->parsed()) return run_verify(prec, corrupt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
