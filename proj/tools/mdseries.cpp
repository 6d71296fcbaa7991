// Command-line front end: coefficient tables, finite-order verification runs,
// and numeric free-energy evaluation. Exit codes are the machine contract:
//   0 success / verified, 1 refuted (witness emitted),
//   2 usage error,        3 divergence or internal-consistency error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdseries/mdseries.hpp"

namespace {

using namespace mdseries;

struct Options {
    int order = 6;
    std::string format = "text";
    std::string b_file;
    std::string d_str;
    std::string p_str;
    unsigned precision = 50;
    std::string perturb;
};

Perturbation parse_perturbation(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= s.size())
        throw UsageError("--perturb expects k:delta (e.g. 3:1 or 3:-1/2)");
    Perturbation p;
    try {
        p.k = std::stoi(s.substr(0, colon));
    } catch (const std::exception&) {
        throw UsageError("--perturb index must be an integer");
    }
    p.delta = Rational::parse(s.substr(colon + 1));
    return p;
}

std::optional<Perturbation> perturbation_of(const Options& opt) {
    if (opt.perturb.empty()) return std::nullopt;
    return parse_perturbation(opt.perturb);
}

/// Load a b-sequence: the literal keyword "catalan", or a file with lines
/// "i <rational>" ('#' comments and blank lines allowed; omitted indices are
/// zero; indices beyond the order are ignored so one file serves many runs).
BSequence load_b_sequence(const std::string& spec, int order) {
    if (spec == "catalan") return catalan_b(order);
    std::ifstream in(spec);
    if (!in) throw UsageError("cannot open b-sequence file: " + spec);
    BSequence b(order);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream row(line);
        int i;
        std::string value;
        if (!(row >> i)) continue; // blank or comment-only line
        if (!(row >> value))
            throw UsageError(spec + ":" + std::to_string(line_no) + ": expected 'i <rational>'");
        if (i == 1) throw UsageError(spec + ":" + std::to_string(line_no) + ": b_1 is fixed to d");
        if (i < 1) throw UsageError(spec + ":" + std::to_string(line_no) + ": bad index");
        if (i > order) continue;
        b.set(i, MultiPoly(Rational::parse(value)));
    }
    return b;
}

void check_format(const std::string& f) {
    if (f != "text" && f != "json" && f != "latex")
        throw UsageError("--format must be text, json, or latex");
}

void print_tables(const Options& opt, const std::string& command,
                  const std::vector<CoeffTable>& tables) {
    if (opt.format == "json")
        std::cout << tables_report(command, opt.order, tables).dump(2) << "\n";
    else if (opt.format == "latex")
        std::cout << tables_latex(tables);
    else
        std::cout << tables_text(tables);
}

int print_verdicts(const Options& opt, const std::vector<Verdict>& verdicts) {
    if (opt.format == "json") {
        if (verdicts.size() == 1) {
            std::cout << verdict_report(verdicts[0]).dump(2) << "\n";
        } else {
            json arr = json::array();
            for (const Verdict& v : verdicts) arr.push_back(verdict_report(v));
            std::cout << arr.dump(2) << "\n";
        }
    } else {
        bool first = true;
        for (const Verdict& v : verdicts) {
            if (!first) std::cout << "\n";
            first = false;
            std::cout << verdict_text(v);
            if (opt.format == "latex" && v.witness)
                std::cout << "residual (latex): " << latex_poly_factored(v.witness->residual)
                          << "\n";
        }
    }
    int code = 0;
    for (const Verdict& v : verdicts) {
        if (v.status == Status::divergence) return 3;
        if (v.status == Status::refuted) code = 1;
    }
    return code;
}

int run_transform(const Options& opt, bool forward) {
    if (perturbation_of(opt)) throw UsageError("--perturb applies to verify commands only");
    if (forward) {
        BSequence b =
            opt.b_file.empty() ? BSequence::symbolic(opt.order) : load_b_sequence(opt.b_file, opt.order);
        print_tables(opt, "transform-jbar-from-b", tables_from_jbar(jbar_from_b(b)));
    } else {
        if (!opt.b_file.empty())
            throw UsageError("b-from-jbar runs on the symbolic kernel sequence; drop --b-file");
        print_tables(opt, "transform-b-from-jbar", tables_from_b(b_from_jbar(JSequence::symbolic(opt.order))));
    }
    return 0;
}

int run_coeffs(const Options& opt, bool first_form) {
    if (perturbation_of(opt)) throw UsageError("--perturb applies to verify commands only");
    if (first_form) {
        if (!opt.b_file.empty())
            throw UsageError("coeffs first consumes the symbolic kernel sequence; drop --b-file");
        print_tables(opt, "coeffs-first", tables_from_coeffs(a_coeffs(JSequence::symbolic(opt.order)), false));
    } else {
        BSequence b =
            opt.b_file.empty() ? BSequence::symbolic(opt.order) : load_b_sequence(opt.b_file, opt.order);
        print_tables(opt, "coeffs-second", tables_from_coeffs(a_prime_coeffs(b), true));
    }
    return 0;
}

int run_verify(const Options& opt, const std::string& what) {
    std::optional<Perturbation> pert = perturbation_of(opt);
    std::vector<Verdict> verdicts;
    if (what == "master") {
        verdicts.push_back(verify_master(opt.order, pert));
    } else if (what == "catalan") {
        verdicts = verify_catalan(opt.order, pert);
    } else if (what == "part3") {
        verdicts.push_back(verify_part3(opt.order, pert));
    } else if (what == "triangularity") {
        if (pert) throw UsageError("--perturb is not supported for triangularity");
        verdicts.push_back(triangularity_check(opt.order));
    } else {
        throw UsageError("unknown verify target: " + what);
    }
    return print_verdicts(opt, verdicts);
}

int run_lambda(const Options& opt) {
    if (perturbation_of(opt)) throw UsageError("--perturb applies to verify commands only");
    if (opt.d_str.empty() || opt.p_str.empty())
        throw UsageError("eval lambda requires --d and --p");
    if (opt.b_file.empty())
        throw UsageError("eval lambda requires --b-file (a file or the keyword catalan)");
    Rational d = Rational::parse(opt.d_str);
    Rational p = Rational::parse(opt.p_str);
    if (d < Rational(1)) throw UsageError("numeric evaluation requires d >= 1");
    if (p < Rational(0) || p >= Rational(1)) throw UsageError("p must lie in [0, 1)");

    BSequence b = load_b_sequence(opt.b_file, opt.order);
    LambdaEstimate est = lambda_eval(b, d, p, opt.precision);
    if (opt.format == "json") {
        json r = {{"schema", kReportSchema}, {"command", "eval-lambda"},
                  {"order", est.order},      {"d", d.str()},
                  {"p", p.str()},            {"precision", opt.precision},
                  {"q1", est.q1},            {"q2First", est.q2_first},
                  {"q2Second", est.q2_second}, {"lambdaFirst", est.lambda_first},
                  {"lambdaSecond", est.lambda_second}};
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << "order:        " << est.order << "\n"
                  << "q1:           " << est.q1 << "\n"
                  << "q2First:      " << est.q2_first << "\n"
                  << "q2Second:     " << est.q2_second << "\n"
                  << "lambdaFirst:  " << est.lambda_first << "\n"
                  << "lambdaSecond: " << est.lambda_second << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for the monomer-dimer free-energy series"};
    app.fallthrough(true);
    Options opt;
    app.add_option("--order", opt.order, "Truncation order N (>= 2)");
    app.add_option("--format", opt.format, "Output format: text, json, or latex");
    app.add_option("--b-file", opt.b_file, "b-sequence file ('i <rational>' lines) or 'catalan'");
    app.add_option("--d", opt.d_str, "Dimension value (rational, >= 1) for numeric runs");
    app.add_option("--p", opt.p_str, "Density value (rational in [0,1)) for numeric runs");
    app.add_option("--precision", opt.precision, "Printed decimal digits (default 50)");
    app.add_option("--perturb", opt.perturb, "Negative control for verify: k:delta");

    auto* transform = app.add_subcommand("transform", "Run the forward or inverse sequence map");
    auto* t_fwd = transform->add_subcommand("jbar-from-b", "Kernel sequence from a b-sequence");
    auto* t_inv = transform->add_subcommand("b-from-jbar", "b-sequence from the symbolic kernels");
    transform->require_subcommand(1);

    auto* coeffs = app.add_subcommand("coeffs", "Print interaction-series coefficient tables");
    auto* c_first = coeffs->add_subcommand("first", "First form: a_k in the kernel symbols");
    auto* c_second = coeffs->add_subcommand("second", "Second form: a'_k in d and the b symbols");
    coeffs->require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Finite-order verification runs");
    auto* v_master = verify->add_subcommand("master", "Both composition routes agree");
    auto* v_catalan = verify->add_subcommand("catalan", "Both forms vanish on the Catalan table");
    auto* v_part3 = verify->add_subcommand("part3", "Forward map annihilates the Catalan table");
    auto* v_triangular = verify->add_subcommand("triangularity", "Index bound for all four maps");
    verify->require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "Numeric evaluation");
    auto* e_lambda = eval->add_subcommand("lambda", "Free energy via both routes at (d, p)");
    eval->require_subcommand(1);

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit 0; any parse failure is a usage error
    }

    try {
        check_format(opt.format);
        if (opt.order < 2) throw UsageError("--order must be >= 2");
        if (t_fwd->parsed()) return run_transform(opt, true);
        if (t_inv->parsed()) return run_transform(opt, false);
        if (c_first->parsed()) return run_coeffs(opt, true);
        if (c_second->parsed()) return run_coeffs(opt, false);
        if (v_master->parsed()) return run_verify(opt, "master");
        if (v_catalan->parsed()) return run_verify(opt, "catalan");
        if (v_part3->parsed()) return run_verify(opt, "part3");
        if (v_triangular->parsed()) return run_verify(opt, "triangularity");
        if (e_lambda->parsed()) return run_lambda(opt);
        throw UsageError("no command given");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DivergenceError& e) {
        std::cerr << "divergence: " << e.what() << "\n";
        return 3;
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 3;
    }
}
