// Command-line surface: evaluates the inequality bounds, the identity
// residual, the convexity oracle, seeded sweeps, and the special-means checks,
// emitting machine-readable reports.
//
// Exit codes: 0 all checks pass, 1 a verified violation or convexity failure,
// 2 invalid input or config, 3 numeric non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hhmc/errors.hpp"
#include "hhmc/json_io.hpp"
#include "hhmc/means.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNoConvergence = 3;

std::string fmt7(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.7g", v);
    return buf;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos)
            next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw hhmc::InvalidParams("bad number in function spec: '" + tok + "'");
        }
        pos = next + 1;
    }
    return out;
}

// Inline shorthand: power:<n>, poly:<c0,c1,...>, exp, const:<c>,
// scaled_power:<c,n>; a leading '{' switches to the JSON schema.
hhmc::Fn1D fn_from_shorthand(const std::string& text, double domain_hi) {
    if (!text.empty() && text.front() == '{')
        return hhmc::fn_from_json(nlohmann::json::parse(text));
    const std::size_t colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "power")
        return hhmc::make_function(hhmc::FnKind::Power, parse_number_list(tail), domain_hi);
    if (head == "poly")
        return hhmc::make_function(hhmc::FnKind::Polynomial, parse_number_list(tail), domain_hi);
    if (head == "exp")
        return hhmc::make_function(hhmc::FnKind::Exponential, {}, domain_hi);
    if (head == "const")
        return hhmc::make_function(hhmc::FnKind::Constant, parse_number_list(tail), domain_hi);
    if (head == "scaled_power")
        return hhmc::make_function(hhmc::FnKind::ScaledPower, parse_number_list(tail), domain_hi);
    throw hhmc::InvalidParams("unknown function shorthand: '" + text + "'");
}

struct FnOptions {
    std::string shorthand;
    std::string spec_file;
    double hi = 0.0; // 0 = size the domain to the command's needs
};

void add_fn_options(CLI::App* cmd, FnOptions& opt, bool with_hi = true) {
    cmd->add_option("--fn", opt.shorthand,
                    "function shorthand (power:<n>, poly:<c0,c1,...>, exp, const:<c>) or inline JSON");
    cmd->add_option("--fn-file", opt.spec_file, "path to a JSON function spec");
    if (with_hi)
        cmd->add_option("--hi", opt.hi,
                        "domain upper bound (default: smallest valid for the command)");
}

hhmc::Fn1D build_fn(const FnOptions& opt, double needed_hi) {
    const double hi = opt.hi > 0.0 ? opt.hi : needed_hi;
    if (!(hi > 0.0))
        throw hhmc::InvalidParams("could not infer a positive domain bound; pass --hi");
    if (!opt.spec_file.empty()) {
        std::ifstream in(opt.spec_file);
        if (!in)
            throw hhmc::InvalidParams("cannot open function spec: " + opt.spec_file);
        nlohmann::json j;
        in >> j;
        if (!j.contains("domain_hi"))
            j["domain_hi"] = hi;
        return hhmc::fn_from_json(j);
    }
    if (opt.shorthand.empty())
        throw hhmc::InvalidParams("a function is required; pass --fn or --fn-file");
    return fn_from_shorthand(opt.shorthand, hi);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw hhmc::InvalidParams("cannot write: " + path);
    out << text;
}

// ---- bound ----------------------------------------------------------------

int run_bound(const FnOptions& fnopt, const hhmc::BoundParams& params, double tol,
              const hhmc::OracleBudget& budget, std::uint64_t seed, const std::string& output) {
    const hhmc::Fn1D f = build_fn(fnopt, std::max(params.b, params.b / params.m));
    const hhmc::HHReport r = hhmc::full_report(f, params, tol, budget, seed);

    if (output == "csv") {
        std::cout << hhmc::hh_report_csv(r);
    } else if (output == "text") {
        std::cout << "lhs_abs              = " << fmt7(r.lhs_abs) << "\n";
        std::cout << "bound_t3             = " << fmt7(r.bound_t3)
                  << (r.precondition_t3.holds ? "" : "  [precondition failed]") << "\n";
        if (r.bound_t4)
            std::cout << "bound_t4             = " << fmt7(*r.bound_t4)
                      << (r.precondition_t45.holds ? "" : "  [precondition failed]") << "\n";
        std::cout << "bound_t5             = " << fmt7(r.bound_t5)
                  << (r.precondition_t45.holds ? "" : "  [precondition failed]") << "\n";
        std::cout << "lemma1_residual      = " << fmt7(r.lemma1_residual) << "\n";
        std::cout << "classical gaps       = (" << fmt7(r.classical_left_gap) << ", "
                  << fmt7(r.classical_right_gap) << ")\n";
    } else {
        std::cout << hhmc::dump_report(hhmc::to_json(r));
    }

    if (!r.errors.empty() || !r.quadrature_converged)
        return kExitNoConvergence;
    bool violated = false;
    if (r.precondition_t3.holds && hhmc::inequality_violated(r.lhs_abs, r.bound_t3))
        violated = true;
    if (r.precondition_t45.holds) {
        if (r.bound_t4 && hhmc::inequality_violated(r.lhs_abs, *r.bound_t4))
            violated = true;
        if (hhmc::inequality_violated(r.lhs_abs, r.bound_t5))
            violated = true;
    }
    return violated ? kExitViolation : kExitPass;
}

// ---- identity ---------------------------------------------------------------

int run_identity(const FnOptions& fnopt, double a, double b, double x, double tol,
                 const std::string& output) {
    const hhmc::Fn1D f = build_fn(fnopt, b);
    const hhmc::Lemma1Check c = hhmc::lemma1_check(f, a, b, x, tol);
    if (output == "text") {
        std::cout << "lhs             = " << fmt7(c.lhs) << "\n"
                  << "rhs             = " << fmt7(c.rhs) << "\n"
                  << "lemma1_residual = " << fmt7(c.residual) << "\n";
    } else {
        ordered_json j;
        j["lhs"] = hhmc::round_sig12(c.lhs);
        j["rhs"] = hhmc::round_sig12(c.rhs);
        j["lemma1_residual"] = hhmc::round_sig12(c.residual);
        j["converged"] = c.converged;
        std::cout << hhmc::dump_report(j);
    }
    return c.converged ? kExitPass : kExitNoConvergence;
}

// ---- convexity --------------------------------------------------------------

int run_convexity(const FnOptions& fnopt, double m, double hi, const std::string& target,
                  double q, int grid_n, long random_n, std::uint64_t seed,
                  const std::string& output) {
    const hhmc::Fn1D f = build_fn(fnopt, hi);
    hhmc::ConvexityReport r;
    if (target == "f")
        r = hhmc::check_m_convex(f, m, hi, grid_n, random_n, seed);
    else if (target == "fprime")
        r = hhmc::check_abs_deriv_m_convex(f, q, m, hi, grid_n, random_n, seed);
    else
        throw hhmc::InvalidParams("--target must be f or fprime");

    if (output == "text") {
        std::cout << (r.holds ? "holds" : "violated") << " (m=" << fmt7(m) << ", samples="
                  << r.samples_checked << ")\n";
        if (r.witness)
            std::cout << "witness: x=" << fmt7(r.witness->x) << " y=" << fmt7(r.witness->y)
                      << " t=" << fmt7(r.witness->t) << " lhs=" << fmt7(r.witness->lhs)
                      << " rhs=" << fmt7(r.witness->rhs) << " gap=" << fmt7(r.witness->gap)
                      << "\n";
    } else {
        std::cout << hhmc::dump_report(hhmc::to_json(r));
    }
    return r.holds ? kExitPass : kExitViolation;
}

// ---- sweep ------------------------------------------------------------------

int run_sweep_cmd(const std::string& config_path, const std::string& out_path,
                  const std::string& csv_path, int threads_override) {
    hhmc::SweepConfig cfg = hhmc::sweep_config_from_file(config_path);
    if (threads_override > 0)
        cfg.threads = threads_override;
    const hhmc::SweepReport report = hhmc::run_sweep(cfg);
    emit(hhmc::dump_report(hhmc::to_json(report)), out_path);
    if (!csv_path.empty())
        emit(hhmc::sweep_rows_csv(report), csv_path);
    if (!report.pass())
        return kExitViolation;
    if (report.cases_error > 0)
        return kExitNoConvergence;
    return kExitPass;
}

// ---- means ------------------------------------------------------------------

int run_means(const hhmc::MeansCase& c, const std::string& output) {
    const hhmc::PropCheck p1 = hhmc::prop1_check(c);
    const hhmc::PropCheck p2 = hhmc::prop2_check(c);
    if (output == "text") {
        std::cout << "A(a^n,b^n) vs L_n^n gap = " << fmt7(p1.lhs) << "\n"
                  << "prop1: lhs " << fmt7(p1.lhs) << " rhs " << fmt7(p1.rhs) << " -> "
                  << (p1.holds ? "holds" : "VIOLATED") << "\n"
                  << "prop2: lhs " << fmt7(p2.lhs) << " rhs " << fmt7(p2.rhs) << " -> "
                  << (p2.holds ? "holds" : "VIOLATED") << "\n";
    } else {
        std::cout << hhmc::dump_report(hhmc::means_report_json(c));
    }
    return (p1.holds && p2.holds) ? kExitPass : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical checker for endpoint-weighted integral inequalities "
                 "under m-convexity"};
    app.require_subcommand(1);

    std::string output = "json";
    app.add_option("--output", output, "output format: json, csv, text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    // bound
    auto* bound = app.add_subcommand("bound", "evaluate the deviation functional and every bound");
    bound->fallthrough();
    FnOptions bound_fn;
    add_fn_options(bound, bound_fn);
    hhmc::BoundParams params;
    double bound_tol = 1e-10;
    hhmc::OracleBudget budget;
    std::uint64_t bound_seed = 0;
    bool x_given = false;
    bound->add_option("--a", params.a, "interval left end")->required();
    bound->add_option("--b", params.b, "interval right end")->required();
    auto* xopt = bound->add_option("--x", params.x, "evaluation point (default midpoint)");
    bound->add_option("--m", params.m, "convexity modulus, in (0, 1]")->default_val(1.0);
    bound->add_option("--q", params.q, "power-mean exponent, q >= 1")->default_val(1.0);
    bound->add_option("--tol", bound_tol, "quadrature tolerance");
    bound->add_option("--grid-n", budget.grid_n, "oracle lattice size per axis");
    bound->add_option("--random-n", budget.random_n, "oracle random triples");
    bound->add_option("--seed", bound_seed, "oracle RNG seed");

    // identity
    auto* identity = app.add_subcommand("identity", "check the integral identity residual");
    identity->fallthrough();
    FnOptions id_fn;
    add_fn_options(identity, id_fn);
    double id_a = 0.0, id_b = 1.0, id_x = 0.5, id_tol = 1e-10;
    bool id_x_given = false;
    identity->add_option("--a", id_a)->required();
    identity->add_option("--b", id_b)->required();
    auto* id_xopt = identity->add_option("--x", id_x, "evaluation point (default midpoint)");
    identity->add_option("--tol", id_tol, "quadrature tolerance");

    // convexity
    auto* convexity = app.add_subcommand("convexity", "run the m-convexity oracle");
    convexity->fallthrough();
    FnOptions cx_fn;
    add_fn_options(convexity, cx_fn, /*with_hi=*/false);
    double cx_m = 1.0, cx_q = 1.0, cx_hi = 0.0;
    std::string cx_target = "f";
    int cx_grid = 48;
    long cx_random = 10000;
    std::uint64_t cx_seed = 0;
    convexity->add_option("--m", cx_m, "convexity modulus, in [0, 1]")->required();
    convexity->add_option("--hi", cx_hi, "check interval upper end (doubles as the domain bound)")
        ->required();
    convexity->add_option("--target", cx_target, "f (the function) or fprime (|f'|^q)")
        ->check(CLI::IsMember({"f", "fprime"}));
    convexity->add_option("--q", cx_q, "exponent for --target fprime");
    convexity->add_option("--grid-n", cx_grid);
    convexity->add_option("--random-n", cx_random);
    convexity->add_option("--seed", cx_seed);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a seeded parameter sweep from a JSON config");
    sweep->fallthrough();
    std::string sweep_config, sweep_out = "-", sweep_csv;
    int sweep_threads = 0;
    sweep->add_option("--config", sweep_config, "sweep config JSON")->required();
    sweep->add_option("--out", sweep_out, "report path (default stdout)");
    sweep->add_option("--csv", sweep_csv, "optional per-case CSV path");
    sweep->add_option("--threads", sweep_threads, "override config thread count");

    // means
    auto* means = app.add_subcommand("means", "check the special-means propositions");
    means->fallthrough();
    hhmc::MeansCase mc;
    means->add_option("--a", mc.a)->required();
    means->add_option("--b", mc.b)->required();
    means->add_option("--n", mc.n, "power index, n >= 2")->required();
    means->add_option("--m", mc.m)->default_val(1.0);
    means->add_option("--q", mc.q)->default_val(2.0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInvalid;
    }

    x_given = xopt->count() > 0;
    id_x_given = id_xopt->count() > 0;

    try {
        if (bound->parsed()) {
            if (!x_given)
                params.x = 0.5 * (params.a + params.b);
            return run_bound(bound_fn, params, bound_tol, budget, bound_seed, output);
        }
        if (identity->parsed()) {
            if (!id_x_given)
                id_x = 0.5 * (id_a + id_b);
            return run_identity(id_fn, id_a, id_b, id_x, id_tol, output);
        }
        if (convexity->parsed())
            return run_convexity(cx_fn, cx_m, cx_hi, cx_target, cx_q, cx_grid, cx_random,
                                 cx_seed, output);
        if (sweep->parsed())
            return run_sweep_cmd(sweep_config, sweep_out, sweep_csv, sweep_threads);
        if (means->parsed())
            return run_means(mc, output);
    } catch (const hhmc::NonFiniteSample& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
