#include "hhmc/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hhmc/errors.hpp"

namespace hhmc {

using nlohmann::json;
using nlohmann::ordered_json;

double round_sig12(double v) {
    if (!std::isfinite(v))
        return v;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string format_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

ordered_json num(double v) {
    if (!std::isfinite(v))
        return nullptr;
    return round_sig12(v);
}

const char* target_name(ConvexityTarget t) {
    switch (t) {
    case ConvexityTarget::F:
        return "f";
    case ConvexityTarget::AbsDeriv:
        return "abs_deriv";
    case ConvexityTarget::AbsDerivPowQ:
        return "abs_deriv_pow_q";
    }
    return "?";
}

std::string csv_join(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            line += ',';
        line += cells[i];
    }
    line += '\n';
    return line;
}

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ConfigError(std::string("missing or non-numeric field: ") + key);
    return j.at(key).get<double>();
}

} // namespace

ordered_json fn_spec_to_json(const Fn1D& f) {
    ordered_json j;
    switch (f.kind()) {
    case FnKind::Power:
        j["kind"] = "power";
        j["n"] = num(f.params()[0]);
        break;
    case FnKind::ScaledPower:
        j["kind"] = "scaled_power";
        j["c"] = num(f.params()[0]);
        j["n"] = num(f.params()[1]);
        break;
    case FnKind::Polynomial: {
        j["kind"] = "polynomial";
        ordered_json coeffs = ordered_json::array();
        for (double c : f.params())
            coeffs.push_back(num(c));
        j["coeffs"] = coeffs;
        break;
    }
    case FnKind::Exponential:
        j["kind"] = "exponential";
        break;
    case FnKind::Constant:
        j["kind"] = "constant";
        j["c"] = num(f.params()[0]);
        break;
    }
    j["domain_hi"] = num(f.domain_hi());
    j["label"] = f.label();
    return j;
}

Fn1D fn_from_json(const json& spec) {
    if (!spec.is_object() || !spec.contains("kind") || !spec.at("kind").is_string())
        throw ConfigError("function spec must be an object with a \"kind\" string");
    const std::string kind = spec.at("kind").get<std::string>();
    const double domain_hi = require_number(spec, "domain_hi");

    if (kind == "power")
        return make_function(FnKind::Power, {require_number(spec, "n")}, domain_hi);
    if (kind == "scaled_power")
        return make_function(FnKind::ScaledPower,
                             {require_number(spec, "c"), require_number(spec, "n")}, domain_hi);
    if (kind == "polynomial" || kind == "poly") {
        if (!spec.contains("coeffs") || !spec.at("coeffs").is_array())
            throw ConfigError("polynomial spec needs a \"coeffs\" array");
        std::vector<double> coeffs;
        for (const auto& c : spec.at("coeffs")) {
            if (!c.is_number())
                throw ConfigError("polynomial coefficients must be numbers");
            coeffs.push_back(c.get<double>());
        }
        return make_function(FnKind::Polynomial, coeffs, domain_hi);
    }
    if (kind == "exponential" || kind == "exp")
        return make_function(FnKind::Exponential, {}, domain_hi);
    if (kind == "constant" || kind == "const")
        return make_function(FnKind::Constant, {require_number(spec, "c")}, domain_hi);
    throw ConfigError("unknown function kind: " + kind);
}

ordered_json to_json(const ConvexityReport& r) {
    ordered_json j;
    j["holds"] = r.holds;
    j["target"] = target_name(r.target);
    j["m"] = num(r.m);
    j["q"] = num(r.q);
    j["samples_checked"] = r.samples_checked;
    if (r.witness) {
        ordered_json w;
        w["x"] = num(r.witness->x);
        w["y"] = num(r.witness->y);
        w["t"] = num(r.witness->t);
        w["lhs"] = num(r.witness->lhs);
        w["rhs"] = num(r.witness->rhs);
        w["gap"] = num(r.witness->gap);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

ordered_json to_json(const HHReport& r) {
    ordered_json j;
    j["lhs_abs"] = num(r.lhs_abs);
    j["bound_t3"] = num(r.bound_t3);
    j["bound_t4"] = r.bound_t4 ? num(*r.bound_t4) : ordered_json(nullptr);
    j["bound_t5"] = num(r.bound_t5);
    j["lemma1_residual"] = num(r.lemma1_residual);
    j["classical_left_gap"] = num(r.classical_left_gap);
    j["classical_right_gap"] = num(r.classical_right_gap);
    auto tightness = [&r](const char* name) -> ordered_json {
        auto it = r.tightness.find(name);
        return it == r.tightness.end() ? ordered_json(nullptr) : num(it->second);
    };
    j["tightness.t3"] = tightness("t3");
    j["tightness.t4"] = tightness("t4");
    j["tightness.t5"] = tightness("t5");
    j["preconditions.t3"] = to_json(r.precondition_t3);
    j["preconditions.t45"] = to_json(r.precondition_t45);
    j["applicable.t3"] = r.precondition_t3.holds;
    j["applicable.t4"] = r.bound_t4.has_value() && r.precondition_t45.holds;
    j["applicable.t5"] = r.precondition_t45.holds;
    j["vacuous_bounds"] = r.vacuous_bounds;
    j["quadrature_converged"] = r.quadrature_converged;
    j["errors"] = r.errors;
    return j;
}

ordered_json means_report_json(const MeansCase& c) {
    const PropCheck p1 = prop1_check(c);
    const PropCheck p2 = prop2_check(c);
    ordered_json m;
    m["a"] = num(c.a);
    m["b"] = num(c.b);
    m["n"] = c.n;
    m["m"] = num(c.m);
    m["q"] = num(c.q);
    m["arithmetic_mean"] = num(arithmetic_mean(c.a, c.b));
    m["log_mean"] = num(log_mean(c.a, c.b));
    m["gen_log_mean"] = num(gen_log_mean(c.a, c.b, c.n));
    m["prop1"] = {{"lhs", num(p1.lhs)}, {"rhs", num(p1.rhs)}, {"holds", p1.holds}};
    m["prop2"] = {{"lhs", num(p2.lhs)}, {"rhs", num(p2.rhs)}, {"holds", p2.holds}};
    ordered_json j;
    j["means"] = m;
    return j;
}

ordered_json to_json(const SweepReport& r) {
    ordered_json j;
    j["pass"] = r.pass();
    j["seed"] = r.seed;
    j["cases_generated"] = r.cases_generated;
    j["cases_run"] = r.cases_run;
    j["cases_filtered_precondition"] = r.cases_filtered_precondition;
    j["cases_filtered_domain"] = r.cases_filtered_domain;
    j["cases_error"] = r.cases_error;
    j["max_lemma1_residual"] = num(r.max_lemma1_residual);

    ordered_json viols = ordered_json::array();
    for (const Violation& v : r.violations) {
        ordered_json e;
        e["case_index"] = v.case_index;
        e["function"] = v.function;
        e["a"] = num(v.a);
        e["b"] = num(v.b);
        e["x"] = num(v.x);
        e["m"] = num(v.m);
        e["q"] = num(v.q);
        e["bound"] = v.bound_name;
        e["lhs_abs"] = num(v.lhs_abs);
        e["bound_value"] = num(v.bound);
        e["gap"] = num(v.gap);
        viols.push_back(e);
    }
    j["violations"] = viols;

    ordered_json tight;
    for (const char* name : {"t3", "t4", "t5"}) {
        auto it = r.tightness_stats.find(name);
        if (it == r.tightness_stats.end()) {
            tight[name] = nullptr;
            continue;
        }
        const TightnessStats& s = it->second;
        tight[name] = {{"count", s.count}, {"min", num(s.min)}, {"max", num(s.max)},
                       {"mean", num(s.mean)}};
    }
    j["tightness"] = tight;

    ordered_json ord;
    ord["cases_total"] = r.ordering.cases_total;
    ord["cases_q_gt_1"] = r.ordering.cases_q_gt_1;
    ord["t5_le_t4"] = r.ordering.t5_le_t4;
    ord["t4_le_t3"] = r.ordering.t4_le_t3;
    ord["t5_le_t3"] = r.ordering.t5_le_t3;
    ord["worst_t5_over_t4"] = num(r.ordering.worst_t5_over_t4);
    j["ordering"] = ord;
    return j;
}

SweepConfig sweep_config_from_json(const json& j) {
    if (!j.is_object())
        throw ConfigError("sweep config must be a JSON object");
    SweepConfig cfg;
    if (!j.contains("functions") || !j.at("functions").is_array() || j.at("functions").empty())
        throw ConfigError("sweep config needs a nonempty \"functions\" array");
    for (const auto& spec : j.at("functions"))
        cfg.functions.push_back(fn_from_json(spec));

    auto range = [&](const char* key, std::array<double, 2>& out) {
        if (!j.contains(key))
            throw ConfigError(std::string("sweep config needs ") + key);
        const auto& arr = j.at(key);
        if (!arr.is_array() || arr.size() != 2 || !arr[0].is_number() || !arr[1].is_number())
            throw ConfigError(std::string(key) + " must be [lo, hi]");
        out = {arr[0].get<double>(), arr[1].get<double>()};
    };
    range("a_range", cfg.a_range);
    range("b_range", cfg.b_range);

    if (j.contains("x_policy")) {
        const auto& xp = j.at("x_policy");
        std::string kind;
        if (xp.is_string()) {
            kind = xp.get<std::string>();
        } else if (xp.is_object() && xp.contains("kind") && xp.at("kind").is_string()) {
            kind = xp.at("kind").get<std::string>();
            if (xp.contains("k"))
                cfg.x_policy.k = xp.at("k").get<int>();
        } else {
            throw ConfigError("x_policy must be a string or {\"kind\":..., \"k\":...}");
        }
        if (kind == "midpoint")
            cfg.x_policy.kind = XPolicy::Kind::Midpoint;
        else if (kind == "grid")
            cfg.x_policy.kind = XPolicy::Kind::Grid;
        else if (kind == "random")
            cfg.x_policy.kind = XPolicy::Kind::Random;
        else
            throw ConfigError("unknown x_policy kind: " + kind);
    }

    auto number_list = [&](const char* key, std::vector<double>& out) {
        if (!j.contains(key))
            return;
        const auto& arr = j.at(key);
        if (!arr.is_array() || arr.empty())
            throw ConfigError(std::string(key) + " must be a nonempty array");
        out.clear();
        for (const auto& v : arr) {
            if (!v.is_number())
                throw ConfigError(std::string(key) + " entries must be numbers");
            out.push_back(v.get<double>());
        }
    };
    number_list("m_values", cfg.m_values);
    number_list("q_values", cfg.q_values);

    if (j.contains("samples"))
        cfg.samples = j.at("samples").get<long>();
    if (j.contains("seed"))
        cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tol"))
        cfg.tol = j.at("tol").get<double>();
    if (j.contains("oracle")) {
        const auto& o = j.at("oracle");
        if (o.contains("grid_n"))
            cfg.oracle.grid_n = o.at("grid_n").get<int>();
        if (o.contains("random_n"))
            cfg.oracle.random_n = o.at("random_n").get<long>();
    }
    if (j.contains("threads"))
        cfg.threads = j.at("threads").get<int>();

    cfg.validate();
    return cfg;
}

SweepConfig sweep_config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open sweep config: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("sweep config parse failure: ") + e.what());
    }
    return sweep_config_from_json(j);
}

std::string sweep_rows_csv(const SweepReport& r) {
    std::string out = "function,a,b,x,m,q,lhs_abs,bound_t3,bound_t4,bound_t5,residual,"
                      "certified_t3,certified_t45\n";
    for (const CaseRecord& rec : r.rows) {
        if (rec.status != CaseStatus::Run)
            continue;
        out += csv_join({rec.function, format_sig12(rec.a), format_sig12(rec.b),
                         format_sig12(rec.x), format_sig12(rec.m), format_sig12(rec.q),
                         format_sig12(rec.lhs_abs), format_sig12(rec.bound_t3),
                         rec.bound_t4 ? format_sig12(*rec.bound_t4) : "",
                         format_sig12(rec.bound_t5), format_sig12(rec.residual),
                         rec.certified_t3 ? "1" : "0", rec.certified_t45 ? "1" : "0"});
    }
    return out;
}

std::string hh_report_csv(const HHReport& r) {
    auto tightness = [&r](const char* name) -> std::string {
        auto it = r.tightness.find(name);
        return it == r.tightness.end() ? "" : format_sig12(it->second);
    };
    std::string out = "lhs_abs,bound_t3,bound_t4,bound_t5,lemma1_residual,classical_left_gap,"
                      "classical_right_gap,tightness.t3,tightness.t4,tightness.t5,"
                      "preconditions.t3.holds,preconditions.t45.holds,quadrature_converged\n";
    out += csv_join({format_sig12(r.lhs_abs), format_sig12(r.bound_t3),
                     r.bound_t4 ? format_sig12(*r.bound_t4) : "", format_sig12(r.bound_t5),
                     format_sig12(r.lemma1_residual), format_sig12(r.classical_left_gap),
                     format_sig12(r.classical_right_gap), tightness("t3"), tightness("t4"),
                     tightness("t5"), r.precondition_t3.holds ? "1" : "0",
                     r.precondition_t45.holds ? "1" : "0", r.quadrature_converged ? "1" : "0"});
    return out;
}

std::string dump_report(const ordered_json& j) {
    return j.dump(2) + "\n";
}

} // namespace hhmc
