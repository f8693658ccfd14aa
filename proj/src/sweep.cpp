#include "hhmc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "hhmc/errors.hpp"

namespace hhmc {

namespace {

constexpr double kMinWidth = 1e-3; // narrower intervals make tightness stats degenerate

double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct CaseParams {
    int fn_index = 0;
    double a = 0.0, b = 0.0, x = 0.0, m = 1.0, q = 1.0;
};

std::vector<CaseParams> generate_cases(const SweepConfig& cfg) {
    struct Combo {
        int fn_index;
        double m, q;
    };
    std::vector<Combo> combos;
    for (int fi = 0; fi < static_cast<int>(cfg.functions.size()); ++fi)
        for (double m : cfg.m_values)
            for (double q : cfg.q_values)
                combos.push_back({fi, m, q});

    std::mt19937_64 rng(cfg.seed);
    std::vector<CaseParams> cases;
    cases.reserve(static_cast<std::size_t>(cfg.samples));
    std::size_t combo_idx = 0;
    while (cases.size() < static_cast<std::size_t>(cfg.samples)) {
        const Combo& c = combos[combo_idx % combos.size()];
        ++combo_idx;
        double a = cfg.a_range[0] + u01(rng) * (cfg.a_range[1] - cfg.a_range[0]);
        double b = cfg.b_range[0] + u01(rng) * (cfg.b_range[1] - cfg.b_range[0]);
        if (b < a)
            std::swap(a, b);

        std::vector<double> xs;
        switch (cfg.x_policy.kind) {
        case XPolicy::Kind::Midpoint:
            xs.push_back(0.5 * (a + b));
            break;
        case XPolicy::Kind::Grid: {
            const int k = std::max(2, cfg.x_policy.k);
            for (int i = 0; i < k; ++i)
                xs.push_back(a + (b - a) * static_cast<double>(i) / (k - 1));
            break;
        }
        case XPolicy::Kind::Random: {
            const int k = std::max(1, cfg.x_policy.k);
            for (int i = 0; i < k; ++i)
                xs.push_back(a + u01(rng) * (b - a));
            break;
        }
        }
        for (double x : xs) {
            if (cases.size() >= static_cast<std::size_t>(cfg.samples))
                break;
            cases.push_back({c.fn_index, a, b, x, c.m, c.q});
        }
    }
    return cases;
}

std::uint64_t per_case_seed(std::uint64_t seed, std::size_t index) {
    return seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1));
}

CaseRecord evaluate_case(const SweepConfig& cfg, const CaseParams& p, std::uint64_t seed) {
    const Fn1D& f = cfg.functions[static_cast<std::size_t>(p.fn_index)];
    CaseRecord rec;
    rec.function = f.label();
    rec.a = p.a;
    rec.b = p.b;
    rec.x = p.x;
    rec.m = p.m;
    rec.q = p.q;

    if (p.b - p.a < kMinWidth || p.b > f.domain_hi() || p.b / p.m > f.domain_hi()) {
        rec.status = CaseStatus::FilteredDomain;
        return rec;
    }

    try {
        const double oracle_hi = p.b / p.m;
        rec.precondition_t3 = check_abs_deriv_m_convex(f, 1.0, p.m, oracle_hi, cfg.oracle.grid_n,
                                                       cfg.oracle.random_n, seed);
        rec.precondition_t45 =
            p.q == 1.0 ? rec.precondition_t3
                       : check_abs_deriv_m_convex(f, p.q, p.m, oracle_hi, cfg.oracle.grid_n,
                                                  cfg.oracle.random_n, seed);
        rec.certified_t3 = rec.precondition_t3.holds;
        rec.certified_t45 = rec.precondition_t45.holds;
        if (!rec.certified_t3 && !rec.certified_t45) {
            rec.status = CaseStatus::FilteredPrecondition;
            return rec;
        }

        const BoundParams bp{p.a, p.b, p.x, p.m, p.q};
        const HHReport hh = full_report(f, bp, cfg.tol, rec.precondition_t3, rec.precondition_t45);
        if (!hh.errors.empty()) {
            rec.status = CaseStatus::Error;
            rec.error = hh.errors.front();
            return rec;
        }
        rec.status = CaseStatus::Run;
        rec.lhs_abs = hh.lhs_abs;
        rec.bound_t3 = hh.bound_t3;
        rec.bound_t4 = hh.bound_t4;
        rec.bound_t5 = hh.bound_t5;
        rec.residual = hh.lemma1_residual;
        rec.tightness = hh.tightness;
        rec.quadrature_converged = hh.quadrature_converged;
    } catch (const std::exception& e) {
        rec.status = CaseStatus::Error;
        rec.error = e.what();
    }
    return rec;
}

void collect_tightness(std::map<std::string, TightnessStats>& stats, const std::string& name,
                       const CaseRecord& rec) {
    auto it = rec.tightness.find(name);
    if (it == rec.tightness.end())
        return;
    TightnessStats& s = stats[name];
    if (s.count == 0) {
        s.min = s.max = it->second;
    } else {
        s.min = std::min(s.min, it->second);
        s.max = std::max(s.max, it->second);
    }
    s.mean += it->second; // running sum; divided once at the end
    ++s.count;
}

} // namespace

void SweepConfig::validate() const {
    if (functions.empty())
        throw ConfigError("sweep needs at least one function");
    if (!(a_range[0] <= a_range[1]) || !(b_range[0] <= b_range[1]))
        throw ConfigError("ranges must be ordered [lo, hi]");
    if (m_values.empty() || q_values.empty())
        throw ConfigError("m_values and q_values must be nonempty");
    for (double m : m_values)
        if (!(m > 0.0 && m <= 1.0))
            throw ConfigError("every m must lie in (0, 1]");
    for (double q : q_values)
        if (!(q >= 1.0))
            throw ConfigError("every q must satisfy q >= 1");
    if (samples <= 0)
        throw ConfigError("samples must be positive");
    if (!(tol > 0.0))
        throw ConfigError("tol must be positive");
    if (oracle.grid_n < 2 || oracle.random_n < 0)
        throw ConfigError("oracle budget invalid");
    if (threads < 1)
        throw ConfigError("threads must be at least 1");
}

SweepReport run_sweep(const SweepConfig& config) {
    config.validate();
    const std::vector<CaseParams> cases = generate_cases(config);

    std::vector<CaseRecord> records(cases.size());
    const int workers = std::max(1, std::min<int>(config.threads, static_cast<int>(cases.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < cases.size(); ++i)
            records[i] = evaluate_case(config, cases[i], per_case_seed(config.seed, i));
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < cases.size(); i = next.fetch_add(1))
                records[i] = evaluate_case(config, cases[i], per_case_seed(config.seed, i));
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    // aggregation runs in case order so parallel and serial runs agree bit for bit
    SweepReport report;
    report.cases_generated = static_cast<long>(records.size());
    report.seed = config.seed;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const CaseRecord& rec = records[i];
        switch (rec.status) {
        case CaseStatus::FilteredDomain:
            ++report.cases_filtered_domain;
            continue;
        case CaseStatus::FilteredPrecondition:
            ++report.cases_filtered_precondition;
            continue;
        case CaseStatus::Error:
            ++report.cases_error;
            continue;
        case CaseStatus::Run:
            break;
        }
        ++report.cases_run;
        report.max_lemma1_residual = std::max(report.max_lemma1_residual, rec.residual);

        auto offer_violation = [&](const std::string& name, double bound) {
            if (!inequality_violated(rec.lhs_abs, bound))
                return;
            Violation v;
            v.case_index = static_cast<long>(i);
            v.function = rec.function;
            v.a = rec.a;
            v.b = rec.b;
            v.x = rec.x;
            v.m = rec.m;
            v.q = rec.q;
            v.bound_name = name;
            v.lhs_abs = rec.lhs_abs;
            v.bound = bound;
            v.gap = rec.lhs_abs - bound;
            report.violations.push_back(v);
        };
        if (rec.certified_t3) {
            offer_violation("t3", rec.bound_t3);
            collect_tightness(report.tightness_stats, "t3", rec);
        }
        if (rec.certified_t45) {
            if (rec.bound_t4) {
                offer_violation("t4", *rec.bound_t4);
                collect_tightness(report.tightness_stats, "t4", rec);
            }
            offer_violation("t5", rec.bound_t5);
            collect_tightness(report.tightness_stats, "t5", rec);
        }
    }
    for (auto& [name, s] : report.tightness_stats)
        if (s.count > 0)
            s.mean /= static_cast<double>(s.count);

    report.ordering = compare_bounds(records);
    report.rows = std::move(records);
    return report;
}

OrderingStats compare_bounds(const std::vector<CaseRecord>& rows) {
    OrderingStats stats;
    for (const CaseRecord& rec : rows) {
        if (rec.status != CaseStatus::Run)
            continue;
        ++stats.cases_total;
        if (rec.bound_t5 <= rec.bound_t3)
            ++stats.t5_le_t3;
        if (rec.bound_t4) {
            ++stats.cases_q_gt_1;
            if (rec.bound_t5 <= *rec.bound_t4)
                ++stats.t5_le_t4;
            if (*rec.bound_t4 <= rec.bound_t3)
                ++stats.t4_le_t3;
            if (*rec.bound_t4 > 0.0)
                stats.worst_t5_over_t4 =
                    std::max(stats.worst_t5_over_t4, rec.bound_t5 / *rec.bound_t4);
        }
    }
    return stats;
}

} // namespace hhmc
