#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hhmc/bounds.hpp"
#include "hhmc/fn1d.hpp"

namespace hhmc {

struct XPolicy {
    enum class Kind { Midpoint, Grid, Random };
    Kind kind = Kind::Midpoint;
    int k = 1; // points per (a, b) draw for Grid / Random
};

/// Sweep definition. `samples` is the total number of generated cases; the
/// (function, m, q) combinations are cycled round-robin while (a, b) and x are
/// drawn from the seeded generator, so a config (seed included) pins the exact
/// case list.
struct SweepConfig {
    std::vector<Fn1D> functions;
    std::array<double, 2> a_range{0.0, 1.0};
    std::array<double, 2> b_range{1.0, 2.0};
    XPolicy x_policy;
    std::vector<double> m_values{1.0};
    std::vector<double> q_values{1.0};
    long samples = 100;
    std::uint64_t seed = 0;
    double tol = 1e-10;
    OracleBudget oracle;
    int threads = 1;

    void validate() const; // throws ConfigError
};

enum class CaseStatus { Run, FilteredDomain, FilteredPrecondition, Error };

/// One generated case with everything the harness learned about it.
struct CaseRecord {
    std::string function;
    double a = 0.0, b = 0.0, x = 0.0, m = 1.0, q = 1.0;
    CaseStatus status = CaseStatus::Run;
    bool certified_t3 = false;
    bool certified_t45 = false;
    ConvexityReport precondition_t3;
    ConvexityReport precondition_t45;
    double lhs_abs = 0.0;
    double bound_t3 = 0.0;
    std::optional<double> bound_t4;
    double bound_t5 = 0.0;
    double residual = 0.0;
    std::map<std::string, double> tightness;
    bool quadrature_converged = true;
    std::string error;
};

struct Violation {
    long case_index = 0;
    std::string function;
    double a = 0.0, b = 0.0, x = 0.0, m = 1.0, q = 1.0;
    std::string bound_name;
    double lhs_abs = 0.0;
    double bound = 0.0;
    double gap = 0.0;
};

struct TightnessStats {
    long count = 0;
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
};

struct OrderingStats {
    long cases_q_gt_1 = 0;    // run cases where t4 exists
    long t5_le_t4 = 0;
    long t5_le_t3 = 0;        // over all run cases
    long t4_le_t3 = 0;        // over q > 1 cases
    long cases_total = 0;     // run cases considered
    double worst_t5_over_t4 = 0.0;
};

struct SweepReport {
    long cases_generated = 0;
    long cases_run = 0;
    long cases_filtered_precondition = 0;
    long cases_filtered_domain = 0;
    long cases_error = 0;
    std::vector<Violation> violations;
    std::map<std::string, TightnessStats> tightness_stats; // certified cases only
    OrderingStats ordering;
    double max_lemma1_residual = 0.0;
    std::uint64_t seed = 0;
    std::vector<CaseRecord> rows;

    bool pass() const { return violations.empty(); }
};

/// Runs the sweep. Deterministic for a given config: case parameters are
/// generated up front from the seed, evaluation may fan out over
/// config.threads workers, and aggregation always happens in case order, so
/// serial and parallel runs produce identical reports.
SweepReport run_sweep(const SweepConfig& config);

/// Pairwise ordering tallies among the three bounds over run cases.
OrderingStats compare_bounds(const std::vector<CaseRecord>& rows);

} // namespace hhmc
