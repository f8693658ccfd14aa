#pragma once

#include <string>

#include <json.hpp>

#include "hhmc/bounds.hpp"
#include "hhmc/convexity.hpp"
#include "hhmc/fn1d.hpp"
#include "hhmc/means.hpp"
#include "hhmc/sweep.hpp"

namespace hhmc {

/// Rounds v to 12 significant digits (the fixed float policy of every emitted
/// report, chosen so serialize -> parse -> serialize is byte-stable).
double round_sig12(double v);

/// Formats with the same 12-significant-digit policy (CSV cells, text output).
std::string format_sig12(double v);

nlohmann::ordered_json fn_spec_to_json(const Fn1D& f);

/// Parses {"kind": "power", "n": 3, "domain_hi": 4.0} style descriptors.
/// Kind aliases "poly", "exp", "const" are accepted.
Fn1D fn_from_json(const nlohmann::json& spec);

nlohmann::ordered_json to_json(const ConvexityReport& r);
nlohmann::ordered_json to_json(const HHReport& r);
nlohmann::ordered_json means_report_json(const MeansCase& c);
nlohmann::ordered_json to_json(const SweepReport& r);

SweepConfig sweep_config_from_json(const nlohmann::json& j);
SweepConfig sweep_config_from_file(const std::string& path);

/// Per-case CSV (header + one row per case that ran):
/// function,a,b,x,m,q,lhs_abs,bound_t3,bound_t4,bound_t5,residual,certified_t3,certified_t45
std::string sweep_rows_csv(const SweepReport& r);

/// Single flat CSV (header + row) for one HHReport.
std::string hh_report_csv(const HHReport& r);

/// Canonical dump: 2-space indent, trailing newline.
std::string dump_report(const nlohmann::ordered_json& j);

} // namespace hhmc
