#ifndef SESHADRI_REPORT_HPP
#define SESHADRI_REPORT_HPP

#include <string>

#include <json.hpp>

#include "seshadri/certificate.hpp"
#include "seshadri/harbourne_roe.hpp"
#include "seshadri/oracle.hpp"
#include "seshadri/surface.hpp"

namespace seshadri {

// Machine-readable records. Field names are stable and documented in the
// README; every top-level record carries schema_version.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const BoundValue& v);
nlohmann::json to_json(const DivisorClass& c);
nlohmann::json to_json(const PointSpec& p);
nlohmann::json to_json(const CurveCandidate& c);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const AdmissibleTriple& t);
nlohmann::json to_json(const HrReport& report);
nlohmann::json to_json(const OracleVerdict& verdict);
nlohmann::json to_json(const ReplayResult& res);
nlohmann::json serrano_row_json(const SurfaceType& s);
nlohmann::json serrano_table_json();

Rational rational_from_json(const nlohmann::json& j);
BoundValue bound_from_json(const nlohmann::json& j);
DivisorClass divisor_from_json(const nlohmann::json& j);
PointSpec point_from_json(const nlohmann::json& j);
CurveCandidate candidate_from_json(const nlohmann::json& j);
Certificate certificate_from_json(const nlohmann::json& j);
AdmissibleTriple triple_from_json(const nlohmann::json& j);
HrReport hr_report_from_json(const nlohmann::json& j);
OracleVerdict verdict_from_json(const nlohmann::json& j);

// "sqrt(15/16) (~0.968246)" — exact form first, approximation marked.
std::string display_value(const BoundValue& v);

// Serrano's seven-row table as fixed-width text.
std::string serrano_table_text();

// The admissible (m, k) table for one r, laid out like the published table:
// one row per m, k-values in the order 1, -1, 2, -2, ...
std::string hr_table_text(std::int64_t r, std::int64_t mu);

// Parses "p", "p/q", "sqrt(p)", "sqrt(p/q)".
BoundValue parse_bound(const std::string& text);

}  // namespace seshadri

#endif  // SESHADRI_REPORT_HPP
