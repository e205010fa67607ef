#include "seshadri/report.hpp"

#include <cstdio>
#include <sstream>

namespace seshadri {

using nlohmann::json;

json to_json(const Rational& q) { return json{{"num", q.num()}, {"den", q.den()}}; }

json to_json(const BoundValue& v) {
  json j{{"radicand", to_json(v.radicand())},
         {"is_rational", v.is_rational()},
         {"display", v.to_string()},
         {"approx", v.approx()}};
  if (auto q = v.as_rational()) j["rational"] = to_json(*q);
  return j;
}

json to_json(const DivisorClass& c) { return json{{"a", c.a}, {"b", c.b}}; }

json to_json(const PointSpec& p) {
  json j{{"position", ""}};
  switch (p.position()) {
    case PointSpec::Position::SingularFiber:
      j["position"] = "singular-fiber";
      j["multiplicity"] = p.fiber_multiplicity();
      break;
    case PointSpec::Position::GeneralFiber:
      j["position"] = "general-fiber";
      break;
    case PointSpec::Position::VeryGeneral:
      j["position"] = "very-general";
      break;
    case PointSpec::Position::Arbitrary:
      j["position"] = "arbitrary";
      break;
  }
  return j;
}

json to_json(const CurveCandidate& c) {
  return json{{"class", to_json(c.cls)},
              {"mults", c.mults},
              {"gonality_floor", c.gonality_floor}};
}

json to_json(const Certificate& cert) {
  json j{{"schema_version", kSchemaVersion},
         {"kind", to_string(cert.kind)},
         {"value", to_json(cert.value)},
         {"theorem", cert.theorem_tag},
         {"trace", cert.trace}};
  if (cert.witness) {
    j["witness"] = json{{"curve", to_json(cert.witness->curve)},
                        {"point", to_json(cert.witness->point)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json to_json(const AdmissibleTriple& t) {
  return json{{"r", t.r},
              {"m", t.m},
              {"k", t.k},
              {"condition", t.kind == TripleKind::Uniform ? "uniform" : "perturbed"}};
}

json to_json(const HrReport& report) {
  json triples = json::array();
  for (const HrReport::Entry& e : report.triples_checked) {
    triples.push_back(json{{"triple", to_json(e.triple)},
                           {"c2_floor", e.c2_floor},
                           {"required", to_json(e.required)},
                           {"passed", e.passed}});
  }
  json j{{"schema_version", kSchemaVersion},
         {"r", report.r},
         {"mu", report.mu},
         {"L2", report.L2},
         {"triples", triples}};
  j["bound"] = report.bound ? to_json(*report.bound) : json(nullptr);
  return j;
}

namespace {

json rated_to_json(const RatedCandidate& rc) {
  return json{{"class", to_json(rc.curve.cls)},
              {"mults", rc.curve.mults},
              {"ratio", to_json(rc.ratio)}};
}

RatedCandidate rated_from_json(const json& j) {
  RatedCandidate rc;
  rc.curve.cls = divisor_from_json(j.at("class"));
  rc.curve.mults = j.at("mults").get<std::vector<std::int64_t>>();
  rc.ratio = rational_from_json(j.at("ratio"));
  return rc;
}

}  // namespace

json to_json(const OracleVerdict& verdict) {
  json violations = json::array();
  for (const RatedCandidate& rc : verdict.violations) violations.push_back(rated_to_json(rc));
  json achievers = json::array();
  for (const RatedCandidate& rc : verdict.achievers) achievers.push_back(rated_to_json(rc));
  json window{{"max_alpha", verdict.window.max_alpha},
              {"max_beta", verdict.window.max_beta},
              {"max_mult", verdict.window.max_mult},
              {"max_points", verdict.window.max_points}};
  window["ratio_cap"] =
      verdict.window.ratio_cap ? to_json(*verdict.window.ratio_cap) : json(nullptr);
  json j{{"schema_version", kSchemaVersion},
         {"claimed", to_json(verdict.claimed)},
         {"applicable", verdict.applicable},
         {"window", window},
         {"violations", violations},
         {"achievers", achievers}};
  j["witness_confirmed"] =
      verdict.witness_confirmed ? json(*verdict.witness_confirmed) : json(nullptr);
  return j;
}

json to_json(const ReplayResult& res) {
  return json{{"schema_version", kSchemaVersion},
              {"case", res.case_id},
              {"established", res.established},
              {"trace", res.trace}};
}

json serrano_row_json(const SurfaceType& s) {
  return json{{"type", s.id()},
              {"group_order", s.group_order()},
              {"multiplicities", s.singular_fiber_multiplicities()},
              {"mu", s.mu()},
              {"basis", s.basis_label()},
              {"b_fiber_coeff", s.b_fiber_coeff()},
              {"admissible_horizontal_n", s.admissible_horizontal_n()}};
}

json serrano_table_json() {
  json rows = json::array();
  for (const SurfaceType& s : SurfaceType::all()) rows.push_back(serrano_row_json(s));
  return json{{"schema_version", kSchemaVersion}, {"types", rows}};
}

Rational rational_from_json(const json& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

BoundValue bound_from_json(const json& j) {
  return BoundValue::from_radicand(rational_from_json(j.at("radicand")));
}

DivisorClass divisor_from_json(const json& j) {
  return DivisorClass{j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>()};
}

PointSpec point_from_json(const json& j) {
  const std::string pos = j.at("position").get<std::string>();
  if (pos == "singular-fiber")
    return PointSpec::on_singular_fiber(j.at("multiplicity").get<std::int64_t>());
  if (pos == "general-fiber") return PointSpec::on_general_fiber();
  if (pos == "very-general") return PointSpec::very_general();
  if (pos == "arbitrary") return PointSpec::arbitrary();
  throw std::invalid_argument("point_from_json: unknown position '" + pos + "'");
}

CurveCandidate candidate_from_json(const json& j) {
  CurveCandidate c;
  c.cls = divisor_from_json(j.at("class"));
  c.mults = j.at("mults").get<std::vector<std::int64_t>>();
  c.gonality_floor = j.at("gonality_floor").get<std::int64_t>();
  return c;
}

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "exact")
    cert.kind = CertificateKind::Exact;
  else if (kind == "lower")
    cert.kind = CertificateKind::LowerBound;
  else if (kind == "upper")
    cert.kind = CertificateKind::UpperBound;
  else
    throw std::invalid_argument("certificate_from_json: unknown kind '" + kind + "'");
  cert.value = bound_from_json(j.at("value"));
  cert.theorem_tag = j.at("theorem").get<std::string>();
  cert.trace = j.at("trace").get<std::vector<std::string>>();
  if (!j.at("witness").is_null()) {
    cert.witness = Witness{candidate_from_json(j.at("witness").at("curve")),
                           point_from_json(j.at("witness").at("point"))};
  }
  return cert;
}

AdmissibleTriple triple_from_json(const json& j) {
  AdmissibleTriple t;
  t.r = j.at("r").get<std::int64_t>();
  t.m = j.at("m").get<std::int64_t>();
  t.k = j.at("k").get<std::int64_t>();
  const std::string cond = j.at("condition").get<std::string>();
  if (cond == "uniform")
    t.kind = TripleKind::Uniform;
  else if (cond == "perturbed")
    t.kind = TripleKind::Perturbed;
  else
    throw std::invalid_argument("triple_from_json: unknown condition '" + cond + "'");
  return t;
}

HrReport hr_report_from_json(const json& j) {
  HrReport report;
  report.r = j.at("r").get<std::int64_t>();
  report.mu = j.at("mu").get<std::int64_t>();
  report.L2 = j.at("L2").get<std::int64_t>();
  for (const json& ej : j.at("triples")) {
    report.triples_checked.push_back({triple_from_json(ej.at("triple")),
                                      ej.at("c2_floor").get<std::int64_t>(),
                                      bound_from_json(ej.at("required")),
                                      ej.at("passed").get<bool>()});
  }
  if (!j.at("bound").is_null()) report.bound = bound_from_json(j.at("bound"));
  return report;
}

OracleVerdict verdict_from_json(const json& j) {
  OracleVerdict verdict;
  verdict.claimed = bound_from_json(j.at("claimed"));
  verdict.applicable = j.at("applicable").get<bool>();
  const json& w = j.at("window");
  verdict.window.max_alpha = w.at("max_alpha").get<std::int64_t>();
  verdict.window.max_beta = w.at("max_beta").get<std::int64_t>();
  verdict.window.max_mult = w.at("max_mult").get<std::int64_t>();
  verdict.window.max_points = w.at("max_points").get<std::int64_t>();
  if (!w.at("ratio_cap").is_null())
    verdict.window.ratio_cap = bound_from_json(w.at("ratio_cap"));
  for (const json& v : j.at("violations")) verdict.violations.push_back(rated_from_json(v));
  for (const json& a : j.at("achievers")) verdict.achievers.push_back(rated_from_json(a));
  if (!j.at("witness_confirmed").is_null())
    verdict.witness_confirmed = j.at("witness_confirmed").get<bool>();
  return verdict;
}

std::string display_value(const BoundValue& v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v.approx());
  return v.to_string() + " (~" + buf + ")";
}

std::string serrano_table_text() {
  std::ostringstream out;
  out << "type | group order | fibre multiplicities | basis of Num(S) | "
         "B-fibre class | horizontal n\n";
  for (const SurfaceType& s : SurfaceType::all()) {
    std::string mults, ns;
    for (std::size_t i = 0; i < s.singular_fiber_multiplicities().size(); ++i)
      mults += (i ? "," : "") + std::to_string(s.singular_fiber_multiplicities()[i]);
    for (std::size_t i = 0; i < s.admissible_horizontal_n().size(); ++i)
      ns += (i ? "," : "") + std::to_string(s.admissible_horizontal_n()[i]);
    out << "   " << s.id() << " | " << s.group_order() << " | " << mults << " | "
        << s.basis_label() << " | (0," << s.b_fiber_coeff() << ") | " << ns << "\n";
  }
  return out.str();
}

std::string hr_table_text(std::int64_t r, std::int64_t mu) {
  std::ostringstream out;
  out << "r = " << r << ", mu = " << mu << "\n";
  out << "condition (1): m = 1.." << (mu - 1) << ", multiplicity vector m^[r]\n";
  out << "condition (2): m < mu/(r-1), vector (m^[r-1], m+k), "
         "k != 0 with k^2 < (r/(r-1))*min(m, m+k)\n";
  out << "m | possible k\n";
  bool any = false;
  std::int64_t current_m = 0;
  std::string row;
  for (const AdmissibleTriple& t : enumerate_triples(r, mu)) {
    if (t.kind != TripleKind::Perturbed) continue;
    if (t.m != current_m) {
      if (!row.empty()) out << row << "\n";
      current_m = t.m;
      row = std::to_string(t.m) + " | " + std::to_string(t.k);
    } else {
      row += ", " + std::to_string(t.k);
    }
    any = true;
  }
  if (!row.empty()) out << row << "\n";
  if (!any) out << "(condition (2) is vacuous for this r)\n";
  return out.str();
}

BoundValue parse_bound(const std::string& text) {
  auto parse_rational = [](const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  };
  try {
    if (text.starts_with("sqrt(") && text.ends_with(")")) {
      return BoundValue::from_radicand(
          parse_rational(text.substr(5, text.size() - 6)));
    }
    return BoundValue::from_rational(parse_rational(text));
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_bound: expected p, p/q, sqrt(p) or "
                                "sqrt(p/q), got '" + text + "'");
  }
}

}  // namespace seshadri
