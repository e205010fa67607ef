#include "seshadri/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "seshadri/engine.hpp"
#include "seshadri/harbourne_roe.hpp"
#include "seshadri/report.hpp"

#ifdef __unix__
#include <unistd.h>
#endif

namespace seshadri::cli {

namespace {

using nlohmann::json;

bool color_enabled(const std::ostream& out) {
  if (&out != &std::cout) return false;
  if (std::getenv("NO_COLOR") != nullptr) return false;
#ifdef __unix__
  return isatty(fileno(stdout)) != 0;
#else
  return false;
#endif
}

std::string paint(bool enabled, const char* code, const std::string& text) {
  if (!enabled) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::vector<std::int64_t> parse_int_list(const std::string& text, std::size_t count,
                                         const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": expected integers, got '" + text + "'");
    }
  }
  if (out.size() != count)
    throw std::invalid_argument(what + ": expected " + std::to_string(count) +
                                " comma-separated integers, got '" + text + "'");
  return out;
}

DivisorClass parse_bundle(const std::string& text) {
  auto v = parse_int_list(text, 2, "--bundle");
  return {v[0], v[1]};
}

PointSpec parse_point(const std::string& text) {
  if (text == "arbitrary") return PointSpec::arbitrary();
  if (text == "very-general") return PointSpec::very_general();
  if (text == "general-fiber") return PointSpec::on_general_fiber();
  const std::string prefix = "singular-fiber:";
  if (text.starts_with(prefix)) {
    try {
      return PointSpec::on_singular_fiber(std::stoll(text.substr(prefix.size())));
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("--point: expected arbitrary | very-general | "
                              "general-fiber | singular-fiber:M, got '" +
                              text + "'");
}

std::string format_witness(const Witness& w) {
  std::string mults;
  for (std::size_t i = 0; i < w.curve.mults.size(); ++i)
    mults += (i ? "," : "") + std::to_string(w.curve.mults[i]);
  return "curve " + w.curve.cls.to_string() + " mults [" + mults + "] at " +
         w.point.to_string();
}

void print_certificates(std::ostream& out, const std::vector<Certificate>& certs,
                        bool with_trace) {
  for (const Certificate& c : certs) {
    out << "  " << to_string(c.kind) << " " << display_value(c.value) << "  ["
        << c.theorem_tag << "]\n";
    if (c.witness) out << "    witness: " << format_witness(*c.witness) << "\n";
    if (with_trace)
      for (const std::string& line : c.trace) out << "    | " << line << "\n";
  }
}

json certificates_json(const Query& q, const std::vector<Certificate>& certs) {
  json arr = json::array();
  for (const Certificate& c : certs) arr.push_back(to_json(c));
  json query{{"surface_type", q.surface_type}, {"bundle", to_json(q.bundle)}};
  if (q.point) query["point"] = to_json(*q.point);
  if (q.r) query["r"] = *q.r;
  return json{{"schema_version", kSchemaVersion},
              {"query", query},
              {"certificates", arr}};
}

void print_verdict_text(std::ostream& out, const OracleVerdict& v, bool color) {
  if (!v.applicable) {
    out << "upper-bound certificate: not a sweep target, vacuously consistent\n";
    return;
  }
  out << "claimed " << display_value(v.claimed) << " over window alpha<="
      << v.window.max_alpha << " beta<=" << v.window.max_beta << " mult<="
      << v.window.max_mult << "\n";
  if (v.violations.empty()) {
    out << paint(color, "32", "no violations") << " within the window\n";
  } else {
    out << paint(color, "31", std::to_string(v.violations.size()) + " violation(s)")
        << " within the window:\n";
    for (const RatedCandidate& rc : v.violations) {
      out << "  class " << rc.curve.cls.to_string() << " mults [";
      for (std::size_t i = 0; i < rc.curve.mults.size(); ++i)
        out << (i ? "," : "") << rc.curve.mults[i];
      out << "] ratio " << rc.ratio.to_string() << "\n";
    }
  }
  out << v.achievers.size() << " achiever(s) of the claimed value\n";
  for (const RatedCandidate& rc : v.achievers) {
    out << "  class " << rc.curve.cls.to_string() << " mults [";
    for (std::size_t i = 0; i < rc.curve.mults.size(); ++i)
      out << (i ? "," : "") << rc.curve.mults[i];
    out << "] ratio " << rc.ratio.to_string() << "\n";
  }
  if (v.witness_confirmed)
    out << "witness " << (*v.witness_confirmed ? "confirmed" : "NOT confirmed")
        << " among achievers\n";
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"seshadri: certified Seshadri-constant bounds on the seven "
               "hyperelliptic surface types, cross-checked by a brute-force "
               "curve-class oracle in exact arithmetic"};
  app.require_subcommand(1);

  Query q;
  std::string bundle_text = "1,1";
  std::string point_text;
  std::string window_text;
  std::string claimed_text;
  std::string case_id;
  std::string cap_text;
  bool global_mode = false;
  bool no_xu = false;
  bool min_pivot = false;
  bool with_trace = false;
  unsigned threads = 0;
  std::string format_text = "text";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_type_bundle = [&](CLI::App* sub) {
    sub->add_option("--type", q.surface_type, "Hyperelliptic surface type (1..7)")
        ->required()
        ->check(CLI::Range(1, 7));
    sub->add_option("--bundle", bundle_text, "Line bundle (a,b) in the Num(S) basis");
  };

  CLI::App* bound = app.add_subcommand(
      "bound",
      "Certified value of eps(L) or eps(L,x): the type-(1,1) global theorem "
      "(eps = 1), the type-1 exact-value theorem (eps = min{a,b}), the "
      "types-2-7 decomposition lower bound, and the type-2 very-general 4/3 "
      "proposition, plus the sqrt(L^2) upper bound.");
  add_type_bundle(bound);
  add_format(bound);
  bound->add_option("--point", point_text,
                    "Point position: arbitrary | very-general | general-fiber | "
                    "singular-fiber:M");
  bound->add_flag("--global", global_mode, "Global constant (minimum over points)");
  bound->add_flag("--trace", with_trace, "Print the per-case proof trace");

  CLI::App* multipoint = app.add_subcommand(
      "multipoint",
      "Lower bound for eps(L,r) at r very general points via the Harbourne-Roe "
      "criterion (mu = 8 holds on every hyperelliptic surface), plus the "
      "sqrt(L^2/r) upper bound.");
  add_type_bundle(multipoint);
  add_format(multipoint);
  multipoint->add_option("--r", q.r, "Number of very general points (>= 2)")->required();
  multipoint->add_option("--mu", q.mu, "Harbourne-Roe parameter mu (default 8)");
  multipoint->add_flag("--trace", with_trace, "Print the triple-check trace");

  CLI::App* hr_table = app.add_subcommand(
      "hr-table",
      "Admissible (m, k) table of the Harbourne-Roe criterion's second "
      "condition for the given r and mu.");
  hr_table->add_option("--r", q.r, "Number of points (>= 2)")->required();
  hr_table->add_option("--mu", q.mu, "Harbourne-Roe parameter mu (default 8)");
  add_format(hr_table);

  CLI::App* hr_verify = app.add_subcommand(
      "hr-verify",
      "Checks every Harbourne-Roe admissible triple against its C^2 floor "
      "(Hodge index reduction); exit 1 names the failing triple, if any.");
  add_type_bundle(hr_verify);
  add_format(hr_verify);
  hr_verify->add_option("--r", q.r, "Number of points (>= 2)")->required();
  hr_verify->add_option("--mu", q.mu, "Harbourne-Roe parameter mu (default 8)");

  CLI::App* oracle = app.add_subcommand(
      "oracle",
      "Brute-force sweep of curve classes and multiplicity vectors against a "
      "claimed bound, filtered by the genus floor, the Xu-type floors, Bezout "
      "fibre constraints and the Hodge index inequality. Exit 1 iff a "
      "violation exists in the window.");
  add_type_bundle(oracle);
  add_format(oracle);
  std::vector<std::string> point_texts;
  oracle->add_option("--point", point_texts,
                     "Point position (repeatable): arbitrary | very-general | "
                     "general-fiber | singular-fiber:M");
  oracle->add_option("--r", q.r, "Shorthand for r very general points");
  oracle->add_option("--claimed", claimed_text,
                     "Claimed bound: p, p/q, sqrt(p) or sqrt(p/q)")
      ->required();
  oracle->add_option("--window", window_text,
                     "Search window max_alpha,max_beta,max_mult (default 8,8,6)");
  oracle->add_option("--cap", cap_text, "Report only ratios below this cap");
  oracle->add_option("--max-points", q.window.max_points,
                     "Safety cap on the number of points (default 3)");
  oracle->add_option("--threads", threads, "Worker threads (0 = hardware)");
  oracle->add_flag("--no-xu", no_xu, "Disable the Xu-type family floors");
  oracle->add_flag("--min-pivot", min_pivot,
                   "Multi-point Xu floor subtracts the smallest multiplicity >= 2 "
                   "instead of the largest");

  CLI::App* replay = app.add_subcommand(
      "replay",
      "Replays the finite case analyses (m = 1, generic, m = 4, m = 5) behind "
      "the type-2 very-general 4/3 proposition.");
  replay->add_option("--case", case_id,
                     "type2-m1 | type2-m4 | type2-m5 | type2-generic")
      ->required();
  add_format(replay);

  CLI::App* serrano = app.add_subcommand(
      "serrano-table",
      "Prints Serrano's table of the seven hyperelliptic surface types: group "
      "order, multiple-fibre multiplicities and the Num(S) basis.");
  add_format(serrano);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    app.exit(e, out, err);
    return 2;
  }

  q.format = format_text == "json" ? Format::Json : Format::Text;
  const bool color = q.format == Format::Text && color_enabled(out);

  try {
    if (app.got_subcommand(bound)) {
      const SurfaceType& s = SurfaceType::by_id(q.surface_type);
      q.bundle = parse_bundle(bundle_text);
      if (!is_ample(q.bundle))
        throw std::invalid_argument("bundle " + q.bundle.to_string() +
                                    " is not ample (need a > 0 and b > 0)");
      if (global_mode == !point_text.empty())
        throw std::invalid_argument("give exactly one of --global or --point");
      q.point = global_mode ? PointSpec::arbitrary() : parse_point(point_text);
      auto certs = best_known(s, q.bundle, q.point, std::nullopt);
      if (q.format == Format::Json) {
        out << certificates_json(q, certs).dump(2) << "\n";
      } else {
        out << "type " << s.id() << ", bundle " << q.bundle.to_string() << ", point "
            << q.point->to_string() << "\n";
        print_certificates(out, certs, with_trace);
      }
      return 0;
    }

    if (app.got_subcommand(multipoint)) {
      const SurfaceType& s = SurfaceType::by_id(q.surface_type);
      q.bundle = parse_bundle(bundle_text);
      if (!is_ample(q.bundle))
        throw std::invalid_argument("bundle " + q.bundle.to_string() +
                                    " is not ample (need a > 0 and b > 0)");
      std::vector<Certificate> certs;
      certs.push_back(hr_lower_bound(s, q.bundle, *q.r, q.mu));
      certs.push_back(upper_bound_multipoint(q.bundle, *q.r));
      if (q.format == Format::Json) {
        out << certificates_json(q, certs).dump(2) << "\n";
      } else {
        out << "type " << s.id() << ", bundle " << q.bundle.to_string() << ", r = "
            << *q.r << ", mu = " << q.mu << "\n";
        print_certificates(out, certs, with_trace);
      }
      return 0;
    }

    if (app.got_subcommand(hr_table)) {
      if (q.format == Format::Json) {
        json arr = json::array();
        for (const AdmissibleTriple& t : enumerate_triples(*q.r, q.mu))
          arr.push_back(to_json(t));
        out << json{{"schema_version", kSchemaVersion},
                    {"r", *q.r},
                    {"mu", q.mu},
                    {"triples", arr}}
                   .dump(2)
            << "\n";
      } else {
        out << hr_table_text(*q.r, q.mu);
      }
      return 0;
    }

    if (app.got_subcommand(hr_verify)) {
      const SurfaceType& s = SurfaceType::by_id(q.surface_type);
      q.bundle = parse_bundle(bundle_text);
      if (!is_ample(q.bundle))
        throw std::invalid_argument("bundle " + q.bundle.to_string() +
                                    " is not ample (need a > 0 and b > 0)");
      HrReport report = hr_check(s, q.bundle, *q.r, q.mu);
      if (q.format == Format::Json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        for (const std::string& line : report.trace_lines()) {
          std::string painted = line;
          if (line.ends_with(": pass"))
            painted = line.substr(0, line.size() - 4) + paint(color, "32", "pass");
          else if (line.ends_with(": FAIL"))
            painted = line.substr(0, line.size() - 4) + paint(color, "31", "FAIL");
          out << painted << "\n";
        }
      }
      return report.all_passed() ? 0 : 1;
    }

    if (app.got_subcommand(oracle)) {
      const SurfaceType& s = SurfaceType::by_id(q.surface_type);
      q.bundle = parse_bundle(bundle_text);
      if (!is_ample(q.bundle))
        throw std::invalid_argument("bundle " + q.bundle.to_string() +
                                    " is not ample (need a > 0 and b > 0)");
      std::vector<PointSpec> points;
      for (const std::string& pt : point_texts) points.push_back(parse_point(pt));
      if (q.r) {
        if (!points.empty())
          throw std::invalid_argument("give --point or --r, not both");
        for (std::int64_t i = 0; i < *q.r; ++i)
          points.push_back(PointSpec::very_general());
      }
      if (points.empty())
        throw std::invalid_argument("give at least one --point or --r");
      if (!window_text.empty()) {
        auto v = parse_int_list(window_text, 3, "--window");
        q.window.max_alpha = v[0];
        q.window.max_beta = v[1];
        q.window.max_mult = v[2];
      }
      if (!cap_text.empty()) q.window.ratio_cap = parse_bound(cap_text);
      BoundValue claimed = parse_bound(claimed_text);
      OracleVerdict verdict =
          sweep(s, q.bundle, points, q.window, claimed, !no_xu, threads,
                min_pivot ? PivotMode::MinMultiplicity : PivotMode::MaxMultiplicity);
      if (q.format == Format::Json)
        out << to_json(verdict).dump(2) << "\n";
      else
        print_verdict_text(out, verdict, color);
      return verdict.violations.empty() ? 0 : 1;
    }

    if (app.got_subcommand(replay)) {
      ReplayResult res = replay_contradiction(case_id);
      if (q.format == Format::Json) {
        out << to_json(res).dump(2) << "\n";
      } else {
        out << "case " << res.case_id << ":\n";
        for (const std::string& line : res.trace) out << "  " << line << "\n";
        out << (res.established ? paint(color, "32", "established")
                                : paint(color, "31", "NOT established"))
            << "\n";
      }
      return res.established ? 0 : 1;
    }

    if (app.got_subcommand(serrano)) {
      if (q.format == Format::Json)
        out << serrano_table_json().dump(2) << "\n";
      else
        out << serrano_table_text();
      return 0;
    }
  } catch (const HrCheckError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace seshadri::cli
