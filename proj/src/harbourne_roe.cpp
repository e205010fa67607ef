#include "seshadri/harbourne_roe.hpp"

#include <algorithm>

namespace seshadri {

namespace {

std::string triple_label(const AdmissibleTriple& t) {
  if (t.kind == TripleKind::Uniform)
    return "uniform m=" + std::to_string(t.m);
  return "perturbed m=" + std::to_string(t.m) + " k=" + std::to_string(t.k);
}

bool perturbed_k_admissible(std::int64_t r, std::int64_t m, std::int64_t k) {
  // k^2 < (r/(r-1)) * min{m, m+k}, cleared of denominators.
  std::int64_t lo = std::min(m, m + k);
  return k != 0 && k * k * (r - 1) < r * lo;
}

}  // namespace

std::vector<AdmissibleTriple> enumerate_triples(std::int64_t r, std::int64_t mu) {
  if (r < 2) throw std::invalid_argument("enumerate_triples: r must be >= 2");
  if (mu < 1) throw std::invalid_argument("enumerate_triples: mu must be >= 1");

  std::vector<AdmissibleTriple> out;
  for (std::int64_t m = 1; m < mu; ++m)
    out.push_back({r, m, 0, TripleKind::Uniform});

  for (std::int64_t m = 1; m * (r - 1) < mu; ++m) {
    // k^2 < (r/(r-1)) min{m, m+k} <= 2(m + |k|) bounds |k| by a small range;
    // scanning |k| <= m + 2 covers it since k^2 < 2m + 2|k| fails beyond.
    std::vector<std::int64_t> ks;
    for (std::int64_t a = 1; a <= m + 2; ++a) {
      if (perturbed_k_admissible(r, m, a)) ks.push_back(a);
      if (perturbed_k_admissible(r, m, -a)) ks.push_back(-a);
    }
    for (std::int64_t k : ks) out.push_back({r, m, k, TripleKind::Perturbed});
  }
  return out;
}

std::int64_t c2_floor_for(const AdmissibleTriple& t) {
  const std::int64_t r = t.r, m = t.m, k = t.k;
  if (t.kind == TripleKind::Uniform) {
    if (m == 1) return 2 * r + 2;
    return r * m * m - m + 2;
  }
  if (m == 1) return r + 3;  // k = 1 is the only admissible offset
  return (r - 1) * m * m + (m + k) * (m + k) - m + 2;
}

std::int64_t polynomial_check(std::int64_t r, std::int64_t m, std::int64_t k) {
  return 8 * r * r * k * k - 8 * r * r * m + 16 * r * r + m * m * r * r +
         2 * m * r * k - 8 * r * k * k + k * k;
}

ConditionCheck check_condition(const AdmissibleTriple& t, std::int64_t mu,
                               std::int64_t L2) {
  if (mu < 1) throw std::invalid_argument("check_condition: mu must be >= 1");
  const std::int64_t r = t.r, m = t.m, k = t.k;
  const std::int64_t floor = c2_floor_for(t);

  ConditionCheck cc;
  cc.c2_floor = floor;

  // target is the coefficient of sqrt(L^2 (r - 1/mu)) in the degree floor.
  Rational target = t.kind == TripleKind::Uniform ? Rational(m)
                                                  : Rational(m * r + k, r);
  Rational r_minus = Rational(r) - Rational(1, mu);
  Rational required_sq = target * target * r_minus;
  cc.required = BoundValue::from_radicand(required_sq);
  cc.passed = Rational(floor) >= required_sq;

  if (t.kind == TripleKind::Uniform && m == 1) {
    cc.trace.push_back(triple_label(t) +
                       ": dim |C| >= r so h^0(C) >= r+1; with h^0 = chi = C^2/2 "
                       "(ampleness of the class computing the degree floor is "
                       "assumed here, not verified): C^2 >= " +
                       std::to_string(floor));
  } else if (t.kind == TripleKind::Uniform) {
    cc.trace.push_back(triple_label(t) + ": Xu floor for m^[r]: C^2 >= r m^2 - m + 2 = " +
                       std::to_string(floor));
  } else if (m == 1) {
    cc.trace.push_back(triple_label(t) +
                       ": Xu floor for (1^[r-1], 2): C^2 >= r + 3 = " +
                       std::to_string(floor));
  } else {
    cc.trace.push_back(triple_label(t) +
                       ": Xu floor for (m^[r-1], m+k): C^2 >= (r-1)m^2 + (m+k)^2 "
                       "- m + 2 = " + std::to_string(floor));
  }
  cc.trace.push_back("Hodge: L^2 C^2 >= target^2 L^2 (r - 1/mu) with L^2 = " +
                     std::to_string(L2) + " reduces to C^2 >= " +
                     required_sq.to_string() + "; floor " + std::to_string(floor) +
                     (cc.passed ? " >= " : " < ") + required_sq.to_string() +
                     (cc.passed ? ": pass" : ": FAIL"));

  if (mu == 8 && t.kind == TripleKind::Perturbed && m > 1) {
    const std::int64_t poly = polynomial_check(r, m, k);
    const std::int64_t reordered =
        8 * r * r * floor - (m * r + k) * (m * r + k) * (8 * r - 1);
    if (poly != reordered)
      throw std::logic_error("check_condition: polynomial form disagrees with "
                             "the direct inequality");
    if ((poly >= 0) != cc.passed)
      throw std::logic_error("check_condition: polynomial sign disagrees with "
                             "the rational check");
    cc.trace.push_back("integer form: 8r^2k^2 - 8r^2m + 16r^2 + m^2r^2 + 2mrk "
                       "- 8rk^2 + k^2 = " + std::to_string(poly) +
                       (poly >= 0 ? " >= 0" : " < 0"));
  }
  return cc;
}

bool HrReport::all_passed() const {
  return std::all_of(triples_checked.begin(), triples_checked.end(),
                     [](const Entry& e) { return e.passed; });
}

const HrReport::Entry* HrReport::first_failure() const {
  for (const Entry& e : triples_checked)
    if (!e.passed) return &e;
  return nullptr;
}

std::vector<std::string> HrReport::trace_lines() const {
  std::vector<std::string> lines;
  lines.push_back("Harbourne-Roe check: r = " + std::to_string(r) + ", mu = " +
                  std::to_string(mu) + ", L^2 = " + std::to_string(L2) + ", " +
                  std::to_string(triples_checked.size()) + " admissible triples");
  for (const Entry& e : triples_checked) {
    lines.push_back(triple_label(e.triple) + ": C^2 floor " +
                    std::to_string(e.c2_floor) + " vs required " +
                    e.required.radicand().to_string() +
                    (e.passed ? ": pass" : ": FAIL"));
  }
  if (bound) {
    lines.push_back("all triples pass: eps(L," + std::to_string(r) +
                    ") >= sqrt(" + bound->radicand().to_string() + ")");
  } else if (const Entry* e = first_failure()) {
    lines.push_back("failed at " + triple_label(e->triple) + ": no bound emitted");
  }
  return lines;
}

HrReport hr_check([[maybe_unused]] const SurfaceType& s, DivisorClass L,
                  std::int64_t r, std::int64_t mu) {
  // The checks depend on the surface only through L^2 and the fact that
  // h^0 = chi holds for ample classes, true on every hyperelliptic type.
  if (!is_ample(L)) throw std::invalid_argument("hr_check: L must be ample");
  if (r < 2) throw std::invalid_argument("hr_check: r must be >= 2");

  HrReport report;
  report.r = r;
  report.mu = mu;
  report.L2 = self_intersection(L);
  for (const AdmissibleTriple& t : enumerate_triples(r, mu)) {
    ConditionCheck cc = check_condition(t, mu, report.L2);
    report.triples_checked.push_back({t, cc.c2_floor, cc.required, cc.passed});
  }
  if (report.all_passed()) {
    Rational radicand = Rational(report.L2, r) *
                        (Rational(1) - Rational(1, r * mu));
    report.bound = BoundValue::from_radicand(radicand);
  }
  return report;
}

Certificate hr_lower_bound(const SurfaceType& s, DivisorClass L, std::int64_t r,
                           std::int64_t mu) {
  HrReport report = hr_check(s, L, r, mu);
  if (!report.bound) {
    const HrReport::Entry* e = report.first_failure();
    throw HrCheckError("hr_lower_bound: floor check failed at " +
                           triple_label(e->triple) + " for mu = " +
                           std::to_string(mu),
                       report, e->triple);
  }
  Certificate cert;
  cert.kind = CertificateKind::LowerBound;
  cert.value = *report.bound;
  cert.theorem_tag = "hr-multipoint";
  cert.trace = report.trace_lines();
  return cert;
}

}  // namespace seshadri
