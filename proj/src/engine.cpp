#include "seshadri/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "seshadri/harbourne_roe.hpp"

namespace seshadri {

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Exact:
      return "exact";
    case CertificateKind::LowerBound:
      return "lower";
    case CertificateKind::UpperBound:
      return "upper";
  }
  return "?";
}

namespace {

std::string join_int64(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

// Witness on the reduced fibre A/mu = (1,0): LC/m = 1/1 for L = (1,1).
Witness fiber_a_over_mu_witness(const SurfaceType& s) {
  return Witness{CurveCandidate{{1, 0}, {1}},
                 PointSpec::on_singular_fiber(s.mu())};
}

std::vector<std::string> type11_case_trace(const SurfaceType& s) {
  std::vector<std::string> trace;
  const std::int64_t k = s.b_fiber_coeff();
  trace.push_back("irreducible C=(alpha,beta) through x with multiplicity m; L=(1,1)");
  trace.push_back("case (1) C = vertical fibre B = (0," + std::to_string(k) +
                  "), x arbitrary: LC/m = " + std::to_string(k) + "/1 >= 1");
  trace.push_back("case (2) C = reduced horizontal fibre (n,0), n in {" +
                  join_int64(s.admissible_horizontal_n()) +
                  "}, x on that fibre: LC/m = n/1 >= 1");
  // Mixed classes: Bezout against the vertical fibre and the horizontal
  // fibre through x. Worst position: general horizontal fibre (n = mu).
  const std::int64_t mu = s.mu();
  std::string bezout = "case (3) C mixed (alpha,beta > 0): Bezout gives " +
                       std::to_string(k) + "*alpha >= m and " + std::to_string(mu) +
                       "*beta >= m, so LC/m = (alpha+beta)/m >= 1/" +
                       std::to_string(k) + " + 1/" + std::to_string(mu);
  if (k * mu <= k + mu) {  // 1/k + 1/mu >= 1
    trace.push_back(bezout + " >= 1");
  } else {
    trace.push_back(bezout + " < 1: refine by multiplicity");
    trace.push_back("case (3a) m = 1: LC = alpha + beta >= 2 > 1");
    trace.push_back("case (3b) m >= 2: genus gives C^2 >= m(m-1); Hodge gives "
                    "(LC)^2 >= L^2 C^2 = 2 C^2 >= 2m(m-1); LC/m >= sqrt(2-2/m) >= 1");
  }
  trace.push_back("value 1 attained: C = (1,0), the reduced multiplicity-" +
                  std::to_string(mu) + " fibre, at a point of that fibre: LC/m = 1/1");
  return trace;
}

std::vector<std::string> type2_very_general_trace() {
  return {
      "type 2, L=(1,1), x very general: claim LC/m >= 4/3 for every irreducible C",
      "m = 1: LC < 4/3 forces alpha+beta <= 1; (1,0) = A/2 misses a very general "
      "point, (0,1) = B/2 is not effective",
      "m >= 2 generic: Xu floor C^2 >= m^2-m+2; Hodge reduces the claim to "
      "2(m^2-m+2) >= (16/9)m^2, i.e. (m-3)(m-6) >= 0: holds for m not in {4,5}",
      "m = 4: LC < 16/3 forces alpha+beta <= 5, but 2*alpha*beta = C^2 >= 14: "
      "max of 2*alpha*beta over alpha+beta <= 5 is 12, impossible",
      "m = 5: LC < 20/3 forces alpha+beta <= 6, but alpha*beta >= 11: max over "
      "alpha+beta <= 6 is 9, impossible",
  };
}

Certificate lower_one_fallback(const SurfaceType& s, const PointSpec& p) {
  Certificate cert;
  cert.kind = CertificateKind::LowerBound;
  cert.value = BoundValue::from_rational(1);
  cert.theorem_tag = "type11-global";
  cert.trace = type11_case_trace(s);
  cert.trace.push_back("position " + p.to_string() +
                       ": no sharper theorem applies, global bound eps(L,x) >= 1");
  return cert;
}

}  // namespace

Certificate epsilon_type11_global(const SurfaceType& s) {
  Certificate cert;
  cert.kind = CertificateKind::Exact;
  cert.value = BoundValue::from_rational(1);
  cert.theorem_tag = "type11-global";
  cert.witness = fiber_a_over_mu_witness(s);
  cert.trace = type11_case_trace(s);
  return cert;
}

Certificate epsilon_type11_at_point(const SurfaceType& s, const PointSpec& p) {
  validate_point(s, p);

  if (s.is_odd_type()) {
    Certificate cert;
    cert.kind = CertificateKind::Exact;
    cert.value = BoundValue::from_rational(1);
    cert.theorem_tag = "type11-at-point-odd";
    cert.witness = Witness{CurveCandidate{{0, 1}, {1}}, p};
    cert.trace = {"odd type: the vertical fibre B = (0,1) passes through every x "
                  "with LC/1 = 1, and the global bound gives eps(L,x) >= 1"};
    return cert;
  }

  const bool on_max_singular =
      p.position() == PointSpec::Position::SingularFiber &&
      p.fiber_multiplicity() == s.mu();
  if (on_max_singular || p.position() == PointSpec::Position::Arbitrary) {
    // The reduced multiplicity-mu fibre (1,0) passes through x (or through
    // the minimising position) with LC = 1.
    Certificate cert = epsilon_type11_global(s);
    cert.trace.push_back("position " + p.to_string() +
                         ": witness fibre (1,0) passes through x, eps(L,x) = 1");
    return cert;
  }

  if (s.id() == 2 && p.position() == PointSpec::Position::VeryGeneral) {
    Certificate cert;
    cert.kind = CertificateKind::LowerBound;
    cert.value = BoundValue::from_rational(Rational(4, 3));
    cert.theorem_tag = "type2-very-general";
    cert.trace = type2_very_general_trace();
    return cert;
  }

  return lower_one_fallback(s, p);
}

Certificate epsilon_type1_exact(DivisorClass L) {
  if (!is_ample(L))
    throw std::invalid_argument("epsilon_type1_exact: L must be ample");
  const std::int64_t a = L.a, b = L.b;
  const std::int64_t value = std::min(a, b);

  Certificate cert;
  cert.kind = CertificateKind::Exact;
  cert.value = BoundValue::from_rational(value);
  cert.theorem_tag = "type1-exact";
  if (a <= b) {
    // The vertical fibre works at an arbitrary point; prefer it on ties.
    cert.witness = Witness{CurveCandidate{{0, 1}, {1}}, PointSpec::arbitrary()};
  } else {
    cert.witness =
        Witness{CurveCandidate{{1, 0}, {1}}, PointSpec::on_singular_fiber(2)};
  }
  cert.trace = {
      "type 1, L=(a,b)=(" + std::to_string(a) + "," + std::to_string(b) +
          "); LC/m = (a*beta + b*alpha)/m over the cases:",
      "C = B = (0,1), x arbitrary: LC/m = a",
      "C = A/2 = (1,0), x on a singular fibre A/2: LC/m = b",
      "C = A = (2,0), x on a general fibre A: LC/m = 2b",
      "C mixed, x on a singular fibre A/2: alpha >= m, beta >= m, LC/m >= a + b",
      "C mixed, x on a general fibre A: alpha >= m, 2*beta >= m, LC/m >= a/2 + b",
      "minimum over the cases = min{a,b} = " + std::to_string(value),
  };
  return cert;
}

Certificate epsilon_lower_types2to7(const SurfaceType& s, DivisorClass L) {
  if (!is_ample(L))
    throw std::invalid_argument("epsilon_lower_types2to7: L must be ample");
  const std::int64_t value = std::min(L.a, L.b);
  DivisorClass nef_part{L.a - value, L.b - value};

  Certificate cert;
  cert.kind = CertificateKind::LowerBound;
  cert.value = BoundValue::from_rational(value);
  cert.theorem_tag = "types2to7-lower";
  cert.trace = {
      "decompose L = " + L.to_string() + " = " + std::to_string(value) +
          "*M + N with M = (1,1) and N = " + nef_part.to_string() + " nef",
      "eps(L,x) >= " + std::to_string(value) + "*eps(M,x) + eps(N,x) >= " +
          std::to_string(value) + "*eps(M,x)",
      "type-(1,1) global value on type " + std::to_string(s.id()) +
          ": eps(M) = 1, hence eps(L) >= min{a,b} = " + std::to_string(value),
  };
  return cert;
}

Certificate upper_bound_multipoint(DivisorClass L, std::int64_t r) {
  if (!is_ample(L))
    throw std::invalid_argument("upper_bound_multipoint: L must be ample");
  if (r < 1) throw std::invalid_argument("upper_bound_multipoint: r must be >= 1");
  Rational radicand(self_intersection(L), r);

  Certificate cert;
  cert.kind = CertificateKind::UpperBound;
  cert.value = BoundValue::from_radicand(radicand);
  cert.theorem_tag = "upper-sqrt-L2-over-r";
  cert.trace = {"eps(L," + std::to_string(r) + ") <= sqrt(L^2/" + std::to_string(r) +
                ") = sqrt(" + radicand.to_string() + ") on any smooth projective surface"};
  return cert;
}

std::vector<Certificate> best_known(const SurfaceType& s, DivisorClass L,
                                    std::optional<PointSpec> p,
                                    std::optional<std::int64_t> r) {
  if (p.has_value() == r.has_value())
    throw std::invalid_argument("best_known: give exactly one of point or r");
  if (!is_ample(L)) throw std::invalid_argument("best_known: L must be ample");

  std::vector<Certificate> certs;
  if (p) {
    validate_point(s, *p);
    if (L.a == 1 && L.b == 1) certs.push_back(epsilon_type11_at_point(s, *p));
    if (s.id() == 1 && !(L.a == 1 && L.b == 1)) {
      Certificate exact = epsilon_type1_exact(L);
      const bool witnessed_at_p =
          L.a <= L.b /* vertical fibre through every point */ ||
          *p == PointSpec::arbitrary() || *p == PointSpec::on_singular_fiber(2);
      if (witnessed_at_p) {
        certs.push_back(std::move(exact));
      } else {
        exact.kind = CertificateKind::LowerBound;
        exact.witness.reset();
        exact.trace.push_back("global exact value used as a lower bound at " +
                              p->to_string());
        certs.push_back(std::move(exact));
      }
    }
    if (s.id() >= 2) certs.push_back(epsilon_lower_types2to7(s, L));
    certs.push_back(upper_bound_multipoint(L, 1));
  } else {
    if (*r < 2) throw std::invalid_argument("best_known: multi-point needs r >= 2");
    certs.push_back(hr_lower_bound(s, L, *r));
    certs.push_back(upper_bound_multipoint(L, *r));
  }

  // Drop lower bounds subsumed by an exact value.
  auto exact_it = std::find_if(certs.begin(), certs.end(), [](const Certificate& c) {
    return c.kind == CertificateKind::Exact;
  });
  if (exact_it != certs.end()) {
    std::erase_if(certs, [](const Certificate& c) {
      return c.kind == CertificateKind::LowerBound;
    });
  }

  std::stable_sort(certs.begin(), certs.end(),
                   [](const Certificate& x, const Certificate& y) {
                     if (x.kind != y.kind) return x.kind < y.kind;
                     return x.value < y.value;
                   });
  if (certs.empty()) throw std::logic_error("best_known: no theorem applies");
  return certs;
}

}  // namespace seshadri
