#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "seshadri/engine.hpp"
#include "seshadri/harbourne_roe.hpp"

using namespace seshadri;

namespace {

bool trace_mentions(const Certificate& c, const std::string& needle) {
  return std::any_of(c.trace.begin(), c.trace.end(), [&](const std::string& line) {
    return line.find(needle) != std::string::npos;
  });
}

// every Exact certificate must be backed by a feasible witness achieving it
void check_witness(const SurfaceType& s, DivisorClass L, const Certificate& cert) {
  REQUIRE(cert.kind == CertificateKind::Exact);
  REQUIRE(cert.witness.has_value());
  const Witness& w = *cert.witness;
  std::vector<PointSpec> pts{w.point};
  CHECK(is_feasible(s, L, w.curve, pts));
  Rational ratio(intersect(L, w.curve.cls), w.curve.mult_sum());
  CHECK(BoundValue::from_rational(ratio) == cert.value);
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("global constant of a (1,1) bundle is 1 on every type") {
  for (const SurfaceType& s : SurfaceType::all()) {
    Certificate cert = epsilon_type11_global(s);
    CHECK(cert.kind == CertificateKind::Exact);
    CHECK(cert.value == BoundValue::from_rational(1));
    check_witness(s, {1, 1}, cert);
    CHECK(cert.witness->curve.cls == DivisorClass{1, 0});
    CHECK(cert.witness->curve.mults == std::vector<std::int64_t>{1});
  }
  // types 4 and 6 need the multiplicity split with the Hodge subcase
  CHECK(trace_mentions(epsilon_type11_global(SurfaceType::by_id(4)), "sqrt(2-2/m)"));
  CHECK(trace_mentions(epsilon_type11_global(SurfaceType::by_id(6)), "sqrt(2-2/m)"));
  CHECK(!trace_mentions(epsilon_type11_global(SurfaceType::by_id(1)), "sqrt(2-2/m)"));
}

TEST_CASE("at-point constants for (1,1)") {
  // odd types: computed by the vertical fibre at every point
  for (int id : {1, 3, 5, 7}) {
    const SurfaceType& s = SurfaceType::by_id(id);
    std::vector<PointSpec> positions = {PointSpec::arbitrary(),
                                        PointSpec::very_general(),
                                        PointSpec::on_general_fiber()};
    for (std::int64_t m : s.singular_fiber_multiplicities())
      positions.push_back(PointSpec::on_singular_fiber(m));
    for (const PointSpec& p : positions) {
      Certificate cert = epsilon_type11_at_point(s, p);
      CHECK(cert.kind == CertificateKind::Exact);
      CHECK(cert.value == BoundValue::from_rational(1));
      CHECK(cert.witness->curve.cls == DivisorClass{0, 1});
      check_witness(s, {1, 1}, cert);
    }
  }

  // type 2 at a very general point: lower bound 4/3 with the four proof cases
  Certificate vg = epsilon_type11_at_point(SurfaceType::by_id(2),
                                           PointSpec::very_general());
  CHECK(vg.kind == CertificateKind::LowerBound);
  CHECK(vg.value == BoundValue::from_rational(Rational(4, 3)));
  CHECK(trace_mentions(vg, "m = 1"));
  CHECK(trace_mentions(vg, "(m-3)(m-6)"));
  CHECK(trace_mentions(vg, "m = 4"));
  CHECK(trace_mentions(vg, "m = 5"));

  // type 2 on a singular fibre: the reduced fibre gives the exact value 1
  Certificate sing = epsilon_type11_at_point(SurfaceType::by_id(2),
                                             PointSpec::on_singular_fiber(2));
  CHECK(sing.kind == CertificateKind::Exact);
  CHECK(sing.value == BoundValue::from_rational(1));
  check_witness(SurfaceType::by_id(2), {1, 1}, sing);

  // type 4: exact on the multiplicity-4 fibre, only >= 1 elsewhere
  CHECK(epsilon_type11_at_point(SurfaceType::by_id(4), PointSpec::on_singular_fiber(4))
            .kind == CertificateKind::Exact);
  Certificate t4s2 = epsilon_type11_at_point(SurfaceType::by_id(4),
                                             PointSpec::on_singular_fiber(2));
  CHECK(t4s2.kind == CertificateKind::LowerBound);
  CHECK(t4s2.value == BoundValue::from_rational(1));
  Certificate t4vg = epsilon_type11_at_point(SurfaceType::by_id(4),
                                             PointSpec::very_general());
  CHECK(t4vg.kind == CertificateKind::LowerBound);
  CHECK(t4vg.value == BoundValue::from_rational(1));
}

TEST_CASE("global (1,1) value equals the minimum of the at-point values") {
  for (const SurfaceType& s : SurfaceType::all()) {
    std::vector<PointSpec> positions = {PointSpec::arbitrary(),
                                        PointSpec::very_general(),
                                        PointSpec::on_general_fiber()};
    for (std::int64_t m : s.singular_fiber_multiplicities())
      positions.push_back(PointSpec::on_singular_fiber(m));
    BoundValue min_val = epsilon_type11_at_point(s, positions.front()).value;
    for (const PointSpec& p : positions)
      min_val = std::min(min_val, epsilon_type11_at_point(s, p).value);
    CHECK(min_val == epsilon_type11_global(s).value);
  }
}

TEST_CASE("type-1 exact value min{a,b}") {
  CHECK(epsilon_type1_exact({3, 2}).value == BoundValue::from_rational(2));
  CHECK(epsilon_type1_exact({1, 1}).value == BoundValue::from_rational(1));
  CHECK(epsilon_type1_exact({5, 9}).value == BoundValue::from_rational(5));
  CHECK_THROWS_AS(epsilon_type1_exact({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_type1_exact({3, -1}), std::invalid_argument);

  // ties prefer the vertical fibre, valid at an arbitrary point
  Certificate tie = epsilon_type1_exact({4, 4});
  CHECK(tie.witness->curve.cls == DivisorClass{0, 1});
  CHECK(tie.witness->point == PointSpec::arbitrary());
  Certificate b_min = epsilon_type1_exact({5, 2});
  CHECK(b_min.witness->curve.cls == DivisorClass{1, 0});
  CHECK(b_min.witness->point == PointSpec::on_singular_fiber(2));

  // the five proof cases appear in the trace
  Certificate cert = epsilon_type1_exact({3, 2});
  CHECK(trace_mentions(cert, "LC/m = a"));
  CHECK(trace_mentions(cert, "LC/m = b"));
  CHECK(trace_mentions(cert, "LC/m = 2b"));
  CHECK(trace_mentions(cert, "a + b"));
  CHECK(trace_mentions(cert, "a/2 + b"));

  for (std::int64_t a = 1; a <= 8; ++a)
    for (std::int64_t b = 1; b <= 8; ++b) {
      Certificate c = epsilon_type1_exact({a, b});
      CHECK(c.value == BoundValue::from_rational(std::min(a, b)));
      check_witness(SurfaceType::by_id(1), {a, b}, c);
      // always submaximal: min{a,b}^2 < 2ab = L^2
      CHECK(c.value.radicand() < Rational(2 * a * b));
      // the exact value meets the generic decomposition bound
      CHECK(c.value ==
            epsilon_lower_types2to7(SurfaceType::by_id(1), {a, b}).value);
    }
}

TEST_CASE("types 2..7 lower bound min{a,b}") {
  CHECK(epsilon_lower_types2to7(SurfaceType::by_id(4), {3, 5}).value ==
        BoundValue::from_rational(3));
  CHECK(epsilon_lower_types2to7(SurfaceType::by_id(2), {1, 1}).value ==
        BoundValue::from_rational(1));
  CHECK(epsilon_lower_types2to7(SurfaceType::by_id(6), {7, 2}).value ==
        BoundValue::from_rational(2));
  CHECK(epsilon_lower_types2to7(SurfaceType::by_id(3), {3, 5}).kind ==
        CertificateKind::LowerBound);
  CHECK_THROWS_AS(epsilon_lower_types2to7(SurfaceType::by_id(2), {0, 1}),
                  std::invalid_argument);
  CHECK(trace_mentions(epsilon_lower_types2to7(SurfaceType::by_id(4), {3, 5}),
                       "M = (1,1)"));
}

TEST_CASE("multi-point upper bound") {
  CHECK(upper_bound_multipoint({1, 1}, 1).value == BoundValue::from_radicand(2));
  CHECK(upper_bound_multipoint({1, 1}, 2).value == BoundValue::from_rational(1));
  CHECK(upper_bound_multipoint({2, 3}, 4).value == BoundValue::from_radicand(3));
  CHECK(upper_bound_multipoint({2, 3}, 4).kind == CertificateKind::UpperBound);
  CHECK_THROWS_AS(upper_bound_multipoint({1, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(upper_bound_multipoint({-1, 1}, 2), std::invalid_argument);
}

TEST_CASE("best_known dispatcher") {
  // type 1, (4,4), arbitrary point: exact 4 and upper sqrt(32)
  auto certs = best_known(SurfaceType::by_id(1), {4, 4}, PointSpec::arbitrary(),
                          std::nullopt);
  REQUIRE(certs.size() == 2);
  CHECK(certs[0].kind == CertificateKind::Exact);
  CHECK(certs[0].value == BoundValue::from_rational(4));
  CHECK(certs[1].kind == CertificateKind::UpperBound);
  CHECK(certs[1].value == BoundValue::from_radicand(32));

  // type 2, (1,1), r = 2: lower sqrt(15/16), upper 1
  auto multi = best_known(SurfaceType::by_id(2), {1, 1}, std::nullopt, 2);
  REQUIRE(multi.size() == 2);
  CHECK(multi[0].kind == CertificateKind::LowerBound);
  CHECK(multi[0].value == BoundValue::from_radicand(Rational(15, 16)));
  CHECK(multi[1].kind == CertificateKind::UpperBound);
  CHECK(multi[1].value == BoundValue::from_rational(1));

  // type 3, (1,1), very general: exact 1 (odd-type corollary), upper sqrt(2)
  auto odd = best_known(SurfaceType::by_id(3), {1, 1}, PointSpec::very_general(),
                        std::nullopt);
  REQUIRE(odd.size() == 2);
  CHECK(odd[0].kind == CertificateKind::Exact);
  CHECK(odd[0].value == BoundValue::from_rational(1));
  CHECK(odd[1].value == BoundValue::from_radicand(2));

  // type 2, (1,1), very general: both lower bounds survive (no exact value)
  auto t2vg = best_known(SurfaceType::by_id(2), {1, 1}, PointSpec::very_general(),
                         std::nullopt);
  bool has_43 = std::any_of(t2vg.begin(), t2vg.end(), [](const Certificate& c) {
    return c.value == BoundValue::from_rational(Rational(4, 3));
  });
  CHECK(has_43);

  CHECK_THROWS_AS(best_known(SurfaceType::by_id(1), {1, 1}, std::nullopt,
                             std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(best_known(SurfaceType::by_id(1), {1, 1},
                             PointSpec::arbitrary(), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(best_known(SurfaceType::by_id(1), {1, 1}, std::nullopt, 1),
                  std::invalid_argument);
}

TEST_CASE("lower bounds never exceed upper bounds") {
  for (const SurfaceType& s : SurfaceType::all()) {
    std::vector<PointSpec> positions = {PointSpec::arbitrary(),
                                        PointSpec::very_general(),
                                        PointSpec::on_general_fiber()};
    for (std::int64_t m : s.singular_fiber_multiplicities())
      positions.push_back(PointSpec::on_singular_fiber(m));
    for (std::int64_t a = 1; a <= 8; ++a)
      for (std::int64_t b = 1; b <= 8; ++b) {
        std::vector<std::vector<Certificate>> batches;
        for (const PointSpec& p : positions)
          batches.push_back(best_known(s, {a, b}, p, std::nullopt));
        for (std::int64_t r = 2; r <= 8; ++r)
          batches.push_back(best_known(s, {a, b}, std::nullopt, r));
        for (const auto& certs : batches) {
          for (const Certificate& lo : certs) {
            if (lo.kind == CertificateKind::UpperBound) continue;
            for (const Certificate& hi : certs) {
              if (hi.kind != CertificateKind::UpperBound) continue;
              CHECK(lo.value <= hi.value);
            }
          }
        }
      }
  }
}

}  // TEST_SUITE
