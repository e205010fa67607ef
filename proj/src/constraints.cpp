#include "seshadri/constraints.hpp"

#include <algorithm>
#include <stdexcept>

namespace seshadri {

std::int64_t genus_floor(std::span<const std::int64_t> mults) {
  std::int64_t floor = 0;
  for (std::int64_t m : mults) {
    if (m < 1) throw std::invalid_argument("genus_floor: multiplicities must be >= 1");
    floor += m * (m - 1);
  }
  return floor;
}

std::int64_t xu_floor(std::int64_t m, std::int64_t gon) {
  if (m < 2) throw std::invalid_argument("xu_floor: requires m >= 2");
  if (gon < 2) throw std::invalid_argument("xu_floor: gonality floor must be >= 2");
  return m * (m - 1) + gon;
}

std::int64_t xu_floor_multi(std::span<const std::int64_t> mults, std::int64_t gon,
                            PivotMode pivot) {
  if (gon < 2)
    throw std::invalid_argument("xu_floor_multi: gonality floor must be >= 2");
  std::int64_t sum_sq = 0;
  std::int64_t max_mult = 0;
  std::int64_t min_ge2 = 0;
  for (std::int64_t m : mults) {
    if (m < 1)
      throw std::invalid_argument("xu_floor_multi: multiplicities must be >= 1");
    sum_sq += m * m;
    max_mult = std::max(max_mult, m);
    if (m >= 2 && (min_ge2 == 0 || m < min_ge2)) min_ge2 = m;
  }
  if (max_mult < 2)
    throw std::invalid_argument("xu_floor_multi: requires a multiplicity >= 2");
  std::int64_t p = pivot == PivotMode::MaxMultiplicity ? max_mult : min_ge2;
  return sum_sq - p + gon;
}

BoundValue hodge_ratio_floor(DivisorClass L, std::int64_t c2_floor) {
  if (!is_ample(L)) throw std::invalid_argument("hodge_ratio_floor: L must be ample");
  if (c2_floor < 0)
    throw std::invalid_argument("hodge_ratio_floor: c2_floor must be nonnegative");
  return BoundValue::from_radicand(Rational(self_intersection(L) * c2_floor));
}

namespace {

// Reduced class (n, 0) of the horizontal fibre a point at this position can
// lie on. Feasibility at an Arbitrary point equals feasibility at some
// concrete position; for a mixed class the constraint n*beta >= m weakens as
// n grows, so the general fibre n = mu decides it.
std::int64_t horizontal_n(const SurfaceType& s, const PointSpec& p) {
  if (p.position() == PointSpec::Position::SingularFiber)
    return s.mu() / p.fiber_multiplicity();
  return s.mu();
}

}  // namespace

std::vector<BezoutConstraint> bezout_constraints(const SurfaceType& s,
                                                 const CurveCandidate& c,
                                                 std::span<const PointSpec> points) {
  if (c.mults.size() != points.size())
    throw std::invalid_argument("bezout_constraints: one multiplicity per point");
  std::vector<BezoutConstraint> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    validate_point(s, points[i]);
    out.push_back({{0, s.b_fiber_coeff()}, c.mults[i]});
    out.push_back({{horizontal_n(s, points[i]), 0}, c.mults[i]});
  }
  return out;
}

bool is_feasible(const SurfaceType& s, DivisorClass L, const CurveCandidate& c,
                 std::span<const PointSpec> points, bool use_xu, PivotMode pivot) {
  if (!is_ample(L)) throw std::invalid_argument("is_feasible: L must be ample");
  if (c.mults.size() != points.size())
    throw std::invalid_argument("is_feasible: one multiplicity per point");
  if (c.cls.a < 0 || c.cls.b < 0 || (c.cls.a == 0 && c.cls.b == 0))
    throw std::invalid_argument("is_feasible: candidate class must be nonzero with "
                                "nonnegative coordinates");
  for (std::int64_t m : c.mults)
    if (m < 1) throw std::invalid_argument("is_feasible: multiplicities must be >= 1");
  for (const PointSpec& p : points) validate_point(s, p);

  // Classes on the boundary of the effective cone are fibre classes: any
  // irreducible curve with a zero coordinate is a reduced fibre, smooth
  // elliptic, hence has multiplicity 1 at each of its points and meets at
  // most one of a set of pairwise-distinct-fibre points.
  if (c.cls.a == 0 || c.cls.b == 0) {
    if (points.size() != 1) return false;
    if (c.mults[0] != 1) return false;
    auto fibers = fiber_classes_through(s, points[0]);
    return std::find(fibers.begin(), fibers.end(), c.cls) != fibers.end();
  }

  for (const BezoutConstraint& bc : bezout_constraints(s, c, points))
    if (intersect(c.cls, bc.fiber) < bc.required) return false;

  const std::int64_t c2 = self_intersection(c.cls);
  if (c2 < genus_floor(c.mults)) return false;

  bool all_very_general =
      std::all_of(points.begin(), points.end(), [](const PointSpec& p) {
        return p.position() == PointSpec::Position::VeryGeneral;
      });
  std::int64_t max_mult = *std::max_element(c.mults.begin(), c.mults.end());
  if (use_xu && all_very_general && max_mult >= 2) {
    if (c2 < xu_floor_multi(c.mults, c.gonality_floor, pivot)) return false;
  }

  // Hodge index: automatic on a rank-2 lattice, kept as a stated filter.
  std::int64_t lc = intersect(L, c.cls);
  if (lc * lc < self_intersection(L) * c2) return false;

  return true;
}

}  // namespace seshadri
