#ifndef SESHADRI_CONSTRAINTS_HPP
#define SESHADRI_CONSTRAINTS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "seshadri/bound.hpp"
#include "seshadri/surface.hpp"

namespace seshadri {

// A hypothetical irreducible curve class with assigned point multiplicities,
// fed to the constraint filters below. gonality_floor is the lower bound fed
// to the Xu-type estimates; 2 is valid on every nonrational surface.
struct CurveCandidate {
  DivisorClass cls;
  std::vector<std::int64_t> mults;
  std::int64_t gonality_floor = 2;

  std::int64_t mult_sum() const {
    std::int64_t s = 0;
    for (std::int64_t m : mults) s += m;
    return s;
  }
};

// Which multiplicity the multi-point Xu floor subtracts. The lemma subtracts
// the multiplicity at the moving point, which must be >= 2; subtracting the
// maximum is the weakest (always-justified) instance and the default.
// MinMultiplicity subtracts the smallest multiplicity that is >= 2 instead.
enum class PivotMode { MaxMultiplicity, MinMultiplicity };

// Sum of m_i(m_i - 1): a lower bound for C^2, since the genus of the
// normalisation is at least 1 and K_S is numerically trivial.
std::int64_t genus_floor(std::span<const std::int64_t> mults);

// Xu-type floor m(m-1) + gon for a curve moving with a point of multiplicity
// m >= 2 at a very general point. Rejects m < 2.
std::int64_t xu_floor(std::int64_t m, std::int64_t gon = 2);

// Multi-point Xu floor (sum of m_i^2) - pivot + gon. Rejects inputs whose
// maximum multiplicity is < 2.
std::int64_t xu_floor_multi(std::span<const std::int64_t> mults,
                            std::int64_t gon = 2,
                            PivotMode pivot = PivotMode::MaxMultiplicity);

// sqrt(L^2 * c2_floor): by the Hodge index theorem, every irreducible C with
// C^2 >= c2_floor has LC at least this value.
BoundValue hodge_ratio_floor(DivisorClass L, std::int64_t c2_floor);

// One pair per fibre through one of the points: intersect(cls, fiber) must be
// at least `required` for the candidate to be Bezout-feasible. Distinct
// points are modelled as lying on pairwise distinct fibres, so each point
// contributes its own vertical and horizontal pair; an Arbitrary point
// contributes the weakest horizontal constraint (the general fibre).
struct BezoutConstraint {
  DivisorClass fiber;
  std::int64_t required;

  friend bool operator==(const BezoutConstraint&, const BezoutConstraint&) = default;
};

std::vector<BezoutConstraint> bezout_constraints(const SurfaceType& s,
                                                 const CurveCandidate& c,
                                                 std::span<const PointSpec> points);

// Conjunction of all filters an irreducible curve class through the given
// points must pass: fibre-class admissibility (classes with a zero coordinate
// must be genuine fibre classes through the points, met with multiplicity 1),
// the genus floor, the Xu floor (when use_xu and every point is very general
// with some multiplicity >= 2), the Bezout constraints, and the Hodge index
// inequality (LC)^2 >= L^2 C^2.
bool is_feasible(const SurfaceType& s, DivisorClass L, const CurveCandidate& c,
                 std::span<const PointSpec> points, bool use_xu = true,
                 PivotMode pivot = PivotMode::MaxMultiplicity);

}  // namespace seshadri

#endif  // SESHADRI_CONSTRAINTS_HPP
