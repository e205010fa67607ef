#ifndef SESHADRI_ENGINE_HPP
#define SESHADRI_ENGINE_HPP

#include <optional>
#include <vector>

#include "seshadri/certificate.hpp"
#include "seshadri/surface.hpp"

namespace seshadri {

// Global Seshadri constant of a bundle of type (1,1): equal to 1 on every
// hyperelliptic surface type, attained by the reduced fibre A/mu at one of
// its points. The trace replays the case analysis, including the
// genus-plus-Hodge subcase needed for types 4 and 6.
Certificate epsilon_type11_global(const SurfaceType& s);

// Seshadri constant of a (1,1) bundle at a point in the given position. Odd
// types: exactly 1 everywhere (computed by the vertical fibre B). Type 2 at
// a very general point: lower bound 4/3. Remaining even-type positions get
// the best certificate the implemented theorems give (at least lower bound 1).
Certificate epsilon_type11_at_point(const SurfaceType& s, const PointSpec& p);

// Exact global constant min{a,b} for an ample (a,b) on a type-1 surface.
// Throws on non-ample input.
Certificate epsilon_type1_exact(DivisorClass L);

// Lower bound min{a,b} for an ample (a,b) on types 2..7, via the
// decomposition L = min{a,b} * (1,1) + nef. Throws on non-ample input.
// (Evaluates the same formula for type 1, where the bound is sharp.)
Certificate epsilon_lower_types2to7(const SurfaceType& s, DivisorClass L);

// eps(L, r) <= sqrt(L^2 / r) at r very general points, r >= 1.
Certificate upper_bound_multipoint(DivisorClass L, std::int64_t r);

// All certificates the implemented theorems yield for the query: exactly one
// of p (single point) or r (>= 2 very general points) must be given. Lower
// bounds subsumed by an exact value are dropped; the result is sorted with
// exact values first, then lower, then upper bounds.
std::vector<Certificate> best_known(const SurfaceType& s, DivisorClass L,
                                    std::optional<PointSpec> p,
                                    std::optional<std::int64_t> r);

}  // namespace seshadri

#endif  // SESHADRI_ENGINE_HPP
