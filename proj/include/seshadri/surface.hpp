#ifndef SESHADRI_SURFACE_HPP
#define SESHADRI_SURFACE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seshadri/point.hpp"

namespace seshadri {

// A hyperelliptic (bielliptic) surface S = (A x B)/G comes in seven types,
// classified by the group G. Num(S) has rank 2 with basis
//
//     e1 = A/mu,   e2 = (mu/gamma) B,
//
// where gamma = |G| and mu = lcm of the multiple-fibre multiplicities of the
// horizontal fibration. We write divisor classes as integer pairs (a, b) in
// this basis throughout. From A^2 = B^2 = 0 and A.B = gamma one gets
// e1^2 = e2^2 = 0 and e1.e2 = 1, so the pairing is (a,b).(a',b') = ab' + a'b.
// The general horizontal fibre is A = (mu, 0), a multiple fibre of
// multiplicity m has reduced class (mu/m, 0), and the vertical fibre through
// any point is B = (0, gamma/mu).

struct DivisorClass {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

  friend DivisorClass operator+(DivisorClass x, DivisorClass y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend DivisorClass operator-(DivisorClass x, DivisorClass y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend DivisorClass operator*(std::int64_t n, DivisorClass x) {
    return {n * x.a, n * x.b};
  }

  std::string to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
};

// Intersection number in the basis above: ab' + a'b.
inline std::int64_t intersect(DivisorClass c1, DivisorClass c2) {
  return c1.a * c2.b + c2.a * c1.b;
}

// (a,b) is ample iff a > 0 and b > 0.
inline bool is_ample(DivisorClass c) { return c.a > 0 && c.b > 0; }

// chi(a,b) = ab; for ample classes also h^0 = chi = ab.
inline std::int64_t euler_char(DivisorClass c) { return c.a * c.b; }

inline std::int64_t self_intersection(DivisorClass c) { return 2 * c.a * c.b; }

class SurfaceType {
 public:
  // The seven types, id 1..7.
  static const SurfaceType& by_id(int id);
  static std::span<const SurfaceType> all();

  int id() const { return id_; }
  std::int64_t group_order() const { return group_order_; }      // gamma
  std::int64_t mu() const { return mu_; }                        // lcm of multiplicities
  std::int64_t b_fiber_coeff() const { return b_fiber_coeff_; }  // gamma/mu
  const std::vector<std::int64_t>& singular_fiber_multiplicities() const {
    return singular_fiber_multiplicities_;
  }
  // The n for which (n,0) is the class of a reduced horizontal fibre:
  // mu/m for each multiple-fibre multiplicity m, plus mu for a general fibre.
  const std::vector<std::int64_t>& admissible_horizontal_n() const {
    return admissible_horizontal_n_;
  }

  bool is_odd_type() const { return id_ % 2 == 1; }

  // Basis of Num(S) as displayed in Serrano's table, e.g. "A/4, B/2".
  std::string basis_label() const;

  SurfaceType(int id, std::int64_t group_order,
              std::vector<std::int64_t> multiplicities);

 private:
  int id_;
  std::int64_t group_order_;
  std::int64_t mu_;
  std::int64_t b_fiber_coeff_;
  std::vector<std::int64_t> singular_fiber_multiplicities_;
  std::vector<std::int64_t> admissible_horizontal_n_;
};

// Throws if p names a singular-fibre multiplicity the type does not have.
void validate_point(const SurfaceType& s, const PointSpec& p);

// A vertical class (0, b), b >= 0, is effective iff b * mu / gamma is an
// integer. Negative b is rejected as an invalid query.
bool is_effective_vertical(const SurfaceType& s, std::int64_t b);

// Classes of the fibres passing through a point at the given position: the
// vertical fibre (0, gamma/mu) always, plus the reduced horizontal fibre
// that can contain the point. For an Arbitrary point every horizontal
// position is possible and the full admissible set is returned.
std::vector<DivisorClass> fiber_classes_through(const SurfaceType& s,
                                                const PointSpec& p);

}  // namespace seshadri

#endif  // SESHADRI_SURFACE_HPP
