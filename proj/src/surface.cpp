#include "seshadri/surface.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace seshadri {

SurfaceType::SurfaceType(int id, std::int64_t group_order,
                         std::vector<std::int64_t> multiplicities)
    : id_(id),
      group_order_(group_order),
      singular_fiber_multiplicities_(std::move(multiplicities)) {
  mu_ = 1;
  for (std::int64_t m : singular_fiber_multiplicities_) mu_ = std::lcm(mu_, m);
  if (group_order_ % mu_ != 0)
    throw std::logic_error("SurfaceType: gamma must be divisible by mu");
  b_fiber_coeff_ = group_order_ / mu_;
  for (std::int64_t m : singular_fiber_multiplicities_)
    admissible_horizontal_n_.push_back(mu_ / m);
  admissible_horizontal_n_.push_back(mu_);
  std::sort(admissible_horizontal_n_.begin(), admissible_horizontal_n_.end());
  admissible_horizontal_n_.erase(
      std::unique(admissible_horizontal_n_.begin(), admissible_horizontal_n_.end()),
      admissible_horizontal_n_.end());
}

namespace {

const std::array<SurfaceType, 7>& table() {
  // Serrano's classification: (gamma; m_1,...,m_s) per type.
  static const std::array<SurfaceType, 7> kTable = {
      SurfaceType(1, 2, {2, 2, 2, 2}),
      SurfaceType(2, 4, {2, 2, 2, 2}),
      SurfaceType(3, 4, {2, 4, 4}),
      SurfaceType(4, 8, {2, 4, 4}),
      SurfaceType(5, 3, {3, 3, 3}),
      SurfaceType(6, 9, {3, 3, 3}),
      SurfaceType(7, 6, {2, 3, 6}),
  };
  return kTable;
}

}  // namespace

const SurfaceType& SurfaceType::by_id(int id) {
  if (id < 1 || id > 7)
    throw std::invalid_argument("SurfaceType: id must be in 1..7, got " +
                                std::to_string(id));
  return table()[static_cast<std::size_t>(id - 1)];
}

std::span<const SurfaceType> SurfaceType::all() { return table(); }

std::string SurfaceType::basis_label() const {
  std::string out = "A/" + std::to_string(mu_) + ", B";
  if (b_fiber_coeff_ > 1) out += "/" + std::to_string(b_fiber_coeff_);
  return out;
}

void validate_point(const SurfaceType& s, const PointSpec& p) {
  if (p.position() != PointSpec::Position::SingularFiber) return;
  const auto& mults = s.singular_fiber_multiplicities();
  if (std::find(mults.begin(), mults.end(), p.fiber_multiplicity()) == mults.end())
    throw std::invalid_argument("type " + std::to_string(s.id()) +
                                " has no singular fibre of multiplicity " +
                                std::to_string(p.fiber_multiplicity()));
}

bool is_effective_vertical(const SurfaceType& s, std::int64_t b) {
  if (b < 0)
    throw std::invalid_argument("is_effective_vertical: b must be nonnegative");
  return (b * s.mu()) % s.group_order() == 0;
}

std::vector<DivisorClass> fiber_classes_through(const SurfaceType& s,
                                                const PointSpec& p) {
  validate_point(s, p);
  std::vector<DivisorClass> out;
  out.push_back({0, s.b_fiber_coeff()});
  switch (p.position()) {
    case PointSpec::Position::SingularFiber:
      out.push_back({s.mu() / p.fiber_multiplicity(), 0});
      break;
    case PointSpec::Position::GeneralFiber:
    case PointSpec::Position::VeryGeneral:
      out.push_back({s.mu(), 0});
      break;
    case PointSpec::Position::Arbitrary:
      for (std::int64_t n : s.admissible_horizontal_n()) out.push_back({n, 0});
      break;
  }
  return out;
}

}  // namespace seshadri
