#ifndef SESHADRI_POINT_HPP
#define SESHADRI_POINT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seshadri {

// Position of a point relative to the two elliptic fibrations of a
// hyperelliptic surface. The horizontal fibration has finitely many multiple
// fibres; a point either sits on one of them (with its multiplicity), on an
// ordinary fibre, or is very general (outside every countable special locus).
// Arbitrary stands for "minimised over all concrete positions" and is what
// global bounds are checked against.
class PointSpec {
 public:
  enum class Position { SingularFiber, GeneralFiber, VeryGeneral, Arbitrary };

  static PointSpec on_singular_fiber(std::int64_t multiplicity) {
    if (multiplicity < 2)
      throw std::invalid_argument("PointSpec: singular fibre multiplicity must be >= 2");
    return PointSpec(Position::SingularFiber, multiplicity);
  }
  static PointSpec on_general_fiber() { return PointSpec(Position::GeneralFiber, 0); }
  static PointSpec very_general() { return PointSpec(Position::VeryGeneral, 0); }
  static PointSpec arbitrary() { return PointSpec(Position::Arbitrary, 0); }

  Position position() const { return position_; }

  std::int64_t fiber_multiplicity() const {
    if (position_ != Position::SingularFiber)
      throw std::logic_error("PointSpec: no fibre multiplicity for this position");
    return multiplicity_;
  }

  friend bool operator==(const PointSpec& x, const PointSpec& y) {
    return x.position_ == y.position_ && x.multiplicity_ == y.multiplicity_;
  }

  std::string to_string() const {
    switch (position_) {
      case Position::SingularFiber:
        return "singular-fiber:" + std::to_string(multiplicity_);
      case Position::GeneralFiber:
        return "general-fiber";
      case Position::VeryGeneral:
        return "very-general";
      case Position::Arbitrary:
        return "arbitrary";
    }
    return "?";
  }

 private:
  PointSpec(Position position, std::int64_t multiplicity)
      : position_(position), multiplicity_(multiplicity) {}

  Position position_;
  std::int64_t multiplicity_;
};

}  // namespace seshadri

#endif  // SESHADRI_POINT_HPP
