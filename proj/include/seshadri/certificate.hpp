#ifndef SESHADRI_CERTIFICATE_HPP
#define SESHADRI_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "seshadri/bound.hpp"
#include "seshadri/constraints.hpp"
#include "seshadri/point.hpp"

namespace seshadri {

enum class CertificateKind { Exact, LowerBound, UpperBound };

std::string to_string(CertificateKind kind);

// Curve and point position achieving an exact value.
struct Witness {
  CurveCandidate curve;
  PointSpec point;
};

// A theorem-tagged bound. Exact certificates carry a witness achieving the
// value; the trace lists the case analysis that was actually executed, one
// line per case.
struct Certificate {
  CertificateKind kind;
  BoundValue value;
  std::string theorem_tag;
  std::optional<Witness> witness;
  std::vector<std::string> trace;
};

}  // namespace seshadri

#endif  // SESHADRI_CERTIFICATE_HPP
