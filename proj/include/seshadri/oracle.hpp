#ifndef SESHADRI_ORACLE_HPP
#define SESHADRI_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seshadri/certificate.hpp"
#include "seshadri/constraints.hpp"
#include "seshadri/surface.hpp"

namespace seshadri {

// Finite enumeration region for the brute-force sweep. ratio_cap, when set,
// restricts reporting to candidates with ratio below the cap. max_points
// bounds the combinatorial blowup of multiplicity vectors.
struct SearchWindow {
  std::int64_t max_alpha = 8;
  std::int64_t max_beta = 8;
  std::int64_t max_mult = 6;
  std::optional<BoundValue> ratio_cap;
  std::int64_t max_points = 3;
};

struct RatedCandidate {
  CurveCandidate curve;
  Rational ratio;  // LC / sum of multiplicities
};

// Result of sweeping a claimed bound over a window. Empty violations mean
// the claim is consistent within the window — the window is reported because
// this is a falsification engine, not a proof.
struct OracleVerdict {
  BoundValue claimed;
  std::vector<RatedCandidate> violations;  // feasible with ratio < claimed
  std::vector<RatedCandidate> achievers;   // feasible with ratio = claimed
  SearchWindow window;
  bool applicable = true;  // false when the certificate kind is not sweepable
  std::optional<bool> witness_confirmed;
};

// Enumerates every class (alpha, beta) in the window with every multiplicity
// vector in {1..max_mult}^r, filters through is_feasible, and classifies the
// exact ratio LC / sum(m_i) against the claim. The (alpha, beta) rectangle is
// processed in parallel strips; the verdict is canonically sorted and does
// not depend on the partitioning. threads = 0 picks the hardware default.
OracleVerdict sweep(const SurfaceType& s, DivisorClass L,
                    std::span<const PointSpec> points, const SearchWindow& w,
                    const BoundValue& claimed, bool use_xu = true,
                    unsigned threads = 0,
                    PivotMode pivot = PivotMode::MaxMultiplicity);

struct ReplayResult {
  std::string case_id;
  bool established;  // the case's finite check came out inconsistent as claimed
  std::vector<std::string> trace;
};

// Replays the finite case analyses behind the type-2 very-general 4/3 bound:
// "type2-m1", "type2-m4", "type2-m5", "type2-generic". Throws on any other id.
ReplayResult replay_contradiction(std::string_view case_id);

// Sweeps the certificate's value; for Exact certificates additionally checks
// that the achiever set is nonempty and contains the certificate's witness.
// Upper bounds are not sweep targets and come back marked not applicable.
OracleVerdict verify_certificate(const Certificate& cert, const SurfaceType& s,
                                 DivisorClass L, std::span<const PointSpec> points,
                                 const SearchWindow& w, bool use_xu = true);

}  // namespace seshadri

#endif  // SESHADRI_ORACLE_HPP
