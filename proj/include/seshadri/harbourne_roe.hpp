#ifndef SESHADRI_HARBOURNE_ROE_HPP
#define SESHADRI_HARBOURNE_ROE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seshadri/certificate.hpp"
#include "seshadri/surface.hpp"

namespace seshadri {

// The Harbourne-Roe criterion asks for degree floors on curves through r
// general points with two families of multiplicity vectors: m^[r] (Uniform,
// 1 <= m < mu) and (m^[r-1], m+k) (Perturbed, 1 <= m < mu/(r-1), k != 0,
// k^2 < (r/(r-1)) min{m, m+k}). If every floor holds, then
// eps(L, r) >= sqrt(L^2/r) * sqrt(1 - 1/(r*mu)).
enum class TripleKind { Uniform, Perturbed };

struct AdmissibleTriple {
  std::int64_t r;
  std::int64_t m;
  std::int64_t k;  // 0 for Uniform
  TripleKind kind;

  friend bool operator==(const AdmissibleTriple&, const AdmissibleTriple&) = default;
};

// All admissible triples for (r, mu), Uniform first by m, then Perturbed by
// (m, |k|, sign) — the order the k-columns are conventionally listed in
// (1, -1, 2, -2, ...).
std::vector<AdmissibleTriple> enumerate_triples(std::int64_t r, std::int64_t mu);

// The C^2 floor available for an irreducible curve computing the relevant
// least degree:
//   Uniform  m = 1: 2r+2            (from h^0 = chi = C^2/2 and dim |C| >= r)
//   Uniform  m >= 2: r m^2 - m + 2   (multi-point Xu floor)
//   Perturbed m = 1 (k = 1): r+3     (Xu floor for (1^[r-1], 2))
//   Perturbed m > 1: (r-1)m^2 + (m+k)^2 - m + 2
std::int64_t c2_floor_for(const AdmissibleTriple& t);

// Exact value of 8r^2k^2 - 8r^2m + 16r^2 + m^2r^2 + 2mrk - 8rk^2 + k^2,
// which equals 8r^2 * [(r-1)m^2 + (m+k)^2 - m + 2] - (mr+k)^2 (8r-1) for all
// integers: the mu = 8 Perturbed check in cleared-denominator form.
std::int64_t polynomial_check(std::int64_t r, std::int64_t m, std::int64_t k);

struct ConditionCheck {
  bool passed;
  std::int64_t c2_floor;
  // Required value of sqrt(C^2): the floor passes iff c2_floor >= required^2.
  BoundValue required;
  std::vector<std::string> trace;
};

// Verifies c2_floor >= target^2 * (r - 1/mu) exactly, where target is m
// (Uniform) or (mr+k)/r (Perturbed). L2 only scales both sides (the Hodge
// step) and is recorded in the trace. For mu = 8 and Perturbed m > 1 the
// check also runs through the integer polynomial form.
ConditionCheck check_condition(const AdmissibleTriple& t, std::int64_t mu,
                               std::int64_t L2);

struct HrReport {
  std::int64_t r = 0;
  std::int64_t mu = 0;
  std::int64_t L2 = 0;

  struct Entry {
    AdmissibleTriple triple;
    std::int64_t c2_floor;
    BoundValue required;
    bool passed;
  };
  std::vector<Entry> triples_checked;
  std::optional<BoundValue> bound;  // emitted only if every triple passed

  bool all_passed() const;
  const Entry* first_failure() const;
  std::vector<std::string> trace_lines() const;
};

// Runs every admissible triple for (r, mu) against its floor; the bound
// sqrt(L^2/r) * sqrt(1 - 1/(r*mu)) is filled in iff all checks pass.
HrReport hr_check(const SurfaceType& s, DivisorClass L, std::int64_t r,
                  std::int64_t mu = 8);

class HrCheckError : public std::runtime_error {
 public:
  HrCheckError(std::string message, HrReport report, AdmissibleTriple failing)
      : std::runtime_error(std::move(message)),
        report(std::move(report)),
        failing(failing) {}

  HrReport report;
  AdmissibleTriple failing;
};

// Certificate form of hr_check; throws HrCheckError naming the failing
// triple if some check does not hold (never happens for mu = 8).
Certificate hr_lower_bound(const SurfaceType& s, DivisorClass L, std::int64_t r,
                           std::int64_t mu = 8);

}  // namespace seshadri

#endif  // SESHADRI_HARBOURNE_ROE_HPP
