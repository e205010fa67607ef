#include "seshadri/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace seshadri {

namespace {

bool next_mult_vector(std::vector<std::int64_t>& mults, std::int64_t max_mult) {
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (mults[i] < max_mult) {
      ++mults[i];
      std::fill(mults.begin(), mults.begin() + static_cast<std::ptrdiff_t>(i), 1);
      return true;
    }
  }
  return false;
}

struct StripResult {
  std::vector<RatedCandidate> violations;
  std::vector<RatedCandidate> achievers;
};

bool candidate_less(const RatedCandidate& x, const RatedCandidate& y) {
  if (x.ratio != y.ratio) return x.ratio < y.ratio;
  if (x.curve.cls != y.curve.cls) return x.curve.cls < y.curve.cls;
  return x.curve.mults < y.curve.mults;
}

}  // namespace

OracleVerdict sweep(const SurfaceType& s, DivisorClass L,
                    std::span<const PointSpec> points, const SearchWindow& w,
                    const BoundValue& claimed, bool use_xu, unsigned threads,
                    PivotMode pivot) {
  if (!is_ample(L)) throw std::invalid_argument("sweep: L must be ample");
  if (points.empty()) throw std::invalid_argument("sweep: need at least one point");
  if (w.max_alpha < 1 || w.max_beta < 1 || w.max_mult < 1)
    throw std::invalid_argument("sweep: window bounds must be >= 1");
  if (std::ssize(points) > w.max_points)
    throw std::invalid_argument("sweep: point count exceeds window.max_points; "
                                "raise it explicitly for larger sweeps");
  for (const PointSpec& p : points) validate_point(s, p);

  auto sweep_strip = [&](std::int64_t alpha) {
    StripResult res;
    for (std::int64_t beta = 0; beta <= w.max_beta; ++beta) {
      if (alpha == 0 && beta == 0) continue;
      std::vector<std::int64_t> mults(points.size(), 1);
      do {
        CurveCandidate cand{{alpha, beta}, mults};
        if (!is_feasible(s, L, cand, points, use_xu, pivot)) continue;
        Rational ratio(intersect(L, cand.cls), cand.mult_sum());
        BoundValue ratio_value = BoundValue::from_rational(ratio);
        if (w.ratio_cap && ratio_value >= *w.ratio_cap) continue;
        auto cmp = ratio_value <=> claimed;
        if (cmp < 0)
          res.violations.push_back({std::move(cand), ratio});
        else if (cmp == 0)
          res.achievers.push_back({std::move(cand), ratio});
      } while (next_mult_vector(mults, w.max_mult));
    }
    return res;
  };

  const std::size_t n_strips = static_cast<std::size_t>(w.max_alpha) + 1;
  unsigned n_threads = threads ? threads : std::thread::hardware_concurrency();
  n_threads = std::max(1u, std::min<unsigned>(n_threads,
                                              static_cast<unsigned>(n_strips)));

  // Disjoint alpha-strips, merged in strip order before the canonical sort,
  // so the verdict does not depend on the partitioning.
  std::vector<StripResult> results(n_strips);
  if (n_threads == 1) {
    for (std::size_t i = 0; i < n_strips; ++i)
      results[i] = sweep_strip(static_cast<std::int64_t>(i));
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < n_strips; i = next.fetch_add(1))
        results[i] = sweep_strip(static_cast<std::int64_t>(i));
    };
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  OracleVerdict verdict;
  verdict.claimed = claimed;
  verdict.window = w;
  for (StripResult& res : results) {
    verdict.violations.insert(verdict.violations.end(),
                              std::make_move_iterator(res.violations.begin()),
                              std::make_move_iterator(res.violations.end()));
    verdict.achievers.insert(verdict.achievers.end(),
                             std::make_move_iterator(res.achievers.begin()),
                             std::make_move_iterator(res.achievers.end()));
  }
  std::sort(verdict.violations.begin(), verdict.violations.end(), candidate_less);
  std::sort(verdict.achievers.begin(), verdict.achievers.end(), candidate_less);
  return verdict;
}

namespace {

std::int64_t max_c2_on_simplex(std::int64_t sum_cap) {
  // max of 2*alpha*beta over integers alpha, beta >= 0, alpha + beta <= sum_cap
  std::int64_t best = 0;
  for (std::int64_t a = 0; a <= sum_cap; ++a)
    for (std::int64_t b = 0; a + b <= sum_cap; ++b)
      best = std::max(best, 2 * a * b);
  return best;
}

ReplayResult replay_m_case(std::string case_id, std::int64_t m,
                           std::int64_t sum_cap, std::int64_t c2_needed) {
  ReplayResult res;
  res.case_id = std::move(case_id);
  res.trace.push_back("assume LC/" + std::to_string(m) + " < 4/3 for L=(1,1): "
                      "alpha + beta <= " + std::to_string(sum_cap));
  res.trace.push_back("Xu floor: C^2 = 2*alpha*beta >= m^2 - m + 2 = " +
                      std::to_string(c2_needed));
  std::int64_t best = max_c2_on_simplex(sum_cap);
  res.established = best < c2_needed;
  res.trace.push_back("max of 2*alpha*beta over alpha + beta <= " +
                      std::to_string(sum_cap) + " is " + std::to_string(best) +
                      (res.established ? " < " : " >= ") + std::to_string(c2_needed) +
                      (res.established ? ": inconsistent" : ": NOT inconsistent"));
  return res;
}

}  // namespace

ReplayResult replay_contradiction(std::string_view case_id) {
  const SurfaceType& type2 = SurfaceType::by_id(2);
  const DivisorClass L{1, 1};
  const PointSpec points[] = {PointSpec::very_general()};

  if (case_id == "type2-m1") {
    ReplayResult res;
    res.case_id = std::string(case_id);
    res.trace.push_back("assume LC/1 < 4/3 for L=(1,1): alpha + beta <= 1, so "
                        "C is (1,0) = A/2 or (0,1) = B/2");
    bool any_feasible = false;
    for (DivisorClass cls : {DivisorClass{1, 0}, DivisorClass{0, 1}}) {
      bool feasible = is_feasible(type2, L, CurveCandidate{cls, {1}}, points);
      any_feasible |= feasible;
      std::string why;
      if (feasible)
        why = ": feasible (unexpected)";
      else if (cls == DivisorClass{1, 0})
        why = ": excluded, A/2 misses a very general point";
      else
        why = ": excluded, B/2 is not effective";
      res.trace.push_back(cls.to_string() + why);
    }
    res.established = !any_feasible;
    res.trace.push_back(res.established ? "no candidate survives: inconsistent"
                                        : "a candidate survives: NOT inconsistent");
    return res;
  }
  if (case_id == "type2-m4")
    return replay_m_case(std::string(case_id), 4, 5, 14);
  if (case_id == "type2-m5")
    return replay_m_case(std::string(case_id), 5, 6, 22);
  if (case_id == "type2-generic") {
    ReplayResult res;
    res.case_id = std::string(case_id);
    res.trace.push_back("m >= 2: Hodge plus Xu reduce LC/m >= 4/3 to "
                        "2(m^2 - m + 2) >= (16/9) m^2, i.e. (m-3)(m-6) >= 0");
    bool ok = true;
    for (std::int64_t m = 2; m <= 1000; ++m) {
      bool holds = 9 * (2 * m * m - 2 * m + 4) >= 16 * m * m;
      bool expected = m != 4 && m != 5;
      if (holds != expected) ok = false;
    }
    res.established = ok;
    res.trace.push_back("checked m = 2..1000: inequality holds exactly for m "
                        "outside {4,5}; those two cases are replayed separately");
    res.trace.push_back(ok ? "generic case inconsistent as claimed"
                           : "mismatch found: NOT established");
    return res;
  }
  throw std::invalid_argument("replay_contradiction: unknown case id '" +
                              std::string(case_id) + "'");
}

OracleVerdict verify_certificate(const Certificate& cert, const SurfaceType& s,
                                 DivisorClass L, std::span<const PointSpec> points,
                                 const SearchWindow& w, bool use_xu) {
  if (cert.kind == CertificateKind::UpperBound) {
    OracleVerdict verdict;
    verdict.claimed = cert.value;
    verdict.window = w;
    verdict.applicable = false;  // upper bounds are not sweep targets
    return verdict;
  }
  OracleVerdict verdict = sweep(s, L, points, w, cert.value, use_xu);
  if (cert.kind == CertificateKind::Exact) {
    bool found = false;
    if (cert.witness) {
      for (const RatedCandidate& rc : verdict.achievers)
        if (rc.curve.cls == cert.witness->curve.cls &&
            rc.curve.mults == cert.witness->curve.mults)
          found = true;
    }
    verdict.witness_confirmed = found && !verdict.achievers.empty();
  }
  return verdict;
}

}  // namespace seshadri
