#ifndef TREEFPP_ORACLE_HPP
#define TREEFPP_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "treefpp/permset.hpp"
#include "treefpp/rational.hpp"

namespace treefpp {

/// Exhaustive level-n ground truth for W_S: sigma_n = (#S)^((d^n-1)/(d-1))
/// portraits enumerated, f_brute of them fixing some level-n vertex, checked
/// against the level recursion from exact level-(n-1) values.
struct OracleReport {
  int degree = 0;
  int level = 0;
  Int sigma;
  Int f_brute;
  Int f_recursion;
  Rat p;
  bool agrees = false;

  bool operator==(const OracleReport&) const = default;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

OracleReport brute_count(const PermSet& s, int n,
                         std::uint64_t budget = kDefaultEnumerationBudget);

/// Per-coset brute counts for G_Q^P plus the aggregate over the disjoint
/// union (all cosets share sigma_n).
struct GqpOracleReport {
  std::vector<std::pair<Permutation, OracleReport>> per_coset;
  Int sigma_total;
  Int f_total;
  Rat p;

  bool operator==(const GqpOracleReport&) const = default;
};

GqpOracleReport gqp_brute(const PermSet& q, const PermSet& p, int n,
                          std::uint64_t budget = kDefaultEnumerationBudget);

/// Seeded branching-process estimate of FPP(W_S): each frontier vertex
/// draws a uniform label and contributes children at its fixed points;
/// a sample survives if the frontier is nonempty at `depth` (or hits the
/// frontier cap, when extinction is no longer plausible). Reproducible from
/// (seed, samples, depth, cap) for any worker count: the random stream is
/// keyed by (seed, sample index).
struct McEstimate {
  std::uint64_t samples = 0;
  std::uint64_t survivors = 0;
  double estimate = 0;
  double standard_error = 0;
  std::uint64_t seed = 0;
  int depth = 0;
  std::uint64_t cap = 0;

  bool operator==(const McEstimate&) const = default;
};

/// Default frontier cap d^12 (saturating); in the supercritical regime a
/// capped frontier is extinct with probability far below 2^-60.
std::uint64_t default_frontier_cap(int degree);

McEstimate mc_estimate(const PermSet& s, int depth, std::uint64_t samples, std::uint64_t seed,
                       std::uint64_t cap = 0, unsigned workers = 0);

/// Counter-based per-sample random stream (seed, sample index) -> draws.
class SampleRng {
public:
  SampleRng(std::uint64_t seed, std::uint64_t sample_index);
  std::uint64_t next();
  /// Uniform in [0, n) by 128-bit multiply-shift.
  std::uint32_t next_below(std::uint32_t n);

private:
  std::uint64_t state_;
};

}  // namespace treefpp

#endif
