#ifndef TREEFPP_BRANCH_HPP
#define TREEFPP_BRANCH_HPP

#include <string>
#include <vector>

#include "treefpp/permset.hpp"
#include "treefpp/solver.hpp"

namespace treefpp {

enum class Tfg { Yes, No, Undetermined };

std::string to_string(Tfg t);

/// Structural record of G_Q^P. Hausdorff dimension is log|Q|/log(d!),
/// reported both as the exact integer pair under the logs and as a
/// 15-digit decimal. The finite-type depth (2 unless Q = P) and the
/// just-infinite / strongly-complete flags (= both equal to Q = Q') are
/// classification formulas, not computational certificates.
struct GqpReport {
  int degree = 0;
  long long order_q = 0;
  long long order_p = 0;
  long long index = 0;
  bool level_transitive = false;
  Int hausdorff_log_num;  // |Q|
  Int hausdorff_log_den;  // d!
  std::string hausdorff_decimal;
  int finite_type_depth = 0;
  Tfg tfg = Tfg::Undetermined;
  bool q_perfect = false;  // Q = Q'
  bool just_infinite = false;
  bool strongly_complete = false;
  FppResult fpp;

  bool operator==(const GqpReport&) const = default;
};

GqpReport analyze_gqp(const PermSet& q, const PermSet& p,
                      unsigned precision_bits = kDefaultPrecisionBits);

GqpReport analyze_gqp(const std::vector<std::string>& q_generators,
                      const std::vector<std::string>& p_generators, int degree,
                      unsigned precision_bits = kDefaultPrecisionBits);

/// A coset of Q in its normalizer all of whose elements fix exactly one
/// point — the configuration that makes FPP(G_Q^P) positive.
struct GoodCosetFinding {
  int degree = 0;
  PermSet group_q;
  PermSet normalizer_p;
  Permutation coset_representative;
  std::vector<int> witness_fixed_counts;  // one per coset element, all 1

  bool operator==(const GoodCosetFinding&) const = default;
};

/// For every transitive subgroup class Q of Sym(d) with P = N_{Sym(d)}(Q),
/// report each coset of Q in P whose elements all fix exactly one point.
/// Deterministic order (classes canonical, cosets canonical); 2 <= d <= 6.
std::vector<GoodCosetFinding> search_good_cosets(int degree);

/// log(num)/log(den) truncated to 15 fractional digits.
std::string hausdorff_decimal(const Int& num, const Int& den);

}  // namespace treefpp

#endif
