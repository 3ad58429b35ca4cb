#ifndef TREEFPP_SOLVER_HPP
#define TREEFPP_SOLVER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treefpp/permset.hpp"
#include "treefpp/rational.hpp"
#include "treefpp/spectrum.hpp"

namespace treefpp {

enum class FppClass { Zero, One, Algebraic };

std::string to_string(FppClass c);

struct CosetFpp;

/// Outcome of the fixed-point-proportion trichotomy. Algebraic results from
/// a single set carry the integer defining polynomial #S·(f_S(x)-x)/x and an
/// exact rational bracket (lo, hi) of the attracting fixed point with
/// f_S(lo) > lo > 0 and f_S(hi) < hi < 1. Coset-sum aggregates carry `exact`
/// whenever every coset is Zero/One, and a summed bracket otherwise (the
/// average of algebraic numbers is algebraic, but no defining polynomial is
/// constructed for it — the per-coset entries keep theirs).
struct FppResult {
  FppClass classification = FppClass::Zero;
  std::optional<std::vector<Int>> defining_polynomial;  // ascending coefficients
  std::optional<std::pair<Rat, Rat>> interval;
  std::string decimal;
  unsigned precision_bits = 0;
  std::optional<Rat> exact;
  std::vector<CosetFpp> per_coset;

  bool operator==(const FppResult& o) const;
};

struct CosetFpp {
  Permutation representative;
  FppResult result;

  bool operator==(const CosetFpp&) const = default;
};

inline constexpr unsigned kDefaultPrecisionBits = 64;

/// Trichotomy per the classification theorem: One iff D[0] = 0; else Zero
/// iff the mean number of fixed points is <= 1; else the unique root of
/// f_S(x)/x - 1 in (0,1), bracketed by bisection to width < 2^-precision_bits.
FppResult classify_and_solve(const DerangementProfile& profile,
                             unsigned precision_bits = kDefaultPrecisionBits);

/// Exact trace of p_{k+1} = f_S(p_k) with sigma_{k+1} = sigma_k^d * #S and
/// f_k = p_k sigma_k; every f_{k+1} is recomputed through the level
/// recursion f_{k+1} = sum_j D(j) sigma_k^{d-j} (sigma_k^j - (sigma_k-f_k)^j)
/// and must agree.
struct IterationTrace {
  std::vector<Rat> p;      // p_0 = 1 .. p_n
  std::vector<Int> sigma;  // sigma_1 .. sigma_n
  std::vector<Int> f;      // f_1 .. f_n
};

inline constexpr unsigned long kDefaultSigmaBitBudget = 1ul << 22;

IterationTrace fpp_iterate(const DerangementProfile& profile, int n,
                           unsigned long max_sigma_bits = kDefaultSigmaBitBudget);

/// Throws precondition_error unless 1 != Q <= P are groups of equal degree
/// with Q normal in P.
void validate_gqp_pair(const PermSet& q, const PermSet& p);

/// FPP(G_Q^P) = (1/[P:Q]) sum over cosets A of FPP(W_A), with per_coset
/// populated in canonical coset order.
FppResult fpp_of_gqp(const PermSet& q, const PermSet& p,
                     unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace treefpp

#endif
