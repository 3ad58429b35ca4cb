#ifndef TREEFPP_SPECTRUM_HPP
#define TREEFPP_SPECTRUM_HPP

#include <optional>
#include <vector>

#include "treefpp/permset.hpp"
#include "treefpp/rational.hpp"

namespace treefpp {

/// counts[k] = number of elements fixing exactly k points; counts[d-1] is
/// always zero (no permutation fixes exactly d-1 points).
struct DerangementProfile {
  int degree = 0;
  std::vector<long long> counts;  // size degree + 1
  long long total = 0;

  bool operator==(const DerangementProfile&) const = default;
};

DerangementProfile derangement_profile(const PermSet& s);

/// f_S(x) = sum_{k>=1} (D_S(k)/#S) (1 - (1-x)^k), expanded exactly in the
/// monomial basis. c_0 = 0 and every coefficient lies in (1/#S)·Z.
struct CharPoly {
  int degree_bound = 0;
  std::vector<Rat> coeffs;  // c_0..c_degree_bound
  long long source_total = 0;

  bool operator==(const CharPoly&) const = default;
};

CharPoly characteristic_polynomial(const DerangementProfile& profile);

/// Exact Horner evaluation.
Rat eval(const CharPoly& f, const Rat& x);

/// Plain polynomial helpers (ascending coefficients).
Rat poly_eval(const std::vector<Rat>& coeffs, const Rat& x);
std::vector<Rat> poly_derivative(const std::vector<Rat>& coeffs);

/// (1/#S) sum_s fix(s) = f_S'(0).
Rat mean_fixed_points(const PermSet& s);

/// Coset mean-fixed-point check: predicted = 1 for a transitive base, or the
/// number of H-orbits on Y* = {y : exists h, h(y) = g^-1(y)} when the
/// representative normalizes the base; absent otherwise.
struct BurnsideCheck {
  Rat mean;
  std::optional<Rat> predicted;
  std::optional<bool> agrees;

  bool operator==(const BurnsideCheck&) const = default;
};

BurnsideCheck coset_burnside_check(const PermSet& coset);

}  // namespace treefpp

#endif
