#include "treefpp/spectrum.hpp"

#include "treefpp/errors.hpp"

namespace treefpp {

DerangementProfile derangement_profile(const PermSet& s) {
  DerangementProfile out;
  out.degree = s.degree();
  out.counts.assign(s.degree() + 1, 0);
  out.total = s.size();
  for (const auto& p : s.elements()) ++out.counts[p.fixed_point_count()];
  return out;
}

CharPoly characteristic_polynomial(const DerangementProfile& profile) {
  if (profile.total < 1) throw precondition_error("characteristic_polynomial: empty profile");
  const int d = profile.degree;
  CharPoly f;
  f.degree_bound = d;
  f.source_total = profile.total;
  f.coeffs.assign(d + 1, Rat(0));
  // 1 - (1-x)^k = sum_{j=1}^k C(k,j) (-1)^{j+1} x^j
  for (int k = 1; k <= d; ++k) {
    if (profile.counts[k] == 0) continue;
    Rat weight = make_rat(int_of(profile.counts[k]), int_of(profile.total));
    for (int j = 1; j <= k; ++j) {
      Int c = binomial(k, j);
      if (j % 2 == 0) c = -c;
      f.coeffs[j] += weight * Rat(c);
    }
  }
  return f;
}

Rat poly_eval(const std::vector<Rat>& coeffs, const Rat& x) {
  Rat acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rat> poly_derivative(const std::vector<Rat>& coeffs) {
  std::vector<Rat> out;
  for (std::size_t j = 1; j < coeffs.size(); ++j) out.push_back(coeffs[j] * Rat(Int(j)));
  if (out.empty()) out.push_back(Rat(0));
  return out;
}

Rat eval(const CharPoly& f, const Rat& x) { return poly_eval(f.coeffs, x); }

Rat mean_fixed_points(const PermSet& s) {
  long long sum = 0;
  for (const auto& p : s.elements()) sum += p.fixed_point_count();
  return make_rat(int_of(sum), int_of(s.size()));
}

BurnsideCheck coset_burnside_check(const PermSet& coset) {
  if (coset.kind() != SetKind::Coset)
    throw precondition_error("coset_burnside_check: argument must be a coset");
  const PermSet& h = coset.base_group();
  BurnsideCheck out;
  out.mean = mean_fixed_points(coset);

  if (is_transitive(h)) {
    out.predicted = Rat(1);
  } else {
    const Permutation g = coset.representative();
    bool normalizes = true;
    for (const auto& x : h.generators())
      if (!h.contains(conjugate(g, x))) {
        normalizes = false;
        break;
      }
    if (normalizes) {
      // Y* = {y : some h sends y where g^-1 does}; H-stable when g normalizes H.
      const Permutation ginv = g.inverse();
      std::vector<int> ystar;
      for (int y = 0; y < coset.degree(); ++y) {
        for (const auto& e : h.elements())
          if (e.apply(y) == ginv.apply(y)) {
            ystar.push_back(y);
            break;
          }
      }
      out.predicted = Rat(Int(ystar.empty() ? 0 : orbit_count_on(h, ystar)));
    }
  }
  if (out.predicted) out.agrees = (out.mean == *out.predicted);
  return out;
}

}  // namespace treefpp
