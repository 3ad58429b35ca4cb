#include "treefpp/solver.hpp"

#include <cassert>

#include "treefpp/errors.hpp"

namespace treefpp {

std::string to_string(FppClass c) {
  switch (c) {
    case FppClass::Zero: return "Zero";
    case FppClass::One: return "One";
    case FppClass::Algebraic: return "Algebraic";
  }
  return "?";
}

bool FppResult::operator==(const FppResult& o) const {
  return classification == o.classification && defining_polynomial == o.defining_polynomial &&
         interval == o.interval && decimal == o.decimal && precision_bits == o.precision_bits &&
         exact == o.exact && per_coset == o.per_coset;
}

namespace {

Rat pow2_inv(unsigned long k) { return make_rat(Int(1), int_pow(Int(2), k)); }

// #S * (f_S(x) - x) / x as integer coefficients, trailing zeros stripped.
std::vector<Int> defining_poly(const CharPoly& f) {
  std::vector<Int> out;
  for (std::size_t j = 1; j < f.coeffs.size(); ++j) {
    Rat c = f.coeffs[j] * Rat(int_of(f.source_total));
    if (j == 1) c -= Rat(int_of(f.source_total));
    if (c.get_den() != 1)
      throw std::logic_error("defining polynomial coefficient not integral");
    out.push_back(c.get_num());
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

int sign_at(const std::vector<Int>& poly, const Rat& x) {
  Rat acc(0);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + Rat(*it);
  return sgn(acc);
}

FppResult exact_result(FppClass cls, const Rat& value, unsigned precision_bits) {
  FppResult r;
  r.classification = cls;
  r.precision_bits = precision_bits;
  r.exact = value;
  if (value == 0 || value == 1)
    r.decimal = decimal_trimmed(value, 1);
  else
    r.decimal = decimal_truncated(value, decimal_digits_for_bits(precision_bits));
  return r;
}

}  // namespace

FppResult classify_and_solve(const DerangementProfile& profile, unsigned precision_bits) {
  if (profile.total < 1) throw precondition_error("classify_and_solve: empty profile");
  if (precision_bits < 8) throw precondition_error("classify_and_solve: precision_bits must be >= 8");

  // Every element fixes a point <=> FPP = 1. This also routes the
  // degenerate f_S = id case (every element fixing exactly one point).
  if (profile.counts[0] == 0) return exact_result(FppClass::One, Rat(1), precision_bits);

  CharPoly f = characteristic_polynomial(profile);
  Rat slope0 = f.coeffs.size() > 1 ? f.coeffs[1] : Rat(0);  // f_S'(0), the mean
  if (slope0 <= 1) return exact_result(FppClass::Zero, Rat(0), precision_bits);

  // Largest fixed point: unique root of g(x) = #S (f_S(x) - x)/x in (0,1);
  // g is positive left of the root and negative right of it.
  std::vector<Int> g = defining_poly(f);

  Rat lo = pow2_inv(30);
  while (sign_at(g, lo) < 0) lo = lo * lo;  // root below lo: push further left
  Rat hi(1);
  assert(sign_at(g, hi) < 0);

  const Rat width = pow2_inv(precision_bits);
  std::optional<Rat> exact_root;
  if (sign_at(g, lo) == 0) exact_root = lo;

  while (!exact_root && (hi - lo >= width || hi == 1)) {
    Rat mid = (lo + hi) / 2;
    int s = sign_at(g, mid);
    if (s > 0)
      lo = mid;
    else if (s < 0)
      hi = mid;
    else
      exact_root = mid;
  }
  if (exact_root) {
    Rat eps = pow2_inv(precision_bits + 1);
    if (eps >= *exact_root) eps = *exact_root / 2;
    if (*exact_root + eps >= 1) eps = (Rat(1) - *exact_root) / 2;
    lo = *exact_root - eps;
    hi = *exact_root + eps;
  }

  FppResult r;
  r.classification = FppClass::Algebraic;
  r.precision_bits = precision_bits;
  r.defining_polynomial = std::move(g);
  r.interval = std::make_pair(lo, hi);
  r.decimal = decimal_truncated(lo, decimal_digits_for_bits(precision_bits));
  return r;
}

IterationTrace fpp_iterate(const DerangementProfile& profile, int n,
                           unsigned long max_sigma_bits) {
  if (n < 0) throw precondition_error("fpp_iterate: n must be >= 0");
  if (profile.total < 1) throw precondition_error("fpp_iterate: empty profile");
  const int d = profile.degree;

  if (n > 0 && profile.total > 1) {
    // sigma_n = (#S)^((d^n-1)/(d-1)); reject before allocating huge integers.
    Int levels = (int_pow(Int(d), static_cast<unsigned long>(n)) - 1) / (d - 1);
    Int bits = levels * static_cast<long>(mpz_sizeinbase(int_of(profile.total).get_mpz_t(), 2));
    if (bits > static_cast<long>(max_sigma_bits))
      throw budget_error("fpp_iterate: sigma_" + std::to_string(n) +
                         " exceeds the exact-integer budget");
  }

  CharPoly fs = characteristic_polynomial(profile);

  IterationTrace t;
  t.p.push_back(Rat(1));
  Int sigma_prev(1);  // sigma_0
  Int f_prev(1);      // f_0 (the root is always fixed)
  for (int k = 1; k <= n; ++k) {
    Rat pk = eval(fs, t.p.back());
    if (pk > t.p.back()) throw std::logic_error("fpp_iterate: p must be non-increasing");
    Int sigma_k = int_pow(sigma_prev, d) * int_of(profile.total);
    Rat fk_rat = pk * Rat(sigma_k);
    if (fk_rat.get_den() != 1) throw std::logic_error("fpp_iterate: f_k not an integer");
    Int f_k = fk_rat.get_num();

    // Level recursion on exact counts, checked against p_k sigma_k.
    Int f_rec(0);
    for (int j = 1; j <= d; ++j) {
      if (profile.counts[j] == 0) continue;
      Int without = int_pow(sigma_prev - f_prev, j);
      f_rec += int_of(profile.counts[j]) * int_pow(sigma_prev, static_cast<unsigned long>(d - j)) *
               (int_pow(sigma_prev, j) - without);
    }
    if (f_rec != f_k) throw std::logic_error("fpp_iterate: recursion disagrees with p_k sigma_k");

    t.p.push_back(std::move(pk));
    t.sigma.push_back(sigma_k);
    t.f.push_back(f_k);
    sigma_prev = std::move(sigma_k);
    f_prev = std::move(f_k);
  }
  return t;
}

void validate_gqp_pair(const PermSet& q, const PermSet& p) {
  if (q.kind() != SetKind::Group || p.kind() != SetKind::Group)
    throw precondition_error("Q and P must be groups");
  if (q.degree() != p.degree()) throw precondition_error("Q and P must have the same degree");
  if (q.size() == 1) throw precondition_error("Q must be nontrivial");
  if (!is_subgroup_of(q, p)) throw precondition_error("Q must be a subgroup of P");
  if (!is_normal_in(q, p)) throw precondition_error("Q must be normal in P");
}

FppResult fpp_of_gqp(const PermSet& q, const PermSet& p, unsigned precision_bits) {
  validate_gqp_pair(q, p);
  auto parts = cosets(p, q);
  const auto index = static_cast<long long>(parts.size());

  std::vector<CosetFpp> per;
  per.reserve(parts.size());
  bool all_exact = true;
  for (const auto& a : parts) {
    FppResult r = classify_and_solve(derangement_profile(a), precision_bits);
    all_exact = all_exact && r.exact.has_value();
    per.push_back(CosetFpp{a.representative(), std::move(r)});
  }

  FppResult agg;
  if (all_exact) {
    Rat value(0);
    for (const auto& c : per) value += *c.result.exact;
    value /= Rat(int_of(index));
    agg = exact_result(value == 0   ? FppClass::Zero
                       : value == 1 ? FppClass::One
                                    : FppClass::Algebraic,
                       value, precision_bits);
    if (agg.classification == FppClass::Algebraic) {
      // value = b/a in (0,1): linear defining polynomial and a tight bracket.
      agg.defining_polynomial = std::vector<Int>{-value.get_num(), value.get_den()};
      Rat eps = pow2_inv(precision_bits + 1);
      if (eps >= value) eps = value / 2;
      if (value + eps >= 1) eps = (Rat(1) - value) / 2;
      agg.interval = std::make_pair(value - eps, value + eps);
    }
  } else {
    Rat lo(0), hi(0);
    for (const auto& c : per) {
      if (c.result.exact) {
        lo += *c.result.exact;
        hi += *c.result.exact;
      } else {
        lo += c.result.interval->first;
        hi += c.result.interval->second;
      }
    }
    lo /= Rat(int_of(index));
    hi /= Rat(int_of(index));
    agg.classification = FppClass::Algebraic;
    agg.precision_bits = precision_bits;
    agg.interval = std::make_pair(lo, hi);
    agg.decimal = decimal_truncated(lo, decimal_digits_for_bits(precision_bits));
  }
  agg.per_coset = std::move(per);
  return agg;
}

}  // namespace treefpp
