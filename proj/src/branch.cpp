#include "treefpp/branch.hpp"

#include <cmath>
#include <cstdio>

#include "treefpp/errors.hpp"
#include "treefpp/subgroups.hpp"

namespace treefpp {

std::string to_string(Tfg t) {
  switch (t) {
    case Tfg::Yes: return "Yes";
    case Tfg::No: return "No";
    case Tfg::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string hausdorff_decimal(const Int& num, const Int& den) {
  if (num == den) return "1.000000000000000";
  auto log_of = [](const Int& v) -> long double {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(static_cast<long double>(mant)) + exp2 * 0.693147180559945309417L;
  };
  long double v = log_of(num) / log_of(den);
  long double truncated = std::floor(v * 1e15L) / 1e15L;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15Lf", truncated);
  return buf;
}

namespace {

bool has_global_fixed_point(const PermSet& q) {
  for (int x = 0; x < q.degree(); ++x) {
    bool fixed_by_all = true;
    for (const auto& p : q.elements())
      if (p.apply(x) != x) {
        fixed_by_all = false;
        break;
      }
    if (fixed_by_all) return true;
  }
  return false;
}

}  // namespace

GqpReport analyze_gqp(const PermSet& q, const PermSet& p, unsigned precision_bits) {
  validate_gqp_pair(q, p);

  GqpReport r;
  r.degree = q.degree();
  r.order_q = q.size();
  r.order_p = p.size();
  r.index = p.size() / q.size();
  r.level_transitive = is_transitive(q);
  r.hausdorff_log_num = int_of(q.size());
  r.hausdorff_log_den = factorial(static_cast<unsigned>(q.degree()));
  r.hausdorff_decimal = hausdorff_decimal(r.hausdorff_log_num, r.hausdorff_log_den);
  r.finite_type_depth = (q == p) ? 1 : 2;

  r.q_perfect = (commutator_subgroup(q) == q);
  if (!r.q_perfect || has_global_fixed_point(q))
    r.tfg = Tfg::No;
  else if (r.level_transitive)
    r.tfg = Tfg::Yes;
  else
    r.tfg = Tfg::Undetermined;
  r.just_infinite = r.q_perfect;
  r.strongly_complete = r.q_perfect;

  r.fpp = fpp_of_gqp(q, p, precision_bits);
  return r;
}

GqpReport analyze_gqp(const std::vector<std::string>& q_generators,
                      const std::vector<std::string>& p_generators, int degree,
                      unsigned precision_bits) {
  return analyze_gqp(generate_group(q_generators, degree), generate_group(p_generators, degree),
                     precision_bits);
}

std::vector<GoodCosetFinding> search_good_cosets(int degree) {
  std::vector<GoodCosetFinding> findings;
  for (const auto& q : subgroup_conjugacy_classes(degree)) {
    if (!is_transitive(q)) continue;
    PermSet p = normalizer_in_sym(q);
    for (const auto& a : cosets(p, q)) {
      std::vector<int> witness;
      witness.reserve(a.elements().size());
      bool good = true;
      for (const auto& e : a.elements()) {
        int fc = e.fixed_point_count();
        if (fc != 1) {
          good = false;
          break;
        }
        witness.push_back(fc);
      }
      if (good)
        findings.push_back(
            GoodCosetFinding{degree, q, p, a.representative(), std::move(witness)});
    }
  }
  return findings;
}

}  // namespace treefpp
