#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "treefpp/errors.hpp"
#include "treefpp/oracle.hpp"
#include "treefpp/solver.hpp"
#include "treefpp/subgroups.hpp"

using namespace treefpp;

namespace {

Permutation perm(const std::string& text, int d) { return parse_permutation(text, d); }

Rat Q(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

}  // namespace

TEST_CASE("brute_count: frozen small cases") {
  auto s2 = brute_count(symmetric_group(2), 2);
  CHECK(s2.sigma == 8);
  CHECK(s2.f_brute == 3);
  CHECK(s2.f_recursion == 3);
  CHECK(s2.p == Q(3, 8));
  CHECK(s2.agrees);

  auto c3 = brute_count(generate_group({perm("(1,2,3)", 3)}), 2);
  CHECK(c3.sigma == 81);
  CHECK(c3.f_brute == 19);
  CHECK(c3.agrees);

  auto ident = brute_count(PermSet::make_set({Permutation::identity(3)}), 4);
  CHECK(ident.sigma == 1);
  CHECK(ident.f_brute == 1);
  CHECK(ident.agrees);
}

TEST_CASE("level 1 counts the non-derangements") {
  for (const auto& g : subgroup_conjugacy_classes(4)) {
    auto profile = derangement_profile(g);
    auto r = brute_count(g, 1);
    CHECK(r.f_brute == Int(static_cast<long>(profile.total - profile.counts[0])));
    CHECK(r.agrees);
  }
}

TEST_CASE("brute_count budget") {
  CHECK_THROWS_AS(brute_count(symmetric_group(3), 3), budget_error);  // 6^13 portraits
}

TEST_CASE("oracle agreement across Sym(3) classes") {
  for (const auto& g : subgroup_conjugacy_classes(3)) {
    CHECK(brute_count(g, 2).agrees);
    if (g.size() <= 3) CHECK(brute_count(g, 3).agrees);
  }
}

TEST_CASE("p is non-increasing at oracle scale") {
  for (const auto& g : subgroup_conjugacy_classes(3)) {
    Rat prev(1);
    for (int n = 1; n <= (g.size() <= 3 ? 3 : 2); ++n) {
      auto r = brute_count(g, n);
      CHECK(r.p <= prev);
      prev = r.p;
    }
  }
}

TEST_CASE("gqp_brute: per-coset reports and aggregate") {
  auto v4 = generate_group({perm("(1,2)(3,4)", 4), perm("(1,3)(2,4)", 4)});
  auto klein = gqp_brute(v4, symmetric_group(4), 1);
  CHECK(klein.sigma_total == 24);
  CHECK(klein.f_total == 15);  // Sym(4) has 9 derangements
  CHECK(klein.p == Q(15, 24));

  auto c3 = generate_group({perm("(1,2,3)", 3)});
  auto affine = gqp_brute(c3, symmetric_group(3), 2);
  REQUIRE(affine.per_coset.size() == 2);
  CHECK(affine.per_coset[0].second.p == Q(19, 81));
  CHECK(affine.per_coset[1].second.p == Q(1));
  CHECK(affine.p == Q(50, 81));

  auto same = gqp_brute(v4, v4, 2);
  auto direct = brute_count(v4, 2);
  REQUIRE(same.per_coset.size() == 1);
  CHECK(same.per_coset[0].second == direct);
}

TEST_CASE("gqp_brute aggregate equals the coset average and decreases in n") {
  auto v4 = generate_group({perm("(1,2)(3,4)", 4), perm("(1,3)(2,4)", 4)});
  auto s4 = symmetric_group(4);
  Rat prev(1);
  for (int n = 1; n <= 2; ++n) {
    auto r = gqp_brute(v4, s4, n);
    Rat sum(0);
    for (const auto& [rep, report] : r.per_coset) sum += report.p;
    CHECK(r.p == sum / Q(static_cast<long>(r.per_coset.size())));
    CHECK(r.p <= prev);
    prev = r.p;
  }
}

TEST_CASE("sample rng is a stable pure function of (seed, sample)") {
  SampleRng a(42, 7), b(42, 7), c(43, 7), d(42, 8);
  std::uint64_t a1 = a.next(), b1 = b.next();
  CHECK(a1 == b1);
  CHECK(a.next() == b.next());
  CHECK(c.next() != a1);
  CHECK(d.next() != a1);
}

TEST_CASE("mc_estimate: identity labels always survive") {
  auto ident = PermSet::make_set({Permutation::identity(3)});
  auto m = mc_estimate(ident, 15, 1000, 1);
  CHECK(m.survivors == 1000);
  CHECK(m.estimate == 1.0);
}

TEST_CASE("mc_estimate is worker-count independent") {
  auto s2 = symmetric_group(2);
  auto one = mc_estimate(s2, 12, 20000, 99, 0, 1);
  auto two = mc_estimate(s2, 12, 20000, 99, 0, 2);
  auto five = mc_estimate(s2, 12, 20000, 99, 0, 5);
  CHECK(one.survivors == two.survivors);
  CHECK(one.survivors == five.survivors);
}

TEST_CASE("at most one of 20 seeds strays past 3 standard errors") {
  auto s2 = symmetric_group(2);
  double p12 = Rat(fpp_iterate(derangement_profile(s2), 12).p.back()).get_d();
  int outside = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto m = mc_estimate(s2, 12, 50000, seed);
    if (std::abs(m.estimate - p12) > 3 * m.standard_error) ++outside;
  }
  CHECK(outside <= 1);
}

TEST_CASE("mc_estimate tracks the exact iterate") {
  auto s2 = symmetric_group(2);
  auto exact = fpp_iterate(derangement_profile(s2), 10);
  double p10 = Rat(exact.p.back()).get_d();
  int inside = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto m = mc_estimate(s2, 10, 50000, seed);
    if (std::abs(m.estimate - p10) <= 4 * m.standard_error) ++inside;
  }
  CHECK(inside >= 4);
}

TEST_CASE("mc_estimate input validation") {
  auto s2 = symmetric_group(2);
  CHECK_THROWS_AS(mc_estimate(s2, 0, 10, 1), precondition_error);
  CHECK_THROWS_AS(mc_estimate(s2, 1, 0, 1), precondition_error);
}

TEST_CASE("default frontier cap") {
  CHECK(default_frontier_cap(2) == 4096);
  CHECK(default_frontier_cap(4) == 16777216);
}
