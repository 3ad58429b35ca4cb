#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "treefpp/errors.hpp"
#include "treefpp/spectrum.hpp"
#include "treefpp/subgroups.hpp"

using namespace treefpp;

namespace {

Permutation perm(const std::string& text, int d) { return parse_permutation(text, d); }

Rat Q(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

PermSet conjugated_set(const PermSet& s, const Permutation& g) {
  std::vector<Permutation> elems;
  for (const auto& e : s.elements()) elems.push_back(conjugate(g, e));
  return PermSet::make_set(std::move(elems));
}

Permutation random_perm(int d, std::mt19937& rng) {
  std::vector<std::uint8_t> img(d);
  for (int i = 0; i < d; ++i) img[i] = static_cast<std::uint8_t>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("derangement profiles") {
  auto s3 = derangement_profile(symmetric_group(3));
  CHECK(s3.counts == std::vector<long long>{2, 3, 0, 1});
  CHECK(s3.total == 6);

  auto triv = derangement_profile(PermSet::make_set({Permutation::identity(3)}));
  CHECK(triv.counts == std::vector<long long>{0, 0, 0, 1});

  auto c2 = derangement_profile(generate_group({perm("(1,2)(3,4)", 4)}));
  CHECK(c2.counts == std::vector<long long>{1, 0, 0, 0, 1});
  CHECK(c2.total == 2);
}

TEST_CASE("no permutation fixes exactly d-1 points") {
  for (int d = 2; d <= 5; ++d)
    for (const auto& cls : subgroup_conjugacy_classes(std::min(d, 6)))
      CHECK(derangement_profile(cls).counts[cls.degree() - 1] == 0);
}

TEST_CASE("characteristic polynomial: frozen expansions") {
  // cyclic C3: 1/3 + (1/3)(x-1)^3 = x - x^2 + x^3/3
  auto c3 = characteristic_polynomial(derangement_profile(generate_group({perm("(1,2,3)", 3)})));
  CHECK(c3.coeffs == std::vector<Rat>{Q(0), Q(1), Q(-1), Q(1, 3)});

  // trivial group in degree 3: 1 - (1-x)^3 = 3x - 3x^2 + x^3
  auto triv =
      characteristic_polynomial(derangement_profile(PermSet::make_set({Permutation::identity(3)})));
  CHECK(triv.coeffs == std::vector<Rat>{Q(0), Q(3), Q(-3), Q(1)});

  // Sym(2): x - x^2/2
  auto s2 = characteristic_polynomial(derangement_profile(symmetric_group(2)));
  CHECK(s2.coeffs == std::vector<Rat>{Q(0), Q(1), Q(-1, 2)});
}

TEST_CASE("eval") {
  auto s2 = characteristic_polynomial(derangement_profile(symmetric_group(2)));
  CHECK(eval(s2, Q(1, 2)) == Q(3, 8));
  CHECK(eval(s2, Q(0)) == Q(0));

  auto c3 = characteristic_polynomial(derangement_profile(generate_group({perm("(1,2,3)", 3)})));
  CHECK(eval(c3, Q(1)) == Q(1, 3));
}

TEST_CASE("mean_fixed_points") {
  CHECK(mean_fixed_points(symmetric_group(3)) == Q(1));
  CHECK(mean_fixed_points(generate_group({perm("(1,2)", 4), perm("(3,4)", 4)})) == Q(2));

  auto v4 = std::make_shared<const PermSet>(
      generate_group({perm("(1,2)(3,4)", 4), perm("(1,3)(2,4)", 4)}));
  auto coset = PermSet::make_coset(perm("(1,2,3)", 4), v4);
  CHECK(mean_fixed_points(coset) == Q(1));
}

TEST_CASE("mean equals f_S'(0) and the orbit count, d <= 5") {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& g : subgroup_conjugacy_classes(d)) {
      Rat mean = mean_fixed_points(g);
      auto f = characteristic_polynomial(derangement_profile(g));
      CHECK(mean == f.coeffs[1]);
      CHECK(mean == Q(orbit_count(g)));
    }
  }
}

TEST_CASE("coset_burnside_check") {
  auto v4 = std::make_shared<const PermSet>(
      generate_group({perm("(1,2)(3,4)", 4), perm("(1,3)(2,4)", 4)}));

  SUBCASE("transitive base predicts mean 1") {
    auto check = coset_burnside_check(PermSet::make_coset(perm("(1,2)", 4), v4));
    CHECK(check.mean == Q(1));
    REQUIRE(check.predicted);
    CHECK(*check.predicted == Q(1));
    CHECK(check.agrees == true);
  }

  SUBCASE("the group itself predicts its orbit count") {
    auto h = std::make_shared<const PermSet>(generate_group({perm("(1,2)", 3)}));
    auto check = coset_burnside_check(PermSet::make_coset(Permutation::identity(3), h));
    CHECK(check.mean == Q(2));
    REQUIRE(check.predicted);
    CHECK(*check.predicted == Q(2));  // orbits {1,2} and {3}
    CHECK(check.agrees == true);
  }

  SUBCASE("normalizing representative, nontransitive base") {
    // H = <(1,2)>, g = (3,4) normalizes H; Y* = {1,2}, a single H-orbit
    auto h = std::make_shared<const PermSet>(generate_group({perm("(1,2)", 4)}));
    auto check = coset_burnside_check(PermSet::make_coset(perm("(3,4)", 4), h));
    CHECK(check.mean == Q(1));  // (3,4) fixes 2, (1,2)(3,4) fixes 0
    REQUIRE(check.predicted);
    CHECK(*check.predicted == Q(1));
    CHECK(check.agrees == true);
  }

  SUBCASE("predicted absent when neither hypothesis holds") {
    // H = <(1,2)> in degree 4, g = (2,3): g does not normalize H
    auto h = std::make_shared<const PermSet>(generate_group({perm("(1,2)", 4)}));
    auto check = coset_burnside_check(PermSet::make_coset(perm("(2,3)", 4), h));
    CHECK_FALSE(check.predicted.has_value());
    CHECK_FALSE(check.agrees.has_value());
  }
}

TEST_CASE("coset mean is 1 for every coset of a transitive normal pair, d <= 5") {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& q : subgroup_conjugacy_classes(d)) {
      if (!is_transitive(q)) continue;
      auto p = normalizer_in_sym(q);
      for (const auto& a : cosets(p, q)) CHECK(mean_fixed_points(a) == Q(1));
    }
  }
}

TEST_CASE("characteristic polynomial is conjugacy invariant") {
  std::mt19937 rng(2024);
  int checked = 0;
  while (checked < 100) {
    int d = 2 + static_cast<int>(rng() % 5);
    std::vector<Permutation> elems;
    int size = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < size; ++i) elems.push_back(random_perm(d, rng));
    auto s = PermSet::make_set(elems);
    auto g = random_perm(d, rng);
    auto lhs = characteristic_polynomial(derangement_profile(s));
    auto rhs = characteristic_polynomial(derangement_profile(conjugated_set(s, g)));
    CHECK(lhs.coeffs == rhs.coeffs);
    ++checked;
  }
}

TEST_CASE("f maps [0,1] to [0,1], increasing and concave, on a grid") {
  const int grid = 200;  // the acceptance suite runs the full 10^4-point grid
  for (int d = 2; d <= 4; ++d) {
    for (const auto& g : subgroup_conjugacy_classes(d)) {
      auto profile = derangement_profile(g);
      auto f = characteristic_polynomial(profile);
      auto f1 = poly_derivative(f.coeffs);
      auto f2 = poly_derivative(f1);
      for (int i = 0; i <= grid; ++i) {
        Rat x = Q(i, grid);
        Rat value = eval(f, x);
        CHECK(value >= 0);
        CHECK(value <= 1);
        CHECK(poly_eval(f1, x) >= 0);
        CHECK(poly_eval(f2, x) <= 0);

        // same derivative through the (1-x) form: sum k D(k)/#S (1-x)^(k-1)
        Rat direct(0);
        Rat base = Rat(1) - x;
        for (int k = 1; k <= d; ++k) {
          if (profile.counts[k] == 0) continue;
          Rat pw(1);
          for (int t = 0; t < k - 1; ++t) pw *= base;
          direct += Q(profile.counts[k] * k, profile.total) * pw;
        }
        CHECK(poly_eval(f1, x) == direct);
      }
    }
  }
}
