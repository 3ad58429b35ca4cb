#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treefpp/errors.hpp"
#include "treefpp/solver.hpp"
#include "treefpp/subgroups.hpp"

using namespace treefpp;

namespace {

Permutation perm(const std::string& text, int d) { return parse_permutation(text, d); }

Rat Q(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

FppResult solve(const PermSet& s, unsigned bits = kDefaultPrecisionBits) {
  return classify_and_solve(derangement_profile(s), bits);
}

Rat interval_mid(const FppResult& r) {
  REQUIRE(r.interval.has_value());
  return (r.interval->first + r.interval->second) / 2;
}

// Figure-level reference coordinates for the two nontrivial Sym(4) classes.
const Rat kFppDouble = rat_from_string("4563109873079255/10000000000000000");
const Rat kFppPair = rat_from_string("7044022574778126/10000000000000000");
const Rat kTol = rat_from_string("1/1000000000000");

}  // namespace

TEST_CASE("classification: transitive, point-fixing, algebraic") {
  CHECK(solve(symmetric_group(2)).classification == FppClass::Zero);
  CHECK(solve(symmetric_group(2)).exact == Q(0));

  auto one = solve(generate_group({perm("(2,3)", 3)}));
  CHECK(one.classification == FppClass::One);
  CHECK(one.decimal == "1");

  auto a1 = solve(generate_group({perm("(1,2)(3,4)", 4)}));
  CHECK(a1.classification == FppClass::Algebraic);
  CHECK(abs(interval_mid(a1) - kFppDouble) < kTol);
  CHECK(a1.decimal.substr(0, 14) == "0.456310987307");

  auto a2 = solve(generate_group({perm("(1,2)", 4), perm("(3,4)", 4)}));
  CHECK(a2.classification == FppClass::Algebraic);
  CHECK(abs(interval_mid(a2) - kFppPair) < kTol);
  CHECK(a2.decimal.substr(0, 14) == "0.704402257477");
}

TEST_CASE("degenerate cases route correctly") {
  // every element fixes exactly one point: f_S is the identity, FPP = 1
  auto one_point = PermSet::make_set({perm("(2,3)", 3), perm("(1,3)", 3), perm("(1,2)", 3)});
  CHECK(solve(one_point).classification == FppClass::One);

  // all derangements: f_S = 0
  auto derangements = PermSet::make_set({perm("(1,2)(3,4)", 4), perm("(1,3)(2,4)", 4)});
  CHECK(solve(derangements).classification == FppClass::Zero);
  CHECK(solve(PermSet::make_set({perm("(1,2,3)", 3), perm("(1,3,2)", 3)})).classification ==
        FppClass::Zero);
}

TEST_CASE("defining polynomial of <(1,2)(3,4)>") {
  // f(x) = (1 - (1-x)^4)/2, so #S (f(x)-x)/x = 2 - 6x + 4x^2 - x^3
  auto r = solve(generate_group({perm("(1,2)(3,4)", 4)}));
  REQUIRE(r.defining_polynomial.has_value());
  CHECK(*r.defining_polynomial == std::vector<Int>{Int(2), Int(-6), Int(4), Int(-1)});
}

TEST_CASE("algebraic results carry a certified bracket") {
  for (const auto& cls : subgroup_conjugacy_classes(4)) {
    auto profile = derangement_profile(cls);
    auto r = classify_and_solve(profile);
    if (r.classification != FppClass::Algebraic) continue;

    auto [lo, hi] = *r.interval;
    CHECK(lo > 0);
    CHECK(hi < 1);
    CHECK(hi - lo < rat_from_string("1/18446744073709551616"));  // 2^-64

    auto f = characteristic_polynomial(profile);
    CHECK(eval(f, lo) > lo);
    CHECK(eval(f, hi) < hi);

    // defining polynomial: degree <= d-1, integral, sign change over (lo,hi)
    REQUIRE(r.defining_polynomial.has_value());
    CHECK(r.defining_polynomial->size() <= 4u);
    std::vector<Rat> as_rat;
    for (const auto& c : *r.defining_polynomial) as_rat.emplace_back(c);
    CHECK(poly_eval(as_rat, lo) > 0);
    CHECK(poly_eval(as_rat, hi) < 0);

    // fixed-point property at the midpoint
    Rat mid = (lo + hi) / 2;
    Rat err = eval(f, mid) - mid;
    if (err < 0) err = -err;
    CHECK(err < rat_from_string("4/18446744073709551616"));  // 2^-(64-2)
  }
}

TEST_CASE("trichotomy over all subgroup classes, d <= 5") {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& g : subgroup_conjugacy_classes(d)) {
      auto profile = derangement_profile(g);
      auto r = classify_and_solve(profile);
      if (is_transitive(g)) {
        CHECK(r.classification == FppClass::Zero);
      } else if (profile.counts[0] > 0) {
        CHECK(r.classification == FppClass::Algebraic);
      } else {
        CHECK(r.classification == FppClass::One);
      }
    }
  }
}

TEST_CASE("fpp_iterate: frozen traces") {
  auto s2 = fpp_iterate(derangement_profile(symmetric_group(2)), 3);
  CHECK(s2.p == std::vector<Rat>{Q(1), Q(1, 2), Q(3, 8), Q(39, 128)});
  CHECK(s2.sigma == std::vector<Int>{Int(2), Int(8), Int(128)});
  CHECK(s2.f == std::vector<Int>{Int(1), Int(3), Int(39)});

  auto c3 = fpp_iterate(derangement_profile(generate_group({perm("(1,2,3)", 3)})), 2);
  CHECK(c3.p == std::vector<Rat>{Q(1), Q(1, 3), Q(19, 81)});
  CHECK(c3.sigma == std::vector<Int>{Int(3), Int(81)});
  CHECK(c3.f == std::vector<Int>{Int(1), Int(19)});

  auto triv = fpp_iterate(derangement_profile(PermSet::make_set({Permutation::identity(3)})), 6);
  for (const auto& p : triv.p) CHECK(p == Q(1));
}

TEST_CASE("fpp_iterate budget") {
  CHECK_THROWS_AS(fpp_iterate(derangement_profile(symmetric_group(2)), 50), budget_error);
}

TEST_CASE("iteration converges to the attracting fixed point") {
  for (const auto& gens :
       {std::vector<std::string>{"(1,2)(3,4)"}, std::vector<std::string>{"(1,2)", "(3,4)"}}) {
    auto g = generate_group(gens, 4);
    auto profile = derangement_profile(g);
    auto r = classify_and_solve(profile);
    REQUIRE(r.classification == FppClass::Algebraic);

    auto trace = fpp_iterate(profile, 12, 1ul << 24);
    for (std::size_t i = 1; i < trace.p.size(); ++i) CHECK(trace.p[i] <= trace.p[i - 1]);
    CHECK(trace.p.back() >= r.interval->first);
    CHECK(trace.p.back() - r.interval->first < rat_from_string("1/1048576"));  // 2^-20
  }
}

TEST_CASE("fpp_of_gqp: exact coset sums") {
  auto s2 = symmetric_group(2);
  auto whole_tree = fpp_of_gqp(s2, s2);
  CHECK(whole_tree.exact == Q(0));
  CHECK(whole_tree.per_coset.size() == 1);

  auto v4 = generate_group({perm("(1,2)(3,4)", 4), perm("(1,3)(2,4)", 4)});
  auto klein = fpp_of_gqp(v4, symmetric_group(4));
  CHECK(klein.exact == Q(1, 3));
  REQUIRE(klein.per_coset.size() == 6);
  int ones = 0, zeros = 0;
  for (const auto& c : klein.per_coset) {
    if (c.result.classification == FppClass::One) ++ones;
    if (c.result.classification == FppClass::Zero) ++zeros;
  }
  CHECK(ones == 2);  // the two cosets of 3-cycles
  CHECK(zeros == 4);

  auto c3 = generate_group({perm("(1,2,3)", 3)});
  auto affine3 = fpp_of_gqp(c3, symmetric_group(3));
  CHECK(affine3.exact == Q(1, 2));
}

TEST_CASE("fpp_of_gqp: aggregate with an algebraic coset") {
  auto q = generate_group({perm("(1,2)(3,4)", 4)});
  auto p = generate_group({perm("(1,2)", 4), perm("(3,4)", 4)});
  auto r = fpp_of_gqp(q, p);
  CHECK(r.classification == FppClass::Algebraic);
  CHECK_FALSE(r.exact.has_value());
  REQUIRE(r.interval.has_value());
  // average of {0.45631..., 1}: brackets sum to within 2^-64 / 2 of the value
  CHECK(r.interval->second - r.interval->first <=
        rat_from_string("1/36893488147419103232"));  // 2^-65
  CHECK(r.decimal.substr(0, 14) == "0.728155493653");
  CHECK(r.per_coset.size() == 2);
}

TEST_CASE("fpp_of_gqp: distinct validation diagnostics") {
  auto s3 = symmetric_group(3);
  auto trivial = generate_group({Permutation::identity(3)});
  auto c2 = generate_group({perm("(1,2)", 3)});
  auto other = generate_group({perm("(1,2)", 4)});

  CHECK_THROWS_WITH_AS(fpp_of_gqp(trivial, s3), "Q must be nontrivial", precondition_error);
  CHECK_THROWS_WITH_AS(fpp_of_gqp(other, s3), "Q and P must have the same degree",
                       precondition_error);
  CHECK_THROWS_WITH_AS(fpp_of_gqp(s3, c2), "Q must be a subgroup of P", precondition_error);
  CHECK_THROWS_WITH_AS(fpp_of_gqp(c2, s3), "Q must be normal in P", precondition_error);
}

TEST_CASE("cosets of a transitive base are One exactly when every element fixes one point") {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& q : subgroup_conjugacy_classes(d)) {
      if (!is_transitive(q)) continue;
      auto p = normalizer_in_sym(q);
      for (const auto& a : cosets(p, q)) {
        auto r = classify_and_solve(derangement_profile(a));
        bool all_fix_one = true;
        for (const auto& e : a.elements())
          if (e.fixed_point_count() != 1) {
            all_fix_one = false;
            break;
          }
        if (all_fix_one) {
          CHECK(r.classification == FppClass::One);
        } else {
          CHECK(r.classification == FppClass::Zero);
        }
      }
    }
  }
}
