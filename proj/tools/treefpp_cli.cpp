// treefpp — exact fixed-point proportions and Hausdorff dimensions of
// groups acting on regular rooted trees, with enumeration and Monte Carlo
// oracles. Exit codes: 0 success, 2 invalid input, 3 budget exceeded,
// 4 mathematical precondition violated.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "treefpp/branch.hpp"
#include "treefpp/constructions.hpp"
#include "treefpp/errors.hpp"
#include "treefpp/json_io.hpp"
#include "treefpp/oracle.hpp"
#include "treefpp/solver.hpp"
#include "treefpp/spectrum.hpp"
#include "treefpp/subgroups.hpp"

using namespace treefpp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitPrecondition = 4;

enum class Format { Json, Csv, Text };

struct SetSpec {
  std::vector<std::string> set_perms;
  std::vector<std::string> group_gens;
  std::string coset_rep;
  std::vector<std::string> coset_base;
  int degree = 0;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--set", set_perms, "explicit permutations forming a plain set");
    cmd->add_option("--group", group_gens, "generators of a group");
    cmd->add_option("--coset", coset_rep, "coset representative (needs --base)");
    cmd->add_option("--base", coset_base, "generators of the coset's base group");
    cmd->add_option("-d,--degree", degree, "degree of the permutations")->required();
  }

  PermSet build() const {
    const int modes = !set_perms.empty() + !group_gens.empty() + !coset_rep.empty();
    if (modes != 1)
      throw parse_error("specify exactly one of --set, --group, or --coset/--base");
    if (!set_perms.empty()) {
      std::vector<Permutation> elems;
      for (const auto& t : set_perms) elems.push_back(parse_permutation(t, degree));
      return PermSet::make_set(std::move(elems));
    }
    if (!group_gens.empty()) return generate_group(group_gens, degree);
    if (coset_base.empty()) throw parse_error("--coset requires --base generators");
    auto base = std::make_shared<const PermSet>(generate_group(coset_base, degree));
    return PermSet::make_coset(parse_permutation(coset_rep, degree), std::move(base));
  }

  Json describe() const {
    Json j;
    j["degree"] = degree;
    if (!set_perms.empty()) j["set"] = set_perms;
    if (!group_gens.empty()) j["group"] = group_gens;
    if (!coset_rep.empty()) {
      j["coset"] = coset_rep;
      j["base"] = coset_base;
    }
    return j;
  }
};

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json envelope(const std::string& command, Json inputs, Json result, const std::string& formula) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  j["provenance"] = Json{{"paper_formula_used", formula}};
  return j;
}

std::uint64_t default_oracle_budget() {
  if (const char* env = std::getenv("TREEFPP_ORACLE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw parse_error("TREEFPP_ORACLE_BUDGET must be a positive integer");
  }
  return kDefaultEnumerationBudget;
}

struct SurveyRow {
  int class_id;
  std::string generators;
  long long order;
  bool transitive;
  Rat mean;
  FppResult fpp;
};

std::vector<SurveyRow> run_survey(int degree, unsigned precision_bits) {
  std::vector<SurveyRow> rows;
  int id = 1;
  for (const auto& cls : subgroup_conjugacy_classes(degree)) {
    SurveyRow row{id++, "", cls.size(), is_transitive(cls), mean_fixed_points(cls),
                  classify_and_solve(derangement_profile(cls), precision_bits)};
    for (const auto& g : cls.generators()) {
      if (!row.generators.empty()) row.generators += ' ';
      row.generators += to_cycle_string(g);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int run(int argc, char** argv) {
  CLI::App app{"exact fixed-point proportions of tree automorphism groups"};
  app.require_subcommand(1);

  std::string format_name;
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  unsigned precision_bits = kDefaultPrecisionBits;
  app.add_option("--precision-bits", precision_bits,
                 "bracket width 2^-bits for algebraic FPPs");

  auto pick_format = [&](Format fallback) {
    if (format_name == "json") return Format::Json;
    if (format_name == "csv") return Format::Csv;
    if (format_name == "text") return Format::Text;
    return fallback;
  };

  auto* fpp_cmd = app.add_subcommand("fpp", "FPP of an iterated wreath product W_S");
  SetSpec fpp_spec;
  fpp_spec.add_options(fpp_cmd);

  auto* survey_cmd = app.add_subcommand("survey", "FPP of every subgroup class of Sym(d)");
  int survey_d = 0;
  survey_cmd->add_option("-d,--degree", survey_d, "degree (2..6)")->required();

  auto* curve_cmd = app.add_subcommand("curve", "sample the characteristic polynomial on [0,1]");
  SetSpec curve_spec;
  curve_spec.add_options(curve_cmd);
  int curve_points = 100;
  curve_cmd->add_option("--points", curve_points, "number of subintervals (>= 2)");

  auto* gqp_cmd = app.add_subcommand("gqp", "analyze the coset-constrained group G_Q^P");
  std::vector<std::string> gqp_q, gqp_p;
  int gqp_d = 0;
  gqp_cmd->add_option("--q", gqp_q, "generators of Q")->required();
  gqp_cmd->add_option("--p", gqp_p, "generators of P")->required();
  gqp_cmd->add_option("-d,--degree", gqp_d, "degree")->required();

  auto* search_cmd = app.add_subcommand("search", "good cosets over all transitive classes");
  int search_d = 0;
  search_cmd->add_option("-d,--degree", search_d, "degree (2..6)")->required();

  auto* c1_cmd = app.add_subcommand("construction1", "affine family mod d");
  int c1_d = 0;
  std::vector<std::uint64_t> c1_i;
  c1_cmd->add_option("-d,--degree", c1_d, "modulus d")->required();
  c1_cmd->add_option("--I", c1_i, "generators of the unit subgroup I (default: full)");

  auto* c2_cmd = app.add_subcommand("construction2", "holomorph family for d = 2^n r");
  int c2_n = 0;
  std::uint64_t c2_r = 1;
  bool c2_explicit = false;
  c2_cmd->add_option("--n", c2_n, "exponent of 2")->required();
  c2_cmd->add_option("--r", c2_r, "odd part")->required();
  c2_cmd->add_flag("--explicit", c2_explicit, "also build the holomorph explicitly (d <= 12)");

  auto* gl_cmd = app.add_subcommand("glcount", "matrices A in GL_n(F_2) with A-I invertible");
  int gl_n = 0;
  bool gl_heavy = false;
  unsigned gl_workers = 0;
  gl_cmd->add_option("--n", gl_n, "dimension (1..5; 6 needs --allow-heavy)")->required();
  gl_cmd->add_flag("--allow-heavy", gl_heavy, "permit the 2^36 enumeration at n = 6");
  gl_cmd->add_option("--workers", gl_workers, "worker threads (0 = hardware)");

  auto* galois_cmd = app.add_subcommand("galois", "closed forms for the unicritical family");
  int galois_d = 0;
  galois_cmd->add_option("-d,--degree", galois_d, "polynomial degree d")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive level-n portrait enumeration");
  SetSpec oracle_spec;
  oracle_spec.add_options(oracle_cmd);
  int oracle_n = 1;
  std::uint64_t oracle_budget = 0;
  oracle_cmd->add_option("-n,--level", oracle_n, "tree level")->required();
  oracle_cmd->add_option("--budget", oracle_budget,
                         "portrait budget (default $TREEFPP_ORACLE_BUDGET or 10^8)");

  auto* goracle_cmd =
      app.add_subcommand("gqp-oracle", "per-coset portrait enumeration for G_Q^P");
  std::vector<std::string> goracle_q, goracle_p;
  int goracle_d = 0, goracle_n = 1;
  std::uint64_t goracle_budget = 0;
  goracle_cmd->add_option("--q", goracle_q, "generators of Q")->required();
  goracle_cmd->add_option("--p", goracle_p, "generators of P")->required();
  goracle_cmd->add_option("-d,--degree", goracle_d, "degree")->required();
  goracle_cmd->add_option("-n,--level", goracle_n, "tree level")->required();
  goracle_cmd->add_option("--budget", goracle_budget, "portrait budget per coset");

  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo branching-process estimate of FPP");
  SetSpec mc_spec;
  mc_spec.add_options(mc_cmd);
  int mc_depth = 20;
  std::uint64_t mc_samples = 100000, mc_seed = 1, mc_cap = 0;
  unsigned mc_workers = 0;
  mc_cmd->add_option("--depth", mc_depth, "survival depth")->required();
  mc_cmd->add_option("--samples", mc_samples, "number of samples")->required();
  mc_cmd->add_option("--seed", mc_seed, "random seed");
  mc_cmd->add_option("--cap", mc_cap, "frontier cap (default d^12)");
  mc_cmd->add_option("--workers", mc_workers, "worker threads (0 = hardware)");

  app.parse(argc, argv);

  if (fpp_cmd->parsed()) {
    auto result = classify_and_solve(derangement_profile(fpp_spec.build()), precision_bits);
    if (pick_format(Format::Json) == Format::Text) {
      std::cout << "classification: " << to_string(result.classification) << "\n"
                << "decimal: " << result.decimal << "\n";
      if (result.exact) std::cout << "exact: " << rat_to_string(*result.exact) << "\n";
    } else {
      emit(to_json(result));
    }
    return kExitOk;
  }

  if (survey_cmd->parsed()) {
    auto rows = run_survey(survey_d, precision_bits);
    Format f = pick_format(Format::Csv);
    if (f == Format::Csv || f == Format::Text) {
      const char sep = (f == Format::Csv) ? ',' : '\t';
      std::cout << "class-id" << sep << "generators" << sep << "order" << sep << "transitive"
                << sep << "mean-fixed-points" << sep << "fpp-class" << sep << "fpp-decimal\n";
      for (const auto& r : rows)
        std::cout << r.class_id << sep << csv_quote(r.generators) << sep << r.order << sep
                  << (r.transitive ? "true" : "false") << sep << rat_to_string(r.mean) << sep
                  << to_string(r.fpp.classification) << sep << r.fpp.decimal << "\n";
    } else {
      Json rows_json = Json::array();
      for (const auto& r : rows)
        rows_json.push_back(Json{{"class_id", r.class_id},
                                 {"generators", r.generators},
                                 {"order", r.order},
                                 {"transitive", r.transitive},
                                 {"mean_fixed_points", rat_to_string(r.mean)},
                                 {"fpp", to_json(r.fpp)}});
      emit(envelope("survey", Json{{"degree", survey_d}}, std::move(rows_json),
                    "FPP(W_S) is the largest fixed point of f_S in [0,1]"));
    }
    return kExitOk;
  }

  if (curve_cmd->parsed()) {
    if (curve_points < 2) throw parse_error("--points must be >= 2");
    auto f = characteristic_polynomial(derangement_profile(curve_spec.build()));
    const std::size_t digits = decimal_digits_for_bits(precision_bits);
    std::cout << "x,f\n";
    for (int i = 0; i <= curve_points; ++i) {
      Rat x = make_rat(Int(i), Int(curve_points));
      std::cout << decimal_trimmed(x, digits) << "," << decimal_trimmed(eval(f, x), digits)
                << "\n";
    }
    return kExitOk;
  }

  if (gqp_cmd->parsed()) {
    auto report = analyze_gqp(gqp_q, gqp_p, gqp_d, precision_bits);
    emit(envelope("gqp",
                  Json{{"degree", gqp_d},
                       {"q", gqp_q},
                       {"p", gqp_p},
                       {"precision_bits", precision_bits}},
                  to_json(report),
                  "FPP(G_Q^P) = (1/[P:Q]) sum_{A in P/Q} FPP(W_A); "
                  "H = log|Q|/log(d!); depth 2 unless Q = P"));
    return kExitOk;
  }

  if (search_cmd->parsed()) {
    Json findings = Json::array();
    for (const auto& f : search_good_cosets(search_d)) findings.push_back(to_json(f));
    emit(envelope("search", Json{{"degree", search_d}}, std::move(findings),
                  "a coset is good when every element fixes exactly one point; "
                  "P = N_Sym(d)(Q) over all transitive classes Q"));
    return kExitOk;
  }

  if (c1_cmd->parsed()) {
    auto result = construction1(
        c1_d, c1_i.empty() ? std::nullopt : std::optional<std::vector<std::uint64_t>>(c1_i),
        precision_bits);
    Json inputs{{"degree", c1_d}};
    inputs["I"] = c1_i.empty() ? Json("full unit group") : Json(c1_i);
    emit(envelope("construction1", std::move(inputs), to_json(result),
                  "FPP = #{a in I : gcd(a-1,d) = 1} / |I|"));
    return kExitOk;
  }

  if (c2_cmd->parsed()) {
    auto result = construction2(c2_n, c2_r, c2_explicit, precision_bits);
    emit(envelope("construction2", Json{{"n", c2_n}, {"r", c2_r}, {"explicit", c2_explicit}},
                  to_json(result),
                  "FPP = (#{A in GL_n(F_2) : A-I invertible}/|GL_n(F_2)|) "
                  "prod_{p|r} (p-2)/(p-1)"));
    return kExitOk;
  }

  if (gl_cmd->parsed()) {
    auto result = glnf2_count(gl_n, gl_heavy, gl_workers);
    emit(envelope("glcount", Json{{"n", gl_n}}, to_json(result),
                  "exhaustive rank enumeration of all 2^(n^2) bit matrices"));
    return kExitOk;
  }

  if (galois_cmd->parsed()) {
    auto result = galois_unicritical(galois_d, precision_bits);
    emit(envelope("galois", Json{{"degree", galois_d}}, to_json(result),
                  "FPP = prod_{p|d} (p-2)/(p-1) = psi(d)/totient(d); "
                  "H = log(d)/log(d!)"));
    return kExitOk;
  }

  if (oracle_cmd->parsed()) {
    std::uint64_t budget = oracle_budget ? oracle_budget : default_oracle_budget();
    auto result = brute_count(oracle_spec.build(), oracle_n, budget);
    Json inputs = oracle_spec.describe();
    inputs["level"] = oracle_n;
    inputs["budget"] = budget;
    emit(envelope("oracle", std::move(inputs), to_json(result),
                  "f_{n+1} = sum_k D_S(k) sigma_n^{d-k} (sigma_n^k - (sigma_n - f_n)^k) "
                  "vs portrait enumeration"));
    return kExitOk;
  }

  if (goracle_cmd->parsed()) {
    std::uint64_t budget = goracle_budget ? goracle_budget : default_oracle_budget();
    auto q = generate_group(goracle_q, goracle_d);
    auto p = generate_group(goracle_p, goracle_d);
    auto result = gqp_brute(q, p, goracle_n, budget);
    emit(envelope("gqp-oracle",
                  Json{{"degree", goracle_d},
                       {"q", goracle_q},
                       {"p", goracle_p},
                       {"level", goracle_n},
                       {"budget", budget}},
                  to_json(result),
                  "pi_n(G_Q^P) is the disjoint union of pi_n(W_A) over cosets A"));
    return kExitOk;
  }

  if (mc_cmd->parsed()) {
    auto result =
        mc_estimate(mc_spec.build(), mc_depth, mc_samples, mc_seed, mc_cap, mc_workers);
    Json inputs = mc_spec.describe();
    inputs["depth"] = mc_depth;
    inputs["samples"] = mc_samples;
    inputs["seed"] = mc_seed;
    inputs["cap"] = result.cap;
    emit(envelope("mc", std::move(inputs), to_json(result),
                  "survival frequency of the fixed-point frontier process; "
                  "p_{n+1} = f_S(p_n)"));
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    CLI::App dummy;
    int code = dummy.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
