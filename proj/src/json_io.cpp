#include "treefpp/json_io.hpp"

#include "treefpp/errors.hpp"

namespace treefpp {

namespace {

std::string int_str(const Int& v) { return v.get_str(); }
Int int_from(const Json& j) { return Int(j.get<std::string>()); }

Json rat_json(const Rat& q) { return rat_to_string(q); }
Rat rat_from(const Json& j) { return rat_from_string(j.get<std::string>()); }

FppClass fpp_class_from(const std::string& s) {
  if (s == "Zero") return FppClass::Zero;
  if (s == "One") return FppClass::One;
  if (s == "Algebraic") return FppClass::Algebraic;
  throw parse_error("unknown FPP classification '" + s + "'");
}

Tfg tfg_from(const std::string& s) {
  if (s == "Yes") return Tfg::Yes;
  if (s == "No") return Tfg::No;
  if (s == "Undetermined") return Tfg::Undetermined;
  throw parse_error("unknown finite-generation tag '" + s + "'");
}

Json perm_list(const std::vector<Permutation>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(to_cycle_string(p));
  return out;
}

std::vector<Permutation> perm_list_from(const Json& j, int degree) {
  std::vector<Permutation> out;
  for (const auto& item : j) out.push_back(parse_permutation(item.get<std::string>(), degree));
  return out;
}

}  // namespace

Json to_json(const Permutation& p) { return to_cycle_string(p); }

Permutation permutation_from_json(const Json& j, int degree) {
  return parse_permutation(j.get<std::string>(), degree);
}

Json to_json(const PermSet& s) {
  Json j;
  j["degree"] = s.degree();
  j["kind"] = to_string(s.kind());
  switch (s.kind()) {
    case SetKind::Group:
      j["generators"] = perm_list(s.generators());
      break;
    case SetKind::Coset:
      j["representative"] = to_cycle_string(s.representative());
      j["base_generators"] = perm_list(s.base_group().generators());
      break;
    case SetKind::ArbitrarySet:
      j["elements"] = perm_list(s.elements());
      break;
  }
  j["order"] = s.size();
  return j;
}

PermSet permset_from_json(const Json& j) {
  const int degree = j.at("degree").get<int>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "group") return generate_group(perm_list_from(j.at("generators"), degree));
  if (kind == "coset") {
    auto base = std::make_shared<const PermSet>(
        generate_group(perm_list_from(j.at("base_generators"), degree)));
    return PermSet::make_coset(permutation_from_json(j.at("representative"), degree),
                               std::move(base));
  }
  if (kind == "set") return PermSet::make_set(perm_list_from(j.at("elements"), degree));
  throw parse_error("unknown permutation-set kind '" + kind + "'");
}

Json to_json(const DerangementProfile& p) {
  return Json{{"degree", p.degree}, {"counts", p.counts}, {"total", p.total}};
}

DerangementProfile profile_from_json(const Json& j) {
  DerangementProfile p;
  p.degree = j.at("degree").get<int>();
  p.counts = j.at("counts").get<std::vector<long long>>();
  p.total = j.at("total").get<long long>();
  return p;
}

Json to_json(const CharPoly& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(rat_json(c));
  return Json{{"degree_bound", f.degree_bound},
              {"coefficients", coeffs},
              {"source_total", f.source_total}};
}

CharPoly charpoly_from_json(const Json& j) {
  CharPoly f;
  f.degree_bound = j.at("degree_bound").get<int>();
  for (const auto& c : j.at("coefficients")) f.coeffs.push_back(rat_from(c));
  f.source_total = j.at("source_total").get<long long>();
  return f;
}

Json to_json(const BurnsideCheck& b) {
  Json j;
  j["mean"] = rat_json(b.mean);
  j["predicted"] = b.predicted ? Json(rat_json(*b.predicted)) : Json(nullptr);
  j["agrees"] = b.agrees ? Json(*b.agrees) : Json(nullptr);
  return j;
}

BurnsideCheck burnside_from_json(const Json& j) {
  BurnsideCheck b;
  b.mean = rat_from(j.at("mean"));
  if (!j.at("predicted").is_null()) b.predicted = rat_from(j.at("predicted"));
  if (!j.at("agrees").is_null()) b.agrees = j.at("agrees").get<bool>();
  return b;
}

Json to_json(const FppResult& r) {
  Json j;
  j["classification"] = to_string(r.classification);
  if (r.defining_polynomial) {
    Json coeffs = Json::array();
    for (const auto& c : *r.defining_polynomial) coeffs.push_back(int_str(c));
    j["defining_polynomial"] = coeffs;
  } else {
    j["defining_polynomial"] = nullptr;
  }
  if (r.interval) {
    j["isolating_interval"] =
        Json{{"lo", rat_json(r.interval->first)}, {"hi", rat_json(r.interval->second)}};
  } else {
    j["isolating_interval"] = nullptr;
  }
  j["decimal"] = r.decimal;
  j["precision_bits"] = r.precision_bits;
  j["exact"] = r.exact ? Json(rat_json(*r.exact)) : Json(nullptr);
  if (!r.per_coset.empty()) {
    j["degree"] = r.per_coset.front().representative.degree();
    Json per = Json::array();
    for (const auto& c : r.per_coset)
      per.push_back(Json{{"representative", to_cycle_string(c.representative)},
                         {"fpp", to_json(c.result)}});
    j["per_coset"] = per;
  }
  return j;
}

namespace {

FppResult fpp_from_json_at_degree(const Json& j, int degree) {
  FppResult r;
  r.classification = fpp_class_from(j.at("classification").get<std::string>());
  if (!j.at("defining_polynomial").is_null()) {
    std::vector<Int> coeffs;
    for (const auto& c : j.at("defining_polynomial")) coeffs.push_back(int_from(c));
    r.defining_polynomial = std::move(coeffs);
  }
  if (!j.at("isolating_interval").is_null())
    r.interval = std::make_pair(rat_from(j.at("isolating_interval").at("lo")),
                                rat_from(j.at("isolating_interval").at("hi")));
  r.decimal = j.at("decimal").get<std::string>();
  r.precision_bits = j.at("precision_bits").get<unsigned>();
  if (!j.at("exact").is_null()) r.exact = rat_from(j.at("exact"));
  if (j.contains("per_coset")) {
    for (const auto& c : j.at("per_coset"))
      r.per_coset.push_back(CosetFpp{permutation_from_json(c.at("representative"), degree),
                                     fpp_from_json_at_degree(c.at("fpp"), degree)});
  }
  return r;
}

}  // namespace

FppResult fpp_from_json(const Json& j) {
  return fpp_from_json_at_degree(j, j.contains("degree") ? j.at("degree").get<int>() : 2);
}

Json to_json(const GqpReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["order_q"] = r.order_q;
  j["order_p"] = r.order_p;
  j["index"] = r.index;
  j["level_transitive"] = r.level_transitive;
  j["hausdorff"] = Json{{"log_numerator", int_str(r.hausdorff_log_num)},
                        {"log_denominator", int_str(r.hausdorff_log_den)},
                        {"decimal", r.hausdorff_decimal}};
  j["finite_type_depth"] = r.finite_type_depth;
  j["topologically_finitely_generated"] = to_string(r.tfg);
  j["q_perfect"] = r.q_perfect;
  j["just_infinite"] = r.just_infinite;
  j["strongly_complete"] = r.strongly_complete;
  j["classification_basis"] = "depth and the just-infinite/strongly-complete flags follow "
                              "the finite-type classification formulas (Q = Q' criterion), "
                              "not a computational certificate";
  j["fpp"] = to_json(r.fpp);
  return j;
}

GqpReport gqp_report_from_json(const Json& j) {
  GqpReport r;
  r.degree = j.at("degree").get<int>();
  r.order_q = j.at("order_q").get<long long>();
  r.order_p = j.at("order_p").get<long long>();
  r.index = j.at("index").get<long long>();
  r.level_transitive = j.at("level_transitive").get<bool>();
  r.hausdorff_log_num = int_from(j.at("hausdorff").at("log_numerator"));
  r.hausdorff_log_den = int_from(j.at("hausdorff").at("log_denominator"));
  r.hausdorff_decimal = j.at("hausdorff").at("decimal").get<std::string>();
  r.finite_type_depth = j.at("finite_type_depth").get<int>();
  r.tfg = tfg_from(j.at("topologically_finitely_generated").get<std::string>());
  r.q_perfect = j.at("q_perfect").get<bool>();
  r.just_infinite = j.at("just_infinite").get<bool>();
  r.strongly_complete = j.at("strongly_complete").get<bool>();
  r.fpp = fpp_from_json_at_degree(j.at("fpp"), r.degree);
  return r;
}

Json to_json(const GoodCosetFinding& f) {
  return Json{{"degree", f.degree},
              {"group_q", to_json(f.group_q)},
              {"normalizer_p", to_json(f.normalizer_p)},
              {"coset_representative", to_cycle_string(f.coset_representative)},
              {"witness_fixed_counts", f.witness_fixed_counts}};
}

GoodCosetFinding finding_from_json(const Json& j) {
  const int degree = j.at("degree").get<int>();
  return GoodCosetFinding{degree, permset_from_json(j.at("group_q")),
                          permset_from_json(j.at("normalizer_p")),
                          permutation_from_json(j.at("coset_representative"), degree),
                          j.at("witness_fixed_counts").get<std::vector<int>>()};
}

Json to_json(const OracleReport& r) {
  return Json{{"degree", r.degree},
              {"level", r.level},
              {"sigma", int_str(r.sigma)},
              {"f_brute", int_str(r.f_brute)},
              {"f_recursion", int_str(r.f_recursion)},
              {"p", rat_json(r.p)},
              {"agrees", r.agrees}};
}

OracleReport oracle_from_json(const Json& j) {
  OracleReport r;
  r.degree = j.at("degree").get<int>();
  r.level = j.at("level").get<int>();
  r.sigma = int_from(j.at("sigma"));
  r.f_brute = int_from(j.at("f_brute"));
  r.f_recursion = int_from(j.at("f_recursion"));
  r.p = rat_from(j.at("p"));
  r.agrees = j.at("agrees").get<bool>();
  return r;
}

Json to_json(const GqpOracleReport& r) {
  Json per = Json::array();
  for (const auto& [rep, rr] : r.per_coset)
    per.push_back(Json{{"representative", to_cycle_string(rep)}, {"report", to_json(rr)}});
  return Json{{"per_coset", per},
              {"sigma_total", int_str(r.sigma_total)},
              {"f_total", int_str(r.f_total)},
              {"p", rat_json(r.p)}};
}

GqpOracleReport gqp_oracle_from_json(const Json& j) {
  GqpOracleReport r;
  for (const auto& c : j.at("per_coset")) {
    OracleReport rr = oracle_from_json(c.at("report"));
    r.per_coset.emplace_back(permutation_from_json(c.at("representative"), rr.degree), rr);
  }
  r.sigma_total = int_from(j.at("sigma_total"));
  r.f_total = int_from(j.at("f_total"));
  r.p = rat_from(j.at("p"));
  return r;
}

Json to_json(const McEstimate& m) {
  return Json{{"samples", m.samples},   {"survivors", m.survivors},
              {"estimate", m.estimate}, {"stderr", m.standard_error},
              {"seed", m.seed},         {"depth", m.depth},
              {"cap", m.cap}};
}

McEstimate mc_from_json(const Json& j) {
  McEstimate m;
  m.samples = j.at("samples").get<std::uint64_t>();
  m.survivors = j.at("survivors").get<std::uint64_t>();
  m.estimate = j.at("estimate").get<double>();
  m.standard_error = j.at("stderr").get<double>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.depth = j.at("depth").get<int>();
  m.cap = j.at("cap").get<std::uint64_t>();
  return m;
}

Json to_json(const Glnf2Count& c) { return Json{{"good", c.good}, {"total", c.total}}; }

Glnf2Count glnf2_from_json(const Json& j) {
  return Glnf2Count{j.at("good").get<std::uint64_t>(), j.at("total").get<std::uint64_t>()};
}

Json to_json(const Construction1Result& r) {
  return Json{{"degree", r.degree},
              {"subgroup_i", r.subgroup_i},
              {"i_is_proper", r.i_is_proper},
              {"denominator", "order of I (totient(d) when I is the full unit group)"},
              {"closed_form", rat_json(r.closed_form)},
              {"report", to_json(r.report)}};
}

Construction1Result construction1_from_json(const Json& j) {
  Construction1Result r;
  r.degree = j.at("degree").get<int>();
  r.subgroup_i = j.at("subgroup_i").get<std::vector<std::uint64_t>>();
  r.i_is_proper = j.at("i_is_proper").get<bool>();
  r.closed_form = rat_from(j.at("closed_form"));
  r.report = gqp_report_from_json(j.at("report"));
  return r;
}

Json to_json(const Construction2Result& r) {
  Json j{{"n", r.n},
         {"r", r.r},
         {"degree", r.degree},
         {"gl_count", to_json(r.gl)},
         {"fpp", rat_json(r.fpp)}};
  j["report"] = r.report ? to_json(*r.report) : Json(nullptr);
  return j;
}

Construction2Result construction2_from_json(const Json& j) {
  Construction2Result r;
  r.n = j.at("n").get<int>();
  r.r = j.at("r").get<std::uint64_t>();
  r.degree = j.at("degree").get<int>();
  r.gl = glnf2_from_json(j.at("gl_count"));
  r.fpp = rat_from(j.at("fpp"));
  if (!j.at("report").is_null()) r.report = gqp_report_from_json(j.at("report"));
  return r;
}

Json to_json(const GaloisUnicriticalResult& r) {
  return Json{{"degree", r.degree},
              {"fpp", rat_json(r.fpp)},
              {"hausdorff", Json{{"log_numerator", int_str(r.hausdorff_log_num)},
                                 {"log_denominator", int_str(r.hausdorff_log_den)},
                                 {"decimal", r.hausdorff_decimal}}}};
}

GaloisUnicriticalResult galois_from_json(const Json& j) {
  GaloisUnicriticalResult r;
  r.degree = j.at("degree").get<int>();
  r.fpp = rat_from(j.at("fpp"));
  r.hausdorff_log_num = int_from(j.at("hausdorff").at("log_numerator"));
  r.hausdorff_log_den = int_from(j.at("hausdorff").at("log_denominator"));
  r.hausdorff_decimal = j.at("hausdorff").at("decimal").get<std::string>();
  return r;
}

}  // namespace treefpp
