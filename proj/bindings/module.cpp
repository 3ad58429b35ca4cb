#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treefpp/branch.hpp"
#include "treefpp/constructions.hpp"
#include "treefpp/errors.hpp"
#include "treefpp/json_io.hpp"
#include "treefpp/oracle.hpp"
#include "treefpp/solver.hpp"
#include "treefpp/spectrum.hpp"
#include "treefpp/subgroups.hpp"

namespace py = pybind11;
using namespace treefpp;

namespace {

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

PermSet make_set_py(const std::vector<std::string>& perms, int degree) {
  std::vector<Permutation> elems;
  for (const auto& t : perms) elems.push_back(parse_permutation(t, degree));
  return PermSet::make_set(std::move(elems));
}

PermSet make_coset_py(const std::string& rep, const std::vector<std::string>& base_gens,
                      int degree) {
  auto base = std::make_shared<const PermSet>(generate_group(base_gens, degree));
  return PermSet::make_coset(parse_permutation(rep, degree), std::move(base));
}

}  // namespace

PYBIND11_MODULE(treefpp, m) {
  m.doc() = "exact fixed-point proportions of groups acting on regular rooted trees";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string& text, int degree) {
             return parse_permutation(text, degree);
           }),
           py::arg("text"), py::arg("degree"))
      .def_property_readonly("degree", &Permutation::degree)
      .def("fixed_point_count", &Permutation::fixed_point_count)
      .def("__str__", [](const Permutation& p) { return to_cycle_string(p); })
      .def("__repr__",
           [](const Permutation& p) { return "Permutation('" + to_cycle_string(p) + "')"; })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__lt__", [](const Permutation& a, const Permutation& b) { return a < b; });

  py::class_<PermSet>(m, "PermSet")
      .def_static("set", &make_set_py, py::arg("permutations"), py::arg("degree"))
      .def_static("group",
                  [](const std::vector<std::string>& gens, int degree) {
                    return generate_group(gens, degree);
                  },
                  py::arg("generators"), py::arg("degree"))
      .def_static("coset", &make_coset_py, py::arg("representative"),
                  py::arg("base_generators"), py::arg("degree"))
      .def_property_readonly("degree", &PermSet::degree)
      .def_property_readonly("order", &PermSet::size)
      .def_property_readonly("kind", [](const PermSet& s) { return to_string(s.kind()); })
      .def("elements",
           [](const PermSet& s) {
             std::vector<std::string> out;
             for (const auto& e : s.elements()) out.push_back(to_cycle_string(e));
             return out;
           })
      .def("is_transitive", [](const PermSet& s) { return is_transitive(s); })
      .def("__len__", &PermSet::size)
      .def("__repr__", [](const PermSet& s) {
        return "PermSet(" + to_string(s.kind()) + ", degree=" + std::to_string(s.degree()) +
               ", order=" + std::to_string(s.size()) + ")";
      });

  m.def("fixed_point_count",
        [](const std::string& text, int degree) {
          return parse_permutation(text, degree).fixed_point_count();
        },
        py::arg("permutation"), py::arg("degree"));

  m.def("derangement_profile",
        [](const PermSet& s) { return to_py(to_json(derangement_profile(s))); });

  m.def("characteristic_polynomial", [](const PermSet& s) {
    return to_py(to_json(characteristic_polynomial(derangement_profile(s))));
  });

  m.def("mean_fixed_points",
        [](const PermSet& s) { return rat_to_string(mean_fixed_points(s)); });

  m.def("coset_burnside_check",
        [](const PermSet& coset) { return to_py(to_json(coset_burnside_check(coset))); });

  m.def("fpp",
        [](const PermSet& s, unsigned bits) {
          return to_py(to_json(classify_and_solve(derangement_profile(s), bits)));
        },
        py::arg("s"), py::arg("precision_bits") = kDefaultPrecisionBits);

  m.def("fpp_iterate",
        [](const PermSet& s, int n) {
          auto t = fpp_iterate(derangement_profile(s), n);
          py::dict out;
          py::list p, sigma, f;
          for (const auto& v : t.p) p.append(rat_to_string(v));
          for (const auto& v : t.sigma) sigma.append(v.get_str());
          for (const auto& v : t.f) f.append(v.get_str());
          out["p"] = p;
          out["sigma"] = sigma;
          out["f"] = f;
          return out;
        },
        py::arg("s"), py::arg("n"));

  m.def("fpp_of_gqp",
        [](const PermSet& q, const PermSet& p, unsigned bits) {
          return to_py(to_json(fpp_of_gqp(q, p, bits)));
        },
        py::arg("q"), py::arg("p"), py::arg("precision_bits") = kDefaultPrecisionBits);

  m.def("analyze_gqp",
        [](const std::vector<std::string>& q_gens, const std::vector<std::string>& p_gens,
           int degree, unsigned bits) {
          return to_py(to_json(analyze_gqp(q_gens, p_gens, degree, bits)));
        },
        py::arg("q_generators"), py::arg("p_generators"), py::arg("degree"),
        py::arg("precision_bits") = kDefaultPrecisionBits);

  m.def("subgroup_conjugacy_classes", &subgroup_conjugacy_classes, py::arg("degree"));

  m.def("search_good_cosets", [](int degree) {
    py::list out;
    for (const auto& f : search_good_cosets(degree)) out.append(to_py(to_json(f)));
    return out;
  });

  m.def("totient", &totient);
  m.def("psi", &psi);

  m.def("glnf2_count",
        [](int n, bool allow_heavy, unsigned workers) {
          auto c = glnf2_count(n, allow_heavy, workers);
          return py::make_tuple(c.good, c.total);
        },
        py::arg("n"), py::arg("allow_heavy") = false, py::arg("workers") = 0);

  m.def("witness_matrix", [](int n) {
    auto w = witness_matrix(n);
    py::list rows;
    for (int i = 0; i < w.n; ++i) {
      py::list row;
      for (int j = 0; j < w.n; ++j) row.append((w.rows[i] >> j) & 1);
      rows.append(row);
    }
    return rows;
  });

  m.def("construction1",
        [](int d, std::optional<std::vector<std::uint64_t>> i_gens, unsigned bits) {
          return to_py(to_json(construction1(d, i_gens, bits)));
        },
        py::arg("d"), py::arg("i_generators") = std::nullopt,
        py::arg("precision_bits") = kDefaultPrecisionBits);

  m.def("construction2",
        [](int n, std::uint64_t r, bool explicit_report, unsigned bits) {
          return to_py(to_json(construction2(n, r, explicit_report, bits)));
        },
        py::arg("n"), py::arg("r"), py::arg("explicit_report") = false,
        py::arg("precision_bits") = kDefaultPrecisionBits);

  m.def("galois_unicritical",
        [](int d, unsigned bits) { return to_py(to_json(galois_unicritical(d, bits))); },
        py::arg("d"), py::arg("precision_bits") = kDefaultPrecisionBits);

  m.def("brute_count",
        [](const PermSet& s, int n, std::uint64_t budget) {
          return to_py(to_json(brute_count(s, n, budget)));
        },
        py::arg("s"), py::arg("n"), py::arg("budget") = kDefaultEnumerationBudget);

  m.def("gqp_brute",
        [](const PermSet& q, const PermSet& p, int n, std::uint64_t budget) {
          return to_py(to_json(gqp_brute(q, p, n, budget)));
        },
        py::arg("q"), py::arg("p"), py::arg("n"),
        py::arg("budget") = kDefaultEnumerationBudget);

  m.def("mc_estimate",
        [](const PermSet& s, int depth, std::uint64_t samples, std::uint64_t seed,
           std::uint64_t cap, unsigned workers) {
          return to_py(to_json(mc_estimate(s, depth, samples, seed, cap, workers)));
        },
        py::arg("s"), py::arg("depth"), py::arg("samples"), py::arg("seed"),
        py::arg("cap") = 0, py::arg("workers") = 0);
}
