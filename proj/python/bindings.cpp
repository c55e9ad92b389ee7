#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "garside/braid.hpp"
#include "garside/cli.hpp"
#include "garside/dihedral.hpp"
#include "garside/order.hpp"
#include "garside/verifier.hpp"
#include "garside/word.hpp"

namespace py = pybind11;
using namespace garside;

namespace {

// A group context the Python side can hold on to.
struct PyGroup {
  std::shared_ptr<BraidContext> braid;
  std::shared_ptr<DihedralContext> dihedral;

  const ModelPtr& model() const { return braid ? braid->model : dihedral->model; }
  const DehornoyStructureSpec& spec() const { return braid ? braid->structure : dihedral->structure; }

  GroupElement parse(const std::string& w) const { return evaluate_word(parse_word(w), model()); }

  OrderChain chain(const std::string& eps) const {
    const std::size_t depth = braid ? static_cast<std::size_t>(braid->n) : 2;
    std::vector<int> e = eps.empty() ? std::vector<int>(depth, 1) : parse_epsilon(eps);
    return braid ? braid_order_chain(braid->n, e) : dihedral_order_chain(dihedral->m, e);
  }

  NormalForm positive(const std::string& w) const {
    const auto a = parse(w).to_positive();
    if (!a) throw std::invalid_argument("not a positive element: " + w);
    return *a;
  }
};

PyGroup braid_group(int n) { return {std::make_shared<BraidContext>(make_braid_context(n)), nullptr}; }
PyGroup dihedral_group(int m) {
  return {nullptr, std::make_shared<DihedralContext>(make_dihedral_context(m))};
}

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.pass();
  d["instances"] = r.instances;
  d["failures"] = r.failures.size();
  d["coverage"] = r.coverage;
  d["notes"] = r.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Garside normal forms and orders on braid and dihedral Artin groups";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TrichotomyViolation>(m, "TrichotomyViolation", PyExc_RuntimeError);

  py::class_<PyGroup>(m, "Group")
      .def_property_readonly("name", [](const PyGroup& g) { return g.model()->name(); })
      .def("normal_form", [](const PyGroup& g, const std::string& w) { return to_string(g.parse(w)); })
      .def("delta_form",
           [](const PyGroup& g, const std::string& w) {
             const DeltaForm df = delta_form(g.parse(w));
             return py::make_tuple(to_string(df.unmovable), df.power);
           })
      .def("alternating_form",
           [](const PyGroup& g, const std::string& w) {
             const AlternatingForm af = alternating_form(g.positive(w), g.spec());
             std::vector<std::string> f;
             for (const auto& x : af.factors) f.push_back(to_string(x));
             return py::make_tuple(f, af.breadth, af.depth);
           })
      .def("depth", [](const PyGroup& g, const std::string& w) { return depth(g.positive(w), g.spec()); })
      .def("sign", [](const PyGroup& g, const std::string& w) { return std::string(to_string(sign(g.parse(w), g.spec()))); })
      .def("equal", [](const PyGroup& g, const std::string& a, const std::string& b) { return g.parse(a) == g.parse(b); })
      .def(
          "compare",
          [](const PyGroup& g, const std::string& a, const std::string& b, const std::string& eps) {
            return std::string(to_string(compare(g.parse(a), g.parse(b), g.chain(eps))));
          },
          py::arg("a"), py::arg("b"), py::arg("epsilon") = "")
      .def(
          "verify",
          [](const PyGroup& g, const std::string& check, int max_len, int max_power, int samples,
             std::uint64_t seed) {
            const EnumerationBudget budget{max_len, max_power, samples, seed};
            if (check == "condA") return report_dict(check_condition_A(g.spec(), max_power));
            if (check == "condB") return report_dict(check_condition_B(g.spec(), max_len));
            if (check == "cone") return report_dict(check_cone_axioms(g.chain(""), budget));
            if (check == "lemmas")
              return report_dict(g.braid ? check_lemma_suite(*g.braid, budget)
                                         : check_lemma_suite(*g.dihedral, budget));
            if (check == "cross")
              return report_dict(g.braid ? cross_validate_signs(*g.braid, budget)
                                         : cross_validate_signs(*g.dihedral, budget));
            throw std::invalid_argument("unknown check: " + check);
          },
          py::arg("check"), py::arg("max_len") = 6, py::arg("max_power") = 4, py::arg("samples") = 1000,
          py::arg("seed") = 1);

  m.def("braid_group", &braid_group, py::arg("n"), "B_{n+1} with generators s1..sn");
  m.def("dihedral_group", &dihedral_group, py::arg("m"), "I2(m) with generators s, t");
  m.def("handle_reduction_sign", [](const PyGroup& g, const std::string& w) {
    if (!g.braid) throw std::invalid_argument("handle reduction needs a braid group");
    return std::string(to_string(handle_reduction_sign(expand_word(parse_word(w), *g.model()))));
  });
  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
