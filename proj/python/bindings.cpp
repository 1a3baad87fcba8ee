#include "flowvol/closed_forms.hpp"
#include "flowvol/ct_engine.hpp"
#include "flowvol/cyclic.hpp"
#include "flowvol/dyck.hpp"
#include "flowvol/kostant.hpp"
#include "flowvol/lidskii.hpp"
#include "flowvol/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <sstream>

namespace py = pybind11;
using namespace flowvol;

namespace {

py::int_ to_py(const Integer &x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::int_ &x) { return Integer(py::str(x).cast<std::string>()); }

NetFlow flow_for(const DirectedStepGraph &g, const std::vector<py::int_> &values) {
  std::ostringstream text;
  for (std::size_t i = 0; i < values.size(); ++i) {
    text << (i ? "," : "") << py::str(values[i]).cast<std::string>();
  }
  return parse_flow(text.str(), g);
}

LabelFilter filter_for(std::optional<int> zeros, std::optional<std::vector<int>> composition) {
  if (zeros && composition) {
    throw std::invalid_argument("zeros and composition are mutually exclusive");
  }
  if (zeros) {
    return LabelFilter::zeros(*zeros);
  }
  if (composition) {
    return LabelFilter::composition(*composition);
  }
  return LabelFilter::none();
}

template <class Words> std::vector<std::string> strings(const Words &words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto &w : words) {
    out.push_back(w.to_string());
  }
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact flow-polytope volumes, Kostant partition functions and labeled Dyck paths";

  m.def("kpf", [](const std::string &graph, const std::vector<py::int_> &flow) {
    const auto g = parse_graph_spec(graph);
    return to_py(kpf(g, flow_for(g, flow)));
  }, py::arg("graph"), py::arg("flow"));

  m.def("list_flows", [](const std::string &graph, const std::vector<py::int_> &flow,
                         std::size_t cap) {
    const auto g = parse_graph_spec(graph);
    return list_flows(g, flow_for(g, flow), cap);
  }, py::arg("graph"), py::arg("flow"), py::arg("cap") = 1000);

  m.def("volume", [](const std::string &graph, const std::vector<py::int_> &flow) {
    const auto g = parse_graph_spec(graph);
    return to_py(volume(g, flow_for(g, flow)));
  }, py::arg("graph"), py::arg("flow"));

  m.def("ehrhart", [](const std::string &graph, int k) {
    return to_py(ehrhart_like(parse_graph_spec(graph), k));
  }, py::arg("graph"), py::arg("k"));

  m.def("ehrhart_fit", [](const std::string &graph, int k_max) {
    std::vector<std::pair<py::int_, py::int_>> out;
    const RationalPolynomial poly = ehrhart_fit(parse_graph_spec(graph), k_max);
    for (int i = 0; i <= poly.degree(); ++i) {
      const Rational &c = poly.coefficients[static_cast<std::size_t>(i)];
      out.emplace_back(to_py(c.get_num()), to_py(c.get_den()));
    }
    return out;
  }, py::arg("graph"), py::arg("k_max"));

  m.def("ehrhart_ps_closed", [](int n, int k) { return to_py(ehrhart_ps_closed(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("ehrhart_car_closed", [](int n, int k) { return to_py(ehrhart_car_closed(n, k)); },
        py::arg("n"), py::arg("k"));

  m.def("ct_evaluate", [](const std::string &expr, const std::string &method) {
    const CTExpression e = CTExpression::parse(expr);
    if (method == "constraint") {
      return to_py(evaluate(e));
    }
    if (method == "series") {
      return to_py(evaluate_series_auto(e));
    }
    throw std::invalid_argument("method must be constraint or series");
  }, py::arg("expr"), py::arg("method") = "constraint");
  m.def("ps_ct_expression", [](int n, int k) { return ps_ct_expression(n, k).to_string(); },
        py::arg("n"), py::arg("k"));
  m.def("car_ct_expression", [](int n, int k) { return car_ct_expression(n, k).to_string(); },
        py::arg("n"), py::arg("k"));

  m.def("count_ld", [](int n, int k, std::optional<int> zeros,
                       std::optional<std::vector<int>> composition) {
    return to_py(count_ld(n, k, filter_for(zeros, std::move(composition))));
  }, py::arg("n"), py::arg("k"), py::arg("zeros") = py::none(),
     py::arg("composition") = py::none());
  m.def("enumerate_ld", [](int n, int k, std::optional<int> zeros,
                           std::optional<std::vector<int>> composition) {
    return strings(enumerate_ld(n, k, filter_for(zeros, std::move(composition))));
  }, py::arg("n"), py::arg("k"), py::arg("zeros") = py::none(),
     py::arg("composition") = py::none());
  m.def("count_dld", [](int n, int k) { return to_py(count_dld(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("enumerate_dld", [](int n, int k) { return strings(enumerate_dld(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("count_prefixes", [](int n, int i, int k, const std::vector<int> &composition) {
    return to_py(count_prefixes(n, i, k, composition));
  }, py::arg("n"), py::arg("i"), py::arg("k"), py::arg("composition"));
  m.def("enumerate_prefixes", [](int n, int i, int k, const std::vector<int> &composition) {
    return strings(enumerate_prefixes(n, i, k, composition));
  }, py::arg("n"), py::arg("i"), py::arg("k"), py::arg("composition"));

  m.def("ind", [](const std::string &word, int k) { return ind(ExtendedWord::parse(word, k)); },
        py::arg("word"), py::arg("k"));
  m.def("shift", [](const std::string &word, int k) {
    return shift(ExtendedWord::parse(word, k)).to_string();
  }, py::arg("word"), py::arg("k"));
  m.def("project", [](const std::string &word, int k) {
    const Projection p = project(ExtendedWord::parse(word, k));
    return std::make_pair(p.word.to_string(), p.shifts);
  }, py::arg("word"), py::arg("k"));

  m.def("volume_identity", [](const std::string &id, int n, int m_, const py::int_ &a,
                              const py::int_ &b, const py::int_ &c, const py::int_ &d) {
    const VolumeParams p{n, m_, from_py(a), from_py(b), from_py(c), from_py(d)};
    const auto &ps = ps_volume_ids();
    const bool is_ps = std::find(ps.begin(), ps.end(), id) != ps.end();
    const VolumeInstance inst = is_ps ? ps_volume_instance(id, p) : car_volume_instance(id, p);
    const Integer closed = is_ps ? ps_volume_closed(id, p) : car_volume_closed(id, p);
    return std::make_pair(to_py(volume(inst.graph, inst.flow)), to_py(closed));
  }, py::arg("id"), py::arg("n"), py::arg("m") = 1, py::arg("a") = 1, py::arg("b") = 1,
     py::arg("c") = 1, py::arg("d") = 1);

  m.def("suite_names", &suite_names);
  m.def("verify_json", [](const std::string &suite, std::optional<int> max_n,
                          std::optional<int> max_k, unsigned workers) {
    VerifyOptions o;
    o.max_n = max_n;
    o.max_k = max_k;
    o.workers = workers;
    VerificationReport report;
    {
      py::gil_scoped_release release;
      report = run_verification(suite, o);
    }
    return render_json(report);
  }, py::arg("suite"), py::arg("max_n") = py::none(), py::arg("max_k") = py::none(),
     py::arg("workers") = 1);
}
