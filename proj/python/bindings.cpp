#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "distlearn/checkpoint.hpp"
#include "distlearn/cli.hpp"
#include "distlearn/diagnostics.hpp"
#include "distlearn/experiment.hpp"
#include "distlearn/gradcheck.hpp"
#include "distlearn/objective.hpp"
#include "distlearn/stats.hpp"

namespace py = pybind11;
using namespace distlearn;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const Array& a) {
  if (a.ndim() != 2) throw Error(ErrorCode::kShapeMismatch, "expected a 2-D array");
  const auto rows = static_cast<std::size_t>(a.shape(0)), cols = static_cast<std::size_t>(a.shape(1));
  return Matrix(rows, cols, std::vector<double>(a.data(), a.data() + rows * cols));
}

Array to_array(const Matrix& m) {
  Array out({m.rows(), m.cols()});
  std::copy(m.values().begin(), m.values().end(), out.mutable_data());
  return out;
}

std::vector<Label> to_labels(const std::vector<int>& v) {
  std::vector<Label> out;
  for (int l : v) {
    if (l < 0 || l > 255) throw Error(ErrorCode::kLabelOutOfRange, "label out of range");
    out.push_back(static_cast<Label>(l));
  }
  return out;
}

py::dict test_dict(const StatTestResult& r) {
  py::dict d;
  d["t"] = r.t_statistic;
  d["df"] = r.degrees_of_freedom;
  d["p"] = r.p_value;
  d["d"] = r.cohens_d;
  d["paired"] = r.paired;
  return d;
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bindings for the distlearn C++ core";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object cls = py::reinterpret_borrow<py::object>(error.ptr());
      py::object exc = cls(std::string(to_string(e.code())) + ": " + e.what());
      exc.attr("code") = to_string(e.code());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("canonical_model_names", &canonical_model_names);

  py::class_<Model>(m, "Model")
      .def(py::init([](const std::string& name, std::uint64_t seed, std::size_t hidden_width) {
             Rng rng(seed);
             return build_model(name, rng, hidden_width);
           }),
           py::arg("name"), py::arg("seed") = 0, py::arg("hidden_width") = 128)
      .def_property_readonly("name", [](const Model& self) { return self.spec().name; })
      .def_property_readonly("layers", [](const Model& self) {
        std::vector<std::string> out;
        for (const auto& l : self.layers()) out.emplace_back(layer_kind_name(l.kind()));
        return out;
      })
      .def("parameter_count", &Model::parameter_count)
      .def("flat_parameters", [](const Model& self) {
        const auto v = self.flat_parameters();
        return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
      })
      .def("forward", [](const Model& self, const Array& x) {
        return to_array(self.forward_prefix(to_matrix(x), self.layers().size()));
      })
      .def("forward_prefix", [](const Model& self, const Array& x, std::size_t stop) {
        return to_array(self.forward_prefix(to_matrix(x), stop));
      })
      .def("save", [](const Model& self, const std::filesystem::path& path, std::uint64_t seed) {
        save_checkpoint(path, self, seed);
      }, py::arg("path"), py::arg("seed") = 0)
      .def_static("load", [](const std::filesystem::path& path) { return load_checkpoint(path).model; });

  m.def("cross_entropy", [](const Array& logits, const std::vector<int>& labels) {
    const LossResult r = cross_entropy(to_matrix(logits), to_labels(labels));
    return py::make_tuple(r.loss, to_array(r.d_logits));
  });

  m.def("two_sample_t", [](const std::vector<double>& a, const std::vector<double>& b) {
    return test_dict(two_sample_t(a, b));
  });
  m.def("paired_t", [](const std::vector<double>& a, const std::vector<double>& b) {
    return test_dict(paired_t(a, b));
  });
  m.def("cohens_d", [](const std::vector<double>& a, const std::vector<double>& b) { return cohens_d(a, b); });

  m.def("dead_node_fraction", [](const Model& model, const Array& x, double threshold) {
    const auto s = dead_node_stats(model, to_matrix(x), threshold);
    return py::make_tuple(s.fraction_inactive, s.fraction_rarely_active);
  }, py::arg("model"), py::arg("inputs"), py::arg("rare_threshold") = 0.05);

  m.def("gradcheck", [] {
    py::list out;
    for (const auto& r : gradcheck_suite()) out.append(py::make_tuple(r.subject, r.max_error(), r.passed()));
    return out;
  });

  m.def("parse_experiment", [](const std::string& text) {
    const ExperimentFile f = parse_experiment(text);
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& r : f.runs) runs.push_back(r);
    return json_to_py({{"name", f.name}, {"paired_tests", f.paired_tests}, {"runs", runs}});
  });

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "distlearn");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
