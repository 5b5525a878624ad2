#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "kmroots/counting.hpp"
#include "kmroots/filters.hpp"
#include "kmroots/peterson.hpp"
#include "kmroots/report_io.hpp"
#include "kmroots/sampler.hpp"

namespace py = pybind11;
using namespace kmroots;

namespace {

// Python ints are unbounded, so big values cross the boundary as decimal text.
py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>(), 10); }

Weight weight(const py::int_& c0, const py::int_& c1) { return Weight(from_py(c0), from_py(c1)); }

FilterLevel theorem_level(int theorem) {
  if (theorem == 1) return FilterLevel::Thm1;
  if (theorem == 2) return FilterLevel::Thm2;
  throw Error("theorem must be 1 or 2");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Root multiplicities and Dyck path bounds for rank-2 hyperbolic Kac-Moody algebras";

  py::register_exception<Error>(m, "KmrootsError", PyExc_ValueError);

  m.def(
      "multiplicity",
      [](const py::int_& c0, const py::int_& c1, std::int64_t r) {
        return to_py(multiplicity(weight(c0, c1), Rank2Cartan(r)));
      },
      py::arg("c0"), py::arg("c1"), py::arg("r") = 3);

  m.def(
      "root_class",
      [](const py::int_& c0, const py::int_& c1, std::int64_t r) {
        return to_string(classify(weight(c0, c1), Rank2Cartan(r)));
      },
      py::arg("c0"), py::arg("c1"), py::arg("r") = 3);

  m.def(
      "dyck_count",
      [](const py::int_& n, const py::int_& m) { return to_py(dyck_count(from_py(n), from_py(m))); },
      py::arg("n"), py::arg("m"));

  m.def(
      "kostant_count",
      [](const py::int_& c0, const py::int_& c1, std::int64_t r) {
        return to_py(kostant_count(weight(c0, c1), Rank2Cartan(r)));
      },
      py::arg("c0"), py::arg("c1"), py::arg("r") = 3);

  m.def(
      "bound",
      [](const py::int_& c0, const py::int_& c1, std::int64_t r, int theorem, unsigned threads) {
        EnumerationOptions options;
        options.threads = threads;
        const Weight w = weight(c0, c1);
        const FilterLevel level = theorem_level(theorem);
        BigInt count;
        {
          py::gil_scoped_release release;
          count = level == FilterLevel::Thm1 ? bound1(w, Rank2Cartan(r), options)
                                             : bound2(w, Rank2Cartan(r), options);
        }
        return to_py(count);
      },
      py::arg("c0"), py::arg("c1"), py::arg("r") = 3, py::arg("theorem") = 2,
      py::arg("threads") = 0);

  m.def(
      "bound_paths",
      [](const py::int_& c0, const py::int_& c1, std::int64_t r, int theorem) {
        BoundReportOptions options;
        options.list_level = theorem_level(theorem);
        const auto report = bound_report(weight(c0, c1), Rank2Cartan(r), options);
        std::vector<std::string> words;
        for (const auto& d : *report.paths_listed) words.push_back(runs_to_word(d));
        return words;
      },
      py::arg("c0"), py::arg("c1"), py::arg("r") = 3, py::arg("theorem") = 2);

  m.def(
      "estimate_json",
      [](const py::int_& c0, const py::int_& c1, std::int64_t r, int theorem,
         std::uint64_t samples, std::uint64_t seed, unsigned threads) {
        SamplingOptions options;
        options.threads = threads;
        const Weight w = weight(c0, c1);
        const FilterLevel level = theorem_level(theorem);
        std::string out;
        {
          py::gil_scoped_release release;
          out = estimate_json(estimate_bound(w, Rank2Cartan(r), level, samples, seed, options))
                    .dump();
        }
        return out;
      },
      py::arg("c0"), py::arg("c1"), py::arg("r") = 3, py::arg("theorem") = 2,
      py::arg("samples"), py::arg("seed") = 0, py::arg("threads") = 0);

  m.def(
      "validate_json",
      [](const std::string& word, std::int64_t r) {
        return validate_json(word, Rank2Cartan(r)).dump();
      },
      py::arg("word"), py::arg("r") = 3);

  m.def(
      "word_to_runs", [](const std::string& word) { return word_to_runs(word).runs; },
      py::arg("word"));

  m.def(
      "littelmann_valid",
      [](const std::string& word, std::int64_t r) {
        return littelmann_valid(word_to_runs(word), Rank2Cartan(r));
      },
      py::arg("word"), py::arg("r") = 3);
}
