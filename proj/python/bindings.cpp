/*
 * Copyright 2026 The rankcode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rankcode/channel.hpp"
#include "rankcode/error.hpp"
#include "rankcode/experiment.hpp"
#include "rankcode/interleaved.hpp"
#include "rankcode/oracle.hpp"
#include "rankcode/serialize.hpp"
#include "rankcode/support.hpp"

namespace py = pybind11;
using namespace rankcode;

namespace {

// Elements cross the boundary as lists of m coordinates, words as lists of
// elements, q-polynomials as coefficient lists.
using PyElem = std::vector<FqElem>;
using PyWord = std::vector<PyElem>;

Word to_word(const FieldCtx& f, const PyWord& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& e : w) out.push_back(f.element(e));
  return out;
}

PyWord from_word(const FieldCtx& f, std::span<const FqmElem> w) {
  PyWord out;
  for (const auto& e : w) out.push_back(f.to_vector(e));
  return out;
}

InterleavedWord to_iword(const FieldCtx& f, const std::vector<PyWord>& w) {
  InterleavedWord out;
  for (const auto& row : w) out.push_back(to_word(f, row));
  return out;
}

std::vector<PyWord> from_iword(const FieldCtx& f, const InterleavedWord& w) {
  std::vector<PyWord> out;
  for (const auto& row : w) out.push_back(from_word(f, row));
  return out;
}

QPoly to_qpoly(const FieldCtx& f, const PyWord& c) { return reduce(f, to_word(f, c)); }

py::dict outcome_dict(const FieldCtx& f, const DecodeOutcome& out) {
  py::dict d;
  d["success"] = out.success();
  d["reason"] = std::string(failure_reason_name(out.reason));
  d["radius"] = out.radius;
  std::vector<PyWord> msgs;
  for (const auto& m : out.messages) msgs.push_back(from_word(f, m.coeffs()));
  d["messages"] = msgs;
  d["codewords"] = from_iword(f, out.codewords);
  d["errors"] = from_iword(f, out.errors);
  d["locator"] = from_word(f, out.locator.coeffs());
  py::dict stats;
  stats["rows"] = out.stats.rows;
  stats["cols"] = out.stats.cols;
  stats["rank"] = out.stats.rank;
  stats["kernel_dim"] = out.stats.kernel_dim;
  stats["candidates_tried"] = out.stats.candidates_tried;
  d["stats"] = stats;
  return d;
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_rankcode, mod) {
  mod.doc() = "Gabidulin and interleaved Gabidulin codes over F_{q^m}";

  py::register_exception<Error>(mod, "RankcodeError", PyExc_ValueError);

  py::class_<FieldCtx, std::shared_ptr<FieldCtx>>(mod, "Field")
      .def(py::init([](std::uint32_t q, std::size_t m) {
             return std::const_pointer_cast<FieldCtx>(FieldCtx::create(q, m));
           }),
           py::arg("q"), py::arg("m"))
      .def_property_readonly("q", &FieldCtx::q)
      .def_property_readonly("m", &FieldCtx::m)
      .def_property_readonly("ext_modulus", &FieldCtx::ext_modulus)
      .def("add", [](const FieldCtx& f, const PyElem& a, const PyElem& b) { return f.to_vector(f.add(f.element(a), f.element(b))); })
      .def("mul", [](const FieldCtx& f, const PyElem& a, const PyElem& b) { return f.to_vector(f.mul(f.element(a), f.element(b))); })
      .def("inv", [](const FieldCtx& f, const PyElem& a) { return f.to_vector(f.inv(f.element(a))); })
      .def("frobenius", [](const FieldCtx& f, const PyElem& a, std::size_t i) { return f.to_vector(f.frobenius(f.element(a), i)); })
      .def("trace", [](const FieldCtx& f, const PyElem& a) { return f.trace(f.element(a)); })
      .def("rank_weight", [](const FieldCtx& f, const PyWord& w) { return rank_weight(f, to_word(f, w)); })
      .def("to_json", [](const FieldCtx& f) { return to_json(f).dump(); });

  py::class_<GabidulinCode>(mod, "GabidulinCode")
      .def(py::init([](const std::shared_ptr<FieldCtx>& f, const PyWord& g, std::size_t k) {
             return GabidulinCode(f, to_word(*f, g), k);
           }),
           py::arg("field"), py::arg("g"), py::arg("k"))
      .def_property_readonly("length", &GabidulinCode::length)
      .def_property_readonly("dimension", &GabidulinCode::dimension)
      .def_property_readonly("unique_radius", &GabidulinCode::unique_radius)
      .def_property_readonly("points", [](const GabidulinCode& c) { return from_word(c.field(), c.points()); })
      .def("encode", [](const GabidulinCode& c, const PyWord& msg) {
        return from_word(c.field(), encode(c, to_qpoly(c.field(), msg)));
      })
      .def(
          "decode",
          [](const GabidulinCode& c, const PyWord& y, std::optional<std::size_t> t) {
            return outcome_dict(c.field(), decode_general(c, to_word(c.field(), y), t));
          },
          py::arg("y"), py::arg("t") = py::none())
      .def("min_distance", &brute_min_distance)
      .def("nearest", [](const GabidulinCode& c, const PyWord& y) {
        py::list out;
        for (const auto& h : brute_nearest(c, to_word(c.field(), y)))
          out.append(py::make_tuple(from_word(c.field(), h.codeword), h.distance));
        return out;
      });

  py::class_<InterleavedCode>(mod, "InterleavedCode")
      .def(py::init<GabidulinCode, std::size_t>(), py::arg("base"), py::arg("u"))
      .def_property_readonly("interleaving", &InterleavedCode::interleaving)
      .def_property_readonly("max_radius", [](const InterleavedCode& c) { return max_radius(c); })
      .def("encode", [](const InterleavedCode& c, const std::vector<PyWord>& msgs) {
        std::vector<QPoly> polys;
        for (const auto& m : msgs) polys.push_back(to_qpoly(c.field(), m));
        return from_iword(c.field(), iencode(c, polys));
      })
      .def(
          "decode",
          [](const InterleavedCode& c, const std::vector<PyWord>& y, std::size_t t, bool retry) {
            InterleavedDecodeOptions opts;
            opts.retry = retry;
            return outcome_dict(c.field(), idecode(c, to_iword(c.field(), y), t, opts));
          },
          py::arg("y"), py::arg("t"), py::arg("retry") = false);

  mod.def("random_code", [](const std::shared_ptr<FieldCtx>& f, std::size_t n, std::size_t k, std::uint64_t seed) {
    return random_code(f, n, k, seed);
  }, py::arg("field"), py::arg("n"), py::arg("k"), py::arg("seed") = 0);
  mod.def("random_message", [](const std::shared_ptr<FieldCtx>& f, std::size_t k, std::uint64_t seed) {
    return from_word(*f, random_message(*f, k, seed).coeffs());
  }, py::arg("field"), py::arg("k"), py::arg("seed") = 0);
  mod.def("random_error_vector", [](const std::shared_ptr<FieldCtx>& f, std::size_t n, std::size_t t, std::uint64_t seed) {
    return from_word(*f, random_error_vector(*f, n, t, seed));
  }, py::arg("field"), py::arg("n"), py::arg("t"), py::arg("seed") = 0);
  mod.def(
      "random_burst_error",
      [](const std::shared_ptr<FieldCtx>& f, std::size_t u, std::size_t n, std::size_t t, std::optional<std::size_t> zeta,
         std::uint64_t seed) { return from_iword(*f, random_burst_error(*f, u, n, ErrorSpec{t, zeta, seed})); },
      py::arg("field"), py::arg("u"), py::arg("n"), py::arg("t"), py::arg("zeta") = py::none(), py::arg("seed") = 0);
  mod.def("fqm_rank", [](const std::shared_ptr<FieldCtx>& f, const std::vector<PyWord>& e) {
    return fqm_rank(*f, to_iword(*f, e));
  }, py::arg("field"), py::arg("e"));
  mod.def("failure_predicate", &failure_predicate, py::arg("n"), py::arg("k"), py::arg("t"), py::arg("zeta"));
  mod.def(
      "run_experiment",
      [](const std::string& command, py::dict kw) {
        ExperimentConfig c;
        c.command = command;
        for (auto [key, value] : kw) {
          const auto name = py::cast<std::string>(key);
          if (name == "q") c.q = py::cast<std::uint32_t>(value);
          else if (name == "m") c.m = py::cast<std::size_t>(value);
          else if (name == "n") c.n = py::cast<std::size_t>(value);
          else if (name == "k") c.k = py::cast<std::size_t>(value);
          else if (name == "u") c.u = py::cast<std::size_t>(value);
          else if (name == "t") c.t = py::cast<std::size_t>(value);
          else if (name == "t_min") c.t_min = py::cast<std::size_t>(value);
          else if (name == "t_max") c.t_max = py::cast<std::size_t>(value);
          else if (name == "zeta") c.zeta = py::cast<std::vector<std::size_t>>(value);
          else if (name == "trials") c.trials = py::cast<std::size_t>(value);
          else if (name == "seed") c.seed = py::cast<std::uint64_t>(value);
          else if (name == "retry") c.retry = py::cast<bool>(value);
          else if (name == "jobs") c.jobs = py::cast<std::size_t>(value);
          else throw py::type_error("unknown experiment parameter '" + name + "'");
        }
        py::list records;
        for (const auto& r : run_experiment(c).records) records.append(json_to_py(r));
        return records;
      },
      py::arg("command"), py::arg("params") = py::dict());
}
