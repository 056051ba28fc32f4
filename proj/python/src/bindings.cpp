#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braid/braid_word.hpp"
#include "braid/cabling.hpp"
#include "braid/garside.hpp"
#include "braid/interchange.hpp"
#include "braid/json_io.hpp"
#include "braid/links.hpp"
#include "braid/search.hpp"

namespace py = pybind11;

namespace {

// Report types cross the boundary as plain dicts/lists via their JSON views.
py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

braid::Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return braid::Sign::plus;
  if (s == "-" || s == "minus") return braid::Sign::minus;
  throw std::invalid_argument("sign must be '+' or '-'");
}

braid::StrandSet to_strand_set(const std::vector<int>& strands) {
  return braid::StrandSet(strands.begin(), strands.end());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "braid computations for interchange coherence on four strands";

  py::class_<braid::BraidWord>(m, "BraidWord")
      .def(py::init([](const std::string& text) { return braid::BraidWord::parse(text); }),
           py::arg("text"))
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters"))
      .def_property_readonly("strands", &braid::BraidWord::strands)
      .def_property_readonly("letters",
                             [](const braid::BraidWord& w) { return w.letters(); })
      .def("__str__", &braid::BraidWord::str)
      .def("__repr__",
           [](const braid::BraidWord& w) { return "BraidWord(\"" + w.str() + "\")"; })
      .def("__eq__", [](const braid::BraidWord& a, const braid::BraidWord& b) { return a == b; })
      .def("__hash__", [](const braid::BraidWord& w) { return py::hash(py::str(w.str())); });

  m.def("parse_word", &braid::BraidWord::parse, py::arg("text"));
  m.def("concat", &braid::concat);
  m.def("perm",
        [](const braid::BraidWord& w) { return braid::perm(w).images(); });
  m.def("cycles",
        [](const braid::BraidWord& w) { return braid::perm(w).cycles(); });
  m.def("inverse", &braid::inverse);
  m.def("rotate180", &braid::rotate180);
  m.def("delete_strands", [](const braid::BraidWord& w, const std::vector<int>& dead) {
    return braid::delete_strands(w, to_strand_set(dead));
  });
  m.def("embed", &braid::embed, py::arg("word"), py::arg("total"), py::arg("offset"));
  m.def("exponent_sum", &braid::exponent_sum);
  m.def("free_reduce", &braid::free_reduce);
  m.def("power", &braid::power);

  m.def("normal_form", [](const braid::BraidWord& w) {
    return json_to_py(braid::io::to_json(braid::normal_form(w)));
  });
  m.def("equals", &braid::equals);
  m.def("is_trivial", &braid::is_trivial);
  m.def("canonical_key", &braid::canonical_key);

  m.def("cable", [](const braid::BraidWord& w, const std::vector<int>& widths) {
    return braid::cable(w, widths);
  });
  m.def("derive_L", &braid::derive_L);
  m.def("derive_R", &braid::derive_R);
  m.def("derive_Lp", &braid::derive_Lp);
  m.def("derive_Rp", &braid::derive_Rp);

  m.def("family", [](int n, const std::string& sign) { return braid::family(n, parse_sign(sign)); },
        py::arg("n"), py::arg("sign"));
  m.def("is_candidate", [](const braid::BraidWord& b) {
    return json_to_py(braid::io::to_json(braid::is_candidate(b)));
  });
  m.def("is_interchanging", [](const braid::BraidWord& b) {
    return json_to_py(braid::io::to_json(braid::is_interchanging(b)));
  });
  m.def("inner_outer_profile", [](const braid::BraidWord& b) {
    return json_to_py(braid::io::to_json(braid::inner_outer_profile(b)));
  });
  m.def("classify", [](const braid::BraidWord& b) {
    return json_to_py(braid::io::to_json(braid::classify(b)));
  });
  m.def("obstruction_screens", [](const braid::BraidWord& b) {
    return json_to_py(braid::io::to_json(braid::obstruction_screens(b)));
  });
  m.def("hexagon_check", &braid::hexagon_check);
  m.def("hexagon_check_mirror", &braid::hexagon_check_mirror);
  m.def("hexagon_words", &braid::hexagon_words);

  m.def("closure_summary", [](const braid::BraidWord& b) {
    return json_to_py(braid::io::to_json(braid::closure_summary(b)));
  });
  m.def("conjugacy_certificate", [](const braid::BraidWord& u, const braid::BraidWord& v) {
    return std::string(braid::io::verdict_name(braid::conjugacy_certificate(u, v)));
  });
  m.def("braiding_obstruction", &braid::braiding_obstruction);

  m.def(
      "run_search",
      [](int max_len, bool screens, int workers, const std::string& output_path) {
        braid::SearchConfig cfg;
        cfg.max_len = max_len;
        cfg.screens_enabled = screens;
        cfg.workers = workers;
        cfg.output_path = output_path;
        return json_to_py(braid::io::to_json(braid::run_search(cfg)));
      },
      py::arg("max_len") = 7, py::arg("screens") = true, py::arg("workers") = 1,
      py::arg("output_path") = std::string());
  m.def("coset_property_sample", [](int max_h, int max_k) {
    return json_to_py(braid::io::to_json(braid::coset_property_sample(max_h, max_k)));
  });
}
