#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "derange/cli.hpp"
#include "derange/mr_bijection.hpp"
#include "derange/parity_maps.hpp"
#include "derange/sequences.hpp"
#include "derange/type_a.hpp"
#include "derange/type_bd.hpp"

namespace py = pybind11;
using namespace derange;

namespace {

using Ints = std::vector<int>;
using IntsPair = std::pair<Ints, Ints>;

Ints ints(const Permutation& p) { return {p.one_line().begin(), p.one_line().end()}; }
Ints ints(const SignedPermutation& p) { return {p.window().begin(), p.window().end()}; }
IntsPair ints(const PermPair& p) { return {ints(p.first), ints(p.second)}; }
IntsPair ints(const SignedPair& p) { return {ints(p.first), ints(p.second)}; }

py::int_ big(const Nat& v) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10))); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Derangement injections for Coxeter types A, B and D";

  py::register_exception<NotInImage>(m, "NotInImage", PyExc_LookupError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("cycle_string", [](const Ints& p) { return to_cycle_string(Permutation(p)); });
  m.def("parse_cycles", [](const std::string& text, int n) { return ints(parse_cycle_permutation(text, n)); },
        py::arg("text"), py::arg("n"));
  m.def("derangements", [](int n) {
    std::vector<Ints> out;
    for_each_derangement(n, [&](const Permutation& p) { out.push_back(ints(p)); });
    return out;
  });

  m.def("f_map", [](int n, int i, const Ints& sigma) { return ints(f_map(n, i, Permutation(sigma))); });
  m.def("g_map", [](int n, const Ints& sigma) {
    auto pre = g_map(n, Permutation(sigma));
    return std::make_pair(pre.index, ints(pre.sigma));
  });

  m.def("classify_a", [](const Ints& pi, const Ints& sigma) { return to_string(classify_a(Permutation(pi), Permutation(sigma))); });
  m.def("psi", [](const Ints& pi, const Ints& sigma) { return ints(psi(Permutation(pi), Permutation(sigma))); });
  m.def("lambda_inv", [](int n, const Ints& a, const Ints& b) { return ints(lambda_inv(n, Permutation(a), Permutation(b))); });

  m.def("classify_b", [](const Ints& pi, const Ints& sigma) {
    return to_string(classify_b(SignedPermutation(pi), SignedPermutation(sigma)));
  });
  m.def("phi", [](const Ints& pi, const Ints& sigma) { return ints(phi(SignedPermutation(pi), SignedPermutation(sigma))); });
  m.def("theta", [](int n, const Ints& a, const Ints& b) {
    return ints(theta(n, SignedPermutation(a), SignedPermutation(b)));
  });
  m.def("pi_minus", [](const Ints& p) {
    auto r = pi_minus(SignedPermutation(p));
    return std::make_pair(ints(r.image), r.flipped_index);
  });

  m.def("h", [](int n) { return big(h_rec(n)); });
  m.def("h_plus", [](int n) { return big(h_plus(n)); });
  m.def("h_minus", [](int n) { return big(h_minus(n)); });
  m.def("even_expr", [](int n) { return big(even_expr(n)); });
  m.def("odd_expr", [](int n) { return big(odd_expr(n)); });
  m.def("sequence", [](const std::string& family, int to) {
    py::list out;
    for (const auto& v : sequence_table(family, to).values) out.append(big(v));
    return out;
  }, py::arg("family"), py::arg("to"));

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
