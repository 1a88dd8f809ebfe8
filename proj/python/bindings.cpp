#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sigmagb/cli.hpp"
#include "sigmagb/gb_engine.hpp"
#include "sigmagb/homogenization.hpp"
#include "sigmagb/problem.hpp"

namespace py = pybind11;
using namespace sigmagb;

namespace {

struct Polynomial {
  Ring ring;
  DiffPolynomial value;
};

Polynomial wrap(const Ring& ring, DiffPolynomial f) { return {ring, std::move(f)}; }

std::vector<DiffPolynomial> unwrap(const Ring& ring, const std::vector<Polynomial>& fs) {
  std::vector<DiffPolynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) {
    if (!f.ring.compatible(ring)) throw std::invalid_argument("polynomials belong to different rings");
    out.push_back(f.value);
  }
  return out;
}

std::vector<Polynomial> wrap_all(const Ring& ring, const std::vector<DiffPolynomial>& fs) {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(wrap(ring, f));
  return out;
}

ShiftExponent to_shift(const std::vector<int>& coords) { return ShiftExponent(std::span<const int>(coords)); }

Truncation make_truncation(std::optional<int> bound_ord, std::optional<std::vector<int>> bound_weight) {
  if (bound_ord && bound_weight) throw std::invalid_argument("give either bound_ord or bound_weight");
  if (bound_ord) return Truncation::by_order(*bound_ord);
  if (bound_weight) return Truncation::by_weight(to_shift(*bound_weight));
  return Truncation::unbounded();
}

py::dict stats_dict(const GBRun& run) {
  const RunReport r = make_report(run);
  py::dict d;
  d["strategy"] = r.strategy;
  d["bound"] = r.bound;
  d["in"] = r.in;
  d["out"] = r.out;
  d["minout"] = r.minout;
  d["pairs"] = r.pairs;
  d["time_ms"] = r.time_ms;
  d["aborted"] = r.aborted;
  d["reopened"] = r.reopened;
  d["unit_ideal"] = run.stats.unit_ideal;
  return d;
}

py::tuple gbasis(const std::vector<Polynomial>& generators, const std::string& strategy, std::optional<int> bound_ord,
                 std::optional<std::vector<int>> bound_weight, bool minimal, std::size_t max_pairs) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const Ring& ring = generators.front().ring;
  GBRun run;
  run.strategy = parse_strategy(strategy);
  run.truncation = make_truncation(bound_ord, std::move(bound_weight));
  run.minimalize = minimal;
  run.max_pairs = max_pairs;
  std::vector<DiffPolynomial> G;
  {
    py::gil_scoped_release release;
    G = sigma_gbasis(ring, unwrap(ring, generators), run);
  }
  return py::make_tuple(wrap_all(ring, G), stats_dict(run));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Groebner bases for ideals of partial difference polynomials";

  py::class_<Ring>(m, "Ring")
      .def(py::init([](int rank, std::vector<std::string> unknowns, std::vector<std::string> params,
                       const std::string& ranking, const std::string& sigma, const std::string& inner) {
             const SigmaOrdering o{parse_ranking(ranking), SigmaOrder{parse_sigma_order(sigma)},
                                   parse_inner_order(inner)};
             return Ring(rank, std::move(unknowns), std::move(params), o);
           }),
           py::arg("rank"), py::arg("unknowns"), py::arg("params") = std::vector<std::string>{},
           py::arg("ranking") = "weight", py::arg("sigma") = "degrevlex", py::arg("inner") = "lex")
      .def_property_readonly("rank", &Ring::rank)
      .def_property_readonly("unknowns", &Ring::unknowns)
      .def_property_readonly("params", &Ring::params)
      .def_property_readonly("is_extended", &Ring::is_extended)
      .def("extended", &Ring::extended)
      .def("parse", [](const Ring& r, const std::string& text) { return wrap(r, parse_polynomial(r, text)); });

  py::class_<Polynomial>(m, "Polynomial")
      .def_property_readonly("ring", [](const Polynomial& p) { return p.ring; })
      .def_property_readonly("is_zero", [](const Polynomial& p) { return p.value.is_zero(); })
      .def_property_readonly("lm", [](const Polynomial& p) { return p.ring.to_string(p.value.lm()); })
      .def("__len__", [](const Polynomial& p) { return p.value.size(); })
      .def("__str__", [](const Polynomial& p) { return to_string(p.ring, p.value); })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + to_string(p.ring, p.value) + ")"; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) {
        return a.ring.compatible(b.ring) && a.value == b.value;
      })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return wrap(a.ring, add(a.ring, a.value, b.value)); })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return wrap(a.ring, sub(a.ring, a.value, b.value)); })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return wrap(a.ring, mul(a.ring, a.value, b.value)); })
      .def("__neg__", [](const Polynomial& a) { return wrap(a.ring, neg(a.value)); })
      .def("shift", [](const Polynomial& p, const std::vector<int>& s) {
        return wrap(p.ring, shift(p.ring, to_shift(s), p.value));
      })
      .def("monic", [](const Polynomial& p) { return wrap(p.ring, make_monic(p.value)); })
      .def("associated", [](const Polynomial& a, const Polynomial& b) { return associated(a.value, b.value); });

  m.def("spoly", [](const Polynomial& f, const Polynomial& g) {
    return wrap(f.ring, spoly(f.ring, f.value, g.value));
  });
  m.def(
      "reduce",
      [](const Polynomial& f, const std::vector<Polynomial>& basis, bool tail) {
        return wrap(f.ring, reduce(f.ring, f.value, unwrap(f.ring, basis), {}, tail));
      },
      py::arg("f"), py::arg("basis"), py::arg("tail") = false);
  m.def("gbasis", &gbasis, py::arg("generators"), py::arg("strategy") = "sigma", py::arg("bound_ord") = py::none(),
        py::arg("bound_weight") = py::none(), py::arg("minimal") = false, py::arg("max_pairs") = 0);
  m.def(
      "certify",
      [](const std::vector<Polynomial>& G, const std::string& mode) {
        if (G.empty()) throw std::invalid_argument("empty basis");
        const Ring& ring = G.front().ring;
        const CertifyMode cm = mode == "weight" ? CertifyMode::weight : CertifyMode::order;
        if (mode != "weight" && mode != "order") throw std::invalid_argument("mode must be 'order' or 'weight'");
        const Certificate c = certify_finite(ring, unwrap(ring, G), cm);
        py::dict d;
        d["certified"] = c.certified;
        d["window"] = c.window.to_string();
        d["pairs_checked"] = c.pairs_checked;
        if (c.witness) d["witness"] = *c.witness;
        return d;
      },
      py::arg("basis"), py::arg("mode") = "order");
  m.def("homogenize", [](const Polynomial& f) {
    const Ring E = f.ring.extended();
    return wrap(E, homogenize(E, f.value));
  });
  m.def("dehomogenize", [](const Polynomial& f) { return wrap(f.ring.base(), dehomogenize(f.ring, f.value)); });
  m.def("nf_mod_N", [](const Polynomial& f) { return wrap(f.ring, nf_mod_N(f.ring, f.value)); });
  m.def("saturate", [](const Polynomial& f) { return wrap(f.ring, saturate(f.ring, f.value)); });

  m.def("load_problem", [](const std::string& path) {
    const ProblemFile p = load_problem(path);
    const Ring ring = p.ring();
    py::dict d;
    d["ring"] = ring;
    d["generators"] = wrap_all(ring, p.generators);
    d["bound"] = p.bound ? py::cast(p.bound->to_string()) : py::none();
    if (p.bound && p.bound->kind == Truncation::Kind::order) d["bound_ord"] = p.bound->order_bound;
    return d;
  });

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
