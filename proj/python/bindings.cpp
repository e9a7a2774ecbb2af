#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "udgroute/errors.hpp"
#include "udgroute/generators.hpp"
#include "udgroute/hierarchical.hpp"
#include "udgroute/simulate.hpp"
#include "udgroute/verify.hpp"

namespace py = pybind11;
using namespace udgroute;

namespace {

SiteSet to_sites(const std::vector<std::tuple<VertexId, double, double>>& rows) {
  SiteSet sites;
  for (const auto& [id, x, y] : rows) sites.push_back({id, x, y});
  return sites;
}

std::vector<std::tuple<VertexId, double, double>> from_sites(const SiteSet& sites) {
  std::vector<std::tuple<VertexId, double, double>> rows;
  for (const Site& s : sites) rows.emplace_back(s.id, s.x, s.y);
  return rows;
}

py::dict report_dict(const SimulationReport& r) {
  py::dict d;
  d["scheme"] = r.scheme;
  d["n"] = r.n;
  d["pairs"] = r.pairs.size();
  d["all_pairs"] = r.all_pairs;
  d["sample_seed"] = r.sample_seed;
  d["step_cap"] = r.cap;
  d["max_stretch"] = r.max_stretch;
  d["mean_stretch"] = r.mean_stretch;
  d["min_stretch"] = r.min_stretch;
  d["max_excess"] = r.max_excess;
  d["max_hops"] = r.max_hops;
  d["audited_hops"] = r.audited_hops;
  d["violations"] = r.violations;
  d["violation_log"] = r.violation_log;
  d["max_label_bits"] = r.max_label_bits;
  d["mean_label_bits"] = r.mean_label_bits;
  return d;
}

SimulationOptions sim_options(std::optional<std::size_t> sample, std::uint64_t sample_seed, bool audit) {
  SimulationOptions o;
  o.all_pairs = !sample.has_value();
  if (sample) o.sample = *sample;
  o.sample_seed = sample_seed;
  o.audit = audit;
  return o;
}

// Python-side handles keep their graph alive through keep_alive, and own
// the scheme so it never outlives the graph it points into.
struct Hierarchical {
  std::shared_ptr<const HierarchicalScheme> scheme;
};
struct Additive {
  std::shared_ptr<const AdditiveScheme> scheme;
};
struct LowDiam {
  std::shared_ptr<const LowDiamScheme> scheme;
};

std::vector<VertexId> route(const Router& router, const UnitDiskGraph& g, VertexId s, VertexId t,
                            std::uint64_t port_seed) {
  const Network net(g, port_seed);
  return route_path(router, net, s, t, step_cap(g.size(), router.level_count()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compact (1 + eps)-stretch routing on unit disk graphs";

  static py::exception<Error> error(m, "UdgError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def(
      "generate",
      [](const std::string& kind, std::size_t n, std::uint64_t seed) { return from_sites(generate(parse_kind(kind), n, seed).sites); },
      py::arg("kind"), py::arg("n"), py::arg("seed") = 0, "Sites (id, x, y) of a generated instance.");
  m.def("load_sites", [](const std::string& path) { return from_sites(load_sites(path)); });
  m.def("save_sites", [](const std::string& path, const std::vector<std::tuple<VertexId, double, double>>& rows) {
    save_sites(path, to_sites(rows));
  });

  py::class_<UnitDiskGraph>(m, "UnitDiskGraph")
      .def(py::init([](const std::vector<std::tuple<VertexId, double, double>>& rows) { return build_udg(to_sites(rows)); }),
           py::arg("sites"))
      .def_property_readonly("n", &UnitDiskGraph::size)
      .def_property_readonly("edge_count", &UnitDiskGraph::edge_count)
      .def("adjacent", &UnitDiskGraph::adjacent)
      .def("neighbors",
           [](const UnitDiskGraph& g, VertexId v) {
             std::vector<VertexId> out;
             for (const Neighbor& nb : g.neighbors(v)) out.push_back(nb.id);
             return out;
           })
      .def("diameter", [](const UnitDiskGraph& g) { return diameter(g); })
      .def("distance",
           [](const UnitDiskGraph& g, VertexId s, VertexId t) { return dijkstra(g.topology(), s).dist.at(t); })
      .def("path_length", [](const UnitDiskGraph& g, const std::vector<VertexId>& path) { return path_length(g, path); });

  py::class_<Hierarchical>(m, "HierarchicalScheme")
      .def(py::init([](const UnitDiskGraph& g, double eps_target, bool calibrated, std::uint64_t seed) {
             PreprocessOptions o;
             o.calibrated = calibrated;
             o.seed = seed;
             return Hierarchical{std::make_shared<const HierarchicalScheme>(HierarchicalScheme::preprocess(g, eps_target, o))};
           }),
           py::arg("graph"), py::arg("eps_target"), py::arg("calibrated") = true, py::arg("seed") = 0, py::keep_alive<1, 2>())
      .def_property_readonly("config",
                             [](const Hierarchical& h) {
                               const SchemeConfig& c = h.scheme->config();
                               py::dict d;
                               d["epsilon_target"] = c.epsilon_target;
                               d["epsilon"] = c.epsilon;
                               d["calibrated"] = c.calibrated;
                               d["kappa_total"] = c.kappa_total;
                               d["diameter"] = c.diameter;
                               d["k0"] = c.k0;
                               d["k_max"] = c.k_max;
                               return d;
                             })
      .def("label_bits", [](const Hierarchical& h, VertexId v) { return HierarchicalRouter(*h.scheme).label_bits(v); })
      .def("save", [](const Hierarchical& h, const std::string& path) { save_label_store(path, *h.scheme); })
      .def(
          "route",
          [](const Hierarchical& h, const UnitDiskGraph& g, VertexId s, VertexId t, std::uint64_t port_seed) {
            return route(HierarchicalRouter(*h.scheme), g, s, t, port_seed);
          },
          py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("port_seed") = 1)
      .def(
          "simulate",
          [](const Hierarchical& h, const UnitDiskGraph& g, std::optional<std::size_t> sample, std::uint64_t sample_seed,
             std::uint64_t port_seed, bool audit) {
            return report_dict(simulate(HierarchicalRouter(*h.scheme), Network(g, port_seed), all_pairs(g.topology()),
                                        sim_options(sample, sample_seed, audit)));
          },
          py::arg("graph"), py::arg("sample") = py::none(), py::arg("sample_seed") = 1, py::arg("port_seed") = 1,
          py::arg("audit") = true);

  py::class_<Additive>(m, "AdditiveScheme")
      .def(py::init([](const UnitDiskGraph& g, double eps) { return Additive{std::make_shared<const AdditiveScheme>(g, eps)}; }),
           py::arg("graph"), py::arg("eps"), py::keep_alive<1, 2>())
      .def_property_readonly("decomposition_height", [](const Additive& a) { return a.scheme->decomposition().height(); })
      .def(
          "route",
          [](const Additive& a, const UnitDiskGraph& g, VertexId s, VertexId t, std::uint64_t port_seed) {
            return route(AdditiveRouter(*a.scheme, g.size()), g, s, t, port_seed);
          },
          py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("port_seed") = 1)
      .def(
          "simulate",
          [](const Additive& a, const UnitDiskGraph& g, std::optional<std::size_t> sample, std::uint64_t sample_seed,
             std::uint64_t port_seed, bool audit) {
            return report_dict(simulate(AdditiveRouter(*a.scheme, g.size()), Network(g, port_seed), all_pairs(g.topology()),
                                        sim_options(sample, sample_seed, audit)));
          },
          py::arg("graph"), py::arg("sample") = py::none(), py::arg("sample_seed") = 1, py::arg("port_seed") = 1,
          py::arg("audit") = true);

  py::class_<LowDiam>(m, "LowDiamScheme")
      .def(py::init([](const UnitDiskGraph& g, double eps) { return LowDiam{std::make_shared<const LowDiamScheme>(g, eps)}; }),
           py::arg("graph"), py::arg("eps"), py::keep_alive<1, 2>())
      .def(
          "route",
          [](const LowDiam& l, const UnitDiskGraph& g, VertexId s, VertexId t, std::uint64_t port_seed) {
            return route(LowDiamRouter(*l.scheme, g.size()), g, s, t, port_seed);
          },
          py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("port_seed") = 1)
      .def(
          "simulate",
          [](const LowDiam& l, const UnitDiskGraph& g, std::optional<std::size_t> sample, std::uint64_t sample_seed,
             std::uint64_t port_seed) {
            return report_dict(simulate(LowDiamRouter(*l.scheme, g.size()), Network(g, port_seed), all_pairs(g.topology()),
                                        sim_options(sample, sample_seed, false)));
          },
          py::arg("graph"), py::arg("sample") = py::none(), py::arg("sample_seed") = 1, py::arg("port_seed") = 1);

  m.def(
      "route_stored",
      [](const std::string& labels, const UnitDiskGraph& g, VertexId s, VertexId t, std::uint64_t port_seed) {
        const LabelStore store = load_label_store(labels);
        if (store.n != g.size()) throw Error(ErrorKind::kInvalidInput, "label store and instance disagree on n");
        return route(StoredLabelRouter(store), g, s, t, port_seed);
      },
      py::arg("labels"), py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("port_seed") = 1,
      "Route with labels read back from a label store file.");

  m.def(
      "verify",
      [](const UnitDiskGraph& g, const std::string& component, double eps, double eps_target, bool calibrated) {
        VerifyOptions o;
        o.epsilon = eps;
        o.eps_target = eps_target;
        o.calibrated = calibrated;
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const Check& c : verify(g, component, o)) out.emplace_back(c.name, c.passed, c.detail);
        return out;
      },
      py::arg("graph"), py::arg("component"), py::arg("eps") = 0.25, py::arg("eps_target") = 1.0,
      py::arg("calibrated") = true, "(name, passed, detail) per checked property.");
  m.attr("components") = verify_components();
}
