#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swapplanarity/equiv.hpp"
#include "swapplanarity/errors.hpp"
#include "swapplanarity/generate.hpp"
#include "swapplanarity/io.hpp"
#include "swapplanarity/pointgen.hpp"
#include "swapplanarity/solve.hpp"
#include "swapplanarity/triangulate.hpp"

namespace py = pybind11;
namespace sp = swapplanarity;

namespace {

using XY = std::pair<std::int64_t, std::int64_t>;

sp::GridPoint to_point(const XY& p) { return {p.first, p.second}; }

sp::PointSet to_points(const std::vector<XY>& ps) {
  sp::PointSet out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(to_point(p));
  return out;
}

std::vector<XY> from_points(const sp::PointSet& ps) {
  std::vector<XY> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.emplace_back(p.x, p.y);
  return out;
}

std::vector<std::pair<int, int>> from_edges(const sp::EdgeList& es) {
  std::vector<std::pair<int, int>> out;
  out.reserve(es.size());
  for (const auto& e : es) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<std::size_t> from_moves(const sp::MoveSequence& ms) {
  std::vector<std::size_t> out;
  out.reserve(ms.size());
  for (auto m : ms) out.push_back(m.edge);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Swap Planarity core: exact predicates, level generation, solver, equivalence";

  py::register_exception<sp::GenerationError>(m, "GenerationError", PyExc_RuntimeError);
  py::register_exception<sp::SearchLimitExceeded>(m, "SearchLimitExceeded", PyExc_RuntimeError);
  py::register_exception<sp::InstanceFormatError>(m, "InstanceFormatError", PyExc_ValueError);
  py::register_exception<sp::InvalidInstance>(m, "InvalidInstance", PyExc_ValueError);
  py::register_exception<sp::UnreachableTarget>(m, "UnreachableTarget", PyExc_ValueError);

  m.def("orient", [](XY a, XY b, XY c) {
    return static_cast<int>(sp::orient(to_point(a), to_point(b), to_point(c)));
  }, "1 left turn, -1 right turn, 0 collinear");
  m.def("segments_cross", [](XY a, XY b, XY c, XY d) {
    return sp::segments_cross(to_point(a), to_point(b), to_point(c), to_point(d));
  });
  m.def("in_circle", [](XY a, XY b, XY c, XY d) {
    return static_cast<int>(sp::in_circle(to_point(a), to_point(b), to_point(c), to_point(d)));
  }, "1 inside, 0 on, -1 outside");
  m.def("delta_ok", [](XY p, XY q, XY r, std::int64_t delta) {
    return sp::delta_ok(to_point(p), to_point(q), to_point(r), delta);
  });
  m.def("convex_hull", [](const std::vector<XY>& ps) { return sp::convex_hull(to_points(ps)); });

  m.def("generate_points", [](int n, std::int64_t delta, std::uint64_t seed, std::int64_t threshold,
                              int max_restarts, std::int64_t grid_size) {
    sp::PointGenParams p{n, delta, grid_size, threshold, seed, max_restarts};
    const auto r = sp::generate_points(p);
    py::dict stats;
    stats["total_attempts"] = r.stats.total_attempts;
    stats["restarts"] = r.stats.restarts;
    stats["interior_count"] = r.stats.interior_count;
    py::object points = r.ok() ? py::cast(from_points(*r.points)) : py::none();
    return py::make_tuple(points, stats);
  }, py::arg("n"), py::arg("delta"), py::arg("seed") = 0, py::arg("threshold") = 500,
        py::arg("max_restarts") = 1000, py::arg("grid_size") = sp::kDefaultGridSize,
        "Returns (points or None, stats dict)");
  m.def("validate_delta_general_position", [](const std::vector<XY>& ps, std::int64_t delta) {
    return sp::validate_delta_general_position(to_points(ps), delta);
  });
  m.def("delaunay_edges", [](const std::vector<XY>& ps) {
    return from_edges(sp::delaunay(to_points(ps)).edges);
  });

  py::class_<sp::PuzzleInstance>(m, "Instance")
      .def_static("from_json", [](const std::string& s) { return sp::load_instance(s); },
                  "Parse and validate canonical instance JSON")
      .def_static("parse", [](const std::string& s) { return sp::parse_instance(s); },
                  "Parse without validating")
      .def("to_json", [](const sp::PuzzleInstance& i) { return sp::to_json(i); })
      .def_readonly("grid_size", &sp::PuzzleInstance::grid_size)
      .def_property_readonly("points", [](const sp::PuzzleInstance& i) { return from_points(i.points); })
      .def_property_readonly("edges", [](const sp::PuzzleInstance& i) { return from_edges(i.edges); })
      .def_readwrite("assignment", &sp::PuzzleInstance::assignment)
      .def_readonly("solution_assignment", &sp::PuzzleInstance::solution_assignment)
      .def_property_readonly("meta", [](const sp::PuzzleInstance& i) {
        py::dict d;
        d["n"] = i.meta.n;
        d["m"] = i.meta.m;
        d["s"] = i.meta.s;
        d["flips"] = i.meta.flips;
        d["removed"] = i.meta.removed;
        d["seed"] = i.meta.seed;
        return d;
      })
      .def_property_readonly("metrics", [](const sp::PuzzleInstance& i) {
        py::dict d;
        d["rho"] = i.metrics.rho;
        d["lambda"] = i.metrics.lambda;
        d["delta"] = i.metrics.delta;
        return d;
      })
      .def("crossing_count", [](const sp::PuzzleInstance& i) { return sp::crossing_count(i); })
      .def("is_solved", &sp::is_solved)
      .def("validate", &sp::validate)
      .def("apply_swap", [](const sp::PuzzleInstance& i, std::size_t e) {
        return sp::apply_swap(i, sp::SwapMove{e});
      })
      .def("apply_moves", [](const sp::PuzzleInstance& i, const std::vector<std::size_t>& es) {
        sp::MoveSequence ms;
        for (auto e : es) ms.push_back(sp::SwapMove{e});
        return sp::apply_moves(i, ms);
      })
      .def(py::self == py::self);

  m.def("eight_cycle_fixture", &sp::make_eight_cycle_fixture);
  m.def("cycle_fixture", &sp::make_cycle_fixture, py::arg("n"));
  m.def("basic_construction_fixture", &sp::make_basic_construction_fixture);

  py::class_<sp::SolveReport>(m, "SolveReport")
      .def_readonly("min_swaps", &sp::SolveReport::min_swaps)
      .def_readonly("searched_depth", &sp::SolveReport::searched_depth)
      .def_readonly("solution_count", &sp::SolveReport::solution_count)
      .def_readonly("nodes_expanded", &sp::SolveReport::nodes_expanded)
      .def_readonly("states_visited", &sp::SolveReport::states_visited)
      .def_readonly("independent_pairs", &sp::SolveReport::independent_pairs)
      .def_property_readonly("solutions", [](const sp::SolveReport& r) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& s : r.solutions) out.push_back(from_moves(s));
        return out;
      })
      .def("to_json", [](const sp::SolveReport& r, bool all) { return sp::to_json(r, all); },
           py::arg("include_sequences") = false);

  m.def("min_swaps", [](const sp::PuzzleInstance& inst, int max_depth, std::size_t max_states) {
    sp::SolveOptions o;
    o.max_depth = max_depth;
    o.max_states = max_states;
    py::gil_scoped_release release;
    return sp::min_swaps(inst, o);
  }, py::arg("instance"), py::arg("max_depth") = 6, py::arg("max_states") = 20'000'000);
  m.def("enumeration_size", &sp::enumeration_size, py::arg("m_edges"), py::arg("depth"));
  m.def("route_to_assignment", [](const sp::PuzzleInstance& inst, const std::vector<int>& target) {
    return from_moves(sp::route_to_assignment(inst, target).moves);
  });

  m.def("generate_level", [](int n, int m_edges, int removed, int s, std::int64_t delta, int flips,
                             std::uint64_t seed, std::int64_t threshold) {
    sp::GenerationParams p;
    p.n = n;
    p.m = m_edges;
    p.removed = removed;
    p.s = s;
    p.delta = delta;
    const auto metrics = sp::default_metrics(delta);
    p.rho = metrics.rho;
    p.lambda = metrics.lambda;
    p.flips = flips;
    p.seed = seed;
    p.threshold = threshold;
    sp::GeneratedLevel level;
    {
      py::gil_scoped_release release;
      level = sp::generate_level(p);
    }
    return py::make_tuple(level.instance, level.report, from_moves(level.shuffle_moves));
  }, py::arg("n") = 11, py::arg("m") = 0, py::arg("removed") = 4, py::arg("s") = 2,
        py::arg("delta") = 1966, py::arg("flips") = 3, py::arg("seed") = 0,
        py::arg("threshold") = 500, "Returns (instance, solve report, shuffle moves)");

  py::class_<sp::EquivalenceCertificate>(m, "EquivalenceCertificate")
      .def_property_readonly("verdict", [](const sp::EquivalenceCertificate& c) {
        return std::string(sp::to_string(c.verdict));
      })
      .def_readonly("matching", &sp::EquivalenceCertificate::matching)
      .def_readonly("reason", &sp::EquivalenceCertificate::reason)
      .def_readonly("violated_triple", &sp::EquivalenceCertificate::violated_triple)
      .def_readonly("refuting_quadruple", &sp::EquivalenceCertificate::refuting_quadruple)
      .def("to_json", [](const sp::EquivalenceCertificate& c) { return sp::to_json(c); });
  m.def("swap_equivalent", &sp::swap_equivalent);
  m.def("same_order_type", [](const std::vector<XY>& a, const std::vector<XY>& b) {
    return sp::same_order_type(to_points(a), to_points(b));
  });
}
