#include "swapplanarity/io.hpp"

#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"
#include "swapplanarity/errors.hpp"

namespace swapplanarity {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void shape_error(const std::string& what) {
  throw InstanceFormatError("instance: " + what);
}

const json& field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) shape_error(std::string("missing field \"") + name + "\"");
  return *it;
}

std::int64_t as_int64(const json& v, const std::string& where) {
  if (v.is_number_integer() && !(v.is_number_unsigned() &&
                                 v.get<std::uint64_t>() > static_cast<std::uint64_t>(
                                                              std::numeric_limits<std::int64_t>::max())))
    return v.get<std::int64_t>();
  shape_error(where + " must be an integer");
}

int as_int(const json& v, const std::string& where) {
  const std::int64_t x = as_int64(v, where);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    shape_error(where + " is out of range");
  return static_cast<int>(x);
}

std::vector<int> int_array(const json& v, const std::string& where) {
  if (!v.is_array()) shape_error(where + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(as_int(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> pair_at(const json& v, const std::string& where) {
  auto p = int_array(v, where);
  if (p.size() != 2) shape_error(where + " must have two entries");
  return p;
}

void write_ints(std::ostringstream& os, std::span<const int> xs) {
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ']';
}

ordered_json point_json(const GridPoint& p) { return ordered_json::array({p.x, p.y}); }

// One field per line with compact values, matching the instance layout.
std::string one_field_per_line(const ordered_json& obj) {
  std::string out = "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : obj.items()) {
    out += "  " + ordered_json(key).dump() + ": " + value.dump();
    out += ++i < obj.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

}  // namespace

std::string to_json(const PuzzleInstance& inst) {
  const PuzzleInstance c = canonicalize(inst);
  std::ostringstream os;
  os << "{\n";
  os << "  \"version\": " << kFormatVersion << ",\n";
  os << "  \"grid_size\": " << c.grid_size << ",\n";
  os << "  \"points\": [";
  for (std::size_t i = 0; i < c.points.size(); ++i)
    os << (i ? "," : "") << '[' << c.points[i].x << ',' << c.points[i].y << ']';
  os << "],\n";
  os << "  \"edges\": [";
  for (std::size_t i = 0; i < c.edges.size(); ++i)
    os << (i ? "," : "") << '[' << c.edges[i].u << ',' << c.edges[i].v << ']';
  os << "],\n";
  os << "  \"assignment\": ";
  write_ints(os, c.assignment);
  os << ",\n  \"solution_assignment\": ";
  if (c.solution_assignment)
    write_ints(os, *c.solution_assignment);
  else
    os << "null";
  os << ",\n";
  os << "  \"metrics\": {\"rho\": " << c.metrics.rho << ", \"lambda\": " << c.metrics.lambda
     << ", \"delta\": " << c.metrics.delta << "},\n";
  os << "  \"meta\": {\"n\": " << c.meta.n << ", \"m\": " << c.meta.m << ", \"s\": " << c.meta.s
     << ", \"flips\": " << c.meta.flips << ", \"removed\": " << c.meta.removed
     << ", \"seed\": " << c.meta.seed << "}\n";
  os << "}\n";
  return os.str();
}

PuzzleInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw InstanceFormatError("malformed JSON at byte " + std::to_string(at) + ": " + e.what(), at);
  }
  if (!doc.is_object()) shape_error("top level must be an object");

  if (as_int64(field(doc, "version"), "version") != kFormatVersion)
    shape_error("unsupported version");
  PuzzleInstance inst;
  inst.grid_size = as_int64(field(doc, "grid_size"), "grid_size");

  const json& points = field(doc, "points");
  if (!points.is_array()) shape_error("points must be an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    if (!points[i].is_array() || points[i].size() != 2) shape_error(where + " must be [x, y]");
    inst.points.push_back({as_int64(points[i][0], where), as_int64(points[i][1], where)});
  }

  const json& edges = field(doc, "edges");
  if (!edges.is_array()) shape_error("edges must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto e = pair_at(edges[i], "edges[" + std::to_string(i) + "]");
    inst.edges.push_back(Edge::of(e[0], e[1]));
  }
  canonicalize_edges(inst.edges);

  inst.assignment = int_array(field(doc, "assignment"), "assignment");
  if (auto it = doc.find("solution_assignment"); it != doc.end() && !it->is_null())
    inst.solution_assignment = int_array(*it, "solution_assignment");

  const json& metrics = field(doc, "metrics");
  if (!metrics.is_object()) shape_error("metrics must be an object");
  inst.metrics.rho = as_int64(field(metrics, "rho"), "metrics.rho");
  inst.metrics.lambda = as_int64(field(metrics, "lambda"), "metrics.lambda");
  inst.metrics.delta = as_int64(field(metrics, "delta"), "metrics.delta");

  const json& meta = field(doc, "meta");
  if (!meta.is_object()) shape_error("meta must be an object");
  inst.meta.n = as_int(field(meta, "n"), "meta.n");
  inst.meta.m = as_int(field(meta, "m"), "meta.m");
  inst.meta.s = as_int(field(meta, "s"), "meta.s");
  inst.meta.flips = as_int(field(meta, "flips"), "meta.flips");
  inst.meta.removed = as_int(field(meta, "removed"), "meta.removed");
  const json& seed = field(meta, "seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0))
    shape_error("meta.seed must be a non-negative integer");
  inst.meta.seed = seed.get<std::uint64_t>();
  return inst;
}

PuzzleInstance load_instance(std::string_view text) {
  PuzzleInstance inst = parse_instance(text);
  const auto problems = validate(inst);
  if (!problems.empty()) {
    std::string msg = "invalid instance:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InvalidInstance(msg);
  }
  return inst;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string to_json(const SolveReport& report, bool include_sequences) {
  ordered_json j;
  j["min_swaps"] = report.min_swaps ? ordered_json(*report.min_swaps) : ordered_json(nullptr);
  j["searched_depth"] = report.searched_depth;
  j["solution_count"] = report.solution_count;
  j["nodes_expanded"] = report.nodes_expanded;
  j["states_visited"] = report.states_visited;
  auto pairs = ordered_json::array();
  for (auto [a, b] : report.independent_pairs) pairs.push_back({a, b});
  j["independent_pairs"] = pairs;
  if (include_sequences) {
    auto seqs = ordered_json::array();
    for (const auto& seq : report.solutions) {
      auto s = ordered_json::array();
      for (auto mv : seq) s.push_back(mv.edge);
      seqs.push_back(s);
    }
    j["solutions"] = seqs;
  }
  return one_field_per_line(j);
}

std::string to_json(const EquivalenceCertificate& cert) {
  ordered_json j;
  j["verdict"] = to_string(cert.verdict);
  j["matching"] = cert.matching ? ordered_json(*cert.matching) : ordered_json(nullptr);
  j["reason"] = cert.reason;
  j["violated_triple"] =
      cert.violated_triple ? ordered_json(*cert.violated_triple) : ordered_json(nullptr);
  j["refuting_quadruple"] =
      cert.refuting_quadruple ? ordered_json(*cert.refuting_quadruple) : ordered_json(nullptr);
  j["missing_edge"] = cert.missing_edge
                          ? ordered_json::array({cert.missing_edge->u, cert.missing_edge->v})
                          : ordered_json(nullptr);
  j["same_order_type"] = cert.same_order_type;
  j["order_type_isomorphism"] = cert.order_type_isomorphism;
  j["a_connected_non_star"] = cert.a_connected_non_star;
  j["b_connected_non_star"] = cert.b_connected_non_star;
  return one_field_per_line(j);
}

std::string predicate_test_vectors(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::int64_t size) {
    std::uniform_int_distribution<std::int64_t> c(0, size - 1);
    return GridPoint{c(rng), c(rng)};
  };
  auto distinct_pair = [&](std::int64_t size) {
    GridPoint a = draw(size), b = draw(size);
    while (b == a) b = draw(size);
    return std::pair{a, b};
  };

  ordered_json orient_cases = ordered_json::array();
  ordered_json cross_cases = ordered_json::array();
  const std::size_t per_kind = (count + 1) / 2;
  for (std::size_t i = 0; i < per_kind; ++i) {
    const std::int64_t size = i % 2 == 0 ? kDefaultGridSize : 8;
    const GridPoint a = draw(size), b = draw(size), c = draw(size);
    orient_cases.push_back({{"a", point_json(a)},
                            {"b", point_json(b)},
                            {"c", point_json(c)},
                            {"expected", static_cast<int>(orient(a, b, c))}});
  }
  for (std::size_t i = 0; i < count - per_kind; ++i) {
    const std::int64_t size = i % 2 == 0 ? kDefaultGridSize : 6;
    auto [a, b] = distinct_pair(size);
    auto [c, d] = distinct_pair(size);
    cross_cases.push_back({{"a", point_json(a)},
                           {"b", point_json(b)},
                           {"c", point_json(c)},
                           {"d", point_json(d)},
                           {"expected", segments_cross(a, b, c, d)}});
  }
  ordered_json doc;
  doc["version"] = kFormatVersion;
  doc["seed"] = seed;
  doc["orient"] = std::move(orient_cases);
  doc["segments_cross"] = std::move(cross_cases);
  return doc.dump() + "\n";
}

}  // namespace swapplanarity
