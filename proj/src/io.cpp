#include "hypermap/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "hypermap/geometry.hpp"

namespace hypermap {
namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  return out;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_real(const std::string& s, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw FormatError("bad number '" + s + "'", line);
  return v;
}

std::int64_t parse_int(const std::string& s, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw FormatError("bad integer '" + s + "'", line);
  return v;
}

bool is_comment_or_blank(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

FormatError::FormatError(const std::string& what, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

EdgeListRead read_edge_list(std::istream& in) {
  EdgeListRead r;
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  auto id = [&](const std::string& label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (is_comment_or_blank(line)) continue;
    std::istringstream tokens(line);
    std::string a;
    std::string b;
    std::string extra;
    if (!(tokens >> a >> b) || (tokens >> extra)) throw FormatError("expected exactly two node labels", number);
    const NodeId u = id(a);
    const NodeId v = id(b);
    if (u == v) {
      ++r.self_loops;
      continue;
    }
    if (!seen.insert(pair_key(u, v)).second) {
      ++r.duplicate_edges;
      continue;
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (labels.empty()) throw FormatError("edge list is empty");
  r.graph = AdjacencySnapshot(std::move(labels), edges);
  return r;
}

EdgeListRead read_edge_list(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_edge_list(in);
}

void write_edge_list(const AdjacencySnapshot& graph, std::ostream& out) {
  for (const auto& [a, b] : graph.edges()) out << graph.label(a) << ' ' << graph.label(b) << '\n';
}

void write_edge_list(const AdjacencySnapshot& graph, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_edge_list(graph, out);
}

nlohmann::json to_json(const ModelParams& p) {
  return {{"m", p.m}, {"L", p.L}, {"gamma", p.gamma}, {"T", p.T}, {"zeta", p.zeta}, {"t", p.t}};
}

ModelParams params_from_json(const nlohmann::json& j) {
  ModelParams p;
  p.m = j.value("m", p.m);
  p.L = j.value("L", p.L);
  p.gamma = j.value("gamma", p.gamma);
  p.T = j.value("T", p.T);
  p.zeta = j.value("zeta", p.zeta);
  p.t = j.value("t", p.t);
  return p;
}

nlohmann::json to_json(const EmbeddingProvenance& prov) {
  return {{"method", prov.method},
          {"correction_degrees", prov.correction_degrees},
          {"correction_times", prov.correction_times},
          {"correction_passes", prov.correction_passes},
          {"grid_policy", prov.grid_policy},
          {"search", prov.search},
          {"theta1", prov.theta1},
          {"params_source", prov.params_source},
          {"gamma_fit", prov.gamma_fit},
          {"early_landscape_width", prov.early_landscape_width},
          {"warnings", prov.warnings}};
}

EmbeddingProvenance provenance_from_json(const nlohmann::json& j) {
  EmbeddingProvenance p;
  p.method = j.value("method", p.method);
  p.correction_degrees = j.value("correction_degrees", p.correction_degrees);
  p.correction_times = j.value("correction_times", p.correction_times);
  p.correction_passes = j.value("correction_passes", p.correction_passes);
  p.grid_policy = j.value("grid_policy", p.grid_policy);
  p.search = j.value("search", p.search);
  p.theta1 = j.value("theta1", p.theta1);
  p.params_source = j.value("params_source", p.params_source);
  p.gamma_fit = j.value("gamma_fit", p.gamma_fit);
  p.early_landscape_width = j.value("early_landscape_width", p.early_landscape_width);
  p.warnings = j.value("warnings", p.warnings);
  return p;
}

void write_coordinates(const Embedding& e, const std::vector<std::string>& labels, std::ostream& out) {
  if (labels.size() != e.node_count()) throw FormatError("label count does not match the embedding");
  const nlohmann::json header = {{"params", to_json(e.params)}, {"provenance", to_json(e.provenance)}};
  out << "# " << header.dump() << '\n';
  for (std::size_t k = 0; k < e.order.size(); ++k) {
    const NodeId v = e.order[k];
    out << labels[v] << ' ' << e.rank[v] << ' ' << format_real(e.radii[v]) << ' ' << format_real(e.angles[v]) << '\n';
  }
}

void write_coordinates(const Embedding& e, const std::vector<std::string>& labels, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_coordinates(e, labels, out);
}

CoordinatesRead read_coordinates(std::istream& in, const AdjacencySnapshot* companion) {
  struct Row {
    std::string label;
    std::int64_t rank;
    double radius;
    double angle;
    std::size_t line;
  };
  std::vector<Row> rows;
  nlohmann::json header;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (is_comment_or_blank(line)) {
      const auto pos = line.find('{');
      if (header.is_null() && pos != std::string::npos) {
        try {
          header = nlohmann::json::parse(line.substr(pos));
        } catch (const nlohmann::json::exception& ex) {
          throw FormatError(std::string("bad header: ") + ex.what(), number);
        }
      }
      continue;
    }
    std::istringstream tokens(line);
    std::string label, rank, radius, angle, extra;
    if (!(tokens >> label >> rank >> radius >> angle) || (tokens >> extra)) {
      throw FormatError("expected label, rank, radius, angle", number);
    }
    rows.push_back({label, parse_int(rank, number), parse_real(radius, number), parse_real(angle, number), number});
  }
  if (rows.empty()) throw FormatError("coordinate file is empty");
  const std::size_t n = rows.size();
  if (companion && companion->node_count() != n) {
    throw FormatError("coordinate file has " + std::to_string(n) + " nodes, edge list has " +
                      std::to_string(companion->node_count()));
  }

  CoordinatesRead r;
  auto& e = r.embedding;
  if (header.contains("params")) e.params = params_from_json(header["params"]);
  if (header.contains("provenance")) e.provenance = provenance_from_json(header["provenance"]);
  e.params.t = static_cast<std::int64_t>(n);

  std::unordered_map<std::string, NodeId> index;
  if (companion) {
    for (std::size_t v = 0; v < n; ++v) index.emplace(companion->label(static_cast<NodeId>(v)), static_cast<NodeId>(v));
    r.labels = companion->labels();
  } else {
    r.labels.resize(n);
  }
  e.order.assign(n, 0);
  e.rank.assign(n, 0);
  e.radii.assign(n, 0.0);
  e.angles.assign(n, 0.0);
  std::vector<char> rank_used(n + 1, 0);
  std::vector<char> node_used(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& row = rows[k];
    NodeId v = static_cast<NodeId>(k);
    if (companion) {
      const auto it = index.find(row.label);
      if (it == index.end()) throw FormatError("label '" + row.label + "' is not in the edge list", row.line);
      v = it->second;
    } else {
      r.labels[v] = row.label;
    }
    if (node_used[v]) throw FormatError("label '" + row.label + "' appears twice", row.line);
    node_used[v] = 1;
    if (row.rank < 1 || row.rank > static_cast<std::int64_t>(n)) throw FormatError("rank out of range", row.line);
    if (rank_used[static_cast<std::size_t>(row.rank)]) throw FormatError("rank collision", row.line);
    rank_used[static_cast<std::size_t>(row.rank)] = 1;
    if (!(row.angle >= 0.0 && row.angle < kTwoPi)) throw FormatError("angle outside [0, 2pi)", row.line);
    if (!(row.radius >= 0.0) || !std::isfinite(row.radius)) throw FormatError("invalid radius", row.line);
    e.order[static_cast<std::size_t>(row.rank - 1)] = v;
    e.rank[v] = row.rank;
    e.radii[v] = row.radius;
    e.angles[v] = row.angle;
  }
  return r;
}

CoordinatesRead read_coordinates(const std::filesystem::path& path, const AdjacencySnapshot* companion) {
  auto in = open_in(path);
  return read_coordinates(in, companion);
}

void write_json(const nlohmann::json& j, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

nlohmann::json read_json(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(path.string() + ": " + ex.what());
  }
}

}  // namespace hypermap
