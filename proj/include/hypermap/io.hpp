#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hypermap/embedding.hpp"
#include "hypermap/graph.hpp"
#include "hypermap/params.hpp"

namespace hypermap {

/// Malformed input file; line is 0 when not tied to one line.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EdgeListRead {
  AdjacencySnapshot graph;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

/// Two whitespace-separated labels per line; '#' lines are comments.
/// Labels get dense indices in order of first appearance.
EdgeListRead read_edge_list(std::istream& in);
EdgeListRead read_edge_list(const std::filesystem::path& path);

void write_edge_list(const AdjacencySnapshot& graph, std::ostream& out);
void write_edge_list(const AdjacencySnapshot& graph, const std::filesystem::path& path);

/// Header "# {json}" with params and provenance, then one
/// "label rank radius angle" line per node in rank order; reals use 17
/// significant digits so reading back is bit-exact.
void write_coordinates(const Embedding& embedding, const std::vector<std::string>& labels, std::ostream& out);
void write_coordinates(const Embedding& embedding, const std::vector<std::string>& labels,
                       const std::filesystem::path& path);

struct CoordinatesRead {
  Embedding embedding;
  std::vector<std::string> labels;  // per node index of the embedding
};

/// Without a companion graph, nodes are indexed in file order. With one,
/// node indices follow the graph and every label must match exactly.
CoordinatesRead read_coordinates(std::istream& in, const AdjacencySnapshot* companion = nullptr);
CoordinatesRead read_coordinates(const std::filesystem::path& path, const AdjacencySnapshot* companion = nullptr);

nlohmann::json to_json(const ModelParams& params);
ModelParams params_from_json(const nlohmann::json& j);
nlohmann::json to_json(const EmbeddingProvenance& prov);
EmbeddingProvenance provenance_from_json(const nlohmann::json& j);

/// Writes JSON with two-space indentation and a trailing newline.
void write_json(const nlohmann::json& j, const std::filesystem::path& path);
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace hypermap
