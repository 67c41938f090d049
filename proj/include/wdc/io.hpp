#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wdc/graph.hpp"

namespace wdc {

// A graph with optional lists and coloring, as stored on disk.  The text
// form is canonical (see docs/graph_format.md), so write_graph_file after
// read_graph_file reproduces the input byte for byte.
struct GraphFile {
  EmbeddedGraph graph;
  std::optional<ListAssignment> lists;
  std::optional<Coloring> coloring;

  bool operator==(const GraphFile&) const = default;
};

inline constexpr int kGraphFormatVersion = 1;

// Throws InvalidInput with a line number on malformed text, and
// EulerViolation when the rotations are not a plane embedding.
GraphFile parse_graph_file(std::string_view text);
std::string format_graph_file(const GraphFile& file);

// Lists alone: "wdc-lists 1", "vertices N", one "l" record per vertex, "end".
ListAssignment parse_lists_file(std::string_view text, int expected_vertices);
std::string format_lists_file(const ListAssignment& lists);

GraphFile read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const GraphFile& file);

std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

}  // namespace wdc
