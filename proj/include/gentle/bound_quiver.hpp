#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct Arrow {
  std::string id;
  int src = -1;
  int dst = -1;
};

// A relation "g f" kills the composite g∘f (f is traversed first).
struct Relation {
  int second = -1;
  int first = -1;
};

struct GentleReport {
  bool is_string_algebra = false;
  bool is_gentle = false;
  std::vector<std::string> violations;
};

struct BoundQuiver {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  std::map<std::string, int> vertex_index;
  std::map<std::string, int> arrow_index;
  // Arrow indices incident to each vertex, sorted by arrow id.
  std::vector<std::vector<int>> out_arrows;
  std::vector<std::vector<int>> in_arrows;
  std::set<std::pair<int, int>> zero_pairs;  // (second, first)

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int arrow_count() const { return static_cast<int>(arrows.size()); }
  bool is_zero(int second, int first) const {
    return zero_pairs.count({second, first}) != 0;
  }
  void rebuild_indices();
};

BoundQuiver parse_quiver(const std::string& text);
std::string serialize_quiver(const BoundQuiver& q);
GentleReport validate_gentle(const BoundQuiver& q);

}  // namespace gentle
