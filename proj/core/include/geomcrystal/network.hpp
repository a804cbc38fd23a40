#pragma once

#include <string>
#include <vector>

#include "geomcrystal/matrix.hpp"
#include "geomcrystal/rational.hpp"

namespace geomcrystal {

struct NetworkEdge {
  int from;
  int to;
  Rat weight;
  std::string label;  // empty for unlabeled weight-one edges
};

// Acyclic directed network with weighted edges and ordered sources and sinks.
// Vertices carry grid coordinates (row from the top, column from the left) for drawing.
class PlanarNetwork {
 public:
  int add_vertex(int row, int col, std::string name = {});
  void add_edge(int from, int to, Rat weight, std::string label = {});
  void set_sources(std::vector<int> v) { sources_ = std::move(v); }
  void set_sinks(std::vector<int> v) { sinks_ = std::move(v); }

  int vertex_count() const { return static_cast<int>(coords_.size()); }
  const std::vector<NetworkEdge>& edges() const { return edges_; }
  const std::vector<int>& sources() const { return sources_; }
  const std::vector<int>& sinks() const { return sinks_; }
  std::pair<int, int> coord(int v) const { return coords_[v]; }
  const std::string& name(int v) const { return names_[v]; }

  // M_ij = sum over paths from source i to sink j of the product of edge weights.
  RatMatrix weight_matrix() const;
  // Signed sum over vertex-disjoint path families from the given sources to the
  // given sinks (1-based positions), which equals the corresponding minor.
  Rat lindstrom_minor(const std::vector<int>& source_pos, const std::vector<int>& sink_pos) const;
  std::string to_dot(const std::string& graph_name = "N") const;

 private:
  std::vector<int> topological_order() const;

  std::vector<std::pair<int, int>> coords_;
  std::vector<std::string> names_;
  std::vector<NetworkEdge> edges_;
  std::vector<int> sources_, sinks_;
};

// Concatenation: sink j of a is identified with source j of b.
PlanarNetwork glue(const PlanarNetwork& a, const PlanarNetwork& b);

}  // namespace geomcrystal
