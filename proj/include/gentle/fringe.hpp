#pragma once

#include "gentle/bound_quiver.hpp"

namespace gentle {

struct NotGentleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The fringed algebra: every base vertex is padded to two incoming and two
// outgoing arrows with fresh fringe vertices, and the ideal is extended so the
// result stays gentle. Base vertices and arrows keep their indices, so base
// walks are valid in `hat` unchanged.
struct FringedAlgebra {
  BoundQuiver base;
  BoundQuiver hat;
  int base_vertex_count = 0;
  int base_arrow_count = 0;
  std::vector<int> fringe_vertices;       // hat vertex indices
  std::vector<int> source_fringe_vertices;
  std::vector<int> sink_fringe_vertices;

  bool is_base_vertex(int v) const { return v < base_vertex_count; }
  bool is_base_arrow(int a) const { return a < base_arrow_count; }
};

// Fringe vertex ids are "<v>.in1", "<v>.in2", "<v>.out1", "<v>.out2" and the
// matching arrow ids "<v>.fi1", "<v>.fi2", "<v>.fo1", "<v>.fo2"; only the
// missing slots are created. The nonzero in/out matching at each base vertex
// honors the base ideal and otherwise pairs arrows in id order.
FringedAlgebra fringe(const BoundQuiver& q);

struct ArrowCensus {
  int hat_arrows = 0;
  int expected = 0;  // sink fringe vertices + 2 * base vertices
  bool holds() const { return hat_arrows == expected; }
};
ArrowCensus arrow_census(const FringedAlgebra& f);

}  // namespace gentle
