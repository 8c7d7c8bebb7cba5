#include "doctest.h"

#include <set>
#include <utility>

#include "fixtures.hpp"
#include "gentle/fringe.hpp"

using namespace gentle;

namespace {

std::set<std::pair<std::string, std::string>> relation_ids(const BoundQuiver& q) {
  std::set<std::pair<std::string, std::string>> out;
  for (const Relation& r : q.relations)
    out.insert({q.arrows[r.second].id, q.arrows[r.first].id});
  return out;
}

}  // namespace

TEST_CASE("a2 fringe shape") {
  FringedAlgebra f = fringe(load_corpus("a2"));
  CHECK(f.hat.arrow_count() == 7);
  CHECK(f.fringe_vertices.size() == 6);
  CHECK(f.source_fringe_vertices.size() == 3);
  CHECK(f.sink_fringe_vertices.size() == 3);
  CHECK(relation_ids(f.hat) ==
        std::set<std::pair<std::string, std::string>>{
            {"1.fo1", "a"}, {"1.fo2", "1.fi1"}, {"a", "2.fi1"}, {"2.fo1", "2.fi2"}});
  CHECK(validate_gentle(f.hat).is_gentle);
}

TEST_CASE("gls fringe shape") {
  FringedAlgebra f = fringe(load_corpus("gls"));
  // the nonzero composite a∘b forces its match; the rest pair off greedily
  CHECK(relation_ids(f.hat) ==
        std::set<std::pair<std::string, std::string>>{
            {"a", "a"}, {"1.fo1", "b"}, {"b", "2.fi1"}, {"2.fo1", "2.fi2"}});
  CHECK(validate_gentle(f.hat).is_gentle);
}

TEST_CASE("sq33 fringe has the eight expected relations") {
  FringedAlgebra f = fringe(load_corpus("sq33"));
  std::set<std::pair<std::string, std::string>> expected{
      // the two base relations survive
      {"a1", "b1"},
      {"b2", "a2"},
      // four mixed base-fringe relations
      {"2.fo2", "a1"},
      {"2.fo1", "b2"},
      {"b1", "3.fi1"},
      {"a2", "3.fi2"},
      // two pure fringe relations from the swap at the relation corners
      {"1.fo1", "1.fi1"},
      {"4.fo1", "4.fi1"},
  };
  CHECK(relation_ids(f.hat) == expected);
  CHECK(f.hat.relations.size() == 8);
  CHECK(validate_gentle(f.hat).is_gentle);
}

TEST_CASE("every base vertex of a fringed algebra has full degree") {
  for (const char* name : {"a2", "ex22", "sq33", "gls", "grid_2_4"}) {
    CAPTURE(name);
    FringedAlgebra f = fringe(load_corpus(name));
    for (int v = 0; v < f.base_vertex_count; ++v) {
      CHECK(f.hat.in_arrows[v].size() == 2);
      CHECK(f.hat.out_arrows[v].size() == 2);
    }
    for (int v : f.source_fringe_vertices) {
      CHECK(f.hat.in_arrows[v].empty());
      CHECK(f.hat.out_arrows[v].size() == 1);
    }
    for (int v : f.sink_fringe_vertices) {
      CHECK(f.hat.out_arrows[v].empty());
      CHECK(f.hat.in_arrows[v].size() == 1);
    }
  }
}

TEST_CASE("arrow census") {
  for (const char* name : {"a2", "ex22", "sq33", "gls", "grid_2_4"}) {
    CAPTURE(name);
    ArrowCensus c = arrow_census(fringe(load_corpus(name)));
    CHECK(c.holds());
  }
  CHECK(arrow_census(fringe(inline_quiver(kA3))).holds());
  CHECK(arrow_census(fringe(inline_quiver(kKronecker))).holds());
  ArrowCensus grid = arrow_census(fringe(load_corpus("grid_2_4")));
  CHECK(grid.expected == 4 + 2 * 4);
}

TEST_CASE("fringe rejects non gentle input") {
  BoundQuiver bad = inline_quiver(
      "algebra bad\n"
      "vertices: 1\n"
      "arrow a: 1 -> 1\n");
  CHECK_THROWS_AS(fringe(bad), NotGentleError);
}
