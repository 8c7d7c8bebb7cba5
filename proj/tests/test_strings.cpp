#include "doctest.h"

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "gentle/hom_kiss.hpp"
#include "gentle/strings.hpp"

using namespace gentle;

TEST_CASE("literal round trip and canonical keys") {
  BoundQuiver q = load_corpus("gls");
  StringWalk w = parse_string_literal(q, "b^- a b");
  CHECK(w.length() == 3);
  CHECK(to_literal(q, canonical(q, w)) == to_literal(q, canonical(q, inverse_walk(w, q))));
  CHECK(walk_key(q, w) == walk_key(q, inverse_walk(w, q)));

  StringWalk lazy = parse_string_literal(q, "e(2)");
  CHECK(lazy.lazy());
  CHECK(to_literal(q, lazy) == "e(2)");
  CHECK(start_vertex(q, lazy) == q.vertex_index.at("2"));
}

TEST_CASE("invalid words are rejected") {
  BoundQuiver q = load_corpus("gls");
  CHECK_THROWS_AS(parse_string_literal(q, "a a"), StringError);     // the relation
  CHECK_THROWS_AS(parse_string_literal(q, "a a^-"), StringError);   // backtracks
  CHECK_THROWS_AS(parse_string_literal(q, "b b"), StringError);     // endpoints clash
  CHECK_THROWS_AS(parse_string_literal(q, "e(7)"), StringError);    // no such vertex
  CHECK_THROWS_AS(parse_string_literal(q, "c"), StringError);       // no such arrow
}

TEST_CASE("string counts") {
  BoundQuiver gls = load_corpus("gls");
  CHECK(enumerate_strings(gls, 2).size() == 6);
  CHECK(enumerate_strings(gls, 0).size() == 7);

  BoundQuiver a2 = load_corpus("a2");
  CHECK(enumerate_strings(a2, 0).size() == 3);

  BoundQuiver sq33 = load_corpus("sq33");
  CHECK(enumerate_strings(sq33, 0).size() == 10);

  BoundQuiver grid = load_corpus("grid_2_4");
  CHECK(enumerate_strings(grid, 0).size() == 10);

  BoundQuiver a3 = inline_quiver(kA3);
  CHECK(enumerate_strings(a3, 0).size() == 6);
}

TEST_CASE("gls strings are the expected seven") {
  BoundQuiver q = load_corpus("gls");
  std::set<std::string> keys;
  for (const StringWalk& w : enumerate_strings(q, 0)) keys.insert(walk_key(q, w));
  std::set<std::string> expected;
  for (const char* lit : {"e(1)", "e(2)", "a", "b", "a b", "b^- a", "b^- a b"})
    expected.insert(walk_key(q, parse_string_literal(q, lit)));
  CHECK(keys == expected);
}

TEST_CASE("bands") {
  BoundQuiver ex22 = load_corpus("ex22");
  std::vector<Band> bands = detect_bands(ex22);
  REQUIRE(bands.size() == 1);
  CHECK(walk_key(ex22, bands[0].walk) ==
        walk_key(ex22, parse_string_literal(ex22, "b1 a2^- b2^- a1")));
  CHECK_THROWS_AS(enumerate_strings(ex22, 0), InfiniteTypeError);

  BoundQuiver kron = inline_quiver(kKronecker);
  std::vector<Band> kb = detect_bands(kron);
  REQUIRE(kb.size() == 1);
  CHECK(walk_key(kron, kb[0].walk) == walk_key(kron, parse_string_literal(kron, "b^- a")));
  CHECK_THROWS_AS(enumerate_strings(kron, 0), InfiniteTypeError);

  for (const char* name : {"a2", "sq33", "gls", "grid_2_4"}) {
    CAPTURE(name);
    CHECK(detect_bands(load_corpus(name)).empty());
  }
}

TEST_CASE("factorizations are invariant under inversion") {
  BoundQuiver ex22 = load_corpus("ex22");
  StringWalk c = parse_string_literal(ex22, "a2 b1^- a1^- b2");
  CHECK(quotient_middles(ex22, c.letters).size() == 7);

  for (const char* name : {"a2", "sq33", "gls", "grid_2_4"}) {
    BoundQuiver q = load_corpus(name);
    for (const StringWalk& w : enumerate_strings(q, 0)) {
      if (w.lazy()) continue;
      StringWalk r = inverse_walk(w, q);
      CAPTURE(to_literal(q, w));
      CHECK(quotient_middles(q, w.letters).size() == quotient_middles(q, r.letters).size());
      CHECK(submodule_middles(q, w.letters).size() == submodule_middles(q, r.letters).size());
      // the inversion bijection sends [lo, hi) to [n-hi, n-lo)
      const int n = w.length();
      std::set<std::pair<int, int>> qm, qr;
      for (const Interval& iv : quotient_middles(q, w.letters)) qm.insert({iv.lo, iv.hi});
      for (const Interval& iv : quotient_middles(q, r.letters)) qr.insert({n - iv.hi, n - iv.lo});
      CHECK(qm == qr);
    }
  }
}

TEST_CASE("dimension vectors") {
  BoundQuiver gls = load_corpus("gls");
  std::vector<int> d = dimension_vector(gls, parse_string_literal(gls, "b^- a b"));
  CHECK(d[gls.vertex_index.at("1")] == 2);
  CHECK(d[gls.vertex_index.at("2")] == 2);
  std::vector<int> p1 = dimension_vector(gls, parse_string_literal(gls, "a"));
  CHECK(p1[gls.vertex_index.at("1")] == 2);
  CHECK(p1[gls.vertex_index.at("2")] == 0);
}
