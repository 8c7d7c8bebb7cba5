#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "gentle/ar_translate.hpp"
#include "gentle/hom_kiss.hpp"
#include "gentle/oracle.hpp"

using namespace gentle;

namespace {

std::vector<BoundQuiver> finite_algebras() {
  std::vector<BoundQuiver> v;
  for (const char* name : {"a2", "sq33", "gls", "grid_2_4"}) v.push_back(load_corpus(name));
  v.push_back(inline_quiver(kA3));
  return v;
}

}  // namespace

TEST_CASE("hom basis sizes match the linear oracle") {
  for (const BoundQuiver& q : finite_algebras()) {
    std::vector<StringWalk> strings = enumerate_strings(q, 0);
    for (const StringWalk& x : strings)
      for (const StringWalk& y : strings) {
        CAPTURE(q.name);
        CAPTURE(to_literal(q, x));
        CAPTURE(to_literal(q, y));
        int lin = oracle::hom_dim_linear(q, oracle::rep_of_string(q, x),
                                         oracle::rep_of_string(q, y));
        CHECK(static_cast<int>(hom_basis(q, x, y).size()) == lin);
      }
  }
}

TEST_CASE("gls endomorphisms of P1") {
  BoundQuiver q = load_corpus("gls");
  StringWalk p1 = parse_string_literal(q, "a");
  CHECK(hom_basis(q, p1, p1).size() == 2);
}

TEST_CASE("kiss count equals hom into the translate") {
  for (const BoundQuiver& q : finite_algebras()) {
    FringedAlgebra f = fringe(q);
    std::vector<StringWalk> strings;
    for (const StringWalk& s : enumerate_strings(q, 0))
      if (s.length() <= 4) strings.push_back(s);
    for (const StringWalk& x : strings)
      for (const StringWalk& y : strings) {
        CAPTURE(q.name);
        CAPTURE(to_literal(q, x));
        CAPTURE(to_literal(q, y));
        oracle::Representation ty = oracle::tau_linear(q, oracle::rep_of_string(q, y));
        int lin = oracle::hom_dim_linear(q, oracle::rep_of_string(q, x), ty);
        CHECK(hom_tau_dim(f, x, y) == lin);
      }
  }
}

TEST_CASE("kisses are orientation invariant") {
  BoundQuiver q = load_corpus("gls");
  FringedAlgebra f = fringe(q);
  std::vector<StringWalk> strings = enumerate_strings(q, 0);
  for (const StringWalk& x : strings)
    for (const StringWalk& y : strings) {
      LongString cx = cohook_completion(f, x), cy = cohook_completion(f, y);
      size_t base = kisses(f, cx, cy).size();
      LongString cxi = cx, cyi = cy;
      // flipping the working orientation of either side must not matter
      std::reverse(cxi.oriented.begin(), cxi.oriented.end());
      for (SignedLetter& l : cxi.oriented) l = flip(l);
      std::swap(cxi.d_len, cxi.i_len);
      CHECK(kisses(f.hat, cxi.oriented, cy.oriented).size() == base);
      std::reverse(cyi.oriented.begin(), cyi.oriented.end());
      for (SignedLetter& l : cyi.oriented) l = flip(l);
      CHECK(kisses(f.hat, cx.oriented, cyi.oriented).size() == base);
    }
}

TEST_CASE("injective strings never kiss") {
  for (const BoundQuiver& q : finite_algebras()) {
    FringedAlgebra f = fringe(q);
    for (int v = 0; v < f.base_vertex_count; ++v) {
      LongString iv = injective_string(f, v);
      for (const StringWalk& y : enumerate_strings(q, 0)) {
        CAPTURE(q.name);
        CAPTURE(v);
        CAPTURE(to_literal(q, y));
        CHECK(kisses(f, iv, cohook_completion(f, y)).empty());
      }
    }
  }
}

TEST_CASE("each kiss restricts to a graph map into the translate") {
  for (const BoundQuiver& q : finite_algebras()) {
    FringedAlgebra f = fringe(q);
    std::vector<StringWalk> strings = enumerate_strings(q, 0);
    for (const StringWalk& x : strings)
      for (const StringWalk& y : strings) {
        CAPTURE(q.name);
        CAPTURE(to_literal(q, x));
        CAPTURE(to_literal(q, y));
        LongString cx = cohook_completion(f, x), cy = cohook_completion(f, y);
        std::vector<Kiss> ks = kisses(f, cx, cy);
        CHECK(static_cast<int>(ks.size()) == hom_tau_dim(f, x, y));
        for (const Kiss& k : ks) CHECK_NOTHROW(kiss_to_graph_map(f, k, x, y));
      }
  }
}
