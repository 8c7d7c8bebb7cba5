#include "doctest.h"

#include "fixtures.hpp"
#include "gentle/oracle.hpp"

using namespace gentle;
using oracle::Representation;

namespace {

Representation rep(const BoundQuiver& q, const char* lit) {
  return oracle::rep_of_string(q, parse_string_literal(q, lit));
}

bool same_dims(const Representation& a, const Representation& b) { return a.dims == b.dims; }

}  // namespace

TEST_CASE("a2 oracle values") {
  BoundQuiver q = load_corpus("a2");
  CHECK(tau_linear(q, rep(q, "e(2)")).dims == rep(q, "e(1)").dims);
  CHECK(tau_linear(q, rep(q, "e(1)")).total_dim() == 0);
  CHECK(tau_linear(q, rep(q, "a")).total_dim() == 0);

  CHECK(oracle::hom_dim_linear(q, rep(q, "a"), rep(q, "e(1)")) == 0);
  CHECK(oracle::hom_dim_linear(q, rep(q, "a"), rep(q, "e(2)")) == 1);
  CHECK(oracle::hom_dim_linear(q, rep(q, "e(2)"), rep(q, "a")) == 0);
  CHECK(oracle::hom_dim_linear(q, rep(q, "e(1)"), rep(q, "a")) == 1);

  CHECK(oracle::ext1_dim_linear(q, rep(q, "e(2)"), rep(q, "e(1)")) == 1);
  CHECK(oracle::ext1_dim_linear(q, rep(q, "e(1)"), rep(q, "e(2)")) == 0);
  CHECK(oracle::ext1_dim_linear(q, rep(q, "a"), rep(q, "e(1)")) == 0);
}

TEST_CASE("a3 oracle values") {
  BoundQuiver q = inline_quiver(kA3);
  CHECK(same_dims(oracle::tau_linear(q, rep(q, "b")), rep(q, "a")));
  CHECK(oracle::ext1_dim_linear(q, rep(q, "b"), rep(q, "a")) == 1);
  CHECK(oracle::hom_dim_linear(q, rep(q, "a b"), rep(q, "a b")) == 1);
}

TEST_CASE("gls oracle values") {
  BoundQuiver q = load_corpus("gls");
  // P1 = M(a) has a two dimensional endomorphism ring
  CHECK(oracle::hom_dim_linear(q, rep(q, "a"), rep(q, "a")) == 2);
  CHECK(oracle::ext1_dim_linear(q, rep(q, "a"), rep(q, "a")) == 0);

  CHECK(same_dims(oracle::tau_linear(q, rep(q, "e(1)")), rep(q, "b")));
  CHECK(same_dims(oracle::tau_linear(q, rep(q, "e(2)")), rep(q, "a b")));
  CHECK(same_dims(oracle::tau_linear(q, rep(q, "b")), rep(q, "b^- a")));
  CHECK(same_dims(oracle::tau_linear(q, rep(q, "b^- a")), rep(q, "e(1)")));
  CHECK(same_dims(oracle::tau_linear(q, rep(q, "b^- a b")), rep(q, "a")));
  CHECK(oracle::tau_linear(q, rep(q, "a")).total_dim() == 0);
  CHECK(oracle::tau_linear(q, rep(q, "a b")).total_dim() == 0);

  CHECK(oracle::ext1_dim_linear(q, rep(q, "e(1)"), rep(q, "b")) == 1);
  CHECK(oracle::ext1_dim_linear(q, rep(q, "e(1)"), rep(q, "b^- a b")) == 0);
}

TEST_CASE("sq33 oracle values") {
  BoundQuiver q = load_corpus("sq33");
  CHECK(same_dims(oracle::tau_linear(q, rep(q, "b1")), rep(q, "e(4)")));
  // the projective at 3 dies under tau
  CHECK(oracle::tau_linear(q, rep(q, "a2 b1^-")).total_dim() == 0);
}

TEST_CASE("surjections") {
  BoundQuiver q = load_corpus("a2");
  std::vector<Representation> p2 = {rep(q, "a")};
  CHECK(oracle::surjection_exists(q, p2, rep(q, "e(2)")));
  CHECK(oracle::surjection_exists(q, p2, rep(q, "a")));
  CHECK_FALSE(oracle::surjection_exists(q, p2, rep(q, "e(1)")));
  std::vector<Representation> s1 = {rep(q, "e(1)")};
  CHECK(oracle::surjection_exists(q, s1, rep(q, "e(1)")));
  CHECK_FALSE(oracle::surjection_exists(q, s1, rep(q, "e(2)")));
}

TEST_CASE("hom basis matches hom dim") {
  BoundQuiver q = load_corpus("gls");
  Representation p1 = rep(q, "a");
  CHECK(oracle::hom_basis_linear(q, p1, p1).size() == 2);
}
