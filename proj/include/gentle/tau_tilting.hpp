#pragma once

#include <set>
#include <string>

#include "gentle/ext.hpp"

namespace gentle {

struct CensusMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BidirectionalKiss : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An indecomposable summand of a support tau-tilting pair: either a string
// module or a shifted projective P_v[1].
struct CollectionItem {
  bool shifted = false;
  StringWalk walk;   // module items
  int vertex = -1;   // shifted items: the base vertex
  bool operator==(const CollectionItem&) const = default;
};
std::string item_key(const BoundQuiver& q, const CollectionItem& item);

struct Collection {
  std::vector<CollectionItem> items;  // sorted by item_key
};
std::string collection_key(const BoundQuiver& q, const Collection& c);

bool is_tau_rigid(const FringedAlgebra& f, const StringWalk& w);
bool is_brick(const BoundQuiver& q, const StringWalk& w);
bool compatible(const FringedAlgebra& f, const CollectionItem& a, const CollectionItem& b);

// The long string attached to an item: the cohook completion for a module,
// the injective string at the vertex for a shifted projective.
LongString long_string_of(const FringedAlgebra& f, const CollectionItem& item);

// All maximal collections of pairwise compatible items; every collection has
// exactly |Q0| items. Computed on the module side and revalidated as maximal
// non-kissing collections of long strings. Throws InfiniteTypeError when the
// algebra has a band.
std::vector<Collection> maximal_collections(const FringedAlgebra& f);

// Fac containment: every slot of y is covered by a submodule middle of y
// that also occurs (up to inversion) as a quotient middle of some generator,
// those being exactly the images of graph maps from the generators.
bool fac_contains(const BoundQuiver& q, const std::vector<StringWalk>& gens,
                  const StringWalk& y);

// The strings lying in Fac(module part of c).
std::vector<StringWalk> torsion_class_strings(const FringedAlgebra& f, const Collection& c);

// The walk picked out by a torsion class S and a hat arrow alpha: grow
// forward from the end of alpha appending a direct letter after a prefix in S
// and an inverse letter otherwise, dually backward from its start, stopping
// at fringe vertices. s_keys holds walk_key values of the strings of S.
StringWalk mc_walk(const FringedAlgebra& f, const std::set<std::string>& s_keys, int arrow);

// Checks the walk census for a collection: each module's cohook twice, the
// injective string twice for every unsupported base vertex, and once for
// every sink fringe vertex. Throws CensusMismatch naming an offending arrow.
void verify_cang(const FringedAlgebra& f, const Collection& c);

// Cover edges run from the greater collection to the lesser one; exchanged
// long strings must kiss in exactly one direction.
struct TorsionPoset {
  std::vector<Collection> nodes;
  struct Cover {
    int upper = -1, lower = -1;
    CollectionItem upper_item, lower_item;  // the exchanged items
    int kiss_count = 0;                     // kisses from upper item to lower item
  };
  std::vector<Cover> covers;
  int top = -1, bottom = -1;
};
TorsionPoset poset(const FringedAlgebra& f);
std::string poset_dot(const BoundQuiver& q, const TorsionPoset& p);

struct KissUniquenessReport {
  bool all_bricks = false;  // every tau-rigid string is a brick
  bool all_ones = false;    // every cover edge kisses exactly once
  struct Edge {
    std::string upper_item, lower_item;
    int count = 0;
  };
  std::vector<Edge> edges;
};
KissUniquenessReport kiss_uniqueness_report(const FringedAlgebra& f);

}  // namespace gentle
