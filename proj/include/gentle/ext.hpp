#pragma once

#include "gentle/hom_kiss.hpp"

namespace gentle {

// A graph map is two-sided when at least one D part and at least one F part
// of its two factorizations has positive length.
bool is_two_sided(const AdmissiblePair& t, int n_src, int n_dst);

// Base arrows along which Y and X (in some orientations) glue to a string
// Y alpha^- X, i.e. arrows realizing connecting extensions of Y by X.
std::vector<int> connectable(const BoundQuiver& q, const StringWalk& y, const StringWalk& x);

// Basis vectors of Hom(X, tau_hat Y) that factor through an injective: the
// admissible pairs from X to cohook(Y) whose target middle lies on a cohook
// arm and which do not arise from a connecting extension.
std::vector<AdmissiblePair> injective_factoring_basis(const FringedAlgebra& f,
                                                      const StringWalk& x,
                                                      const StringWalk& y);

// One basis extension 0 -> X -> middle -> Y -> 0. Connecting extensions have
// an indecomposable middle Y alpha^- X; two-sided ones have a two-part middle.
struct ExtensionSeq {
  bool connecting = false;
  int arrow = -1;       // gluing arrow for connecting extensions
  StringWalk mid1;
  std::optional<StringWalk> mid2;
};
std::vector<ExtensionSeq> ext_basis(const FringedAlgebra& f, const StringWalk& y,
                                    const StringWalk& x);

// dim Ext^1(Y, X) = dim Hom(X, tau Y) - #(injective factoring basis).
int ext_dim(const FringedAlgebra& f, const StringWalk& y, const StringWalk& x);

}  // namespace gentle
