#pragma once

#include <optional>

#include "gentle/fringe.hpp"
#include "gentle/strings.hpp"

namespace gentle {

enum class Side { Start, End };

// Cohook at Start: prepend delta^- for the unique admissible arrow delta
// leaving start(w), then extend with direct letters as far as possible.
// Cohook at End: append the unique admissible arrow leaving end(w), then
// extend with inverse letters as far as possible. For a lazy walk the
// outgoing arrows at its vertex are assigned in id order, first to the Start
// side, second to the End side. Returns std::nullopt when no arrow fits;
// orientation of w is preserved.
std::optional<StringWalk> add_cohook(const BoundQuiver& q, const StringWalk& w, Side side);

// Hook removal at Start: drop everything up to and including the first direct
// letter. At End: drop the last inverse letter and everything after it.
// std::nullopt when there is no such letter.
std::optional<StringWalk> remove_hook(const BoundQuiver& q, const StringWalk& w, Side side);

struct TauResult {
  bool zero = false;
  StringWalk walk;  // meaningful when !zero; not canonicalized
};

// Auslander-Reiten translate of the string module M(w): add cohooks where
// possible, remove hooks at the remaining ends, zero when a removal is
// undefined (w projective).
TauResult tau(const BoundQuiver& q, const StringWalk& w);

// A walk in the fringed quiver whose both endpoints are fringe vertices.
struct LongString {
  enum class Kind { Cohook, Injective };
  Kind kind = Kind::Cohook;
  StringWalk base;                     // Cohook: the base string (canonical)
  int vertex = -1;                     // Injective: the hat vertex
  std::vector<SignedLetter> oriented;  // working orientation in hat
  int d_len = 0;                       // Cohook: direct-arm length (start side)
  int i_len = 0;                       // Cohook: inverse-arm length (end side)
  int apex = 0;                        // Injective: slot of the socle vertex

  int n() const { return static_cast<int>(oriented.size()); }
  // Cohook layout in traversal order: [D arm | alpha^- | base | beta | I arm].
  int alpha_idx() const { return d_len; }
  int y_start() const { return d_len + 1; }
  int y_end() const { return n() - i_len - 1; }  // slot just before beta
  int beta_idx() const { return n() - i_len - 1; }
  StringWalk walk() const {
    // only a lazy injective string (source fringe vertex) has no letters
    return oriented.empty() ? StringWalk{{}, vertex} : StringWalk{oriented, -1};
  }
};

// Completion of a base string to a long string; equals the tau-translate over
// the fringed algebra (where nothing is projective).
LongString cohook_completion(const FringedAlgebra& f, const StringWalk& base_walk);

// The injective string at a hat vertex: both maximal inward arms glued at it.
LongString injective_string(const FringedAlgebra& f, int hat_vertex);

// Occurrence of tau(base, w) inside cohook_completion(w): the tau translate
// together with its letter interval in the cohook orientation.
struct TauAnchor {
  TauResult result;
  Interval in_cohook;  // valid when !result.zero
};
TauAnchor tau_with_anchor(const FringedAlgebra& f, const StringWalk& w);

// True when tau(base, w) occurs as a submodule factorization middle of
// cohook_completion(w); vacuously true for projective w.
bool tau_submodule_check(const FringedAlgebra& f, const StringWalk& w);

}  // namespace gentle
