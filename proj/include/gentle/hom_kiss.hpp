#pragma once

#include "gentle/ar_translate.hpp"
#include "gentle/strings.hpp"

namespace gentle {

// A factorization C = F E D splits the word into consecutive intervals
// D = [0, lo), E = [lo, hi), F = [hi, n). E is a quotient middle when the
// letter before it is inverse and the letter after it is direct (a peak), and
// a submodule middle when the signs are swapped (a valley); missing letters
// at the ends impose nothing.
std::vector<Interval> quotient_middles(const BoundQuiver& q,
                                       const std::vector<SignedLetter>& word,
                                       bool require_flanks = false);
std::vector<Interval> submodule_middles(const BoundQuiver& q,
                                        const std::vector<SignedLetter>& word,
                                        bool require_flanks = false);

struct Factorization {
  Interval middle;
  StringWalk f, e, d;
};
std::vector<Factorization> quotient_factorizations(const BoundQuiver& q, const StringWalk& c);
std::vector<Factorization> submodule_factorizations(const BoundQuiver& q, const StringWalk& c);

// A basis vector of Hom(M(c1), M(c2)): a quotient middle of c1 matching a
// submodule middle of c2, read either way around.
struct AdmissiblePair {
  Interval in_src;
  Interval in_dst;
  bool flipped = false;  // middle of c1 equals the inverse of the middle of c2
  bool operator==(const AdmissiblePair&) const = default;
};
std::vector<AdmissiblePair> admissible_pairs(const BoundQuiver& q, const StringWalk& c1,
                                             const StringWalk& c2);
// Same, on canonical representatives of the two walks.
std::vector<AdmissiblePair> hom_basis(const BoundQuiver& q, const StringWalk& c1,
                                      const StringWalk& c2);

// A kiss is an admissible pair all four of whose flanks have positive length.
struct Kiss {
  Interval in_src;
  Interval in_dst;
  bool flipped = false;
  SignedLetter sigma, zeta;    // flank letters around the middle in the source
  SignedLetter theta, gamma;   // flank letters around the middle in the target
};
std::vector<Kiss> kisses(const BoundQuiver& q, const std::vector<SignedLetter>& x,
                         const std::vector<SignedLetter>& y);
std::vector<Kiss> kisses(const FringedAlgebra& f, const LongString& x, const LongString& y);

// dim Hom(M(x), tau M(y)) as the kiss count of the cohook completions.
int hom_tau_dim(const FringedAlgebra& f, const StringWalk& x, const StringWalk& y);

// Transport of a kiss between cohook completions to an admissible pair from
// the base word of x to the tau translate of y (in its cohook-slice
// orientation). Fails loudly if the kiss does not restrict.
struct GraphMapImage {
  AdmissiblePair pair;
  StringWalk tau_walk;  // slice of cohook(y) in slice orientation
};
GraphMapImage kiss_to_graph_map(const FringedAlgebra& f, const Kiss& k, const StringWalk& x,
                                const StringWalk& y);

}  // namespace gentle
