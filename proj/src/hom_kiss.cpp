#include "gentle/hom_kiss.hpp"

#include <algorithm>
#include <stdexcept>

namespace gentle {

namespace {

int word_slot_vertex(const BoundQuiver& q, const std::vector<SignedLetter>& w, int slot) {
  if (slot == 0) return source_of(q, w[0]);
  return target_of(q, w[slot - 1]);
}

std::vector<SignedLetter> inverse_letters(const std::vector<SignedLetter>& w) {
  std::vector<SignedLetter> out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(flip(*it));
  return out;
}

std::vector<Interval> middles(const std::vector<SignedLetter>& word, bool quotient,
                              bool require_flanks) {
  int n = static_cast<int>(word.size());
  std::vector<Interval> out;
  for (int lo = 0; lo <= n; ++lo) {
    if (lo == 0) {
      if (require_flanks) continue;
    } else if (word[lo - 1].inv != quotient) {
      continue;  // quotient wants an inverse left flank, submodule a direct one
    }
    for (int hi = lo; hi <= n; ++hi) {
      if (hi == n) {
        if (require_flanks) continue;
      } else if (word[hi].inv == quotient) {
        continue;  // quotient wants a direct right flank, submodule an inverse one
      }
      out.push_back({lo, hi});
    }
  }
  return out;
}

// Matches a middle of w1 against a middle of w2, as equal slices or as slices
// inverse to one another; lazy middles match on their slot vertex. A valid
// word never equals its own inverse, so the orientation flag is unambiguous.
std::optional<bool> middles_match(const BoundQuiver& q, const StringWalk& w1, Interval i1,
                                  const StringWalk& w2, Interval i2) {
  if (i1.length() != i2.length()) return std::nullopt;
  if (i1.length() == 0) {
    int v1 = w1.lazy() ? w1.base : word_slot_vertex(q, w1.letters, i1.lo);
    int v2 = w2.lazy() ? w2.base : word_slot_vertex(q, w2.letters, i2.lo);
    if (v1 == v2) return false;
    return std::nullopt;
  }
  std::vector<SignedLetter> s1 = slice(w1, i1);
  std::vector<SignedLetter> s2 = slice(w2, i2);
  if (s1 == s2) return false;
  if (s1 == inverse_letters(s2)) return true;
  return std::nullopt;
}

}  // namespace

std::vector<Interval> quotient_middles(const BoundQuiver&, const std::vector<SignedLetter>& word,
                                       bool require_flanks) {
  return middles(word, true, require_flanks);
}

std::vector<Interval> submodule_middles(const BoundQuiver&, const std::vector<SignedLetter>& word,
                                        bool require_flanks) {
  return middles(word, false, require_flanks);
}

std::vector<Factorization> quotient_factorizations(const BoundQuiver& q, const StringWalk& c) {
  std::vector<Factorization> out;
  int n = c.length();
  for (Interval iv : quotient_middles(q, c.letters)) {
    out.push_back({iv, substring(q, c, {iv.hi, n}), substring(q, c, iv),
                   substring(q, c, {0, iv.lo})});
  }
  return out;
}

std::vector<Factorization> submodule_factorizations(const BoundQuiver& q, const StringWalk& c) {
  std::vector<Factorization> out;
  int n = c.length();
  for (Interval iv : submodule_middles(q, c.letters)) {
    out.push_back({iv, substring(q, c, {iv.hi, n}), substring(q, c, iv),
                   substring(q, c, {0, iv.lo})});
  }
  return out;
}

std::vector<AdmissiblePair> admissible_pairs(const BoundQuiver& q, const StringWalk& c1,
                                             const StringWalk& c2) {
  std::vector<AdmissiblePair> out;
  for (Interval i1 : quotient_middles(q, c1.letters))
    for (Interval i2 : submodule_middles(q, c2.letters))
      if (auto flipped = middles_match(q, c1, i1, c2, i2))
        out.push_back({i1, i2, *flipped});
  return out;
}

std::vector<AdmissiblePair> hom_basis(const BoundQuiver& q, const StringWalk& c1,
                                      const StringWalk& c2) {
  return admissible_pairs(q, canonical(q, c1), canonical(q, c2));
}

std::vector<Kiss> kisses(const BoundQuiver& q, const std::vector<SignedLetter>& x,
                         const std::vector<SignedLetter>& y) {
  std::vector<Kiss> out;
  if (x.empty() || y.empty()) return out;  // four positive flanks need letters
  StringWalk xw{x, -1}, yw{y, -1};
  for (Interval i1 : quotient_middles(q, x, true))
    for (Interval i2 : submodule_middles(q, y, true))
      if (auto flipped = middles_match(q, xw, i1, yw, i2))
        out.push_back({i1, i2, *flipped, x[i1.lo - 1], x[i1.hi], y[i2.lo - 1], y[i2.hi]});
  return out;
}

std::vector<Kiss> kisses(const FringedAlgebra& f, const LongString& x, const LongString& y) {
  return kisses(f.hat, x.oriented, y.oriented);
}

int hom_tau_dim(const FringedAlgebra& f, const StringWalk& x, const StringWalk& y) {
  LongString lx = cohook_completion(f, x);
  LongString ly = cohook_completion(f, y);
  return static_cast<int>(kisses(f, lx, ly).size());
}

GraphMapImage kiss_to_graph_map(const FringedAlgebra& f, const Kiss& k, const StringWalk& x,
                                const StringWalk& y) {
  StringWalk xc = canonical(f.base, x);
  LongString lx = cohook_completion(f, xc);
  LongString ly = cohook_completion(f, y);
  if (k.in_src.lo < lx.y_start() || k.in_src.hi > lx.y_end())
    throw std::logic_error("kiss source middle leaves the base word");
  TauAnchor anchor = tau_with_anchor(f, y);
  if (anchor.result.zero) throw std::logic_error("kiss against a vanishing translate");
  if (k.in_dst.lo < anchor.in_cohook.lo || k.in_dst.hi > anchor.in_cohook.hi)
    throw std::logic_error("kiss target middle leaves the translate");

  GraphMapImage img;
  img.pair = {{k.in_src.lo - lx.y_start(), k.in_src.hi - lx.y_start()},
              {k.in_dst.lo - anchor.in_cohook.lo, k.in_dst.hi - anchor.in_cohook.lo},
              k.flipped};
  if (anchor.in_cohook.length() == 0) {
    img.tau_walk = anchor.result.walk;
  } else {
    img.tau_walk = StringWalk{{ly.oriented.begin() + anchor.in_cohook.lo,
                               ly.oriented.begin() + anchor.in_cohook.hi},
                              -1};
  }
  std::vector<AdmissiblePair> legal = admissible_pairs(f.base, xc, img.tau_walk);
  if (std::find(legal.begin(), legal.end(), img.pair) == legal.end())
    throw std::logic_error("kiss does not restrict to a graph map");
  return img;
}

}  // namespace gentle
