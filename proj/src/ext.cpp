#include "gentle/ext.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace gentle {

namespace {

std::vector<StringWalk> orientations(const BoundQuiver& q, const StringWalk& w) {
  StringWalk c = canonical(q, w);
  if (c.lazy()) return {c};
  return {c, inverse_walk(c, q)};
}

// Glue xo, alpha^-, yo into one word (traversal order), when valid.
std::optional<std::vector<SignedLetter>> try_glue(const BoundQuiver& q, const StringWalk& xo,
                                                  int alpha, const StringWalk& yo) {
  SignedLetter g{alpha, true};
  if (end_vertex(q, xo) != q.arrows[alpha].dst) return std::nullopt;
  if (start_vertex(q, yo) != q.arrows[alpha].src) return std::nullopt;
  if (!xo.lazy() && !pair_ok(q, xo.letters.back(), g)) return std::nullopt;
  if (!yo.lazy() && !pair_ok(q, g, yo.letters.front())) return std::nullopt;
  std::vector<SignedLetter> word = xo.letters;
  word.push_back(g);
  word.insert(word.end(), yo.letters.begin(), yo.letters.end());
  return word;
}

int trailing_direct(const StringWalk& w) {
  int k = 0;
  for (int i = w.length() - 1; i >= 0 && !w.letters[i].inv; --i) ++k;
  return k;
}

int leading_inverse(const StringWalk& w) {
  int k = 0;
  for (int i = 0; i < w.length() && w.letters[i].inv; ++i) ++k;
  return k;
}

}  // namespace

bool is_two_sided(const AdmissiblePair& t, int n_src, int n_dst) {
  // with a flipped middle the D/F roles in the target reverse
  int dlo = t.flipped ? n_dst - t.in_dst.hi : t.in_dst.lo;
  int dhi = t.flipped ? n_dst - t.in_dst.lo : t.in_dst.hi;
  return (t.in_src.lo > 0 || dlo > 0) && (t.in_src.hi < n_src || dhi < n_dst);
}

std::vector<int> connectable(const BoundQuiver& q, const StringWalk& y, const StringWalk& x) {
  std::vector<int> out;
  for (int a = 0; a < q.arrow_count(); ++a) {
    bool hit = false;
    for (const StringWalk& yo : orientations(q, y))
      for (const StringWalk& xo : orientations(q, x))
        if (try_glue(q, xo, a, yo)) hit = true;
    if (hit) out.push_back(a);
  }
  return out;
}

std::vector<AdmissiblePair> injective_factoring_basis(const FringedAlgebra& f,
                                                      const StringWalk& x0,
                                                      const StringWalk& y0) {
  const BoundQuiver& hat = f.hat;
  StringWalk x = canonical(f.base, x0);
  StringWalk y = canonical(f.base, y0);
  LongString ly = cohook_completion(f, y);
  const auto& W = ly.oriented;
  int n1 = x.length();
  int d_len = ly.d_len;
  int i_start = ly.beta_idx() + 1;

  std::vector<AdmissiblePair> pairs = admissible_pairs(hat, x, ly.walk());

  // pairs realized by connecting extensions: the maximal run of x glued past a
  // base shoulder coincides with the inner end of the matching arm
  std::vector<AdmissiblePair> connecting;
  int alpha_sh = W[ly.alpha_idx()].arrow;
  if (f.is_base_arrow(alpha_sh)) {
    for (const StringWalk& xo : orientations(f.base, x)) {
      if (end_vertex(hat, xo) != hat.arrows[alpha_sh].dst) continue;
      if (!xo.lazy() && !pair_ok(hat, xo.letters.back(), {alpha_sh, true})) continue;
      int k = trailing_direct(xo);
      if (k > d_len) throw std::logic_error("connecting run escapes the cohook arm");
      for (int j = 0; j < k; ++j)
        if (!(W[d_len - k + j] == xo.letters[n1 - k + j]))
          throw std::logic_error("connecting run does not match the cohook arm");
      bool inv_orient = !xo.lazy() && !(xo == x);
      Interval in_src = inv_orient ? Interval{0, k} : Interval{n1 - k, n1};
      connecting.push_back({in_src, {d_len - k, d_len}, k > 0 && inv_orient});
    }
  }
  int beta_sh = W[ly.beta_idx()].arrow;
  if (f.is_base_arrow(beta_sh)) {
    for (const StringWalk& xo : orientations(f.base, x)) {
      if (start_vertex(hat, xo) != hat.arrows[beta_sh].dst) continue;
      if (!xo.lazy() && !pair_ok(hat, {beta_sh, false}, xo.letters.front())) continue;
      int k = leading_inverse(xo);
      if (k > ly.i_len) throw std::logic_error("connecting run escapes the cohook arm");
      for (int j = 0; j < k; ++j)
        if (!(W[i_start + j] == xo.letters[j]))
          throw std::logic_error("connecting run does not match the cohook arm");
      bool inv_orient = !xo.lazy() && !(xo == x);
      Interval in_src = inv_orient ? Interval{n1 - k, n1} : Interval{0, k};
      connecting.push_back({in_src, {i_start, i_start + k}, k > 0 && inv_orient});
    }
  }
  for (const AdmissiblePair& c : connecting)
    if (std::find(pairs.begin(), pairs.end(), c) == pairs.end())
      throw std::logic_error("connecting pair is not admissible");

  std::vector<AdmissiblePair> out;
  for (const AdmissiblePair& t : pairs) {
    bool on_arm = t.in_dst.hi <= d_len || t.in_dst.lo >= i_start;
    if (!on_arm) continue;
    if (std::find(connecting.begin(), connecting.end(), t) != connecting.end()) continue;
    out.push_back(t);
  }
  return out;
}

std::vector<ExtensionSeq> ext_basis(const FringedAlgebra& f, const StringWalk& y0,
                                    const StringWalk& x0) {
  const BoundQuiver& q = f.base;
  StringWalk x = canonical(q, x0);
  StringWalk y = canonical(q, y0);
  int n1 = x.length(), n2 = y.length();
  std::vector<ExtensionSeq> out;

  for (const StringWalk& yo : orientations(q, y))
    for (const StringWalk& xo : orientations(q, x))
      for (int a = 0; a < q.arrow_count(); ++a)
        if (auto word = try_glue(q, xo, a, yo)) {
          ExtensionSeq seq;
          seq.connecting = true;
          seq.arrow = a;
          seq.mid1 = canonical(q, StringWalk{*word, -1});
          out.push_back(seq);
        }

  for (const AdmissiblePair& t : hom_basis(q, x, y)) {
    std::vector<SignedLetter> yw = y.letters;
    if (t.flipped) {
      std::reverse(yw.begin(), yw.end());
      for (SignedLetter& l : yw) l = flip(l);
    }
    int lo1 = t.in_src.lo, hi1 = t.in_src.hi;
    int lo2 = t.flipped ? n2 - t.in_dst.hi : t.in_dst.lo;
    int hi2 = t.flipped ? n2 - t.in_dst.lo : t.in_dst.hi;

    // Glue middle one from the D part of y, the shared middle and F part of x,
    // and middle two from the D part of x, the shared middle and F part of y.
    // Fails when the factorization is not two-sided or a junction hits a relation.
    using Middles = std::pair<std::vector<SignedLetter>, std::vector<SignedLetter>>;
    auto attempt = [&](const std::vector<SignedLetter>& xl,
                       int p, int r) -> std::optional<Middles> {
      if (!((p > 0 || lo2 > 0) && (r < n1 || hi2 < n2))) return std::nullopt;
      std::vector<SignedLetter> m1(yw.begin(), yw.begin() + lo2);
      m1.insert(m1.end(), xl.begin() + p, xl.end());
      std::vector<SignedLetter> m2(xl.begin(), xl.begin() + p);
      m2.insert(m2.end(), yw.begin() + lo2, yw.end());
      if (!word_ok(q, m1) || !word_ok(q, m2)) return std::nullopt;
      return Middles{m1, m2};
    };

    std::optional<Middles> mids = attempt(x.letters, lo1, hi1);
    if (lo1 == hi1 && n1 > 0) {
      // A lazy shared middle leaves the orientation of x free, and the two
      // choices split x into opposite arm pairs; try the flip as well.
      std::vector<SignedLetter> xf(x.letters.rbegin(), x.letters.rend());
      for (SignedLetter& l : xf) l = flip(l);
      std::optional<Middles> alt = attempt(xf, n1 - lo1, n1 - lo1);
      if (mids && alt && n2 > 0) throw std::logic_error("ambiguous lazy overlap");
      if (!mids) mids = alt;
    } else if (is_two_sided(t, n1, n2) && !mids) {
      // a shared middle of positive length keeps both junctions inside x and y
      throw std::logic_error("extension middle is not a string");
    }
    if (!mids) continue;
    ExtensionSeq seq;
    seq.connecting = false;
    int mid_vertex = slot_vertex(q, x, lo1);
    seq.mid1 = mids->first.empty() ? make_lazy(q, mid_vertex)
                                   : canonical(q, StringWalk{mids->first, -1});
    seq.mid2 = mids->second.empty() ? make_lazy(q, mid_vertex)
                                    : canonical(q, StringWalk{mids->second, -1});
    out.push_back(seq);
  }
  return out;
}

int ext_dim(const FringedAlgebra& f, const StringWalk& y, const StringWalk& x) {
  int total = hom_tau_dim(f, x, y);
  int fac = static_cast<int>(injective_factoring_basis(f, x, y).size());
  return total - fac;
}

}  // namespace gentle
