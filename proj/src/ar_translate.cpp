#include "gentle/ar_translate.hpp"

#include <algorithm>
#include <stdexcept>

namespace gentle {

namespace {

// The unique valid extension letter of the given sign, if any. Gentleness
// makes it unique; a second candidate means the quiver data is corrupt.
std::optional<SignedLetter> unique_extension(const BoundQuiver& q, const StringWalk& w,
                                             bool prepend, bool inv) {
  std::optional<SignedLetter> found;
  for (SignedLetter l : prepend ? valid_prepends(q, w) : valid_appends(q, w)) {
    if (l.inv != inv) continue;
    if (found) throw std::logic_error("string extension is not unique; algebra not gentle");
    found = l;
  }
  return found;
}

void prepend_letter(StringWalk& w, SignedLetter l) {
  w.letters.insert(w.letters.begin(), l);
}

}  // namespace

std::optional<StringWalk> add_cohook(const BoundQuiver& q, const StringWalk& w, Side side) {
  StringWalk cur = w;
  if (side == Side::Start) {
    SignedLetter shoulder;
    if (w.lazy()) {
      const auto& outs = q.out_arrows[w.base];
      if (outs.empty()) return std::nullopt;
      shoulder = {outs[0], true};
    } else {
      auto sh = unique_extension(q, w, true, true);
      if (!sh) return std::nullopt;
      shoulder = *sh;
    }
    prepend_letter(cur, shoulder);
    while (auto d = unique_extension(q, cur, true, false)) prepend_letter(cur, *d);
    return cur;
  }
  SignedLetter shoulder;
  if (w.lazy()) {
    const auto& outs = q.out_arrows[w.base];
    if (outs.size() < 2) return std::nullopt;
    shoulder = {outs[1], false};
  } else {
    auto sh = unique_extension(q, w, false, false);
    if (!sh) return std::nullopt;
    shoulder = *sh;
  }
  cur.letters.push_back(shoulder);
  while (auto z = unique_extension(q, cur, false, true)) cur.letters.push_back(*z);
  return cur;
}

std::optional<StringWalk> remove_hook(const BoundQuiver& q, const StringWalk& w, Side side) {
  if (side == Side::Start) {
    for (int i = 0; i < w.length(); ++i) {
      if (w.letters[i].inv) continue;
      if (i + 1 == w.length()) return make_lazy(q, target_of(q, w.letters[i]));
      return StringWalk{{w.letters.begin() + i + 1, w.letters.end()}, -1};
    }
    return std::nullopt;
  }
  for (int j = w.length() - 1; j >= 0; --j) {
    if (!w.letters[j].inv) continue;
    if (j == 0) return make_lazy(q, start_vertex(q, w));
    return StringWalk{{w.letters.begin(), w.letters.begin() + j}, -1};
  }
  return std::nullopt;
}

TauResult tau(const BoundQuiver& q, const StringWalk& w) {
  if (w.lazy() && q.out_arrows[w.base].empty()) return {true, {}};
  StringWalk cur = w;
  bool can_start = false, can_end = false;
  if (auto s = add_cohook(q, cur, Side::Start)) {
    cur = *s;
    can_start = true;
  }
  // for a lazy walk the end cohook consumes the second outgoing arrow; its
  // availability is otherwise independent of the start extension
  bool lazy_single_out = w.lazy() && q.out_arrows[w.base].size() < 2;
  if (!lazy_single_out) {
    if (auto e = add_cohook(q, cur, Side::End)) {
      cur = *e;
      can_end = true;
    }
  }
  if (!can_start) {
    auto r = remove_hook(q, cur, Side::Start);
    if (!r) return {true, {}};
    cur = *r;
  }
  if (!can_end) {
    auto r = remove_hook(q, cur, Side::End);
    if (!r) return {true, {}};
    cur = *r;
  }
  return {false, cur};
}

LongString cohook_completion(const FringedAlgebra& f, const StringWalk& base_walk) {
  const BoundQuiver& hat = f.hat;
  StringWalk w = canonical(f.base, base_walk);
  LongString ls;
  ls.kind = LongString::Kind::Cohook;
  ls.base = w;

  SignedLetter sh_start, sh_end;
  if (w.lazy()) {
    // both shoulders come from the two outgoing hat arrows; base arrows first
    // so the start side agrees with the base-level surgery, then id order
    std::vector<int> outs = hat.out_arrows[w.base];
    if (outs.size() != 2) throw std::logic_error("fringed vertex without two outs");
    std::stable_partition(outs.begin(), outs.end(),
                          [&](int a) { return f.is_base_arrow(a); });
    sh_start = {outs[0], true};
    sh_end = {outs[1], false};
  } else {
    auto s = unique_extension(hat, w, true, true);
    auto e = unique_extension(hat, w, false, false);
    if (!s || !e) throw std::logic_error("cohook shoulder missing in fringed quiver");
    sh_start = *s;
    sh_end = *e;
  }

  StringWalk cur = w;
  prepend_letter(cur, sh_start);
  int d = 0;
  while (auto x = unique_extension(hat, cur, true, false)) {
    prepend_letter(cur, *x);
    ++d;
  }
  if (!can_append(hat, cur, sh_end)) throw std::logic_error("cohook end shoulder rejected");
  cur.letters.push_back(sh_end);
  int i = 0;
  while (auto z = unique_extension(hat, cur, false, true)) {
    cur.letters.push_back(*z);
    ++i;
  }
  ls.oriented = cur.letters;
  ls.d_len = d;
  ls.i_len = i;

  // arm structure dictated by the fringe: a base shoulder grows an arm ending
  // in exactly one fringe letter, a fringe shoulder grows none
  bool base_s = f.is_base_arrow(sh_start.arrow);
  bool base_e = f.is_base_arrow(sh_end.arrow);
  bool arms_ok =
      (base_s ? d >= 1 && !f.is_base_arrow(ls.oriented[0].arrow) : d == 0) &&
      (base_e ? i >= 1 && !f.is_base_arrow(ls.oriented[ls.n() - 1].arrow) : i == 0);
  for (int k = 1; k < d; ++k)
    arms_ok = arms_ok && f.is_base_arrow(ls.oriented[k].arrow);
  for (int k = ls.beta_idx() + 1; k + 1 < ls.n(); ++k)
    arms_ok = arms_ok && f.is_base_arrow(ls.oriented[k].arrow);
  if (!arms_ok) throw std::logic_error("cohook arm structure violated");
  if (f.is_base_vertex(start_vertex(hat, cur)) || f.is_base_vertex(end_vertex(hat, cur)))
    throw std::logic_error("cohook completion does not reach the fringe");
  return ls;
}

LongString injective_string(const FringedAlgebra& f, int hat_vertex) {
  const BoundQuiver& hat = f.hat;
  LongString ls;
  ls.kind = LongString::Kind::Injective;
  ls.vertex = hat_vertex;

  auto arm = [&](int a0) {
    StringWalk cur{{SignedLetter{a0, false}}, -1};
    while (auto x = unique_extension(hat, cur, true, false)) prepend_letter(cur, *x);
    return cur.letters;
  };

  const auto& ins = hat.in_arrows[hat_vertex];
  if (ins.empty()) {
    ls.apex = 0;
    return ls;  // lazy at a source fringe vertex
  }
  std::vector<SignedLetter> arm0 = arm(ins[0]);
  ls.oriented = arm0;
  ls.apex = static_cast<int>(arm0.size());
  if (ins.size() == 2) {
    std::vector<SignedLetter> arm1 = arm(ins[1]);
    for (int k = static_cast<int>(arm1.size()) - 1; k >= 0; --k)
      ls.oriented.push_back(flip(arm1[k]));
  }
  check_word(hat, ls.oriented);
  StringWalk w = ls.walk();
  if (f.is_base_vertex(start_vertex(hat, w)) || f.is_base_vertex(end_vertex(hat, w)))
    throw std::logic_error("injective string does not reach the fringe");
  return ls;
}

TauAnchor tau_with_anchor(const FringedAlgebra& f, const StringWalk& w0) {
  StringWalk w = canonical(f.base, w0);
  TauAnchor out;
  if (w.lazy() && f.base.out_arrows[w.base].empty()) {
    out.result.zero = true;
  } else {
    LongString ls = cohook_completion(f, w);
    const auto& W = ls.oriented;
    bool can_s = f.is_base_arrow(W[ls.alpha_idx()].arrow);
    bool can_e = f.is_base_arrow(W[ls.beta_idx()].arrow);
    int L = can_s ? 1 : ls.y_start();
    int R = can_e ? ls.n() - 1 : ls.y_end();
    out.result.zero = false;
    if (!can_s) {
      int i = L;
      while (i < R && W[i].inv) ++i;
      if (i == R)
        out.result.zero = true;
      else
        L = i + 1;
    }
    if (!out.result.zero && !can_e) {
      int j = R - 1;
      while (j >= L && !W[j].inv) --j;
      if (j < L)
        out.result.zero = true;
      else
        R = j;
    }
    if (!out.result.zero) {
      out.in_cohook = {L, R};
      StringWalk hatw = ls.walk();
      if (L == R) {
        int v = slot_vertex(f.hat, hatw, L);
        if (!f.is_base_vertex(v)) throw std::logic_error("tau anchor left the base quiver");
        out.result.walk = make_lazy(f.base, v);
      } else {
        for (int k = L; k < R; ++k)
          if (!f.is_base_arrow(W[k].arrow))
            throw std::logic_error("tau anchor left the base quiver");
        out.result.walk = StringWalk{{W.begin() + L, W.begin() + R}, -1};
      }
    }
  }

  TauResult direct = tau(f.base, w);
  bool agree = direct.zero == out.result.zero &&
               (direct.zero ||
                walk_key(f.base, direct.walk) == walk_key(f.base, out.result.walk));
  if (!agree) throw std::logic_error("tau anchor disagrees with hook surgery");
  return out;
}

bool tau_submodule_check(const FringedAlgebra& f, const StringWalk& w0) {
  StringWalk w = canonical(f.base, w0);
  TauResult t = tau(f.base, w);
  if (t.zero) return true;
  LongString ls = cohook_completion(f, w);
  StringWalk hatw = ls.walk();
  int n = hatw.length();
  std::string key = walk_key(f.hat, t.walk);
  for (int lo = 0; lo <= n; ++lo) {
    if (lo > 0 && hatw.letters[lo - 1].inv) continue;  // need a direct left flank
    for (int hi = lo; hi <= n; ++hi) {
      if (hi < n && !hatw.letters[hi].inv) continue;  // need an inverse right flank
      if (walk_key(f.hat, substring(f.hat, hatw, {lo, hi})) == key) return true;
    }
  }
  return false;
}

}  // namespace gentle
