#include "gentle/strings.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gentle {

int source_of(const BoundQuiver& q, SignedLetter l) {
  return l.inv ? q.arrows[l.arrow].dst : q.arrows[l.arrow].src;
}

int target_of(const BoundQuiver& q, SignedLetter l) {
  return l.inv ? q.arrows[l.arrow].src : q.arrows[l.arrow].dst;
}

namespace {

bool letter_less(const BoundQuiver& q, SignedLetter a, SignedLetter b) {
  const std::string& ia = q.arrows[a.arrow].id;
  const std::string& ib = q.arrows[b.arrow].id;
  if (ia != ib) return ia < ib;
  return a.inv < b.inv;
}

bool word_less(const BoundQuiver& q, const std::vector<SignedLetter>& a,
               const std::vector<SignedLetter>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](SignedLetter x, SignedLetter y) {
                                        return letter_less(q, x, y);
                                      });
}

std::vector<SignedLetter> inverse_letters(const std::vector<SignedLetter>& w) {
  std::vector<SignedLetter> out(w.rbegin(), w.rend());
  for (auto& l : out) l = flip(l);
  return out;
}

}  // namespace

bool pair_ok(const BoundQuiver& q, SignedLetter prev, SignedLetter cur) {
  if (target_of(q, prev) != source_of(q, cur)) return false;
  if (cur.arrow == prev.arrow && cur.inv != prev.inv) return false;
  if (!prev.inv && !cur.inv && q.is_zero(cur.arrow, prev.arrow)) return false;
  if (prev.inv && cur.inv && q.is_zero(prev.arrow, cur.arrow)) return false;
  return true;
}

void check_word(const BoundQuiver& q, const std::vector<SignedLetter>& letters) {
  for (size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].arrow < 0 || letters[i].arrow >= q.arrow_count())
      throw StringError(StringErrorKind::UnknownArrow, static_cast<int>(i),
                        "letter refers to an unknown arrow");
    if (i == 0) continue;
    SignedLetter prev = letters[i - 1], cur = letters[i];
    if (target_of(q, prev) != source_of(q, cur))
      throw StringError(StringErrorKind::NotComposable, static_cast<int>(i),
                        "letters " + std::to_string(i - 1) + " and " + std::to_string(i) +
                            " do not compose");
    if (cur.arrow == prev.arrow && cur.inv != prev.inv)
      throw StringError(StringErrorKind::ReducedPairViolation, static_cast<int>(i),
                        "letter " + std::to_string(i) + " cancels its predecessor");
    bool zero = (!prev.inv && !cur.inv && q.is_zero(cur.arrow, prev.arrow)) ||
                (prev.inv && cur.inv && q.is_zero(prev.arrow, cur.arrow));
    if (zero)
      throw StringError(StringErrorKind::RelationViolation, static_cast<int>(i),
                        "letters " + std::to_string(i - 1) + " and " + std::to_string(i) +
                            " traverse a relation");
  }
}

bool word_ok(const BoundQuiver& q, const std::vector<SignedLetter>& letters) {
  for (size_t i = 1; i < letters.size(); ++i)
    if (!pair_ok(q, letters[i - 1], letters[i])) return false;
  return true;
}

StringWalk make_lazy(const BoundQuiver& q, int vertex) {
  if (vertex < 0 || vertex >= q.vertex_count())
    throw StringError(StringErrorKind::UnknownVertex, -1, "unknown vertex");
  return {{}, vertex};
}

StringWalk make_string(const BoundQuiver& q, const std::vector<SignedLetter>& letters) {
  if (letters.empty())
    throw StringError(StringErrorKind::BadLiteral, -1,
                      "empty letter list; use make_lazy for lazy walks");
  check_word(q, letters);
  StringWalk w{letters, source_of(q, letters[0])};
  return canonical(q, w);
}

StringWalk parse_string_literal(const BoundQuiver& q, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  if (toks.empty())
    throw StringError(StringErrorKind::BadLiteral, -1, "empty string literal");
  if (toks.size() == 1 && toks[0].size() > 3 && toks[0].substr(0, 2) == "e(" &&
      toks[0].back() == ')') {
    std::string v = toks[0].substr(2, toks[0].size() - 3);
    auto it = q.vertex_index.find(v);
    if (it == q.vertex_index.end())
      throw StringError(StringErrorKind::UnknownVertex, -1, "unknown vertex '" + v + "'");
    return make_lazy(q, it->second);
  }
  std::vector<SignedLetter> letters;
  for (auto tok : toks) {
    bool inv = false;
    if (tok.size() > 2 && tok.substr(tok.size() - 2) == "^-") {
      inv = true;
      tok = tok.substr(0, tok.size() - 2);
    }
    auto it = q.arrow_index.find(tok);
    if (it == q.arrow_index.end())
      throw StringError(StringErrorKind::UnknownArrow, -1, "unknown arrow '" + tok + "'");
    letters.push_back({it->second, inv});
  }
  // Literals are written leftmost-first; traversal starts at the right.
  std::reverse(letters.begin(), letters.end());
  check_word(q, letters);
  return {letters, source_of(q, letters[0])};
}

std::string to_literal(const BoundQuiver& q, const StringWalk& w) {
  if (w.lazy()) return "e(" + q.vertices[w.base] + ")";
  std::string out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (!out.empty()) out += " ";
    out += q.arrows[it->arrow].id;
    if (it->inv) out += "^-";
  }
  return out;
}

StringWalk inverse_walk(const StringWalk& w, const BoundQuiver& q) {
  if (w.lazy()) return w;
  StringWalk out{inverse_letters(w.letters), end_vertex(q, w)};
  return out;
}

StringWalk canonical(const BoundQuiver& q, const StringWalk& w) {
  if (w.lazy()) return w;
  StringWalk inv = inverse_walk(w, q);
  return word_less(q, inv.letters, w.letters) ? inv : w;
}

std::string walk_key(const BoundQuiver& q, const StringWalk& w) {
  return to_literal(q, canonical(q, w));
}

int start_vertex(const BoundQuiver& q, const StringWalk& w) {
  return w.lazy() ? w.base : source_of(q, w.letters[0]);
}

int end_vertex(const BoundQuiver& q, const StringWalk& w) {
  return w.lazy() ? w.base : target_of(q, w.letters.back());
}

int slot_vertex(const BoundQuiver& q, const StringWalk& w, int slot) {
  if (slot == 0) return start_vertex(q, w);
  return target_of(q, w.letters[slot - 1]);
}

std::vector<int> dimension_vector(const BoundQuiver& q, const StringWalk& w) {
  std::vector<int> d(q.vertex_count(), 0);
  for (int s = 0; s <= w.length(); ++s) ++d[slot_vertex(q, w, s)];
  return d;
}

std::vector<SignedLetter> slice(const StringWalk& w, Interval iv) {
  return {w.letters.begin() + iv.lo, w.letters.begin() + iv.hi};
}

StringWalk substring(const BoundQuiver& q, const StringWalk& w, Interval iv) {
  if (iv.lo == iv.hi) return make_lazy(q, slot_vertex(q, w, iv.lo));
  StringWalk part{slice(w, iv), slot_vertex(q, w, iv.lo)};
  return canonical(q, part);
}

bool can_append(const BoundQuiver& q, const StringWalk& w, SignedLetter l) {
  if (w.lazy()) return source_of(q, l) == w.base;
  return pair_ok(q, w.letters.back(), l);
}

bool can_prepend(const BoundQuiver& q, const StringWalk& w, SignedLetter l) {
  if (w.lazy()) return target_of(q, l) == w.base;
  return pair_ok(q, l, w.letters.front());
}

std::vector<SignedLetter> valid_appends(const BoundQuiver& q, const StringWalk& w) {
  int v = end_vertex(q, w);
  std::vector<SignedLetter> out;
  for (int a : q.out_arrows[v])
    if (can_append(q, w, {a, false})) out.push_back({a, false});
  for (int a : q.in_arrows[v])
    if (can_append(q, w, {a, true})) out.push_back({a, true});
  std::sort(out.begin(), out.end(),
            [&](SignedLetter x, SignedLetter y) { return letter_less(q, x, y); });
  return out;
}

std::vector<SignedLetter> valid_prepends(const BoundQuiver& q, const StringWalk& w) {
  int v = start_vertex(q, w);
  std::vector<SignedLetter> out;
  for (int a : q.in_arrows[v])
    if (can_prepend(q, w, {a, false})) out.push_back({a, false});
  for (int a : q.out_arrows[v])
    if (can_prepend(q, w, {a, true})) out.push_back({a, true});
  std::sort(out.begin(), out.end(),
            [&](SignedLetter x, SignedLetter y) { return letter_less(q, x, y); });
  return out;
}

std::vector<StringWalk> enumerate_strings(const BoundQuiver& q, int max_len) {
  if (max_len == 0 && !detect_bands(q).empty())
    throw InfiniteTypeError("algebra has a band; unbounded enumeration would not terminate");
  std::map<std::string, StringWalk> found;
  for (int v = 0; v < q.vertex_count(); ++v) {
    StringWalk w = make_lazy(q, v);
    found[walk_key(q, w)] = w;
  }
  std::vector<StringWalk> layer;
  for (int a = 0; a < q.arrow_count(); ++a) {
    layer.push_back({{{a, false}}, q.arrows[a].src});
    layer.push_back({{{a, true}}, q.arrows[a].dst});
  }
  while (!layer.empty()) {
    for (const auto& w : layer) {
      StringWalk c = canonical(q, w);
      found.emplace(to_literal(q, c), c);
    }
    if (max_len > 0 && layer.front().length() >= max_len) break;
    std::vector<StringWalk> next;
    for (const auto& w : layer)
      for (SignedLetter l : valid_appends(q, w)) {
        StringWalk e = w;
        e.letters.push_back(l);
        next.push_back(std::move(e));
      }
    layer = std::move(next);
  }
  std::vector<StringWalk> out;
  out.reserve(found.size());
  for (auto& [k, w] : found) out.push_back(w);
  std::stable_sort(out.begin(), out.end(), [&](const StringWalk& a, const StringWalk& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return to_literal(q, a) < to_literal(q, b);
  });
  return out;
}

std::vector<Band> detect_bands(const BoundQuiver& q) {
  int n = 2 * q.arrow_count();
  auto letter_of = [](int node) { return SignedLetter{node / 2, node % 2 == 1}; };
  std::vector<std::vector<int>> adj(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (pair_ok(q, letter_of(x), letter_of(y))) adj[x].push_back(y);

  std::map<std::string, StringWalk> bands;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  auto record = [&]() {
    std::vector<SignedLetter> word;
    for (int node : path) word.push_back(letter_of(node));
    std::vector<SignedLetter> best;
    for (const auto& base : {word, inverse_letters(word)}) {
      for (size_t r = 0; r < base.size(); ++r) {
        std::vector<SignedLetter> rot(base.begin() + r, base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + r);
        if (best.empty() || word_less(q, rot, best)) best = rot;
      }
    }
    StringWalk w{best, source_of(q, best[0])};
    bands.emplace(to_literal(q, w), w);
  };
  int root = 0;
  auto dfs = [&](auto&& self, int u) -> void {
    for (int v : adj[u]) {
      if (v == root) {
        record();
      } else if (v > root && !on_path[v]) {
        path.push_back(v);
        on_path[v] = 1;
        self(self, v);
        on_path[v] = 0;
        path.pop_back();
      }
    }
  };
  for (root = 0; root < n; ++root) {
    path = {root};
    on_path.assign(n, 0);
    on_path[root] = 1;
    dfs(dfs, root);
  }
  std::vector<Band> out;
  for (auto& [k, w] : bands) out.push_back({w});
  return out;
}

}  // namespace gentle
