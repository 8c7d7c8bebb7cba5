#include "gentle/tau_tilting.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gentle {

namespace {

// Membership key of a segment of a hat walk that is claimed to live over the
// base quiver. Empty segments are lazy at the given base vertex.
std::string base_segment_key(const FringedAlgebra& f, const std::vector<SignedLetter>& seg,
                             int vertex_if_empty) {
  if (seg.empty()) {
    if (!f.is_base_vertex(vertex_if_empty))
      throw std::logic_error("Mc walk tested membership at a fringe vertex");
    return walk_key(f.base, make_lazy(f.base, vertex_if_empty));
  }
  for (const SignedLetter& l : seg)
    if (!f.is_base_arrow(l.arrow))
      throw std::logic_error("Mc walk tested membership of a fringe letter");
  return walk_key(f.base, StringWalk{seg, -1});
}

std::string item_display(const BoundQuiver& q, const CollectionItem& item) {
  if (item.shifted) return "P[" + q.vertices[item.vertex] + "][1]";
  return to_literal(q, item.walk);
}

// Maximal cliques by plain Bron-Kerbosch; the compatibility graphs here are
// tiny, so no pivoting. Deterministic because vertices come in sorted order.
void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<int>& r,
                   std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  while (!p.empty()) {
    int v = p.front();
    r.push_back(v);
    std::vector<int> p2, x2;
    for (int u : p)
      if (adj[v][u]) p2.push_back(u);
    for (int u : x)
      if (adj[v][u]) x2.push_back(u);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(p.begin());
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

std::string item_key(const BoundQuiver& q, const CollectionItem& item) {
  return item_display(q, item);
}

std::string collection_key(const BoundQuiver& q, const Collection& c) {
  std::string key;
  for (size_t i = 0; i < c.items.size(); ++i) {
    if (i) key += " | ";
    key += item_key(q, c.items[i]);
  }
  return key;
}

bool is_tau_rigid(const FringedAlgebra& f, const StringWalk& w) {
  return hom_tau_dim(f, w, w) == 0;
}

bool is_brick(const BoundQuiver& q, const StringWalk& w) {
  return hom_basis(q, w, w).size() == 1;
}

bool compatible(const FringedAlgebra& f, const CollectionItem& a, const CollectionItem& b) {
  if (a.shifted && b.shifted) return true;
  if (a.shifted || b.shifted) {
    const CollectionItem& shift = a.shifted ? a : b;
    const CollectionItem& mod = a.shifted ? b : a;
    return dimension_vector(f.base, mod.walk)[shift.vertex] == 0;
  }
  return hom_tau_dim(f, a.walk, b.walk) == 0 && hom_tau_dim(f, b.walk, a.walk) == 0;
}

LongString long_string_of(const FringedAlgebra& f, const CollectionItem& item) {
  if (item.shifted) return injective_string(f, item.vertex);
  return cohook_completion(f, item.walk);
}

std::vector<Collection> maximal_collections(const FringedAlgebra& f) {
  const BoundQuiver& q = f.base;
  std::vector<CollectionItem> items;
  for (const StringWalk& w : enumerate_strings(q, 0))
    if (is_tau_rigid(f, w)) items.push_back(CollectionItem{false, w, -1});
  for (int v = 0; v < q.vertex_count(); ++v)
    items.push_back(CollectionItem{true, StringWalk{}, v});
  std::sort(items.begin(), items.end(), [&](const CollectionItem& a, const CollectionItem& b) {
    return item_key(q, a) < item_key(q, b);
  });

  const int m = static_cast<int>(items.size());
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      adj[i][j] = adj[j][i] = compatible(f, items[i], items[j]) ? 1 : 0;

  // The same graph on the fringed side: two long strings are adjacent when
  // neither kisses the other. The two routes must agree edge for edge.
  std::vector<LongString> longs;
  longs.reserve(items.size());
  for (const CollectionItem& it : items) longs.push_back(long_string_of(f, it));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool nk = kisses(f, longs[i], longs[j]).empty() && kisses(f, longs[j], longs[i]).empty();
      if (nk != static_cast<bool>(adj[i][j]))
        throw std::logic_error("kiss compatibility disagrees with tau compatibility for " +
                               item_key(q, items[i]) + " vs " + item_key(q, items[j]));
    }

  std::vector<int> p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  bron_kerbosch(adj, r, std::move(p), {}, cliques);

  std::vector<Collection> out;
  for (const std::vector<int>& cl : cliques) {
    if (static_cast<int>(cl.size()) != q.vertex_count())
      throw std::logic_error("maximal collection of unexpected size");
    Collection c;
    for (int i : cl) c.items.push_back(items[i]);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [&](const Collection& a, const Collection& b) {
    return collection_key(q, a) < collection_key(q, b);
  });
  return out;
}

bool fac_contains(const BoundQuiver& q, const std::vector<StringWalk>& gens,
                  const StringWalk& y) {
  std::set<std::string> quotient_keys;
  for (const StringWalk& g : gens) {
    StringWalk gc = canonical(q, g);
    if (gc.lazy()) {
      quotient_keys.insert(walk_key(q, gc));
      continue;
    }
    for (const Interval& iv : quotient_middles(q, gc.letters))
      quotient_keys.insert(walk_key(q, substring(q, gc, iv)));
  }

  StringWalk yc = canonical(q, y);
  if (yc.lazy()) return quotient_keys.count(walk_key(q, yc)) > 0;

  const int n = yc.length();
  std::vector<char> covered(n + 1, 0);
  for (const Interval& iv : submodule_middles(q, yc.letters)) {
    if (!quotient_keys.count(walk_key(q, substring(q, yc, iv)))) continue;
    for (int s = iv.lo; s <= iv.hi; ++s) covered[s] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::vector<StringWalk> torsion_class_strings(const FringedAlgebra& f, const Collection& c) {
  std::vector<StringWalk> gens;
  for (const CollectionItem& it : c.items)
    if (!it.shifted) gens.push_back(it.walk);
  std::vector<StringWalk> out;
  for (const StringWalk& s : enumerate_strings(f.base, 0))
    if (fac_contains(f.base, gens, s)) out.push_back(s);
  return out;
}

StringWalk mc_walk(const FringedAlgebra& f, const std::set<std::string>& s_keys, int arrow) {
  const BoundQuiver& hat = f.hat;
  if (arrow < 0 || arrow >= hat.arrow_count())
    throw std::invalid_argument("mc_walk: no such arrow");
  StringWalk w{{SignedLetter{arrow, false}}, -1};
  int alpha_pos = 0;  // index of the seed letter; everything before it is the theta part
  const size_t cap = 2 * static_cast<size_t>(hat.arrow_count()) + 4;

  while (f.is_base_vertex(end_vertex(hat, w))) {
    std::vector<SignedLetter> gamma(w.letters.begin() + alpha_pos + 1, w.letters.end());
    bool member =
        s_keys.count(base_segment_key(f, gamma, target_of(hat, w.letters[alpha_pos]))) > 0;
    bool want_inv = !member;  // members keep growing, non-members turn around
    SignedLetter chosen{-1, false};
    int hits = 0;
    for (const SignedLetter& l : valid_appends(hat, w))
      if (l.inv == want_inv) {
        chosen = l;
        ++hits;
      }
    if (hits != 1) throw std::logic_error("Mc walk step is not unique going forward");
    w.letters.push_back(chosen);
    if (w.letters.size() > cap) throw std::logic_error("Mc walk failed to terminate");
  }

  while (f.is_base_vertex(start_vertex(hat, w))) {
    std::vector<SignedLetter> theta(w.letters.begin(), w.letters.begin() + alpha_pos);
    bool member =
        s_keys.count(base_segment_key(f, theta, source_of(hat, w.letters[alpha_pos]))) > 0;
    bool want_inv = member;  // dual sign rule on the incoming side
    SignedLetter chosen{-1, false};
    int hits = 0;
    for (const SignedLetter& l : valid_prepends(hat, w))
      if (l.inv == want_inv) {
        chosen = l;
        ++hits;
      }
    if (hits != 1) throw std::logic_error("Mc walk step is not unique going backward");
    w.letters.insert(w.letters.begin(), chosen);
    ++alpha_pos;
    if (w.letters.size() > cap) throw std::logic_error("Mc walk failed to terminate");
  }
  return w;
}

void verify_cang(const FringedAlgebra& f, const Collection& c) {
  const BoundQuiver& q = f.base;
  std::set<std::string> s_keys;
  for (const StringWalk& s : torsion_class_strings(f, c)) s_keys.insert(walk_key(q, s));

  std::map<std::string, int> expected;
  std::vector<int> support(q.vertex_count(), 0);
  for (const CollectionItem& it : c.items) {
    if (it.shifted) continue;
    std::vector<int> dv = dimension_vector(q, it.walk);
    for (int v = 0; v < q.vertex_count(); ++v) support[v] += dv[v];
    expected[walk_key(f.hat, cohook_completion(f, it.walk).walk())] += 2;
  }
  std::set<int> shift_vertices, unsupported;
  for (const CollectionItem& it : c.items)
    if (it.shifted) shift_vertices.insert(it.vertex);
  for (int v = 0; v < q.vertex_count(); ++v)
    if (support[v] == 0) unsupported.insert(v);
  if (shift_vertices != unsupported)
    throw std::logic_error("shifted items do not match the unsupported vertices");
  for (int v : unsupported) expected[walk_key(f.hat, injective_string(f, v).walk())] += 2;
  for (int w : f.sink_fringe_vertices) expected[walk_key(f.hat, injective_string(f, w).walk())] += 1;

  std::map<std::string, int> remaining = expected;
  for (int a = 0; a < f.hat.arrow_count(); ++a) {
    std::string key = walk_key(f.hat, mc_walk(f, s_keys, a));
    auto it = remaining.find(key);
    if (it == remaining.end() || it->second == 0)
      throw CensusMismatch("arrow " + f.hat.arrows[a].id + " produced an unexpected walk " + key);
    --it->second;
  }
  for (const auto& [key, count] : remaining)
    if (count != 0)
      throw CensusMismatch("walk " + key + " was produced " + std::to_string(count) +
                           " time(s) too few");
}

TorsionPoset poset(const FringedAlgebra& f) {
  const BoundQuiver& q = f.base;
  TorsionPoset p;
  p.nodes = maximal_collections(f);
  const int n = static_cast<int>(p.nodes.size());

  std::vector<std::vector<std::string>> keys(n);
  for (int i = 0; i < n; ++i)
    for (const CollectionItem& it : p.nodes[i].items) keys[i].push_back(item_key(q, it));

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<std::string> shared;
      std::set_intersection(keys[i].begin(), keys[i].end(), keys[j].begin(), keys[j].end(),
                            std::back_inserter(shared));
      if (static_cast<int>(shared.size()) != q.vertex_count() - 1) continue;
      auto odd_one = [&](int a, int b) {
        for (const CollectionItem& it : p.nodes[a].items)
          if (!std::binary_search(keys[b].begin(), keys[b].end(), item_key(q, it))) return it;
        throw std::logic_error("exchange pair without an exchanged item");
      };
      CollectionItem ii = odd_one(i, j), jj = odd_one(j, i);
      int kij = static_cast<int>(kisses(f, long_string_of(f, ii), long_string_of(f, jj)).size());
      int kji = static_cast<int>(kisses(f, long_string_of(f, jj), long_string_of(f, ii)).size());
      if (kij > 0 && kji > 0)
        throw BidirectionalKiss("items " + item_key(q, ii) + " and " + item_key(q, jj) +
                                " kiss each other both ways");
      if (kij == 0 && kji == 0)
        throw std::logic_error("exchanged items do not kiss at all");
      TorsionPoset::Cover cov;
      if (kij > 0) {
        cov.upper = i;
        cov.lower = j;
        cov.upper_item = ii;
        cov.lower_item = jj;
        cov.kiss_count = kij;
      } else {
        cov.upper = j;
        cov.lower = i;
        cov.upper_item = jj;
        cov.lower_item = ii;
        cov.kiss_count = kji;
      }
      p.covers.push_back(cov);
    }

  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (const TorsionPoset::Cover& cov : p.covers) {
    ++outdeg[cov.upper];
    ++indeg[cov.lower];
  }
  for (int i = 0; i < n; ++i) {
    if (indeg[i] == 0) {
      if (p.top != -1) throw std::logic_error("torsion poset has two maximal elements");
      p.top = i;
    }
    if (outdeg[i] == 0) {
      if (p.bottom != -1) throw std::logic_error("torsion poset has two minimal elements");
      p.bottom = i;
    }
  }
  if (p.top == -1 || p.bottom == -1)
    throw std::logic_error("torsion poset has no extremal element");

  // Kahn toposort as an acyclicity check.
  std::vector<int> deg = indeg, order;
  std::vector<int> queue;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 0) queue.push_back(i);
  while (!queue.empty()) {
    int v = queue.front();
    queue.erase(queue.begin());
    order.push_back(v);
    for (const TorsionPoset::Cover& cov : p.covers)
      if (cov.upper == v && --deg[cov.lower] == 0) queue.push_back(cov.lower);
  }
  if (static_cast<int>(order.size()) != n)
    throw std::logic_error("torsion poset relation is cyclic");
  return p;
}

std::string poset_dot(const BoundQuiver& q, const TorsionPoset& p) {
  std::ostringstream os;
  os << "digraph torsion {\n  rankdir=TB;\n";
  for (size_t i = 0; i < p.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << collection_key(q, p.nodes[i]) << "\"];\n";
  for (const TorsionPoset::Cover& cov : p.covers)
    os << "  n" << cov.upper << " -> n" << cov.lower << " [label=\"" << cov.kiss_count
       << "\"];\n";
  os << "}\n";
  return os.str();
}

KissUniquenessReport kiss_uniqueness_report(const FringedAlgebra& f) {
  const BoundQuiver& q = f.base;
  KissUniquenessReport rep;
  rep.all_bricks = true;
  for (const StringWalk& w : enumerate_strings(q, 0))
    if (is_tau_rigid(f, w) && !is_brick(q, w)) rep.all_bricks = false;
  TorsionPoset p = poset(f);
  rep.all_ones = true;
  for (const TorsionPoset::Cover& cov : p.covers) {
    rep.edges.push_back(
        {item_key(q, cov.upper_item), item_key(q, cov.lower_item), cov.kiss_count});
    if (cov.kiss_count != 1) rep.all_ones = false;
  }
  return rep;
}

}  // namespace gentle
