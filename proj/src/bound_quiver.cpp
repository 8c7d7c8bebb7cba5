#include "gentle/bound_quiver.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace gentle {

void BoundQuiver::rebuild_indices() {
  vertex_index.clear();
  arrow_index.clear();
  for (int i = 0; i < vertex_count(); ++i) vertex_index[vertices[i]] = i;
  for (int i = 0; i < arrow_count(); ++i) arrow_index[arrows[i].id] = i;
  out_arrows.assign(vertices.size(), {});
  in_arrows.assign(vertices.size(), {});
  for (int i = 0; i < arrow_count(); ++i) {
    out_arrows[arrows[i].src].push_back(i);
    in_arrows[arrows[i].dst].push_back(i);
  }
  auto by_id = [&](int a, int b) { return arrows[a].id < arrows[b].id; };
  for (auto& v : out_arrows) std::sort(v.begin(), v.end(), by_id);
  for (auto& v : in_arrows) std::sort(v.begin(), v.end(), by_id);
  zero_pairs.clear();
  for (const auto& r : relations) zero_pairs.insert({r.second, r.first});
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& s) {
  auto pos = s.find('#');
  return pos == std::string::npos ? s : s.substr(0, pos);
}

}  // namespace

BoundQuiver parse_quiver(const std::string& text) {
  BoundQuiver q;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_header = false;
  bool in_relations = false;
  std::vector<std::pair<std::pair<std::string, std::string>, int>> rel_tokens;
  std::vector<std::pair<std::array<std::string, 3>, int>> arrow_tokens;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks[0] != "algebra" || toks.size() != 2)
        throw ParseError(lineno, "expected 'algebra NAME'");
      q.name = toks[1];
      saw_header = true;
      continue;
    }
    if (toks[0] == "vertices:") {
      if (in_relations) throw ParseError(lineno, "vertices after relations section");
      for (size_t i = 1; i < toks.size(); ++i) {
        if (std::find(q.vertices.begin(), q.vertices.end(), toks[i]) != q.vertices.end())
          throw ParseError(lineno, "duplicate vertex '" + toks[i] + "'");
        q.vertices.push_back(toks[i]);
      }
      continue;
    }
    if (toks[0] == "arrow") {
      if (in_relations) throw ParseError(lineno, "arrow after relations section");
      // arrow id: src -> dst
      if (toks.size() != 5 || toks[3] != "->" || toks[1].empty() || toks[1].back() != ':')
        throw ParseError(lineno, "expected 'arrow ID: SRC -> DST'");
      arrow_tokens.push_back({{toks[1].substr(0, toks[1].size() - 1), toks[2], toks[4]}, lineno});
      continue;
    }
    if (toks[0] == "relations:") {
      if (toks.size() != 1) throw ParseError(lineno, "unexpected tokens after 'relations:'");
      in_relations = true;
      continue;
    }
    if (in_relations) {
      if (toks.size() != 2) throw ParseError(lineno, "expected 'SECOND FIRST' relation pair");
      rel_tokens.push_back({{toks[0], toks[1]}, lineno});
      continue;
    }
    throw ParseError(lineno, "unrecognized directive '" + toks[0] + "'");
  }
  if (!saw_header) throw ParseError(lineno, "missing 'algebra NAME' header");

  std::map<std::string, int> vidx;
  for (int i = 0; i < q.vertex_count(); ++i) vidx[q.vertices[i]] = i;
  std::set<std::string> arrow_ids;
  for (const auto& [t, ln] : arrow_tokens) {
    const auto& [id, src, dst] = t;
    if (arrow_ids.count(id)) throw ParseError(ln, "duplicate arrow '" + id + "'");
    arrow_ids.insert(id);
    auto s = vidx.find(src), d = vidx.find(dst);
    if (s == vidx.end()) throw ParseError(ln, "unknown vertex '" + src + "'");
    if (d == vidx.end()) throw ParseError(ln, "unknown vertex '" + dst + "'");
    q.arrows.push_back({id, s->second, d->second});
  }
  std::map<std::string, int> aidx;
  for (int i = 0; i < q.arrow_count(); ++i) aidx[q.arrows[i].id] = i;
  std::set<std::pair<int, int>> seen;
  for (const auto& [t, ln] : rel_tokens) {
    auto g = aidx.find(t.first), f = aidx.find(t.second);
    if (g == aidx.end()) throw ParseError(ln, "unknown arrow '" + t.first + "'");
    if (f == aidx.end()) throw ParseError(ln, "unknown arrow '" + t.second + "'");
    if (q.arrows[f->second].dst != q.arrows[g->second].src)
      throw ParseError(ln, "relation " + t.first + " " + t.second + " is not composable");
    if (!seen.insert({g->second, f->second}).second)
      throw ParseError(ln, "duplicate relation " + t.first + " " + t.second);
    q.relations.push_back({g->second, f->second});
  }
  q.rebuild_indices();
  return q;
}

std::string serialize_quiver(const BoundQuiver& q) {
  std::ostringstream out;
  out << "algebra " << q.name << "\n";
  out << "vertices:";
  for (const auto& v : q.vertices) out << " " << v;
  out << "\n";
  for (const auto& a : q.arrows)
    out << "arrow " << a.id << ": " << q.vertices[a.src] << " -> " << q.vertices[a.dst] << "\n";
  if (!q.relations.empty()) {
    out << "relations:\n";
    for (const auto& r : q.relations)
      out << q.arrows[r.second].id << " " << q.arrows[r.first].id << "\n";
  }
  return out.str();
}

GentleReport validate_gentle(const BoundQuiver& q) {
  GentleReport rep;
  bool s_ok = true, g_ok = true;

  for (int v = 0; v < q.vertex_count(); ++v) {
    if (q.in_arrows[v].size() > 2) {
      s_ok = false;
      rep.violations.push_back("vertex " + q.vertices[v] + " has " +
                               std::to_string(q.in_arrows[v].size()) + " incoming arrows");
    }
    if (q.out_arrows[v].size() > 2) {
      s_ok = false;
      rep.violations.push_back("vertex " + q.vertices[v] + " has " +
                               std::to_string(q.out_arrows[v].size()) + " outgoing arrows");
    }
  }

  // For each arrow, among composable partners at most one composite may be
  // nonzero (string condition) and at most one may be zero (gentle condition).
  for (int b = 0; b < q.arrow_count(); ++b) {
    std::vector<std::string> nz, z;
    for (int a : q.in_arrows[q.arrows[b].src])
      (q.is_zero(b, a) ? z : nz).push_back(q.arrows[a].id);
    if (nz.size() > 1) {
      s_ok = false;
      rep.violations.push_back("arrow " + q.arrows[b].id + " composes nonzero after " +
                               std::to_string(nz.size()) + " arrows");
    }
    if (z.size() > 1) {
      g_ok = false;
      rep.violations.push_back("arrow " + q.arrows[b].id + " has " + std::to_string(z.size()) +
                               " zero compositions on the right");
    }
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    std::vector<std::string> nz, z;
    for (int b : q.out_arrows[q.arrows[a].dst])
      (q.is_zero(b, a) ? z : nz).push_back(q.arrows[b].id);
    if (nz.size() > 1) {
      s_ok = false;
      rep.violations.push_back("arrow " + q.arrows[a].id + " composes nonzero before " +
                               std::to_string(nz.size()) + " arrows");
    }
    if (z.size() > 1) {
      g_ok = false;
      rep.violations.push_back("arrow " + q.arrows[a].id + " has " + std::to_string(z.size()) +
                               " zero compositions on the left");
    }
  }

  // Admissibility: no arbitrarily long nonzero path, i.e. the graph on arrows
  // with an edge a -> b whenever b∘a survives must be acyclic.
  {
    int n = q.arrow_count();
    std::vector<int> state(n, 0);
    std::vector<std::vector<int>> next(n);
    for (int a = 0; a < n; ++a)
      for (int b : q.out_arrows[q.arrows[a].dst])
        if (!q.is_zero(b, a)) next[a].push_back(b);
    bool cyclic = false;
    std::vector<int> stack;
    for (int s = 0; s < n && !cyclic; ++s) {
      if (state[s]) continue;
      stack.push_back(s);
      while (!stack.empty()) {
        int a = stack.back();
        if (state[a] == 0) {
          state[a] = 1;
          for (int b : next[a]) {
            if (state[b] == 1) {
              cyclic = true;
              rep.violations.push_back("nonzero cycle through arrow " + q.arrows[b].id);
              break;
            }
            if (state[b] == 0) stack.push_back(b);
          }
          if (cyclic) break;
        } else {
          if (state[a] == 1) state[a] = 2;
          stack.pop_back();
        }
      }
      stack.clear();
    }
    if (cyclic) s_ok = false;
  }

  rep.is_string_algebra = s_ok;
  rep.is_gentle = s_ok && g_ok;
  return rep;
}

}  // namespace gentle
