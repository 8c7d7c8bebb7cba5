#include "gentle/fringe.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gentle {

namespace {

// Pairing (in a, out b) may carry a nonzero composite b∘a only if the base
// ideal does not kill it; pairs touching a fringe arrow are unconstrained.
bool pair_allowed(const BoundQuiver& base, int base_arrows, int a, int b) {
  if (a < base_arrows && b < base_arrows) return !base.is_zero(b, a);
  return true;
}

}  // namespace

FringedAlgebra fringe(const BoundQuiver& q) {
  GentleReport rep = validate_gentle(q);
  if (!rep.is_gentle) {
    std::string why = rep.violations.empty() ? "unspecified" : rep.violations.front();
    throw NotGentleError("fringe requires a gentle algebra: " + why);
  }

  FringedAlgebra f;
  f.base = q;
  f.base_vertex_count = q.vertex_count();
  f.base_arrow_count = q.arrow_count();

  BoundQuiver hat = q;
  hat.name = q.name + "_hat";

  // Pad every base vertex to two ins and two outs with fresh fringe slots.
  for (int v = 0; v < f.base_vertex_count; ++v) {
    const std::string& name = q.vertices[v];
    int indeg = static_cast<int>(q.in_arrows[v].size());
    for (int k = 0; k < 2 - indeg; ++k) {
      std::string suffix = std::to_string(k + 1);
      hat.vertices.push_back(name + ".in" + suffix);
      hat.arrows.push_back({name + ".fi" + suffix,
                            static_cast<int>(hat.vertices.size()) - 1, v});
    }
    int outdeg = static_cast<int>(q.out_arrows[v].size());
    for (int k = 0; k < 2 - outdeg; ++k) {
      std::string suffix = std::to_string(k + 1);
      hat.vertices.push_back(name + ".out" + suffix);
      hat.arrows.push_back({name + ".fo" + suffix, v,
                            static_cast<int>(hat.vertices.size()) - 1});
    }
  }
  hat.rebuild_indices();

  // Extend the ideal: at each base vertex match ins to outs bijectively so the
  // matched composite is nonzero; the four minus two unmatched pairs become
  // relations. Base-base nonzero composites force their match, the rest are
  // paired in id order, falling back to the swap when the id-order pairing
  // would contradict the base ideal.
  std::set<std::pair<int, int>> have;
  for (const Relation& r : hat.relations) have.insert({r.second, r.first});
  for (int v = 0; v < f.base_vertex_count; ++v) {
    const std::vector<int>& ins = hat.in_arrows[v];
    const std::vector<int>& outs = hat.out_arrows[v];
    if (ins.size() != 2 || outs.size() != 2)
      throw std::logic_error("fringe padding failed at " + hat.vertices[v]);

    std::map<int, int> match;  // in arrow -> out arrow
    std::set<int> used_out;
    for (int a : ins) {
      if (a >= f.base_arrow_count) continue;
      for (int b : outs) {
        if (b >= f.base_arrow_count || q.is_zero(b, a)) continue;
        if (match.count(a) || used_out.count(b))
          throw std::logic_error("forced fringe matching clash at " + hat.vertices[v]);
        match[a] = b;
        used_out.insert(b);
      }
    }
    std::vector<int> rem_ins, rem_outs;
    for (int a : ins)
      if (!match.count(a)) rem_ins.push_back(a);
    for (int b : outs)
      if (!used_out.count(b)) rem_outs.push_back(b);
    if (rem_ins.size() != rem_outs.size())
      throw std::logic_error("fringe matching arity clash at " + hat.vertices[v]);
    if (rem_ins.size() == 2 &&
        !(pair_allowed(q, f.base_arrow_count, rem_ins[0], rem_outs[0]) &&
          pair_allowed(q, f.base_arrow_count, rem_ins[1], rem_outs[1])))
      std::swap(rem_outs[0], rem_outs[1]);
    for (size_t k = 0; k < rem_ins.size(); ++k) {
      if (!pair_allowed(q, f.base_arrow_count, rem_ins[k], rem_outs[k]))
        throw std::logic_error("fringe matching infeasible at " + hat.vertices[v]);
      match[rem_ins[k]] = rem_outs[k];
    }

    for (int a : ins)
      for (int b : outs) {
        if (match[a] == b) continue;
        if (have.insert({b, a}).second) hat.relations.push_back({b, a});
      }
  }
  hat.rebuild_indices();

  GentleReport rep2 = validate_gentle(hat);
  if (!rep2.is_gentle) {
    std::string why = rep2.violations.empty() ? "unspecified" : rep2.violations.front();
    throw std::logic_error("fringed algebra is not gentle: " + why);
  }

  for (int v = f.base_vertex_count; v < hat.vertex_count(); ++v) {
    f.fringe_vertices.push_back(v);
    if (hat.out_arrows[v].empty())
      f.sink_fringe_vertices.push_back(v);
    else
      f.source_fringe_vertices.push_back(v);
  }
  f.hat = hat;
  return f;
}

ArrowCensus arrow_census(const FringedAlgebra& f) {
  ArrowCensus c;
  c.hat_arrows = f.hat.arrow_count();
  c.expected = static_cast<int>(f.sink_fringe_vertices.size()) + 2 * f.base_vertex_count;
  return c;
}

}  // namespace gentle
