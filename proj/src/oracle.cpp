#include "gentle/oracle.hpp"

#include <algorithm>
#include <map>

namespace gentle::oracle {

Matrix mul(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    Rational inv = m.at(r, c);
    for (int j = 0; j < m.cols; ++j) m.at(r, j) /= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

Matrix kernel_basis(const Matrix& m_in) {
  Matrix m = m_in;
  std::vector<int> pivots = rref(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  int nfree = m.cols - static_cast<int>(pivots.size());
  Matrix k(m.cols, nfree);
  int out = 0;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    k.at(c, out) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) k.at(pivots[r], out) = -m.at(static_cast<int>(r), c);
    ++out;
  }
  return k;
}

namespace {

// Solves A x = b for full-column-rank A; throws if inconsistent.
Matrix solve_columns(const Matrix& a, const Matrix& b) {
  Matrix aug(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) aug.at(i, a.cols + j) = b.at(i, j);
  }
  std::vector<int> pivots = rref(aug);
  Matrix x(a.cols, b.cols);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= a.cols) throw std::logic_error("inconsistent linear system");
    for (int j = 0; j < b.cols; ++j) x.at(pivots[r], j) = aug.at(static_cast<int>(r), a.cols + j);
  }
  return x;
}

}  // namespace

int Representation::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

Representation rep_of_string(const BoundQuiver& q, const StringWalk& w) {
  Representation rep;
  rep.dims.assign(q.vertex_count(), 0);
  int n = w.length();
  std::vector<int> slot_index(n + 1);
  for (int s = 0; s <= n; ++s) slot_index[s] = rep.dims[slot_vertex(q, w, s)]++;
  rep.maps.resize(q.arrow_count());
  for (int a = 0; a < q.arrow_count(); ++a)
    rep.maps[a] = Matrix(rep.dims[q.arrows[a].dst], rep.dims[q.arrows[a].src]);
  for (int i = 0; i < n; ++i) {
    SignedLetter l = w.letters[i];
    if (!l.inv)
      rep.maps[l.arrow].at(slot_index[i + 1], slot_index[i]) = 1;
    else
      rep.maps[l.arrow].at(slot_index[i], slot_index[i + 1]) = 1;
  }
  return rep;
}

namespace {

struct HomSystem {
  std::vector<int> offset;  // variable offset of phi_v
  int total = 0;
  Matrix constraints;
};

HomSystem hom_system(const BoundQuiver& q, const Representation& m, const Representation& n) {
  HomSystem sys;
  sys.offset.resize(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) {
    sys.offset[v] = sys.total;
    sys.total += m.dims[v] * n.dims[v];
  }
  int rows = 0;
  for (int g = 0; g < q.arrow_count(); ++g)
    rows += n.dims[q.arrows[g].dst] * m.dims[q.arrows[g].src];
  sys.constraints = Matrix(rows, sys.total);
  auto var = [&](int v, int r, int c) { return sys.offset[v] + r * m.dims[v] + c; };
  int row = 0;
  for (int g = 0; g < q.arrow_count(); ++g) {
    int s = q.arrows[g].src, e = q.arrows[g].dst;
    const Matrix& mg = m.maps[g];
    const Matrix& ng = n.maps[g];
    // (N_g phi_s - phi_e M_g)[r, c] = 0
    for (int r = 0; r < n.dims[e]; ++r)
      for (int c = 0; c < m.dims[s]; ++c) {
        for (int k = 0; k < n.dims[s]; ++k)
          if (ng.at(r, k) != 0) sys.constraints.at(row, var(s, k, c)) += ng.at(r, k);
        for (int k = 0; k < m.dims[e]; ++k)
          if (mg.at(k, c) != 0) sys.constraints.at(row, var(e, r, k)) -= mg.at(k, c);
        ++row;
      }
  }
  return sys;
}

}  // namespace

int hom_dim_linear(const BoundQuiver& q, const Representation& m, const Representation& n) {
  HomSystem sys = hom_system(q, m, n);
  return sys.total - rank(sys.constraints);
}

std::vector<std::vector<Matrix>> hom_basis_linear(const BoundQuiver& q, const Representation& m,
                                                  const Representation& n) {
  HomSystem sys = hom_system(q, m, n);
  Matrix k = kernel_basis(sys.constraints);
  std::vector<std::vector<Matrix>> basis;
  for (int b = 0; b < k.cols; ++b) {
    std::vector<Matrix> phi(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v) {
      phi[v] = Matrix(n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c)
          phi[v].at(r, c) = k.at(sys.offset[v] + r * m.dims[v] + c, b);
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

namespace {

constexpr int kPathCap = 20000;

PathBasis grow_paths(const BoundQuiver& q, int v, bool forward) {
  PathBasis pb;
  pb.paths.push_back({});
  pb.end_vertex.push_back(v);
  std::vector<std::pair<std::vector<int>, int>> layer = {{{}, v}};
  while (!layer.empty()) {
    std::vector<std::pair<std::vector<int>, int>> next;
    for (const auto& [p, u] : layer) {
      const auto& adj = forward ? q.out_arrows[u] : q.in_arrows[u];
      for (int g : adj) {
        if (!p.empty()) {
          bool zero = forward ? q.is_zero(g, p.back()) : q.is_zero(p.back(), g);
          if (zero) continue;
        }
        std::vector<int> np = p;
        np.push_back(g);
        int nu = forward ? q.arrows[g].dst : q.arrows[g].src;
        pb.paths.push_back(np);
        pb.end_vertex.push_back(nu);
        if (static_cast<int>(pb.paths.size()) > kPathCap)
          throw std::logic_error("path explosion; is the ideal admissible?");
        next.push_back({np, nu});
      }
    }
    layer = std::move(next);
  }
  if (!forward) {
    // Store arrows in application order (first applied first) and report the
    // far endpoint the same way as the forward variant.
    for (auto& p : pb.paths) std::reverse(p.begin(), p.end());
  }
  return pb;
}

}  // namespace

PathBasis paths_from(const BoundQuiver& q, int v) { return grow_paths(q, v, true); }
PathBasis paths_into(const BoundQuiver& q, int v) {
  PathBasis pb = grow_paths(q, v, false);
  for (size_t i = 0; i < pb.paths.size(); ++i)
    pb.end_vertex[i] = pb.paths[i].empty() ? v : q.arrows[pb.paths[i].front()].src;
  return pb;
}

namespace {

// Per-vertex numbering of a path basis.
struct PathIndex {
  std::vector<int> vertex_of;   // per path: its far endpoint
  std::vector<int> index_of;    // per path: index within that vertex
  std::vector<int> dims;        // per vertex
  std::map<std::vector<int>, int> lookup;  // path -> global path number
};

PathIndex index_paths(const BoundQuiver& q, const PathBasis& pb) {
  PathIndex pi;
  pi.dims.assign(q.vertex_count(), 0);
  pi.vertex_of = pb.end_vertex;
  pi.index_of.resize(pb.paths.size());
  for (size_t i = 0; i < pb.paths.size(); ++i) {
    pi.index_of[i] = pi.dims[pb.end_vertex[i]]++;
    pi.lookup[pb.paths[i]] = static_cast<int>(i);
  }
  return pi;
}

}  // namespace

Representation projective_rep(const BoundQuiver& q, int v) {
  PathBasis pb = paths_from(q, v);
  PathIndex pi = index_paths(q, pb);
  Representation rep;
  rep.dims = pi.dims;
  rep.maps.resize(q.arrow_count());
  for (int g = 0; g < q.arrow_count(); ++g)
    rep.maps[g] = Matrix(rep.dims[q.arrows[g].dst], rep.dims[q.arrows[g].src]);
  for (size_t i = 0; i < pb.paths.size(); ++i) {
    int u = pb.end_vertex[i];
    for (int g : q.out_arrows[u]) {
      if (!pb.paths[i].empty() && q.is_zero(g, pb.paths[i].back())) continue;
      std::vector<int> np = pb.paths[i];
      np.push_back(g);
      auto it = pi.lookup.find(np);
      if (it == pi.lookup.end()) continue;
      rep.maps[g].at(pi.index_of[it->second], pi.index_of[i]) = 1;
    }
  }
  return rep;
}

Representation injective_rep(const BoundQuiver& q, int v) {
  PathBasis pb = paths_into(q, v);
  PathIndex pi = index_paths(q, pb);
  Representation rep;
  rep.dims = pi.dims;
  rep.maps.resize(q.arrow_count());
  for (int g = 0; g < q.arrow_count(); ++g)
    rep.maps[g] = Matrix(rep.dims[q.arrows[g].dst], rep.dims[q.arrows[g].src]);
  // Dual of precomposition: basis functional of path p maps to the functional
  // of p with its first arrow g stripped.
  for (size_t i = 0; i < pb.paths.size(); ++i) {
    if (pb.paths[i].empty()) continue;
    int g = pb.paths[i].front();
    std::vector<int> rest(pb.paths[i].begin() + 1, pb.paths[i].end());
    auto it = pi.lookup.find(rest);
    if (it == pi.lookup.end()) throw std::logic_error("path tail missing from basis");
    rep.maps[g].at(pi.index_of[it->second], pi.index_of[i]) = 1;
  }
  return rep;
}

namespace {

// Applies a path (first arrow first) to a column vector at its start vertex.
Matrix apply_path(const BoundQuiver& q, const Representation& m, const std::vector<int>& path,
                  Matrix vec) {
  for (int g : path) vec = mul(m.maps[g], vec);
  return vec;
}

// Vectors spanning tops of m per vertex: standard vectors extending rad(M).
std::vector<std::vector<Matrix>> top_lifts(const BoundQuiver& q, const Representation& m) {
  std::vector<std::vector<Matrix>> lifts(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) {
    int cols = 0;
    for (int g : q.in_arrows[v]) cols += m.dims[q.arrows[g].src];
    Matrix rad(m.dims[v], cols);
    int c0 = 0;
    for (int g : q.in_arrows[v]) {
      const Matrix& mg = m.maps[g];
      for (int c = 0; c < mg.cols; ++c, ++c0)
        for (int r = 0; r < mg.rows; ++r) rad.at(r, c0) = mg.at(r, c);
    }
    int base_rank = rank(rad);
    Matrix cur = rad;
    for (int i = 0; i < m.dims[v]; ++i) {
      Matrix trial(m.dims[v], cur.cols + 1);
      for (int r = 0; r < m.dims[v]; ++r)
        for (int c = 0; c < cur.cols; ++c) trial.at(r, c) = cur.at(r, c);
      trial.at(i, cur.cols) = 1;
      if (rank(trial) > base_rank) {
        Matrix e(m.dims[v], 1);
        e.at(i, 0) = 1;
        lifts[v].push_back(e);
        cur = trial;
        ++base_rank;
      }
    }
  }
  return lifts;
}

struct SumOfProjectives {
  std::vector<int> vertices;                 // summand vertices
  std::vector<PathBasis> bases;              // per summand
  std::vector<PathIndex> indices;            // per summand
  Representation rep;                        // the direct sum
  std::vector<std::vector<int>> offset;      // [summand][vertex] -> block offset
};

SumOfProjectives sum_of_projectives(const BoundQuiver& q, const std::vector<int>& vertices) {
  SumOfProjectives s;
  s.vertices = vertices;
  s.rep.dims.assign(q.vertex_count(), 0);
  for (int v : vertices) {
    s.bases.push_back(paths_from(q, v));
    s.indices.push_back(index_paths(q, s.bases.back()));
  }
  s.offset.assign(vertices.size(), std::vector<int>(q.vertex_count(), 0));
  for (size_t j = 0; j < vertices.size(); ++j)
    for (int u = 0; u < q.vertex_count(); ++u) {
      s.offset[j][u] = s.rep.dims[u];
      s.rep.dims[u] += s.indices[j].dims[u];
    }
  s.rep.maps.resize(q.arrow_count());
  for (int g = 0; g < q.arrow_count(); ++g)
    s.rep.maps[g] = Matrix(s.rep.dims[q.arrows[g].dst], s.rep.dims[q.arrows[g].src]);
  for (size_t j = 0; j < vertices.size(); ++j) {
    Representation pj = projective_rep(q, s.vertices[j]);
    for (int g = 0; g < q.arrow_count(); ++g) {
      int su = q.arrows[g].src, eu = q.arrows[g].dst;
      for (int r = 0; r < pj.dims[eu]; ++r)
        for (int c = 0; c < pj.dims[su]; ++c)
          if (pj.maps[g].at(r, c) != 0)
            s.rep.maps[g].at(s.offset[j][eu] + r, s.offset[j][su] + c) = pj.maps[g].at(r, c);
    }
  }
  return s;
}

// Vertexwise matrices of the cover map from a sum of projectives determined
// by target vectors (one per summand, living at the summand vertex).
std::vector<Matrix> cover_map(const BoundQuiver& q, const SumOfProjectives& s,
                              const Representation& m, const std::vector<Matrix>& targets) {
  std::vector<Matrix> p(q.vertex_count());
  for (int u = 0; u < q.vertex_count(); ++u) p[u] = Matrix(m.dims[u], s.rep.dims[u]);
  for (size_t j = 0; j < s.vertices.size(); ++j) {
    const PathBasis& pb = s.bases[j];
    const PathIndex& pi = s.indices[j];
    for (size_t i = 0; i < pb.paths.size(); ++i) {
      Matrix val = apply_path(q, m, pb.paths[i], targets[j]);
      int u = pb.end_vertex[i];
      for (int r = 0; r < m.dims[u]; ++r)
        p[u].at(r, s.offset[j][u] + pi.index_of[i]) = val.at(r, 0);
    }
  }
  return p;
}

// Kernel of a vertexwise map out of `big` as an explicit subrepresentation,
// with the inclusion matrices per vertex.
struct SubRep {
  Representation rep;
  std::vector<Matrix> incl;  // big.dims[v] x rep.dims[v]
};

SubRep kernel_subrep(const BoundQuiver& q, const Representation& big,
                     const std::vector<Matrix>& map) {
  SubRep k;
  k.incl.resize(q.vertex_count());
  k.rep.dims.assign(q.vertex_count(), 0);
  for (int v = 0; v < q.vertex_count(); ++v) {
    k.incl[v] = kernel_basis(map[v]);
    k.rep.dims[v] = k.incl[v].cols;
  }
  k.rep.maps.resize(q.arrow_count());
  for (int g = 0; g < q.arrow_count(); ++g) {
    int s = q.arrows[g].src, e = q.arrows[g].dst;
    Matrix moved = mul(big.maps[g], k.incl[s]);
    k.rep.maps[g] = solve_columns(k.incl[e], moved);
  }
  return k;
}

}  // namespace

ProjectivePresentation projective_presentation(const BoundQuiver& q, const Representation& m) {
  ProjectivePresentation pres;
  auto lifts = top_lifts(q, m);
  std::vector<Matrix> targets;
  for (int v = 0; v < q.vertex_count(); ++v)
    for (const Matrix& w : lifts[v]) {
      pres.p0_vertices.push_back(v);
      targets.push_back(w);
    }
  SumOfProjectives p0 = sum_of_projectives(q, pres.p0_vertices);
  pres.p0 = p0.rep;
  std::vector<Matrix> p0map = cover_map(q, p0, m, targets);
  SubRep omega = kernel_subrep(q, pres.p0, p0map);
  pres.omega = omega.rep;

  auto olifts = top_lifts(q, omega.rep);
  std::vector<Matrix> otargets;  // in omega coordinates
  for (int v = 0; v < q.vertex_count(); ++v)
    for (const Matrix& w : olifts[v]) {
      pres.p1_vertices.push_back(v);
      otargets.push_back(w);
    }
  SumOfProjectives p1 = sum_of_projectives(q, pres.p1_vertices);
  pres.p1 = p1.rep;

  // Express each P1 generator image (an omega vector pushed into P0) over the
  // path basis of P0.
  pres.p1_map.assign(pres.p0_vertices.size(),
                     std::vector<ProjectivePresentation::Entry>(pres.p1_vertices.size()));
  for (size_t j = 0; j < pres.p1_vertices.size(); ++j) {
    int a = pres.p1_vertices[j];
    Matrix z = mul(omega.incl[a], otargets[j]);  // vector in P0_a
    for (size_t i = 0; i < pres.p0_vertices.size(); ++i) {
      const PathIndex& pi = p0.indices[i];
      const PathBasis& pb = p0.bases[i];
      for (size_t pth = 0; pth < pb.paths.size(); ++pth) {
        if (pb.end_vertex[pth] != a) continue;
        Rational c = z.at(p0.offset[i][a] + pi.index_of[pth], 0);
        if (c != 0) pres.p1_map[i][j].paths.push_back({pb.paths[pth], c});
      }
    }
  }
  return pres;
}

int ext1_dim_linear(const BoundQuiver& q, const Representation& y, const Representation& x) {
  ProjectivePresentation pres = projective_presentation(q, y);
  return hom_dim_linear(q, pres.omega, x) - hom_dim_linear(q, pres.p0, x) +
         hom_dim_linear(q, y, x);
}

namespace {

struct SumOfInjectives {
  std::vector<int> vertices;
  std::vector<PathBasis> bases;   // paths into the vertex
  std::vector<PathIndex> indices;
  Representation rep;
  std::vector<std::vector<int>> offset;
};

SumOfInjectives sum_of_injectives(const BoundQuiver& q, const std::vector<int>& vertices) {
  SumOfInjectives s;
  s.vertices = vertices;
  s.rep.dims.assign(q.vertex_count(), 0);
  for (int v : vertices) {
    s.bases.push_back(paths_into(q, v));
    s.indices.push_back(index_paths(q, s.bases.back()));
  }
  s.offset.assign(vertices.size(), std::vector<int>(q.vertex_count(), 0));
  for (size_t j = 0; j < vertices.size(); ++j)
    for (int u = 0; u < q.vertex_count(); ++u) {
      s.offset[j][u] = s.rep.dims[u];
      s.rep.dims[u] += s.indices[j].dims[u];
    }
  s.rep.maps.resize(q.arrow_count());
  for (int g = 0; g < q.arrow_count(); ++g)
    s.rep.maps[g] = Matrix(s.rep.dims[q.arrows[g].dst], s.rep.dims[q.arrows[g].src]);
  for (size_t j = 0; j < vertices.size(); ++j) {
    Representation ij = injective_rep(q, s.vertices[j]);
    for (int g = 0; g < q.arrow_count(); ++g) {
      int su = q.arrows[g].src, eu = q.arrows[g].dst;
      for (int r = 0; r < ij.dims[eu]; ++r)
        for (int c = 0; c < ij.dims[su]; ++c)
          if (ij.maps[g].at(r, c) != 0)
            s.rep.maps[g].at(s.offset[j][eu] + r, s.offset[j][su] + c) = ij.maps[g].at(r, c);
    }
  }
  return s;
}

std::vector<int> compose_paths(const BoundQuiver& q, const std::vector<int>& first,
                               const std::vector<int>& then, bool* zero) {
  std::vector<int> out = first;
  *zero = false;
  for (int g : then) {
    if (!out.empty() && q.is_zero(g, out.back())) {
      *zero = true;
      return {};
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace

Representation tau_linear(const BoundQuiver& q, const Representation& m) {
  ProjectivePresentation pres = projective_presentation(q, m);
  SumOfInjectives nu1 = sum_of_injectives(q, pres.p1_vertices);
  SumOfInjectives nu0 = sum_of_injectives(q, pres.p0_vertices);
  // nu(p1): nu(P1) -> nu(P0), built from the path coefficients of p1.
  std::vector<Matrix> map(q.vertex_count());
  for (int u = 0; u < q.vertex_count(); ++u) map[u] = Matrix(nu0.rep.dims[u], nu1.rep.dims[u]);
  for (size_t i = 0; i < pres.p0_vertices.size(); ++i)
    for (size_t j = 0; j < pres.p1_vertices.size(); ++j)
      for (const auto& [qpath, coeff] : pres.p1_map[i][j].paths) {
        // psi_q: I_{a_j} -> I_{v_i}; at vertex u the functional of a path
        // p: u -> a_j contributes to the functional of r: u -> v_i when
        // p = q compose r.
        const PathBasis& rb = nu0.bases[i];
        const PathIndex& ri = nu0.indices[i];
        const PathIndex& pi = nu1.indices[j];
        for (size_t rp = 0; rp < rb.paths.size(); ++rp) {
          bool zero = false;
          std::vector<int> full = compose_paths(q, rb.paths[rp], qpath, &zero);
          if (zero) continue;
          auto it = pi.lookup.find(full);
          if (it == pi.lookup.end()) continue;
          int u = rb.end_vertex[rp];
          map[u].at(nu0.offset[i][u] + ri.index_of[rp],
                    nu1.offset[j][u] + pi.index_of[it->second]) += coeff;
        }
      }
  SubRep k = kernel_subrep(q, nu1.rep, map);
  return k.rep;
}

bool surjection_exists(const BoundQuiver& q, const std::vector<Representation>& gens,
                       const Representation& y) {
  std::vector<std::vector<Rational>> cols(q.vertex_count());
  std::vector<int> ncols(q.vertex_count(), 0);
  for (const auto& g : gens) {
    auto basis = hom_basis_linear(q, g, y);
    for (const auto& phi : basis)
      for (int v = 0; v < q.vertex_count(); ++v)
        for (int c = 0; c < phi[v].cols; ++c) {
          for (int r = 0; r < phi[v].rows; ++r) cols[v].push_back(phi[v].at(r, c));
          ++ncols[v];
        }
  }
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (y.dims[v] == 0) continue;
    if (ncols[v] == 0) return false;
    // cols[v] holds column-major data of a dims x ncols matrix.
    Matrix m(y.dims[v], ncols[v]);
    for (int c = 0; c < ncols[v]; ++c)
      for (int r = 0; r < y.dims[v]; ++r) m.at(r, c) = cols[v][static_cast<size_t>(c) * y.dims[v] + r];
    if (rank(m) < y.dims[v]) return false;
  }
  return true;
}

}  // namespace gentle::oracle
