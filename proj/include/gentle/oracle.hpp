#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "gentle/strings.hpp"

// Exact linear-algebra oracle over the quiver representation model. Nothing
// here depends on the walk combinatorics beyond reading off a representation
// from a string, so it cross-checks the combinatorial route independently.
namespace gentle::oracle {

using Rational = boost::multiprecision::cpp_rational;

struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;  // row-major
  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

Matrix mul(const Matrix& x, const Matrix& y);
int rank(Matrix m);
// Columns form a basis of the right kernel.
Matrix kernel_basis(const Matrix& m);

struct Representation {
  std::vector<int> dims;       // per vertex
  std::vector<Matrix> maps;    // per arrow: dims[src] -> dims[dst]
  int total_dim() const;
};

Representation rep_of_string(const BoundQuiver& q, const StringWalk& w);

int hom_dim_linear(const BoundQuiver& q, const Representation& m, const Representation& n);
// Each basis map phi as per-vertex matrices phi[v]: M_v -> N_v.
std::vector<std::vector<Matrix>> hom_basis_linear(const BoundQuiver& q,
                                                  const Representation& m,
                                                  const Representation& n);

// Paths out of a vertex, BFS order; basis of the projective P_v.
struct PathBasis {
  // Each path as an arrow index sequence, first arrow applied first.
  std::vector<std::vector<int>> paths;
  std::vector<int> end_vertex;
};
PathBasis paths_from(const BoundQuiver& q, int v);
PathBasis paths_into(const BoundQuiver& q, int v);

Representation projective_rep(const BoundQuiver& q, int v);
Representation injective_rep(const BoundQuiver& q, int v);

// Minimal projective presentation P1 -> P0 -> M -> 0. The map p1 is recorded
// through its path coefficients: entry (i, j) lists the paths (with
// coefficients) composing the component P1_j -> P0_i.
struct ProjectivePresentation {
  std::vector<int> p0_vertices, p1_vertices;
  struct Entry {
    std::vector<std::pair<std::vector<int>, Rational>> paths;
  };
  std::vector<std::vector<Entry>> p1_map;  // [i][j]
  Representation p0, p1, omega;            // omega = kernel of P0 -> M
};
ProjectivePresentation projective_presentation(const BoundQuiver& q, const Representation& m);

// dim Ext^1(Y, X) = dim Hom(Omega Y, X) - dim Hom(P0, X) + dim Hom(Y, X).
int ext1_dim_linear(const BoundQuiver& q, const Representation& y, const Representation& x);

// Kernel of the Nakayama functor applied to the minimal presentation.
Representation tau_linear(const BoundQuiver& q, const Representation& m);

// True when some map (sum of images of hom basis elements) from a direct sum
// of the generators onto y is surjective, i.e. y lies in Fac(gens).
bool surjection_exists(const BoundQuiver& q, const std::vector<Representation>& gens,
                       const Representation& y);

}  // namespace gentle::oracle
