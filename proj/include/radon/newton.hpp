#pragma once

#include <string>
#include <vector>

#include "radon/multipoly.hpp"
#include "radon/rational.hpp"

namespace radon {

/// A compact face of the Newton polyhedron: the support points that
/// simultaneously minimize some strictly positive covector w. `weight`
/// stores one such w, scaled to coprime integers; `members` is sorted.
struct Face {
  std::vector<MultiIndex> members;
  std::vector<Rat> weight;
  int dim = 0;
};

/// Newton polyhedron N(f) = convex hull of { alpha + R^n_{>=0} } over the
/// support of f. Vertices carry an LP certificate: a strictly positive w
/// whose minimum over the support is attained uniquely at the vertex.
struct NewtonPolyhedron {
  int dim = 1;
  std::vector<MultiIndex> support;   // sorted
  std::vector<MultiIndex> vertices;  // sorted subset of support
  std::vector<std::vector<Rat>> vertex_certificates;  // parallel to vertices
  std::vector<Face> compact_faces;   // every positively exposed face, once
};

/// Builds the polyhedron by exact rational LP. Dimension is capped at 4.
NewtonPolyhedron newton_polyhedron(const std::vector<MultiIndex>& support, int dim);
NewtonPolyhedron newton_polyhedron(const MultiPoly& p);

/// Newton distance d(f): least t with (t,...,t) in N(f). Solved exactly:
/// minimize t over convex weights lambda on the support with
/// sum_a lambda_a a_j <= t for every coordinate j.
Rat newton_distance(const NewtonPolyhedron& N);

/// Membership of (t,...,t) in N(f) for a given t (LP feasibility). The
/// brute-force oracle for d(f) in the tests is built on this.
bool diagonal_point_in_polyhedron(const NewtonPolyhedron& N, const Rat& t);

/// f_F: the sub-polynomial of p with exactly the terms on F.
MultiPoly face_polynomial(const MultiPoly& p, const Face& F);

/// f*(t) = sum over vertices v of |t_1|^{v_1} ... |t_n|^{v_n}.
struct StarPoly {
  int dim = 1;
  std::vector<MultiIndex> vertex_exponents;
  MultiPoly as_poly() const;  // coefficients 1; evaluate via EvalTable(abs)
};
StarPoly star_polynomial(const NewtonPolyhedron& N);
double eval_star(const StarPoly& s, std::span<const double> point);

/// Re-checks a vertex certificate exactly: w > 0 and w.v < w.b for all
/// other support points b.
bool check_vertex_certificate(const NewtonPolyhedron& N, size_t vertex_index);

/// True if some convex combination of the vertices is componentwise <= b
/// (i.e. b lies in hull(vertices) + R^n_{>=0}).
bool dominated_by_vertices(const NewtonPolyhedron& N, const MultiIndex& b);

}  // namespace radon
