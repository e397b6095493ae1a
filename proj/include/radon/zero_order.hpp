#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radon/multipoly.hpp"
#include "radon/newton.hpp"

namespace radon {

enum class Exactness { Exact, LowerBound };

/// One zero of a face polynomial off the coordinate hyperplanes, with the
/// order of vanishing found there. `rational_point` is set when the zero
/// has exact rational coordinates (then the order is certified exactly).
struct ZeroWitness {
  int face_index = -1;
  std::vector<double> point;
  int order = 0;
  std::optional<std::vector<Rat>> rational_point;
};

/// o(f): the maximum order of vanishing of any compact-face polynomial at
/// a point of (R \ {0})^n; 0 when no face polynomial has such zeros.
struct ZeroOrderResult {
  int value = 0;
  Exactness exactness = Exactness::Exact;
  std::vector<ZeroWitness> witnesses;
};

/// Order of vanishing of one face polynomial on (R \ {0})^n.
/// n = 1 and vertex faces: 0, exact (a monomial has no zeros off the
/// origin). n = 2 edges: exact, by reducing the quasi-homogeneous f_F
/// along its scaling orbits to univariate root multiplicities. n >= 3:
/// certified numerical lower bound (multistart descent on |f_F|^2).
struct FaceZeroOrder {
  int order = 0;
  Exactness exactness = Exactness::Exact;
  std::optional<ZeroWitness> witness;
};
FaceZeroOrder zero_order_face(const MultiPoly& fF, const Face& F);

ZeroOrderResult oscillation_order(const MultiPoly& p, const NewtonPolyhedron& N);
ZeroOrderResult oscillation_order(const MultiPoly& p);

/// "Order" is jet order: the largest m such that every partial derivative
/// of total order < m vanishes at the point. Exact check at a rational
/// point; used for witness certification.
int jet_order_at(const MultiPoly& p, const std::vector<Rat>& point, int max_order);

/// All partial derivatives of total order m (each as a polynomial).
std::vector<MultiPoly> partials_of_order(const MultiPoly& p, int m);

}  // namespace radon
