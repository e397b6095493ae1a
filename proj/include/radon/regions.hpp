#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "radon/rational.hpp"
#include "radon/zero_order.hpp"

namespace radon {

/// A point in (1/p, 1/q, s) exponent space, exact.
struct Point3 {
  Rat x, y, z;
  bool operator==(const Point3&) const = default;
};

/// Plane a x + b y + c z = e.
struct Plane3 {
  Rat a, b, c, e;
  Rat eval(const Point3& p) const { return a * p.x + b * p.y + c * p.z; }
  /// Height z over (x,y); plane must not be vertical (c != 0).
  Rat height(const Rat& x, const Rat& y) const;
  bool operator==(const Plane3&) const = default;
};

/// Closed convex polytope in exponent space given by its vertex list.
/// Membership is exact (LP feasibility over convex weights).
struct ConvexRegion3 {
  std::string name;
  std::string theorem;  // provenance tag of the statement it encodes
  std::vector<Point3> vertices;
  bool contains(const Point3& p) const;
  /// No vertex lies in the hull of the others.
  bool vertices_are_extreme() const;
};

/// Convex polygon in the (1/p, s) or (1/p, 1/q) plane, counterclockwise,
/// with an openness flag per edge (edge i joins vertex i and i+1).
struct Region2 {
  std::string name;
  std::string theorem;
  std::vector<std::pair<Rat, Rat>> vertices;
  std::vector<bool> edge_open;
  enum class Where { Inside, Boundary, Outside };
  Where locate(const Rat& x, const Rat& y) const;
};

/// The three-triangle tent of a Theorem 1.4/1.5/1.6-style family: the
/// triangles are the upper faces of the hull of their vertices, so the
/// statement's "below the interior of the union" region is exactly
/// { z < min of the triangle planes } over the q >= p triangle.
struct RegionFamily {
  std::string family;  // "Y" | "Y34" | "Z"
  std::string theorem;
  std::vector<ConvexRegion3> triangles;
  std::vector<Plane3> planes;  // one per triangle, z-solvable
  /// Tent height over (x, y): min of the planes.
  Rat tent(const Rat& x, const Rat& y) const;
  std::vector<Point3> hull_vertices() const;
};

/// Exact index values: either an exact rational or a floating interval
/// (from a Monte Carlo fit). Interval endpoints are exact binary rationals.
struct IndexValue {
  bool exact = true;
  Rat value;     // when exact
  Rat lo, hi;    // when interval
  static IndexValue of(const Rat& v) { return {true, v, v, v}; }
  static IndexValue interval(double lo, double hi);
  Rat lower() const { return exact ? value : lo; }
  Rat upper() const { return exact ? value : hi; }
};

/// Everything the classifier needs about one surface.
struct IndexBundle {
  int n = 1;
  std::optional<IndexValue> h, g, eta;
  std::optional<int> o_value;
  Exactness o_exactness = Exactness::Exact;
  bool phi_nonneg = true;
  bool phi_positive_at_origin = true;
};

enum class Verdict { Bounded, Unbounded, Unknown };

struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::string theorem;  // statement licensing the verdict
  bool interval_qualified = false;
  std::string note;
};

// ----- Region constructions (Theorems 1.1-1.7) -----

/// B of Theorem 1.1: triangle A when h >= 1/(n+1), else the trapezoid
/// (0,0), ((n+1)h/2, h), (1-(n+1)h/2, h), (1,0). All edges open (the
/// statement licenses only the interior; endpoints stay Unknown).
Region2 region_B(const Rat& h, int n);
/// D of Theorem 1.2: same construction with eta.
Region2 region_D(const Rat& eta, int n);

/// Y family of Theorem 1.4 (requires h < 1/(n+1)).
RegionFamily regions_Y(const Rat& h, int n);
/// Y3/Y4 family of Theorem 1.5 (intended for h >= 1/(n+1)).
RegionFamily regions_Y34(int n);
/// Z family of Theorem 1.6 (requires g < 1/max(oS,2)).
RegionFamily regions_Z(const Rat& g, int oS);

/// P: (g+1)(x-y) + z = g. Q: same formula with h; it is the plane through
/// the line {x=y, z=h} and the anchor (1,0,-1).
Plane3 plane_P(const Rat& g);
Plane3 plane_Q(const Rat& h);

/// Intersection of the Y tent with {z = 0}: the trapezoid J with vertices
/// (0,0), p1, p2, (1,1).
Region2 slice_s0(const RegionFamily& yfam);

/// eta = inf over patches; entries must be positive.
IndexValue eta_combine(const std::vector<IndexValue>& patch_hs);

/// Classifies an exponent triple against the encoded statements.
/// Precondition: 0 < x < 1 and 0 < y < 1 (1 < p, q < infinity).
/// Interval-valued indices give a definitive verdict only when both
/// endpoints agree, and then carry the interval qualifier.
Classification classify(const Point3& pt, const IndexBundle& bundle);

/// Evaluates each licensed statement independently (soundness checks test
/// that the Bounded and Unbounded predicates never hold together).
struct ClassifyProbe {
  bool bounded = false;        // below the tent (theorem 1.4 / 1.5)
  bool unbounded_plane = false;    // above plane P (theorem 1.7)
  bool unbounded_diagonal = false; // s > h at p = q (theorem 1.1 part 2)
};
ClassifyProbe classify_probe(const Point3& pt, const IndexBundle& bundle);

/// The L^p -> L^p_s classifier of Theorem 1.1 alone: Bounded inside B,
/// Unknown on the boundary of B, Unbounded above s = h under the part-2
/// hypotheses (h < 1, phi nonnegative and positive at the origin).
Classification classify_Lp_Lps(const Rat& x, const Rat& s, const IndexBundle& bundle);

/// Fixed-z / fixed-x slices of a family's triangles, for plotting:
/// each triangle contributes at most one segment.
std::vector<std::array<std::pair<Rat, Rat>, 2>> slice_family_z(const RegionFamily& f,
                                                               const Rat& z);
std::vector<std::array<std::pair<Rat, Rat>, 2>> slice_family_x(const RegionFamily& f,
                                                               const Rat& x);

}  // namespace radon
