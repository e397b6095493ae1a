#include "radon/regions.hpp"

#include <algorithm>

#include "radon/errors.hpp"
#include "radon/simplex.hpp"

namespace radon {

namespace {

const Point3 kAnchor{Rat(1), Rat(0), Rat(-1)};  // interpolation endpoint (1,0,-1)

Plane3 plane_through(const Point3& p, const Point3& q, const Point3& r) {
  // normal = (q-p) x (r-p), oriented with positive z component
  Rat ux = q.x - p.x, uy = q.y - p.y, uz = q.z - p.z;
  Rat vx = r.x - p.x, vy = r.y - p.y, vz = r.z - p.z;
  Plane3 pl;
  pl.a = uy * vz - uz * vy;
  pl.b = uz * vx - ux * vz;
  pl.c = ux * vy - uy * vx;
  if (pl.c == 0) throw hypothesis_error("degenerate (vertical) region plane");
  if (pl.c < 0) {
    pl.a = -pl.a;
    pl.b = -pl.b;
    pl.c = -pl.c;
  }
  pl.e = pl.a * p.x + pl.b * p.y + pl.c * p.z;
  return pl;
}

ConvexRegion3 triangle(std::string name, std::string theorem, const Point3& a,
                       const Point3& b, const Point3& c) {
  return ConvexRegion3{std::move(name), std::move(theorem), {a, b, c}};
}

RegionFamily make_family(std::string family, std::string theorem,
                         std::vector<ConvexRegion3> tris) {
  RegionFamily f;
  f.family = std::move(family);
  f.theorem = std::move(theorem);
  for (auto& t : tris) {
    f.planes.push_back(plane_through(t.vertices[0], t.vertices[1], t.vertices[2]));
    f.triangles.push_back(std::move(t));
  }
  return f;
}

}  // namespace

Rat Plane3::height(const Rat& x, const Rat& y) const {
  if (c == 0) throw hypothesis_error("vertical plane has no height function");
  return (e - a * x - b * y) / c;
}

bool ConvexRegion3::contains(const Point3& p) const {
  const int m = (int)vertices.size();
  std::vector<lp::Constraint> rows;
  lp::Constraint sum1{std::vector<Rat>(m, Rat(1)), lp::Rel::Eq, Rat(1)};
  rows.push_back(std::move(sum1));
  const Rat* coords[3] = {&p.x, &p.y, &p.z};
  for (int j = 0; j < 3; ++j) {
    lp::Constraint r;
    r.a.resize(m);
    for (int i = 0; i < m; ++i)
      r.a[i] = j == 0 ? vertices[i].x : (j == 1 ? vertices[i].y : vertices[i].z);
    r.rel = lp::Rel::Eq;
    r.b = *coords[j];
    rows.push_back(std::move(r));
  }
  return lp::feasible(m, rows);
}

bool ConvexRegion3::vertices_are_extreme() const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    ConvexRegion3 rest;
    for (size_t j = 0; j < vertices.size(); ++j)
      if (j != i) rest.vertices.push_back(vertices[j]);
    if (rest.vertices.empty()) continue;
    if (rest.contains(vertices[i])) return false;
  }
  return true;
}

Region2::Where Region2::locate(const Rat& x, const Rat& y) const {
  // vertices counterclockwise; cross < 0 means strictly outside edge i.
  bool on_boundary = false;
  const size_t m = vertices.size();
  for (size_t i = 0; i < m; ++i) {
    const auto& [x0, y0] = vertices[i];
    const auto& [x1, y1] = vertices[(i + 1) % m];
    Rat cross = (x1 - x0) * (y - y0) - (y1 - y0) * (x - x0);
    if (cross < 0) return Where::Outside;
    if (cross == 0) on_boundary = true;
  }
  return on_boundary ? Where::Boundary : Where::Inside;
}

Rat RegionFamily::tent(const Rat& x, const Rat& y) const {
  Rat best = planes[0].height(x, y);
  for (size_t i = 1; i < planes.size(); ++i) best = std::min(best, planes[i].height(x, y));
  return best;
}

std::vector<Point3> RegionFamily::hull_vertices() const {
  std::vector<Point3> out;
  for (const auto& t : triangles)
    for (const auto& v : t.vertices) {
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  return out;
}

IndexValue IndexValue::interval(double lo_, double hi_) {
  IndexValue v;
  v.exact = false;
  v.lo = rat_from_double(lo_);
  v.hi = rat_from_double(hi_);
  if (v.lo > v.hi) std::swap(v.lo, v.hi);
  return v;
}

Region2 region_B(const Rat& h, int n) {
  if (!(h > 0)) throw input_error("region B requires h > 0");
  if (n < 1) throw input_error("dimension must be >= 1");
  Region2 r;
  r.theorem = "theorem 1.1";
  const Rat apex_y = rat(1, n + 1);
  if (h >= apex_y) {
    r.name = "A";
    r.vertices = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {rat(1, 2), apex_y}};
  } else {
    r.name = "B";
    const Rat xl = rat(n + 1, 2) * h;
    r.vertices = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1) - xl, h}, {xl, h}};
  }
  r.edge_open.assign(r.vertices.size(), true);
  return r;
}

Region2 region_D(const Rat& eta, int n) {
  if (!(eta > 0)) throw input_error("region D requires eta > 0 (eta can never be zero)");
  Region2 r = region_B(eta, n);
  r.name = r.name == "A" ? "A" : "D";
  r.theorem = "theorem 1.2";
  return r;
}

RegionFamily regions_Y(const Rat& h, int n) {
  if (!(h > 0)) throw input_error("regions Y require h > 0");
  if (h >= rat(1, n + 1))
    throw hypothesis_error(
        "theorem 1.4 requires h < 1/(n+1); use the Y3/Y4 family (theorem 1.5)");
  const Rat q1 = rat(n + 1, 2) * h;
  const Rat q2 = Rat(1) - q1;
  const Point3 a1{q1, q1, h}, a2{q2, q2, h};
  const Point3 o{Rat(0), Rat(0), Rat(0)}, one{Rat(1), Rat(1), Rat(0)};
  return make_family(
      "Y", "theorem 1.4",
      {triangle("Y", "theorem 1.4", a1, a2, kAnchor),
       triangle("Y1", "theorem 1.4", o, kAnchor, a1),
       triangle("Y2", "theorem 1.4", one, kAnchor, a2)});
}

RegionFamily regions_Y34(int n) {
  const Point3 apex{rat(1, 2), rat(1, 2), rat(1, n + 1)};
  const Point3 o{Rat(0), Rat(0), Rat(0)}, one{Rat(1), Rat(1), Rat(0)};
  return make_family("Y34", "theorem 1.5",
                     {triangle("Y3", "theorem 1.5", o, kAnchor, apex),
                      triangle("Y4", "theorem 1.5", one, kAnchor, apex)});
}

RegionFamily regions_Z(const Rat& g, int oS) {
  if (!(g > 0)) throw input_error("regions Z require g > 0");
  const int m = std::max(oS, 2);
  if (g >= rat(1, m))
    throw hypothesis_error("theorem 1.6 requires g < 1/max(o(S),2)");
  const Rat q1 = rat(m, 2) * g;
  const Rat q2 = Rat(1) - q1;
  const Point3 a1{q1, q1, g}, a2{q2, q2, g};
  const Point3 o{Rat(0), Rat(0), Rat(0)}, one{Rat(1), Rat(1), Rat(0)};
  return make_family(
      "Z", "theorem 1.6",
      {triangle("Z", "theorem 1.6", a1, a2, kAnchor),
       triangle("Z1", "theorem 1.6", o, kAnchor, a1),
       triangle("Z2", "theorem 1.6", one, kAnchor, a2)});
}

Plane3 plane_P(const Rat& g) {
  if (g < 0) throw input_error("plane P requires g >= 0");
  return Plane3{g + 1, -(g + 1), Rat(1), g};
}

Plane3 plane_Q(const Rat& h) {
  if (h < 0) throw input_error("plane Q requires h >= 0");
  return Plane3{h + 1, -(h + 1), Rat(1), h};
}

Region2 slice_s0(const RegionFamily& yfam) {
  if (yfam.family != "Y") throw input_error("the s = 0 slice is defined for the Y family");
  // Y's top apexes are at z = h > 0 and the anchor is at z = -1; the edges
  // [a1, anchor] and [a2, anchor] cross z = 0 at p1, p2.
  auto cross_z0 = [](const Point3& above, const Point3& below) {
    Rat t = above.z / (above.z - below.z);
    return std::pair<Rat, Rat>{above.x + t * (below.x - above.x),
                               above.y + t * (below.y - above.y)};
  };
  const auto& Y = yfam.triangles[0];
  auto p1 = cross_z0(Y.vertices[0], Y.vertices[2]);
  auto p2 = cross_z0(Y.vertices[1], Y.vertices[2]);
  Region2 r;
  r.name = "J";
  r.theorem = "theorem 1.4";
  r.vertices = {{Rat(0), Rat(0)}, p1, p2, {Rat(1), Rat(1)}};
  r.edge_open.assign(4, true);
  return r;
}

IndexValue eta_combine(const std::vector<IndexValue>& patch_hs) {
  if (patch_hs.empty()) throw input_error("eta requires at least one patch");
  for (const auto& v : patch_hs)
    if (!(v.lower() > 0)) throw input_error("eta can never be zero: nonpositive patch index");
  // interval minimum: componentwise min of lower and upper bounds
  Rat lo = patch_hs[0].lower(), hi = patch_hs[0].upper();
  bool exact = patch_hs[0].exact;
  for (size_t i = 1; i < patch_hs.size(); ++i) {
    lo = std::min(lo, patch_hs[i].lower());
    hi = std::min(hi, patch_hs[i].upper());
    exact = exact && patch_hs[i].exact;
  }
  if (exact || lo == hi) return IndexValue::of(lo);
  IndexValue v;
  v.exact = false;
  v.lo = lo;
  v.hi = hi;
  return v;
}

namespace {

struct ExactIndices {
  std::optional<Rat> h, g;
  std::optional<int> o_value;
  Exactness o_exactness;
  bool phi_nonneg, phi_pos0;
};

ClassifyProbe probe_exact(const Point3& pt, int n, const ExactIndices& ix) {
  ClassifyProbe pr;
  // Bounded: some t > s with (x, y, t) below the tent of the family. The
  // tent triangles are the upper faces of their hull, so "below" is exact
  // rational plane arithmetic.
  if (ix.h && pt.y <= pt.x) {
    const bool low = *ix.h < rat(1, n + 1);
    RegionFamily fam = low ? regions_Y(*ix.h, n) : regions_Y34(n);
    pr.bounded = pt.z < fam.tent(pt.x, pt.y);
  }
  // Unbounded via the sharpness plane P (theorem 1.7): needs exact o(S),
  // g <= 1/max(o,2) and a cutoff positive near the origin. A numerical
  // lower bound on o can only refute the hypothesis, never confirm it.
  if (ix.g && ix.o_value && ix.o_exactness == Exactness::Exact && ix.phi_nonneg &&
      ix.phi_pos0) {
    const int m = std::max(*ix.o_value, 2);
    if (*ix.g <= rat(1, m))
      pr.unbounded_plane = pt.z > *ix.g - (*ix.g + 1) * (pt.x - pt.y);
  }
  // Unbounded on the diagonal via theorem 1.1 part 2.
  if (ix.h && pt.x == pt.y && *ix.h < 1 && ix.phi_nonneg && ix.phi_pos0)
    pr.unbounded_diagonal = pt.z > *ix.h;
  return pr;
}

Classification classify_exact(const Point3& pt, int n, const ExactIndices& ix) {
  ClassifyProbe pr = probe_exact(pt, n, ix);
  if (pr.bounded) {
    const bool low = *ix.h < rat(1, n + 1);
    return {Verdict::Bounded, low ? "theorem 1.4" : "theorem 1.5", false, ""};
  }
  if (pr.unbounded_plane) return {Verdict::Unbounded, "theorem 1.7", false, ""};
  if (pr.unbounded_diagonal) return {Verdict::Unbounded, "theorem 1.1 part 2", false, ""};
  return {Verdict::Unknown, "", false, ""};
}

ExactIndices indices_at(const IndexBundle& b, bool low_end) {
  ExactIndices ix;
  if (b.h) ix.h = low_end ? b.h->lower() : b.h->upper();
  if (b.g) ix.g = low_end ? b.g->lower() : b.g->upper();
  ix.o_value = b.o_value;
  ix.o_exactness = b.o_exactness;
  ix.phi_nonneg = b.phi_nonneg;
  ix.phi_pos0 = b.phi_positive_at_origin;
  return ix;
}

}  // namespace

ClassifyProbe classify_probe(const Point3& pt, const IndexBundle& bundle) {
  if (!(pt.x > 0 && pt.x < 1 && pt.y > 0 && pt.y < 1))
    throw input_error("classification requires 1 < p, q < infinity (0 < 1/p, 1/q < 1)");
  return probe_exact(pt, bundle.n, indices_at(bundle, true));
}

Classification classify(const Point3& pt, const IndexBundle& bundle) {
  if (!(pt.x > 0 && pt.x < 1 && pt.y > 0 && pt.y < 1))
    throw input_error("classification requires 1 < p, q < infinity (0 < 1/p, 1/q < 1)");
  const bool interval = (bundle.h && !bundle.h->exact) || (bundle.g && !bundle.g->exact);
  auto run = [&](bool low_end) {
    return classify_exact(pt, bundle.n, indices_at(bundle, low_end));
  };
  Classification a = run(true);
  if (!interval) return a;
  Classification b = run(false);
  if (a.verdict == b.verdict && a.verdict != Verdict::Unknown) {
    a.interval_qualified = true;
    a.note = "verdict agrees at both interval endpoints of the fitted indices";
    return a;
  }
  return {Verdict::Unknown, "", true,
          "fitted-index interval spans the region boundary; no definitive verdict"};
}

Classification classify_Lp_Lps(const Rat& x, const Rat& s, const IndexBundle& bundle) {
  if (!(x > 0 && x < 1)) throw input_error("requires 1 < p < infinity");
  if (!bundle.h) return {Verdict::Unknown, "", false, "no h available"};
  if (!bundle.h->exact) {
    IndexBundle lo = bundle, hi = bundle;
    lo.h = IndexValue::of(bundle.h->lower());
    hi.h = IndexValue::of(bundle.h->upper());
    Classification a = classify_Lp_Lps(x, s, lo), b = classify_Lp_Lps(x, s, hi);
    if (a.verdict == b.verdict && a.verdict != Verdict::Unknown) {
      a.interval_qualified = true;
      return a;
    }
    return {Verdict::Unknown, "", true, "fitted-index interval is inconclusive"};
  }
  const Rat h = bundle.h->value;
  Region2 B = region_B(h, bundle.n);
  switch (B.locate(x, s)) {
    case Region2::Where::Inside:
      return {Verdict::Bounded, "theorem 1.1", false, ""};
    case Region2::Where::Boundary:
      return {Verdict::Unknown, "", false,
              "on the boundary of B; endpoint behavior is not part of the encoded statement"};
    case Region2::Where::Outside:
      break;
  }
  if (h < 1 && bundle.phi_nonneg && bundle.phi_positive_at_origin && s > h)
    return {Verdict::Unbounded, "theorem 1.1 part 2", false, ""};
  return {Verdict::Unknown, "", false, ""};
}

namespace {

std::optional<std::array<std::pair<Rat, Rat>, 2>> tri_slice(
    const ConvexRegion3& t, int axis, const Rat& c) {
  auto coord = [&](const Point3& p) { return axis == 2 ? p.z : p.x; };
  auto proj = [&](const Point3& p) {
    return axis == 2 ? std::pair<Rat, Rat>{p.x, p.y} : std::pair<Rat, Rat>{p.y, p.z};
  };
  std::vector<std::pair<Rat, Rat>> pts;
  for (int i = 0; i < 3; ++i) {
    const Point3& p = t.vertices[i];
    const Point3& q = t.vertices[(i + 1) % 3];
    Rat cp = coord(p), cq = coord(q);
    if (cp == c) pts.push_back(proj(p));
    if ((cp < c && cq > c) || (cp > c && cq < c)) {
      Rat s = (c - cp) / (cq - cp);
      auto [px, py] = proj(p);
      auto [qx, qy] = proj(q);
      pts.push_back({px + s * (qx - px), py + s * (qy - py)});
    }
  }
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 2) return std::nullopt;
  return std::array<std::pair<Rat, Rat>, 2>{pts.front(), pts.back()};
}

}  // namespace

std::vector<std::array<std::pair<Rat, Rat>, 2>> slice_family_z(const RegionFamily& f,
                                                               const Rat& z) {
  std::vector<std::array<std::pair<Rat, Rat>, 2>> out;
  for (const auto& t : f.triangles)
    if (auto s = tri_slice(t, 2, z)) out.push_back(*s);
  return out;
}

std::vector<std::array<std::pair<Rat, Rat>, 2>> slice_family_x(const RegionFamily& f,
                                                               const Rat& x) {
  std::vector<std::array<std::pair<Rat, Rat>, 2>> out;
  for (const auto& t : f.triangles)
    if (auto s = tri_slice(t, 0, x)) out.push_back(*s);
  return out;
}

}  // namespace radon
