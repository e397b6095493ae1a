#include "radon/newton.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>

#include "radon/errors.hpp"
#include "radon/simplex.hpp"

namespace radon {

namespace {

using lp::Constraint;
using lp::Rel;

std::vector<Rat> diff(const MultiIndex& b, const MultiIndex& a) {
  std::vector<Rat> d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = Rat(b[i] - a[i]);
  return d;
}

// Feasibility problems below substitute w = 1 + w' (w' >= 0), so strict
// positivity and strict gaps become ordinary >= 1 constraints; feasibility
// is unchanged because all the target inequalities are homogeneous in w.
// gap_rows[k] demands w.(beta_k - base) >= 1; tie_rows demand equality;
// min_rows demand w.(beta - base) >= 0.
struct PositiveCovectorLP {
  int n;
  std::vector<Constraint> rows;

  explicit PositiveCovectorLP(int n_) : n(n_) {}

  void add(const std::vector<Rat>& d, Rel rel, const Rat& rhs_after_shift) {
    // w = 1 + w': w.d = sum(d) + w'.d, so w.d (rel) r  <=>  w'.d (rel) r - sum(d)
    Rat s(0);
    for (const auto& x : d) s += x;
    rows.push_back({d, rel, rhs_after_shift - s});
  }
  void add_tie(const std::vector<Rat>& d) { add(d, Rel::Eq, Rat(0)); }
  void add_min(const std::vector<Rat>& d) { add(d, Rel::Ge, Rat(0)); }
  void add_gap(const std::vector<Rat>& d) { add(d, Rel::Ge, Rat(1)); }

  bool feasible() const { return lp::feasible(n, rows); }
  // Returns the covector w = 1 + w' when feasible.
  std::optional<std::vector<Rat>> solve() const {
    std::vector<Rat> c(n, Rat(0));
    auto res = lp::solve_min(c, rows);
    if (res.status != lp::Status::Optimal) return std::nullopt;
    std::vector<Rat> w(n);
    for (int i = 0; i < n; ++i) w[i] = res.x[i] + 1;
    return w;
  }
};

int affine_dim(const std::vector<MultiIndex>& pts) {
  if (pts.empty()) return -1;
  // rank of {p_i - p_0} by exact Gaussian elimination
  std::vector<std::vector<Rat>> m;
  for (size_t i = 1; i < pts.size(); ++i) m.push_back(diff(pts[i], pts[0]));
  int rank = 0;
  const int n = (int)pts[0].size();
  for (int col = 0; col < n && rank < (int)m.size(); ++col) {
    int piv = -1;
    for (int r = rank; r < (int)m.size(); ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = 0; r < (int)m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[rank][col];
      for (int j = 0; j < n; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const std::vector<MultiIndex>& support_in, int dim) {
  if (dim < 1) throw input_error("dimension must be >= 1");
  if (dim > kMaxVars)
    throw input_error("exact face enumeration is limited to dimension <= 4 (got " +
                      std::to_string(dim) + ")");
  if (support_in.empty()) throw input_error("empty support");
  NewtonPolyhedron N;
  N.dim = dim;
  N.support = support_in;
  for (const auto& a : N.support)
    if ((int)a.size() != dim) throw input_error("support point arity mismatch");
  std::sort(N.support.begin(), N.support.end());
  N.support.erase(std::unique(N.support.begin(), N.support.end()), N.support.end());

  // Vertices: alpha is a vertex iff some strictly positive w separates it
  // from every other support point with a uniform gap (scalable).
  for (const auto& a : N.support) {
    PositiveCovectorLP prob(dim);
    for (const auto& b : N.support) {
      if (b == a) continue;
      prob.add_gap(diff(b, a));
    }
    if (auto w = prob.solve()) {
      N.vertices.push_back(a);
      N.vertex_certificates.push_back(primitive_integer_covector(*w));
    }
  }

  // Compact faces: every compact face is the minimal face containing some
  // <= dim affinely independent vertices, so closing subsets of vertices
  // under forced ties enumerates them all. "beta forced" means no w > 0
  // that ties G and minimizes over the support can separate beta.
  std::map<std::vector<MultiIndex>, std::vector<Rat>> found;  // members -> weight
  const int max_subset = std::min(dim, (int)N.vertices.size());
  std::vector<int> idx;
  auto process_subset = [&](const std::vector<int>& sel) {
    std::vector<MultiIndex> G;
    for (int i : sel) G.push_back(N.vertices[i]);
    const MultiIndex& base = G[0];
    PositiveCovectorLP prob(dim);
    for (size_t k = 1; k < G.size(); ++k) prob.add_tie(diff(G[k], base));
    std::set<MultiIndex> inG(G.begin(), G.end());
    for (const auto& b : N.support)
      if (!inG.count(b)) prob.add_min(diff(b, base));
    auto w1 = prob.solve();
    if (!w1) return;  // no common compact face

    // Points tied under one w in the cone are the only candidates for the
    // minimal face; each is kept iff no cone member separates it.
    std::vector<MultiIndex> members = G;
    for (const auto& b : N.support) {
      if (inG.count(b)) continue;
      Rat dot(0);
      auto d = diff(b, base);
      for (int i = 0; i < dim; ++i) dot += (*w1)[i] * d[i];
      if (dot != 0) continue;
      PositiveCovectorLP sep(dim);
      for (size_t k = 1; k < G.size(); ++k) sep.add_tie(diff(G[k], base));
      for (const auto& b2 : N.support)
        if (!inG.count(b2) && !(b2 == b)) sep.add_min(diff(b2, base));
      sep.add_gap(d);
      if (!sep.feasible()) members.push_back(b);
    }
    std::sort(members.begin(), members.end());
    if (found.count(members)) return;

    // Exposing weight in the relative interior of the normal cone: ties on
    // all members, uniform gap against everything else.
    PositiveCovectorLP expose(dim);
    std::set<MultiIndex> inF(members.begin(), members.end());
    const MultiIndex& f0 = members[0];
    for (size_t k = 1; k < members.size(); ++k) expose.add_tie(diff(members[k], f0));
    for (const auto& b : N.support)
      if (!inF.count(b)) expose.add_gap(diff(b, f0));
    auto w = expose.solve();
    if (!w) throw std::logic_error("minimal face has no exposing covector");
    found.emplace(std::move(members), primitive_integer_covector(*w));
  };

  // enumerate subsets of vertices of size 1..max_subset
  std::vector<int> sel;
  auto rec = [&](auto&& self, int start) -> void {
    if (!sel.empty()) process_subset(sel);
    if ((int)sel.size() == max_subset) return;
    for (int i = start; i < (int)N.vertices.size(); ++i) {
      sel.push_back(i);
      self(self, i + 1);
      sel.pop_back();
    }
  };
  rec(rec, 0);

  for (auto& [members, weight] : found) {
    Face f;
    f.members = members;
    f.weight = weight;
    f.dim = affine_dim(members);
    N.compact_faces.push_back(std::move(f));
  }
  std::sort(N.compact_faces.begin(), N.compact_faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.members < b.members;
  });
  return N;
}

NewtonPolyhedron newton_polyhedron(const MultiPoly& p) {
  return newton_polyhedron(p.support(), p.dim);
}

Rat newton_distance(const NewtonPolyhedron& N) {
  // Variables: lambda_a (one per support point) and t, all >= 0.
  const int m = (int)N.support.size();
  const int n = N.dim;
  std::vector<Rat> c(m + 1, Rat(0));
  c[m] = 1;  // minimize t
  std::vector<Constraint> rows;
  {
    Constraint sum1;
    sum1.a.assign(m + 1, Rat(0));
    for (int i = 0; i < m; ++i) sum1.a[i] = 1;
    sum1.rel = Rel::Eq;
    sum1.b = 1;
    rows.push_back(std::move(sum1));
  }
  for (int j = 0; j < n; ++j) {
    Constraint r;
    r.a.assign(m + 1, Rat(0));
    for (int i = 0; i < m; ++i) r.a[i] = Rat(N.support[i][j]);
    r.a[m] = -1;
    r.rel = Rel::Le;
    r.b = 0;
    rows.push_back(std::move(r));
  }
  auto res = lp::solve_min(c, rows);
  assert(res.status == lp::Status::Optimal);
  return res.objective;
}

bool diagonal_point_in_polyhedron(const NewtonPolyhedron& N, const Rat& t) {
  const int m = (int)N.support.size();
  std::vector<Constraint> rows;
  {
    Constraint sum1;
    sum1.a.assign(m, Rat(1));
    sum1.rel = Rel::Eq;
    sum1.b = 1;
    rows.push_back(std::move(sum1));
  }
  for (int j = 0; j < N.dim; ++j) {
    Constraint r;
    r.a.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) r.a[i] = Rat(N.support[i][j]);
    r.rel = Rel::Le;
    r.b = t;
    rows.push_back(std::move(r));
  }
  return lp::feasible(m, rows);
}

MultiPoly face_polynomial(const MultiPoly& p, const Face& F) {
  MultiPoly out = MultiPoly::zero(p.dim);
  for (const auto& a : F.members) {
    auto it = p.terms.find(a);
    if (it == p.terms.end())
      throw input_error("face member is not a term of the polynomial");
    out.terms.emplace(a, it->second);
  }
  return out;
}

MultiPoly StarPoly::as_poly() const {
  MultiPoly p = MultiPoly::zero(dim);
  for (const auto& v : vertex_exponents) p.add_term(v, Rat(1));
  return p;
}

StarPoly star_polynomial(const NewtonPolyhedron& N) {
  return StarPoly{N.dim, N.vertices};
}

double eval_star(const StarPoly& s, std::span<const double> point) {
  EvalTable t(s.as_poly(), /*absolute_value=*/true);
  return t.eval(point.data());
}

bool check_vertex_certificate(const NewtonPolyhedron& N, size_t vertex_index) {
  const auto& v = N.vertices[vertex_index];
  const auto& w = N.vertex_certificates[vertex_index];
  for (const auto& x : w)
    if (!(x > 0)) return false;
  Rat wv(0);
  for (int i = 0; i < N.dim; ++i) wv += w[i] * v[i];
  for (const auto& b : N.support) {
    if (b == v) continue;
    Rat wb(0);
    for (int i = 0; i < N.dim; ++i) wb += w[i] * b[i];
    if (!(wv < wb)) return false;
  }
  return true;
}

bool dominated_by_vertices(const NewtonPolyhedron& N, const MultiIndex& b) {
  const int m = (int)N.vertices.size();
  std::vector<Constraint> rows;
  {
    Constraint sum1;
    sum1.a.assign(m, Rat(1));
    sum1.rel = Rel::Eq;
    sum1.b = 1;
    rows.push_back(std::move(sum1));
  }
  for (int j = 0; j < N.dim; ++j) {
    Constraint r;
    r.a.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) r.a[i] = Rat(N.vertices[i][j]);
    r.rel = Rel::Le;
    r.b = Rat(b[j]);
    rows.push_back(std::move(r));
  }
  return lp::feasible(m, rows);
}

}  // namespace radon
