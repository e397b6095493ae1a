#include "radon/zero_order.hpp"

#include <algorithm>
#include <cmath>

#include "radon/errors.hpp"
#include "radon/univariate.hpp"

namespace radon {

namespace {

// A face polynomial with all-even exponents and same-sign coefficients is
// nonzero off the coordinate hyperplanes: every monomial is strictly of one
// sign there. Resolves sums of squares symbolically in any dimension.
bool definite_sign_certificate(const MultiPoly& fF) {
  int sign = 0;
  for (const auto& [a, c] : fF.terms) {
    for (int e : a)
      if (e % 2 != 0) return false;
    int s = rat_sign(c);
    if (sign == 0)
      sign = s;
    else if (s != sign)
      return false;
  }
  return true;
}

// Substitute t2 = sigma into the edge polynomial. Every scaling orbit of a
// zero off the axes crosses |t2| = 1 exactly once (the exposing weight has
// all components >= 1), and jet order is preserved along the orbit chart,
// so nonzero-root multiplicities of the restriction are the face's zero
// orders.
UniPoly restrict_t2(const MultiPoly& fF, int sigma) {
  int maxdeg = 0;
  for (const auto& [a, c] : fF.terms) maxdeg = std::max(maxdeg, a[0]);
  std::vector<Rat> coef(maxdeg + 1, Rat(0));
  for (const auto& [a, c] : fF.terms) {
    Rat v = c;
    if (sigma < 0 && a[1] % 2 == 1) v = -v;
    coef[a[0]] += v;
  }
  return UniPoly::from_coeffs(std::move(coef));
}

FaceZeroOrder edge_zero_order_2d(const MultiPoly& fF, int face_index) {
  FaceZeroOrder out;
  out.exactness = Exactness::Exact;
  for (int sigma : {+1, -1}) {
    UniPoly q = restrict_t2(fF, sigma);
    int m = real_root_max_multiplicity(q, /*exclude_zero=*/true);
    if (m <= out.order) continue;
    out.order = m;
    // Locate a witness root of the multiplicity-m squarefree part.
    UniPoly stripped = q;
    while (stripped.c.size() > 1 && stripped.c[0] == 0) stripped.c.erase(stripped.c.begin());
    for (const auto& [g, mult] : squarefree_decomposition(stripped)) {
      if (mult != m) continue;
      auto root = some_nonzero_real_root(g);
      if (!root) continue;
      ZeroWitness w;
      w.face_index = face_index;
      w.order = m;
      w.point = {root->approx(), (double)sigma};
      if (root->exact) w.rational_point = std::vector<Rat>{*root->exact, Rat(sigma)};
      out.witness = w;
      break;
    }
  }
  return out;
}

// Levenberg-style damped Gauss-Newton on a small polynomial system
// F(t) = 0 with Jacobian entries given as polynomials. Used to polish a
// zero to machine accuracy level by level: a converged zero of f is pushed
// onto the zero set of the gradient system when the gradient also
// vanishes, which sharpens the point enough for the derivative-level
// count below.
static bool polish_system(const std::vector<EvalTable>& F,
                          const std::vector<std::vector<EvalTable>>& J, int n,
                          std::vector<double>& t) {
  auto norm2 = [&](const std::vector<double>& x) {
    double s = 0;
    for (const auto& f : F) {
      double v = f.eval(x.data());
      s += v * v;
    }
    return s;
  };
  double cur = norm2(t);
  for (int it = 0; it < 60; ++it) {
    // normal equations (J^T J + lambda I) delta = J^T F
    double A[kMaxVars][kMaxVars] = {};
    double b[kMaxVars] = {};
    for (size_t r = 0; r < F.size(); ++r) {
      double fv = F[r].eval(t.data());
      double row[kMaxVars];
      for (int j = 0; j < n; ++j) row[j] = J[r][j].eval(t.data());
      for (int j = 0; j < n; ++j) {
        b[j] += row[j] * fv;
        for (int k = 0; k < n; ++k) A[j][k] += row[j] * row[k];
      }
    }
    double lambda = 1e-12;
    for (int j = 0; j < n; ++j) A[j][j] += lambda;
    // Gaussian elimination, partial pivoting
    double M[kMaxVars][kMaxVars + 1];
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) M[j][k] = A[j][k];
      M[j][n] = b[j];
    }
    bool singular = false;
    for (int col = 0; col < n; ++col) {
      int piv = col;
      for (int r2 = col + 1; r2 < n; ++r2)
        if (std::fabs(M[r2][col]) > std::fabs(M[piv][col])) piv = r2;
      if (std::fabs(M[piv][col]) < 1e-300) {
        singular = true;
        break;
      }
      std::swap(M[col], M[piv]);
      for (int r2 = 0; r2 < n; ++r2) {
        if (r2 == col) continue;
        double fct = M[r2][col] / M[col][col];
        for (int k = col; k <= n; ++k) M[r2][k] -= fct * M[col][k];
      }
    }
    if (singular) return cur < 1e-24;
    double step = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 25; ++ls) {
      std::vector<double> t2(n);
      bool ok = true;
      for (int j = 0; j < n; ++j) {
        t2[j] = t[j] - step * M[j][n] / M[j][j];
        if (std::fabs(t2[j]) < 0.02 || std::fabs(t2[j]) > 4.0) ok = false;
      }
      if (ok) {
        double nxt = norm2(t2);
        if (nxt < cur) {
          t = t2;
          cur = nxt;
          moved = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!moved) break;
    if (cur < 1e-30) break;
  }
  return cur < 1e-24;
}

// n >= 3: multistart damped Gauss-Newton descent on f_F over the sign
// lattice of the unit box, away from the axes. Orders found this way are
// only ever reported as lower bounds.
FaceZeroOrder numeric_zero_order(const MultiPoly& fF, int face_index) {
  FaceZeroOrder out;
  out.exactness = Exactness::LowerBound;
  const int n = fF.dim;
  EvalTable f(fF);
  std::vector<EvalTable> grad;
  std::vector<MultiPoly> gradp;
  for (int i = 0; i < n; ++i) {
    gradp.push_back(fF.derivative(i));
    grad.emplace_back(gradp.back());
  }
  double coef_scale = 0;
  for (const auto& [a, c] : fF.terms) coef_scale += std::fabs(rat_double(c));

  // Halton points over the box, all sign patterns.
  auto halton = [](long long i, int base) {
    double H = 0, f = 1.0 / base;
    for (long long k = i; k > 0; k /= base) {
      H += f * (k % base);
      f /= base;
    }
    return H;
  };
  const int primes[4] = {2, 3, 5, 7};
  const int starts = 160;
  const int npatterns = 1 << n;
  for (int pat = 0; pat < npatterns; ++pat) {
    for (int s = 0; s < starts; ++s) {
      std::vector<double> t(n);
      for (int i = 0; i < n; ++i) {
        double u = 0.2 + 0.8 * halton(s + 1, primes[i]);
        t[i] = (pat >> i & 1) ? -u : u;
      }
      bool hit = false;
      for (int it = 0; it < 80; ++it) {
        double v = f.eval(t.data());
        if (std::fabs(v) < 1e-13 * std::max(1.0, coef_scale)) {
          hit = true;
          break;
        }
        double g2 = 0;
        std::vector<double> gv(n);
        for (int i = 0; i < n; ++i) {
          gv[i] = grad[i].eval(t.data());
          g2 += gv[i] * gv[i];
        }
        if (g2 < 1e-18) break;
        double step = v / g2;
        // damped Gauss-Newton with projection away from the axes
        double lambda = 1.0;
        bool moved = false;
        for (int ls = 0; ls < 20; ++ls) {
          std::vector<double> t2(n);
          bool ok = true;
          for (int i = 0; i < n; ++i) {
            t2[i] = t[i] - lambda * step * gv[i];
            if (std::fabs(t2[i]) < 0.02 || std::fabs(t2[i]) > 4.0) ok = false;
          }
          if (ok && std::fabs(f.eval(t2.data())) < std::fabs(v)) {
            t = t2;
            moved = true;
            break;
          }
          lambda *= 0.5;
        }
        if (!moved) break;
      }
      if (!hit) continue;
      // Sharpen the point level by level: while the order-m partials also
      // vanish coarsely, polish the point onto their common zero set. The
      // initial descent only locates order-k zeros to ~eps^(1/k); without
      // this the derivative-level count below cannot reach its tolerance.
      const int cap = std::min(fF.total_degree(), 6);
      std::vector<double> before_polish = t;
      for (int m = 1; m < cap; ++m) {
        auto partials = partials_of_order(fF, m);
        double best = 0, scale = 0;
        std::vector<EvalTable> Fs;
        std::vector<std::vector<EvalTable>> Js;
        for (const auto& pm : partials) {
          if (pm.is_zero()) continue;
          Fs.emplace_back(pm);
          Js.emplace_back();
          for (int j = 0; j < n; ++j) Js.back().emplace_back(pm.derivative(j));
          best = std::max(best, std::fabs(Fs.back().eval(t.data())));
          for (const auto& [a, c2] : pm.terms) scale += std::fabs(rat_double(c2));
        }
        if (Fs.empty() || best > 1e-5 * std::max(1.0, scale)) break;
        if (!polish_system(Fs, Js, n, t)) break;
      }
      // polishing must not drift off the zero set of f itself
      if (std::fabs(f.eval(t.data())) > 1e-11 * std::max(1.0, coef_scale)) t = before_polish;
      // Jet order: the first derivative level that does not vanish at
      // relative tolerance 1e-9.
      int order = 1;
      double tnorm = 1.0;
      for (double x : t) tnorm = std::max(tnorm, std::fabs(x));
      for (int m = 1; m <= cap; ++m) {
        double best = 0, scale = 0;
        for (const auto& pm : partials_of_order(fF, m)) {
          if (pm.is_zero()) continue;
          EvalTable pt(pm);
          best = std::max(best, std::fabs(pt.eval(t.data())));
          for (const auto& [a, c2] : pm.terms)
            scale += std::fabs(rat_double(c2)) * std::pow(tnorm, total_degree(a));
        }
        if (best > 1e-9 * std::max(1.0, scale)) {
          order = m;
          break;
        }
        order = m + 1;
      }
      if (order > out.order) {
        out.order = order;
        ZeroWitness w;
        w.face_index = face_index;
        w.order = order;
        w.point = t;
        out.witness = w;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<MultiPoly> partials_of_order(const MultiPoly& p, int m) {
  // Enumerate derivative multi-indices of total order m directly.
  std::vector<MultiPoly> out;
  MultiIndex beta(p.dim, 0);
  auto rec = [&](auto&& self, int axis, int remaining) -> void {
    if (axis == p.dim - 1) {
      beta[axis] = remaining;
      MultiPoly q = p;
      for (int i = 0; i < p.dim && !q.is_zero(); ++i)
        for (int k = 0; k < beta[i] && !q.is_zero(); ++k) q = q.derivative(i);
      out.push_back(std::move(q));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      beta[axis] = e;
      self(self, axis + 1, remaining - e);
    }
  };
  rec(rec, 0, m);
  return out;
}

int jet_order_at(const MultiPoly& p, const std::vector<Rat>& point, int max_order) {
  for (int m = 0; m <= max_order; ++m) {
    for (const auto& q : partials_of_order(p, m)) {
      if (q.is_zero()) continue;
      if (q.eval_exact(point) != 0) return m;
    }
  }
  return max_order + 1;
}

FaceZeroOrder zero_order_face(const MultiPoly& fF, const Face& F) {
  if (fF.is_zero()) throw input_error("zero face polynomial");
  if ((int)fF.terms.size() != (int)F.members.size())
    throw input_error("face polynomial does not match the face");
  const int n = fF.dim;
  if (fF.terms.size() == 1 || n == 1) return {0, Exactness::Exact, std::nullopt};
  if (definite_sign_certificate(fF)) return {0, Exactness::Exact, std::nullopt};
  if (n == 2) {
    if (F.dim == 0) return {0, Exactness::Exact, std::nullopt};
    return edge_zero_order_2d(fF, -1);
  }
  if (F.dim == 0) return {0, Exactness::Exact, std::nullopt};
  return numeric_zero_order(fF, -1);
}

ZeroOrderResult oscillation_order(const MultiPoly& p, const NewtonPolyhedron& N) {
  ZeroOrderResult out;
  out.exactness = Exactness::Exact;
  for (size_t i = 0; i < N.compact_faces.size(); ++i) {
    const Face& F = N.compact_faces[i];
    MultiPoly fF = face_polynomial(p, F);
    FaceZeroOrder r = zero_order_face(fF, F);
    if (r.exactness == Exactness::LowerBound) out.exactness = Exactness::LowerBound;
    if (r.witness) {
      r.witness->face_index = (int)i;
      out.witnesses.push_back(*r.witness);
    }
    out.value = std::max(out.value, r.order);
  }
  return out;
}

ZeroOrderResult oscillation_order(const MultiPoly& p) {
  return oscillation_order(p, newton_polyhedron(p));
}

}  // namespace radon
