#include "radon/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>

#include "radon/errors.hpp"

namespace radon {

namespace {

constexpr double kPi = std::numbers::pi;

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
      }
      // P_n'(z) = n (z P_n - P_{n-1}) / (z^2 - 1), with p0 = P_n, p1 = P_{n-1}
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::fabs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

struct Axis {
  std::vector<double> nodes, weights;
};

Axis build_axis(double lo, double hi, int panels, int panel_nodes) {
  static thread_local std::vector<double> gx, gw;
  static thread_local int cached_order = 0;
  if (cached_order != panel_nodes) {
    gauss_legendre(panel_nodes, gx, gw);
    cached_order = panel_nodes;
  }
  Axis a;
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double c = lo + (p + 0.5) * width, h = width / 2;
    for (int k = 0; k < panel_nodes; ++k) {
      a.nodes.push_back(c + h * gx[k]);
      a.weights.push_back(h * gw[k]);
    }
  }
  return a;
}

double ball_volume(int n, double r) {
  switch (n) {
    case 1: return 2 * r;
    case 2: return kPi * r * r;
    case 3: return 4.0 / 3.0 * kPi * r * r * r;
  }
  return std::pow(2 * r, n);
}

// Per-axis gradient bound sum |c| alpha_i r^{|alpha|-1} over the box.
std::vector<double> gradient_bounds(const MultiPoly& S, double r) {
  std::vector<double> g(S.dim, 0.0);
  for (const auto& [a, c] : S.terms) {
    const double mag = std::fabs(rat_double(c)) * std::pow(r, total_degree(a) - 1);
    for (int i = 0; i < S.dim; ++i) g[i] += mag * a[i];
  }
  return g;
}

// Evaluates sum_nodes w phi(t) exp(-i lambda_f P(t)) for all scale factors
// on one tensor grid, P(t) = dir.(t, S(t)). Outer chunks are the first-axis
// nodes; partial sums merge in fixed order so the result is independent of
// the worker count.
std::vector<std::complex<double>> grid_sums(const EvalTable& S, const CutoffSpec& phi,
                                            std::span<const double> dir,
                                            std::span<const double> lambdas,
                                            const std::vector<Axis>& axes, bool parallel,
                                            long long* evals) {
  const int n = (int)axes.size();
  const int nf = (int)lambdas.size();
  const long long chunk_count = (long long)axes[0].nodes.size();
  long long inner = 1;
  for (int i = 1; i < n; ++i) inner *= (long long)axes[i].nodes.size();
  std::vector<std::vector<std::complex<double>>> partial(
      chunk_count, std::vector<std::complex<double>>(nf, {0.0, 0.0}));

  auto run_chunk = [&](long long c0) {
    double t[kMaxVars];
    t[0] = axes[0].nodes[c0];
    auto& acc = partial[c0];
    for (long long idx = 0; idx < inner; ++idx) {
      long long rest = idx;
      double wprod = axes[0].weights[c0];
      for (int i = 1; i < n; ++i) {
        const long long m = (long long)axes[i].nodes.size();
        const long long j = rest % m;
        rest /= m;
        t[i] = axes[i].nodes[j];
        wprod *= axes[i].weights[j];
      }
      const double ph = phi(t, n);
      if (ph == 0.0) continue;
      double base = dir[n] * S.eval(t);
      for (int i = 0; i < n; ++i) base += dir[i] * t[i];
      const double a = wprod * ph;
      for (int f = 0; f < nf; ++f) {
        const double theta = lambdas[f] * base;
        acc[f] += std::complex<double>(a * std::cos(theta), -a * std::sin(theta));
      }
    }
  };

  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < chunk_count; ++c) run_chunk(c);
  } else {
    for (long long c = 0; c < chunk_count; ++c) run_chunk(c);
  }
  std::vector<std::complex<double>> out(nf, {0.0, 0.0});
  for (long long c = 0; c < chunk_count; ++c)
    for (int f = 0; f < nf; ++f) out[f] += partial[c][f];
  if (evals) *evals += chunk_count * inner;
  return out;
}

struct GridSpec {
  std::vector<int> panels;
};

GridSpec initial_grid(const MultiPoly& S, const CutoffSpec& phi, std::span<const double> dir,
                      double lambda_max, const std::vector<double>& gbound,
                      const QuadOptions& opt) {
  GridSpec g;
  const int n = S.dim;
  for (int i = 0; i < n; ++i) {
    const double freq = std::fabs(lambda_max) * (std::fabs(dir[i]) + std::fabs(dir[n]) * gbound[i]);
    const double cycles = (2 * phi.radius * freq) / (2 * kPi);
    const int nodes = std::max(opt.base_nodes, (int)std::ceil(cycles * opt.nodes_per_cycle));
    g.panels.push_back((nodes + opt.panel_nodes - 1) / opt.panel_nodes);
  }
  return g;
}

std::vector<Axis> build_axes(const GridSpec& g, double r, const QuadOptions& opt) {
  std::vector<Axis> axes;
  for (int p : g.panels) axes.push_back(build_axis(-r, r, p, opt.panel_nodes));
  return axes;
}

}  // namespace

double CutoffSpec::operator()(const double* t, int n) const {
  double rho2 = 0;
  for (int i = 0; i < n; ++i) rho2 += t[i] * t[i];
  rho2 /= radius * radius;
  if (rho2 >= 1.0) return 0.0;
  if (!smooth) return 1.0;
  return std::exp(1.0 - 1.0 / (1.0 - rho2));
}

namespace {

std::vector<double> magnitudes_impl(const MultiPoly& Sp, const EvalTable& S,
                                    const CutoffSpec& phi, std::span<const double> dir,
                                    std::span<const double> lambdas, const QuadOptions& opt,
                                    double* achieved_out, long long* evals_out,
                                    std::vector<std::complex<double>>* values_out) {
  const int n = Sp.dim;
  if (n > 3) throw input_error("oscillatory quadrature supports n <= 3");
  double lambda_max = 0;
  for (double l : lambdas) lambda_max = std::max(lambda_max, std::fabs(l));
  auto gbound = gradient_bounds(Sp, phi.radius);
  GridSpec grid = initial_grid(Sp, phi, dir, lambda_max, gbound, opt);
  const double tol = opt.tol * ball_volume(n, phi.radius);
  long long evals = 0;
  auto axes = build_axes(grid, phi.radius, opt);
  auto prev = grid_sums(S, phi, dir, lambdas, axes, opt.parallel, &evals);
  double err = std::numeric_limits<double>::infinity();
  for (int refine = 0; refine < opt.max_refine; ++refine) {
    for (auto& p : grid.panels) p = (int)std::ceil(p * 1.5);
    axes = build_axes(grid, phi.radius, opt);
    auto cur = grid_sums(S, phi, dir, lambdas, axes, opt.parallel, &evals);
    err = 0;
    for (size_t f = 0; f < lambdas.size(); ++f) err = std::max(err, std::abs(cur[f] - prev[f]));
    prev = std::move(cur);
    if (err <= tol) break;
  }
  if (err > tol)
    throw numerics_error("quadrature did not converge (achieved error " +
                             std::to_string(err) + ", target " + std::to_string(tol) + ")",
                         err);
  if (achieved_out) *achieved_out = err;
  if (evals_out) *evals_out = evals;
  if (values_out) *values_out = prev;
  std::vector<double> mags;
  for (const auto& v : prev) mags.push_back(std::abs(v));
  return mags;
}

}  // namespace

std::vector<double> fourier_magnitudes(const MultiPoly& S, const CutoffSpec& phi,
                                       std::span<const double> direction,
                                       std::span<const double> lambdas,
                                       const QuadOptions& opt, double* achieved) {
  if ((int)direction.size() != S.dim + 1)
    throw input_error("direction must have n+1 components");
  EvalTable table(S);
  return magnitudes_impl(S, table, phi, direction, lambdas, opt, achieved, nullptr, nullptr);
}

QuadratureResult surface_fourier(const MultiPoly& S, const CutoffSpec& phi,
                                 std::span<const double> xi, const QuadOptions& opt) {
  const int n = S.dim;
  if ((int)xi.size() != n + 1) throw input_error("xi must have n+1 components");
  double norm = 0;
  for (double c : xi) norm += c * c;
  norm = std::sqrt(norm);
  std::vector<double> dir(xi.begin(), xi.end());
  double lambda = 1.0;
  if (norm > 0) {
    for (auto& c : dir) c /= norm;
    lambda = norm;
  }
  EvalTable table(S);
  QuadratureResult res;
  std::vector<std::complex<double>> vals;
  std::vector<double> lambdas{lambda};
  magnitudes_impl(S, table, phi, dir, lambdas, opt, &res.achieved_error, &res.evals, &vals);
  res.value = vals[0];
  return res;
}

DecayFit decay_exponent(const MultiPoly& S, const CutoffSpec& phi,
                        std::span<const double> direction, int j0, int j1,
                        const QuadOptions& opt) {
  const int n = S.dim;
  if ((int)direction.size() != n + 1) throw input_error("direction must have n+1 components");
  if (j1 - j0 + 1 < 8) throw input_error("decay ladder needs at least 8 rungs");
  std::vector<double> dir(direction.begin(), direction.end());
  double norm = 0;
  for (double c : dir) norm += c * c;
  if (norm <= 0) throw input_error("zero direction");
  norm = std::sqrt(norm);
  for (auto& c : dir) c /= norm;

  EvalTable table(S);
  DecayFit fit;
  fit.direction = dir;
  const double bracket[5] = {0.90, 0.95, 1.0, 1.05, 1.10};
  double scale0;
  {
    std::vector<double> zero{0.0};
    scale0 = magnitudes_impl(S, table, phi, dir, zero, opt, nullptr, nullptr, nullptr)[0];
  }
  for (int j = j0; j <= j1; ++j) {
    const double lam = std::ldexp(1.0, j);
    std::vector<double> lambdas;
    for (double b : bracket) lambdas.push_back(lam * b);
    auto mags = magnitudes_impl(S, table, phi, dir, lambdas, opt, nullptr, nullptr, nullptr);
    fit.js.push_back(j);
    fit.xis.push_back(lam);
    fit.magnitudes.push_back(*std::max_element(mags.begin(), mags.end()));
  }
  // Rungs that sank to the quadrature noise floor carry no slope
  // information (they would flatten the tail of a fast-decaying envelope).
  std::vector<double> L, Y;
  for (size_t i = 0; i < fit.js.size(); ++i) {
    if (fit.magnitudes[i] < 1e-14 * std::max(scale0, 1.0)) continue;
    L.push_back(std::log(fit.xis[i]));
    Y.push_back(std::log(fit.magnitudes[i]));
  }
  if (L.empty())
    throw numerics_error("all ladder magnitudes are below the quadrature noise floor");

  // The decay statement is asymptotic: the two lowest rungs are always
  // discarded and the slope is read off the deepest remaining rungs. The
  // rung magnitudes are refinement-controlled (not statistical), so a
  // short deep window beats a long shallow one.
  size_t lo = std::min<size_t>(2, L.size() - 1);
  if (L.size() - lo > 4) lo = L.size() - 4;
  L.erase(L.begin(), L.begin() + lo);
  Y.erase(Y.begin(), Y.begin() + lo);
  const size_t m = L.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < m; ++i) {
    sx += L[i];
    sy += Y[i];
    sxx += L[i] * L[i];
    sxy += L[i] * Y[i];
  }
  const double denom = m * sxx - sx * sx;
  if (denom <= 0) throw numerics_error("decay fit: degenerate ladder");
  const double slope = (m * sxy - sx * sy) / denom;
  const double icept = (sy - slope * sx) / m;
  double ssr = 0;
  for (size_t i = 0; i < m; ++i) {
    const double r = Y[i] - (slope * L[i] + icept);
    ssr += r * r;
  }
  fit.exponent_est = -slope;
  fit.residual = std::sqrt(ssr / m);
  fit.points_used = (int)m;
  return fit;
}

L2Report check_L2_exponent(const MultiPoly& S, const CutoffSpec& phi, double s, int j0,
                           int j1, int extra_directions, std::uint64_t seed,
                           const QuadOptions& opt) {
  const int n = S.dim;
  L2Report rep;
  rep.s = s;
  std::vector<std::vector<double>> dirs;
  for (int i = 0; i <= n; ++i) {
    std::vector<double> d(n + 1, 0.0);
    d[i] = 1.0;
    dirs.push_back(d);
  }
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int k = 0; k < extra_directions; ++k) {
    std::vector<double> d(n + 1);
    double nn = 0;
    do {
      nn = 0;
      for (auto& c : d) {
        c = gauss(eng);
        nn += c * c;
      }
    } while (nn < 1e-12);
    for (auto& c : d) c /= std::sqrt(nn);
    dirs.push_back(d);
  }
  EvalTable table(S);
  const double bracket[3] = {0.95, 1.0, 1.05};
  bool first = true;
  for (const auto& d : dirs) {
    std::vector<double> L, Q;
    double sup = 0;
    for (int j = j0; j <= j1; ++j) {
      const double lam = std::ldexp(1.0, j);
      std::vector<double> lambdas;
      for (double b : bracket) lambdas.push_back(lam * b);
      auto mags = magnitudes_impl(S, table, phi, d, lambdas, opt, nullptr, nullptr, nullptr);
      const double mag = *std::max_element(mags.begin(), mags.end());
      const double q = mag * std::pow(1.0 + lam * lam, s / 2);
      sup = std::max(sup, q);
      L.push_back(std::log(lam));
      Q.push_back(std::log(std::max(q, 1e-300)));
    }
    const size_t m = L.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < m; ++i) {
      sx += L[i];
      sy += Q[i];
      sxx += L[i] * L[i];
      sxy += L[i] * Q[i];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    L2DirectionRow row{d, slope, sup};
    rep.rows.push_back(row);
    if (first || slope > rep.worst.growth_slope) {
      rep.worst = row;
      first = false;
    }
  }
  rep.bounded = rep.worst.growth_slope <= 0.03;
  return rep;
}

void write_decay_csv(std::ostream& os, const DecayFit& fit) {
  os << "j,xi,magnitude\n";
  for (size_t i = 0; i < fit.js.size(); ++i)
    os << fit.js[i] << ',' << fit.xis[i] << ',' << fit.magnitudes[i] << '\n';
}

}  // namespace radon
