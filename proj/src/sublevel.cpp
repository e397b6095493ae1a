#include "radon/sublevel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "radon/errors.hpp"

namespace radon {

namespace {

constexpr double kStabilizeTol = 0.03;
constexpr std::uint64_t kQuasiTag = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kControlTag = 0xbf58476d1ce4e5b9ULL;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return splitmix64(a ^ splitmix64(b)); }

double to_unit(std::uint64_t x) { return (double)(x >> 11) * 0x1.0p-53; }

double halton(long long i, int base) {
  double h = 0.0, f = 1.0 / base;
  for (long long k = i; k > 0; k /= base) {
    h += f * (double)(k % base);
    f /= base;
  }
  return h;
}

constexpr int kPrimes[kMaxVars] = {2, 3, 5, 7};

struct BatchPlan {
  long long start;
  long long count;
};

BatchPlan batch_plan(long long samples, int batches, int b) {
  long long per = samples / batches, rem = samples % batches;
  long long start = b * per + std::min<long long>(b, rem);
  long long count = per + (b < rem ? 1 : 0);
  return {start, count};
}

// One batch of the counting kernel. The quasi stream is a seed-shifted
// Halton sequence indexed globally (the batch partition is fixed, so the
// union of batches is one stream regardless of worker count); the control
// stream is per-batch seeded pseudo-random.
SublevelHistogram run_batch(const EvalTable& f, const RegionSpec& region,
                            const std::vector<double>& thresholds, const BatchPlan& plan,
                            std::uint64_t stream_key, bool quasi) {
  const int n = region.dim;
  const int K = (int)thresholds.size();
  SublevelHistogram h;
  h.hits.assign(K, 0);
  double shift[kMaxVars];
  std::mt19937_64 eng;
  if (quasi) {
    for (int v = 0; v < n; ++v) shift[v] = to_unit(splitmix64(stream_key + v));
  } else {
    eng.seed(mix(stream_key, 0x5851f42d4c957f2dULL + (std::uint64_t)plan.start));
  }
  double x[kMaxVars];
  for (long long i = 0; i < plan.count; ++i) {
    for (int v = 0; v < n; ++v) {
      double u = quasi ? halton(plan.start + i + 1, kPrimes[v]) + shift[v] : to_unit(eng());
      if (u >= 1.0) u -= 1.0;
      x[v] = region.box_lo(v) + u * (region.box_hi(v) - region.box_lo(v));
    }
    if (!region.contains(x)) continue;
    ++h.region_hits;
    const double v = std::fabs(f.eval(x));
    for (int k = 0; k < K && v < thresholds[k]; ++k) ++h.hits[k];
  }
  return h;
}

SublevelHistogram run_batches(const EvalTable& f, const RegionSpec& region,
                              const std::vector<double>& thresholds, long long samples,
                              std::uint64_t stream_key, int batches, bool quasi,
                              bool parallel) {
  std::vector<SublevelHistogram> parts(batches);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int b = 0; b < batches; ++b)
      parts[b] = run_batch(f, region, thresholds, batch_plan(samples, batches, b),
                           stream_key, quasi);
  } else {
    for (int b = 0; b < batches; ++b)
      parts[b] = run_batch(f, region, thresholds, batch_plan(samples, batches, b),
                           stream_key, quasi);
  }
  SublevelHistogram total;
  total.hits.assign(thresholds.size(), 0);
  for (const auto& p : parts) {  // fixed merge order
    total.region_hits += p.region_hits;
    for (size_t k = 0; k < total.hits.size(); ++k) total.hits[k] += p.hits[k];
  }
  return total;
}

}  // namespace

double RegionSpec::box_volume() const {
  double v = 1.0;
  for (int i = 0; i < dim; ++i) v *= box_hi(i) - box_lo(i);
  return v;
}

double RegionSpec::volume() const {
  if (kind == Kind::Cube) return std::pow(radius, dim);
  switch (dim) {
    case 1: return 2 * radius;
    case 2: return std::numbers::pi * radius * radius;
    case 3: return 4.0 / 3.0 * std::numbers::pi * std::pow(radius, 3);
    case 4: return std::numbers::pi * std::numbers::pi / 2.0 * std::pow(radius, 4);
  }
  throw input_error("region volume: dimension out of range");
}

bool RegionSpec::contains(const double* x) const {
  if (kind == Kind::Cube) {
    for (int i = 0; i < dim; ++i)
      if (x[i] <= 0.0 || x[i] >= radius) return false;
    return true;
  }
  double s = 0;
  for (int i = 0; i < dim; ++i) s += x[i] * x[i];
  return s < radius * radius;
}

std::string RegionSpec::str() const {
  return (kind == Kind::Ball ? "ball(r=" : "cube(0,r)^n(r=") + std::to_string(radius) + ")";
}

SublevelHistogram sublevel_count_serial(const EvalTable& f, const RegionSpec& region,
                                        const std::vector<double>& thresholds,
                                        long long samples, std::uint64_t stream_key,
                                        int batches) {
  return run_batches(f, region, thresholds, samples, stream_key, batches, true, false);
}

SublevelHistogram sublevel_count_parallel(const EvalTable& f, const RegionSpec& region,
                                          const std::vector<double>& thresholds,
                                          long long samples, std::uint64_t stream_key,
                                          int batches) {
  return run_batches(f, region, thresholds, samples, stream_key, batches, true, true);
}

std::pair<double, double> sublevel_measure(const EvalTable& f, const RegionSpec& region,
                                           double eps, long long samples, std::uint64_t seed,
                                           bool parallel) {
  if (!(eps > 0)) throw input_error("sublevel threshold must be positive");
  if (samples < 10000) throw input_error("at least 10^4 samples required");
  if (region.dim != f.dim) throw input_error("region/polynomial dimension mismatch");
  auto h = run_batches(f, region, {eps}, samples, mix(seed, kQuasiTag), 256, true, parallel);
  const double vol = region.box_volume();
  const double p = (double)h.hits[0] / (double)samples;
  const double se = vol * std::sqrt(std::max(p * (1 - p), 0.0) / (double)samples);
  return {vol * p, se};
}

SublevelCurve sublevel_curve(const EvalTable& f, const RegionSpec& region,
                             const SublevelOptions& opt) {
  if (opt.k_min >= opt.k_max) throw input_error("k_min must be smaller than k_max");
  SublevelCurve c;
  c.region = region;
  c.samples = opt.samples;
  c.control_samples = (long long)(opt.samples * opt.control_fraction);
  c.seed = opt.seed;
  for (int k = opt.k_min; k <= opt.k_max; ++k) {
    c.ks.push_back(k);
    c.epsilons.push_back(std::ldexp(1.0, -k));
  }
  auto main_h = run_batches(f, region, c.epsilons, opt.samples, mix(opt.seed, kQuasiTag),
                            opt.batches, true, opt.parallel);
  auto ctrl_h = run_batches(f, region, c.epsilons, c.control_samples,
                            mix(opt.seed, kControlTag), opt.batches, false, opt.parallel);
  const double vol = region.box_volume();
  for (size_t i = 0; i < c.epsilons.size(); ++i) {
    double p = (double)main_h.hits[i] / (double)opt.samples;
    c.measures.push_back(vol * p);
    c.stderrs.push_back(vol * std::sqrt(std::max(p * (1 - p), 0.0) / (double)opt.samples));
    double pc = c.control_samples > 0 ? (double)ctrl_h.hits[i] / (double)c.control_samples : 0.0;
    c.control_measures.push_back(vol * pc);
  }
  return c;
}

GrowthFit fit_growth(const SublevelCurve& curve, int n) {
  GrowthFit best;
  std::vector<double> xs, ys_base;
  std::vector<int> used;
  const double vol = curve.region.volume();
  bool all_zero = true;
  size_t first_unsaturated = 0;
  while (first_unsaturated < curve.measures.size() &&
         curve.measures[first_unsaturated] > 0.98 * vol)
    ++first_unsaturated;
  std::vector<std::string> warnings;
  if (first_unsaturated > 0)
    warnings.push_back("dropped " + std::to_string(first_unsaturated) +
                       " saturated leading point(s)");
  for (size_t i = first_unsaturated; i < curve.measures.size(); ++i) {
    double m = curve.measures[i];
    if (m <= 0.0) {
      warnings.push_back("dropped zero-measure point at k=" + std::to_string(curve.ks[i]));
      continue;
    }
    all_zero = false;
    if (curve.stderrs[i] / m >= 0.10) {
      warnings.push_back("dropped high-variance point at k=" + std::to_string(curve.ks[i]));
      continue;
    }
    xs.push_back(std::log(curve.epsilons[i]));
    ys_base.push_back(std::log(m));
    used.push_back(curve.ks[i]);
  }
  if (all_zero) throw numerics_error("sublevel fit: all measures are zero");
  if (xs.size() < 8)
    throw numerics_error("sublevel fit: fewer than 8 usable dyadic points (" +
                         std::to_string(xs.size()) + ")");

  // The asymptotic statement is read off the deepest usable points: finite
  // neighborhood-size corrections decay like a power of epsilon, so the
  // shallow end of the window only adds bias.
  const size_t tail = 10;
  if (xs.size() > tail) {
    xs.erase(xs.begin(), xs.end() - tail);
    ys_base.erase(ys_base.begin(), ys_base.end() - tail);
  }

  double best_ssr = 0.0;
  bool have = false;
  const size_t m = xs.size();
  for (int d = 0; d <= std::max(0, n - 1); ++d) {
    // model: log m = h log eps + d log|log eps| + const
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::vector<double> ys(m);
    for (size_t i = 0; i < m; ++i) {
      ys[i] = ys_base[i] - d * std::log(-xs[i]);
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double denom = m * sxx - sx * sx;
    const double slope = (m * sxy - sx * sy) / denom;
    const double icept = (sy - slope * sx) / m;
    double ssr = 0;
    for (size_t i = 0; i < m; ++i) {
      const double r = ys[i] - (slope * xs[i] + icept);
      ssr += r * r;
    }
    if (!have || ssr < best_ssr) {
      have = true;
      best_ssr = ssr;
      best.h_est = slope;
      best.d_est = d;
      best.residual = std::sqrt(ssr / m);
      const double xbar = sx / m;
      double sxx_c = 0;
      for (size_t i = 0; i < m; ++i) sxx_c += (xs[i] - xbar) * (xs[i] - xbar);
      const double se = m > 2 ? std::sqrt(ssr / (m - 2) / sxx_c) : 0.0;
      best.ci_lo = slope - 1.96 * se;
      best.ci_hi = slope + 1.96 * se;
      best.points_used = (int)m;
    }
  }
  best.warnings = warnings;
  return best;
}

HEstimate estimate_h(const MultiPoly& S, const std::vector<double>& radius_sweep,
                     const SublevelOptions& opt) {
  validate_surface(S);
  if (radius_sweep.empty()) throw input_error("empty radius sweep");
  HEstimate out;
  std::vector<double> radii = radius_sweep;
  std::sort(radii.begin(), radii.end(), std::greater<double>());
  EvalTable f(S);
  std::vector<std::string> skipped;
  for (size_t i = 0; i < radii.size(); ++i) {
    RegionSpec region{RegionSpec::Kind::Ball, S.dim, radii[i]};
    SublevelOptions o = opt;
    o.seed = mix(opt.seed, 0x100 + i);
    SublevelCurve c = sublevel_curve(f, region, o);
    try {
      GrowthFit fit = fit_growth(c, S.dim);
      out.radii.push_back(radii[i]);
      out.fits.push_back(std::move(fit));
      out.curves.push_back(std::move(c));
    } catch (const numerics_error& e) {
      // a radius too small for the dyadic range saturates away its points
      skipped.push_back("radius " + std::to_string(radii[i]) + " skipped: " + e.what());
    }
  }
  if (out.fits.empty())
    throw numerics_error("no radius in the sweep produced a usable sublevel curve");
  // h is taken from the smallest radius whose fit stabilized (agrees with
  // the next larger radius). When shrinking never stabilizes, the estimates
  // are still drifting with the window; the largest radius then has the
  // least finite-window bias and is reported with a warning.
  size_t chosen_idx = 0;
  out.stabilized = out.fits.size() < 2;
  for (size_t i = 1; i < out.fits.size(); ++i) {
    if (std::fabs(out.fits[i].h_est - out.fits[i - 1].h_est) < kStabilizeTol) {
      chosen_idx = i;
      out.stabilized = true;
    }
  }
  out.chosen = out.fits[chosen_idx];
  if (!out.stabilized)
    out.chosen.warnings.push_back(
        "h did not stabilize across the radius sweep; reporting the largest radius");
  for (auto& s : skipped) out.chosen.warnings.push_back(s);
  return out;
}

GEstimate estimate_g(const MultiPoly& S, const NewtonPolyhedron& N, double radius,
                     const SublevelOptions& opt) {
  validate_surface(S);
  StarPoly star = star_polynomial(N);
  EvalTable f(star.as_poly(), /*absolute_value=*/true);
  RegionSpec region{RegionSpec::Kind::Cube, S.dim, radius};
  SublevelOptions o = opt;
  o.seed = mix(opt.seed, 0x200);
  GEstimate out;
  out.curve = sublevel_curve(f, region, o);
  out.fit = fit_growth(out.curve, S.dim);
  return out;
}

std::optional<Rat> predicted_h(const Rat& newton_dist, const ZeroOrderResult& o) {
  if (o.exactness != Exactness::Exact) return std::nullopt;
  if (Rat(o.value) > newton_dist) return std::nullopt;
  return Rat(1) / newton_dist;
}

void write_curve_csv(std::ostream& os, const SublevelCurve& curve) {
  os << "k,epsilon,measure,stderr,samples,seed\n";
  for (size_t i = 0; i < curve.ks.size(); ++i) {
    os << curve.ks[i] << ',' << curve.epsilons[i] << ',' << curve.measures[i] << ','
       << curve.stderrs[i] << ',' << curve.samples << ',' << curve.seed << '\n';
  }
}

}  // namespace radon
