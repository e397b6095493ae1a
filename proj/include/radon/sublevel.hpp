#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "radon/multipoly.hpp"
#include "radon/newton.hpp"
#include "radon/zero_order.hpp"

namespace radon {

/// Sampling region: a ball centered at the origin or the open cube (0,r)^n.
struct RegionSpec {
  enum class Kind { Ball, Cube };
  Kind kind = Kind::Ball;
  int dim = 1;
  double radius = 1.0;

  double box_lo(int axis) const { return kind == Kind::Ball ? -radius : 0.0; }
  double box_hi(int /*axis*/) const { return radius; }
  double box_volume() const;
  double volume() const;
  bool contains(const double* x) const;
  std::string str() const;
};

struct SublevelOptions {
  long long samples = 1'000'000;
  int k_min = 6;
  int k_max = 20;
  std::uint64_t seed = 20260809;
  /// Pseudo-random control stream size, as a fraction of `samples`.
  double control_fraction = 0.25;
  int batches = 256;  // fixed partition; results do not depend on threads
  bool parallel = true;
};

/// Measure estimates of { |f| < 2^-k } over one region, one dyadic grid.
/// All epsilon thresholds are evaluated against the same sample stream, so
/// measures are exactly non-increasing in k and identical to what the
/// single-epsilon estimator returns for the same seed.
struct SublevelCurve {
  RegionSpec region;
  std::vector<int> ks;
  std::vector<double> epsilons;
  std::vector<double> measures;
  std::vector<double> stderrs;
  std::vector<double> control_measures;  // pseudo-random control stream
  long long samples = 0;
  long long control_samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
};

struct GrowthFit {
  double h_est = 0.0;
  int d_est = 0;
  double residual = 0.0;  // rms of regression residuals
  double ci_lo = 0.0, ci_hi = 0.0;
  int points_used = 0;
  std::vector<std::string> warnings;
};

/// Monte-Carlo estimate of m({x in region : |f(x)| < eps}) with binomial
/// standard error; deterministic for a fixed seed, independent of the
/// worker count.
std::pair<double, double> sublevel_measure(const EvalTable& f, const RegionSpec& region,
                                           double eps, long long samples, std::uint64_t seed,
                                           bool parallel = true);

SublevelCurve sublevel_curve(const EvalTable& f, const RegionSpec& region,
                             const SublevelOptions& opt);

/// Fits log(measure) - d log|log eps| = h log eps + c per integer log power
/// d in [0, n-1], keeping the best-residual d. Requires >= 8 usable points
/// with relative standard error < 10%.
GrowthFit fit_growth(const SublevelCurve& curve, int n);

struct HEstimate {
  std::vector<double> radii;
  std::vector<GrowthFit> fits;   // parallel to radii (descending)
  GrowthFit chosen;              // fit at the smallest radius
  bool stabilized = false;       // chosen agrees with the next radius up
  std::vector<SublevelCurve> curves;
};

/// h of the sublevel asymptotics of |S| over shrinking balls.
HEstimate estimate_h(const MultiPoly& S, const std::vector<double>& radius_sweep,
                     const SublevelOptions& opt);

/// g of the sublevel asymptotics of S* over the cube (0, r)^n.
struct GEstimate {
  GrowthFit fit;
  SublevelCurve curve;
};
GEstimate estimate_g(const MultiPoly& S, const NewtonPolyhedron& N, double radius,
                     const SublevelOptions& opt);

/// 1/d(S) exactly, when licensed by o(S) <= d(S) with o exact; otherwise
/// nothing (the identity g = h = 1/d(S) is only cited under o(S) <= d(S)).
std::optional<Rat> predicted_h(const Rat& newton_dist, const ZeroOrderResult& o);

/// CSV export: k,epsilon,measure,stderr,samples,seed
void write_curve_csv(std::ostream& os, const SublevelCurve& curve);

/// Serial reference for the batch kernel; the OpenMP path must match it
/// bit for bit (integer hit counts merged in fixed batch order).
struct SublevelHistogram {
  std::vector<long long> hits;  // per threshold
  long long region_hits = 0;
};
SublevelHistogram sublevel_count_serial(const EvalTable& f, const RegionSpec& region,
                                        const std::vector<double>& thresholds,
                                        long long samples, std::uint64_t stream_key,
                                        int batches);
SublevelHistogram sublevel_count_parallel(const EvalTable& f, const RegionSpec& region,
                                          const std::vector<double>& thresholds,
                                          long long samples, std::uint64_t stream_key,
                                          int batches);

}  // namespace radon
