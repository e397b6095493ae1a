#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "radon/multipoly.hpp"

namespace radon {

/// Cutoff phi(t) supported in the ball of radius r. The smooth template is
/// exp(-1/(1-|t/r|^2)) normalized to 1 at the origin; the sharp indicator
/// is a stress-test option. Both are nonnegative with phi(0) = 1.
struct CutoffSpec {
  double radius = 1.0;
  bool smooth = true;
  double operator()(const double* t, int n) const;
};

struct QuadOptions {
  double tol = 1e-4;        // absolute target, relative to the support volume
  int base_nodes = 32;      // per-axis floor
  int nodes_per_cycle = 10; // per oscillation wavelength per axis
  int panel_nodes = 16;     // Gauss-Legendre order per panel
  int max_refine = 4;
  bool parallel = true;
};

struct QuadratureResult {
  std::complex<double> value;
  double achieved_error = 0.0;
  long long evals = 0;
};

/// rho-hat(xi) = integral exp(-i(xi_1 t_1 + ... + xi_n t_n + xi_{n+1} S(t)))
/// phi(t) dt, by tensor Gauss-Legendre panels with per-axis panel counts
/// scaled to the oscillation density. Dimension n <= 3. Throws
/// numerics_error (with the achieved error) if refinement stalls above the
/// error target.
QuadratureResult surface_fourier(const MultiPoly& S, const CutoffSpec& phi,
                                 std::span<const double> xi, const QuadOptions& opt = {});

/// |rho-hat| at several phase scales lambda*base_direction on one shared
/// grid (refined jointly). Used for envelope bracketing.
std::vector<double> fourier_magnitudes(const MultiPoly& S, const CutoffSpec& phi,
                                       std::span<const double> direction,
                                       std::span<const double> lambdas,
                                       const QuadOptions& opt = {},
                                       double* achieved = nullptr);

struct DecayFit {
  std::vector<double> direction;
  double exponent_est = 0.0;  // decay exponent of the envelope
  double residual = 0.0;
  int points_used = 0;
  std::vector<int> js;
  std::vector<double> xis;         // 2^j
  std::vector<double> magnitudes;  // envelope max over the frequency bracket
};

/// Envelope decay along a direction over the dyadic ladder |xi| = 2^j,
/// j = j0..j1 (>= 8 rungs). Each rung's magnitude is the maximum over 5
/// frequencies in [0.9, 1.1] * 2^j. The exponent is the least-squares
/// log-log slope over the deepest rungs: the two lowest are always
/// discarded (the statement is asymptotic), rungs at the quadrature noise
/// floor are dropped, and at most six rungs enter the fit.
DecayFit decay_exponent(const MultiPoly& S, const CutoffSpec& phi,
                        std::span<const double> direction, int j0, int j1,
                        const QuadOptions& opt = {});

struct L2DirectionRow {
  std::vector<double> direction;
  double growth_slope = 0.0;  // slope of log(|rho-hat| (1+|xi|^2)^{s/2})
  double sup_value = 0.0;
};

struct L2Report {
  double s = 0.0;
  bool bounded = true;
  L2DirectionRow worst;
  std::vector<L2DirectionRow> rows;
};

/// Samples axis directions plus seeded pseudo-random sphere points and
/// checks |rho-hat(xi)| (1+|xi|^2)^{s/2} for growth along the ladder.
L2Report check_L2_exponent(const MultiPoly& S, const CutoffSpec& phi, double s, int j0,
                           int j1, int extra_directions, std::uint64_t seed,
                           const QuadOptions& opt = {});

void write_decay_csv(std::ostream& os, const DecayFit& fit);

}  // namespace radon
