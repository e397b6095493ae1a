#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "radon/rational.hpp"

namespace radon {

/// Dense univariate polynomial over the rationals; c[i] is the u^i
/// coefficient, trailing coefficient nonzero (empty = zero polynomial).
struct UniPoly {
  std::vector<Rat> c;

  static UniPoly from_coeffs(std::vector<Rat> coeffs);
  int degree() const { return (int)c.size() - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  Rat lead() const { return c.back(); }

  UniPoly derivative() const;
  Rat eval(const Rat& u) const;
  double eval(double u) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  /// Exact division with remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
  UniPoly monic() const;
};

UniPoly gcd(UniPoly a, UniPoly b);  // monic gcd, gcd(0,0) = 0

/// Yun's algorithm: returns (g_i, i) with q = lead * prod g_i^i, each g_i
/// squarefree, pairwise coprime, deg g_i >= 1.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& q);

/// Number of distinct real roots of a nonzero polynomial (whole line),
/// by Sturm's sign-variation count.
int count_real_roots(const UniPoly& q);
int count_real_roots_in(const UniPoly& q, const Rat& lo, const Rat& hi);

/// Maximum multiplicity among real roots of q (0 when there are none),
/// optionally ignoring a root at u = 0.
int real_root_max_multiplicity(const UniPoly& q, bool exclude_zero);

/// A bracket (lo, hi) isolating one nonzero real root of a squarefree
/// polynomial known to have one; width <= 2^-40. Exact root returned for
/// degree-1 factors via the second member.
struct RootWitness {
  Rat lo, hi;
  std::optional<Rat> exact;
  double approx() const;
};
std::optional<RootWitness> some_nonzero_real_root(const UniPoly& squarefree);

}  // namespace radon
