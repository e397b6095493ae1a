#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "radon/rational.hpp"

namespace radon {

/// Exponent vector of one monomial; length = dimension of t-space.
using MultiIndex = std::vector<int>;

inline constexpr int kMaxTotalDegree = 64;
inline constexpr int kMaxVars = 4;

int total_degree(const MultiIndex& a);

/// Multivariate polynomial with exact rational coefficients, stored as a
/// term map without zero entries. Immutable by convention after build.
struct MultiPoly {
  int dim = 1;
  std::map<MultiIndex, Rat> terms;

  static MultiPoly zero(int dim) { return MultiPoly{dim, {}}; }

  bool is_zero() const { return terms.empty(); }
  int total_degree() const;

  /// Adds c * t^alpha, erasing the term if the sum cancels.
  void add_term(const MultiIndex& alpha, const Rat& c);

  MultiPoly derivative(int axis) const;
  MultiPoly scaled(const Rat& c) const;
  MultiPoly shifted(const MultiIndex& gamma) const;  // multiply by t^gamma

  /// Multi-indices with nonzero coefficient. Errors on the zero polynomial.
  std::vector<MultiIndex> support() const;

  double eval(std::span<const double> point) const;
  Rat eval_exact(const std::vector<Rat>& point) const;

  std::string str() const;

  bool operator==(const MultiPoly& o) const { return dim == o.dim && terms == o.terms; }
};

/// Parses the external polynomial grammar: terms joined by +/-, each an
/// optional rational coefficient ("p/q" or finite decimal) times factors
/// t<i> or t<i>^<k>; whitespace-insensitive; "t" is accepted for t1 when
/// dimension == 1. Errors carry a character position.
MultiPoly parse_poly(const std::string& text, int dimension);

/// Rejects the zero polynomial ("S is not identically zero", §1.1) and any
/// constant or degree-1 term (the gradient condition (1.2): S(0)=0, grad
/// S(0)=0). The tool does not re-normalize inputs.
void validate_surface(const MultiPoly& S);

/// Flattened double-precision view of a polynomial for hot loops.
/// When `absolute_value` is set, evaluates with |t_i| in place of t_i
/// (the star polynomial semantics).
struct EvalTable {
  int dim = 1;
  bool absolute_value = false;
  std::vector<double> coef;
  std::vector<int> exps;  // nterms * dim, row-major
  std::array<int, kMaxVars> maxexp{};

  EvalTable() = default;
  explicit EvalTable(const MultiPoly& p, bool absolute_value = false);

  double eval(const double* x) const {
    double pw[kMaxVars][kMaxTotalDegree + 1];
    for (int v = 0; v < dim; ++v) {
      const double xv = absolute_value ? (x[v] < 0 ? -x[v] : x[v]) : x[v];
      pw[v][0] = 1.0;
      for (int e = 1; e <= maxexp[v]; ++e) pw[v][e] = pw[v][e - 1] * xv;
    }
    double s = 0.0;
    const int* e = exps.data();
    for (size_t t = 0; t < coef.size(); ++t, e += dim) {
      double m = coef[t];
      for (int v = 0; v < dim; ++v) m *= pw[v][e[v]];
      s += m;
    }
    return s;
  }
};

}  // namespace radon
