#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace radon {

/// Exact rational scalar. All region geometry, Newton-polyhedron work and
/// LP solving is done in this type; floating point only appears at the
/// evaluation boundary of the numerical labs.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "p/q" or a finite decimal like "0.25" (exactly).
Rat rat_parse(const std::string& text);

/// Canonical "num" or "num/den" string, never a float.
std::string rat_str(const Rat& r);

double rat_double(const Rat& r);

/// Exact rational value of a (finite) double.
Rat rat_from_double(double v);

int rat_sign(const Rat& r);
Rat rat_abs(const Rat& r);

/// Scales a rational covector to coprime integers (canonical representative
/// of its positive ray). Used to key faces deterministically.
std::vector<Rat> primitive_integer_covector(const std::vector<Rat>& w);

/// Lexicographic comparison of rational vectors.
bool lex_less(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace radon
