#pragma once

// Shared catalog of surfaces with hand-derived exact indices. The expected
// Newton distances were worked out by parametrizing the relevant edge and
// intersecting with the diagonal; zero orders by edge reduction.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "radon/multipoly.hpp"
#include "radon/rational.hpp"

namespace radon::testcat {

struct Entry {
  std::string name;
  std::string poly;
  int n;
  Rat d;                        // expected Newton distance
  int o;                        // expected zero order (exact entries only)
  bool o_exact;
  std::optional<Rat> predicted; // 1/d when o <= d licenses it
};

inline std::vector<Entry> entries() {
  std::vector<Entry> v;
  v.push_back({"t^2", "t^2", 1, rat(2), 0, true, rat(1, 2)});
  v.push_back({"t^3", "t^3", 1, rat(3), 0, true, rat(1, 3)});
  v.push_back({"t^5", "t^5", 1, rat(5), 0, true, rat(1, 5)});
  v.push_back({"t1^2+t2^2", "t1^2 + t2^2", 2, rat(1), 0, true, rat(1)});
  v.push_back({"t1 t2", "t1 t2", 2, rat(1), 0, true, rat(1)});
  v.push_back({"(t1-t2)^2", "t1^2 - 2 t1 t2 + t2^2", 2, rat(1), 2, true, std::nullopt});
  v.push_back({"(t1-t2)^2+t2^4", "t1^2 - 2 t1 t2 + t2^2 + t2^4", 2, rat(1), 2, true,
               std::nullopt});
  v.push_back({"t1^2 t2 + t1 t2^3", "t1^2 t2 + t1 t2^3", 2, rat(5, 3), 1, true, rat(3, 5)});
  v.push_back({"t1^3+t2^5", "t1^3 + t2^5", 2, rat(15, 8), 1, true, rat(8, 15)});
  v.push_back({"t1^2+t2^4", "t1^2 + t2^4", 2, rat(4, 3), 0, true, rat(3, 4)});
  return v;
}

/// Three seeded random degree-6 surfaces in n = 3, mixed-sign coefficients
/// with odd exponents present, so their zero orders resolve numerically
/// (lower bounds) and the prediction stays unlicensed.
inline std::vector<MultiPoly> random_trio() {
  std::mt19937_64 eng(0x52414e44u);
  std::uniform_int_distribution<int> expo(0, 6);
  std::uniform_int_distribution<int> coefd(1, 9);
  std::vector<MultiPoly> out;
  while (out.size() < 3) {
    MultiPoly p = MultiPoly::zero(3);
    int sign = 1;
    while (p.terms.size() < 8) {
      MultiIndex a{expo(eng), expo(eng), expo(eng)};
      int deg = total_degree(a);
      if (deg < 2 || deg > 6) continue;
      p.add_term(a, Rat(sign * coefd(eng)));
      sign = -sign;  // force mixed signs
    }
    bool has_odd = false;
    for (const auto& [a, c] : p.terms)
      for (int e : a)
        if (e % 2 == 1) has_odd = true;
    if (has_odd) out.push_back(p);
  }
  return out;
}

}  // namespace radon::testcat
