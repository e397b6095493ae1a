#include "radon/univariate.hpp"

#include <algorithm>
#include <cassert>

#include "radon/errors.hpp"

namespace radon {

UniPoly UniPoly::from_coeffs(std::vector<Rat> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return UniPoly{std::move(coeffs)};
}

UniPoly UniPoly::derivative() const {
  std::vector<Rat> d;
  for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Rat((long)i));
  return from_coeffs(std::move(d));
}

Rat UniPoly::eval(const Rat& u) const {
  Rat s(0);
  for (size_t i = c.size(); i-- > 0;) s = s * u + c[i];
  return s;
}

double UniPoly::eval(double u) const {
  double s = 0;
  for (size_t i = c.size(); i-- > 0;) s = s * u + rat_double(c[i]);
  return s;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> r(c.size() + o.c.size() - 1, Rat(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
  return from_coeffs(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
  return from_coeffs(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
  if (d.is_zero()) throw input_error("univariate division by zero");
  std::vector<Rat> rem = c;
  std::vector<Rat> quo(rem.size() >= d.c.size() ? rem.size() - d.c.size() + 1 : 0, Rat(0));
  const int dd = d.degree();
  for (int i = (int)rem.size() - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rat f = rem[i] / d.c[dd];
    quo[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c[j];
  }
  return {from_coeffs(std::move(quo)), from_coeffs(std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  std::vector<Rat> r = c;
  Rat l = c.back();
  for (auto& x : r) x /= l;
  return from_coeffs(std::move(r));
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = a.divrem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& q) {
  std::vector<std::pair<UniPoly, int>> out;
  if (q.degree() < 1) return out;
  UniPoly f = q.monic();
  UniPoly fp = f.derivative();
  UniPoly g0 = gcd(f, fp);
  UniPoly w = f.divrem(g0).first;
  UniPoly y = fp.divrem(g0).first;
  UniPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    UniPoly gi = gcd(w, z);
    if (gi.degree() > 0) out.emplace_back(gi, i);
    w = w.divrem(gi).first;
    z = z.divrem(gi).first - w.derivative();
    ++i;
  }
  return out;
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& q) {
  std::vector<UniPoly> chain;
  chain.push_back(q);
  chain.push_back(q.derivative());
  while (!chain.back().is_zero()) {
    const UniPoly& a = chain[chain.size() - 2];
    const UniPoly& b = chain.back();
    UniPoly r = a.divrem(b).second;
    for (auto& x : r.c) x = -x;
    chain.push_back(UniPoly::from_coeffs(std::move(r.c)));
  }
  chain.pop_back();
  return chain;
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<UniPoly>& chain, const Rat& x) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(rat_sign(p.eval(x)));
  return variations(s);
}

int variations_at_inf(const std::vector<UniPoly>& chain, int dir) {
  // dir = +1 for +inf, -1 for -inf
  std::vector<int> s;
  for (const auto& p : chain) {
    if (p.is_zero()) {
      s.push_back(0);
      continue;
    }
    int sg = rat_sign(p.lead());
    if (dir < 0 && p.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return variations(s);
}

Rat cauchy_bound(const UniPoly& q) {
  Rat m(0);
  const Rat l = rat_abs(q.lead());
  for (size_t i = 0; i + 1 < q.c.size(); ++i) m = std::max(m, Rat(rat_abs(q.c[i]) / l));
  return m + 1;
}

}  // namespace

int count_real_roots(const UniPoly& q) {
  if (q.degree() < 1) return 0;
  auto chain = sturm_chain(q);
  return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

int count_real_roots_in(const UniPoly& q, const Rat& lo, const Rat& hi) {
  if (q.degree() < 1) return 0;
  auto chain = sturm_chain(q);
  return variations_at(chain, lo) - variations_at(chain, hi);
}

int real_root_max_multiplicity(const UniPoly& q, bool exclude_zero) {
  if (q.is_zero()) throw input_error("max multiplicity of the zero polynomial");
  UniPoly f = q;
  int zero_mult = 0;
  while (f.c.size() > 1 && f.c[0] == 0) {
    f.c.erase(f.c.begin());
    ++zero_mult;
  }
  int best = (!exclude_zero && zero_mult > 0) ? zero_mult : 0;
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    if (mult <= best) continue;
    if (g.degree() % 2 == 1 || count_real_roots(g) > 0) best = mult;
  }
  return best;
}

double RootWitness::approx() const {
  if (exact) return rat_double(*exact);
  return rat_double((lo + hi) / 2);
}

std::optional<RootWitness> some_nonzero_real_root(const UniPoly& squarefree) {
  UniPoly g = squarefree;
  while (!g.is_zero() && g.c.size() > 1 && g.c[0] == 0) g.c.erase(g.c.begin());
  if (g.degree() < 1) return std::nullopt;
  if (g.degree() == 1) {
    Rat r = -g.c[0] / g.c[1];
    if (r == 0) return std::nullopt;
    return RootWitness{r, r, r};
  }
  auto chain = sturm_chain(g);
  auto count = [&](const Rat& a, const Rat& b) {
    return variations_at(chain, a) - variations_at(chain, b);
  };
  const Rat M = cauchy_bound(g);  // strict bound: no root at +-M
  Rat lo = -M, hi = M;
  if (count(lo, hi) == 0) return std::nullopt;
  const Rat width_target = Rat(1, (long)1 << 20) / Rat((long)1 << 20);  // 2^-40
  while (hi - lo > width_target) {
    Rat mid = (lo + hi) / 2;
    if (g.eval(mid) == 0) {
      if (mid == 0) break;  // cannot happen after the u-stripping above
      return RootWitness{mid, mid, mid};
    }
    if (count(lo, mid) > 0)
      hi = mid;
    else
      lo = mid;
  }
  return RootWitness{lo, hi, std::nullopt};
}

}  // namespace radon
