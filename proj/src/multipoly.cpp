#include "radon/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "radon/errors.hpp"

namespace radon {

int total_degree(const MultiIndex& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [a, c] : terms) d = std::max(d, radon::total_degree(a));
  return d;
}

void MultiPoly::add_term(const MultiIndex& alpha, const Rat& c) {
  if ((int)alpha.size() != dim) throw input_error("multi-index length != dimension");
  for (int e : alpha)
    if (e < 0) throw input_error("negative exponent");
  if (c == 0) return;
  auto it = terms.find(alpha);
  if (it == terms.end()) {
    terms.emplace(alpha, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

MultiPoly MultiPoly::derivative(int axis) const {
  if (axis < 0 || axis >= dim) throw input_error("derivative axis out of range");
  MultiPoly out = MultiPoly::zero(dim);
  for (const auto& [a, c] : terms) {
    if (a[axis] == 0) continue;
    MultiIndex b = a;
    b[axis] -= 1;
    out.add_term(b, c * Rat(a[axis]));
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
  MultiPoly out = MultiPoly::zero(dim);
  if (c == 0) return out;
  for (const auto& [a, v] : terms) out.terms.emplace(a, v * c);
  return out;
}

MultiPoly MultiPoly::shifted(const MultiIndex& gamma) const {
  if ((int)gamma.size() != dim) throw input_error("shift arity mismatch");
  MultiPoly out = MultiPoly::zero(dim);
  for (const auto& [a, v] : terms) {
    MultiIndex b = a;
    for (int i = 0; i < dim; ++i) b[i] += gamma[i];
    out.terms.emplace(b, v);
  }
  return out;
}

std::vector<MultiIndex> MultiPoly::support() const {
  if (is_zero()) throw input_error("support of the zero polynomial");
  std::vector<MultiIndex> s;
  s.reserve(terms.size());
  for (const auto& [a, c] : terms) s.push_back(a);
  return s;
}

double MultiPoly::eval(std::span<const double> point) const {
  if ((int)point.size() != dim) throw input_error("evaluation point length != dimension");
  double s = 0.0;
  for (const auto& [a, c] : terms) {
    double m = rat_double(c);
    for (int i = 0; i < dim; ++i) m *= std::pow(point[i], a[i]);
    s += m;
  }
  return s;
}

Rat MultiPoly::eval_exact(const std::vector<Rat>& point) const {
  if ((int)point.size() != dim) throw input_error("evaluation point length != dimension");
  Rat s(0);
  for (const auto& [a, c] : terms) {
    Rat m = c;
    for (int i = 0; i < dim; ++i)
      for (int e = 0; e < a[i]; ++e) m *= point[i];
    s += m;
  }
  return s;
}

std::string MultiPoly::str() const {
  if (terms.empty()) return "0";
  // Highest graded-lex first; deterministic and round-trips through the parser.
  std::vector<const std::pair<const MultiIndex, Rat>*> ts;
  for (const auto& t : terms) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* x, auto* y) {
    int dx = radon::total_degree(x->first), dy = radon::total_degree(y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    const auto& [a, c] = *t;
    Rat mag = rat_abs(c);
    if (first) {
      if (rat_sign(c) < 0) os << "-";
      first = false;
    } else {
      os << (rat_sign(c) < 0 ? " - " : " + ");
    }
    bool any_var = radon::total_degree(a) > 0;
    if (mag != 1 || !any_var) {
      os << rat_str(mag);
      if (any_var) os << " ";
    }
    bool first_factor = true;
    for (int i = 0; i < dim; ++i) {
      if (a[i] == 0) continue;
      if (!first_factor) os << " ";
      first_factor = false;
      os << "t" << (i + 1);
      if (a[i] > 1) os << "^" << a[i];
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  int dim;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw input_error("polynomial syntax error at position " + std::to_string(pos) + ": " + msg);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  long parse_uint(const char* what) {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail(std::string("expected ") + what);
    if (pos - start > 9) fail("exponent overflow");
    return std::stol(s.substr(start, pos - start));
  }

  // unsigned rational or finite-decimal coefficient
  Rat parse_coeff() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      size_t fstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == fstart) fail("expected digits after decimal point");
      return rat_parse(s.substr(start, pos - start));
    }
    Rat num = rat_parse(s.substr(start, pos - start));
    if (peek_is('/')) {
      ++pos;
      skip_ws();
      size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == dstart) fail("expected denominator");
      Rat den = rat_parse(s.substr(dstart, pos - dstart));
      if (den == 0) fail("zero denominator");
      return num / den;
    }
    return num;
  }

  // Variable factor: t<i> or bare t when dim == 1; returns axis or -1.
  int try_parse_var() {
    skip_ws();
    if (pos >= s.size() || s[pos] != 't') return -1;
    size_t save = pos;
    ++pos;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      long idx = parse_uint("variable index");
      if (idx < 1 || idx > dim) {
        pos = save;
        fail("variable t" + std::to_string(idx) + " out of range for dimension " +
             std::to_string(dim));
      }
      return (int)idx - 1;
    }
    if (dim == 1) return 0;
    pos = save;
    fail("bare 't' is only valid when dimension is 1");
  }

  void parse_term(MultiPoly& out, int sign) {
    Rat coef(sign);
    bool have_any = false;
    skip_ws();
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef *= parse_coeff();
      have_any = true;
    }
    MultiIndex alpha(dim, 0);
    for (;;) {
      eat('*');
      skip_ws();
      if (pos >= s.size() || s[pos] != 't') break;
      int axis = try_parse_var();
      long e = 1;
      if (eat('^')) e = parse_uint("exponent");
      if (e > kMaxTotalDegree) fail("exponent overflow");
      alpha[axis] += (int)e;
      if (radon::total_degree(alpha) > kMaxTotalDegree) fail("exponent overflow");
      have_any = true;
    }
    if (!have_any) fail("expected term");
    out.add_term(alpha, coef);
  }

  MultiPoly run() {
    MultiPoly out = MultiPoly::zero(dim);
    int sign = 1;
    if (eat('-'))
      sign = -1;
    else
      eat('+');
    parse_term(out, sign);
    for (;;) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        sign = 1;
      else if (eat('-'))
        sign = -1;
      else
        fail("expected '+' or '-'");
      parse_term(out, sign);
    }
    return out;
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, int dimension) {
  if (dimension < 1) throw input_error("dimension must be >= 1");
  Parser p{text, dimension};
  return p.run();
}

void validate_surface(const MultiPoly& S) {
  if (S.is_zero())
    throw input_error("S is identically zero; a nonzero S(t) is required (§1.1)");
  for (const auto& [a, c] : S.terms) {
    if (radon::total_degree(a) <= 1)
      throw input_error(
          "S violates the gradient condition (1.2): S(0)=0 and grad S(0)=0 require "
          "no constant and no degree-1 terms (found '" +
          MultiPoly{S.dim, {{a, c}}}.str() + "')");
  }
}

EvalTable::EvalTable(const MultiPoly& p, bool absval) : dim(p.dim), absolute_value(absval) {
  if (dim > kMaxVars) throw input_error("evaluation tables support at most 4 variables");
  maxexp.fill(0);
  for (const auto& [a, c] : p.terms) {
    coef.push_back(rat_double(c));
    for (int i = 0; i < dim; ++i) {
      exps.push_back(a[i]);
      maxexp[i] = std::max(maxexp[i], a[i]);
    }
  }
}

}  // namespace radon
