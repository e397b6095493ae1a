#include "radon/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "radon/errors.hpp"

namespace radon {

Rat rat_parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw input_error("empty rational literal");

  auto is_digits = [](const std::string& t, size_t from) {
    if (from >= t.size()) return false;
    for (size_t i = from; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };

  size_t body = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos && dot != std::string::npos)
    throw input_error("malformed rational '" + text + "'");

  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_digits(num, body) || !is_digits(den, 0))
      throw input_error("malformed rational '" + text + "'");
    Rat r(num + "/" + den);
    if (r.get_den() == 0) throw input_error("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  }
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.size() == body) ip += "0";
    if (!is_digits(ip, body) || (!fp.empty() && !is_digits(fp, 0)))
      throw input_error("malformed decimal '" + text + "'");
    Rat r(ip);
    if (!fp.empty()) {
      Rat frac(fp);
      Rat scale(1);
      for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
      frac /= scale;
      r += (s[0] == '-') ? -frac : frac;
    }
    r.canonicalize();
    return r;
  }
  if (!is_digits(s, body)) throw input_error("malformed rational '" + text + "'");
  Rat r(s);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

double rat_double(const Rat& r) { return r.get_d(); }

Rat rat_from_double(double v) {
  Rat r(v);
  r.canonicalize();
  return r;
}

int rat_sign(const Rat& r) { return sgn(r); }

Rat rat_abs(const Rat& r) { return abs(r); }

std::vector<Rat> primitive_integer_covector(const std::vector<Rat>& w) {
  mpz_class den_lcm(1);
  for (const auto& x : w) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class num_gcd(0);
  std::vector<Rat> scaled(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    scaled[i] = w[i] * Rat(den_lcm);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled[i].get_num().get_mpz_t());
  }
  if (num_gcd == 0) return scaled;  // zero covector, leave as-is
  for (auto& x : scaled) {
    x /= Rat(num_gcd);
    x.canonicalize();
  }
  return scaled;
}

bool lex_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

}  // namespace radon
