#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "radon/errors.hpp"
#include "radon/sublevel.hpp"

using namespace radon;

namespace {

SublevelOptions fast_opts() {
  SublevelOptions o;
  o.samples = 200000;
  o.k_min = 6;
  o.k_max = 16;
  o.seed = 99;
  return o;
}

}  // namespace

TEST_SUITE("sublevel") {
  TEST_CASE("measure matches analytic values") {
    // m{ t in (-1,1) : t^2 < 0.01 } = 2 sqrt(0.01) = 0.2
    EvalTable f(parse_poly("t^2", 1));
    RegionSpec r{RegionSpec::Kind::Ball, 1, 1.0};
    auto [m, se] = sublevel_measure(f, r, 0.01, 400000, 7);
    CHECK(m == doctest::Approx(0.2).epsilon(0.02));

    // m{ (0,1)^2 : t1 t2 < 0.1 } = 0.1 (1 + ln 10)
    EvalTable g(parse_poly("t1 t2", 2));
    RegionSpec cube{RegionSpec::Kind::Cube, 2, 1.0};
    auto [m2, se2] = sublevel_measure(g, cube, 0.1, 400000, 7);
    CHECK(m2 == doctest::Approx(0.1 * (1 + std::log(10.0))).epsilon(0.02));

    // m{ unit disk : t1^2 + t2^2 < 0.04 } = pi * 0.04
    EvalTable h(parse_poly("t1^2 + t2^2", 2));
    RegionSpec disk{RegionSpec::Kind::Ball, 2, 1.0};
    auto [m3, se3] = sublevel_measure(h, disk, 0.04, 400000, 7);
    CHECK(m3 == doctest::Approx(0.04 * 3.14159265).epsilon(0.03));
    CHECK(se3 > 0);
  }

  TEST_CASE("determinism and serial/parallel equality") {
    EvalTable f(parse_poly("t1^2 t2 + t1 t2^3", 2));
    RegionSpec r{RegionSpec::Kind::Ball, 2, 0.5};
    std::vector<double> thr{0.01, 0.001};
    auto a = sublevel_count_serial(f, r, thr, 150000, 1234, 256);
    auto b = sublevel_count_parallel(f, r, thr, 150000, 1234, 256);
    CHECK(a.hits == b.hits);
    CHECK(a.region_hits == b.region_hits);
    auto c = sublevel_count_parallel(f, r, thr, 150000, 1234, 256);
    CHECK(b.hits == c.hits);  // bit-identical across runs
    auto d = sublevel_count_parallel(f, r, thr, 150000, 4321, 256);
    CHECK(b.hits != d.hits);  // the seed matters
  }

  TEST_CASE("curve entries equal the single-epsilon estimator") {
    EvalTable f(parse_poly("t1^2 + t2^2", 2));
    RegionSpec r{RegionSpec::Kind::Ball, 2, 0.5};
    SublevelOptions o = fast_opts();
    o.k_max = 12;
    SublevelCurve c = sublevel_curve(f, r, o);
    for (size_t i = 0; i < c.ks.size(); ++i) {
      auto [m, se] = sublevel_measure(f, r, c.epsilons[i], o.samples, o.seed);
      CHECK(m == c.measures[i]);  // same stream, bit-identical
    }
  }

  TEST_CASE("curves are monotone and control tracks the main stream") {
    EvalTable f(parse_poly("t1 t2", 2));
    RegionSpec r{RegionSpec::Kind::Ball, 2, 0.5};
    SublevelCurve c = sublevel_curve(f, r, fast_opts());
    for (size_t i = 1; i < c.measures.size(); ++i) CHECK(c.measures[i] <= c.measures[i - 1]);
    for (size_t i = 0; i < c.measures.size(); ++i)
      CHECK(std::fabs(c.measures[i] - c.control_measures[i]) < 10 * c.stderrs[i] + 5e-4);
  }

  TEST_CASE("fit recovers h and the log power on synthetic exact curves") {
    // exact t^2 curve: m = 2 sqrt(eps) -> h = 1/2, d = 0
    SublevelCurve c;
    c.region = {RegionSpec::Kind::Ball, 1, 1.0};
    for (int k = 6; k <= 18; ++k) {
      double eps = std::ldexp(1.0, -k);
      c.ks.push_back(k);
      c.epsilons.push_back(eps);
      c.measures.push_back(2 * std::sqrt(eps));
      c.stderrs.push_back(1e-9);
    }
    c.samples = 1;
    GrowthFit f = fit_growth(c, 1);
    CHECK(f.h_est == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(f.d_est == 0);

    // exact t1 t2 curve on the unit square: m = eps (1 + ln(1/eps)) -> h = 1, d = 1
    SublevelCurve c2;
    c2.region = {RegionSpec::Kind::Cube, 2, 1.0};
    for (int k = 6; k <= 18; ++k) {
      double eps = std::ldexp(1.0, -k);
      c2.ks.push_back(k);
      c2.epsilons.push_back(eps);
      c2.measures.push_back(eps * (1 + std::log(1.0 / eps)));
      c2.stderrs.push_back(1e-9);
    }
    c2.samples = 1;
    GrowthFit f2 = fit_growth(c2, 2);
    CHECK(f2.d_est == 1);
    CHECK(f2.h_est == doctest::Approx(1.0).epsilon(0.02));
  }

  TEST_CASE("fit preconditions") {
    SublevelCurve c;
    c.region = {RegionSpec::Kind::Ball, 1, 1.0};
    for (int k = 6; k <= 9; ++k) {
      c.ks.push_back(k);
      c.epsilons.push_back(std::ldexp(1.0, -k));
      c.measures.push_back(0.1);
      c.stderrs.push_back(1e-9);
    }
    CHECK_THROWS_AS(fit_growth(c, 1), numerics_error);  // < 8 points
    for (auto& m : c.measures) m = 0.0;
    CHECK_THROWS_AS(fit_growth(c, 1), numerics_error);  // all zero
  }

  TEST_CASE("saturated leading points are dropped") {
    SublevelCurve c;
    c.region = {RegionSpec::Kind::Ball, 1, 0.125};
    double vol = c.region.volume();
    for (int k = 4; k <= 16; ++k) {
      double eps = std::ldexp(1.0, -k);
      c.ks.push_back(k);
      c.epsilons.push_back(eps);
      double m = std::min(2 * std::sqrt(eps), vol);
      c.measures.push_back(m);
      c.stderrs.push_back(1e-9);
    }
    c.samples = 1;
    GrowthFit f = fit_growth(c, 1);
    CHECK(f.h_est == doctest::Approx(0.5).epsilon(1e-6));
    bool dropped = false;
    for (const auto& w : f.warnings)
      if (w.find("saturated") != std::string::npos) dropped = true;
    CHECK(dropped);
  }

  TEST_CASE("estimate_h on t^2 (radius sweep, stabilization)") {
    MultiPoly S = parse_poly("t^2", 1);
    SublevelOptions o = fast_opts();
    HEstimate e = estimate_h(S, {0.5, 0.25, 0.125}, o);
    CHECK(e.stabilized);
    CHECK(e.chosen.h_est == doctest::Approx(0.5).epsilon(0.08));
    CHECK(e.chosen.d_est == 0);
  }

  TEST_CASE("estimate_g uses the star polynomial on the cube") {
    MultiPoly S = parse_poly("t1^2 - 2 t1 t2 + t2^2", 2);  // S* = |t1|^2 + |t2|^2
    auto N = newton_polyhedron(S);
    SublevelOptions o = fast_opts();
    o.samples = 400000;
    o.k_max = 14;
    GEstimate g = estimate_g(S, N, 0.5, o);
    CHECK(g.fit.h_est == doctest::Approx(1.0).epsilon(0.08));
  }

  TEST_CASE("predicted_h licensing") {
    ZeroOrderResult exact0{0, Exactness::Exact, {}};
    CHECK(*predicted_h(rat(1), exact0) == rat(1));
    CHECK(*predicted_h(rat(3), exact0) == rat(1, 3));
    ZeroOrderResult o2{2, Exactness::Exact, {}};
    CHECK_FALSE(predicted_h(rat(1), o2));  // o > d
    ZeroOrderResult lb0{0, Exactness::LowerBound, {}};
    CHECK_FALSE(predicted_h(rat(1), lb0));  // lower bound never licenses
    ZeroOrderResult o1{1, Exactness::Exact, {}};
    CHECK(*predicted_h(rat(5, 3), o1) == rat(3, 5));
  }

  TEST_CASE("csv export") {
    EvalTable f(parse_poly("t^2", 1));
    RegionSpec r{RegionSpec::Kind::Ball, 1, 1.0};
    SublevelOptions o = fast_opts();
    o.samples = 20000;
    o.k_max = 14;
    SublevelCurve c = sublevel_curve(f, r, o);
    std::ostringstream os;
    write_curve_csv(os, c);
    std::string s = os.str();
    CHECK(s.rfind("k,epsilon,measure,stderr,samples,seed\n", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == (int)c.ks.size() + 1);
  }

  TEST_CASE("invalid inputs") {
    EvalTable f(parse_poly("t^2", 1));
    RegionSpec r{RegionSpec::Kind::Ball, 1, 1.0};
    CHECK_THROWS_AS(sublevel_measure(f, r, -1.0, 20000, 1), input_error);
    CHECK_THROWS_AS(sublevel_measure(f, r, 0.5, 100, 1), input_error);
    RegionSpec bad{RegionSpec::Kind::Ball, 2, 1.0};
    CHECK_THROWS_AS(sublevel_measure(f, bad, 0.5, 20000, 1), input_error);
  }
}
