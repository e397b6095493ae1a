#include <doctest.h>

#include <cmath>
#include <numbers>

#include "radon/errors.hpp"
#include "radon/oscillatory.hpp"

using namespace radon;

TEST_SUITE("oscillatory") {
  TEST_CASE("zero frequency gives the cutoff mass, real and positive") {
    MultiPoly S = parse_poly("t^2", 1);
    CutoffSpec phi;
    std::vector<double> xi{0.0, 0.0};
    auto r = surface_fourier(S, phi, xi);
    CHECK(r.value.imag() == doctest::Approx(0.0).epsilon(1e-10));
    // integral of exp(1 - 1/(1-t^2)) over (-1,1) is ~1.2070
    CHECK(r.value.real() > 1.19);
    CHECK(r.value.real() < 1.22);
  }

  TEST_CASE("conjugate symmetry for the real cutoff") {
    MultiPoly S = parse_poly("t1 t2", 2);
    CutoffSpec phi;
    phi.radius = 0.5;
    std::vector<double> xi{1.5, -2.0, 20.0};
    std::vector<double> mxi{-1.5, 2.0, -20.0};
    auto a = surface_fourier(S, phi, xi);
    auto b = surface_fourier(S, phi, mxi);
    CHECK(b.value.real() == doctest::Approx(a.value.real()).epsilon(1e-9));
    CHECK(b.value.imag() == doctest::Approx(-a.value.imag()).epsilon(1e-9));
  }

  TEST_CASE("stationary phase: |rho-hat(0, lambda)| ~ sqrt(pi/lambda) for t^2") {
    MultiPoly S = parse_poly("t^2", 1);
    CutoffSpec phi;
    for (double lambda : {256.0, 1024.0}) {
      std::vector<double> xi{0.0, lambda};
      auto r = surface_fourier(S, phi, xi);
      const double expected = std::sqrt(std::numbers::pi / lambda);
      CHECK(std::abs(r.value) == doctest::Approx(expected).epsilon(0.05));
    }
  }

  TEST_CASE("magnitude never exceeds the zero-frequency mass") {
    MultiPoly S = parse_poly("t1^2 + t2^2", 2);
    CutoffSpec phi;
    phi.radius = 0.5;
    std::vector<double> zero{0.0, 0.0, 0.0};
    double mass = std::abs(surface_fourier(S, phi, zero).value);
    for (auto xi : std::vector<std::vector<double>>{
             {3.0, 0.0, 0.0}, {0.0, 5.0, 11.0}, {7.0, -2.0, 40.0}, {0.0, 0.0, 100.0}}) {
      CHECK(std::abs(surface_fourier(S, phi, xi).value) <= mass * (1 + 1e-9));
    }
  }

  TEST_CASE("refinement stability: doubling the grid moves magnitudes < 1e-3 relative") {
    MultiPoly S = parse_poly("t1 t2", 2);
    CutoffSpec phi;
    phi.radius = 0.5;
    std::vector<double> dir{0.0, 0.0, 1.0};
    std::vector<double> lambdas{64.0, 96.0};
    QuadOptions coarse;
    auto a = fourier_magnitudes(S, phi, dir, lambdas, coarse);
    QuadOptions fine = coarse;
    fine.base_nodes *= 2;
    fine.nodes_per_cycle *= 2;
    auto b = fourier_magnitudes(S, phi, dir, lambdas, fine);
    for (size_t i = 0; i < a.size(); ++i)
      CHECK(std::fabs(a[i] - b[i]) / std::max(b[i], 1e-12) < 1e-3);
  }

  TEST_CASE("serial and parallel grids agree bit for bit") {
    MultiPoly S = parse_poly("t1^2 t2 + t1 t2^3", 2);
    CutoffSpec phi;
    phi.radius = 0.5;
    std::vector<double> dir{0.0, 0.0, 1.0};
    std::vector<double> lambdas{32.0, 48.0, 64.0};
    QuadOptions opt;
    opt.parallel = false;
    auto serial = fourier_magnitudes(S, phi, dir, lambdas, opt);
    opt.parallel = true;
    auto parallel = fourier_magnitudes(S, phi, dir, lambdas, opt);
    CHECK(serial == parallel);
  }

  TEST_CASE("decay exponent of t^2 in the S-direction is 1/2") {
    MultiPoly S = parse_poly("t^2", 1);
    CutoffSpec phi;
    std::vector<double> dir{0.0, 1.0};
    DecayFit fit = decay_exponent(S, phi, dir, 4, 12);
    CHECK(fit.exponent_est == doctest::Approx(0.5).epsilon(0.1));
  }

  TEST_CASE("decay exponent of t^3 matches h = 1/3") {
    MultiPoly S = parse_poly("t^3", 1);
    CutoffSpec phi;
    std::vector<double> dir{0.0, 1.0};
    DecayFit fit = decay_exponent(S, phi, dir, 4, 12);
    CHECK(fit.exponent_est == doctest::Approx(1.0 / 3).epsilon(0.15));
  }

  TEST_CASE("transverse direction of t^2 decays fast (Schwartz cutoff)") {
    MultiPoly S = parse_poly("t^2", 1);
    CutoffSpec phi;
    std::vector<double> dir{1.0, 0.0};
    DecayFit fit = decay_exponent(S, phi, dir, 4, 12);
    CHECK(fit.exponent_est >= 2.0);
  }

  TEST_CASE("ladder shorter than 8 rungs is rejected") {
    MultiPoly S = parse_poly("t^2", 1);
    CutoffSpec phi;
    std::vector<double> dir{0.0, 1.0};
    CHECK_THROWS_AS(decay_exponent(S, phi, dir, 4, 10), input_error);
  }

  TEST_CASE("L2 exponent check brackets the true s = 1/2 for t^2") {
    MultiPoly S = parse_poly("t^2", 1);
    CutoffSpec phi;
    auto ok = check_L2_exponent(S, phi, 0.45, 4, 12, 3, 77);
    CHECK(ok.bounded);
    auto bad = check_L2_exponent(S, phi, 0.60, 4, 12, 3, 77);
    CHECK_FALSE(bad.bounded);
    CHECK(std::fabs(bad.worst.direction.back()) > 0.9);  // worst growth along (0,1)
  }

  TEST_CASE("s = 0 is always bounded by the mass") {
    MultiPoly S = parse_poly("t1 t2", 2);
    CutoffSpec phi;
    phi.radius = 0.5;
    QuadOptions opt;
    auto rep = check_L2_exponent(S, phi, 0.0, 3, 10, 2, 5, opt);
    CHECK(rep.bounded);
  }

  TEST_CASE("input validation") {
    MultiPoly S = parse_poly("t1 t2", 2);
    CutoffSpec phi;
    std::vector<double> bad{1.0, 0.0};
    CHECK_THROWS_AS(surface_fourier(S, phi, bad), input_error);
    MultiPoly S4 = parse_poly("t1^2 + t2^2 + t3^2 + t4^2", 4);
    std::vector<double> xi5{0, 0, 0, 0, 1};
    CHECK_THROWS_AS(surface_fourier(S4, phi, xi5), input_error);
  }
}
