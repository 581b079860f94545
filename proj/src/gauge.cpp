#include "nczar/gauge.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace nczar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kTwoPiI{0.0, kTwoPi};

using Field = std::function<Complex(double, double)>;

}  // namespace

Complex affine_A_x(double /*x*/, double y) { return {0.0, -kTwoPi * y}; }

Complex affine_A_y(double /*x*/, double /*y*/) { return {0.0, 0.0}; }

Complex affine_curvature_dA(double x, double y, double h) {
  Complex dAy_dx = (affine_A_y(x + h, y) - affine_A_y(x - h, y)) / (2.0 * h);
  Complex dAx_dy = (affine_A_x(x, y + h) - affine_A_x(x, y - h)) / (2.0 * h);
  return dAy_dx - dAx_dy;
}

Complex affine_curvature_commutator(double x, double y, double h,
                                    const SectionParams& s) {
  Field psi = [s](double u, double v) {
    double e = s.c1 * u + s.c2 * v + s.c3 * u * v +
               s.c4 * std::sin(kTwoPi * u) * std::cos(kTwoPi * v);
    return Complex{std::exp(e), 0.0};
  };
  auto nabla_x = [h](const Field& f) {
    return Field([f, h](double u, double v) {
      return (f(u + h, v) - f(u - h, v)) / (2.0 * h) + affine_A_x(u, v) * f(u, v);
    });
  };
  auto nabla_y = [h](const Field& f) {
    return Field([f, h](double u, double v) {
      return (f(u, v + h) - f(u, v - h)) / (2.0 * h) + affine_A_y(u, v) * f(u, v);
    });
  };
  Field comm_xy = nabla_x(nabla_y(psi));
  Field comm_yx = nabla_y(nabla_x(psi));
  return (comm_xy(x, y) - comm_yx(x, y)) / psi(x, y);
}

Complex torus_A_z1(Complex z1, Complex z2) { return -std::log(z2) / z1; }

Complex torus_curvature_dA(Complex z1, Complex z2, double h) {
  // A_{z2} = 0, so only -d A_{z1} / d z2 contributes; the window keeps
  // z2 on the positive real axis, where the real-direction difference
  // quotient is the complex derivative.
  Complex dAz1_dz2 = (torus_A_z1(z1, z2 + h) - torus_A_z1(z1, z2 - h)) / (2.0 * h);
  return -dAz1_dz2;
}

CurvatureReport curvature_report(double h, unsigned seed, int samples) {
  CurvatureReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> upt(0.2, 0.8);
  std::uniform_real_distribution<double> uc(-0.2, 0.2);
  std::uniform_real_distribution<double> uc4(0.002, 0.005);
  std::uniform_int_distribution<int> usign(0, 1);
  std::uniform_real_distribution<double> utx(0.1, 0.4);
  std::uniform_real_distribution<double> uty(0.1, 1.0);

  for (int i = 0; i < samples; ++i) {
    SectionParams s{uc(rng), uc(rng), uc(rng),
                    (usign(rng) ? 1.0 : -1.0) * uc4(rng)};
    double x = upt(rng), y = upt(rng);

    rep.max_dev_dA =
        std::max(rep.max_dev_dA, std::abs(affine_curvature_dA(x, y, h) - kTwoPiI));
    rep.max_dev_comm =
        std::max(rep.max_dev_comm,
                 std::abs(affine_curvature_commutator(x, y, h, s) - kTwoPiI));
    rep.max_dev_comm_half =
        std::max(rep.max_dev_comm_half,
                 std::abs(affine_curvature_commutator(x, y, h / 2.0, s) - kTwoPiI));

    Complex z1 = std::polar(1.0, kTwoPi * utx(rng));
    Complex z2{std::exp(uty(rng)), 0.0};
    Complex exact = 1.0 / (z1 * z2);
    rep.max_rel_dev_torus =
        std::max(rep.max_rel_dev_torus,
                 std::abs(torus_curvature_dA(z1, z2, 1e-4) - exact) /
                     std::abs(exact));
  }

  rep.ratio = rep.max_dev_comm / rep.max_dev_comm_half;
  rep.ok = rep.max_dev_dA <= 1e-12 && rep.max_dev_comm <= 1e-6 &&
           rep.ratio >= 3.0 && rep.ratio <= 5.0 &&
           rep.max_rel_dev_torus <= 1e-5;
  return rep;
}

}  // namespace nczar
