#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nczar/structures.hpp"

using namespace nczar;

namespace {

bool close(Complex a, Complex b, double tol = 1e-10) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace

TEST_CASE("band index") {
  ModelParams p = ModelParams::affine(4);  // band height pi/2
  CHECK(band_raw({0.3, 0.1}, p) == 0);
  CHECK(band_raw({-2.0, 1.7}, p) == 1);
  CHECK(band_raw({0.0, -0.1}, p) == -1);
  CHECK(band_index({0.0, -0.1}, p) == 3);
  // Exactly on a band boundary counts upward.
  CHECK(band_raw({0.0, std::acos(-1.0) / 2.0}, p) == 1);
}

TEST_CASE("sector indices") {
  int N = 4;
  CHECK(sgn_index({1.0, 0.1}, N) == 0);
  CHECK(sgn_index({-0.1, 1.0}, N) == 1);
  CHECK(sgn_index({-1.0, -0.1}, N) == 2);
  CHECK(sgn_index({0.1, -1.0}, N) == 3);
  CHECK(sgn_index({1.0, 0.0}, N) == 0);
  CHECK(hat_sgn_index({1.0, 0.01}, N) == 0);
  CHECK(hat_sgn_index(std::polar(2.0, 2.0 * std::acos(-1.0) * 5.4 / 16.0), N) == 5);
}

TEST_CASE("affine actions and their inverses") {
  ModelParams p = ModelParams::affine(3);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    AffinePoint pt{{u(rng), u(rng)}, i % 3};
    auto idp = phi_affine_inv(phi_affine(pt, p), p);
    CHECK(close(idp.x, pt.x));
    CHECK(idp.ell == pt.ell);
    auto idg = gamma_affine_inv(gamma_affine(pt, p), p);
    CHECK(close(idg.x, pt.x));
    CHECK(idg.ell == pt.ell);

    // gamma phi = deck . phi gamma: the band below a + x is one higher.
    auto lhs = gamma_affine(phi_affine(pt, p), p);
    auto rhs = phi_affine(gamma_affine(pt, p), p);
    CHECK(close(lhs.x, rhs.x));
    CHECK(lhs.ell == (rhs.ell + 1) % 3);
  }
}

TEST_CASE("torus actions and their inverses") {
  ModelParams p = ModelParams::torus(3);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ur(-1.0, 1.0);
  std::uniform_real_distribution<double> ua(0.0, 2.0 * std::acos(-1.0));
  for (int i = 0; i < 50; ++i) {
    TorusPoint t{std::polar(std::exp(ur(rng)), ua(rng))};
    CHECK(close(phi_torus_inv(phi_torus(t, p), p).t, t.t));
    CHECK(close(gamma_torus_inv(gamma_torus(t, p), p).t, t.t));
    CHECK(close(project_torus(t, p) * project_torus_inv(t, p), {1.0, 0.0}));
    // The covering equations downstairs.
    CHECK(close(project_torus(phi_torus(t, p), p),
                p.a_value() * project_torus(t, p)));
    CHECK(close(project_torus(gamma_torus(t, p), p),
                p.b_value() * project_torus(t, p)));
  }
}

TEST_CASE("orbit shifts compose like the group") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long long> u(-4, 4);
  for (Flavor fl : {Flavor::Affine, Flavor::Torus}) {
    for (int i = 0; i < 30; ++i) {
      OrbitCoord c{u(rng), u(rng), u(rng), {0.5, 0.25}};
      auto id1 = phi_shift_inv(phi_shift(c, fl), fl);
      auto id2 = gamma_shift_inv(gamma_shift(c, fl), fl);
      CHECK(id1.m == c.m);
      CHECK(id1.ell == c.ell);
      CHECK(id2.n == c.n);
      CHECK(id2.ell == c.ell);

      // gamma phi differs from phi gamma by one deck step.
      auto gp = gamma_shift(phi_shift(c, fl), fl);
      auto pg = phi_shift(gamma_shift(c, fl), fl);
      long long twist = (fl == Flavor::Affine) ? 1 : -1;
      CHECK(gp.m == pg.m);
      CHECK(gp.n == pg.n);
      CHECK(gp.ell == pg.ell + twist);
    }
  }
}

TEST_CASE("affine semi-definable functions") {
  ModelParams p = ModelParams::affine(5);
  OrbitCoord c{2, -1, 3, {0.4, 0.2}};
  AffineSemiDef f = semidef_affine(c, p);
  CHECK(close(f.p, 2.0 * p.a_value() - p.b_value() + Complex{0.4, 0.2}));
  CHECK(close(f.y, std::polar(1.0, 2.0 * std::acos(-1.0) * 2.0 / 5.0)));
  CHECK(close(std::exp(f.w), f.y));
}

TEST_CASE("torus semi-definable interpolation") {
  ModelParams p = ModelParams::torus(4);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long long> u(-3, 3);
  std::uniform_real_distribution<double> ua(0.0, std::acos(-1.0) / 2.0);
  for (int i = 0; i < 30; ++i) {
    Complex s_root = std::polar(1.3, ua(rng));
    Complex s = std::pow(s_root, 4.0);
    OrbitCoord c{u(rng), u(rng), u(rng), s};
    TorusSemiDef f = semidef_torus(c, s_root, p);
    CHECK(close(std::pow(f.x, 4.0), f.p, 1e-9));
    CHECK(close(std::pow(f.w, 4.0), f.y, 1e-9));
    CHECK(close(f.x * f.x_prime, {1.0, 0.0}));
  }
}
