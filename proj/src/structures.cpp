#include "nczar/structures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nczar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int mod_n(long long k, int n) {
  long long r = k % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

Complex unit_root(long long k, long long order) {
  return std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(order));
}

Complex int_pow(Complex base, long long e) {
  if (e < 0) return 1.0 / int_pow(base, -e);
  Complex acc{1.0, 0.0};
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

double arg_2pi(Complex z) {
  double t = std::arg(z);
  if (t < 0) t += kTwoPi;
  return t;
}

// Basis states sit exactly on band/sector boundaries, so floor() must not
// fall to the lower cell on a one-ulp undershoot.
long long stable_floor(double v) {
  return static_cast<long long>(std::floor(v + 1e-9));
}

}  // namespace

long long band_raw(Complex lambda, const ModelParams& p) {
  if (p.flavor != Flavor::Affine)
    throw std::invalid_argument("band function is affine-only");
  // a = i * a_imag, so Re(lambda / a) = Im(lambda) / a_imag.
  return stable_floor(lambda.imag() / p.a_imag);
}

int band_index(Complex lambda, const ModelParams& p) {
  return mod_n(band_raw(lambda, p), p.N);
}

int sgn_index(Complex z, int N) {
  long long k = stable_floor(arg_2pi(z) * static_cast<double>(N) / kTwoPi);
  return mod_n(k, N);
}

int hat_sgn_index(Complex z, int N) {
  long long NN = static_cast<long long>(N) * N;
  long long k = stable_floor(arg_2pi(z) * static_cast<double>(NN) / kTwoPi);
  return mod_n(k, static_cast<int>(NN));
}

AffinePoint phi_affine(const AffinePoint& pt, const ModelParams& p) {
  return {pt.x + p.a_value(), pt.ell};
}

AffinePoint phi_affine_inv(const AffinePoint& pt, const ModelParams& p) {
  return {pt.x - p.a_value(), pt.ell};
}

AffinePoint gamma_affine(const AffinePoint& pt, const ModelParams& p) {
  return {pt.x + p.b_value(), mod_n(pt.ell + band_index(pt.x, p), p.N)};
}

AffinePoint gamma_affine_inv(const AffinePoint& pt, const ModelParams& p) {
  Complex x0 = pt.x - p.b_value();
  return {x0, mod_n(pt.ell - band_index(x0, p), p.N)};
}

Complex project_affine(const AffinePoint& pt) { return pt.x; }

TorusPoint phi_torus(const TorusPoint& t, const ModelParams& p) {
  return {p.alpha() * t.t};
}

TorusPoint phi_torus_inv(const TorusPoint& t, const ModelParams& p) {
  return {t.t / p.alpha()};
}

TorusPoint gamma_torus(const TorusPoint& t, const ModelParams& p) {
  Complex u = int_pow(t.t, p.N);
  return {unit_root(sgn_index(u, p.N), p.N) * p.beta() * t.t};
}

TorusPoint gamma_torus_inv(const TorusPoint& t, const ModelParams& p) {
  // gamma(s) = t has s^N = t^N / b with b real positive, so the sector of
  // s^N is that of t^N.
  Complex u = int_pow(t.t, p.N);
  return {t.t / (unit_root(sgn_index(u, p.N), p.N) * p.beta())};
}

Complex project_torus(const TorusPoint& t, const ModelParams& p) {
  return int_pow(t.t, p.N);
}

Complex project_torus_inv(const TorusPoint& t, const ModelParams& p) {
  return int_pow(t.t, -static_cast<long long>(p.N));
}

OrbitCoord phi_shift(const OrbitCoord& c, Flavor) {
  return {c.m + 1, c.n, c.ell, c.s};
}

OrbitCoord phi_shift_inv(const OrbitCoord& c, Flavor) {
  return {c.m - 1, c.n, c.ell, c.s};
}

OrbitCoord gamma_shift(const OrbitCoord& c, Flavor flavor) {
  long long tw = (flavor == Flavor::Affine) ? c.m : -c.m;
  return {c.m, c.n + 1, c.ell + tw, c.s};
}

OrbitCoord gamma_shift_inv(const OrbitCoord& c, Flavor flavor) {
  long long tw = (flavor == Flavor::Affine) ? c.m : -c.m;
  return {c.m, c.n - 1, c.ell - tw, c.s};
}

OrbitCoord commutator_shift(const OrbitCoord& c) {
  return {c.m, c.n, c.ell + 1, c.s};
}

AffineSemiDef semidef_affine(const OrbitCoord& c, const ModelParams& p) {
  AffineSemiDef f;
  f.p = static_cast<double>(c.m) * p.a_value() +
        static_cast<double>(c.n) * p.b_value() + c.s;
  f.y = unit_root(c.m, p.N);
  f.z = unit_root(c.ell, p.N);
  f.w = Complex{0.0, kTwoPi * static_cast<double>(c.m) / static_cast<double>(p.N)};
  return f;
}

TorusSemiDef semidef_torus(const OrbitCoord& c, Complex s_root, const ModelParams& p) {
  TorusSemiDef f;
  f.p = int_pow(p.a_value(), c.m) * int_pow(p.b_value(), c.n) * c.s;
  f.x = int_pow(p.alpha(), c.m) * int_pow(p.beta(), c.n) *
        unit_root(-c.ell, p.N) * s_root;
  f.x_prime = 1.0 / f.x;
  f.y = unit_root(c.m, p.N);
  f.w = int_pow(p.delta(), c.m) * unit_root(-c.ell, p.N);
  return f;
}

}  // namespace nczar
