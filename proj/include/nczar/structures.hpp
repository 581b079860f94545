#pragma once

#include <complex>

#include "nczar/scalar.hpp"

namespace nczar {

using Complex = std::complex<double>;

/// Point of P_N: <x, eps^ell> with x in C and ell mod N.
struct AffinePoint {
  Complex x;
  int ell = 0;  // reduced to [0, N)
};

/// Point of T_N: a nonzero complex t.
struct TorusPoint {
  Complex t;
};

/// Band function index: bd(lambda) = eps^k with k = floor(Re(lambda/a)) mod N.
/// Returns the representative in [0, N); `raw` variants return the unreduced
/// floor value.
long long band_raw(Complex lambda, const ModelParams& p);
int band_index(Complex lambda, const ModelParams& p);

/// Angular function index: sgn(z) = eps^k, k = floor((N/2pi) arg z) mod N,
/// with arg taken in [0, 2pi).  hat_sgn refines to N^2 sectors.
int sgn_index(Complex z, int N);
int hat_sgn_index(Complex z, int N);

/// The affine actions of the definability Proposition:
///   phi<x, l> = <a + x, l>,   gamma<x, l> = <b + x, l + bd(x)>.
AffinePoint phi_affine(const AffinePoint& pt, const ModelParams& p);
AffinePoint gamma_affine(const AffinePoint& pt, const ModelParams& p);
AffinePoint phi_affine_inv(const AffinePoint& pt, const ModelParams& p);
AffinePoint gamma_affine_inv(const AffinePoint& pt, const ModelParams& p);
Complex project_affine(const AffinePoint& pt);

/// The torus actions: phi(t) = alpha t, gamma(t) = sgn(t^N) beta t,
/// p(t) = t^N, p'(t) p(t) = 1.
TorusPoint phi_torus(const TorusPoint& t, const ModelParams& p);
TorusPoint gamma_torus(const TorusPoint& t, const ModelParams& p);
TorusPoint phi_torus_inv(const TorusPoint& t, const ModelParams& p);
TorusPoint gamma_torus_inv(const TorusPoint& t, const ModelParams& p);
Complex project_torus(const TorusPoint& t, const ModelParams& p);
Complex project_torus_inv(const TorusPoint& t, const ModelParams& p);

/// Orbit coordinate of a point t = phi^m gamma^n C^ell . s relative to a
/// representative s, where C is the central generator of the N-extension
/// (the commutator of phi and gamma, oriented so that the twist identities
/// z(C t) = eps z(t) / x(C t) = eps^{-1} x(t) hold).
struct OrbitCoord {
  long long m = 0;
  long long n = 0;
  long long ell = 0;  // taken mod N by the star-functions
  Complex s;          // orbit representative (affine); s^{1/N} fixed (torus)
};

/// Group shifts on orbit coordinates.  The gamma-shift twist differs between
/// the two cases; each is the one consistent with the corresponding algebra
/// relation list (GZ = YZG affine, XG = beta^{-1} Y^{-1} GX torus).
OrbitCoord phi_shift(const OrbitCoord& c, Flavor flavor);
OrbitCoord gamma_shift(const OrbitCoord& c, Flavor flavor);
OrbitCoord commutator_shift(const OrbitCoord& c);
OrbitCoord phi_shift_inv(const OrbitCoord& c, Flavor flavor);
OrbitCoord gamma_shift_inv(const OrbitCoord& c, Flavor flavor);

/// Semi-definable orbit functions.
struct AffineSemiDef {
  Complex p;  // m a + n b + s
  Complex y;  // eps^m
  Complex z;  // eps^ell
  Complex w;  // 2 pi i m / N
};
struct TorusSemiDef {
  Complex p;       // a^m b^n s
  Complex x;       // alpha^m beta^n eps^{-ell} s^{1/N}
  Complex x_prime; // 1/x
  Complex y;       // eps^m
  Complex w;       // delta^m eps^{-ell}, so that w^N = y and x, w share
                   // the same root-of-unity exponent m - ell*N mod N^2
};

AffineSemiDef semidef_affine(const OrbitCoord& c, const ModelParams& p);
/// Takes the fixed N-th root of the representative explicitly.
TorusSemiDef semidef_torus(const OrbitCoord& c, Complex s_root, const ModelParams& p);

}  // namespace nczar
