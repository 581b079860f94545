#pragma once

#include "nczar/report.hpp"
#include "nczar/structures.hpp"

namespace nczar {

/// U(1) connection of the affine principal bundle in the (x, y) chart:
/// A_x = -2 pi i y, A_y = 0, with constant curvature F_xy = 2 pi i.
Complex affine_A_x(double x, double y);
Complex affine_A_y(double x, double y);

/// Curvature via central differences of the connection form.
Complex affine_curvature_dA(double x, double y, double h);

/// Test section exp(c1 x + c2 y + c3 x y + c4 sin(2 pi x) cos(2 pi y)).
struct SectionParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
};

/// Curvature recovered as [nabla_x, nabla_y] psi / psi with nested
/// central differences; second-order accurate in h.
Complex affine_curvature_commutator(double x, double y, double h,
                                    const SectionParams& s);

/// Torus chart z1 = exp(2 pi i x), z2 = exp(y) with A_{z1} = -log(z2)/z1,
/// A_{z2} = 0; the curvature is F_{z1 z2} = 1/(z1 z2).
Complex torus_A_z1(Complex z1, Complex z2);
Complex torus_curvature_dA(Complex z1, Complex z2, double h);

struct CurvatureReport {
  double max_dev_dA = 0.0;      // affine dA route vs 2 pi i
  double max_dev_comm = 0.0;    // commutator route at step h
  double max_dev_comm_half = 0.0;
  double ratio = 0.0;           // should sit near 4 (second order)
  double max_rel_dev_torus = 0.0;
  bool ok = false;
};

CurvatureReport curvature_report(double h, unsigned seed, int samples);

}  // namespace nczar
