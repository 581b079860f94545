#pragma once

#include "nczar/report.hpp"
#include "nczar/representation.hpp"

namespace nczar {

/// The state-to-point correspondence: a geometric affine state
/// (mu, xi, zeta) with xi = bd(mu) goes to the cover point <mu, zeta>;
/// a torus state goes to the cover point t = mu itself.
AffinePoint xi_point(const AffineKey& key, const ModelParams& p);
TorusPoint xi_point(const TorusExtKey& key, const ModelParams& p);

/// Projection of a state to the base coordinate (mu, resp. mu^N).
Complex base_point(const AffineKey& key, const ModelParams& p);
Complex base_point(const TorusExtKey& key, const ModelParams& p);

/// A state is geometric when its Y-grading matches the band of its
/// X-eigenvalue; only those correspond to cover points.
bool geometric(const AffineKey& key, const ModelParams& p);
bool geometric(const TorusExtKey& key, const ModelParams& p);

/// Reconstruction of the geometry from the states: verifies that Xi is
/// a bijection onto the cover, that F and G act anti-equivariantly as
/// phi^{-1} and gamma^{-1}, that the central E matches the deck twist,
/// and that the fibers of the projection have exactly N points.
Report duality_affine(int N, unsigned seed, int samples);
Report duality_torus(int N, unsigned seed, int samples);

/// Functional equations of the semi-definable star-functions along the
/// group orbits.
Report star_function_affine(int N, unsigned seed, int samples);
Report star_function_torus(int N, unsigned seed, int samples);

}  // namespace nczar
