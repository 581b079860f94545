#pragma once

#include "nczar/report.hpp"
#include "nczar/structures.hpp"

namespace nczar {

/// Integer Heisenberg group: (k, l, m)(k', l', m') = (k+k', l+l', m+m'+k l').
struct Heis3Z {
  long long k = 0;
  long long l = 0;
  long long m = 0;

  auto operator<=>(const Heis3Z&) const = default;
};

Heis3Z hmul(const Heis3Z& a, const Heis3Z& b);
Heis3Z hinv(const Heis3Z& a);
Heis3Z hcomm(const Heis3Z& a, const Heis3Z& b);  // a b a^-1 b^-1

/// Real Heisenberg group with a compact center: s lives on R/Z.
struct Heis3R {
  double x = 0.0;
  double y = 0.0;
  double s = 0.0;  // mod 1
};

Heis3R hmul(const Heis3R& a, const Heis3R& b);
Heis3R hinv(const Heis3R& a);

/// Scaling embedding of the level-N discrete group into the real one:
/// (k, l, m) -> (k/sqrt(N), l/sqrt(N), m/N mod 1).
Heis3R embed(int N, const Heis3Z& a);

/// Arc distance on R/Z and the max-metric on the group.
double circle_dist(double a, double b);
double heis_dist(const Heis3R& a, const Heis3R& b);

/// Unitary action of the discrete group on l^2(Z): a basis vector
/// delta_q goes to eps^{phase} delta_{q+k}.
long long act_index(const Heis3Z& g, long long q);
long long act_phase(const Heis3Z& g, long long q);  // m - l(q + k)

/// Group axioms, the central commutator, the action homomorphism
/// property and freeness of the translation action.
Report heisenberg_checks(unsigned seed, int samples);

/// Hausdorff-distance data for the classical limit over the window
/// [0,1]^2 x (R/Z).  d_group bounds the distance between the embedded
/// level-N lattice and the window; d_graph bounds the distance between
/// the discrete and continuous multiplication graphs, via witnesses
/// with the same base points.
struct HausdorffReport {
  int N = 0;
  double grid_step = 0.0;
  double r = 0.0;
  long long k_N = 0;       // round(r sqrt(N)) discrete steps toward r
  double step_error = 0.0; // |k_N/sqrt(N) - r|
  double d_group = 0.0;
  double d_graph = 0.0;
  double bound_group = 0.0;  // 2/sqrt(N) + 0.02
  double bound_graph = 0.0;  // 3/sqrt(N) + 0.02
  bool within = false;
};

HausdorffReport hausdorff_report(int N, double grid_step = 0.01, double r = 0.5,
                                 unsigned seed = 1);

/// The concrete discrete model on the N-cover of the torus with
/// a = exp(2 pi i / N), b = exp(1/N): the maps phi(t) = alpha t,
/// gamma(t) = sgn(t^N) beta t generate a Heisenberg cover action whose
/// commutator is multiplication by eps^{-1}, and the covering and
/// x-function equations hold along every group word.
Report torus_model_checks(int N, unsigned seed, int samples);

}  // namespace nczar
