#pragma once

#include <map>
#include <utility>

#include "nczar/algebra.hpp"
#include "nczar/report.hpp"
#include "nczar/structures.hpp"

namespace nczar {

/// Basis vector of the affine module H_0: the X-eigenvalue is
/// mu = x0 + gshift*b + (2 pi i / N) k, tracked exactly through the
/// integer fields so that equal vectors compare equal bit-for-bit.
/// xi, zeta in [0, N) are the Y- and E-grading; the invariant subspace
/// H_R consists of the keys with xi = k (mod N).
struct AffineKey {
  double x0 = 0.0;
  long long gshift = 0;
  long long k = 0;
  int xi = 0;
  int zeta = 0;

  auto operator<=>(const AffineKey&) const = default;
};

/// Basis vector of the torus module for the extended algebra:
/// mu = r0 * rho^{ja/N} * b^{jb/N} * delta^k with k in [0, N^2),
/// and the W-eigenvalue is delta^k.
struct TorusExtKey {
  double r0 = 1.0;
  long long ja = 0;
  long long jb = 0;
  int k = 0;

  auto operator<=>(const TorusExtKey&) const = default;
};

/// Basis vector of the torus module H_+ for the base algebra:
/// mu = m0 * alpha^{ja} * beta^{jb} * eps^{je}, with the Y-eigenvalue
/// eps^{xi}; je, xi in [0, N).
struct TorusBaseKey {
  double m0_re = 1.0;
  double m0_im = 0.0;
  long long ja = 0;
  long long jb = 0;
  int je = 0;
  int xi = 0;

  auto operator<=>(const TorusBaseKey&) const = default;
};

bool in_HR(const AffineKey& key, int N);

Complex affine_mu(const AffineKey& key, const ModelParams& p);
Complex torus_ext_mu(const TorusExtKey& key, const ModelParams& p);
Complex torus_base_mu(const TorusBaseKey& key, const ModelParams& p);

/// Action of a single generator: every generator maps a basis vector to
/// a scalar multiple of a basis vector.  Throws domain_error for W on an
/// affine key outside H_R, and invalid_argument for a generator the
/// algebra does not have.
std::pair<AffineKey, Complex> act_gen(AlgebraKind kind, const ModelParams& p,
                                      Gen gen, const AffineKey& key);
std::pair<TorusExtKey, Complex> act_gen(AlgebraKind kind, const ModelParams& p,
                                        Gen gen, const TorusExtKey& key);
std::pair<TorusBaseKey, Complex> act_gen(AlgebraKind kind, const ModelParams& p,
                                         Gen gen, const TorusBaseKey& key);

/// Action of a word (a product of generators, leftmost acting last).
template <class Key>
std::pair<Key, Complex> act_word(AlgebraKind kind, const ModelParams& p,
                                 const Word& word, const Key& key) {
  Key cur = key;
  Complex amp{1.0, 0.0};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto [next, a] = act_gen(kind, p, *it, cur);
    cur = next;
    amp *= a;
  }
  return {cur, amp};
}

/// Action of a normal-form element: the resulting vector as a sparse
/// amplitude map over basis keys.
std::map<AffineKey, Complex> act(const OpElement& el, const ModelParams& p,
                                 const AffineKey& key);
std::map<TorusExtKey, Complex> act(const OpElement& el, const ModelParams& p,
                                   const TorusExtKey& key);
std::map<TorusBaseKey, Complex> act(const OpElement& el, const ModelParams& p,
                                    const TorusBaseKey& key);

/// Random words acted directly generator-by-generator must agree with
/// the action of their rewritten normal form (tolerance 1e-12).
Report representation_compat(AlgebraKind kind, int N, unsigned seed,
                             int samples);

/// Equality of normal forms coincides with equality of the represented
/// operators on a generic probe family.
Report faithfulness_report(AlgebraKind kind, int N, unsigned seed, int samples);

}  // namespace nczar
