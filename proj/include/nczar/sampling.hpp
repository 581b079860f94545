#pragma once

#include <random>

#include "nczar/algebra.hpp"

namespace nczar {

/// Uniform small random data for randomized checks: exponents stay in
/// the ranges the normal form allows for the given algebra.
inline Monomial random_monomial(AlgebraKind kind, int N, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> small(-2, 2);
  std::uniform_int_distribution<long long> nat(0, 2);
  std::uniform_int_distribution<long long> modn(0, N - 1);
  Monomial m;
  m.f = small(rng);
  m.g = small(rng);
  m.e = modn(rng);
  switch (kind) {
    case AlgebraKind::AffineEps:
      m.x = nat(rng);
      m.y = modn(rng);
      m.z = modn(rng);
      break;
    case AlgebraKind::AffineSharp:
      m.x = nat(rng);
      m.w = nat(rng);
      m.y = modn(rng);
      m.z = modn(rng);
      break;
    case AlgebraKind::TorusBase:
      m.x = small(rng);
      m.y = modn(rng);
      break;
    case AlgebraKind::TorusExt:
      m.x = small(rng);
      m.w = std::uniform_int_distribution<long long>(
          0, std::min<long long>(5, static_cast<long long>(N) * N - 1))(rng);
      break;
  }
  return m;
}

inline Scalar random_scalar(AlgebraKind kind, int N, std::mt19937_64& rng) {
  const Flavor fl = flavor_of(kind);
  std::uniform_int_distribution<long long> coef(-3, 3);
  std::uniform_int_distribution<long long> root(0, N - 1);
  long long c = coef(rng);
  if (c == 0) c = 1;
  return Scalar::from_int(fl, N, c) * Scalar::eps_pow(fl, N, root(rng));
}

inline OpElement monomial_element(AlgebraKind kind, int N, const Monomial& m) {
  Word w;
  auto push = [&w](Gen pos, Gen neg, long long n) {
    for (long long i = 0; i < n; ++i) w.push_back(pos);
    for (long long i = 0; i < -n; ++i) w.push_back(neg);
  };
  push(Gen::X, Gen::Xinv, m.x);
  push(Gen::W, Gen::Winv, m.w);
  push(Gen::Y, Gen::Yinv, m.y);
  push(Gen::Z, Gen::Zinv, m.z);
  push(Gen::F, Gen::Finv, m.f);
  push(Gen::G, Gen::Ginv, m.g);
  push(Gen::E, Gen::Einv, m.e);
  return OpElement::from_word(kind, N, w);
}

inline OpElement random_element(AlgebraKind kind, int N, std::mt19937_64& rng,
                                int max_terms = 3) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  OpElement el = OpElement::zero(kind, N);
  int terms = nt(rng);
  for (int i = 0; i < terms; ++i) {
    el += monomial_element(kind, N, random_monomial(kind, N, rng))
              .scaled(random_scalar(kind, N, rng));
  }
  return el;
}

inline Word random_word(AlgebraKind kind, int N, std::mt19937_64& rng,
                        int len) {
  static const Gen all[] = {Gen::X, Gen::Xinv, Gen::W, Gen::Winv, Gen::Y,
                            Gen::Yinv, Gen::Z, Gen::Zinv, Gen::F, Gen::Finv,
                            Gen::G, Gen::Ginv, Gen::E, Gen::Einv};
  std::vector<Gen> valid;
  for (Gen g : all)
    if (gen_valid(kind, g)) valid.push_back(g);
  std::uniform_int_distribution<size_t> pick(0, valid.size() - 1);
  Word w;
  w.reserve(len);
  for (int i = 0; i < len; ++i) w.push_back(valid[pick(rng)]);
  (void)N;
  return w;
}

}  // namespace nczar
