#include "nczar/representation.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "nczar/sampling.hpp"

namespace nczar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int mod_i(long long a, long long m) {
  long long r = a % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

Complex unit_root(long long k, long long order) {
  return std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(order));
}

Word expand(const Monomial& m) {
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
  return w;
}

template <class Key>
std::map<Key, Complex> act_impl(const OpElement& el, const ModelParams& p,
                                const Key& key) {
  std::map<Key, Complex> out;
  for (const auto& [m, s] : el.terms()) {
    auto [k2, amp] = act_word(el.kind(), p, expand(m), key);
    out[k2] += amp * s.eval(p);
  }
  return out;
}

}  // namespace

bool in_HR(const AffineKey& key, int N) {
  return mod_i(key.xi, N) == mod_i(key.k, N);
}

Complex affine_mu(const AffineKey& key, const ModelParams& p) {
  return {key.x0 + static_cast<double>(key.gshift) * p.b,
          kTwoPi * static_cast<double>(key.k) / static_cast<double>(p.N)};
}

Complex torus_ext_mu(const TorusExtKey& key, const ModelParams& p) {
  const double n = static_cast<double>(p.N);
  return key.r0 * std::pow(p.rho, static_cast<double>(key.ja) / n) *
         std::pow(p.b, static_cast<double>(key.jb) / n) *
         unit_root(key.k, static_cast<long long>(p.N) * p.N);
}

Complex torus_base_mu(const TorusBaseKey& key, const ModelParams& p) {
  Complex m0{key.m0_re, key.m0_im};
  Complex v = m0;
  auto ipow = [](Complex base, long long e) {
    if (e < 0) {
      base = 1.0 / base;
      e = -e;
    }
    Complex acc{1.0, 0.0};
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  };
  v *= ipow(p.alpha(), key.ja);
  v *= ipow(p.beta(), key.jb);
  v *= unit_root(key.je, p.N);
  return v;
}

std::pair<AffineKey, Complex> act_gen(AlgebraKind kind, const ModelParams& p,
                                      Gen gen, const AffineKey& key) {
  if (!gen_valid(kind, gen))
    throw std::invalid_argument(gen_name(gen) + " is not a generator of this algebra");
  const int N = p.N;
  AffineKey k2 = key;
  switch (gen) {
    case Gen::X:
      return {key, affine_mu(key, p)};
    case Gen::W:
      if (!in_HR(key, N))
        throw std::domain_error("W acts only on the real-oriented part H_R");
      return {key, Complex{0.0, kTwoPi * static_cast<double>(key.k) /
                                    static_cast<double>(N)}};
    case Gen::Y:
      return {key, unit_root(key.xi, N)};
    case Gen::Yinv:
      return {key, unit_root(-key.xi, N)};
    case Gen::Z:
      return {key, unit_root(key.zeta, N)};
    case Gen::Zinv:
      return {key, unit_root(-key.zeta, N)};
    case Gen::F:
      k2.k -= 1;
      k2.xi = mod_i(key.xi - 1, N);
      return {k2, 1.0};
    case Gen::Finv:
      k2.k += 1;
      k2.xi = mod_i(key.xi + 1, N);
      return {k2, 1.0};
    case Gen::G:
      k2.gshift -= 1;
      k2.zeta = mod_i(key.zeta - key.xi, N);
      return {k2, 1.0};
    case Gen::Ginv:
      k2.gshift += 1;
      k2.zeta = mod_i(key.zeta + key.xi, N);
      return {k2, 1.0};
    case Gen::E:
      k2.zeta = mod_i(key.zeta + 1, N);
      return {k2, 1.0};
    case Gen::Einv:
      k2.zeta = mod_i(key.zeta - 1, N);
      return {k2, 1.0};
    default:
      throw std::logic_error("unhandled affine generator action");
  }
}

std::pair<TorusExtKey, Complex> act_gen(AlgebraKind kind, const ModelParams& p,
                                        Gen gen, const TorusExtKey& key) {
  if (!gen_valid(kind, gen))
    throw std::invalid_argument(gen_name(gen) + " is not a generator of this algebra");
  const long long NN = static_cast<long long>(p.N) * p.N;
  TorusExtKey k2 = key;
  switch (gen) {
    case Gen::X:
      return {key, torus_ext_mu(key, p)};
    case Gen::Xinv:
      return {key, 1.0 / torus_ext_mu(key, p)};
    case Gen::W:
      return {key, unit_root(key.k, NN)};
    case Gen::Winv:
      return {key, unit_root(-key.k, NN)};
    case Gen::F:
      k2.ja -= 1;
      k2.k = mod_i(key.k - 1, NN);
      return {k2, 1.0};
    case Gen::Finv:
      k2.ja += 1;
      k2.k = mod_i(key.k + 1, NN);
      return {k2, 1.0};
    case Gen::G:
      k2.jb -= 1;
      k2.k = mod_i(static_cast<long long>(key.k) * (1 - p.N), NN);
      return {k2, 1.0};
    case Gen::Ginv:
      k2.jb += 1;
      k2.k = mod_i(static_cast<long long>(key.k) * (1 + p.N), NN);
      return {k2, 1.0};
    case Gen::E:
      k2.k = mod_i(key.k + p.N, NN);
      return {k2, 1.0};
    case Gen::Einv:
      k2.k = mod_i(key.k - p.N, NN);
      return {k2, 1.0};
    default:
      throw std::logic_error("unhandled torus-ext generator action");
  }
}

std::pair<TorusBaseKey, Complex> act_gen(AlgebraKind kind, const ModelParams& p,
                                         Gen gen, const TorusBaseKey& key) {
  if (!gen_valid(kind, gen))
    throw std::invalid_argument(gen_name(gen) + " is not a generator of this algebra");
  const int N = p.N;
  TorusBaseKey k2 = key;
  switch (gen) {
    case Gen::X:
      return {key, torus_base_mu(key, p)};
    case Gen::Xinv:
      return {key, 1.0 / torus_base_mu(key, p)};
    case Gen::Y:
      return {key, unit_root(key.xi, N)};
    case Gen::Yinv:
      return {key, unit_root(-key.xi, N)};
    case Gen::F:
      k2.ja -= 1;
      k2.xi = mod_i(key.xi - 1, N);
      return {k2, 1.0};
    case Gen::Finv:
      k2.ja += 1;
      k2.xi = mod_i(key.xi + 1, N);
      return {k2, 1.0};
    case Gen::G:
      k2.jb -= 1;
      k2.je = mod_i(key.je - key.xi, N);
      return {k2, 1.0};
    case Gen::Ginv:
      k2.jb += 1;
      k2.je = mod_i(key.je + key.xi, N);
      return {k2, 1.0};
    case Gen::E:
      k2.je = mod_i(key.je + 1, N);
      return {k2, 1.0};
    case Gen::Einv:
      k2.je = mod_i(key.je - 1, N);
      return {k2, 1.0};
    default:
      throw std::logic_error("unhandled torus-base generator action");
  }
}

std::map<AffineKey, Complex> act(const OpElement& el, const ModelParams& p,
                                 const AffineKey& key) {
  return act_impl(el, p, key);
}

std::map<TorusExtKey, Complex> act(const OpElement& el, const ModelParams& p,
                                   const TorusExtKey& key) {
  return act_impl(el, p, key);
}

std::map<TorusBaseKey, Complex> act(const OpElement& el, const ModelParams& p,
                                    const TorusBaseKey& key) {
  return act_impl(el, p, key);
}

namespace {

std::vector<AffineKey> affine_probes(AlgebraKind kind, int N) {
  std::vector<AffineKey> v;
  for (int j = 0; j < 12; ++j) {
    AffineKey k;
    k.x0 = 0.37 + 0.211 * j;
    k.gshift = j % 3 - 1;
    k.k = (2 * j) % 7 - 3;
    k.zeta = (2 * j) % N;
    k.xi = (kind == AlgebraKind::AffineSharp) ? mod_i(k.k, N) : (j % N);
    v.push_back(k);
  }
  return v;
}

std::vector<TorusExtKey> torus_ext_probes(int N) {
  std::vector<TorusExtKey> v;
  for (int j = 0; j < 12; ++j)
    v.push_back({std::exp(0.1 + 0.13 * j), j % 3 - 1, (j + 1) % 3 - 1,
                 (3 * j) % (N * N)});
  return v;
}

std::vector<TorusBaseKey> torus_base_probes(int N) {
  std::vector<TorusBaseKey> v;
  for (int j = 0; j < 12; ++j)
    v.push_back({0.8 + 0.09 * j, 0.33 + 0.05 * j, j % 3 - 1, (j + 1) % 3 - 1,
                 (2 * j) % N, j % N});
  return v;
}

template <class Key>
bool maps_equal(const std::map<Key, Complex>& a, const std::map<Key, Complex>& b,
                double tol) {
  auto amp = [](const std::map<Key, Complex>& m, const Key& k) {
    auto it = m.find(k);
    return it == m.end() ? Complex{0.0, 0.0} : it->second;
  };
  for (const auto& [k, va] : a) {
    Complex vb = amp(b, k);
    if (std::abs(va - vb) > tol * (1.0 + std::max(std::abs(va), std::abs(vb))))
      return false;
  }
  for (const auto& [k, vb] : b) {
    if (a.find(k) == a.end() && std::abs(vb) > tol) return false;
  }
  return true;
}

struct Tally {
  std::string name;
  bool passed = true;
  std::string witness;

  void note(bool ok, const std::string& w) {
    if (!ok && passed) {
      passed = false;
      witness = w;
    }
  }
  CheckResult done() const { return {name, passed, witness}; }
};

std::string word_desc(const Word& w) {
  std::string s;
  for (Gen g : w) {
    if (!s.empty()) s += " ";
    s += gen_name(g);
  }
  return s;
}

template <class Key>
Report compat_impl(AlgebraKind kind, const ModelParams& p, unsigned seed,
                   int samples, const std::vector<Key>& probes) {
  Report rep;
  rep.case_name = "representation-compat";
  rep.N = p.N;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> ulen(1, 6);

  Tally t{"word-vs-normal-form"};
  for (int i = 0; i < samples; ++i) {
    Word w = random_word(kind, p.N, rng, ulen(rng));
    OpElement el = OpElement::from_word(kind, p.N, w);
    for (const Key& key : probes) {
      auto [k2, amp] = act_word(kind, p, w, key);
      std::map<Key, Complex> expected;
      expected[k2] = amp;
      t.note(maps_equal(expected, act(el, p, key), 1e-12), word_desc(w));
    }
  }
  rep.checks = {t.done()};
  return rep;
}

template <class Key>
Report faithful_impl(AlgebraKind kind, const ModelParams& p, unsigned seed,
                     int samples, const std::vector<Key>& probes) {
  Report rep;
  rep.case_name = "faithfulness";
  rep.N = p.N;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> ulen(1, 4);

  auto op_equal = [&](const OpElement& a, const OpElement& b) {
    for (const Key& key : probes)
      if (!maps_equal(act(a, p, key), act(b, p, key), 1e-9)) return false;
    return true;
  };

  Tally t_eq{"equal-forms-act-equally"};
  Tally t_sep{"distinct-forms-act-distinctly"};
  Tally t_iff{"equality-iff-operator-equality"};

  for (int i = 0; i < samples; ++i) {
    Word wu = random_word(kind, p.N, rng, ulen(rng));
    Word wv = random_word(kind, p.N, rng, ulen(rng));
    Word ww = random_word(kind, p.N, rng, ulen(rng));
    OpElement u = OpElement::from_word(kind, p.N, wu);
    OpElement v = OpElement::from_word(kind, p.N, wv);
    OpElement w = OpElement::from_word(kind, p.N, ww);
    OpElement lhs = (u * v) * w;
    OpElement rhs = u * (v * w);
    std::string d = word_desc(wu) + " | " + word_desc(wv);
    t_eq.note(lhs == rhs && op_equal(lhs, rhs), d);

    OpElement a = random_element(kind, p.N, rng);
    OpElement b = a + monomial_element(kind, p.N, random_monomial(kind, p.N, rng))
                          .scaled(random_scalar(kind, p.N, rng));
    t_sep.note(!(a == b) && !op_equal(a, b), d);

    OpElement a2 = random_element(kind, p.N, rng);
    OpElement b2 = random_element(kind, p.N, rng);
    t_iff.note((a2 == b2) == op_equal(a2, b2), d);
  }

  rep.checks = {t_eq.done(), t_sep.done(), t_iff.done()};
  return rep;
}

}  // namespace

Report representation_compat(AlgebraKind kind, int N, unsigned seed,
                             int samples) {
  if (flavor_of(kind) == Flavor::Affine) {
    return compat_impl(kind, ModelParams::affine(N), seed, samples,
                       affine_probes(kind, N));
  }
  if (kind == AlgebraKind::TorusExt) {
    return compat_impl(kind, ModelParams::torus(N), seed, samples,
                       torus_ext_probes(N));
  }
  return compat_impl(kind, ModelParams::torus(N), seed, samples,
                     torus_base_probes(N));
}

Report faithfulness_report(AlgebraKind kind, int N, unsigned seed, int samples) {
  if (flavor_of(kind) == Flavor::Affine) {
    return faithful_impl(kind, ModelParams::affine(N), seed, samples,
                         affine_probes(kind, N));
  }
  if (kind == AlgebraKind::TorusExt) {
    return faithful_impl(kind, ModelParams::torus(N), seed, samples,
                         torus_ext_probes(N));
  }
  return faithful_impl(kind, ModelParams::torus(N), seed, samples,
                       torus_base_probes(N));
}

}  // namespace nczar
