// Acceptance harness: one line per criterion, nonzero exit on failure.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "nczar/gauge.hpp"
#include "nczar/limit.hpp"
#include "nczar/parser.hpp"
#include "nczar/reconstruction.hpp"
#include "nczar/representation.hpp"
#include "nczar/sampling.hpp"

using namespace nczar;

namespace {

const AlgebraKind kKinds[] = {AlgebraKind::AffineEps, AlgebraKind::AffineSharp,
                              AlgebraKind::TorusBase, AlgebraKind::TorusExt};

bool report_ok(const Report& r) {
  for (const auto& c : r.checks)
    if (!c.passed) return false;
  return !r.checks.empty();
}

bool relations_all() {
  for (AlgebraKind kind : kKinds)
    for (int N : {2, 3, 5})
      for (const auto& c : check_relations(kind, N))
        if (!c.passed) return false;
  return true;
}

bool confluence() {
  std::mt19937_64 rng(2024);
  for (AlgebraKind kind : kKinds) {
    for (int N : {2, 3}) {
      for (int i = 0; i < 200; ++i) {
        OpElement a = random_element(kind, N, rng);
        OpElement b = random_element(kind, N, rng);
        OpElement c = random_element(kind, N, rng);
        if (!(((a * b) * c) == (a * (b * c)))) return false;
        Word w = random_word(kind, N, rng, 7);
        size_t cut = std::uniform_int_distribution<size_t>(0, w.size())(rng);
        Word w1(w.begin(), w.begin() + cut), w2(w.begin() + cut, w.end());
        if (!(OpElement::from_word(kind, N, w) ==
              OpElement::from_word(kind, N, w1) *
                  OpElement::from_word(kind, N, w2)))
          return false;
      }
    }
  }
  return true;
}

bool rep_compat() {
  for (AlgebraKind kind : kKinds)
    for (int N : {2, 3, 5})
      if (!report_ok(representation_compat(kind, N, 99, 80))) return false;
  return true;
}

bool faithfulness() {
  for (AlgebraKind kind : {AlgebraKind::AffineEps, AlgebraKind::AffineSharp})
    if (!report_ok(faithfulness_report(kind, 3, 7, 100))) return false;
  return true;
}

template <class Key>
Complex amp_at(const std::map<Key, Complex>& v, const Key& k) {
  auto it = v.find(k);
  return it == v.end() ? Complex{0.0, 0.0} : it->second;
}

bool pair_close(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

bool adjointness() {
  {
    int N = 3;
    ModelParams p = ModelParams::affine(N);
    std::mt19937_64 rng(61);
    std::vector<AffineKey> keys;
    for (long long gs = -1; gs <= 1; ++gs)
      for (long long k = -4; k <= 4; ++k)
        for (int zeta = 0; zeta < N; ++zeta)
          keys.push_back({0.29, gs, k, static_cast<int>(((k % N) + N) % N), zeta});
    std::uniform_int_distribution<size_t> pick(0, keys.size() - 1);
    for (int i = 0; i < 60; ++i) {
      OpElement a = random_element(AlgebraKind::AffineSharp, N, rng);
      const AffineKey& u = keys[pick(rng)];
      const AffineKey& v = keys[pick(rng)];
      if (!pair_close(amp_at(act(a.adjoint(), p, u), v),
                      std::conj(amp_at(act(a, p, v), u)), 1e-10))
        return false;
    }
  }
  {
    int N = 2;
    ModelParams p = ModelParams::torus(N);
    std::mt19937_64 rng(67);
    std::vector<TorusExtKey> keys;
    for (long long ja = -2; ja <= 2; ++ja)
      for (long long jb = -2; jb <= 2; ++jb)
        for (int k = 0; k < N * N; ++k) keys.push_back({1.1, ja, jb, k});
    std::uniform_int_distribution<size_t> pick(0, keys.size() - 1);
    for (int i = 0; i < 60; ++i) {
      OpElement a = random_element(AlgebraKind::TorusExt, N, rng);
      const TorusExtKey& u = keys[pick(rng)];
      const TorusExtKey& v = keys[pick(rng)];
      if (!pair_close(amp_at(act(a.adjoint(), p, u), v),
                      std::conj(amp_at(act(a, p, v), u)), 1e-10))
        return false;
    }
  }
  return true;
}

bool star_identities() {
  std::mt19937_64 rng(71);
  for (AlgebraKind kind : {AlgebraKind::AffineSharp, AlgebraKind::TorusExt}) {
    for (int N : {2, 3, 5}) {
      for (int i = 0; i < 40; ++i) {
        OpElement a = random_element(kind, N, rng);
        OpElement b = random_element(kind, N, rng);
        if (!(a.adjoint().adjoint() == a)) return false;
        if (!((a * b).adjoint() == (b.adjoint() * a.adjoint()))) return false;
        if (!((a + b).adjoint() == (a.adjoint() + b.adjoint()))) return false;
        Scalar lam = random_scalar(kind, N, rng);
        if (!(a.scaled(lam).adjoint() == a.adjoint().scaled(lam.conj())))
          return false;
      }
    }
  }
  return true;
}

bool duality() {
  for (int N : {2, 3, 5, 8}) {
    if (!report_ok(duality_affine(N, 1000 + N, 500))) return false;
    if (!report_ok(duality_torus(N, 2000 + N, 500))) return false;
  }
  return true;
}

bool star_functions() {
  for (int N : {2, 3, 5}) {
    if (!report_ok(star_function_affine(N, 3000 + N, 300))) return false;
    if (!report_ok(star_function_torus(N, 4000 + N, 300))) return false;
  }
  return true;
}

bool heisenberg() { return report_ok(heisenberg_checks(13, 400)); }

bool hausdorff() {
  for (int N : {4, 16, 64, 256})
    if (!hausdorff_report(N).within) return false;
  return true;
}

bool curvature() { return curvature_report(1e-3, 17, 40).ok; }

bool torus_model() {
  for (int N : {2, 3, 5})
    if (!report_ok(torus_model_checks(N, 5000 + N, 150))) return false;
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool()> run;
  };
  const Criterion criteria[] = {
      {"01 relation closure under rewriting, all algebras, N in {2,3,5}",
       relations_all},
      {"02 confluence: random products associate and split consistently",
       confluence},
      {"03 representation compatibility with normal forms (tol 1e-12)",
       rep_compat},
      {"04 faithfulness of the module action, N=3, 100 elements",
       faithfulness},
      {"05 numeric adjointness against the inner product (tol 1e-10)",
       adjointness},
      {"06 exact C*-identities of the involution", star_identities},
      {"07 state-to-point duality, N in {2,3,5,8}, 500 samples", duality},
      {"08 semi-definable star-function equations", star_functions},
      {"09 Heisenberg group action and freeness", heisenberg},
      {"10 Hausdorff limit bounds, N in {4,16,64,256}", hausdorff},
      {"11 gauge curvature by two routes", curvature},
      {"12 concrete torus cover model (tol 1e-10)", torus_model},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("FAIL %s (exception: %s)\n", c.name, e.what());
      ++failures;
      continue;
    }
    std::printf("%s %s\n", ok ? "PASS" : "FAIL", c.name);
    if (!ok) ++failures;
  }
  std::printf("%d/12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
