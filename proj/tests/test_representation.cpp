#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nczar/representation.hpp"
#include "nczar/sampling.hpp"

using namespace nczar;

namespace {

template <class Key>
Complex amp(const std::map<Key, Complex>& v, const Key& k) {
  auto it = v.find(k);
  return it == v.end() ? Complex{0.0, 0.0} : it->second;
}

bool close(Complex a, Complex b, double tol = 1e-10) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace

TEST_CASE("generator eigenvalues on affine keys") {
  int N = 3;
  ModelParams p = ModelParams::affine(N);
  AffineKey key{0.37, 2, 4, 1, 2};
  auto [kx, ax] = act_gen(AlgebraKind::AffineEps, p, Gen::X, key);
  CHECK(kx == key);
  CHECK(close(ax, affine_mu(key, p)));
  auto [ky, ay] = act_gen(AlgebraKind::AffineEps, p, Gen::Y, key);
  CHECK(ky == key);
  CHECK(close(ay, std::polar(1.0, 2.0 * std::acos(-1.0) * key.xi / N)));
  auto [kf, af] = act_gen(AlgebraKind::AffineEps, p, Gen::F, key);
  CHECK(kf.k == key.k - 1);
  CHECK(kf.xi == (key.xi + N - 1) % N);
  CHECK(close(af, {1.0, 0.0}));
}

TEST_CASE("W is defined only on the invariant part") {
  int N = 3;
  ModelParams p = ModelParams::affine(N);
  AffineKey in_range{0.1, 0, 4, 1, 0};  // 4 = 1 mod 3
  CHECK(in_HR(in_range, N));
  auto [kw, aw] = act_gen(AlgebraKind::AffineSharp, p, Gen::W, in_range);
  CHECK(kw == in_range);
  CHECK(close(aw, Complex{0.0, 2.0 * std::acos(-1.0) * 4.0 / 3.0}));

  AffineKey off{0.1, 0, 4, 2, 0};
  CHECK(!in_HR(off, N));
  CHECK_THROWS_AS(act_gen(AlgebraKind::AffineSharp, p, Gen::W, off),
                  std::domain_error);
}

TEST_CASE("torus key actions") {
  int N = 3;
  ModelParams p = ModelParams::torus(N);
  TorusExtKey key{1.4, 1, -2, 5};
  auto [kx, ax] = act_gen(AlgebraKind::TorusExt, p, Gen::X, key);
  CHECK(kx == key);
  CHECK(close(ax, torus_ext_mu(key, p)));
  auto [kg, ag] = act_gen(AlgebraKind::TorusExt, p, Gen::G, key);
  CHECK(kg.jb == key.jb - 1);
  CHECK(kg.k == ((5 * (1 - N)) % (N * N) + N * N) % (N * N));
  auto [kgi, agi] = act_gen(AlgebraKind::TorusExt, p, Gen::Ginv, kg);
  CHECK(kgi == key);
  CHECK(close(ag * agi, {1.0, 0.0}));

  TorusBaseKey bk{0.8, 0.3, 2, -1, 1, 2};
  auto [bx, bax] = act_gen(AlgebraKind::TorusBase, p, Gen::X, bk);
  CHECK(bx == bk);
  CHECK(close(bax, torus_base_mu(bk, p)));
}

TEST_CASE("normal forms act like the words they came from") {
  for (AlgebraKind kind : {AlgebraKind::AffineEps, AlgebraKind::AffineSharp,
                           AlgebraKind::TorusBase, AlgebraKind::TorusExt}) {
    for (int N : {2, 3, 5}) {
      Report r = representation_compat(kind, N, 1234, 60);
      INFO(r.case_name << " N=" << N);
      for (const auto& c : r.checks) {
        INFO(c.name << " " << c.witness);
        CHECK(c.passed);
      }
    }
  }
}

TEST_CASE("the representation separates normal forms") {
  for (AlgebraKind kind : {AlgebraKind::AffineEps, AlgebraKind::AffineSharp,
                           AlgebraKind::TorusBase, AlgebraKind::TorusExt}) {
    Report r = faithfulness_report(kind, 3, 77, 60);
    INFO(r.case_name);
    for (const auto& c : r.checks) {
      INFO(c.name << " " << c.witness);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("adjoints match the inner product on affine H_R") {
  int N = 3;
  auto kind = AlgebraKind::AffineSharp;
  ModelParams p = ModelParams::affine(N);
  std::mt19937_64 rng(41);
  std::vector<AffineKey> keys;
  for (long long gs = -1; gs <= 1; ++gs)
    for (long long k = -4; k <= 4; ++k)
      for (int zeta = 0; zeta < N; ++zeta)
        keys.push_back({0.37, gs, k, static_cast<int>(((k % N) + N) % N), zeta});
  std::uniform_int_distribution<size_t> pick(0, keys.size() - 1);
  for (int i = 0; i < 30; ++i) {
    OpElement a = random_element(kind, N, rng);
    const AffineKey& u = keys[pick(rng)];
    const AffineKey& v = keys[pick(rng)];
    Complex lhs = amp(act(a.adjoint(), p, u), v);
    Complex rhs = std::conj(amp(act(a, p, v), u));
    CHECK(close(lhs, rhs));
  }
}

TEST_CASE("adjoints match the inner product on the torus module") {
  int N = 2;
  auto kind = AlgebraKind::TorusExt;
  ModelParams p = ModelParams::torus(N);
  std::mt19937_64 rng(43);
  std::vector<TorusExtKey> keys;
  for (long long ja = -2; ja <= 2; ++ja)
    for (long long jb = -2; jb <= 2; ++jb)
      for (int k = 0; k < N * N; ++k) keys.push_back({1.3, ja, jb, k});
  std::uniform_int_distribution<size_t> pick(0, keys.size() - 1);
  for (int i = 0; i < 30; ++i) {
    OpElement a = random_element(kind, N, rng);
    const TorusExtKey& u = keys[pick(rng)];
    const TorusExtKey& v = keys[pick(rng)];
    Complex lhs = amp(act(a.adjoint(), p, u), v);
    Complex rhs = std::conj(amp(act(a, p, v), u));
    CHECK(close(lhs, rhs));
  }
}
