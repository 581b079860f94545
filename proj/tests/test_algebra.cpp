#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nczar/algebra.hpp"
#include "nczar/sampling.hpp"

using namespace nczar;

namespace {

const AlgebraKind kKinds[] = {AlgebraKind::AffineEps, AlgebraKind::AffineSharp,
                              AlgebraKind::TorusBase, AlgebraKind::TorusExt};

OpElement g(AlgebraKind k, int N, Gen gen) {
  return OpElement::generator(k, N, gen);
}

}  // namespace

TEST_CASE("defining relations close under rewriting") {
  for (AlgebraKind kind : kKinds) {
    for (int N : {2, 3, 5}) {
      for (const auto& chk : check_relations(kind, N)) {
        INFO(chk.name << " N=" << N);
        CHECK(chk.passed);
      }
    }
  }
}

TEST_CASE("multiplication is associative on random elements") {
  std::mt19937_64 rng(17);
  for (AlgebraKind kind : kKinds) {
    for (int N : {2, 3}) {
      for (int i = 0; i < 25; ++i) {
        OpElement a = random_element(kind, N, rng);
        OpElement b = random_element(kind, N, rng);
        OpElement c = random_element(kind, N, rng);
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK(((a + b) * c) == (a * c + b * c));
      }
    }
  }
}

TEST_CASE("words normalize independently of evaluation order") {
  std::mt19937_64 rng(23);
  for (AlgebraKind kind : kKinds) {
    int N = 3;
    for (int i = 0; i < 40; ++i) {
      Word w = random_word(kind, N, rng, 8);
      // Split the word at an arbitrary point and multiply the halves.
      size_t cut = std::uniform_int_distribution<size_t>(0, w.size())(rng);
      Word w1(w.begin(), w.begin() + cut), w2(w.begin() + cut, w.end());
      CHECK(OpElement::from_word(kind, N, w) ==
            OpElement::from_word(kind, N, w1) * OpElement::from_word(kind, N, w2));
    }
  }
}

TEST_CASE("specific normal forms") {
  int N = 3;
  auto kind = AlgebraKind::AffineEps;
  // GF = EFG: both sides normalize to the single monomial F G E.
  OpElement gf = g(kind, N, Gen::G) * g(kind, N, Gen::F);
  CHECK(gf.terms().size() == 1);
  Monomial m = gf.terms().begin()->first;
  CHECK(m.f == 1);
  CHECK(m.g == 1);
  CHECK(m.e == 1);
  CHECK(gf.terms().begin()->second.is_one());

  // FX rewrites to XF + aF.
  OpElement fx = g(kind, N, Gen::F) * g(kind, N, Gen::X);
  CHECK(fx.terms().size() == 2);

  // Y^N collapses to 1.
  OpElement y = g(kind, N, Gen::Y);
  CHECK((y * y * y) == OpElement::one(kind, N));
}

TEST_CASE("invalid generators are rejected") {
  CHECK_THROWS(g(AlgebraKind::AffineEps, 3, Gen::W));
  CHECK_THROWS(g(AlgebraKind::AffineEps, 3, Gen::Xinv));
  CHECK_THROWS(g(AlgebraKind::AffineSharp, 3, Gen::Winv));
  CHECK_THROWS(g(AlgebraKind::TorusBase, 3, Gen::Z));
  CHECK_THROWS(g(AlgebraKind::TorusBase, 3, Gen::W));
  CHECK_THROWS(g(AlgebraKind::TorusExt, 3, Gen::Y));
  CHECK_THROWS(g(AlgebraKind::TorusExt, 3, Gen::Z));
  CHECK_NOTHROW(g(AlgebraKind::TorusExt, 3, Gen::Winv));
}

TEST_CASE("adjoint is an involutive anti-homomorphism") {
  std::mt19937_64 rng(31);
  for (AlgebraKind kind : {AlgebraKind::AffineSharp, AlgebraKind::TorusExt}) {
    for (int N : {2, 3, 5}) {
      for (int i = 0; i < 20; ++i) {
        OpElement a = random_element(kind, N, rng);
        OpElement b = random_element(kind, N, rng);
        CHECK(a.adjoint().adjoint() == a);
        CHECK((a * b).adjoint() == (b.adjoint() * a.adjoint()));
        CHECK((a + b).adjoint() == (a.adjoint() + b.adjoint()));
        Scalar lam = random_scalar(kind, N, rng);
        CHECK(a.scaled(lam).adjoint() == a.adjoint().scaled(lam.conj()));
      }
    }
  }
}

TEST_CASE("unitary and self-adjoint generators") {
  int N = 4;
  auto kind = AlgebraKind::AffineSharp;
  for (Gen gen : {Gen::Y, Gen::Z, Gen::F, Gen::G, Gen::E}) {
    OpElement u = g(kind, N, gen);
    CHECK((u.adjoint() * u) == OpElement::one(kind, N));
  }
  // W is skew-adjoint; X - W is self-adjoint.
  OpElement w = g(kind, N, Gen::W);
  CHECK(w.adjoint() == -w);
  OpElement sym = g(kind, N, Gen::X) - w;
  CHECK(sym.adjoint() == sym);

  auto text = AlgebraKind::TorusExt;
  OpElement wt = g(text, N, Gen::W);
  CHECK((wt.adjoint() * wt) == OpElement::one(text, N));
  // X* X = W^{-2} X^2 is unitary times positive: check X* = X W^{-2}.
  OpElement xs = g(text, N, Gen::X).adjoint();
  CHECK(xs == g(text, N, Gen::X) * g(text, N, Gen::Winv) * g(text, N, Gen::Winv));
}

TEST_CASE("X has no adjoint without W") {
  CHECK_THROWS(OpElement::generator(AlgebraKind::AffineEps, 3, Gen::X).adjoint());
  CHECK_THROWS(OpElement::generator(AlgebraKind::TorusBase, 3, Gen::X).adjoint());
  CHECK_NOTHROW(OpElement::generator(AlgebraKind::TorusBase, 3, Gen::Y).adjoint());
}

TEST_CASE("canonical text form") {
  int N = 3;
  auto kind = AlgebraKind::AffineEps;
  CHECK(OpElement::zero(kind, N).to_string() == "0");
  CHECK(OpElement::one(kind, N).to_string() == "(1)");
  OpElement fx = g(kind, N, Gen::F) * g(kind, N, Gen::X);
  CHECK(fx.to_string() == "(1)*a^1*F + X*F");
}
