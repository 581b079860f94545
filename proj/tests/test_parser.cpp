#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nczar/parser.hpp"
#include "nczar/sampling.hpp"

using namespace nczar;

TEST_CASE("basic expressions") {
  auto kind = AlgebraKind::AffineEps;
  int N = 3;
  OpElement f = OpElement::generator(kind, N, Gen::F);
  OpElement x = OpElement::generator(kind, N, Gen::X);
  CHECK(parse_element(kind, N, "F*X") == f * x);
  CHECK(parse_element(kind, N, "X*F + a*F") == f * x);
  CHECK(parse_element(kind, N, "X^2") == x * x);
  CHECK(parse_element(kind, N, "F^-2") ==
        parse_element(kind, N, "F^-1 * F^-1"));
  CHECK(parse_element(kind, N, "eps^3") == OpElement::one(kind, N));
  CHECK(parse_element(kind, N, "2 - 2") == OpElement::zero(kind, N));
  CHECK(parse_element(kind, N, "1/2 * X + 1/2 * X") == x);
  CHECK(parse_element(kind, N, "-(X - X)") == OpElement::zero(kind, N));
}

TEST_CASE("scalars by flavor") {
  CHECK(parse_element(AlgebraKind::TorusExt, 3, "delta^9") ==
        OpElement::one(AlgebraKind::TorusExt, 3));
  CHECK(parse_element(AlgebraKind::TorusExt, 3, "delta^3") ==
        parse_element(AlgebraKind::TorusExt, 3, "eps"));
  CHECK(parse_element(AlgebraKind::TorusBase, 3, "alpha*beta") ==
        parse_element(AlgebraKind::TorusBase, 3, "beta*alpha"));
  // i exists exactly when 4 divides the root order.
  CHECK_THROWS(parse_element(AlgebraKind::AffineEps, 3, "i"));
  CHECK(parse_element(AlgebraKind::AffineEps, 4, "i^2") ==
        parse_element(AlgebraKind::AffineEps, 4, "-1"));
  CHECK(parse_element(AlgebraKind::TorusBase, 2, "i^2") ==
        parse_element(AlgebraKind::TorusBase, 2, "-1"));
}

TEST_CASE("adjoint syntax") {
  auto kind = AlgebraKind::AffineSharp;
  int N = 4;
  OpElement w = OpElement::generator(kind, N, Gen::W);
  CHECK(parse_element(kind, N, "adj(W)") == -w);
  CHECK(parse_element(kind, N, "W\xe2\x80\xa0") == -w);
  CHECK(parse_element(kind, N, "adj(X*F)") ==
        parse_element(kind, N, "adj(F)*adj(X)"));
  CHECK(parse_element(kind, N, "(F*G)\xe2\x80\xa0\xe2\x80\xa0") ==
        parse_element(kind, N, "F*G"));
}

TEST_CASE("rejects what the algebra lacks") {
  CHECK_THROWS(parse_element(AlgebraKind::AffineEps, 3, "W"));
  CHECK_THROWS(parse_element(AlgebraKind::AffineEps, 3, "X^-1"));
  CHECK_THROWS(parse_element(AlgebraKind::TorusBase, 3, "Z"));
  CHECK_THROWS(parse_element(AlgebraKind::TorusExt, 3, "Y"));
  CHECK_THROWS(parse_element(AlgebraKind::TorusBase, 3, "adj(X)"));
  CHECK_THROWS(parse_element(AlgebraKind::AffineEps, 3, "a^-1"));
  CHECK_THROWS(parse_element(AlgebraKind::AffineEps, 3, "delta"));
  CHECK_THROWS(parse_element(AlgebraKind::TorusExt, 3, "b"));
  CHECK_THROWS(parse_element(AlgebraKind::AffineEps, 3, ""));
  CHECK_THROWS(parse_element(AlgebraKind::AffineEps, 3, "X +"));
  CHECK_THROWS(parse_element(AlgebraKind::AffineEps, 3, "(X"));
  CHECK_THROWS(parse_element(AlgebraKind::AffineEps, 3, "Q"));
}

TEST_CASE("negative powers where inverses exist") {
  CHECK(parse_element(AlgebraKind::TorusExt, 3, "X^-1 * X") ==
        OpElement::one(AlgebraKind::TorusExt, 3));
  CHECK(parse_element(AlgebraKind::TorusExt, 3, "W^-1 * W") ==
        OpElement::one(AlgebraKind::TorusExt, 3));
  CHECK(parse_element(AlgebraKind::AffineEps, 3, "Y^-1") ==
        parse_element(AlgebraKind::AffineEps, 3, "Y^2"));
}

TEST_CASE("canonical text round-trips") {
  std::mt19937_64 rng(51);
  for (AlgebraKind kind : {AlgebraKind::AffineEps, AlgebraKind::AffineSharp,
                           AlgebraKind::TorusBase, AlgebraKind::TorusExt}) {
    for (int N : {2, 3, 5}) {
      for (int i = 0; i < 25; ++i) {
        OpElement el = random_element(kind, N, rng);
        INFO(el.to_string());
        CHECK(parse_element(kind, N, el.to_string()) == el);
      }
    }
  }
}
