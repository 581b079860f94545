#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nczar/scalar.hpp"

using namespace nczar;

namespace {

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == QPoly{-1, 1});
  CHECK(cyclotomic_poly(2) == QPoly{1, 1});
  CHECK(cyclotomic_poly(4) == QPoly{1, 0, 1});
  CHECK(cyclotomic_poly(6) == QPoly{1, -1, 1});
  CHECK(cyclotomic_poly(12) == QPoly{1, 0, -1, 0, 1});
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(25) == 20);
}

TEST_CASE("root powers wrap and reduce") {
  for (int m : {2, 3, 4, 5, 9}) {
    CHECK(Cyclotomic::root_power(m, m).is_one());
    CHECK(Cyclotomic::root_power(m, -1) == Cyclotomic::root_power(m, m - 1));
    // Sum of all m-th roots vanishes.
    Cyclotomic sum(m);
    for (int k = 0; k < m; ++k) sum += Cyclotomic::root_power(m, k);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("cyclotomic arithmetic matches numeric evaluation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> uc(-4, 4);
  for (int m : {3, 5, 8}) {
    for (int rep = 0; rep < 20; ++rep) {
      QPoly pa(m), pb(m);
      for (auto& c : pa) c = uc(rng);
      for (auto& c : pb) c = uc(rng);
      Cyclotomic a = Cyclotomic::reduce(m, pa);
      Cyclotomic b = Cyclotomic::reduce(m, pb);
      CHECK(close((a * b).eval(), a.eval() * b.eval()));
      CHECK(close((a + b).eval(), a.eval() + b.eval()));
      CHECK(close(a.conj().eval(), std::conj(a.eval())));
    }
  }
}

TEST_CASE("eps and delta powers") {
  CHECK(Scalar::eps_pow(Flavor::Affine, 5, 5).is_one());
  CHECK(Scalar::eps_pow(Flavor::Torus, 5, 5).is_one());
  CHECK(Scalar::delta_pow(5, 25).is_one());
  CHECK(Scalar::delta_pow(5, 5) == Scalar::eps_pow(Flavor::Torus, 5, 1));
  CHECK(Scalar::eps_pow(Flavor::Affine, 3, 1) *
            Scalar::eps_pow(Flavor::Affine, 3, 2) ==
        Scalar::one(Flavor::Affine, 3));
}

TEST_CASE("imaginary unit needs 4 dividing the root order") {
  CHECK_THROWS(Scalar::imaginary_unit(Flavor::Affine, 3));
  Scalar i4 = Scalar::imaginary_unit(Flavor::Affine, 4);
  CHECK((i4 * i4) == Scalar::from_int(Flavor::Affine, 4, -1));
  // Torus order is N^2, so N = 2 already has i.
  Scalar i2 = Scalar::imaginary_unit(Flavor::Torus, 2);
  CHECK((i2 * i2) == Scalar::from_int(Flavor::Torus, 2, -1));
}

TEST_CASE("affine structure constants are not invertible") {
  CHECK_THROWS(Scalar::const_pow(Flavor::Affine, 3, -1, 0));
  CHECK_NOTHROW(Scalar::const_pow(Flavor::Torus, 3, -1, -2));
}

TEST_CASE("conjugation agrees with numeric conjugation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> ue(0, 2);
  std::uniform_int_distribution<long long> ut(-2, 2);
  std::uniform_int_distribution<long long> uk(0, 8);
  std::uniform_int_distribution<long long> uc(-3, 3);

  ModelParams pa = ModelParams::affine(3);
  ModelParams pt = ModelParams::torus(3);
  for (int rep = 0; rep < 40; ++rep) {
    Scalar sa = Scalar::from_int(Flavor::Affine, 3, uc(rng)) *
                Scalar::eps_pow(Flavor::Affine, 3, uk(rng)) *
                Scalar::const_pow(Flavor::Affine, 3, ue(rng), ue(rng));
    CHECK(close(sa.conj().eval(pa), std::conj(sa.eval(pa))));
    CHECK(sa.conj().conj() == sa);

    Scalar st = Scalar::from_int(Flavor::Torus, 3, uc(rng)) *
                Scalar::delta_pow(3, uk(rng)) *
                Scalar::const_pow(Flavor::Torus, 3, ut(rng), ut(rng));
    CHECK(close(st.conj().eval(pt), std::conj(st.eval(pt))));
    CHECK(st.conj().conj() == st);
  }
}

TEST_CASE("multiplication distributes and evaluates") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> uc(-3, 3);
  ModelParams p = ModelParams::torus(4);
  for (int rep = 0; rep < 30; ++rep) {
    Scalar a = Scalar::delta_pow(4, uc(rng)) * Scalar::from_int(Flavor::Torus, 4, 2);
    Scalar b = Scalar::const_pow(Flavor::Torus, 4, uc(rng), uc(rng));
    Scalar cc = Scalar::eps_pow(Flavor::Torus, 4, uc(rng));
    CHECK((a * (b + cc)) == (a * b + a * cc));
    CHECK(close((a * b).eval(p), a.eval(p) * b.eval(p)));
  }
}

TEST_CASE("model parameter values") {
  ModelParams pa = ModelParams::affine(4);
  CHECK(close(pa.a_value(), std::complex<double>(0.0, std::acos(-1.0) / 2.0)));
  CHECK(pa.b_value() == std::complex<double>(1.0, 0.0));

  ModelParams pt = ModelParams::torus(3);
  CHECK(close(std::pow(pt.alpha(), 3.0), pt.a_value(), 1e-10));
  CHECK(close(std::pow(pt.beta(), 3.0), pt.b_value(), 1e-10));
  CHECK(close(std::pow(pt.delta(), 3.0), pt.eps(), 1e-12));
  // alpha^{-1} delta must be real positive.
  auto v = pt.delta() / pt.alpha();
  CHECK(std::abs(v.imag()) < 1e-14);
  CHECK(v.real() > 0.0);
}
