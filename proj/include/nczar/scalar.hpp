#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "nczar/cyclotomic.hpp"

namespace nczar {

enum class Flavor { Affine, Torus };

/// Numeric instantiation of the structure constants.
///
/// Affine: a pure imaginary, b real, defaults a = 2*pi*i/N, b = 1.
/// Torus:  a = eps*rho with rho real positive, b real positive; the roots
///         are alpha = delta * rho^{1/N} (so alpha^{-1} delta is real
///         positive) and beta = b^{1/N}, with delta = exp(2*pi*i/N^2).
struct ModelParams {
  Flavor flavor = Flavor::Affine;
  int N = 1;
  double a_imag = 0.0;  // affine: a = i * a_imag
  double b = 1.0;       // affine: real b; torus: real positive b
  double rho = 1.0;     // torus only

  static ModelParams affine(int N, double b = 1.0);
  static ModelParams torus(int N, double rho = 2.718281828459045,
                           double b = 2.718281828459045);

  std::complex<double> a_value() const;      // affine a or torus eps*rho
  std::complex<double> b_value() const;      // b as complex
  std::complex<double> eps() const;          // exp(2 pi i / N)
  std::complex<double> delta() const;        // torus: exp(2 pi i / N^2)
  std::complex<double> alpha() const;        // torus: delta * rho^{1/N}
  std::complex<double> beta() const;         // torus: b^{1/N}
};

/// Exact coefficient of the operator algebras: a sparse sum of formal
/// monomials in the structure constants (a, b for the affine case, alpha,
/// beta for the torus case) with cyclotomic coefficients.  The cyclotomic
/// order is N for the affine case and N^2 for the torus case, so that the
/// torus root delta (delta^N = eps) lives in the coefficient field.
class Scalar {
 public:
  using Key = std::pair<long long, long long>;  // (a-exp, b-exp) / (alpha-exp, beta-exp)

  Scalar() : flavor_(Flavor::Affine), N_(1), order_(1) {}
  Scalar(Flavor flavor, int N);

  static Scalar zero(Flavor flavor, int N) { return Scalar(flavor, N); }
  static Scalar one(Flavor flavor, int N);
  static Scalar from_rational(Flavor flavor, int N, const Rational& r);
  static Scalar from_int(Flavor flavor, int N, long long v);
  /// eps^k (affine: x^k mod Phi_N; torus: delta^{kN} mod Phi_{N^2}).
  static Scalar eps_pow(Flavor flavor, int N, long long k);
  /// delta^k; torus only.
  static Scalar delta_pow(int N, long long k);
  /// i = eps_M^{M/4}; requires 4 | M (M = N affine, N^2 torus).
  static Scalar imaginary_unit(Flavor flavor, int N);
  /// Formal monomial in the first/second structure constant.
  static Scalar const_pow(Flavor flavor, int N, long long a_exp, long long b_exp);
  static Scalar monomial(Flavor flavor, int N, long long a_exp, long long b_exp,
                         const Cyclotomic& c);

  Flavor flavor() const { return flavor_; }
  int N() const { return N_; }
  int order() const { return order_; }
  const std::map<Key, Cyclotomic>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  bool operator==(const Scalar& o) const;

  /// Complex conjugation: eps |-> eps^{-1}; affine a |-> -a, b |-> b;
  /// torus alpha |-> delta^{-2} alpha, beta |-> beta (both forced by the
  /// reality constraints alpha^{-1} delta, beta, b, rho in R_+).
  Scalar conj() const;

  std::complex<double> eval(const ModelParams& p) const;

  /// Canonical symbolic form, e.g. "(2 + eps)*a^2*b".
  std::string to_string() const;

 private:
  void insert_term(const Key& k, const Cyclotomic& c);

  Flavor flavor_;
  int N_;
  int order_;  // cyclotomic order: N or N^2
  std::map<Key, Cyclotomic> terms_;
};

}  // namespace nczar
