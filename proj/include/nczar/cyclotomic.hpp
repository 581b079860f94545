#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nczar/rational.hpp"

namespace nczar {

/// Dense polynomial over Q in the basis 1, x, x^2, ...
using QPoly = std::vector<Rational>;

int euler_phi(int m);

/// The M-th cyclotomic polynomial Phi_M, computed once by dividing
/// x^M - 1 by the lower-order cyclotomic polynomials and cached.
const QPoly& cyclotomic_poly(int m);

/// Element of Q(eps_M), stored as the canonical residue modulo Phi_M
/// in the power basis 1, x, ..., x^{phi(M)-1}.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
  explicit Cyclotomic(int order) : order_(order), coeffs_(euler_phi(order), Rational(0)) {}

  static Cyclotomic from_rational(int order, const Rational& r);
  /// x^k reduced mod Phi_M; k may be negative (x^{-1} = x^{M-1}).
  static Cyclotomic root_power(int order, long long k);
  /// cyc_reduce: canonical residue of an arbitrary polynomial in x.
  static Cyclotomic reduce(int order, const QPoly& raw);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);

  bool operator==(const Cyclotomic& o) const = default;

  /// Complex conjugation: x |-> x^{-1} at the primitive root exp(2 pi i / M).
  Cyclotomic conj() const;

  /// Evaluate at exp(2 pi i / M).
  std::complex<double> eval() const;

  /// Canonical text form, e.g. "2 + eps - 1/3*eps^2" with the given root name.
  std::string to_string(const std::string& root_name) const;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

}  // namespace nczar
