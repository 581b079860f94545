#include "nczar/scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace nczar {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

ModelParams ModelParams::affine(int N, double b) {
  ModelParams p;
  p.flavor = Flavor::Affine;
  p.N = N;
  p.a_imag = kTwoPi / static_cast<double>(N);
  p.b = b;
  return p;
}

ModelParams ModelParams::torus(int N, double rho, double b) {
  ModelParams p;
  p.flavor = Flavor::Torus;
  p.N = N;
  p.rho = rho;
  p.b = b;
  return p;
}

std::complex<double> ModelParams::a_value() const {
  if (flavor == Flavor::Affine) return {0.0, a_imag};
  return eps() * rho;
}

std::complex<double> ModelParams::b_value() const { return {b, 0.0}; }

std::complex<double> ModelParams::eps() const {
  return std::polar(1.0, kTwoPi / static_cast<double>(N));
}

std::complex<double> ModelParams::delta() const {
  return std::polar(1.0, kTwoPi / static_cast<double>(N) / static_cast<double>(N));
}

std::complex<double> ModelParams::alpha() const {
  return delta() * std::pow(rho, 1.0 / static_cast<double>(N));
}

std::complex<double> ModelParams::beta() const {
  return {std::pow(b, 1.0 / static_cast<double>(N)), 0.0};
}

Scalar::Scalar(Flavor flavor, int N)
    : flavor_(flavor), N_(N), order_(flavor == Flavor::Affine ? N : N * N) {}

Scalar Scalar::one(Flavor flavor, int N) {
  return from_rational(flavor, N, Rational(1));
}

Scalar Scalar::from_rational(Flavor flavor, int N, const Rational& r) {
  Scalar s(flavor, N);
  if (r != 0) s.terms_[{0, 0}] = Cyclotomic::from_rational(s.order_, r);
  return s;
}

Scalar Scalar::from_int(Flavor flavor, int N, long long v) {
  return from_rational(flavor, N, Rational(v));
}

Scalar Scalar::eps_pow(Flavor flavor, int N, long long k) {
  Scalar s(flavor, N);
  long long exp = (flavor == Flavor::Affine) ? k : k * N;
  s.terms_[{0, 0}] = Cyclotomic::root_power(s.order_, exp);
  return s;
}

Scalar Scalar::delta_pow(int N, long long k) {
  Scalar s(Flavor::Torus, N);
  s.terms_[{0, 0}] = Cyclotomic::root_power(s.order_, k);
  return s;
}

Scalar Scalar::imaginary_unit(Flavor flavor, int N) {
  Scalar s(flavor, N);
  if (s.order_ % 4 != 0)
    throw std::invalid_argument("i is not representable: 4 does not divide the root order");
  s.terms_[{0, 0}] = Cyclotomic::root_power(s.order_, s.order_ / 4);
  return s;
}

Scalar Scalar::const_pow(Flavor flavor, int N, long long a_exp, long long b_exp) {
  Scalar s(flavor, N);
  if (flavor == Flavor::Affine && (a_exp < 0 || b_exp < 0))
    throw std::invalid_argument("affine structure constants are not invertible");
  s.terms_[{a_exp, b_exp}] = Cyclotomic::from_rational(s.order_, Rational(1));
  return s;
}

Scalar Scalar::monomial(Flavor flavor, int N, long long a_exp, long long b_exp,
                        const Cyclotomic& c) {
  Scalar s(flavor, N);
  if (!c.is_zero()) s.terms_[{a_exp, b_exp}] = c;
  return s;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
         terms_.begin()->second.is_one();
}

void Scalar::insert_term(const Key& k, const Cyclotomic& c) {
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (flavor_ != o.flavor_ || N_ != o.N_)
    throw std::invalid_argument("scalar flavor/N mismatch");
  for (const auto& [k, c] : o.terms_) insert_term(k, c);
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (flavor_ != o.flavor_ || N_ != o.N_)
    throw std::invalid_argument("scalar flavor/N mismatch");
  Scalar r(flavor_, N_);
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : o.terms_) {
      r.insert_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
    }
  }
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  return flavor_ == o.flavor_ && N_ == o.N_ && terms_ == o.terms_;
}

Scalar Scalar::conj() const {
  Scalar r(flavor_, N_);
  for (const auto& [k, c] : terms_) {
    Cyclotomic cc = c.conj();
    if (flavor_ == Flavor::Affine) {
      if (k.first % 2 != 0) cc = -cc;  // a |-> -a
    } else {
      // alpha |-> delta^{-2} alpha
      cc *= Cyclotomic::root_power(order_, -2 * k.first);
    }
    r.insert_term(k, cc);
  }
  return r;
}

std::complex<double> Scalar::eval(const ModelParams& p) const {
  if (p.flavor != flavor_ || p.N != N_)
    throw std::invalid_argument("eval params do not match scalar");
  std::complex<double> total{0.0, 0.0};
  const std::complex<double> c1 =
      (flavor_ == Flavor::Affine) ? p.a_value() : p.alpha();
  const std::complex<double> c2 =
      (flavor_ == Flavor::Affine) ? p.b_value() : p.beta();
  for (const auto& [k, c] : terms_) {
    std::complex<double> v = c.eval();
    v *= std::pow(c1, static_cast<double>(k.first));
    v *= std::pow(c2, static_cast<double>(k.second));
    total += v;
  }
  return total;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  const std::string root = (flavor_ == Flavor::Affine) ? "eps" : "delta";
  const std::string n1 = (flavor_ == Flavor::Affine) ? "a" : "alpha";
  const std::string n2 = (flavor_ == Flavor::Affine) ? "b" : "beta";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string(root) << ")";
    if (k.first != 0) os << "*" << n1 << "^" << k.first;
    if (k.second != 0) os << "*" << n2 << "^" << k.second;
  }
  return os.str();
}

}  // namespace nczar
