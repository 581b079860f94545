#include "nczar/cyclotomic.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace nczar {

namespace {

void poly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo b (b monic after normalization).
QPoly poly_mod(QPoly a, const QPoly& b) {
  poly_trim(a);
  if (b.empty()) throw std::invalid_argument("poly_mod: zero divisor");
  const Rational lead = b.back();
  while (a.size() >= b.size()) {
    Rational q = a.back() / lead;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    poly_trim(a);
  }
  return a;
}

// Exact quotient, used only when the division is known to be exact.
QPoly poly_div_exact(QPoly a, const QPoly& b) {
  poly_trim(a);
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size()) {
    Rational c = a.back() / lead;
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
  }
  if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

}  // namespace

int euler_phi(int m) {
  if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const QPoly& cyclotomic_poly(int m) {
  static std::map<int, QPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, recursively.
  std::function<const QPoly&(int)> get = [&](int k) -> const QPoly& {
    auto jt = cache.find(k);
    if (jt != cache.end()) return jt->second;
    QPoly num(k + 1, Rational(0));
    num[0] = -1;
    num[k] = 1;
    for (int d = 1; d < k; ++d) {
      if (k % d == 0) num = poly_div_exact(std::move(num), get(d));
    }
    return cache.emplace(k, std::move(num)).first->second;
  };
  return get(m);
}

Cyclotomic Cyclotomic::from_rational(int order, const Rational& r) {
  Cyclotomic c(order);
  c.coeffs_[0] = r;
  return c;
}

Cyclotomic Cyclotomic::root_power(int order, long long k) {
  long long e = ((k % order) + order) % order;
  QPoly raw(static_cast<size_t>(e) + 1, Rational(0));
  raw[static_cast<size_t>(e)] = 1;
  return reduce(order, raw);
}

Cyclotomic Cyclotomic::reduce(int order, const QPoly& raw) {
  QPoly rem = poly_mod(raw, cyclotomic_poly(order));
  Cyclotomic c(order);
  for (size_t i = 0; i < rem.size(); ++i) c.coeffs_[i] = rem[i];
  return c;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order_ != o.order_) throw std::invalid_argument("cyclotomic order mismatch");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (order_ != o.order_) throw std::invalid_argument("cyclotomic order mismatch");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  r += o;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  r -= o;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (order_ != o.order_) throw std::invalid_argument("cyclotomic order mismatch");
  QPoly prod(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return reduce(order_, prod);
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic Cyclotomic::conj() const {
  QPoly raw(order_, Rational(0));
  raw.resize(std::max<size_t>(order_, 1), Rational(0));
  Cyclotomic result(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Cyclotomic term = root_power(order_, -static_cast<long long>(i));
    term *= coeffs_[i];
    result += term;
  }
  return result;
}

std::complex<double> Cyclotomic::eval() const {
  const std::complex<double> root =
      std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(order_));
  std::complex<double> acc{0.0, 0.0};
  // Horner from the top coefficient.
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * root + std::complex<double>(static_cast<double>(coeffs_[i]), 0.0);
  }
  return acc;
}

std::string Cyclotomic::to_string(const std::string& root_name) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool need_coeff = (c != 1) || (i == 0);
    if (need_coeff) os << c;
    if (i > 0) {
      if (need_coeff) os << "*";
      os << root_name;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace nczar
