#include "nczar/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace nczar {

namespace {

long long mod_ll(long long a, long long m) {
  long long r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

Flavor flavor_of(AlgebraKind kind) {
  return (kind == AlgebraKind::AffineEps || kind == AlgebraKind::AffineSharp)
             ? Flavor::Affine
             : Flavor::Torus;
}

bool gen_valid(AlgebraKind kind, Gen gen) {
  switch (kind) {
    case AlgebraKind::AffineEps:
      switch (gen) {
        case Gen::Y: case Gen::Yinv: case Gen::Z: case Gen::Zinv:
        case Gen::F: case Gen::Finv: case Gen::G: case Gen::Ginv:
        case Gen::E: case Gen::Einv: case Gen::X:
          return true;
        default:
          return false;
      }
    case AlgebraKind::AffineSharp:
      return gen != Gen::Xinv && gen != Gen::Winv;
    case AlgebraKind::TorusBase:
      switch (gen) {
        case Gen::X: case Gen::Xinv: case Gen::Y: case Gen::Yinv:
        case Gen::F: case Gen::Finv: case Gen::G: case Gen::Ginv:
        case Gen::E: case Gen::Einv:
          return true;
        default:
          return false;
      }
    case AlgebraKind::TorusExt:
      switch (gen) {
        case Gen::X: case Gen::Xinv: case Gen::W: case Gen::Winv:
        case Gen::F: case Gen::Finv: case Gen::G: case Gen::Ginv:
        case Gen::E: case Gen::Einv:
          return true;
        default:
          return false;
      }
  }
  return false;
}

std::string gen_name(Gen gen) {
  switch (gen) {
    case Gen::X: return "X";
    case Gen::Xinv: return "X^-1";
    case Gen::W: return "W";
    case Gen::Winv: return "W^-1";
    case Gen::Y: return "Y";
    case Gen::Yinv: return "Y^-1";
    case Gen::Z: return "Z";
    case Gen::Zinv: return "Z^-1";
    case Gen::F: return "F";
    case Gen::Finv: return "F^-1";
    case Gen::G: return "G";
    case Gen::Ginv: return "G^-1";
    case Gen::E: return "E";
    case Gen::Einv: return "E^-1";
  }
  return "?";
}

OpElement OpElement::zero(AlgebraKind kind, int N) { return OpElement(kind, N); }

OpElement OpElement::one(AlgebraKind kind, int N) {
  return scalar_element(kind, N, Scalar::one(flavor_of(kind), N));
}

OpElement OpElement::scalar_element(AlgebraKind kind, int N, const Scalar& s) {
  OpElement el(kind, N);
  if (!s.is_zero()) el.terms_[Monomial{}] = s;
  return el;
}

OpElement OpElement::generator(AlgebraKind kind, int N, Gen gen) {
  return one(kind, N).append(gen);
}

OpElement OpElement::from_word(AlgebraKind kind, int N, const Word& word) {
  OpElement el = one(kind, N);
  for (Gen g : word) el = el.append(g);
  return el;
}

void OpElement::insert_term(const Monomial& m, const Scalar& s) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!s.is_zero()) terms_.emplace(m, s);
  } else {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OpElement OpElement::operator+(const OpElement& o) const {
  OpElement r = *this;
  r += o;
  return r;
}

OpElement& OpElement::operator+=(const OpElement& o) {
  if (kind_ != o.kind_ || N_ != o.N_)
    throw std::invalid_argument("algebra kind/N mismatch");
  for (const auto& [m, s] : o.terms_) insert_term(m, s);
  return *this;
}

OpElement OpElement::operator-() const {
  OpElement r = *this;
  for (auto& [m, s] : r.terms_) s = -s;
  return r;
}

OpElement OpElement::operator-(const OpElement& o) const { return *this + (-o); }

OpElement OpElement::scaled(const Scalar& s) const {
  OpElement r(kind_, N_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.insert_term(m, c * s);
  return r;
}

bool OpElement::operator==(const OpElement& o) const {
  return kind_ == o.kind_ && N_ == o.N_ && terms_ == o.terms_;
}

OpElement OpElement::append(Gen gen) const {
  if (!gen_valid(kind_, gen))
    throw std::invalid_argument(gen_name(gen) + " is not a generator of this algebra");
  const Flavor fl = flavor_of(kind_);
  const int N = N_;
  const long long NN = static_cast<long long>(N) * N;
  OpElement out(kind_, N_);

  for (const auto& [m, c] : terms_) {
    const long long f = m.f, g = m.g, e = m.e;
    Monomial m2 = m;
    switch (gen) {
      // Generators shared by every kind.
      case Gen::F:
        m2.f += 1;
        m2.e = mod_ll(e + g, N);
        out.insert_term(m2, c);
        continue;
      case Gen::Finv:
        m2.f -= 1;
        m2.e = mod_ll(e - g, N);
        out.insert_term(m2, c);
        continue;
      case Gen::G:
        m2.g += 1;
        out.insert_term(m2, c);
        continue;
      case Gen::Ginv:
        m2.g -= 1;
        out.insert_term(m2, c);
        continue;
      case Gen::E:
        m2.e = mod_ll(e + 1, N);
        out.insert_term(m2, c);
        continue;
      case Gen::Einv:
        m2.e = mod_ll(e - 1, N);
        out.insert_term(m2, c);
        continue;
      default:
        break;
    }

    if (fl == Flavor::Affine) {
      switch (gen) {
        case Gen::X: {
          m2.x += 1;
          out.insert_term(m2, c);
          // X F = F (X - a), X G = G (X - b): moving X past F^f G^g
          // leaves the linear correction (f a + g b).
          Scalar lin = Scalar::zero(fl, N);
          if (f != 0)
            lin += Scalar::from_int(fl, N, f) * Scalar::const_pow(fl, N, 1, 0);
          if (g != 0)
            lin += Scalar::from_int(fl, N, g) * Scalar::const_pow(fl, N, 0, 1);
          if (!lin.is_zero()) out.insert_term(m, c * lin);
          break;
        }
        case Gen::W: {
          m2.w += 1;
          out.insert_term(m2, c);
          if (f != 0)
            out.insert_term(
                m, c * Scalar::from_int(fl, N, f) * Scalar::const_pow(fl, N, 1, 0));
          break;
        }
        case Gen::Y:
          m2.y = mod_ll(m.y + 1, N);
          out.insert_term(m2, c * Scalar::eps_pow(fl, N, f));
          break;
        case Gen::Yinv:
          m2.y = mod_ll(m.y - 1, N);
          out.insert_term(m2, c * Scalar::eps_pow(fl, N, -f));
          break;
        case Gen::Z:
          m2.y = mod_ll(m.y + g, N);
          m2.z = mod_ll(m.z + 1, N);
          out.insert_term(m2, c * Scalar::eps_pow(fl, N, f * g - e));
          break;
        case Gen::Zinv:
          m2.y = mod_ll(m.y - g, N);
          m2.z = mod_ll(m.z - 1, N);
          out.insert_term(m2, c * Scalar::eps_pow(fl, N, e - f * g));
          break;
        default:
          throw std::logic_error("unhandled affine generator");
      }
    } else if (kind_ == AlgebraKind::TorusExt) {
      switch (gen) {
        case Gen::X:
          m2.x += 1;
          m2.w = mod_ll(m.w + g * N, NN);
          out.insert_term(m2, c * Scalar::const_pow(fl, N, f, g) *
                                  Scalar::eps_pow(fl, N, f * g - e));
          break;
        case Gen::Xinv:
          m2.x -= 1;
          m2.w = mod_ll(m.w - g * N, NN);
          out.insert_term(m2, c * Scalar::const_pow(fl, N, -f, -g) *
                                  Scalar::eps_pow(fl, N, e - f * g));
          break;
        case Gen::W: {
          // G^g W = W^j G^g with j = (1+N)^g = 1 + gN (mod N^2).
          long long j = mod_ll(1 + mod_ll(g, N) * N, NN);
          m2.w = mod_ll(m.w + j, NN);
          out.insert_term(m2, c * Scalar::delta_pow(N, f * j) *
                                  Scalar::eps_pow(fl, N, -e));
          break;
        }
        case Gen::Winv: {
          long long j = mod_ll(1 + mod_ll(g, N) * N, NN);
          m2.w = mod_ll(m.w - j, NN);
          out.insert_term(m2, c * Scalar::delta_pow(N, -f * j) *
                                  Scalar::eps_pow(fl, N, e));
          break;
        }
        default:
          throw std::logic_error("unhandled torus-ext generator");
      }
    } else {  // TorusBase
      switch (gen) {
        case Gen::X:
          m2.x += 1;
          m2.y = mod_ll(m.y + g, N);
          out.insert_term(m2, c * Scalar::const_pow(fl, N, f, g) *
                                  Scalar::eps_pow(fl, N, f * g - e));
          break;
        case Gen::Xinv:
          m2.x -= 1;
          m2.y = mod_ll(m.y - g, N);
          out.insert_term(m2, c * Scalar::const_pow(fl, N, -f, -g) *
                                  Scalar::eps_pow(fl, N, e - f * g));
          break;
        case Gen::Y:
          m2.y = mod_ll(m.y + 1, N);
          out.insert_term(m2, c * Scalar::eps_pow(fl, N, f));
          break;
        case Gen::Yinv:
          m2.y = mod_ll(m.y - 1, N);
          out.insert_term(m2, c * Scalar::eps_pow(fl, N, -f));
          break;
        default:
          throw std::logic_error("unhandled torus-base generator");
      }
    }
  }
  return out;
}

OpElement OpElement::operator*(const OpElement& o) const {
  if (kind_ != o.kind_ || N_ != o.N_)
    throw std::invalid_argument("algebra kind/N mismatch");
  OpElement total(kind_, N_);
  for (const auto& [m, s] : o.terms_) {
    OpElement acc = scaled(s);
    auto run = [&acc](Gen pos, Gen neg, long long n) {
      for (long long i = 0; i < n; ++i) acc = acc.append(pos);
      for (long long i = 0; i < -n; ++i) acc = acc.append(neg);
    };
    run(Gen::X, Gen::Xinv, m.x);
    run(Gen::W, Gen::Winv, m.w);
    run(Gen::Y, Gen::Yinv, m.y);
    run(Gen::Z, Gen::Zinv, m.z);
    run(Gen::F, Gen::Finv, m.f);
    run(Gen::G, Gen::Ginv, m.g);
    run(Gen::E, Gen::Einv, m.e);
    total += acc;
  }
  return total;
}

OpElement& OpElement::operator*=(const OpElement& o) {
  *this = *this * o;
  return *this;
}

namespace {

// The adjoint of a single generator, as an element.
OpElement gen_adjoint(AlgebraKind kind, int N, Gen gen) {
  const Flavor fl = flavor_of(kind);
  auto g = [&](Gen x) { return OpElement::generator(kind, N, x); };
  switch (gen) {
    case Gen::F: return g(Gen::Finv);
    case Gen::Finv: return g(Gen::F);
    case Gen::G: return g(Gen::Ginv);
    case Gen::Ginv: return g(Gen::G);
    case Gen::E: return g(Gen::Einv);
    case Gen::Einv: return g(Gen::E);
    case Gen::Y: return g(Gen::Yinv);
    case Gen::Yinv: return g(Gen::Y);
    case Gen::Z: return g(Gen::Zinv);
    case Gen::Zinv: return g(Gen::Z);
    case Gen::W:
      if (fl == Flavor::Affine)
        return g(Gen::W).scaled(Scalar::from_int(fl, N, -1));  // W* = -W
      return g(Gen::Winv);
    case Gen::Winv:
      return g(Gen::W);
    case Gen::X:
      if (kind == AlgebraKind::AffineSharp)
        return g(Gen::X) - g(Gen::W).scaled(Scalar::from_int(fl, N, 2));
      if (kind == AlgebraKind::TorusExt)
        return g(Gen::X) * g(Gen::Winv) * g(Gen::Winv);
      throw std::domain_error("X has no adjoint in this algebra");
    case Gen::Xinv:
      if (kind == AlgebraKind::TorusExt)
        return g(Gen::Xinv) * g(Gen::W) * g(Gen::W);
      throw std::domain_error("X^-1 has no adjoint in this algebra");
  }
  throw std::logic_error("unhandled generator adjoint");
}

}  // namespace

OpElement OpElement::adjoint() const {
  OpElement total(kind_, N_);
  for (const auto& [m, s] : terms_) {
    OpElement acc = scalar_element(kind_, N_, s.conj());
    auto run = [&](Gen pos, Gen neg, long long n) {
      if (n == 0) return;
      OpElement a = gen_adjoint(kind_, N_, n >= 0 ? pos : neg);
      for (long long i = 0; i < (n >= 0 ? n : -n); ++i) acc = acc * a;
    };
    // Reverse of the normal order X W Y Z F G E.
    run(Gen::E, Gen::Einv, m.e);
    run(Gen::G, Gen::Ginv, m.g);
    run(Gen::F, Gen::Finv, m.f);
    run(Gen::Z, Gen::Zinv, m.z);
    run(Gen::Y, Gen::Yinv, m.y);
    run(Gen::W, Gen::Winv, m.w);
    run(Gen::X, Gen::Xinv, m.x);
    total += acc;
  }
  return total;
}

std::string OpElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, s] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> parts;
    if (m.is_unit()) {
      parts.push_back(s.to_string());
    } else if (!s.is_one()) {
      std::string cs = s.to_string();
      if (s.terms().size() > 1) cs = "(" + cs + ")";
      parts.push_back(cs);
    }
    auto gen = [&parts](const char* name, long long n) {
      if (n == 0) return;
      std::string p = name;
      if (n != 1) p += "^" + std::to_string(n);
      parts.push_back(p);
    };
    gen("X", m.x);
    gen("W", m.w);
    gen("Y", m.y);
    gen("Z", m.z);
    gen("F", m.f);
    gen("G", m.g);
    gen("E", m.e);
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) os << "*";
      os << parts[i];
    }
  }
  return os.str();
}

namespace {

struct RelationSpec {
  std::string name;
  OpElement lhs;
  OpElement rhs;
};

}  // namespace

std::vector<RelationCheck> check_relations(AlgebraKind kind, int N) {
  const Flavor fl = flavor_of(kind);
  auto g = [&](Gen x) { return OpElement::generator(kind, N, x); };
  auto sc = [&](const Scalar& s) { return OpElement::scalar_element(kind, N, s); };
  auto pw = [&](Gen x, int n) {
    OpElement r = OpElement::one(kind, N);
    for (int i = 0; i < n; ++i) r = r * OpElement::generator(kind, N, x);
    return r;
  };
  const OpElement one = OpElement::one(kind, N);
  const Scalar eps = Scalar::eps_pow(fl, N, 1);
  const Scalar eps_inv = Scalar::eps_pow(fl, N, -1);

  std::vector<RelationSpec> specs;
  auto add = [&specs](std::string name, OpElement lhs, OpElement rhs) {
    specs.push_back({std::move(name), std::move(lhs), std::move(rhs)});
  };

  // Heisenberg core, common to all kinds.
  add("GF = EFG", g(Gen::G) * g(Gen::F), g(Gen::E) * g(Gen::F) * g(Gen::G));
  add("EF = FE", g(Gen::E) * g(Gen::F), g(Gen::F) * g(Gen::E));
  add("EG = GE", g(Gen::E) * g(Gen::G), g(Gen::G) * g(Gen::E));
  add("E^N = 1", pw(Gen::E, N), one);
  add("F F^-1 = 1", g(Gen::F) * g(Gen::Finv), one);
  add("G G^-1 = 1", g(Gen::G) * g(Gen::Ginv), one);
  add("E E^-1 = 1", g(Gen::E) * g(Gen::Einv), one);

  if (fl == Flavor::Affine) {
    const OpElement a = sc(Scalar::const_pow(fl, N, 1, 0));
    const OpElement b = sc(Scalar::const_pow(fl, N, 0, 1));
    add("FX = XF + aF", g(Gen::F) * g(Gen::X),
        g(Gen::X) * g(Gen::F) + a * g(Gen::F));
    add("GX = XG + bG", g(Gen::G) * g(Gen::X),
        g(Gen::X) * g(Gen::G) + b * g(Gen::G));
    add("FY = eps YF", g(Gen::F) * g(Gen::Y), sc(eps) * g(Gen::Y) * g(Gen::F));
    add("GY = YG", g(Gen::G) * g(Gen::Y), g(Gen::Y) * g(Gen::G));
    add("FZ = ZF", g(Gen::F) * g(Gen::Z), g(Gen::Z) * g(Gen::F));
    add("GZ = YZG", g(Gen::G) * g(Gen::Z),
        g(Gen::Y) * g(Gen::Z) * g(Gen::G));
    add("EX = XE", g(Gen::E) * g(Gen::X), g(Gen::X) * g(Gen::E));
    add("EY = YE", g(Gen::E) * g(Gen::Y), g(Gen::Y) * g(Gen::E));
    add("ZE = eps EZ", g(Gen::Z) * g(Gen::E),
        sc(eps) * g(Gen::E) * g(Gen::Z));
    add("XY = YX", g(Gen::X) * g(Gen::Y), g(Gen::Y) * g(Gen::X));
    add("XZ = ZX", g(Gen::X) * g(Gen::Z), g(Gen::Z) * g(Gen::X));
    add("YZ = ZY", g(Gen::Y) * g(Gen::Z), g(Gen::Z) * g(Gen::Y));
    add("Y^N = 1", pw(Gen::Y, N), one);
    add("Z^N = 1", pw(Gen::Z, N), one);
    add("Y Y^-1 = 1", g(Gen::Y) * g(Gen::Yinv), one);
    add("Z Z^-1 = 1", g(Gen::Z) * g(Gen::Zinv), one);
    if (kind == AlgebraKind::AffineSharp) {
      add("FW = WF + aF", g(Gen::F) * g(Gen::W),
          g(Gen::W) * g(Gen::F) + a * g(Gen::F));
      add("GW = WG", g(Gen::G) * g(Gen::W), g(Gen::W) * g(Gen::G));
      add("EW = WE", g(Gen::E) * g(Gen::W), g(Gen::W) * g(Gen::E));
      add("XW = WX", g(Gen::X) * g(Gen::W), g(Gen::W) * g(Gen::X));
      add("YW = WY", g(Gen::Y) * g(Gen::W), g(Gen::W) * g(Gen::Y));
      add("ZW = WZ", g(Gen::Z) * g(Gen::W), g(Gen::W) * g(Gen::Z));
    }
  } else if (kind == AlgebraKind::TorusExt) {
    const OpElement alpha = sc(Scalar::const_pow(fl, N, 1, 0));
    const OpElement beta = sc(Scalar::const_pow(fl, N, 0, 1));
    add("FX = alpha XF", g(Gen::F) * g(Gen::X),
        alpha * g(Gen::X) * g(Gen::F));
    add("GX = beta X W^N G", g(Gen::G) * g(Gen::X),
        beta * g(Gen::X) * pw(Gen::W, N) * g(Gen::G));
    add("FW = delta WF", g(Gen::F) * g(Gen::W),
        sc(Scalar::delta_pow(N, 1)) * g(Gen::W) * g(Gen::F));
    add("GW = W^{1+N} G", g(Gen::G) * g(Gen::W),
        pw(Gen::W, N + 1) * g(Gen::G));
    add("EX = eps^-1 XE", g(Gen::E) * g(Gen::X),
        sc(eps_inv) * g(Gen::X) * g(Gen::E));
    add("EW = eps^-1 WE", g(Gen::E) * g(Gen::W),
        sc(eps_inv) * g(Gen::W) * g(Gen::E));
    add("XW = WX", g(Gen::X) * g(Gen::W), g(Gen::W) * g(Gen::X));
    add("W^{N^2} = 1", pw(Gen::W, N * N), one);
    add("X X^-1 = 1", g(Gen::X) * g(Gen::Xinv), one);
    add("W W^-1 = 1", g(Gen::W) * g(Gen::Winv), one);
  } else {  // TorusBase
    const OpElement alpha = sc(Scalar::const_pow(fl, N, 1, 0));
    const OpElement beta = sc(Scalar::const_pow(fl, N, 0, 1));
    add("FX = alpha XF", g(Gen::F) * g(Gen::X),
        alpha * g(Gen::X) * g(Gen::F));
    add("GX = beta XYG", g(Gen::G) * g(Gen::X),
        beta * g(Gen::X) * g(Gen::Y) * g(Gen::G));
    add("FY = eps YF", g(Gen::F) * g(Gen::Y), sc(eps) * g(Gen::Y) * g(Gen::F));
    add("GY = YG", g(Gen::G) * g(Gen::Y), g(Gen::Y) * g(Gen::G));
    add("EX = eps^-1 XE", g(Gen::E) * g(Gen::X),
        sc(eps_inv) * g(Gen::X) * g(Gen::E));
    add("EY = YE", g(Gen::E) * g(Gen::Y), g(Gen::Y) * g(Gen::E));
    add("XY = YX", g(Gen::X) * g(Gen::Y), g(Gen::Y) * g(Gen::X));
    add("Y^N = 1", pw(Gen::Y, N), one);
    add("X X^-1 = 1", g(Gen::X) * g(Gen::Xinv), one);
    add("Y Y^-1 = 1", g(Gen::Y) * g(Gen::Yinv), one);
  }

  std::vector<RelationCheck> out;
  out.reserve(specs.size());
  for (const auto& spec : specs) {
    out.push_back({spec.name, spec.lhs == spec.rhs});
  }
  return out;
}

}  // namespace nczar
