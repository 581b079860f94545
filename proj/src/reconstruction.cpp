#include "nczar/reconstruction.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace nczar {

namespace {

constexpr double kTol = 1e-9;

int mod_i(long long a, long long m) {
  long long r = a % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

bool close(Complex a, Complex b) {
  return std::abs(a - b) <= kTol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

std::string cdesc(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

// Accumulates a named check over many samples, keeping one witness.
struct Tally {
  std::string name;
  bool passed = true;
  std::string witness;

  void note(bool ok, const std::string& w) {
    if (!ok && passed) {
      passed = false;
      witness = w;
    }
  }
  CheckResult done() const { return {name, passed, witness}; }
};

}  // namespace

AffinePoint xi_point(const AffineKey& key, const ModelParams& p) {
  return {affine_mu(key, p), mod_i(key.zeta, p.N)};
}

TorusPoint xi_point(const TorusExtKey& key, const ModelParams& p) {
  return {torus_ext_mu(key, p)};
}

Complex base_point(const AffineKey& key, const ModelParams& p) {
  return affine_mu(key, p);
}

Complex base_point(const TorusExtKey& key, const ModelParams& p) {
  Complex mu = torus_ext_mu(key, p);
  Complex acc{1.0, 0.0};
  for (int i = 0; i < p.N; ++i) acc *= mu;
  return acc;
}

bool geometric(const AffineKey& key, const ModelParams& p) {
  return band_index(affine_mu(key, p), p) == mod_i(key.xi, p.N);
}

bool geometric(const TorusExtKey& key, const ModelParams& p) {
  return key.r0 > 0.0 &&
         hat_sgn_index(torus_ext_mu(key, p), p.N) == mod_i(key.k, p.N * p.N);
}

Report duality_affine(int N, unsigned seed, int samples) {
  Report rep;
  rep.case_name = "affine";
  rep.N = N;
  ModelParams p = ModelParams::affine(N);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-3.0, 3.0);
  std::uniform_int_distribution<long long> ug(-3, 3);
  std::uniform_int_distribution<long long> uk(-3LL * N, 3LL * N);
  std::uniform_int_distribution<int> uz(0, N - 1);

  Tally t_geo{"state-band-consistency"};
  Tally t_round{"xi-round-trip"};
  Tally t_f{"F-anti-equivariance"};
  Tally t_g{"G-anti-equivariance"};
  Tally t_e{"E-deck-twist"};
  Tally t_fiber{"fiber-size-N"};
  Tally t_base{"X-eigenvalue-projects"};

  for (int i = 0; i < samples; ++i) {
    AffineKey key{ux(rng), ug(rng), uk(rng), 0, uz(rng)};
    key.xi = mod_i(key.k, N);

    Complex mu = affine_mu(key, p);
    AffinePoint pt = xi_point(key, p);
    std::string w = "mu=" + cdesc(mu);

    t_geo.note(geometric(key, p), w);
    // Xi^{-1}: a point <x, l> determines the state (x, bd(x), l).
    t_round.note(band_index(pt.x, p) == key.xi && pt.ell == mod_i(key.zeta, N),
                 w);

    auto [kf, af] = act_gen(AlgebraKind::AffineSharp, p, Gen::F, key);
    AffinePoint pf = xi_point(kf, p);
    AffinePoint pf_geo = phi_affine_inv(pt, p);
    t_f.note(close(pf.x, pf_geo.x) && pf.ell == pf_geo.ell && af == 1.0, w);

    auto [kg, ag] = act_gen(AlgebraKind::AffineSharp, p, Gen::G, key);
    AffinePoint pg = xi_point(kg, p);
    AffinePoint pg_geo = gamma_affine_inv(pt, p);
    t_g.note(close(pg.x, pg_geo.x) && pg.ell == pg_geo.ell && ag == 1.0, w);

    auto [ke, ae] = act_gen(AlgebraKind::AffineSharp, p, Gen::E, key);
    AffinePoint pe = xi_point(ke, p);
    t_e.note(close(pe.x, pt.x) && pe.ell == mod_i(pt.ell + 1, N) && ae == 1.0,
             w);

    // Fiber of the projection over mu: the N states (mu, xi, j).
    std::set<int> ells;
    for (int j = 0; j < N; ++j) {
      AffineKey kj = key;
      kj.zeta = j;
      AffinePoint pj = xi_point(kj, p);
      t_fiber.note(close(project_affine(pj), mu), w);
      ells.insert(pj.ell);
    }
    t_fiber.note(static_cast<int>(ells.size()) == N, w);

    auto [kx, ax] = act_gen(AlgebraKind::AffineSharp, p, Gen::X, key);
    t_base.note(kx == key && close(ax, base_point(key, p)), w);
  }

  rep.checks = {t_geo.done(), t_round.done(), t_f.done(),
                t_g.done(),   t_e.done(),     t_fiber.done(),
                t_base.done()};
  return rep;
}

Report duality_torus(int N, unsigned seed, int samples) {
  Report rep;
  rep.case_name = "torus";
  rep.N = N;
  ModelParams p = ModelParams::torus(N);
  const long long NN = static_cast<long long>(N) * N;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ur(-1.0, 1.0);
  std::uniform_int_distribution<long long> uj(-3, 3);
  std::uniform_int_distribution<int> uk(0, static_cast<int>(NN) - 1);

  Tally t_geo{"state-sector-consistency"};
  Tally t_round{"xi-round-trip"};
  Tally t_f{"F-anti-equivariance"};
  Tally t_g{"G-anti-equivariance"};
  Tally t_e{"E-deck-twist"};
  Tally t_fiber{"fiber-size-N"};
  Tally t_cover{"projection-covering"};

  const Complex eps = p.eps();
  for (int i = 0; i < samples; ++i) {
    TorusExtKey key{std::exp(ur(rng)), uj(rng), uj(rng), uk(rng)};
    Complex mu = torus_ext_mu(key, p);
    TorusPoint pt = xi_point(key, p);
    std::string w = "t=" + cdesc(mu);

    t_geo.note(geometric(key, p), w);
    t_round.note(hat_sgn_index(pt.t, N) == key.k, w);

    auto [kf, af] = act_gen(AlgebraKind::TorusExt, p, Gen::F, key);
    t_f.note(close(torus_ext_mu(kf, p), phi_torus_inv(pt, p).t) && af == 1.0,
             w);

    auto [kg, ag] = act_gen(AlgebraKind::TorusExt, p, Gen::G, key);
    t_g.note(close(torus_ext_mu(kg, p), gamma_torus_inv(pt, p).t) && ag == 1.0,
             w);

    auto [ke, ae] = act_gen(AlgebraKind::TorusExt, p, Gen::E, key);
    t_e.note(close(torus_ext_mu(ke, p), eps * pt.t) && ae == 1.0, w);

    // Fiber of p(t) = t^N over the base point u.
    Complex u = base_point(key, p);
    for (int j = 0; j < N; ++j) {
      TorusPoint tj{std::polar(1.0, 2.0 * std::numbers::pi * j / N) * pt.t};
      t_fiber.note(close(project_torus(tj, p), u), w);
      for (int j2 = 0; j2 < j; ++j2) {
        TorusPoint t2{std::polar(1.0, 2.0 * std::numbers::pi * j2 / N) * pt.t};
        t_fiber.note(std::abs(tj.t - t2.t) > kTol, w);
      }
    }

    // The covering equation downstairs: p(phi^{-1} t) = a^{-1} p(t).
    t_cover.note(
        close(project_torus(phi_torus_inv(pt, p), p), u / p.a_value()), w);
    t_cover.note(
        close(project_torus(gamma_torus_inv(pt, p), p), u / p.b_value()), w);
  }

  rep.checks = {t_geo.done(), t_round.done(), t_f.done(),    t_g.done(),
                t_e.done(),   t_fiber.done(), t_cover.done()};
  return rep;
}

Report star_function_affine(int N, unsigned seed, int samples) {
  Report rep;
  rep.case_name = "affine";
  rep.N = N;
  ModelParams p = ModelParams::affine(N);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> um(-5, 5);
  std::uniform_real_distribution<double> us(-2.0, 2.0);

  Tally t_phi{"phi-equations"};
  Tally t_gamma{"gamma-equations"};
  Tally t_c{"deck-twist-equations"};
  Tally t_band{"band-interpolation"};

  const Complex eps = p.eps();
  for (int i = 0; i < samples; ++i) {
    OrbitCoord c{um(rng), um(rng), um(rng), Complex{us(rng), us(rng)}};
    AffineSemiDef f = semidef_affine(c, p);
    std::string w = "p=" + cdesc(f.p);

    AffineSemiDef fp = semidef_affine(phi_shift(c, Flavor::Affine), p);
    t_phi.note(close(fp.p, f.p + p.a_value()) && close(fp.y, eps * f.y) &&
                   close(fp.z, f.z) && close(fp.w, f.w + p.a_value()),
               w);

    AffineSemiDef fg = semidef_affine(gamma_shift(c, Flavor::Affine), p);
    t_gamma.note(close(fg.p, f.p + p.b_value()) && close(fg.y, f.y) &&
                     close(fg.z, f.y * f.z) && close(fg.w, f.w),
                 w);

    AffineSemiDef fc = semidef_affine(commutator_shift(c), p);
    t_c.note(close(fc.p, f.p) && close(fc.y, f.y) && close(fc.z, eps * f.z) &&
                 close(fc.w, f.w),
             w);

    // exp(w) = y, and y interpolates the band of the base point.
    t_band.note(close(std::exp(f.w), f.y), w);
    long long dband = band_raw(f.p, p) - band_raw(c.s, p);
    t_band.note(close(std::polar(1.0, 2.0 * std::numbers::pi * dband / N), f.y),
                w);
  }

  rep.checks = {t_phi.done(), t_gamma.done(), t_c.done(), t_band.done()};
  return rep;
}

Report star_function_torus(int N, unsigned seed, int samples) {
  Report rep;
  rep.case_name = "torus";
  rep.N = N;
  ModelParams p = ModelParams::torus(N);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> um(-5, 5);
  std::uniform_real_distribution<double> us(-1.0, 1.0);
  std::uniform_real_distribution<double> uarg(0.0, 2.0 * std::numbers::pi);

  Tally t_phi{"phi-equations"};
  Tally t_gamma{"gamma-equations"};
  Tally t_c{"deck-twist-equations"};
  Tally t_alg{"interpolation-identities"};

  const Complex eps = p.eps();
  for (int i = 0; i < samples; ++i) {
    Complex s_root = std::polar(std::exp(us(rng)), uarg(rng) / N);
    Complex s{1.0, 0.0};
    for (int j = 0; j < N; ++j) s *= s_root;
    OrbitCoord c{um(rng), um(rng), um(rng), s};
    TorusSemiDef f = semidef_torus(c, s_root, p);
    std::string w = "p=" + cdesc(f.p);

    TorusSemiDef fp = semidef_torus(phi_shift(c, Flavor::Torus), s_root, p);
    t_phi.note(close(fp.p, p.a_value() * f.p) && close(fp.x, p.alpha() * f.x) &&
                   close(fp.y, eps * f.y) && close(fp.w, p.delta() * f.w),
               w);

    TorusSemiDef fg = semidef_torus(gamma_shift(c, Flavor::Torus), s_root, p);
    Complex wN = f.w;
    for (int j = 1; j < N; ++j) wN *= f.w;  // w^N
    t_gamma.note(close(fg.p, p.b_value() * f.p) &&
                     close(fg.x, p.beta() * f.y * f.x) && close(fg.y, f.y) &&
                     close(fg.w, wN * f.w),
                 w);

    TorusSemiDef fc = semidef_torus(commutator_shift(c), s_root, p);
    t_c.note(close(fc.p, f.p) && close(fc.x, f.x / eps) &&
                 close(fc.y, f.y) && close(fc.w, f.w / eps),
             w);

    Complex xN{1.0, 0.0};
    for (int j = 0; j < N; ++j) xN *= f.x;
    t_alg.note(close(xN, f.p) && close(wN, f.y) &&
                   close(f.x * f.x_prime, Complex{1.0, 0.0}),
               w);
  }

  rep.checks = {t_phi.done(), t_gamma.done(), t_c.done(), t_alg.done()};
  return rep;
}

}  // namespace nczar
